//! Criterion benchmarks for `normord`; see `benches/normord.rs`. Run with
//! `cargo bench -p normord-bench`.
