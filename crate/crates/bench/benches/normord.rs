use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use normord::grammar::{chain_rr, derive_chain};
use normord::numbers::{gen_stirling_row_dobinski, rook_numbers, whitney_row, FerrersBoard};
use normord::verify::{run_suite, Budget, Suite};
use normord::weyl::{enumerate_contractions, normal_order, normal_order_p, wick_sum};
use normord::{Grammar, Polynomial, Symbol, WeylWord};

fn grammar(c: &mut Criterion) {
    let p = Polynomial::var("p");
    let g = Grammar::shifted_stirling(&p);
    let x = Polynomial::var("x");
    let mut group = c.benchmark_group("grammar");
    for n in [4usize, 8, 12] {
        group.bench_with_input(BenchmarkId::new("p-grammar D^n(x)", n), &n, |b, &n| b.iter(|| g.derive_n(&x, n)));
    }
    group.bench_function("chain D1 (D4 D3 D2 D1)^3", |b| {
        let chain = chain_rr(4, 4);
        b.iter(|| derive_chain(black_box(&chain), &x).unwrap())
    });
    group.finish();
}

fn weyl(c: &mut Criterion) {
    let mut group = c.benchmark_group("weyl");
    for n in [4usize, 6, 8] {
        let w = WeylWord::number_power(n);
        group.bench_with_input(BenchmarkId::new("normal_order (ca)^n", n), &w, |b, w| b.iter(|| normal_order(w)));
        group.bench_with_input(BenchmarkId::new("wick_sum (ca)^n", n), &w, |b, w| b.iter(|| wick_sum(w)));
    }
    let p = Symbol::new("p");
    let w = WeylWord::number_power(7);
    group.bench_function("normal_order_p (ca)^7", |b| b.iter(|| normal_order_p(&w, &p)));
    group.bench_function("enumerate_contractions (ca)^7", |b| b.iter(|| enumerate_contractions(&w)));
    group.finish();
}

fn numbers(c: &mut Criterion) {
    let mut group = c.benchmark_group("numbers");
    let (m, r) = (Polynomial::var("m"), Polynomial::var("r"));
    group.bench_function("whitney row 10, symbolic", |b| b.iter(|| whitney_row(10, &m, &r)));
    group.bench_function("dobinski S_{3,2}(6, .)", |b| b.iter(|| gen_stirling_row_dobinski(6, 3, 2).unwrap()));
    let board = FerrersBoard::doubled_odd(5, true);
    group.bench_function("rook numbers F(1,1,...,9,9,10)", |b| b.iter(|| rook_numbers(&board)));
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    let budget = Budget::for_max_n(6);
    for suite in Suite::ALL {
        group.bench_function(suite.name(), |b| b.iter(|| run_suite(suite, &budget).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, grammar, weyl, numbers, suites);
criterion_main!(benches);
