use num_bigint::BigInt;

use super::report::list;
use super::Report;
use crate::grammar::{chain_rr, derive_chain, Grammar};
use crate::numbers::{gen_stirling_row_recur, rook_numbers, FerrersBoard};
use crate::ring::{Polynomial, Symbol};

/// Coefficients of `D(x) / x` in `y`, constant term first.
fn y_coefficients(d: &Polynomial) -> Vec<BigInt> {
    let x = Symbol::new("x");
    let y = Symbol::new("y");
    let body = d.coefficients_in(&x).get(1).cloned().unwrap_or_default();
    body.coefficients_in(&y)
        .iter()
        .map(|c| c.integer_value().expect("integral coefficients"))
        .collect()
}

fn pad(mut v: Vec<BigInt>, len: usize) -> Vec<BigInt> {
    v.resize(len.max(v.len()), BigInt::from(0));
    v
}

/// `a_n(y) = (D_2 D_1)^n(x) / x` against the rook numbers of
/// `F(1,1,3,3,...,2n-1,2n-1)` for `n <= max_a`, reading `r_k` off `y^(2n-k)`.
/// `b_n(y) = D_1 (D_2 D_1)^(n-1)(x) / x` against `S_{2,2}(n, k)` at `y^(k-1)`
/// for `n <= max_b`; its board comparisons are notes.
pub fn verify_rook(max_a: u32, max_b: u32) -> Report {
    let mut report = Report::new("rook");
    report.param("max_a", max_a);
    report.param("max_b", max_b);
    let x = Polynomial::var("x");

    for n in 1..=max_a {
        let chain: Vec<Grammar> = (0..n).flat_map(|_| [Grammar::indexed(2), Grammar::indexed(1)]).collect();
        let id = format!("a_n/n={n}");
        match derive_chain(&chain, &x) {
            Ok(d) => {
                let mut coeffs = pad(y_coefficients(&d), 2 * n as usize + 1);
                coeffs.reverse();
                let board = FerrersBoard::doubled_odd(n, false);
                let rooks = pad(rook_numbers(&board), coeffs.len());
                report.record(format!("{id}/{board}"), list(&rooks), list(&coeffs), rooks == coeffs);
            }
            Err(e) => report.record(id, String::new(), format!("error: {e}"), false),
        }
    }

    for n in 1..=max_b {
        let id = format!("b_n/n={n}");
        let d = match derive_chain(&chain_rr(2, n as usize), &x) {
            Ok(d) => d,
            Err(e) => {
                report.record(id, String::new(), format!("error: {e}"), false);
                continue;
            }
        };
        let coeffs = y_coefficients(&d);
        match gen_stirling_row_recur(n, 2, 2) {
            Ok(row) => {
                // S_{2,2}(n, k) sits at y^(k-1)
                let want = pad(row[1..].to_vec(), coeffs.len());
                let got = pad(coeffs.clone(), want.len());
                report.record(id, list(&want), list(&got), want == got);
            }
            Err(e) => report.record(id, format!("error: {e}"), list(&coeffs), false),
        }

        let board = FerrersBoard::doubled_odd(n, true);
        let rooks = rook_numbers(&board);
        let mut reversed = pad(coeffs.clone(), rooks.len());
        reversed.reverse();
        let agree = rooks == reversed;
        report.note(format!("b_n-board/n={n}/{board}"), list(&rooks), list(&reversed), agree);

        // the board one size down, read off y^(2n-1-k)
        let board = FerrersBoard::doubled_odd(n - 1, true);
        let rooks = pad(rook_numbers(&board), 2 * n as usize);
        let mut reversed = pad(coeffs, 2 * n as usize);
        reversed.reverse();
        let agree = rooks == reversed;
        report.note(format!("b_n-smaller-board/n={n}/{board}"), list(&rooks), list(&reversed), agree);
    }

    report
}
