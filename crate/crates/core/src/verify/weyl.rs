use num_bigint::BigInt;

use super::Report;
use crate::numbers::{gen_stirling_row_dobinski, gen_stirling_row_recur, stirling2_row, stirling_p_row};
use crate::ring::{Polynomial, Symbol};
use crate::weyl::{
    enumerate_contractions, nf_multiply, normal_order, normal_order_p, wick_sum, NormalForm, WeylWord,
};

fn diagonal(coeffs: &[Polynomial]) -> NormalForm {
    let mut nf = NormalForm::zero();
    for (k, c) in coeffs.iter().enumerate() {
        nf.add_term(k as u32, k as u32, c.clone());
    }
    nf
}

fn lift(row: Vec<BigInt>) -> Vec<Polynomial> {
    row.into_iter().map(Polynomial::from).collect()
}

/// Rewriting against the contraction sum on every word up to `max_len`, and
/// the number-operator powers against the Stirling triangles for `n <= max_n`.
pub fn verify_weyl(max_len: usize, max_n: u32) -> Report {
    let mut report = Report::new("weyl");
    report.param("max_len", max_len);
    report.param("max_n", max_n);

    for len in 0..=max_len {
        let mut total = 0usize;
        let mut bad = Vec::new();
        for w in WeylWord::all_of_length(len) {
            total += 1;
            if normal_order(&w) != wick_sum(&w) {
                bad.push(w.to_string());
            }
        }
        let actual = if bad.is_empty() {
            format!("all {total} words agree")
        } else {
            format!("{} of {total} differ, first `{}`", bad.len(), bad[0])
        };
        report.record(
            format!("wick/length={len}"),
            format!("all {total} words agree"),
            actual,
            bad.is_empty(),
        );
    }

    let p = Symbol::new("p");
    let pp = Polynomial::symbol(p.clone());
    for n in 1..=max_n {
        let w = WeylWord::number_power(n as usize);
        let want = diagonal(&lift(stirling2_row(n)));
        report.check(format!("number-power/rewrite/n={n}"), &want, &normal_order(&w));
        report.check(format!("number-power/wick/n={n}"), &want, &wick_sum(&w));

        let want = diagonal(&stirling_p_row(n, &pp));
        report.check(format!("p-deformed/n={n}"), &want, &normal_order_p(&w, &p));

        // contractions with n - k edges are counted by S(n, k)
        let mut by_edges = vec![BigInt::from(0); n as usize + 1];
        for c in enumerate_contractions(&w) {
            by_edges[c.edges().len()] += 1;
        }
        let mut want: Vec<BigInt> = stirling2_row(n);
        want.reverse();
        report.check_list(format!("contractions-by-edges/n={n}"), &want, &by_edges);
    }

    // operator reading: x = multiplication, d = differentiation
    let scherk: WeylWord = "(xd)^4".parse().expect("valid word");
    report.check("operator-reading/(xd)^4", &normal_order(&WeylWord::number_power(4)), &normal_order(&scherk));

    let word_len = max_len.min(8);
    for w in WeylWord::all_of_length(word_len).step_by(7) {
        let at_one = normal_order_p(&w, &p).substitute(&p, &Polynomial::one());
        report.check(format!("p-deformed-at-1/{w}"), &wick_sum(&w), &at_one);
    }

    // ((b†)^r b^s)^n = (b†)^(n(r-s)) sum_k S_{r,s}(n,k) (b†)^k b^k
    for r in 1..=3u32 {
        for s in 1..=r {
            for n in 1..=3u32 {
                if n * (r + s) > 12 {
                    continue;
                }
                let row = if s == 1 || s == r {
                    gen_stirling_row_recur(n, r, s)
                } else {
                    gen_stirling_row_dobinski(n, r, s)
                };
                let id = format!("generalized/r={r}/s={s}/n={n}");
                let got = normal_order(&WeylWord::generalized_power(r as usize, s as usize, n as usize));
                match row {
                    Ok(row) => {
                        let mut want = NormalForm::zero();
                        for (k, c) in row.into_iter().enumerate() {
                            let k = k as u32;
                            want.add_term(n * (r - s) + k, k, Polynomial::from(c));
                        }
                        report.check(id, &want, &got);
                    }
                    Err(e) => report.record(id, format!("error: {e}"), got.to_string(), false),
                }
            }
        }
    }

    let pairs = [("ac", "ca"), ("(ca)^2", "ac"), ("aacc", "cca"), ("caac", "acca"), ("aaa", "ccc")];
    for (a, b) in pairs {
        let (wa, wb): (WeylWord, WeylWord) = (a.parse().expect("valid word"), b.parse().expect("valid word"));
        let product = nf_multiply(&normal_order(&wa), &normal_order(&wb));
        report.check(format!("product/{a}*{b}"), &normal_order(&wa.concat(&wb)), &product);
    }

    report
}
