use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::report::list;
use super::Report;
use crate::grammar::{chain_q, chain_rr, chain_s1, derive_chain, enumerate_generations, Grammar, Semantics};
use crate::numbers::{
    dowling_poly, eulerian_row, gen_stirling_row_recur, q_stirling_row, sf_row, special_poly, stirling2_row,
    stirling_p_row, SfVariant, SpecialFamily,
};
use crate::ring::{integer, Monomial, Polynomial, Symbol};

/// Second-order Eulerian numbers, rows `n = 1..=6`.
const SECOND_ORDER_EULERIAN: [&[u64]; 6] = [
    &[1],
    &[1, 2],
    &[1, 8, 6],
    &[1, 22, 58, 24],
    &[1, 52, 328, 444, 120],
    &[1, 114, 1452, 4400, 3708, 720],
];

fn x() -> Polynomial {
    Polynomial::var("x")
}

fn y() -> Polynomial {
    Polynomial::var("y")
}

/// `x * sum_k c_k y^(k + shift)`, skipping the first `skip` entries.
fn x_series(coeffs: &[Polynomial], skip: usize, shift: u32) -> Polynomial {
    let y = y();
    let body: Polynomial = coeffs
        .iter()
        .enumerate()
        .skip(skip)
        .map(|(k, c)| c * &y.pow(k as u32 - skip as u32 + shift))
        .sum();
    &x() * &body
}

fn ints(row: Vec<BigInt>) -> Vec<Polynomial> {
    row.into_iter().map(Polynomial::from).collect()
}

/// Iterated derivatives of the grammar families against their number
/// triangles, for `n <= max_n`. Parameters stay symbolic throughout.
pub fn verify_grammar_theorems(max_n: u32) -> Report {
    let mut report = Report::new("grammar");
    report.param("max_n", max_n);
    report.param("r", "1..=4");
    let n_max = max_n as usize;

    // Stirling grammar: D^n(x) = x sum_k S(n,k) y^k.
    let g = Grammar::stirling();
    for (n, d) in g.derivatives(&x(), n_max).iter().enumerate() {
        let want = x_series(&ints(stirling2_row(n as u32)), 0, 0);
        report.check(format!("stirling/D^{n}(x)"), &want, d);
    }

    // D^(n-1)(x) = x sum_k S_p(n,k) y^(k-1) under {x -> p x + x y, y -> y}.
    let p = Polynomial::var("p");
    let g = Grammar::shifted_stirling(&p);
    for (i, d) in g.derivatives(&x(), n_max.saturating_sub(1)).iter().enumerate() {
        let n = i as u32 + 1;
        let want = x_series(&stirling_p_row(n, &p), 1, 0);
        report.check(format!("p-stirling/D^{i}(x)"), &want, d);
    }

    for r in 1..=4i64 {
        for n in 1..=n_max {
            let want = gen_stirling_row_recur(n as u32, r as u32, 1).map(|row| x_series(&ints(row), 1, 1));
            let got = derive_chain(&chain_s1(r, n), &x());
            report.check_result(format!("generalized-s1/r={r}/n={n}"), want, got);

            let want = gen_stirling_row_recur(n as u32, r as u32, r as u32)
                .map(|row| x_series(&ints(row), r as usize, 1));
            let got = derive_chain(&chain_rr(r, n), &x());
            report.check_result(format!("generalized-rr/r={r}/n={n}"), want, got);
        }
    }

    let q = Symbol::new("q");
    for n in 2..=max_n {
        let want = x_series(&q_stirling_row(n, &Polynomial::symbol(q.clone())), 1, 0);
        let got = derive_chain(&chain_q(n, &q), &x());
        report.check_result(format!("q-stirling/n={n}"), Ok(want), got);
    }

    let (m, r) = (Polynomial::var("m"), Polynomial::var("r"));
    let g = Grammar::dowling(&m, &r);
    let ysym = Symbol::new("y");
    for (n, d) in g.derivatives(&x(), n_max).iter().enumerate() {
        let want = &x() * &dowling_poly(n as u32, &m, &r, &ysym);
        report.check(format!("dowling/D^{n}(x)"), &want, d);
    }

    let sf_grammars = [
        ("sf", SfVariant::Plain, "x -> (m - 1)*x + x*y; y -> m*y"),
        ("sf-bar", SfVariant::Bar, "x -> (m - 1)*x + m*x*y; y -> m*y"),
        ("sf-tilde", SfVariant::Tilde, "x -> (m - 1)*x + m*x*y; y -> m*(y + y^2)"),
    ];
    for (name, variant, text) in sf_grammars {
        let g: Grammar = text.parse().expect("built-in grammar");
        for (n, d) in g.derivatives(&x(), n_max).iter().enumerate() {
            let want = x_series(&sf_row(n as u32, &m, variant), 0, 0);
            report.check(format!("{name}/D^{n}(x)"), &want, d);
        }
    }

    let specials = [
        ("laguerre-square", SpecialFamily::LaguerreSquare, "x -> x*y + x*y^2; y -> y^2"),
        ("bessel", SpecialFamily::Bessel, "x -> x*y + x*y^2; y -> y^3"),
    ];
    for (name, family, text) in specials {
        let g: Grammar = text.parse().expect("built-in grammar");
        for (n, d) in g.derivatives(&x(), n_max).iter().enumerate() {
            let want = special_poly(family, n as u32, &ysym).map(|t| &(&x() * &y().pow(n as u32)) * &t);
            report.check_result(format!("{name}/D^{n}(x)"), want, Ok(d.clone()));
        }
    }

    // {x -> xy, y -> xy}: D^n(x) = x sum_k E(n,k) x^k y^(n-k)
    let g = Grammar::from_rules(&[("x", "x*y"), ("y", "x*y")]);
    for (n, d) in g.derivatives(&x(), n_max).iter().enumerate().skip(1) {
        let want = eulerian_row(n as u32, 1).map(|row| {
            let terms: Polynomial = row
                .into_iter()
                .enumerate()
                .map(|(k, e)| &Polynomial::from(e) * &(&x().pow(k as u32) * &y().pow((n - k) as u32)))
                .sum();
            &x() * &terms
        });
        report.check_result(format!("eulerian-grammar/D^{n}(x)"), want, Ok(d.clone()));
    }

    // {x -> x^2 y, y -> x^2 y}: D^n(x) has coefficients <<n, j-1>> at x^(2n+1-j) y^j
    let g = Grammar::from_rules(&[("x", "x^2*y"), ("y", "x^2*y")]);
    for (i, d) in g.derivatives(&x(), n_max.min(6)).iter().enumerate().skip(1) {
        let want: Vec<BigInt> = SECOND_ORDER_EULERIAN[i - 1].iter().map(|&v| BigInt::from(v)).collect();
        let ys = Symbol::new("y");
        let got: Vec<BigInt> = d
            .coefficients_in(&ys)
            .iter()
            .skip(1)
            .map(|c| c.terms().map(|(_, v)| v.to_integer()).sum())
            .collect();
        let homogeneous = d.terms().all(|(m, _)| m.degree() == 2 * i as u32 + 1);
        report.record(
            format!("second-order-eulerian/D^{i}(x)"),
            list(&want),
            list(&got),
            homogeneous && want == got,
        );
    }

    // summing weight * monomial over all generation sequences gives D^n(start)
    let mono = |a: u32, b: u32| Monomial::from_exponents([(Symbol::new("x"), a), (Symbol::new("y"), b)]);
    let runs = [
        ("stirling", Grammar::stirling(), mono(1, 0), Semantics::Stirling),
        ("stirling", Grammar::stirling(), mono(1, 1), Semantics::Stirling),
        ("p", Grammar::shifted_stirling(&p), mono(1, 0), Semantics::PGrammar),
    ];
    for (name, g, start, family) in &runs {
        for n in 0..=n_max.min(6) {
            let id = format!("generation-sum/{name}/{start}/n={n}");
            let want = g.derive_n(&Polynomial::term(start.clone(), integer(1)), n);
            let got = enumerate_generations(g, start, n, *family).map(|rs| rs.iter().map(|r| r.value()).sum());
            report.check_result(id, Ok(want), got);
        }
    }

    // words generated from x in n steps and from xy in n - 1 steps agree as multisets
    let g = Grammar::stirling();
    let multiset = |start: &Monomial, n: usize| {
        enumerate_generations(&g, start, n, Semantics::Stirling).map(|rs| {
            let mut counts: BTreeMap<String, usize> = BTreeMap::new();
            for r in rs {
                *counts.entry(r.monomial.to_string()).or_default() += 1;
            }
            counts.into_iter().map(|(m, c)| format!("{c}*{m}")).collect::<Vec<_>>().join(" + ")
        })
    };
    for n in 1..=n_max.min(6) {
        report.check_result(format!("x-versus-xy/n={n}"), multiset(&mono(1, 1), n - 1), multiset(&mono(1, 0), n));
    }

    report
}
