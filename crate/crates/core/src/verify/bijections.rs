use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::report::list;
use super::Report;
use crate::bijections::{
    contraction_to_seq_p, contraction_to_seq_stirling, enumerate_growth_sequences, seq_to_contraction_p,
    seq_to_contraction_stirling, GrowthKind,
};
use crate::grammar::{enumerate_generations, generate, GenSequence, Grammar, Semantics};
use crate::numbers::{bell, stirling2_row};
use crate::ring::{integer, Monomial, Polynomial, Symbol};
use crate::weyl::{contraction_stats, enumerate_contractions, Contraction, WeylWord};

/// Labels of the fifteen contractions of `(ca)^4` under the `p` family.
pub(crate) const CA4_LABELS: [&str; 15] = [
    "1,1,1,1", "1,1,1,2", "1,1,2,1", "1,1,2,2", "1,1,2,3", "1,2,1,1", "1,2,1,2", "1,2,1,3", "1,2,2,1",
    "1,2,2,2", "1,2,2,3", "1,2,2,4", "1,2,3,1", "1,2,3,2", "1,2,3,3",
];

fn xy(a: u32, b: u32) -> Monomial {
    Monomial::from_exponents([(Symbol::new("x"), a), (Symbol::new("y"), b)])
}

/// Round trips of both bijections, statistic transport and the growth
/// sequence counts. Words `(ca)^(n+1)` are covered for `n <= max_n`; the
/// growth-family counts run to `max(max_n + 3, 9)`.
pub fn verify_bijections(max_n: usize) -> Report {
    let mut report = Report::new("bijections");
    report.param("max_n", max_n);
    let count_n = (max_n + 3).max(9);
    report.param("count_n", count_n);

    let p = Polynomial::var("p");
    let p_grammar = Grammar::shifted_stirling(&p);
    let stirling = Grammar::stirling();

    for len in 1..=max_n + 1 {
        let word = WeylWord::number_power(len);
        let contractions = enumerate_contractions(&word);

        for (kind, name) in [(GrowthKind::P, "stirling"), (GrowthKind::Q, "p")] {
            let seqs = enumerate_growth_sequences(kind, len);
            let to_c = |s: &GenSequence| match kind {
                GrowthKind::P => seq_to_contraction_stirling(s),
                GrowthKind::Q => seq_to_contraction_p(s),
            };
            let to_s = |c: &Contraction| match kind {
                GrowthKind::P => contraction_to_seq_stirling(c),
                GrowthKind::Q => contraction_to_seq_p(c),
            };
            let seq_trip = seqs
                .iter()
                .filter(|s| to_c(s).and_then(|c| to_s(&c)).as_ref() != Ok(*s))
                .count();
            report.check(format!("{name}/seq-round-trip/len={len}"), &0, &seq_trip);
            let con_trip = contractions
                .iter()
                .filter(|c| to_s(c).and_then(|s| to_c(&s)).as_ref() != Ok(*c))
                .count();
            report.check(format!("{name}/contraction-round-trip/len={len}"), &0, &con_trip);
            report.check(format!("{name}/cardinality/len={len}"), &contractions.len(), &seqs.len());
        }

        // p^(adjacent edges) x y^(unconnected blacks other than the first)
        let mut bad = Vec::new();
        for c in &contractions {
            let stats = contraction_stats(c);
            let want = Polynomial::term(
                xy(1, stats.degree0_black_count as u32 - 1),
                integer(1),
            );
            let want = &want * &p.pow(stats.adjacent_edge_count as u32);
            let got = contraction_to_seq_p(c)
                .and_then(|s| generate(&p_grammar, &xy(1, 0), &s))
                .map(|g| g.value());
            if got.as_ref() != Ok(&want) {
                bad.push(c.to_string());
            }
        }
        report.record(
            format!("statistic-transport/len={len}"),
            "every contraction".into(),
            if bad.is_empty() { "every contraction".into() } else { format!("fails on {}", bad.join(" | ")) },
            bad.is_empty(),
        );

        // generation from xy, n steps, versus x y^(#c - edges)
        let steps = len - 1;
        match enumerate_generations(&stirling, &xy(1, 1), steps, Semantics::Stirling) {
            Ok(records) => {
                let mut from_seqs: BTreeMap<Monomial, usize> = BTreeMap::new();
                for r in &records {
                    *from_seqs.entry(r.monomial.clone()).or_default() += 1;
                }
                let mut from_contractions: BTreeMap<Monomial, usize> = BTreeMap::new();
                for c in &contractions {
                    *from_contractions.entry(xy(1, (len - c.edges().len()) as u32)).or_default() += 1;
                }
                let render = |m: &BTreeMap<Monomial, usize>| {
                    m.iter().map(|(k, v)| format!("{v}*{k}")).collect::<Vec<_>>().join(" + ")
                };
                report.record(
                    format!("multiset/len={len}"),
                    render(&from_contractions),
                    render(&from_seqs),
                    from_seqs == from_contractions,
                );
                let aggregated: Polynomial = records.iter().map(|r| r.value()).sum();
                let derived = stirling.derive_n(&Polynomial::term(xy(1, 1), integer(1)), steps);
                report.check(format!("multiset-aggregate/D^{steps}(xy)"), &derived, &aggregated);
                let listed: Vec<String> = records.iter().map(|r| r.sequence.to_string()).collect();
                let family: Vec<String> =
                    enumerate_growth_sequences(GrowthKind::P, len).iter().map(|s| s.to_string()).collect();
                report.check_list(format!("generation-sequences-are-P/len={len}"), &family, &listed);
            }
            Err(e) => report.record(format!("multiset/len={len}"), "records".into(), format!("error: {e}"), false),
        }
    }

    // the fifteen (ca)^4 diagrams and their reference labels
    let mut labels: Vec<String> = enumerate_contractions(&WeylWord::number_power(4))
        .iter()
        .map(|c| contraction_to_seq_p(c).map(|s| s.to_string()).unwrap_or_else(|e| format!("error: {e}")))
        .collect();
    labels.sort();
    let reference: Vec<String> = CA4_LABELS.iter().map(|s| s.to_string()).collect();
    report.check_list("ca4-labels", &reference, &labels);

    let worked = GenSequence::new(vec![1, 2, 1, 3], Semantics::PGrammar)
        .and_then(|s| generate(&p_grammar, &xy(1, 0), &s))
        .map(|g| g.value());
    report.check_result("worked/1,2,1,3->pxy", "p*x*y".parse::<Polynomial>(), worked);

    let one_edge = Contraction::new(WeylWord::number_power(2), vec![(1, 2)])
        .and_then(|c| contraction_to_seq_stirling(&c))
        .map(|s| s.to_string());
    report.check_result("worked/(ca)^2-edge(2,3)->1,2", Ok("1,2".to_string()), one_edge);

    for n in 1..=count_n as u32 {
        for (kind, name) in [(GrowthKind::P, "P"), (GrowthKind::Q, "Q")] {
            let seqs = enumerate_growth_sequences(kind, n as usize);
            report.check(format!("{name}/size/n={n}"), &bell(n), &BigInt::from(seqs.len()));
            // P: k ones (s_1 included) <-> S(n,k); Q: k-1 twos <-> S(n,k)
            let mut dist = vec![BigInt::from(0); n as usize + 1];
            for s in &seqs {
                let marks = s.entries().iter().filter(|&&e| e == kind.marker()).count();
                let k = if kind == GrowthKind::P { marks } else { marks + 1 };
                dist[k] += 1;
            }
            let want = stirling2_row(n);
            report.record(
                format!("{name}/distribution/n={n}"),
                list(&want),
                list(&dist),
                want == dist,
            );
        }
    }

    report
}
