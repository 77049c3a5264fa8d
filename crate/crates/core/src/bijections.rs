//! Contractions of `(ca)^n` versus generation sequences.
//!
//! Vertices are numbered 1-based along the word: black vertex `j` (a `c`)
//! sits at `2j - 1` and white vertex `j` (an `a`) at `2j`. Blacks are visited
//! left to right; a black may only join an unused white to its left, and
//! unused whites are ranked nearest first.
//!
//! * Stirling family: `s_j = 1` leaves black `j` unconnected, `s_j >= 2`
//!   joins it to the `(s_j - 1)`-st unused white.
//! * `p` family: `s_j = 2` leaves black `j` unconnected, `s_j = 1` joins the
//!   adjacent white `2j - 2`, `s_j >= 3` joins the `(s_j - 1)`-st unused white
//!   (the adjacent one, always unused, being the first).
//!
//! Black vertex 1 has no white to its left, so `s_1 = 1` carries no choice.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grammar::{GenSequence, Semantics};
use crate::weyl::{Contraction, WeylWord};

/// The restricted-growth families: `P` bounds entries by the number of
/// earlier ones, `Q` by the number of earlier twos.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GrowthKind {
    P,
    Q,
}

impl GrowthKind {
    pub fn semantics(self) -> Semantics {
        match self {
            GrowthKind::P => Semantics::Stirling,
            GrowthKind::Q => Semantics::PGrammar,
        }
    }

    /// The entry value counted by the bound.
    pub fn marker(self) -> u32 {
        match self {
            GrowthKind::P => 1,
            GrowthKind::Q => 2,
        }
    }
}

// 0-based word indices of black and white vertex `j` (1-based).
fn black(j: usize) -> usize {
    2 * j - 2
}

fn white(j: usize) -> usize {
    2 * j - 1
}

/// Unused whites left of black `j`, nearest first, as white indices.
fn unused_left(used: &[bool], j: usize) -> Vec<usize> {
    (1..j).rev().filter(|&w| !used[w]).collect()
}

fn build(s: &GenSequence, expected: Semantics, pick: impl Fn(u32, &[usize]) -> Option<usize>) -> Result<Contraction> {
    if s.family() != expected {
        return Err(Error::InvalidSequence(
            s.entries().to_vec(),
            format!("expected a {expected:?} sequence"),
        ));
    }
    let n = s.entries().len();
    let mut used = vec![false; n + 1];
    let mut edges = Vec::new();
    for (idx, &sj) in s.entries().iter().enumerate().skip(1) {
        let j = idx + 1;
        let free = unused_left(&used, j);
        if let Some(w) = pick(sj, &free) {
            used[w] = true;
            edges.push((white(w), black(j)));
        }
    }
    Contraction::new(WeylWord::number_power(n), edges)
}

pub fn seq_to_contraction_stirling(s: &GenSequence) -> Result<Contraction> {
    build(s, Semantics::Stirling, |sj, free| {
        (sj >= 2).then(|| free[sj as usize - 2])
    })
}

pub fn seq_to_contraction_p(s: &GenSequence) -> Result<Contraction> {
    build(s, Semantics::PGrammar, |sj, free| match sj {
        2 => None,
        1 => Some(free[0]),
        _ => Some(free[sj as usize - 2]),
    })
}

/// For each black `j >= 2`: `None` if unconnected, else the 0-based rank of
/// its white partner among the whites unused at that point, nearest first.
fn ranks(c: &Contraction) -> Result<Vec<Option<usize>>> {
    let n = c
        .word()
        .number_power_exponent()
        .ok_or_else(|| Error::NotCaPower(c.word().to_string()))?;
    let mut used = vec![false; n + 1];
    let mut out = Vec::new();
    for j in 2..=n {
        let partner = c.partner(black(j)).map(|w| w.div_ceil(2));
        let free = unused_left(&used, j);
        let rank = match partner {
            None => None,
            Some(w) => {
                used[w] = true;
                Some(free.iter().position(|&f| f == w).ok_or_else(|| {
                    Error::InvalidContraction(format!("{c}: white {w} reused"))
                })?)
            }
        };
        out.push(rank);
    }
    Ok(out)
}

fn sequence(entries: impl Iterator<Item = u32>, family: Semantics) -> Result<GenSequence> {
    GenSequence::new(std::iter::once(1).chain(entries).collect(), family)
}

pub fn contraction_to_seq_stirling(c: &Contraction) -> Result<GenSequence> {
    let r = ranks(c)?;
    sequence(
        r.into_iter().map(|r| r.map_or(1, |k| k as u32 + 2)),
        Semantics::Stirling,
    )
}

pub fn contraction_to_seq_p(c: &Contraction) -> Result<GenSequence> {
    let r = ranks(c)?;
    sequence(
        r.into_iter().map(|r| match r {
            None => 2,
            Some(0) => 1,
            Some(k) => k as u32 + 2,
        }),
        Semantics::PGrammar,
    )
}

/// All sequences of length `n` in the family, lexicographically.
pub fn enumerate_growth_sequences(kind: GrowthKind, n: usize) -> Vec<GenSequence> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    // the bound's additive slack happens to equal the marker value
    let slack = kind.marker();
    let mut prefix = vec![1u32];
    let seen = u32::from(kind == GrowthKind::P);
    grow(kind, n, slack, seen, &mut prefix, &mut out);
    out
}

fn grow(kind: GrowthKind, n: usize, slack: u32, seen: u32, prefix: &mut Vec<u32>, out: &mut Vec<GenSequence>) {
    if prefix.len() == n {
        out.push(GenSequence::new(prefix.clone(), kind.semantics()).expect("bounded by construction"));
        return;
    }
    for s in 1..=seen + slack {
        prefix.push(s);
        grow(kind, n, slack, seen + u32::from(s == kind.marker()), prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::enumerate_contractions;

    fn seq(s: &str, family: Semantics) -> GenSequence {
        let entries = s.split(',').map(|x| x.parse().unwrap()).collect();
        GenSequence::new(entries, family).unwrap()
    }

    fn edges(c: &Contraction) -> Vec<(usize, usize)> {
        c.edges_one_based()
    }

    #[test]
    fn stirling_diagrams_of_three_blacks() {
        let table: [(&str, &[(usize, usize)]); 5] = [
            ("1,1,1", &[]),
            ("1,1,2", &[(4, 5)]),
            ("1,1,3", &[(2, 5)]),
            ("1,2,1", &[(2, 3)]),
            ("1,2,2", &[(2, 3), (4, 5)]),
        ];
        for (s, want) in table {
            let c = seq_to_contraction_stirling(&seq(s, Semantics::Stirling)).unwrap();
            assert_eq!(edges(&c), want, "{s}");
            assert_eq!(contraction_to_seq_stirling(&c).unwrap().to_string(), s);
        }
        let one = Contraction::new(WeylWord::number_power(2), vec![(1, 2)]).unwrap();
        assert_eq!(contraction_to_seq_stirling(&one).unwrap().to_string(), "1,2");
        let trivial = seq_to_contraction_stirling(&seq("1", Semantics::Stirling)).unwrap();
        assert!(trivial.edges().is_empty());
        assert_eq!(trivial.word().len(), 2);
    }

    #[test]
    fn p_family_diagrams_of_four_blacks() {
        let table: [(&str, &[(usize, usize)]); 15] = [
            ("1,1,1,1", &[(2, 3), (4, 5), (6, 7)]),
            ("1,1,1,2", &[(2, 3), (4, 5)]),
            ("1,1,2,1", &[(2, 3), (6, 7)]),
            ("1,1,2,2", &[(2, 3)]),
            ("1,1,2,3", &[(2, 3), (4, 7)]),
            ("1,2,1,1", &[(4, 5), (6, 7)]),
            ("1,2,1,2", &[(4, 5)]),
            ("1,2,1,3", &[(2, 7), (4, 5)]),
            ("1,2,2,1", &[(6, 7)]),
            ("1,2,2,2", &[]),
            ("1,2,2,3", &[(4, 7)]),
            ("1,2,2,4", &[(2, 7)]),
            ("1,2,3,1", &[(2, 5), (6, 7)]),
            ("1,2,3,2", &[(2, 5)]),
            ("1,2,3,3", &[(2, 5), (4, 7)]),
        ];
        for (s, want) in table {
            let c = seq_to_contraction_p(&seq(s, Semantics::PGrammar)).unwrap();
            assert_eq!(edges(&c), want, "{s}");
        }
        let mut recovered: Vec<String> = enumerate_contractions(&WeylWord::number_power(4))
            .iter()
            .map(|c| contraction_to_seq_p(c).unwrap().to_string())
            .collect();
        recovered.sort();
        let labels: Vec<String> = table.iter().map(|(s, _)| s.to_string()).collect();
        assert_eq!(recovered, labels);
    }

    #[test]
    fn growth_families() {
        let p3 = enumerate_growth_sequences(GrowthKind::P, 3);
        assert_eq!(p3.len(), 5);
        let ones: Vec<usize> = p3.iter().map(|s| s.entries().iter().filter(|&&x| x == 1).count()).collect();
        assert_eq!(ones, [3, 2, 2, 2, 1]);
        let q2: Vec<String> = enumerate_growth_sequences(GrowthKind::Q, 2).iter().map(|s| s.to_string()).collect();
        assert_eq!(q2, ["1,1", "1,2"]);
        assert_eq!(enumerate_growth_sequences(GrowthKind::P, 1).len(), 1);
        assert_eq!(enumerate_growth_sequences(GrowthKind::Q, 4).len(), 15);
    }

    #[test]
    fn non_number_power_words_are_rejected() {
        let c = Contraction::null("cca".parse().unwrap());
        assert!(matches!(contraction_to_seq_p(&c), Err(Error::NotCaPower(_))));
        let wrong = seq("1,2", Semantics::PGrammar);
        assert!(seq_to_contraction_stirling(&wrong).is_err());
    }
}
