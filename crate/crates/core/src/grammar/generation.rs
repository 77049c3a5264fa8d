//! Generation sequences: which letter of the current word is differentiated
//! at each step, and with which term of its rule.
//!
//! Two numberings are exposed, one per supported `(grammar, start)` pair:
//!
//! * [`Semantics::Stirling`] for `{x -> xy, y -> y}` started at `x` or `xy`:
//!   `s_j` is the 1-based position of the letter that is replaced.
//! * [`Semantics::PGrammar`] for `{x -> c*x + x*y, y -> y}` started at `x`:
//!   `s_j = 1` applies `x -> c*x`, `s_j = 2` applies `x -> x*y`, and
//!   `s_j >= 3` rewrites the `(s_j - 1)`-st letter, which is a `y`.
//!
//! In both cases `s_1 = 1` is a placeholder for the starting word.
//! Internally every step is a `(position, term)` choice on a word of letters.

use std::fmt;

use num_traits::One;
use serde::Serialize;

use super::Grammar;
use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semantics {
    Stirling,
    PGrammar,
}

/// A sequence `1 = s_1, s_2, ..., s_{d+1}` obeying the growth bound of its
/// family: `s_j <= #{i < j : s_i = 1} + 1` for [`Semantics::Stirling`] and
/// `1 <= s_j <= #{i < j : s_i = 2} + 2` for [`Semantics::PGrammar`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSequence {
    entries: Vec<u32>,
    family: Semantics,
}

impl GenSequence {
    pub fn new(entries: Vec<u32>, family: Semantics) -> Result<Self> {
        let invalid = |why: String| Error::InvalidSequence(entries.clone(), why);
        if entries.first() != Some(&1) {
            return Err(invalid("must start with 1".into()));
        }
        let (marker, slack) = match family {
            Semantics::Stirling => (1, 1),
            Semantics::PGrammar => (2, 2),
        };
        let mut seen = 0u32;
        for (j, &s) in entries.iter().enumerate() {
            if j > 0 && (s == 0 || s > seen + slack) {
                return Err(invalid(format!(
                    "entry {} is {s}, allowed range is 1..={}",
                    j + 1,
                    seen + slack
                )));
            }
            if s == marker {
                seen += 1;
            }
        }
        Ok(GenSequence { entries, family })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn family(&self) -> Semantics {
        self.family
    }

    /// Number of generation steps (the sequence has one more entry).
    pub fn steps(&self) -> usize {
        self.entries.len() - 1
    }

    /// Occurrences of `value` among `s_2, ..., s_{d+1}`.
    pub fn count_after_first(&self, value: u32) -> usize {
        self.entries[1..].iter().filter(|&&s| s == value).count()
    }
}

impl fmt::Display for GenSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for GenSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{self}]", self.family)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationRecord {
    pub sequence: GenSequence,
    pub monomial: Monomial,
    /// Product of the constant factors picked up along the way, e.g. `p^m`.
    pub weight: Polynomial,
}

impl GenerationRecord {
    /// `weight * monomial`.
    pub fn value(&self) -> Polynomial {
        self.weight.mul_monomial(&self.monomial)
    }
}

/// One rewriting step in the word model: a letter is replaced by the grammar
/// variables of one term of its rule; everything else goes into the weight.
#[derive(Clone)]
struct WordState {
    letters: Vec<Symbol>,
    weight: Polynomial,
}

impl WordState {
    fn start(m: &Monomial) -> Self {
        let mut letters = Vec::new();
        for (s, e) in m.exponents() {
            letters.extend(std::iter::repeat_n(s.clone(), e as usize));
        }
        WordState {
            letters,
            weight: Polynomial::one(),
        }
    }

    fn apply(&self, g: &Grammar, position: usize, term: usize) -> Option<WordState> {
        let letter = self.letters.get(position)?;
        let image = g.rule(letter)?;
        let (m, c) = image.terms().nth(term)?;
        let vars = g.variables();
        let mut inserted = Vec::new();
        let mut constant = Monomial::one();
        for (s, e) in m.exponents() {
            if vars.contains(s) {
                inserted.extend(std::iter::repeat_n(s.clone(), e as usize));
            } else {
                constant = constant.mul(&Monomial::power(s.clone(), e));
            }
        }
        // keep the replaced letter first so `x` stays in front
        if let Some(i) = inserted.iter().position(|s| s == letter) {
            inserted.swap(0, i);
        }
        let mut letters = self.letters[..position].to_vec();
        letters.extend(inserted);
        letters.extend_from_slice(&self.letters[position + 1..]);
        let weight = &self.weight * &Polynomial::term(constant, c.clone());
        Some(WordState { letters, weight })
    }

    fn monomial(&self) -> Monomial {
        Monomial::from_exponents(self.letters.iter().map(|s| (s.clone(), 1)))
    }
}

/// Resolved shape of a supported `(grammar, start, semantics)` triple.
enum Numbering {
    Positions,
    /// Term indices of `c*x` and `x*y` inside the rule for `x`.
    PGrammar {
        weight_term: usize,
        grow_term: usize,
    },
}

fn numbering(g: &Grammar, start: &Monomial, family: Semantics) -> Result<Numbering> {
    let x = Symbol::new("x");
    let y = Symbol::new("y");
    let xm = Monomial::var(x.clone());
    let xym = xm.mul(&Monomial::var(y.clone()));
    let unsupported = |why: &str| Error::UnsupportedGeneration(why.to_string());
    if g.variables().len() != 2 || g.rule(&y) != Some(&Polynomial::var("y")) {
        return Err(unsupported("grammar must have the rules x -> ..., y -> y"));
    }
    let x_rule = g.rule(&x).ok_or_else(|| unsupported("missing rule for x"))?;
    match family {
        Semantics::Stirling => {
            if *x_rule != Polynomial::term(xym.clone(), One::one()) {
                return Err(unsupported("Stirling numbering needs x -> x*y"));
            }
            if *start != xm && *start != xym {
                return Err(unsupported("Stirling numbering starts from x or x*y"));
            }
            Ok(Numbering::Positions)
        }
        Semantics::PGrammar => {
            if *start != xm {
                return Err(unsupported("p-grammar numbering starts from x"));
            }
            let terms: Vec<(&Monomial, _)> = x_rule.terms().collect();
            let grow_term = terms
                .iter()
                .position(|(m, c)| **m == xym && c.is_one())
                .ok_or_else(|| unsupported("x rule needs the term x*y"))?;
            if terms.len() != 2 {
                return Err(unsupported("x rule must be c*x + x*y"));
            }
            let weight_term = 1 - grow_term;
            let (wm, _) = terms[weight_term];
            let (e, rest) = wm.split(&x);
            if e != 1 || rest.symbols().any(|s| *s == x || *s == y) {
                return Err(unsupported("x rule must be c*x + x*y with c constant"));
            }
            Ok(Numbering::PGrammar {
                weight_term,
                grow_term,
            })
        }
    }
}

fn step(
    numbering: &Numbering,
    g: &Grammar,
    state: &WordState,
    s: u32,
) -> Option<WordState> {
    let s = s as usize;
    match *numbering {
        Numbering::Positions => state.apply(g, s.checked_sub(1)?, 0),
        Numbering::PGrammar {
            weight_term,
            grow_term,
        } => match s {
            0 => None,
            1 => state.apply(g, 0, weight_term),
            2 => state.apply(g, 0, grow_term),
            _ => state.apply(g, s - 2, 0),
        },
    }
}

fn choices(numbering: &Numbering, state: &WordState) -> u32 {
    match numbering {
        Numbering::Positions => state.letters.len() as u32,
        Numbering::PGrammar { .. } => state.letters.len() as u32 + 1,
    }
}

/// Replays a single sequence from `start`.
pub fn generate(g: &Grammar, start: &Monomial, sequence: &GenSequence) -> Result<GenerationRecord> {
    let numbering = numbering(g, start, sequence.family())?;
    let mut state = WordState::start(start);
    for &s in &sequence.entries()[1..] {
        state = step(&numbering, g, &state, s).ok_or_else(|| {
            Error::InvalidSequence(
                sequence.entries().to_vec(),
                format!("step {s} is not available from {}", state.monomial()),
            )
        })?;
    }
    Ok(GenerationRecord {
        sequence: sequence.clone(),
        monomial: state.monomial(),
        weight: state.weight,
    })
}

/// Every generation sequence of `n` steps from `start`, in lexicographic
/// order, with the monomial and weight it produces.
pub fn enumerate_generations(
    g: &Grammar,
    start: &Monomial,
    n: usize,
    family: Semantics,
) -> Result<Vec<GenerationRecord>> {
    let numbering = numbering(g, start, family)?;
    let mut out = Vec::new();
    let mut prefix = vec![1u32];
    walk(&numbering, g, family, &WordState::start(start), n, &mut prefix, &mut out);
    Ok(out)
}

fn walk(
    numbering: &Numbering,
    g: &Grammar,
    family: Semantics,
    state: &WordState,
    remaining: usize,
    prefix: &mut Vec<u32>,
    out: &mut Vec<GenerationRecord>,
) {
    if remaining == 0 {
        out.push(GenerationRecord {
            sequence: GenSequence {
                entries: prefix.clone(),
                family,
            },
            monomial: state.monomial(),
            weight: state.weight.clone(),
        });
        return;
    }
    for s in 1..=choices(numbering, state) {
        if let Some(next) = step(numbering, g, state, s) {
            prefix.push(s);
            walk(numbering, g, family, &next, remaining - 1, prefix, out);
            prefix.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> Monomial {
        let p: Polynomial = s.parse().unwrap();
        let m = p.terms().next().unwrap().0.clone();
        m
    }

    fn summary(records: &[GenerationRecord]) -> Vec<(String, String, String)> {
        records
            .iter()
            .map(|r| (r.sequence.to_string(), r.monomial.to_string(), r.weight.to_string()))
            .collect()
    }

    #[test]
    fn stirling_from_xy_two_steps() {
        let recs =
            enumerate_generations(&Grammar::stirling(), &mono("x*y"), 2, Semantics::Stirling).unwrap();
        let got: Vec<(String, String)> = summary(&recs).into_iter().map(|(s, m, _)| (s, m)).collect();
        let want = [
            ("1,1,1", "x*y^3"),
            ("1,1,2", "x*y^2"),
            ("1,1,3", "x*y^2"),
            ("1,2,1", "x*y^2"),
            ("1,2,2", "x*y"),
        ];
        assert_eq!(
            got,
            want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect::<Vec<_>>()
        );
    }

    #[test]
    fn p_grammar_first_steps() {
        let g = Grammar::shifted_stirling(&"p".parse().unwrap());
        let recs = enumerate_generations(&g, &mono("x"), 1, Semantics::PGrammar).unwrap();
        assert_eq!(
            summary(&recs),
            vec![
                ("1,1".into(), "x".into(), "p".into()),
                ("1,2".into(), "x*y".into(), "1".into())
            ]
        );
        let recs = enumerate_generations(&g, &mono("x"), 2, Semantics::PGrammar).unwrap();
        let seqs: Vec<String> = recs.iter().map(|r| r.sequence.to_string()).collect();
        assert_eq!(seqs, ["1,1,1", "1,1,2", "1,2,1", "1,2,2", "1,2,3"]);
        let xy2: Vec<&str> = recs
            .iter()
            .zip(&seqs)
            .filter(|(r, _)| r.monomial == mono("x*y^2"))
            .map(|(_, s)| s.as_str())
            .collect();
        assert_eq!(xy2, ["1,2,2"]);
    }

    #[test]
    fn zero_steps_is_the_start() {
        let recs = enumerate_generations(&Grammar::stirling(), &mono("x"), 0, Semantics::Stirling).unwrap();
        assert_eq!(summary(&recs), vec![("1".into(), "x".into(), "1".into())]);
    }

    #[test]
    fn replay_matches_example() {
        let g = Grammar::shifted_stirling(&"p".parse().unwrap());
        let s = GenSequence::new(vec![1, 2, 1, 3], Semantics::PGrammar).unwrap();
        let r = generate(&g, &mono("x"), &s).unwrap();
        assert_eq!(r.value(), "p*x*y".parse().unwrap());
    }

    #[test]
    fn unsupported_pairs() {
        let dumont = Grammar::from_rules(&[("x", "x*y"), ("y", "x*y")]);
        assert!(enumerate_generations(&dumont, &mono("x"), 2, Semantics::Stirling).is_err());
        let st = Grammar::stirling();
        assert!(enumerate_generations(&st, &mono("x"), 2, Semantics::PGrammar).is_err());
        assert!(enumerate_generations(&st, &mono("y"), 2, Semantics::Stirling).is_err());
        let pg = Grammar::shifted_stirling(&"p".parse().unwrap());
        assert!(enumerate_generations(&pg, &mono("x*y"), 2, Semantics::PGrammar).is_err());
    }

    #[test]
    fn sequence_validation() {
        assert!(GenSequence::new(vec![1, 2, 2], Semantics::Stirling).is_ok());
        assert!(GenSequence::new(vec![1, 2, 3], Semantics::Stirling).is_err());
        assert!(GenSequence::new(vec![2], Semantics::Stirling).is_err());
        assert!(GenSequence::new(vec![1, 2, 2, 4], Semantics::PGrammar).is_ok());
        assert!(GenSequence::new(vec![1, 3], Semantics::PGrammar).is_err());
        assert!(GenSequence::new(vec![1, 0], Semantics::PGrammar).is_err());
        assert!(GenSequence::new(vec![], Semantics::PGrammar).is_err());
    }

    #[test]
    fn replay_rejects_unreachable_positions() {
        // valid under the growth bound, but from `x` the second letter does not exist yet
        let s = GenSequence::new(vec![1, 2], Semantics::Stirling).unwrap();
        assert!(generate(&Grammar::stirling(), &mono("x"), &s).is_err());
    }
}
