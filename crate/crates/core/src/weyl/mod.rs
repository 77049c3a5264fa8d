//! Normal ordering in the Weyl algebra `b b† - b† b = 1`.
//!
//! Two independent routes compute the normal form of a word:
//! [`normal_order`] rewrites `a c -> c a + 1` until no `a` precedes a `c`,
//! while [`wick_sum`] enumerates Wick contractions and sums their double-dot
//! images. [`normal_order_p`] is the contraction sum weighted by `p` per
//! contracted adjacent pair.

mod contraction;
mod normal_form;
mod word;

pub use contraction::{contraction_stats, enumerate_contractions, Contraction, ContractionStats};
pub use normal_form::{nf_multiply, NormalForm};
pub use word::{Letter, WeylWord};

use std::collections::HashMap;

use crate::ring::{Polynomial, Symbol};

/// Normal form of `w` by rewriting adjacent `a c` pairs, memoized per word.
pub fn normal_order(w: &WeylWord) -> NormalForm {
    let mut memo = HashMap::new();
    rewrite(w.letters(), &mut memo)
}

fn rewrite(word: &[Letter], memo: &mut HashMap<Vec<Letter>, NormalForm>) -> NormalForm {
    if let Some(nf) = memo.get(word) {
        return nf.clone();
    }
    let nf = match word.windows(2).position(|p| p == [Letter::A, Letter::C]) {
        // no `a` before a `c`: the word is already c^i a^j
        None => {
            let c = word.iter().filter(|&&l| l == Letter::C).count() as u32;
            NormalForm::monomial(c, word.len() as u32 - c, Polynomial::one())
        }
        Some(k) => {
            let mut swapped = word.to_vec();
            swapped.swap(k, k + 1);
            let mut dropped = word[..k].to_vec();
            dropped.extend_from_slice(&word[k + 2..]);
            let mut nf = rewrite(&swapped, memo);
            nf += &rewrite(&dropped, memo);
            nf
        }
    };
    memo.insert(word.to_vec(), nf.clone());
    nf
}

/// Wick's theorem: sum of `:contraction:` over all contractions of `w`.
pub fn wick_sum(w: &WeylWord) -> NormalForm {
    let creations = w.count(Letter::C) as u32;
    let annihilations = w.count(Letter::A) as u32;
    let mut nf = NormalForm::zero();
    for c in enumerate_contractions(w) {
        let e = c.edges().len() as u32;
        nf.add_term(creations - e, annihilations - e, Polynomial::one());
    }
    nf
}

/// The `p`-deformed normal order: every contraction contributes
/// `p^(adjacent contracted pairs)`; other contracted pairs weigh 1.
pub fn normal_order_p(w: &WeylWord, p: &Symbol) -> NormalForm {
    let creations = w.count(Letter::C) as u32;
    let annihilations = w.count(Letter::A) as u32;
    let base = Polynomial::symbol(p.clone());
    let mut nf = NormalForm::zero();
    for c in enumerate_contractions(w) {
        let stats = contraction_stats(&c);
        let e = stats.edge_count as u32;
        nf.add_term(
            creations - e,
            annihilations - e,
            base.pow(stats.adjacent_edge_count as u32),
        );
    }
    nf
}
