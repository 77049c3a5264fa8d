use std::fmt;

use serde::Serialize;

use super::{Letter, WeylWord};
use crate::error::{Error, Result};

/// A set of disjoint edges `(i, j)` with `i < j`, letter `i` an annihilator
/// and letter `j` a creator. Positions are 0-based internally and 1-based in
/// the textual form `word; edges=(i,j),(k,l)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Contraction {
    word: WeylWord,
    edges: Vec<(usize, usize)>,
}

impl Contraction {
    /// Validates and stores the edges sorted.
    pub fn new(word: WeylWord, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        edges.sort_unstable();
        let mut used = vec![false; word.len()];
        for &(i, j) in &edges {
            let bad = |why: &str| {
                Error::InvalidContraction(format!("edge ({},{}) {why}", i + 1, j + 1))
            };
            if i >= j || j >= word.len() {
                return Err(bad("is not a left-to-right pair inside the word"));
            }
            if word.letters()[i] != Letter::A || word.letters()[j] != Letter::C {
                return Err(bad("must join an `a` to a later `c`"));
            }
            if used[i] || used[j] {
                return Err(bad("reuses a vertex"));
            }
            used[i] = true;
            used[j] = true;
        }
        Ok(Contraction { word, edges })
    }

    /// The null contraction.
    pub fn null(word: WeylWord) -> Self {
        Contraction {
            word,
            edges: Vec::new(),
        }
    }

    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    /// 0-based edges, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// 1-based edges, sorted.
    pub fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(i, j)| (i + 1, j + 1)).collect()
    }

    /// The vertex joined to position `v`, if any.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(i, j)| {
            if i == v {
                Some(j)
            } else if j == v {
                Some(i)
            } else {
                None
            }
        })
    }
}

impl fmt::Display for Contraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; edges=", self.word)?;
        let parts: Vec<String> = self
            .edges_one_based()
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Contraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Contraction({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ContractionStats {
    pub edge_count: usize,
    /// Edges `(i, i+1)`.
    pub adjacent_edge_count: usize,
    pub degree0_black_count: usize,
    pub degree0_white_count: usize,
}

pub fn contraction_stats(c: &Contraction) -> ContractionStats {
    let edge_count = c.edges.len();
    ContractionStats {
        edge_count,
        adjacent_edge_count: c.edges.iter().filter(|&&(i, j)| j == i + 1).count(),
        degree0_black_count: c.word.count(Letter::C) - edge_count,
        degree0_white_count: c.word.count(Letter::A) - edge_count,
    }
}

/// All contractions of `w`, the null contraction included, sorted
/// lexicographically by their sorted edge lists.
pub fn enumerate_contractions(w: &WeylWord) -> Vec<Contraction> {
    let mut out = Vec::new();
    let mut open = Vec::new();
    let mut edges = Vec::new();
    extend(w.letters(), 0, &mut open, &mut edges, &mut |edges| {
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        out.push(sorted);
    });
    out.sort();
    out.into_iter()
        .map(|edges| Contraction {
            word: w.clone(),
            edges,
        })
        .collect()
}

type Edge = (usize, usize);

fn extend(
    letters: &[Letter],
    pos: usize,
    open: &mut Vec<usize>,
    edges: &mut Vec<Edge>,
    emit: &mut dyn FnMut(&[Edge]),
) {
    if pos == letters.len() {
        emit(edges);
        return;
    }
    match letters[pos] {
        Letter::A => {
            open.push(pos);
            extend(letters, pos + 1, open, edges, emit);
            open.pop();
        }
        Letter::C => {
            extend(letters, pos + 1, open, edges, emit);
            for k in 0..open.len() {
                let i = open.remove(k);
                edges.push((i, pos));
                extend(letters, pos + 1, open, edges, emit);
                edges.pop();
                open.insert(k, i);
            }
        }
    }
}
