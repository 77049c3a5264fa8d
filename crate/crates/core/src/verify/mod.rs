//! Verification suites. Each suite compares two independently computed sides
//! of an identity and records every comparison in a [`Report`]; a failing
//! case never stops the suite.

mod bijections;
mod grammar;
mod identities;
mod report;
mod rook;
mod shift;
mod weyl;

pub use bijections::verify_bijections;
pub use grammar::verify_grammar_theorems;
pub use identities::verify_identities;
pub use report::{Case, Report};
pub use rook::verify_rook;
pub use shift::verify_shift;
pub use weyl::verify_weyl;

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Grammar,
    Weyl,
    Bijections,
    Identities,
    Rook,
    Shift,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Grammar,
        Suite::Weyl,
        Suite::Bijections,
        Suite::Identities,
        Suite::Rook,
        Suite::Shift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Grammar => "grammar",
            Suite::Weyl => "weyl",
            Suite::Bijections => "bijections",
            Suite::Identities => "identities",
            Suite::Rook => "rook",
            Suite::Shift => "shift",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnsupportedParameters(format!("unknown suite `{s}`")))
    }
}

/// Sizes the suites run at. The defaults keep a full run well under two
/// minutes in an optimized build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Triangle rows and derivative orders.
    pub max_n: u32,
    /// Longest word checked exhaustively by the Weyl suite.
    pub max_word_len: usize,
    /// Words `(ca)^(n+1)` for `n <= bijection_n`.
    pub bijection_n: usize,
    /// `a_n` checked for `n <= rook_a`, `b_n` for `n <= rook_b`.
    pub rook_a: u32,
    pub rook_b: u32,
    pub shift_order: usize,
    /// Seed for the randomized inputs of the identities suite.
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 8,
            max_word_len: 10,
            bijection_n: 6,
            rook_a: 4,
            rook_b: 5,
            shift_order: 8,
            seed: 0x5eed,
        }
    }
}

impl Budget {
    /// Scales every suite off a single size: triangles and derivatives to
    /// `max_n`, the other suites to the default sizes or `max_n`, whichever
    /// is smaller. `for_max_n(8)` is the default budget.
    pub fn for_max_n(max_n: u32) -> Self {
        let d = Budget::default();
        let n = max_n as usize;
        Budget {
            max_n,
            max_word_len: d.max_word_len.min(n + 2),
            bijection_n: d.bijection_n.min(n),
            rook_a: d.rook_a.min(max_n),
            rook_b: d.rook_b.min(max_n),
            shift_order: n,
            seed: d.seed,
        }
    }

    /// Limits past which a run is refused rather than left to grind.
    pub fn validate(&self) -> Result<()> {
        let checks = [
            (self.max_n <= 12, "max_n <= 12"),
            (self.max_word_len <= 14, "word length <= 14"),
            (self.bijection_n <= 7, "bijection n <= 7"),
            (self.rook_a <= 5 && self.rook_b <= 6, "rook n <= 5 (a_n) and <= 6 (b_n)"),
            (self.shift_order <= 12, "shift order <= 12"),
        ];
        match checks.iter().find(|(ok, _)| !ok) {
            Some((_, limit)) => Err(Error::TooLarge(format!("budget exceeds {limit}"))),
            None => Ok(()),
        }
    }
}

pub fn run_suite(suite: Suite, budget: &Budget) -> Result<Report> {
    budget.validate()?;
    Ok(match suite {
        Suite::Grammar => verify_grammar_theorems(budget.max_n),
        Suite::Weyl => verify_weyl(budget.max_word_len, budget.max_n),
        Suite::Bijections => verify_bijections(budget.bijection_n),
        Suite::Identities => verify_identities(budget.max_n, budget.seed),
        Suite::Rook => verify_rook(budget.rook_a, budget.rook_b),
        Suite::Shift => verify_shift(budget.shift_order),
    })
}

/// Every suite, in [`Suite::ALL`] order.
pub fn run_all(budget: &Budget) -> Result<Vec<Report>> {
    Suite::ALL.iter().map(|&s| run_suite(s, budget)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_budget_passes_every_suite() {
        let budget = Budget {
            max_n: 4,
            max_word_len: 5,
            bijection_n: 3,
            rook_a: 2,
            rook_b: 3,
            shift_order: 4,
            seed: 1,
        };
        for report in run_all(&budget).unwrap() {
            assert!(report.pass(), "{}", report.to_table());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let budget = Budget { max_n: 3, max_word_len: 4, bijection_n: 2, ..Budget::default() };
        let render = || serde_json::to_string(&run_all(&budget).unwrap()).unwrap();
        assert_eq!(render(), render());
    }

    #[test]
    fn max_n_scaling() {
        assert_eq!(Budget::for_max_n(8), Budget::default());
        assert_eq!(Budget::for_max_n(2).rook_a, 2);
        assert!(Budget::for_max_n(13).validate().is_err());
    }

    #[test]
    fn oversized_budget_is_refused() {
        let budget = Budget { max_word_len: 15, ..Budget::default() };
        assert!(matches!(run_suite(Suite::Weyl, &budget), Err(Error::TooLarge(_))));
        assert_eq!("rook".parse::<Suite>().unwrap(), Suite::Rook);
        assert!("nope".parse::<Suite>().is_err());
    }
}
