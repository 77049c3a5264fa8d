//! Exact arithmetic substrate.
//!
//! Everything in the crate is expressed over [`Polynomial`]: sparse
//! multivariate polynomials with big-rational coefficients over named
//! [`Symbol`]s. Parameters such as `p`, `q`, `m` and `r` are ordinary symbols;
//! whether a symbol behaves as a constant is decided by whoever differentiates.

mod falling;
mod monomial;
mod parse;
mod polynomial;
mod series;

pub use falling::{falling_factorial, from_falling_factorial_basis, to_falling_factorial_basis};
pub use monomial::Monomial;
pub(crate) use parse::{Parser, TokenKind};
pub use polynomial::Polynomial;
pub use series::TruncatedSeries;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// Exact rational coefficient.
pub type Rational = BigRational;

/// A named indeterminate. Symbols compare by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol(Arc<str>);

impl Symbol {
    /// Panics on an empty name; every symbol needs a printable identifier.
    pub fn new(name: &str) -> Self {
        assert!(!name.is_empty(), "symbol names must be nonempty");
        Symbol(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Symbol {
    fn from(name: &str) -> Self {
        Symbol::new(name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
