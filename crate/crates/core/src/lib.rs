pub mod bijections;
pub mod error;
pub mod grammar;
pub mod numbers;
pub mod ring;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use grammar::Grammar;
pub use ring::{Monomial, Polynomial, Symbol, TruncatedSeries};
pub use weyl::{Contraction, NormalForm, WeylWord};
