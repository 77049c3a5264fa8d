use thiserror::Error;

use crate::ring::Symbol;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate rule for symbol `{0}`")]
    DuplicateRule(Symbol),

    #[error("grammar has no rules")]
    EmptyGrammar,

    #[error("series variables differ: `{0}` vs `{1}`")]
    VariableMismatch(Symbol, Symbol),

    #[error("coefficient contains the series variable `{0}`")]
    VariableInCoefficient(Symbol),

    #[error("exp of a series needs a zero constant term")]
    NonZeroConstantTerm,

    #[error("polynomial is not free of `{0}` in its coefficients")]
    NotUnivariate(Symbol),

    #[error("unsupported generation semantics: {0}")]
    UnsupportedGeneration(String),

    #[error("invalid generation sequence {0:?}: {1}")]
    InvalidSequence(Vec<u32>, String),

    #[error("invalid contraction: {0}")]
    InvalidContraction(String),

    #[error("word `{0}` is not of the form (ca)^n")]
    NotCaPower(String),

    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),

    #[error("non-integral value where an integer was expected: {0}")]
    NonIntegral(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("invalid Ferrers board: {0}")]
    InvalidBoard(String),
}
