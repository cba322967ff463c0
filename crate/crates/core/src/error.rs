use thiserror::Error;

use crate::var::Var;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(String, String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("zero factor in a denominator")]
    ZeroDenominator,

    #[error("pole at the origin")]
    PoleAtOrigin,

    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,

    #[error("insufficient terms: need {needed}, have {have}")]
    InsufficientTerms { needed: usize, have: usize },

    #[error("invalid sequence specification: {0}")]
    InvalidSequence(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unexpected variable {0}")]
    UnexpectedVariable(Var),

    #[error("expression is not a polynomial")]
    NotPolynomial,

    #[error("denominator factors are not pairwise coprime")]
    NotCoprime,

    #[error("degenerate pole configuration: {0}")]
    DegeneratePole(String),

    #[error("kept pole factor has multiplicity {0}; only simple factors are supported")]
    RepeatedPole(u32),

    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("expected a {expected} generating function")]
    WrongArity { expected: &'static str },
}
