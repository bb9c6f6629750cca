use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse permutation `{input}`: {reason}")]
    ParsePermutation { input: String, reason: String },

    #[error("cannot parse pattern `{input}`: {reason}")]
    ParsePattern { input: String, reason: String },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{k} is not coprime to {modulus}")]
    NotCoprime { k: u64, modulus: u64 },

    #[error("n = {n} exceeds the enumeration budget (max {max})")]
    BudgetExceeded { n: usize, max: usize },

    #[error("tableaux have different shapes")]
    ShapeMismatch,

    #[error("tableau is not standard: {0}")]
    NotStandard(String),

    #[error("pattern does not occur")]
    NoOccurrence,

    #[error("relation `{0}` does not extend to patterns")]
    RelationNotExtendable(&'static str),

    #[error("unknown relation `{0}`")]
    UnknownRelation(String),

    #[error("unknown sequence id `{0}`")]
    UnknownSequence(String),

    #[error("internal assertion failed: {0}")]
    Assertion(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
