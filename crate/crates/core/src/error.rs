use thiserror::Error;

/// Errors raised by the algebra, matrix and geometry routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("negative exponent on non-laurent generator `{0}`")]
    NegativeExponent(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("ring signatures do not match")]
    SignatureMismatch,
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("parity misuse: {0}")]
    ParityMisuse(String),
    #[error("expression too large: {terms} terms exceeds the limit of {limit}")]
    TooLarge { terms: usize, limit: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("membership error: {0}")]
    MembershipError(String),
    #[error("supertranspose convention does not reproduce the defining equations")]
    ConventionMismatch,
    #[error("not an algebra automorphism: {0}")]
    NotAutomorphism(String),
    #[error("no column of the first idempotent has an invertible entry")]
    DegenerateIdempotent,
    #[error("point does not lie in chart {0}")]
    ChartMiss(usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not a unit of the Laurent ring: {0}")]
    NotUnit(String),
    #[error("trivialization is not regular: {0}")]
    RegularityFailure(String),
    #[error("derivation is not odd")]
    NotOdd,
    #[error("derivations live on different charts ({0} vs {1})")]
    ChartMismatch(usize, usize),
    #[error("characteristic {p} too small for a series of length {needed}")]
    FieldTooSmall { p: u64, needed: usize },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
