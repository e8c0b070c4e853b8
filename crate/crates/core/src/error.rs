use thiserror::Error;

/// Errors raised by the algebra kernel and the verification harnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible coefficient fields: {0}")]
    IncompatibleField(String),
    #[error("polynomials belong to different rings")]
    IncompatibleRing,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("leading term of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("monomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("{q} is not a power of the characteristic {p}")]
    InvalidBracketPower { q: u64, p: u32 },
    #[error("unsupported elimination: {0}")]
    UnsupportedElimination(String),
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("unknown certificate pair ({0}, {1})")]
    UnknownPair(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
