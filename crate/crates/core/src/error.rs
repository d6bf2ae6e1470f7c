use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),

    #[error("invalid parking function: {0}")]
    InvalidParkingFunction(String),

    #[error("resource cap exceeded: {count} vertices > cap {cap}")]
    CapExceeded { count: u128, cap: usize },

    #[error("path {0} is not an element of this poset")]
    NotInPoset(String),

    #[error("{lower} is not below {upper}")]
    Incomparable { lower: String, upper: String },

    #[error("lattice property violated: {0}")]
    LatticeViolation(String),

    #[error("the size-0 interval has no decomposition")]
    EmptyInterval,

    #[error("invalid pointed interval: {0}")]
    InvalidPointed(String),

    #[error("denominator failed to cancel: {0}")]
    Cancellation(String),

    #[error("{0}")]
    Pole(String),

    #[error("power-sum window exhausted: need exponents in [{lo}, {hi}]")]
    WindowExhausted { lo: i32, hi: i32 },

    #[error("not a polynomial in v: {0}")]
    NotPolynomialInV(String),

    #[error("interpolation points are not pairwise distinct (or zero where forbidden)")]
    RepeatedPoints,

    #[error("series truncated at order {have}, need {need}")]
    InsufficientTruncation { have: usize, need: usize },

    #[error("verification mismatch: {0}")]
    Mismatch(String),
}
