use thiserror::Error;

/// Errors raised by the algebra engine and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("Groebner budget exceeded after {pairs} pair reductions (S-polynomial degree {degree})")]
    BudgetExceeded { pairs: usize, degree: u32 },

    #[error("ideal is not m-primary ({0})")]
    NotMPrimary(String),

    #[error("ideal is not monomial")]
    NotMonomial,

    #[error("no stable window of length {window} in the chain up to N_max = {n_max} ({what})")]
    StabilizationBudgetExceeded { what: String, n_max: usize, window: usize },

    #[error("stability index cross-check failed: rho = {rho}, rho_x = {rho_x}")]
    CrossCheckMismatch { rho: usize, rho_x: usize },

    #[error("no superficial element found after {trials} draws; best candidate failed: {reason}")]
    NoSuperficialFound { trials: usize, reason: String },

    #[error("Hilbert polynomial anchor not found below N_max = {n_max}")]
    AnchorNotFound { n_max: usize },

    #[error("not a reduction within n_max = {0}")]
    NotAReduction(usize),

    #[error("reduction sampling exhausted: {0}")]
    SamplingExhausted(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// Positioned parse failure (1-based line and column).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {line}:{col}: expected {expected}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: String,
}

pub type Result<T> = std::result::Result<T, Error>;
