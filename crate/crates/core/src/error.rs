use thiserror::Error;

/// Errors raised at the library's API boundaries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected n = {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension n = {0} (need 1 <= n <= 64)")]
    InvalidDimension(usize),

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("index set {set} is not contained in the zero set {zero_set} of alpha")]
    NotSubsetOfZeroSet { set: String, zero_set: String },

    #[error("level j = {j} out of range 0..={max}")]
    LevelOutOfRange { j: i64, max: usize },

    #[error("x^{exps} does not lie in {module}")]
    NotAMember { exps: String, module: String },

    #[error("generator test undefined: {0}")]
    UndefinedGenerator(String),

    #[error("ladder precondition violated: {0}")]
    LadderPrecondition(String),

    #[error("input polynomial is zero")]
    ZeroInput,

    #[error("exponent {0} lies outside the window")]
    OutsideWindow(String),

    #[error("not a case asserted indecomposable: {0}")]
    NotAssertedCase(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
