use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} must be positive")]
    Zero(&'static str),

    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u128, modulus: u128 },

    #[error("invalid weight vector ({w1},{w2}): {reason}")]
    InvalidWeights { w1: u64, w2: u64, reason: String },

    #[error("invalid base manifold: {0}")]
    InvalidBase(String),

    #[error("invalid Y^{{p,q}} parameters (p={p}, q={q}): {reason}")]
    InvalidYpq { p: u64, q: u64, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// An internal arithmetic invariant failed. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by the engine.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Overflow(_) | Error::Invariant(_))
    }
}
