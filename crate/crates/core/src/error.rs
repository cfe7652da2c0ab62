use thiserror::Error;

/// Errors raised by the engines. Mathematical verdicts (a bound failing, a
/// search coming up empty) are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("empty sequence")]
    EmptySequence,

    #[error("index of empty sequence undefined")]
    EmptyIndex,

    #[error("m(S) defined for prime modulus only")]
    CompositeModulus,

    #[error("d must divide n")]
    DivisorMismatch,

    #[error("family requires n=4k+2, k≥5")]
    NotInFamily,

    #[error("term outside partition: {0}")]
    OutsidePartition(u64),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("half-set scan requires p ≥ 19")]
    PrimeTooSmall,

    #[error("invalid argument: {0}")]
    Invalid(String),

    /// A result failed to re-verify. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
