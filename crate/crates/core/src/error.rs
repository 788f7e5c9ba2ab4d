use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix does not preserve the symplectic form")]
    NotSymplectic,

    #[error("integer overflow during exact arithmetic")]
    Overflow,

    #[error("{0} is not a supported prime (expected a prime <= 13)")]
    NotPrime(u32),

    #[error("genus {found} is too small, need at least {required}")]
    GenusTooSmall { required: usize, found: usize },

    #[error("invalid curve {name}: {reason}")]
    InvalidCurve { name: String, reason: &'static str },

    #[error("unknown curve {0} in the active configuration")]
    UnknownCurve(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no matrix assigned to generator {0}")]
    UnassignedSymbol(String),

    #[error("cannot parse token `{token}` at byte {position}")]
    Parse { position: usize, token: String },

    #[error("chain of length {length} cannot be instantiated in genus {genus}")]
    ChainDoesNotFit { length: usize, genus: usize },

    #[error("construction of {0} failed: no candidate satisfied every constraint")]
    ConstructionFailed(String),

    #[error("mod-{prime} matrices of size {size} do not fit the packed encoding")]
    EncodingTooLarge { prime: u32, size: usize },
}
