use thiserror::Error;

/// Broad classes of failure, used by the command line to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Domain,
    Resource,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("a prime factor exceeds the factorization bound {bound}")]
    FactorBoundExceeded { bound: u64 },

    #[error("valuation not determined at precision {precision} for p = {prime}")]
    InsufficientPrecision { prime: u64, precision: u32 },

    #[error("precision must be positive")]
    ZeroPrecision,

    #[error("p-adic prime mismatch: expected {expected}, found {found}")]
    PrimeMismatch { expected: u64, found: u64 },

    #[error("zero is not a valid precomposition unit")]
    ZeroPrecompose,

    #[error("twist residue {residue} is not a unit modulo {prime}^{exponent}")]
    InvalidTwist {
        prime: u64,
        exponent: u32,
        residue: u64,
    },

    #[error("dimension {0} must be odd and at least 3")]
    InvalidDimension(u32),

    #[error("complex projective dimension must be at least 1")]
    InvalidProjectiveDimension,

    #[error("descriptor has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: u32, found: u32 },

    #[error("fingerprint search at p = {prime} did not stabilize below cap {cap}")]
    FingerprintCap { prime: u64, cap: u32 },

    #[error("enumeration would produce {count} descriptors, above the limit {limit}")]
    EnumerationTooLarge { count: String, limit: u64 },

    #[error("height {0} overflows")]
    HeightOverflow(String),

    #[error("unknown complex tag {0:?}")]
    UnknownComplex(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::UnknownComplex(_) => ErrorKind::Parse,
            Error::FactorBoundExceeded { .. }
            | Error::FingerprintCap { .. }
            | Error::EnumerationTooLarge { .. } => ErrorKind::Resource,
            _ => ErrorKind::Domain,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
