use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input data.
    Validation,
    /// Well-formed input that falls outside the mathematical range of an operation.
    Precondition,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{location}: {message}")]
    Descriptor { location: String, message: String },

    #[error("unknown basis element #{0}")]
    UnknownBasis(usize),

    #[error("division by a power series with zero constant term")]
    ZeroConstantTerm,

    #[error("total class must have constant term 1")]
    NonUnitConstantTerm,

    #[error("class is zero")]
    ZeroClass,

    #[error("class is not homogeneous")]
    NotHomogeneous,

    #[error("no class x of degree {degree} with x·c = u_M: the pairing against c is degenerate")]
    DegeneratePairing { degree: i64 },

    #[error("class is not divisible by the sphere generator u_{0}")]
    NotSphereMultiple(u32),

    #[error("ring has no sphere factor")]
    NotSphereExtension,

    #[error("d+k = {0} not divisible by 4")]
    Parity(u32),

    #[error("no nonvanishing Pontryagin class")]
    NoPontryagin,

    #[error("degenerate index range: j = {j} is not below m = {m}")]
    DegenerateRange { j: u32, m: u32 },

    #[error("k must be at least 1")]
    ZeroK,

    #[error("lambda must be nonzero")]
    ZeroLambda,

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("dimension bound violated: {0}")]
    DimensionBound(String),
}

impl Error {
    pub fn descriptor(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Descriptor {
            location: location.into(),
            message: message.into(),
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Descriptor { .. } | Error::UnknownBasis(_) | Error::ZeroLambda => {
                ErrorKind::Validation
            }
            _ => ErrorKind::Precondition,
        }
    }
}
