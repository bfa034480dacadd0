use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A numeric argument is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// A tile needs at least two distinct directions.
    #[error("degenerate tile: {0}")]
    DegenerateTile(String),
    /// The incidence data of a complex is inconsistent.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// A caller broke a documented precondition.
    #[error("contract violation: {0}")]
    ContractViolation(String),
    /// A tiling document could not be decoded.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! integrity {
    ($($arg:tt)*) => {
        $crate::error::Error::Integrity(format!($($arg)*))
    };
}

pub(crate) use integrity;
