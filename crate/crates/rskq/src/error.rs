use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero multisegment")]
    ZeroMultisegment,
    #[error("operation is undefined on the zero weight")]
    ZeroWeight,
    #[error("segment [{b},{e}] requires b <= e")]
    InvalidSegment { b: i32, e: i32 },
    #[error("enumeration cap exceeded (height {height}, cap {cap})")]
    CapExceeded { height: u32, cap: u32 },
    #[error("pair (ladder, multisegment) is not permissible")]
    NotPermissible,
    #[error("invalid permissibility certificate: {0}")]
    InvalidCertificate(String),
    #[error("malformed ladder: {0}")]
    MalformedLadder(String),
    #[error("row and column weights do not balance")]
    WeightMismatch,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
