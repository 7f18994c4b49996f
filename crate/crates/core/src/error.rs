use alloc::string::String;

/// Errors raised by the exact kernel, the combinatorics and the representation
/// machinery. Verification failures are never errors; they are reported as data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under the binding {binding}")]
    Pole { binding: String },
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid skew shape: {0}")]
    InvalidShape(String),
    #[error("{0} is not a horizontal strip")]
    NotHorizontalStrip(String),
    #[error("cell ({row},{col}) lies outside {partition}")]
    CellOutside { row: u32, col: u32, partition: String },
    #[error("B_0 is not a generator of the Heisenberg algebra")]
    ZeroGenerator,
    #[error("Heisenberg parameter a_{k} vanishes")]
    ZeroParameter { k: u32 },
    #[error("degree {degree} exceeds the configured degree cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("incompatible representations: {0}")]
    Mismatch(String),
    #[error("representation has no designated highest weight vector")]
    NoHighestWeight,
    #[error("matrix bundle: {0}")]
    Bundle(String),
    #[error("singular matrix")]
    Singular,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;
