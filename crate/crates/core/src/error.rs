use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("cell ({row},{col}) is not in the diagram of {shape}")]
    CellOutOfDiagram { row: usize, col: usize, shape: String },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("size {size} exceeds the enumeration cap {cap}")]
    EnumerationCap { size: usize, cap: usize },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("malformed Dyck path: {0}")]
    MalformedPath(String),

    #[error("malformed filling: {0}")]
    MalformedFilling(String),

    #[error("not Schur-positive: {0}")]
    NotSchurPositive(String),

    #[error("horizon {horizon} is too small (needs at least {needed})")]
    HorizonTooSmall { horizon: usize, needed: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("singular matrix while inverting {0}")]
    Singular(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for the two resource-cap errors.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::DegreeCap { .. } | Error::EnumerationCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
