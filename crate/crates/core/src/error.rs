use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix must be square with dimension >= 1")]
    NotSquare,

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("tolerance {0} outside (0, 1e-3)")]
    InvalidTolerance(f64),

    #[error("matrix is not Hermitian (|A - A^H|_F = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("indicators live on different phase spaces")]
    SpaceMismatch,

    #[error("phase space must contain at least one point")]
    EmptySpace,

    #[error("phase space point {0} duplicates an earlier point")]
    DuplicatePoint(usize),

    #[error("point index {index} out of range for a space of {len} points")]
    PointIndexOutOfRange { index: usize, len: usize },

    #[error("point is not in the phase space")]
    PointNotInSpace,

    #[error("energy threshold must be positive, got {0}")]
    NonpositiveThreshold(f64),

    #[error("cells {0} and {1} overlap")]
    CellsOverlap(usize, usize),

    #[error("cells do not cover the whole space / sum to the identity")]
    Incomplete,

    #[error("cell {0} is empty")]
    EmptyCell(usize),

    #[error("a decomposition needs at least one cell")]
    NoCells,

    #[error("cell {0} is not a projector")]
    NotProjector(usize),

    #[error("mask has {found} bits but the algebra has {expected} cells")]
    MaskLengthMismatch { expected: usize, found: usize },

    #[error("cell index {index} out of range for {cells} cells")]
    CellIndexOutOfRange { index: usize, cells: usize },

    #[error("property is not in the algebra: it cuts cell {cell}")]
    NotInAlgebra { cell: usize },

    #[error("projector does not commute with cell {cell}")]
    NoncommutingProjector { cell: usize },

    #[error("observables {first} and {second} do not commute")]
    NoncommutingFamily { first: usize, second: usize },

    #[error("{cells} cells exceed the limit of {max} for this operation")]
    TooLarge { cells: usize, max: usize },

    #[error("sign assignment entries must be +1 or -1")]
    InvalidSign,

    #[error("construction failed: {0}")]
    ConstructionFailure(String),

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
