use thiserror::Error;

/// Errors shared across the crate. Every fallible operation reports which
/// precondition it found violated rather than panicking, so callers (the CLI
/// in particular) can surface the problem to the user.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// The two terminals coincide, so no axis direction is defined.
    #[error("terminals coincide; cannot normalize")]
    DegenerateTerminals,

    /// Two input points are exactly equal; index-based identity requires
    /// pairwise distinct points.
    #[error("duplicate points at indices {0} and {1}")]
    DuplicatePoints(usize, usize),

    /// A point index does not refer to the point set it was used with.
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    /// A structure that requires at least one member was built over none.
    #[error("cannot build an index over an empty set")]
    EmptySet,

    /// The dual map is undefined on the terminal axis (x = 0), and indexed
    /// points must lie strictly to its right.
    #[error("point {0} lies on or left of the terminal axis (x = {1})")]
    OnAxis(usize, f64),

    /// A dual query point must lie strictly left of the terminal axis.
    #[error("query point has x = {0}; expected x < 0")]
    WrongSide(f64),

    /// A terminal lies inside one of the disks, so no subset of disks can
    /// separate the terminals.
    #[error("a terminal is covered by the disk centered at point {0}")]
    TerminalCovered(usize),

    /// Exhaustive search is restricted to very small inputs.
    #[error("input of {0} points exceeds the exhaustive-search limit of {1}")]
    TooLarge(usize, usize),

    /// Requested domain dimensions do not admit the requested holes.
    #[error("invalid domain dimensions: {0}")]
    InvalidDimensions(String),

    /// An instance file could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
