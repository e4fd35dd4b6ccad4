use thiserror::Error;

/// Errors produced by the depth pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },

    #[error("point set is empty")]
    Empty,

    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("point already present in the triangulation as vertex {existing}")]
    DuplicateInsert { existing: usize },

    #[error("need at least 3 points for a triangulation, got {0}")]
    TooFewPoints(usize),

    #[error("degenerate input: all points are collinear")]
    Collinear,

    #[error("degenerate triple: the three points are collinear")]
    DegenerateTriple,

    #[error("in_circle requires a counterclockwise triple")]
    NotCounterclockwise,

    #[error("degenerate input: points {0:?} are cocircular")]
    Cocircular([usize; 4]),

    #[error("level {level} out of range 2..={max}")]
    LevelOutOfRange { level: u32, max: u32 },

    #[error("gadget value {0} must be positive and finite")]
    Domain(f64),

    #[error("parameter {name} = {value} out of range (minimum {min})")]
    Range {
        name: &'static str,
        value: usize,
        min: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Degenerate-input errors are surfaced by the CLI with a dedicated exit status.
    pub fn is_degenerate_input(&self) -> bool {
        matches!(
            self,
            Error::Collinear | Error::TooFewPoints(_) | Error::DegenerateTriple | Error::Cocircular(_) | Error::Empty
        )
    }
}
