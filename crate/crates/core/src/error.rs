use thiserror::Error;

use crate::point::Plane;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point set is empty")]
    EmptySet,

    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("plane mismatch: expected {expected}, found {found}")]
    PlaneMismatch { expected: Plane, found: Plane },

    #[error("distance {0} is not attainable in this plane")]
    UnattainableDistance(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    #[error("points share a real part, so the line between them is undefined")]
    UndefinedLine,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("statistic `{statistic}` is not defined for the {plane} plane")]
    InvalidStatistic { statistic: String, plane: Plane },

    #[error("cannot fit exponent: {0}")]
    Fit(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
