use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sample is empty after dropping {dropped} non-finite value(s)")]
    EmptySample { dropped: usize },

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("sample has zero spread")]
    DegenerateVariance,

    #[error("bandwidth must be a positive finite number, got {0}")]
    InvalidBandwidth(f64),

    #[error("invalid bin rule: {0}")]
    InvalidBinRule(String),

    #[error("grid needs at least 2 points, got {0}")]
    InvalidGrid(usize),

    #[error("need at least {needed} observations, got {got}")]
    TooFewObservations { needed: usize, got: usize },

    #[error("figure has no panels")]
    EmptyFigure,

    #[error("panel `{0}` appears more than once")]
    DuplicatePanel(&'static str),

    #[error("invalid canvas: {0}")]
    InvalidCanvas(String),

    #[error("panel {panel} has a primitive outside the shared axis range")]
    OutOfRange { panel: usize },
}
