use thiserror::Error;

/// Errors raised by parsers, reductions and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{message} at line {line}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("set index {index} out of range (m={m})")]
    IndexOutOfRange { index: usize, m: usize },

    #[error("set index {0} chosen more than once")]
    DuplicateIndex(usize),

    /// `element` is 1-based, as in the file formats.
    #[error("element {element} has frequency {frequency}, above the bound {bound}")]
    FrequencyExceeded {
        element: usize,
        frequency: usize,
        bound: usize,
    },

    #[error("element {element} belongs to no set")]
    UncoverableElement { element: usize },

    #[error("frequency ratio p_min/m = {ratio} is below alpha = {alpha}")]
    AlphaViolated { ratio: f64, alpha: f64 },

    #[error("enumeration of {count} subsets exceeds the ceiling of {ceiling}")]
    CeilingExceeded { count: u128, ceiling: u128 },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn param(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
