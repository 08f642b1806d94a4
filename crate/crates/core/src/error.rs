use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("axis index {index} out of range for dimension {dim}")]
    AxisOutOfRange { index: usize, dim: usize },

    #[error("zero input: {0}")]
    ZeroInput(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("infinite colength: {0}")]
    InfiniteColength(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}
