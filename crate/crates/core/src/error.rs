use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GemError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("code parse error at row {row}, position {position}: {message}")]
    Parse {
        row: usize,
        position: usize,
        message: String,
    },
}

impl GemError {
    pub(crate) fn invalid_argument(msg: impl Into<String>) -> Self {
        GemError::InvalidArgument(msg.into())
    }

    pub(crate) fn invalid_graph(msg: impl Into<String>) -> Self {
        GemError::InvalidGraph(msg.into())
    }
}

pub type Result<T, E = GemError> = std::result::Result<T, E>;
