use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("assignment is missing variable `{0}`")]
    MissingVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("generator #{index} is not homogeneous: {poly}")]
    Inhomogeneous { index: usize, poly: String },

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("label `{0}` is not in the basis")]
    MissingLabel(String),

    #[error("basis has {labels} labels but {weights} weights")]
    LengthMismatch { labels: usize, weights: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
