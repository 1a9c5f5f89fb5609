use thiserror::Error;

/// Errors raised by the algebra engine and its input layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("structural mismatch: {0}")]
    Structure(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("line {line}: {msg}")]
    Input { line: usize, msg: String },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("undefined for the zero module: {0}")]
    ZeroModule(&'static str),

    #[error(
        "generic sampling exhausted {attempts} attempts; prefix {prefix} of {module} not certified"
    )]
    Sampling {
        attempts: usize,
        prefix: usize,
        module: String,
    },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("{name}: {source}")]
    Entry { name: String, source: Box<Error> },
}

pub type Result<T> = std::result::Result<T, Error>;
