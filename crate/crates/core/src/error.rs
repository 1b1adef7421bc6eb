use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("triple {0:?} is invalid on {1} vertices: entries must be distinct and < n")]
    InvalidTriple([usize; 3], usize),

    #[error("duplicate triple {0:?}")]
    DuplicateTriple([usize; 3]),

    #[error("pair {0:?} is invalid on {1} vertices: entries must be distinct and < n")]
    InvalidPair([usize; 2], usize),

    #[error("duplicate pair {0:?}")]
    DuplicatePair([usize; 2]),

    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),

    #[error("{0}")]
    InvalidInput(String),

    #[error("unknown family '{0}'; built-ins are K3..K9, K4-, F32, F7, SKs:<s>, FKs:<s>")]
    UnknownFamily(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Stable exit code contract: 2 for usage/parse trouble, 1 for everything
    /// else that reaches the top level.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse { .. } | Error::Io { .. } | Error::UnknownFamily(_) => 2,
            _ => 1,
        }
    }
}
