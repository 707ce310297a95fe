use std::path::PathBuf;

/// Errors raised across the library.
///
/// `Invariant` is reserved for internal consistency failures (a bug in this
/// crate, not bad input); the CLI maps it to exit code 2 while every other
/// variant maps to exit code 1.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed representation: {0}")]
    Malformed(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("oracle capacity exceeded: n={n} is over the cap {cap}")]
    Capacity { n: usize, cap: usize },

    #[error("parity error: {0}")]
    Parity(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
