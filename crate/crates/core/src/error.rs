//! Error taxonomy shared by the whole workbench.
//!
//! `Input` covers malformed or contract-violating arguments (bad tables,
//! out-of-range indices, maps that fail their algebraic laws). `Capability`
//! covers requests that are well-formed but outside the supported bounds
//! (group orders, enumeration sizes).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("capability error: {0}")]
    Capability(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub fn is_input(&self) -> bool {
        matches!(self, Error::Input(_))
    }
}
