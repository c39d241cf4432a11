use thiserror::Error;

use crate::int::Int;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("syntax error at line {line}, column {column} (offset {offset}): {message}")]
    Syntax {
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unbound variable `{0}`")]
    Unbound(String),

    #[error("evaluation error: {0}")]
    Eval(String),

    #[error("enumeration budget exceeded: {requested} points requested, limit is {limit}")]
    Budget { requested: Int, limit: u64 },
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
