use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} is out of range {min}..={max}")]
    Range {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("ring size mismatch: {left} vs {right}")]
    Ring { left: usize, right: usize },

    #[error("invalid structure: {0}")]
    Structure(String),

    #[error("no value assigned to variable {0}")]
    Eval(String),

    #[error("invalid word query: {0}")]
    Query(String),

    #[error("parse error: {0}")]
    Parse(String),
}
