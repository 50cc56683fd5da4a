use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Lie type {family}{rank}: {constraint}")]
    InvalidLieType {
        family: char,
        rank: usize,
        constraint: &'static str,
    },
    #[error("cannot parse Lie type from {0:?}")]
    ParseLieType(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("adjoint series did not terminate after {0} iterations (input is not nilpotent)")]
    NonNilpotent(usize),
    #[error("coefficient table construction failed: {0}")]
    CoeffMismatch(String),
    #[error("ordering does not span the orbit directions: {0}")]
    Ordering(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
