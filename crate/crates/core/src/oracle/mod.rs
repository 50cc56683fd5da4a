//! Independent checks of realizations.

mod bracket;
mod cross;
mod matrix;
mod report;

pub use bracket::bracket_check;
pub use cross::cross_check;
pub use matrix::{matrix_check, MatrixRep, RationalMatrix};
pub use report::{CheckResult, VerificationReport};

#[cfg(test)]
mod tests;
