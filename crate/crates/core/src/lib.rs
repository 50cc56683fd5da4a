//! Exact construction of the first-order holomorphic differential operators
//! realizing a semisimple Lie algebra on a coherent-state orbit `G/P`, with
//! independent symbolic and matrix verification.

pub mod bernoulli;
pub mod error;
pub mod exactalg;
pub mod oracle;
pub mod par;
pub mod realization;
pub mod rootsys;

pub use error::{Error, Result};
pub use par::Exec;
