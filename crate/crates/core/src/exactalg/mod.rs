//! Exact algebra: rationals, polynomials, first-order differential operators,
//! and Lie-algebra elements with polynomial coefficients.

pub mod diffop;
pub mod lie;
pub mod poly;
pub mod rational;

pub use diffop::DiffOp;
pub use lie::{ad_action, ad_power_series, ad_powers, exp_coeffs, LieAlgebra, LiePoly};
pub use poly::{Monomial, Polynomial, VarSet};
pub use rational::{factorial, int, parse_rational, rat, Rational};
