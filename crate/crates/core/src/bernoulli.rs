//! Taylor coefficients `c_k` of `x/(1 − e^{−x})` and the companion `d_k`,
//! generated exactly from their convolution recursions.
//!
//! `c` solves `1/n! = Σ_{k≤n} c_k/(n−k+1)!`; `d` solves
//! `1/(n+2)! = Σ_{k≤n} d_k/(n−k+1)!`. The closed relation `d_k = (−1)^k c_{k+1}`
//! is checked on every construction.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{factorial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffTable {
    #[serde(serialize_with = "ser_rationals")]
    c: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    d: Vec<Rational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

/// `c_0..c_{len−1}` and `d_0..d_{len−2}`.
pub fn coeff_table(len: usize) -> Result<CoeffTable> {
    if len < 1 {
        return Err(Error::Argument(format!(
            "coefficient table length must be at least 1, got {len}"
        )));
    }
    let c = solve_convolution(len, |n| factorial(n).recip());
    let d = solve_convolution(len - 1, |n| factorial(n + 2).recip());
    for (k, dk) in d.iter().enumerate() {
        let closed = if k % 2 == 0 { c[k + 1].clone() } else { -c[k + 1].clone() };
        if *dk != closed {
            return Err(Error::CoeffMismatch(format!(
                "d_{k} = {dk} from its recursion but (-1)^k c_{} = {closed}",
                k + 1
            )));
        }
    }
    Ok(CoeffTable { c, d })
}

/// Solves `rhs(n) = Σ_{k≤n} x_k/(n−k+1)!` for `x_0..x_{len−1}`, a unit
/// lower-triangular system.
fn solve_convolution(len: usize, rhs: impl Fn(usize) -> Rational) -> Vec<Rational> {
    let mut x: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        let mut v = rhs(n);
        for (k, xk) in x.iter().enumerate() {
            v -= xk / factorial(n - k + 1);
        }
        x.push(v);
    }
    x
}

impl CoeffTable {
    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }

    pub fn d(&self) -> &[Rational] {
        &self.d
    }

    /// `c_k`, zero past the end of the table.
    pub fn c_at(&self, k: usize) -> Rational {
        self.c.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn d_at(&self, k: usize) -> Rational {
        self.d.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `B_k = (−1)^{k−1} (2k)! c_{2k}` in the convention `B_1 = 1/6, B_2 = 1/30`.
    pub fn bernoulli(&self, k: usize) -> Option<Rational> {
        if k == 0 || 2 * k >= self.c.len() {
            return None;
        }
        let b = &self.c[2 * k] * factorial(2 * k);
        Some(if k % 2 == 1 { b } else { -b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    #[test]
    fn leading_values() {
        let t = coeff_table(9).unwrap();
        assert_eq!(t.c()[0], int(1));
        assert_eq!(t.c()[1], rat(1, 2));
        assert_eq!(t.c()[2], rat(1, 12));
        assert_eq!(t.c()[3], int(0));
        assert_eq!(t.c()[4], rat(-1, 720));
        assert_eq!(t.d()[0], rat(1, 2));
        assert_eq!(t.d()[1], rat(-1, 12));
        assert_eq!(t.d().len(), 8);
    }

    #[test]
    fn length_one_is_valid_and_zero_is_not() {
        let t = coeff_table(1).unwrap();
        assert_eq!(t.c(), &[int(1)]);
        assert!(t.d().is_empty());
        assert!(matches!(coeff_table(0), Err(Error::Argument(_))));
    }

    #[test]
    fn odd_coefficients_vanish() {
        let t = coeff_table(30).unwrap();
        for k in 1..15 {
            assert!(t.c()[2 * k + 1].is_zero(), "c_{}", 2 * k + 1);
        }
    }

    #[test]
    fn out_of_range_reads_zero() {
        let t = coeff_table(3).unwrap();
        assert!(t.c_at(10).is_zero());
        assert!(t.d_at(2).is_zero());
        assert_eq!(t.bernoulli(1), Some(rat(1, 6)));
        assert_eq!(t.bernoulli(2), None);
    }

    #[test]
    fn fourth_bernoulli_number_is_one_thirtieth() {
        // 1/30, not 1/300
        let t = coeff_table(9).unwrap();
        assert_eq!(t.bernoulli(4), Some(rat(1, 30)));
        assert_eq!(t.c()[8], rat(-1, 1209600));
    }
}
