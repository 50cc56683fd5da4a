//! First-order differential operators `P + Σ Q_i ∂_i` with polynomial
//! coefficients. Only coordinate variables of the ring carry derivatives.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::One;

use super::poly::{Polynomial, VarSet};
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    scalar: Polynomial,
    derivs: BTreeMap<usize, Polynomial>,
}

impl DiffOp {
    pub fn zero(nvars: usize) -> Self {
        DiffOp {
            scalar: Polynomial::zero(nvars),
            derivs: BTreeMap::new(),
        }
    }

    pub fn multiplication(p: Polynomial) -> Self {
        DiffOp {
            scalar: p,
            derivs: BTreeMap::new(),
        }
    }

    /// The operator `∂_i`.
    pub fn partial(nvars: usize, i: usize) -> Self {
        let mut d = Self::zero(nvars);
        d.add_derivative(i, &Polynomial::one(nvars));
        d
    }

    pub fn new(scalar: Polynomial, derivs: impl IntoIterator<Item = (usize, Polynomial)>) -> Self {
        let mut d = Self::multiplication(scalar);
        for (i, q) in derivs {
            d.add_derivative(i, &q);
        }
        d
    }

    pub fn nvars(&self) -> usize {
        self.scalar.nvars()
    }

    pub fn scalar(&self) -> &Polynomial {
        &self.scalar
    }

    pub fn derivatives(&self) -> &BTreeMap<usize, Polynomial> {
        &self.derivs
    }

    pub fn derivative_coeff(&self, i: usize) -> Polynomial {
        self.derivs
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.nvars()))
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.derivs.is_empty()
    }

    pub fn add_scalar(&mut self, p: &Polynomial) {
        self.scalar += p;
    }

    pub fn add_derivative(&mut self, i: usize, q: &Polynomial) {
        if q.is_zero() {
            return;
        }
        let slot = self
            .derivs
            .entry(i)
            .or_insert_with(|| Polynomial::zero(q.nvars()));
        *slot += q;
        if slot.is_zero() {
            self.derivs.remove(&i);
        }
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        let p = Polynomial::constant(self.nvars(), c.clone());
        self.mul_poly(&p)
    }

    /// Left multiplication by a polynomial.
    pub fn mul_poly(&self, p: &Polynomial) -> DiffOp {
        let mut out = Self::multiplication(&self.scalar * p);
        for (&i, q) in &self.derivs {
            out.add_derivative(i, &(q * p));
        }
        out
    }

    /// The derivation part `Σ Q_i ∂_i` applied to `f`.
    pub fn derive(&self, f: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars());
        for (&i, q) in &self.derivs {
            let df = f.derivative(i);
            if !df.is_zero() {
                out += &(q * &df);
            }
        }
        out
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        &(&self.scalar * f) + &self.derive(f)
    }

    /// `[self, other] = self∘other − other∘self`; the second-order parts cancel,
    /// so the result is again first order.
    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        let scalar = &self.derive(&other.scalar) - &other.derive(&self.scalar);
        let mut out = Self::multiplication(scalar);
        let keys: std::collections::BTreeSet<usize> = self
            .derivs
            .keys()
            .chain(other.derivs.keys())
            .copied()
            .collect();
        for i in keys {
            let a = self.derive(&other.derivative_coeff(i));
            let b = other.derive(&self.derivative_coeff(i));
            out.add_derivative(i, &(&a - &b));
        }
        out
    }

    /// Applies `f` to every coefficient polynomial.
    pub fn map_coeffs(&self, f: impl Fn(&Polynomial) -> Polynomial) -> DiffOp {
        let mut out = Self::multiplication(f(&self.scalar));
        for (&i, q) in &self.derivs {
            out.add_derivative(i, &f(q));
        }
        out
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> DiffOpDisplay<'a> {
        DiffOpDisplay {
            op: self,
            vars,
            latex: false,
        }
    }

    pub fn latex<'a>(&'a self, vars: &'a VarSet) -> DiffOpDisplay<'a> {
        DiffOpDisplay {
            op: self,
            vars,
            latex: true,
        }
    }
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        out.add_scalar(&rhs.scalar);
        for (&i, q) in &rhs.derivs {
            out.add_derivative(i, q);
        }
        out
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        self + &(-rhs)
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        self.map_coeffs(|p| -p)
    }
}

pub struct DiffOpDisplay<'a> {
    op: &'a DiffOp,
    vars: &'a VarSet,
    latex: bool,
}

impl fmt::Display for DiffOpDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        // derivative terms in coordinate order, scalar last
        for (&i, q) in &self.op.derivs {
            let d = if self.latex {
                let name = self.vars.latex_name(i);
                let sub = name
                    .strip_prefix("z_")
                    .map(str::to_string)
                    .unwrap_or_else(|| format!("{{{name}}}"));
                format!("\\partial_{sub}")
            } else {
                format!("d/d{}", self.vars.name(i))
            };
            let coeff = if self.latex {
                q.latex(self.vars).to_string()
            } else {
                q.display(self.vars).to_string()
            };
            if q.as_constant().is_some_and(|c| c.is_one()) {
                parts.push(d);
            } else if self.latex {
                parts.push(format!("\\left({coeff}\\right) {d}"));
            } else {
                parts.push(format!("({coeff})*{d}"));
            }
        }
        if !self.op.scalar.is_zero() {
            parts.push(if self.latex {
                self.op.scalar.latex(self.vars).to_string()
            } else {
                self.op.scalar.display(self.vars).to_string()
            });
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, part) in parts.iter().enumerate() {
            match (k, part.strip_prefix('-')) {
                (0, _) => out.push_str(part),
                (_, Some(rest)) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                (_, None) => {
                    out.push_str(" + ");
                    out.push_str(part);
                }
            }
        }
        f.write_str(&out)
    }
}
