//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are positional: a [`VarSet`] names them and splits them into
//! coordinates (the `z` directions that derivatives act on) followed by
//! parameters (weight indeterminates). Monomials compare graded-lexicographically
//! with variable 0 most significant.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::{is_integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        self.0[range].iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Names for the variables of a polynomial ring. The first `coords` variables
/// are coordinates, the remainder are parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
    latex: Vec<String>,
    keys: Vec<String>,
    coords: usize,
}

impl VarSet {
    /// `coords` entries are `(text name, latex name, export key)`; parameters are
    /// `(text name, latex name)`.
    pub fn new(coords: Vec<(String, String, String)>, params: Vec<(String, String)>) -> Self {
        let ncoords = coords.len();
        let mut names = Vec::new();
        let mut latex = Vec::new();
        let mut keys = Vec::new();
        for (n, l, k) in coords {
            names.push(n);
            latex.push(l);
            keys.push(k);
        }
        for (n, l) in params {
            keys.push(n.clone());
            names.push(n);
            latex.push(l);
        }
        VarSet {
            names,
            latex,
            keys,
            coords: ncoords,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn coords(&self) -> usize {
        self.coords
    }

    pub fn coord_range(&self) -> std::ops::Range<usize> {
        0..self.coords
    }

    pub fn param_range(&self) -> std::ops::Range<usize> {
        self.coords..self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn latex_name(&self, i: usize) -> &str {
        &self.latex[i]
    }

    /// Export key of a coordinate (the derivative label) or the name of a parameter.
    pub fn key(&self, i: usize) -> &str {
        &self.keys[i]
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn index_of_key(&self, key: &str) -> Option<usize> {
        self.keys[..self.coords].iter().position(|n| n == key)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by a single variable.
    pub fn mul_var(&self, i: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| {
                    let mut m = m.clone();
                    m.0[i] += 1;
                    (m, a.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (m, a) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m = m.clone();
            m.0[i] -= 1;
            out.terms.insert(m, a * Rational::from_integer(e.into()));
        }
        out
    }

    /// Replaces variable `i` by `value`.
    pub fn substitute(&self, i: usize, value: &Polynomial) -> Polynomial {
        assert_eq!(value.nvars, self.nvars);
        let mut out = Self::zero(self.nvars);
        let mut powers: Vec<Polynomial> = vec![Self::one(self.nvars)];
        for (m, a) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[i] = 0;
            let t = Polynomial::term(rest, a.clone());
            out += &(&t * &powers[e]);
        }
        out
    }

    /// Substitutes every variable at once; `values[i] = None` keeps variable `i`.
    pub fn substitute_all(&self, values: &[Option<Polynomial>]) -> Polynomial {
        let mut out = self.clone();
        for (i, v) in values.iter().enumerate() {
            if let Some(v) = v {
                out = out.substitute(i, v);
            }
        }
        out
    }

    /// Re-embeds into a ring with `nvars` variables, mapping variable `i` to `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Polynomial {
        let mut out = Self::zero(nvars);
        for (m, a) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    e[map[i]] += x;
                }
            }
            out.add_term(Monomial(e), a.clone());
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, range: std::ops::Range<usize>) -> Option<u32> {
        self.terms.keys().map(|m| m.degree_in(range.clone())).max()
    }

    /// `Some(d)` when every term has degree `d` in the variables of `range`.
    pub fn homogeneous_degree_in(&self, range: std::ops::Range<usize>) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree_in(range.clone()));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            vars,
            latex: false,
        }
    }

    pub fn latex<'a>(&'a self, vars: &'a VarSet) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            vars,
            latex: true,
        }
    }

    fn check(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "polynomial rings differ");
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.check(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        self.check(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check(rhs);
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    vars: &'a VarSet,
    latex: bool,
}

impl PolyDisplay<'_> {
    fn write_monomial(&self, f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if self.latex {
                if !first {
                    f.write_str(" ")?;
                }
                f.write_str(self.vars.latex_name(i))?;
                if e > 1 {
                    write!(f, "^{{{e}}}")?;
                }
            } else {
                if !first {
                    f.write_str("*")?;
                }
                f.write_str(self.vars.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
            first = false;
        }
        Ok(())
    }

    fn write_magnitude(&self, f: &mut fmt::Formatter<'_>, c: &Rational, bare: bool) -> fmt::Result {
        let integral = is_integer(c);
        match (self.latex, integral, bare) {
            (_, true, true) => write!(f, "{}", c.numer()),
            (_, true, false) if c.is_one() => Ok(()),
            (false, true, false) => write!(f, "{}*", c.numer()),
            (true, true, false) => write!(f, "{} ", c.numer()),
            (false, false, true) => write!(f, "{}/{}", c.numer(), c.denom()),
            (false, false, false) => write!(f, "({}/{})*", c.numer(), c.denom()),
            (true, false, true) => write!(f, "\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
            (true, false, false) => write!(f, "\\frac{{{}}}{{{}}} ", c.numer(), c.denom()),
        }
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.poly.terms().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            self.write_magnitude(f, &mag, m.is_one())?;
            self.write_monomial(f, m)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;

    fn vars() -> VarSet {
        VarSet::new(
            vec![
                ("z[1,0]".into(), "z_{\\alpha_1}".into(), "a1".into()),
                ("z[0,1]".into(), "z_{\\alpha_2}".into(), "a2".into()),
            ],
            vec![("j1".into(), "j_1".into())],
        )
    }

    #[test]
    fn canonical_rendering() {
        let p = Polynomial::var(3, 0)
            .mul_var(1)
            .scale(&rat(1, 2));
        assert_eq!(p.display(&vars()).to_string(), "(1/2)*z[1,0]*z[0,1]");
        let q = &Polynomial::var(3, 2).scale(&int(2)) - &Polynomial::var(3, 0).pow(2);
        assert_eq!(q.display(&vars()).to_string(), "-z[1,0]^2 + 2*j1");
        assert_eq!(Polynomial::zero(3).display(&vars()).to_string(), "0");
        assert_eq!(
            Polynomial::constant(3, rat(-1, 2)).display(&vars()).to_string(),
            "-1/2"
        );
        assert_eq!(
            p.latex(&vars()).to_string(),
            "\\frac{1}{2} z_{\\alpha_1} z_{\\alpha_2}"
        );
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let x = Polynomial::var(3, 0);
        let d = &x - &x;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
    }

    #[test]
    fn derivative_and_substitution() {
        let x = Polynomial::var(3, 0);
        let y = Polynomial::var(3, 1);
        let p = &x.pow(3) * &y;
        assert_eq!(p.derivative(0), (&x.pow(2) * &y).scale(&int(3)));
        assert!(p.derivative(2).is_zero());
        let s = p.substitute(0, &(&y + &Polynomial::one(3)));
        assert_eq!(s, &(&y + &Polynomial::one(3)).pow(3) * &y);
    }

    #[test]
    fn separate_degrees() {
        let p = &Polynomial::var(3, 0).mul_var(1) * &Polynomial::var(3, 2);
        assert_eq!(p.degree_in(0..2), Some(2));
        assert_eq!(p.degree_in(2..3), Some(1));
        assert_eq!(p.homogeneous_degree_in(0..2), Some(2));
        let q = &p + &Polynomial::var(3, 0);
        assert_eq!(q.homogeneous_degree_in(0..2), None);
    }
}
