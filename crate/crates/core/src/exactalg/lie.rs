//! Finite-dimensional Lie algebras given by a structure table, and Lie-algebra
//! elements with polynomial coefficients.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::par::Exec;

/// A Lie algebra with basis `e_0..e_{n-1}` and `[e_a, e_b] = Σ_k c_k e_k`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    labels: Vec<String>,
    table: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl LieAlgebra {
    pub fn new(labels: Vec<String>, bracket: impl Fn(usize, usize) -> Vec<(usize, Rational)>) -> Self {
        let n = labels.len();
        let table = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                        for (k, c) in bracket(a, b) {
                            *acc.entry(k).or_insert_with(Rational::zero) += c;
                        }
                        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
                    })
                    .collect()
            })
            .collect();
        LieAlgebra { labels, table }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.table[a][b]
    }

    /// Pairs `(a, b)` with `[e_a, e_b] ≠ −[e_b, e_a]`.
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        let mut bad = Vec::new();
        for a in 0..n {
            for b in a..n {
                let mut sum: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, c) in self.table[a][b].iter().chain(&self.table[b][a]) {
                    *sum.entry(*k).or_insert_with(Rational::zero) += c;
                }
                if sum.values().any(|c| !c.is_zero()) {
                    bad.push((a, b));
                }
            }
        }
        bad
    }

    fn bracket_vec(&self, x: &BTreeMap<usize, Rational>, b: usize) -> BTreeMap<usize, Rational> {
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (&a, ca) in x {
            for (k, c) in &self.table[a][b] {
                *out.entry(*k).or_insert_with(Rational::zero) += ca * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn nested(&self, a: usize, b: usize, c: usize) -> BTreeMap<usize, Rational> {
        // [e_a, [e_b, e_c]] = −[[e_b, e_c], e_a]
        let inner: BTreeMap<usize, Rational> = self.table[b][c].iter().cloned().collect();
        let mut out = self.bracket_vec(&inner, a);
        for v in out.values_mut() {
            *v = -v.clone();
        }
        out
    }

    /// Triples `a < b < c` on which the Jacobi identity fails.
    pub fn jacobi_violations(&self, exec: Exec) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let firsts: Vec<usize> = (0..n).collect();
        exec.map(&firsts, |&a| {
            let mut bad = Vec::new();
            for b in a + 1..n {
                for c in b + 1..n {
                    let mut sum = self.nested(a, b, c);
                    for (k, v) in self.nested(b, c, a).into_iter().chain(self.nested(c, a, b)) {
                        *sum.entry(k).or_insert_with(Rational::zero) += v;
                    }
                    if sum.values().any(|v| !v.is_zero()) {
                        bad.push((a, b, c));
                    }
                }
            }
            bad
        })
        .into_iter()
        .flatten()
        .collect()
    }
}

/// `Σ_a p_a(z) e_a` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiePoly {
    nvars: usize,
    coeffs: BTreeMap<usize, Polynomial>,
}

impl LiePoly {
    pub fn zero(nvars: usize) -> Self {
        LiePoly {
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(nvars: usize, a: usize) -> Self {
        let mut x = Self::zero(nvars);
        x.add_term(a, &Polynomial::one(nvars));
        x
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (usize, Polynomial)>) -> Self {
        let mut x = Self::zero(nvars);
        for (a, p) in terms {
            x.add_term(a, &p);
        }
        x
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: usize) -> Polynomial {
        self.coeffs
            .get(&a)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.coeffs.iter().map(|(&a, p)| (a, p))
    }

    pub fn add_term(&mut self, a: usize, p: &Polynomial) {
        if p.is_zero() {
            return;
        }
        let slot = self
            .coeffs
            .entry(a)
            .or_insert_with(|| Polynomial::zero(p.nvars()));
        *slot += p;
        if slot.is_zero() {
            self.coeffs.remove(&a);
        }
    }

    pub fn add(&self, other: &LiePoly) -> LiePoly {
        let mut out = self.clone();
        for (a, p) in other.terms() {
            out.add_term(a, p);
        }
        out
    }

    pub fn sub(&self, other: &LiePoly) -> LiePoly {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rational) -> LiePoly {
        LiePoly {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&a, p)| (a, p.scale(c)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    pub fn mul_poly(&self, q: &Polynomial) -> LiePoly {
        let mut out = Self::zero(self.nvars);
        for (a, p) in self.terms() {
            out.add_term(a, &(p * q));
        }
        out
    }

    /// Keeps only the basis elements accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> LiePoly {
        LiePoly {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&a, _)| keep(a))
                .map(|(&a, p)| (a, p.clone()))
                .collect(),
        }
    }

    pub fn bracket(&self, other: &LiePoly, alg: &LieAlgebra) -> LiePoly {
        let mut out = Self::zero(self.nvars);
        for (a, pa) in self.terms() {
            for (b, pb) in other.terms() {
                let br = alg.bracket_basis(a, b);
                if br.is_empty() {
                    continue;
                }
                let prod = pa * pb;
                for (k, c) in br {
                    out.add_term(*k, &prod.scale(c));
                }
            }
        }
        out
    }
}

/// `ad_Z X = [Z, X]`.
pub fn ad_action(z: &LiePoly, x: &LiePoly, alg: &LieAlgebra) -> LiePoly {
    z.bracket(x, alg)
}

/// The powers `X, ad_Z X, ad_Z² X, …` up to (excluding) the first zero.
pub fn ad_powers(z: &LiePoly, x: &LiePoly, alg: &LieAlgebra) -> Result<Vec<LiePoly>> {
    let limit = alg.dim() + 1;
    let mut out = Vec::new();
    let mut term = x.clone();
    while !term.is_zero() {
        if out.len() > limit {
            return Err(Error::NonNilpotent(limit));
        }
        let next = ad_action(z, &term, alg);
        out.push(term);
        term = next;
    }
    Ok(out)
}

/// `Σ_n coeff(n) ad_Z^n X`, terminating once `ad_Z^n X` vanishes.
pub fn ad_power_series(
    z: &LiePoly,
    x: &LiePoly,
    alg: &LieAlgebra,
    coeff: impl Fn(usize) -> Rational,
) -> Result<LiePoly> {
    let mut out = LiePoly::zero(x.nvars());
    for (n, term) in ad_powers(z, x, alg)?.iter().enumerate() {
        let c = coeff(n);
        if !c.is_zero() {
            out = out.add(&term.scale(&c));
        }
    }
    Ok(out)
}

/// Coefficients `sign^n / n!` of `exp(sign·x)`.
pub fn exp_coeffs(sign: i64) -> impl Fn(usize) -> Rational {
    move |n| {
        let s = if sign < 0 && n % 2 == 1 { -1 } else { 1 };
        Rational::from_integer(s.into()) / super::rational::factorial(n)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::int;
    use super::*;

    // sl(2): e=0, f=1, h=2 with [e,f]=h, [h,e]=2e, [h,f]=-2f
    pub(crate) fn sl2() -> LieAlgebra {
        LieAlgebra::new(vec!["e".into(), "f".into(), "h".into()], |a, b| match (a, b) {
            (0, 1) => vec![(2, int(1))],
            (1, 0) => vec![(2, int(-1))],
            (2, 0) => vec![(0, int(2))],
            (0, 2) => vec![(0, int(-2))],
            (2, 1) => vec![(1, int(-2))],
            (1, 2) => vec![(1, int(2))],
            _ => vec![],
        })
    }

    #[test]
    fn sl2_table_is_a_lie_algebra() {
        let g = sl2();
        assert!(g.antisymmetry_violations().is_empty());
        assert!(g.jacobi_violations(Exec::Sequential).is_empty());
    }

    #[test]
    fn identity_series() {
        let g = sl2();
        let z = LiePoly::basis(1, 0).mul_poly(&Polynomial::var(1, 0));
        let x = LiePoly::basis(1, 1);
        let y = ad_power_series(&z, &x, &g, |n| if n == 0 { int(1) } else { int(0) }).unwrap();
        assert_eq!(y, x);
    }

    #[test]
    fn exponential_series_on_sl2() {
        // e^{ad zE} F = F + z h − z² e
        let g = sl2();
        let zp = Polynomial::var(1, 0);
        let z = LiePoly::basis(1, 0).mul_poly(&zp);
        let x = LiePoly::basis(1, 1);
        let y = ad_power_series(&z, &x, &g, exp_coeffs(1)).unwrap();
        let expected = LiePoly::from_terms(1, [(1, Polynomial::one(1)), (2, zp.clone()), (0, -zp.pow(2))]);
        assert_eq!(y, expected);
    }

    #[test]
    fn non_nilpotent_input_is_reported() {
        let g = sl2();
        let h = LiePoly::basis(1, 2);
        let e = LiePoly::basis(1, 0);
        assert!(matches!(
            ad_power_series(&h, &e, &g, exp_coeffs(1)),
            Err(Error::NonNilpotent(_))
        ));
    }

    #[test]
    fn bracket_with_zero() {
        let g = sl2();
        let z = LiePoly::basis(1, 0);
        assert!(ad_action(&z, &LiePoly::zero(1), &g).is_zero());
    }
}
