//! Finite-dimensional matrix representations as an oracle for `X e_z = D_X e_z`.

use num_traits::{One, Zero};

use super::report::{CheckResult, VerificationReport};
use crate::error::{Error, Result};
use crate::exactalg::{int, DiffOp, LieAlgebra, Polynomial, Rational};
use crate::realization::{adjoint_basis, Convention, Eval, OrbitContext, Realization, Weight};
use crate::rootsys::{RootSystem, StructureConstants};

pub type RationalMatrix = Vec<Vec<Rational>>;

fn zeros(n: usize) -> RationalMatrix {
    vec![vec![Rational::zero(); n]; n]
}

fn matmul(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn commutator(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let ab = matmul(a, b);
    let ba = matmul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

fn scaled(a: &RationalMatrix, c: &Rational) -> RationalMatrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

fn added(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

fn unit(n: usize, i: usize, j: usize) -> RationalMatrix {
    let mut m = zeros(n);
    m[i][j] = Rational::one();
    m
}

/// A representation of a semisimple algebra by rational matrices, indexed like
/// the Cartan–Weyl basis, with a chosen extreme vector.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub name: String,
    pub matrices: Vec<RationalMatrix>,
    pub extreme: Vec<Rational>,
    /// Eigenvalues of `H_1..H_r` on the extreme vector.
    pub weight: Vec<Rational>,
}

impl MatrixRep {
    pub fn size(&self) -> usize {
        self.extreme.len()
    }

    /// Extends simple generators `e_i`, `f_i` to the whole basis:
    /// `H_i = [e_i, f_i]` and `E_{ξ} = [E_{α_i}, E_{ξ−α_i}] / N_{α_i, ξ−α_i}`.
    pub fn from_simple(
        name: &str,
        rs: &RootSystem,
        sc: &StructureConstants,
        e: Vec<RationalMatrix>,
        f: Vec<RationalMatrix>,
        extreme: Vec<Rational>,
    ) -> Result<Self> {
        let r = rs.rank();
        if e.len() != r || f.len() != r {
            return Err(Error::Argument(format!("need {r} simple generators of each sign")));
        }
        let n = extreme.len();
        let mut mats: Vec<Option<RationalMatrix>> = vec![None; rs.len() + r];
        for (i, &s) in rs.simple_roots().iter().enumerate() {
            mats[s] = Some(e[i].clone());
            mats[rs.negative_index(s)] = Some(f[i].clone());
            mats[rs.len() + i] = Some(commutator(&e[i], &f[i]));
        }
        for xi in rs.positive_roots() {
            if mats[xi].is_some() {
                continue;
            }
            for &s in rs.simple_roots() {
                let Some(rest) = rs.index_of(&rs.root(xi).sub(rs.root(s))) else {
                    continue;
                };
                let (Some(a), Some(b)) = (mats[s].clone(), mats[rest].clone()) else {
                    continue;
                };
                let na = rs.negative_index(s);
                let nr = rs.negative_index(rest);
                let (Some(fa), Some(fb)) = (mats[na].clone(), mats[nr].clone()) else {
                    continue;
                };
                let up = scaled(&commutator(&a, &b), &(Rational::one() / sc.n(s, rest)));
                let down = scaled(&commutator(&fa, &fb), &(Rational::one() / sc.n(na, nr)));
                mats[xi] = Some(up);
                mats[rs.negative_index(xi)] = Some(down);
                break;
            }
        }
        let matrices: Vec<RationalMatrix> = mats
            .into_iter()
            .map(|m| m.ok_or_else(|| Error::Argument("could not generate every root matrix".into())))
            .collect::<Result<_>>()?;
        if matrices.iter().any(|m| m.len() != n) {
            return Err(Error::Argument("matrix size differs from the extreme vector".into()));
        }
        let weight = (0..r)
            .map(|i| eigenvalue(&matrices[rs.len() + i], &extreme))
            .collect::<Result<_>>()?;
        Ok(MatrixRep {
            name: name.to_string(),
            matrices,
            extreme,
            weight,
        })
    }

    /// `sl(2)` on `C²` with extreme vector `(0, 1)`, weight `−1`.
    pub fn sl2_spin_half(rs: &RootSystem, sc: &StructureConstants) -> Result<Self> {
        let e = unit(2, 0, 1);
        let f = unit(2, 1, 0);
        Self::from_simple("sl2 spin 1/2", rs, sc, vec![e], vec![f], vec![int(0), int(1)])
    }

    /// `sl(2)` on `C³` with extreme vector `(0, 0, 1)`, weight `−2`.
    pub fn sl2_spin_one(rs: &RootSystem, sc: &StructureConstants) -> Result<Self> {
        let e = added(&unit(3, 0, 1), &unit(3, 1, 2));
        let f = scaled(&added(&unit(3, 1, 0), &unit(3, 2, 1)), &int(2));
        Self::from_simple("sl2 spin 1", rs, sc, vec![e], vec![f], vec![int(0), int(0), int(1)])
    }

    /// `sl(3)` on `C³` with extreme vector `e3`, weight `(0, −1)`.
    pub fn sl3_defining(rs: &RootSystem, sc: &StructureConstants) -> Result<Self> {
        let e = vec![unit(3, 0, 1), unit(3, 1, 2)];
        let f = vec![unit(3, 1, 0), unit(3, 2, 1)];
        Self::from_simple("sl3 defining", rs, sc, e, f, vec![int(0), int(0), int(1)])
    }

    /// The adjoint representation, extreme vector `E_{−θ}`.
    pub fn adjoint(rs: &RootSystem, alg: &LieAlgebra) -> Result<Self> {
        let n = alg.dim();
        let matrices = (0..n)
            .map(|a| {
                let mut m = zeros(n);
                for b in 0..n {
                    for (k, c) in alg.bracket_basis(a, b) {
                        m[*k][b] = c.clone();
                    }
                }
                m
            })
            .collect::<Vec<_>>();
        let mut extreme = vec![Rational::zero(); n];
        extreme[rs.negative_index(rs.highest_index())] = Rational::one();
        let weight = (0..rs.rank())
            .map(|i| eigenvalue(&matrices[rs.len() + i], &extreme))
            .collect::<Result<_>>()?;
        Ok(MatrixRep {
            name: format!("{} adjoint", rs.lie_type()),
            matrices,
            extreme,
            weight,
        })
    }

    /// `[M_a, M_b] = Σ c_k M_k` for every pair.
    pub fn validate(&self, alg: &LieAlgebra) -> VerificationReport {
        let mut report = VerificationReport::new("matrix relations", self.name.clone());
        let n = self.size();
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let lhs = commutator(&self.matrices[a], &self.matrices[b]);
                let mut rhs = zeros(n);
                for (k, c) in alg.bracket_basis(a, b) {
                    rhs = added(&rhs, &scaled(&self.matrices[*k], c));
                }
                let name = format!("[{}, {}]", alg.label(a), alg.label(b));
                report.push(if lhs == rhs {
                    CheckResult::pass(name)
                } else {
                    CheckResult::fail(name, "matrix commutator mismatch")
                });
            }
        }
        report
    }
}

fn apply(m: &RationalMatrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).fold(Rational::zero(), |s, x| s + x))
        .collect()
}

fn eigenvalue(m: &RationalMatrix, v: &[Rational]) -> Result<Rational> {
    let mv = apply(m, v);
    let k = v
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::Argument("extreme vector is zero".into()))?;
    let lambda = &mv[k] / &v[k];
    if mv.iter().zip(v).any(|(a, b)| *a != b * &lambda) {
        return Err(Error::Argument("extreme vector is not a Cartan eigenvector".into()));
    }
    Ok(lambda)
}

/// `e_z = exp(Σ z_α M_α) v` as a vector of polynomials.
fn coherent_vector(ctx: &OrbitContext, rep: &MatrixRep) -> Result<Vec<Polynomial>> {
    let nv = ctx.nvars();
    let n = rep.size();
    let frame = ctx.frame();
    let apply_z = |v: &[Polynomial]| -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(nv); n];
        for &(var, b) in &frame.coordinates {
            let m = &rep.matrices[b];
            for i in 0..n {
                for j in 0..n {
                    if !m[i][j].is_zero() && !v[j].is_zero() {
                        out[i] += &v[j].mul_var(var).scale(&m[i][j]);
                    }
                }
            }
        }
        out
    };
    let mut term: Vec<Polynomial> = rep.extreme.iter().map(|c| Polynomial::constant(nv, c.clone())).collect();
    let mut total = term.clone();
    for k in 1..=n + 1 {
        term = apply_z(&term)
            .into_iter()
            .map(|p| p.scale(&(Rational::one() / int(k as i64))))
            .collect();
        if term.iter().all(Polynomial::is_zero) {
            return Ok(total);
        }
        for (t, s) in total.iter_mut().zip(&term) {
            *t += s;
        }
    }
    Err(Error::NonNilpotent(n + 1))
}

/// `X e_z = D_X e_z` componentwise for every basis element, after checking
/// that the extreme vector obeys the context's evaluation rule.
///
/// A symbolic context is specialized to the representation's weight; a
/// numeric context must carry that weight.
pub fn matrix_check(ctx: &OrbitContext, real: &Realization, rep: &MatrixRep) -> Result<VerificationReport> {
    let rs = ctx.root_system();
    if rep.weight.len() != rs.rank() || rep.matrices.len() != ctx.algebra().dim() {
        return Err(Error::Argument(format!("{} does not match {}", rep.name, rs.lie_type())));
    }
    let nv = ctx.nvars();
    let coords = ctx.vars().coords();
    let subst: Vec<Option<Polynomial>> = match ctx.weight() {
        Weight::Numeric(w) => {
            if *w != rep.weight {
                return Err(Error::Argument(format!(
                    "context weight differs from the weight of {}",
                    rep.name
                )));
            }
            vec![None; nv]
        }
        Weight::Symbolic => {
            for (k, wk) in rep.weight.iter().enumerate() {
                if ctx.parabolic().is_excluded(k) && !wk.is_zero() {
                    return Err(Error::Argument(format!(
                        "weight of {} does not vanish on excluded a{}",
                        rep.name,
                        k + 1
                    )));
                }
            }
            (0..nv)
                .map(|i| (i >= coords).then(|| Polynomial::constant(nv, rep.weight[i - coords].clone())))
                .collect()
        }
    };

    let mut report = VerificationReport::new("matrix identities", rep.name.clone());
    for (b, ev) in ctx.frame().eval.iter().enumerate() {
        let mv = apply(&rep.matrices[b], &rep.extreme);
        let ok = match ev {
            Eval::Raising => true,
            Eval::Annihilate => mv.iter().all(Zero::is_zero),
            Eval::Scalar(s) => {
                let s = s.substitute_all(&subst);
                let lambda = s.as_constant().unwrap_or_default();
                s.as_constant().is_some() && mv.iter().zip(&rep.extreme).all(|(a, v)| *a == v * &lambda)
            }
        };
        if !matches!(ev, Eval::Raising) {
            let name = format!("extreme vector under {}", real.labels[b]);
            report.push(if ok {
                CheckResult::pass(name)
            } else {
                CheckResult::fail(name, "evaluation rule violated")
            });
        }
    }

    let ez = coherent_vector(ctx, rep)?;
    for b in 0..real.dim() {
        let op: DiffOp = real.operators[b].map_coeffs(|p| p.substitute_all(&subst));
        let mb = match real.convention {
            Convention::Formal => &rep.matrices[b],
            Convention::Fock => &rep.matrices[adjoint_basis(ctx, b)],
        };
        let mut ok = true;
        for i in 0..rep.size() {
            let mut lhs = Polynomial::zero(nv);
            for (j, p) in ez.iter().enumerate() {
                if !mb[i][j].is_zero() {
                    lhs += &p.scale(&mb[i][j]);
                }
            }
            if lhs != op.apply(&ez[i]) {
                ok = false;
                break;
            }
        }
        let name = format!("{} e_z", real.labels[b]);
        report.push(if ok {
            CheckResult::pass(name)
        } else {
            CheckResult::fail(name, "componentwise mismatch")
        });
    }
    Ok(report)
}
