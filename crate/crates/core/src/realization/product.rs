//! Realizations in product-of-exponentials coordinates
//! `E = e^{Z_1} e^{Z_2} ⋯ e^{Z_m}` with `Z_s = Σ_{a∈s} z_a X_a`.

use num_traits::One;

use super::context::{Eval, Frame};
use crate::error::{Error, Result};
use crate::exactalg::{ad_power_series, factorial, DiffOp, LiePoly, Polynomial, Rational};

/// Which side the extreme vector sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `⟨ψ| E X = D_X ⟨ψ| E`; brackets are preserved.
    Left,
    /// `X E |ψ⟩ = D_X E |ψ⟩`; brackets are reversed.
    Right,
}

/// One exponential factor: `(coordinate variable, basis element)` pairs.
pub type Factor = Vec<(usize, usize)>;

fn exp_ad(z: &LiePoly, y: &LiePoly, frame: &Frame, sign: i64) -> Result<LiePoly> {
    ad_power_series(z, y, &frame.alg, crate::exactalg::exp_coeffs(sign))
}

fn factor_element(frame: &Frame, f: &Factor) -> LiePoly {
    LiePoly::from_terms(
        frame.nvars(),
        f.iter().map(|&(v, b)| (b, Polynomial::var(frame.nvars(), v))),
    )
}

/// Coordinate variables in ordering order, paired with their basis elements.
fn check_ordering(frame: &Frame, ordering: &[Factor]) -> Result<Vec<(usize, usize)>> {
    let flat: Vec<(usize, usize)> = ordering.iter().flatten().copied().collect();
    let raising: Vec<usize> = (0..frame.alg.dim()).filter(|&b| frame.is_raising(b)).collect();
    if flat.len() != raising.len() {
        return Err(Error::Ordering(format!(
            "ordering has {} coordinates but there are {} raising elements",
            flat.len(),
            raising.len()
        )));
    }
    for (i, &(v, b)) in flat.iter().enumerate() {
        if !frame.is_raising(b) {
            return Err(Error::Ordering(format!("{} is not a raising element", frame.alg.label(b))));
        }
        if v >= frame.vars.coords() {
            return Err(Error::Ordering(format!("variable {v} is not a coordinate")));
        }
        if flat[..i].iter().any(|&(w, c)| w == v || c == b) {
            return Err(Error::Ordering(format!(
                "coordinate {} or element {} repeated",
                frame.vars.name(v),
                frame.alg.label(b)
            )));
        }
    }
    Ok(flat)
}

/// `D_X` for the product ordering `ordering` on the given side.
///
/// Writes `∂_a E = Σ_b M_ab X_b E` (left-hand side) or `∂_a E = Σ_b E M_ab X_b`
/// (right-hand side), inverts `M = I − N` by the nilpotent Neumann series and
/// reads `X̃ = E X E⁻¹` (resp. `E⁻¹ X E`) against `M⁻¹`.
pub fn realize_product_coordinates(
    frame: &Frame,
    ordering: &[Factor],
    side: Side,
    x: &LiePoly,
) -> Result<DiffOp> {
    let flat = check_ordering(frame, ordering)?;
    let nv = frame.nvars();
    let m = ordering.len();
    let zs: Vec<LiePoly> = ordering.iter().map(|f| factor_element(frame, f)).collect();

    let conjugated = match side {
        Side::Left => {
            let mut y = x.clone();
            for z in zs.iter().rev() {
                y = exp_ad(z, &y, frame, 1)?;
            }
            y
        }
        Side::Right => {
            let mut y = x.clone();
            for z in &zs {
                y = exp_ad(z, &y, frame, -1)?;
            }
            y
        }
    };

    // rows of M, one per coordinate in `flat` order
    let mut rows: Vec<LiePoly> = Vec::with_capacity(flat.len());
    for (s, f) in ordering.iter().enumerate() {
        for &(_, b) in f {
            let xb = frame.basis(b);
            let mut y = match side {
                Side::Left => ad_power_series(&zs[s], &xb, &frame.alg, |n| {
                    Rational::one() / factorial(n + 1)
                })?,
                Side::Right => ad_power_series(&zs[s], &xb, &frame.alg, |n| {
                    let sgn = if n % 2 == 1 { -Rational::one() } else { Rational::one() };
                    sgn / factorial(n + 1)
                })?,
            };
            match side {
                Side::Left => {
                    for t in (0..s).rev() {
                        y = exp_ad(&zs[t], &y, frame, 1)?;
                    }
                }
                Side::Right => {
                    for t in zs.iter().take(m).skip(s + 1) {
                        y = exp_ad(t, &y, frame, -1)?;
                    }
                }
            }
            if let Some((b, _)) = y.terms().find(|&(b, _)| !frame.is_raising(b)) {
                return Err(Error::Ordering(format!(
                    "derivative of the product leaves the raising span through {}",
                    frame.alg.label(b)
                )));
            }
            rows.push(y);
        }
    }

    let n = flat.len();
    let col_of = |b: usize| flat.iter().position(|&(_, c)| c == b).expect("raising element in ordering");
    // N = I − M
    let mut nmat = vec![vec![Polynomial::zero(nv); n]; n];
    for (a, row) in rows.iter().enumerate() {
        for (b, coeff) in row.terms() {
            nmat[a][col_of(b)] = -coeff.clone();
        }
        nmat[a][a] += &Polynomial::one(nv);
    }
    let inv = neumann_inverse(&nmat, nv)?;

    let mut scalar = Polynomial::zero(nv);
    let mut op = DiffOp::zero(nv);
    for (b, coeff) in conjugated.terms() {
        match &frame.eval[b] {
            Eval::Scalar(s) => scalar += &(coeff * s),
            Eval::Annihilate => {}
            Eval::Raising => {
                let i = col_of(b);
                for (a, &(var, _)) in flat.iter().enumerate() {
                    let entry = &inv[i][a];
                    if !entry.is_zero() {
                        op.add_derivative(var, &(coeff * entry));
                    }
                }
            }
        }
    }
    op.add_scalar(&scalar);
    Ok(op)
}

fn mat_mul(a: &[Vec<Polynomial>], b: &[Vec<Polynomial>], nv: usize) -> Vec<Vec<Polynomial>> {
    let n = a.len();
    let mut out = vec![vec![Polynomial::zero(nv); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// `(I − N)⁻¹ = Σ_k N^k`. With `∂ = M X` this gives `X_b = Σ_a inv[b][a] ∂_a`.
fn neumann_inverse(n: &[Vec<Polynomial>], nv: usize) -> Result<Vec<Vec<Polynomial>>> {
    let size = n.len();
    let mut sum = vec![vec![Polynomial::zero(nv); size]; size];
    let mut power = vec![vec![Polynomial::zero(nv); size]; size];
    for (i, row) in power.iter_mut().enumerate() {
        row[i] = Polynomial::one(nv);
    }
    for _ in 0..=size {
        if power.iter().flatten().all(Polynomial::is_zero) {
            return Ok(sum);
        }
        for i in 0..size {
            for j in 0..size {
                sum[i][j] += &power[i][j];
            }
        }
        power = mat_mul(&power, n, nv);
    }
    Err(Error::Ordering("derivative matrix is not unipotent".into()))
}
