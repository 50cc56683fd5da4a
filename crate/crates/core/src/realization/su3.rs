//! `gl(3)` on `SU(3)/T` in the coordinates `E = e^{z23 C23} e^{z12 C12 + z13 C13}`.

use std::sync::Arc;

use super::context::{Eval, Frame};
use super::product::{realize_product_coordinates, Factor, Side};
use super::{BracketSense, Convention, Realization};
use crate::error::Result;
use crate::exactalg::{int, rat, LieAlgebra, Polynomial, VarSet};
use crate::par::Exec;

fn c(i: usize, j: usize) -> usize {
    3 * (i - 1) + (j - 1)
}

/// `gl(3)` with basis `C_ij` (`C11, C12, …, C33`) and
/// `[C_ij, C_kl] = δ_jk C_il − δ_il C_kj`.
pub fn gl3_algebra() -> LieAlgebra {
    let labels = (1..=3)
        .flat_map(|i| (1..=3).map(move |j| format!("C{i}{j}")))
        .collect();
    LieAlgebra::new(labels, |a, b| {
        let (i, j) = (a / 3 + 1, a % 3 + 1);
        let (k, l) = (b / 3 + 1, b % 3 + 1);
        let mut out = Vec::new();
        if j == k {
            out.push((c(i, l), int(1)));
        }
        if i == l {
            out.push((c(k, j), int(-1)));
        }
        out
    })
}

/// Index of `z12`, `z13`, `z23`, `w1`, `w2` or `w3`.
pub fn su3_variable(name: &str) -> Option<usize> {
    ["z12", "z13", "z23", "w1", "w2", "w3"].iter().position(|n| *n == name)
}

fn su3_vars() -> VarSet {
    let coords = [("12", "C12"), ("13", "C13"), ("23", "C23")]
        .iter()
        .map(|(ij, key)| (format!("z{ij}"), format!("z_{{{ij}}}"), key.to_string()))
        .collect();
    let params = (1..=3).map(|i| (format!("w{i}"), format!("w_{{{i}}}"))).collect();
    VarSet::new(coords, params)
}

/// Frame with `⟨ψ| C_ij = 0` for `i > j` and `⟨ψ| C_ii = w_i ⟨ψ|`.
pub fn su3_frame() -> Frame {
    let vars = su3_vars();
    let nv = vars.len();
    let eval = (0..9)
        .map(|b| {
            let (i, j) = (b / 3, b % 3);
            if i < j {
                Eval::Raising
            } else if i > j {
                Eval::Annihilate
            } else {
                Eval::Scalar(Polynomial::var(nv, 3 + i))
            }
        })
        .collect();
    Frame {
        alg: Arc::new(gl3_algebra()),
        vars,
        coordinates: vec![(0, c(1, 2)), (1, c(1, 3)), (2, c(2, 3))],
        eval,
    }
}

/// `[[z23 C23], [z12 C12, z13 C13]]`.
pub fn su3_ordering() -> Vec<Factor> {
    vec![vec![(2, c(2, 3))], vec![(0, c(1, 2)), (1, c(1, 3))]]
}

/// The nine operators `D_{C_ij}` with `⟨ψ|E C_ij = D_{C_ij} ⟨ψ|E`.
pub fn su3_realization(exec: Exec) -> Result<Realization> {
    let frame = su3_frame();
    let ordering = su3_ordering();
    let idx: Vec<usize> = (0..9).collect();
    let operators = exec
        .map(&idx, |&b| realize_product_coordinates(&frame, &ordering, Side::Left, &frame.basis(b)))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(Realization {
        vars: frame.vars.clone(),
        labels: frame.alg.labels().to_vec(),
        operators,
        convention: Convention::Formal,
        sense: BracketSense::Preserved,
    })
}

/// Single-exponential coordinates `ζ` to product coordinates `z`:
/// `z13 = ζ13 + ½ ζ12 ζ23`. Entries are ordered `(12, 13, 23)`.
pub fn coordinate_change_su3(zeta: &[Polynomial; 3]) -> [Polynomial; 3] {
    let half = rat(1, 2);
    [
        zeta[0].clone(),
        &zeta[1] + &(&zeta[0] * &zeta[2]).scale(&half),
        zeta[2].clone(),
    ]
}

/// Inverse of [`coordinate_change_su3`]: `ζ13 = z13 − ½ z12 z23`.
pub fn coordinate_change_su3_inverse(z: &[Polynomial; 3]) -> [Polynomial; 3] {
    let half = rat(-1, 2);
    [z[0].clone(), &z[1] + &(&z[0] * &z[2]).scale(&half), z[2].clone()]
}

/// Kernel `Δ1^{j1} Δ2^{j2}` with `Δ1 = 1 + |z12|² + |z13|²` and
/// `Δ2 = Δ1 (1 + |z23|²) − |z12 + z13 z̄23|²`, expanded over
/// `z12, z13, z23, zb12, zb13, zb23`.
pub fn su3_kernel(j1: u32, j2: u32) -> (VarSet, Polynomial) {
    let coords = ["12", "13", "23"]
        .iter()
        .map(|ij| (format!("z{ij}"), format!("z_{{{ij}}}"), format!("z{ij}")))
        .chain(
            ["12", "13", "23"]
                .iter()
                .map(|ij| (format!("zb{ij}"), format!("\\bar z_{{{ij}}}"), format!("zb{ij}"))),
        )
        .collect();
    let vars = VarSet::new(coords, Vec::new());
    let v = |i| Polynomial::var(6, i);
    let one = Polynomial::one(6);
    let d1 = &(&one + &(&v(0) * &v(3))) + &(&v(1) * &v(4));
    let cross = &v(0) + &(&v(1) * &v(5));
    let cross_bar = &v(3) + &(&v(4) * &v(2));
    let d2 = &(&d1 * &(&one + &(&v(2) * &v(5)))) - &(&cross * &cross_bar);
    (vars, &d1.pow(j1) * &d2.pow(j2))
}
