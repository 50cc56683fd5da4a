//! Closed-form operators in the coordinates of the orbit directions.
//!
//! Every formula here is checked against [`super::realize_general`] by the
//! cross-check in the oracle module.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::context::OrbitContext;
use crate::error::{Error, Result};
use crate::exactalg::{int, DiffOp, Polynomial, Rational};
use crate::rootsys::{RootClass, Root};

/// The polynomials `p_{kαβ}` grouped by the target root `α+β`.
///
/// Entry `k` maps each root `γ = α + α_1 + … + α_k` to
/// `Σ n_{α_1,α} n_{α_2,α+α_1} ⋯ z_{α_1} ⋯ z_{α_k}` over ordered tuples of
/// orbit directions whose partial sums all stay in the root system.
pub fn raising_paths(ctx: &OrbitContext, alpha: usize, kmax: usize) -> Vec<BTreeMap<usize, Polynomial>> {
    let rs = ctx.root_system();
    let sc = ctx.constants();
    let nv = ctx.nvars();
    let mut layers = Vec::with_capacity(kmax + 1);
    let mut cur: BTreeMap<usize, Polynomial> = BTreeMap::new();
    cur.insert(alpha, Polynomial::one(nv));
    for _ in 0..=kmax {
        let mut next: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (&gamma, poly) in &cur {
            for mu in ctx.coordinate_roots() {
                let Some(target) = rs.sum_index(mu, gamma) else {
                    continue;
                };
                let n = sc.n(mu, gamma);
                if n.is_zero() {
                    continue;
                }
                let v = ctx.var_of_root(mu).expect("coordinate root");
                let step = poly.mul_var(v).scale(&n);
                let e = next.entry(target).or_insert_with(|| Polynomial::zero(nv));
                *e += &step;
            }
        }
        next.retain(|_, p| !p.is_zero());
        layers.push(std::mem::replace(&mut cur, next));
    }
    layers
}

/// Adds `Σ_k s_k Σ_γ f · p_k[γ] ∂_γ` to `op` for the paths starting at `start`.
fn add_series(
    ctx: &OrbitContext,
    op: &mut DiffOp,
    start: usize,
    factor: &Polynomial,
    coeff: impl Fn(usize) -> Rational,
    kmax: usize,
) {
    for (k, layer) in raising_paths(ctx, start, kmax).into_iter().enumerate() {
        let c = coeff(k);
        if c.is_zero() {
            continue;
        }
        for (target, p) in layer {
            let v = ctx.var_of_root(target).expect("paths stay among orbit directions");
            op.add_derivative(v, &(factor * &p).scale(&c));
        }
    }
}

fn coord_root(ctx: &OrbitContext, root: &Root) -> Result<usize> {
    let rs = ctx.root_system();
    let idx = rs
        .index_of(root)
        .ok_or_else(|| Error::Argument(format!("{root} is not a root of {}", rs.lie_type())))?;
    if !ctx.is_coordinate_root(idx) {
        return Err(Error::Argument(format!("{root} is not an orbit direction")));
    }
    Ok(idx)
}

/// `D_{E_α} = Σ_k (−1)^k c_k Σ_β p_{kαβ} ∂_{α+β}` for an orbit direction `α`.
pub fn realize_raising(ctx: &OrbitContext, alpha: &Root) -> Result<DiffOp> {
    let a = coord_root(ctx, alpha)?;
    let c = ctx.coeffs();
    let nu = ctx.root_system().nu_degree();
    let mut op = DiffOp::zero(ctx.nvars());
    let one = Polynomial::one(ctx.nvars());
    add_series(
        ctx,
        &mut op,
        a,
        &one,
        |k| if k % 2 == 1 { -c.c_at(k) } else { c.c_at(k) },
        nu,
    );
    Ok(op)
}

/// `D_H = j(H) + Σ_β β(H) z_β ∂_β` for `H = Σ h_k H_k`.
pub fn realize_cartan_vector(ctx: &OrbitContext, h: &[Rational]) -> Result<DiffOp> {
    let rs = ctx.root_system();
    if h.len() != rs.rank() {
        return Err(Error::Argument(format!(
            "Cartan vector has {} components but the rank is {}",
            h.len(),
            rs.rank()
        )));
    }
    let nv = ctx.nvars();
    let mut scalar = Polynomial::zero(nv);
    for (k, hk) in h.iter().enumerate() {
        scalar += &ctx.weight_value(k).scale(hk);
    }
    let mut op = DiffOp::multiplication(scalar);
    for beta in ctx.coordinate_roots() {
        let b = rs.root(beta);
        let val: Rational = h
            .iter()
            .enumerate()
            .map(|(k, hk)| hk * int(rs.pairing(b, k).into()))
            .fold(Rational::zero(), |a, x| a + x);
        if !val.is_zero() {
            let v = ctx.var_of_root(beta).unwrap();
            op.add_derivative(v, &Polynomial::var(nv, v).scale(&val));
        }
    }
    Ok(op)
}

/// `D_{H_i}` for the simple coroot `H_{i+1}` (0-based `i`).
pub fn realize_cartan(ctx: &OrbitContext, i: usize) -> Result<DiffOp> {
    let r = ctx.root_system().rank();
    if i >= r {
        return Err(Error::Argument(format!("no Cartan generator H{}", i + 1)));
    }
    let mut h = vec![Rational::zero(); r];
    h[i] = int(1);
    realize_cartan_vector(ctx, &h)
}

/// `D_{E_γ}` for `γ = −α_i` where `α_i` is a simple orbit direction.
///
/// `D = −j(H_{α_i}) z_{α_i} − Σ n_{β,γ} z_β ∂_{β+γ} + Σ_k (−1)^k d_k Σ_δ q_δ p_{kδβ} ∂_{β+δ}`
/// with `q_δ = −δ(H_{α_i}) z_{α_i} z_δ + Σ_μ z_{δ−μ−γ} n_{δ−μ−γ,γ} z_μ n_{μ,δ−μ}`,
/// the inner sum running over `δ−μ ∈ Δ₀`.
pub fn realize_lowering_simple(ctx: &OrbitContext, gamma: &Root) -> Result<DiffOp> {
    let rs = ctx.root_system();
    let sc = ctx.constants();
    let nv = ctx.nvars();
    let a_root = gamma.neg();
    let a = coord_root(ctx, &a_root).map_err(|_| {
        Error::Argument(format!("{gamma} is not the negative of a simple orbit direction"))
    })?;
    if a_root.coords().iter().map(|c| c.abs()).sum::<i32>() != 1 {
        return Err(Error::Argument(format!("{gamma} is not the negative of a simple root")));
    }
    let g = rs.index_of(gamma).expect("negative of a root");
    let za = Polynomial::var(nv, ctx.var_of_root(a).unwrap());

    let mut op = DiffOp::multiplication(-(&za * &ctx.weight_on_coroot(&a_root)));
    for beta in ctx.coordinate_roots() {
        if let Some(t) = rs.sum_index(beta, g) {
            if let Some(vt) = ctx.var_of_root(t) {
                let n = sc.n(beta, g);
                let zb = Polynomial::var(nv, ctx.var_of_root(beta).unwrap());
                op.add_derivative(vt, &zb.scale(&-n));
            }
        }
    }

    let d = ctx.coeffs();
    let nu = rs.nu_degree();
    let par = ctx.parabolic();
    for delta in ctx.coordinate_roots() {
        let droot = rs.root(delta);
        let zd = ctx.z(delta).unwrap();
        let mut q = (&za * &zd).scale(&int((-ctx.pairing_with_coroot(droot, &a_root)).into()));
        for mu in ctx.coordinate_roots() {
            let Some(levi) = rs.index_of(&droot.sub(rs.root(mu))) else {
                continue;
            };
            if par.class(levi) != RootClass::Zero {
                continue;
            }
            let Some(head) = rs.index_of(&rs.root(levi).sub(gamma)) else {
                continue;
            };
            if !ctx.is_coordinate_root(head) {
                continue;
            }
            let coeff = sc.n(head, g) * sc.n(mu, levi);
            if coeff.is_zero() {
                continue;
            }
            q += &(&ctx.z(head).unwrap() * &ctx.z(mu).unwrap()).scale(&coeff);
        }
        if q.is_zero() {
            continue;
        }
        add_series(
            ctx,
            &mut op,
            delta,
            &q,
            |k| if k % 2 == 1 { -d.d_at(k) } else { d.d_at(k) },
            nu,
        );
    }
    Ok(op)
}

/// `D_{E_α} = −Σ_β n_{β−α,α} z_{β−α} ∂_β` for a Levi root `α ∈ Δ₀`.
///
/// Requires `j(H_α) = 0`. The formula can be evaluated for any root, but it
/// only agrees with the realization when `α ∈ Δ₀`.
pub fn realize_orthogonal(ctx: &OrbitContext, alpha: &Root) -> Result<DiffOp> {
    let rs = ctx.root_system();
    let sc = ctx.constants();
    let nv = ctx.nvars();
    let a = rs
        .index_of(alpha)
        .ok_or_else(|| Error::Argument(format!("{alpha} is not a root of {}", rs.lie_type())))?;
    let pairing = ctx.weight_on_coroot(alpha);
    if !pairing.is_zero() {
        return Err(Error::Precondition(format!(
            "weight pairing with the coroot of {alpha} is {}, not zero",
            pairing.display(ctx.vars())
        )));
    }
    let mut op = DiffOp::zero(nv);
    for beta in ctx.coordinate_roots() {
        let Some(src) = rs.index_of(&rs.root(beta).sub(alpha)) else {
            continue;
        };
        let Some(zs) = ctx.z(src) else {
            continue;
        };
        let n = sc.n(src, a);
        if !n.is_zero() {
            op.add_derivative(ctx.var_of_root(beta).unwrap(), &zs.scale(&-n));
        }
    }
    Ok(op)
}
