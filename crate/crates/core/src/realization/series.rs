//! Direct evaluation of `X · e^Z|ψ⟩` by truncated adjoint series.

use num_traits::Zero;

use super::context::{Eval, Frame};
use crate::bernoulli::coeff_table;
use crate::error::{Error, Result};
use crate::exactalg::{ad_power_series, ad_powers, exp_coeffs, DiffOp, LiePoly, Polynomial};

/// `D_X` with `X · e^Z|ψ⟩ = D_X e^Z|ψ⟩`.
///
/// `W = e^{−ad Z} X`; the non-raising part of `W` is evaluated on the extreme
/// vector and the raising part `W₊` gives the vector field
/// `V = Σ_k c_k ad_Z^k W₊`. The map `X ↦ D_X` reverses brackets.
pub fn realize_general(frame: &Frame, x: &LiePoly) -> Result<DiffOp> {
    let alg = &frame.alg;
    let nv = frame.nvars();
    let z = frame.z_element();
    let w = ad_power_series(&z, x, alg, exp_coeffs(-1))?;

    let mut scalar = Polynomial::zero(nv);
    for (b, coeff) in w.terms() {
        if let Eval::Scalar(s) = &frame.eval[b] {
            scalar += &(coeff * s);
        }
    }
    let w_plus = w.filter(|b| frame.is_raising(b));
    let powers = ad_powers(&z, &w_plus, alg)?;
    let table = coeff_table(powers.len().max(1))?;
    let mut v = LiePoly::zero(nv);
    for (k, term) in powers.iter().enumerate() {
        let c = table.c_at(k);
        if !c.is_zero() {
            v = v.add(&term.scale(&c));
        }
    }

    let mut op = DiffOp::multiplication(scalar);
    for (b, coeff) in v.terms() {
        let var = frame
            .var_of_basis(b)
            .ok_or_else(|| Error::Ordering(format!("raising element {} has no coordinate", alg.label(b))))?;
        op.add_derivative(var, coeff);
    }
    Ok(op)
}
