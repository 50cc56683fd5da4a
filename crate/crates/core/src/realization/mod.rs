//! Differential-operator realizations of Lie algebras on coadjoint orbits.

mod closed;
mod context;
mod export;
mod product;
mod series;
mod su3;

pub use closed::{
    raising_paths, realize_cartan, realize_cartan_vector, realize_lowering_simple, realize_orthogonal,
    realize_raising,
};
pub use context::{Eval, ExtremeKind, Frame, Generator, OrbitContext, Weight};
pub use export::{
    operator_from_json, operator_to_json, OperatorDocument, OperatorJson, TermJson, WeightDoc,
};
pub use product::{realize_product_coordinates, Factor, Side};
pub use series::realize_general;
pub use su3::{
    coordinate_change_su3, coordinate_change_su3_inverse, gl3_algebra, su3_frame, su3_kernel,
    su3_ordering, su3_realization, su3_variable,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{DiffOp, LiePoly, VarSet};
use crate::par::Exec;

/// How generators are attached to operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `X e_z = D_X e_z` on the coherent-state vector.
    #[default]
    Formal,
    /// `F_X = D_{X⁺}` with `E_α⁺ = E_{−α}` and `H⁺ = H`: the action on
    /// holomorphic functions `f(z) = ⟨e_z̄|f⟩`.
    Fock,
}

impl std::str::FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "formal" => Ok(Convention::Formal),
            "fock" => Ok(Convention::Fock),
            _ => Err(Error::Parse(format!("unknown convention {s:?}: expected formal or fock"))),
        }
    }
}

impl std::fmt::Display for Convention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Convention::Formal => "formal",
            Convention::Fock => "fock",
        })
    }
}

/// Whether `X ↦ D_X` satisfies `[D_X, D_Y] = D_{[X,Y]}` or `D_{[Y,X]}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketSense {
    Preserved,
    Reversed,
}

/// One operator per basis element of the algebra.
#[derive(Clone, Debug)]
pub struct Realization {
    pub vars: VarSet,
    pub labels: Vec<String>,
    pub operators: Vec<DiffOp>,
    pub convention: Convention,
    pub sense: BracketSense,
}

impl Realization {
    pub fn dim(&self) -> usize {
        self.operators.len()
    }

    pub fn operator(&self, b: usize) -> &DiffOp {
        &self.operators[b]
    }

    pub fn operator_by_label(&self, label: &str) -> Option<&DiffOp> {
        self.labels.iter().position(|l| l == label).map(|b| &self.operators[b])
    }

    /// Linear extension `D_{Σ c_b e_b} = Σ c_b D_b`.
    pub fn operator_of(&self, x: &LiePoly) -> DiffOp {
        let mut out = DiffOp::zero(self.vars.len());
        for (b, c) in x.terms() {
            out = &out + &self.operators[b].mul_poly(c);
        }
        out
    }
}

/// `D_X` for every basis element through [`realize_general`].
pub fn realize_frame(frame: &Frame, exec: Exec) -> Result<Realization> {
    let idx: Vec<usize> = (0..frame.alg.dim()).collect();
    let operators = exec
        .map(&idx, |&b| realize_general(frame, &frame.basis(b)))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(Realization {
        vars: frame.vars.clone(),
        labels: frame.alg.labels().to_vec(),
        operators,
        convention: Convention::Formal,
        sense: BracketSense::Reversed,
    })
}

/// Basis index of `X⁺`.
pub fn adjoint_basis(ctx: &OrbitContext, b: usize) -> usize {
    if b < ctx.nroots() {
        ctx.root_system().negative_index(b)
    } else {
        b
    }
}

/// The full realization of a semisimple context.
pub fn realize_all(ctx: &OrbitContext, convention: Convention, exec: Exec) -> Result<Realization> {
    let formal = realize_frame(ctx.frame(), exec)?;
    Ok(match convention {
        Convention::Formal => formal,
        Convention::Fock => Realization {
            operators: (0..formal.dim())
                .map(|b| formal.operators[adjoint_basis(ctx, b)].clone())
                .collect(),
            convention,
            sense: BracketSense::Preserved,
            ..formal
        },
    })
}

/// One operator, `D_g` or `F_g`.
pub fn realize_generator(ctx: &OrbitContext, g: &Generator, convention: Convention) -> Result<DiffOp> {
    let b = ctx.basis_index(g)?;
    let b = match convention {
        Convention::Formal => b,
        Convention::Fock => adjoint_basis(ctx, b),
    };
    realize_general(ctx.frame(), &ctx.frame().basis(b))
}

#[cfg(test)]
mod tests;
