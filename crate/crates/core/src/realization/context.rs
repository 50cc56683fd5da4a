//! Orbit contexts: the algebra, the coordinate directions, and the rule by
//! which basis elements act on the extreme vector.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::bernoulli::{coeff_table, CoeffTable};
use crate::error::{Error, Result};
use crate::exactalg::{int, LieAlgebra, LiePoly, Polynomial, Rational, VarSet};
use crate::rootsys::{
    build_root_system, lie_algebra, partition, structure_constants, LieType, ParabolicChoice, Root,
    RootClass, RootSystem, StructureConstants,
};

/// Action of one basis element on the extreme vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eval {
    /// Eigenvalue (Cartan elements).
    Scalar(Polynomial),
    Annihilate,
    /// Orbit direction; not reducible on the extreme vector.
    Raising,
}

/// The data shared by every realization path: an algebra, a polynomial ring
/// whose coordinates are paired with raising basis elements, and the
/// extreme-vector rule.
#[derive(Clone, Debug)]
pub struct Frame {
    pub alg: Arc<LieAlgebra>,
    pub vars: VarSet,
    /// `(coordinate variable, basis element)`; `Z = Σ z_v e_b`.
    pub coordinates: Vec<(usize, usize)>,
    pub eval: Vec<Eval>,
}

impl Frame {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// `Z = Σ z_v e_b` over the coordinates.
    pub fn z_element(&self) -> LiePoly {
        LiePoly::from_terms(
            self.nvars(),
            self.coordinates
                .iter()
                .map(|&(v, b)| (b, Polynomial::var(self.nvars(), v))),
        )
    }

    pub fn is_raising(&self, b: usize) -> bool {
        matches!(self.eval[b], Eval::Raising)
    }

    pub fn var_of_basis(&self, b: usize) -> Option<usize> {
        self.coordinates.iter().find(|&&(_, x)| x == b).map(|&(v, _)| v)
    }

    pub fn basis(&self, b: usize) -> LiePoly {
        LiePoly::basis(self.nvars(), b)
    }
}

/// Extreme weight: symbolic indeterminates `j_1..j_r` or a numeric vector of
/// eigenvalues of the simple coroots `H_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weight {
    Symbolic,
    Numeric(Vec<Rational>),
}

/// Whether the extreme vector is lowest (orbit directions `Δ₊`) or highest
/// (orbit directions `Δ₋`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExtremeKind {
    #[default]
    Lowest,
    Highest,
}

/// A generator of the Cartan–Weyl basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Root(Root),
    /// Simple coroot `H_{i+1}` (0-based index).
    Cartan(usize),
}

impl Generator {
    /// Parses `E[1,-1]`, `E_a1+a2`, `Ea1` or `H2`.
    pub fn parse(s: &str, rank: usize) -> Result<Generator> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('H') {
            let i: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad Cartan generator {s:?}")))?;
            if i == 0 || i > rank {
                return Err(Error::Parse(format!("Cartan index out of range in {s:?}")));
            }
            return Ok(Generator::Cartan(i - 1));
        }
        if let Some(rest) = s.strip_prefix('E') {
            let rest = rest.strip_prefix('_').unwrap_or(rest);
            return Ok(Generator::Root(Root::parse(rest, rank)?));
        }
        Err(Error::Parse(format!("bad generator {s:?}: expected E[..] or Hi")))
    }
}

/// Everything needed to realize a semisimple algebra on `G/P` for one parabolic
/// choice and one extreme weight.
#[derive(Clone, Debug)]
pub struct OrbitContext {
    rs: Arc<RootSystem>,
    parabolic: ParabolicChoice,
    constants: Arc<StructureConstants>,
    coeffs: CoeffTable,
    weight: Weight,
    kind: ExtremeKind,
    weight_values: Vec<Polynomial>,
    frame: Frame,
    var_of_root: HashMap<usize, usize>,
}

impl OrbitContext {
    pub fn new(t: LieType, excluded: &[usize], weight: Weight) -> Result<Self> {
        Self::with_kind(t, excluded, weight, ExtremeKind::Lowest)
    }

    pub fn with_kind(t: LieType, excluded: &[usize], weight: Weight, kind: ExtremeKind) -> Result<Self> {
        let rs = Arc::new(build_root_system(t));
        let sc = Arc::new(structure_constants(&rs));
        Self::from_parts(rs, sc, excluded, weight, kind)
    }

    pub fn from_parts(
        rs: Arc<RootSystem>,
        constants: Arc<StructureConstants>,
        excluded: &[usize],
        weight: Weight,
        kind: ExtremeKind,
    ) -> Result<Self> {
        let parabolic = partition(&rs, excluded)?;
        let rank = rs.rank();
        let coord_class = match kind {
            ExtremeKind::Lowest => RootClass::Plus,
            ExtremeKind::Highest => RootClass::Minus,
        };
        let mut coord_roots: Vec<usize> = parabolic.roots_in(coord_class).collect();
        if kind == ExtremeKind::Highest {
            // order by |height| so simple directions come first
            coord_roots.sort_by_key(|&i| rs.index_of(&rs.root(i).neg()));
        }
        let coords: Vec<(String, String, String)> = coord_roots
            .iter()
            .map(|&i| {
                let r = rs.root(i);
                (
                    format!("z{}", r.bracket_form()),
                    format!("z_{{{}}}", r.latex()),
                    r.to_string(),
                )
            })
            .collect();
        let params: Vec<(String, String)> = (1..=rank)
            .map(|i| (format!("j{i}"), format!("j_{{{i}}}")))
            .collect();
        let vars = VarSet::new(coords, params);
        let nvars = vars.len();

        let weight_values: Vec<Polynomial> = match &weight {
            Weight::Symbolic => (0..rank)
                .map(|i| {
                    if parabolic.is_excluded(i) {
                        Polynomial::zero(nvars)
                    } else {
                        Polynomial::var(nvars, coord_roots.len() + i)
                    }
                })
                .collect(),
            Weight::Numeric(w) => {
                if w.len() != rank {
                    return Err(Error::Argument(format!(
                        "weight has {} components but the rank is {rank}",
                        w.len()
                    )));
                }
                for (i, wi) in w.iter().enumerate() {
                    if parabolic.is_excluded(i) && !wi.is_zero() {
                        return Err(Error::Argument(format!(
                            "weight component j{} must vanish on the excluded simple root a{}",
                            i + 1,
                            i + 1
                        )));
                    }
                }
                w.iter().map(|c| Polynomial::constant(nvars, c.clone())).collect()
            }
        };

        let nroots = rs.len();
        let eval = (0..nroots + rank)
            .map(|b| {
                if b >= nroots {
                    Eval::Scalar(weight_values[b - nroots].clone())
                } else if parabolic.class(b) == coord_class {
                    Eval::Raising
                } else {
                    Eval::Annihilate
                }
            })
            .collect();
        let var_of_root: HashMap<usize, usize> =
            coord_roots.iter().enumerate().map(|(v, &r)| (r, v)).collect();
        let coordinates = coord_roots.iter().enumerate().map(|(v, &r)| (v, r)).collect();
        let alg = Arc::new(lie_algebra(&rs, &constants));
        let coeffs = coeff_table(rs.nu_degree() + 2)?;
        Ok(OrbitContext {
            rs,
            parabolic,
            constants,
            coeffs,
            weight,
            kind,
            weight_values,
            frame: Frame {
                alg,
                vars,
                coordinates,
                eval,
            },
            var_of_root,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn parabolic(&self) -> &ParabolicChoice {
        &self.parabolic
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn coeffs(&self) -> &CoeffTable {
        &self.coeffs
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn kind(&self) -> ExtremeKind {
        self.kind
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.frame.alg
    }

    pub fn vars(&self) -> &VarSet {
        &self.frame.vars
    }

    pub fn nvars(&self) -> usize {
        self.frame.vars.len()
    }

    /// Root indices of the orbit directions, in coordinate order.
    pub fn coordinate_roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.frame.coordinates.iter().map(|&(_, r)| r)
    }

    pub fn is_coordinate_root(&self, root: usize) -> bool {
        self.var_of_root.contains_key(&root)
    }

    /// Coordinate variable `z_α`, if `α` is an orbit direction.
    pub fn var_of_root(&self, root: usize) -> Option<usize> {
        self.var_of_root.get(&root).copied()
    }

    pub fn z(&self, root: usize) -> Option<Polynomial> {
        self.var_of_root(root).map(|v| Polynomial::var(self.nvars(), v))
    }

    /// Eigenvalue `j_k` of `H_k` on the extreme vector.
    pub fn weight_value(&self, k: usize) -> &Polynomial {
        &self.weight_values[k]
    }

    /// `j(H_α) = Σ m_k j_k` for `H_α = [E_α, E_{−α}] = Σ m_k H_k`.
    pub fn weight_on_coroot(&self, root: &Root) -> Polynomial {
        let m = self.rs.coroot_coords(root);
        let mut acc = Polynomial::zero(self.nvars());
        for (k, &mk) in m.iter().enumerate() {
            if mk != 0 {
                acc += &self.weight_values[k].scale(&int(mk.into()));
            }
        }
        acc
    }

    /// `β(H_α)` for the coroot `H_α`.
    pub fn pairing_with_coroot(&self, beta: &Root, alpha: &Root) -> i32 {
        let m = self.rs.coroot_coords(alpha);
        m.iter()
            .enumerate()
            .map(|(k, &mk)| mk * self.rs.pairing(beta, k))
            .sum()
    }

    pub fn nroots(&self) -> usize {
        self.rs.len()
    }

    pub fn cartan_basis(&self, k: usize) -> usize {
        self.rs.len() + k
    }

    pub fn basis_index(&self, g: &Generator) -> Result<usize> {
        match g {
            Generator::Cartan(k) if *k < self.rs.rank() => Ok(self.cartan_basis(*k)),
            Generator::Cartan(k) => Err(Error::Argument(format!("no Cartan generator H{}", k + 1))),
            Generator::Root(r) => self
                .rs
                .index_of(r)
                .ok_or_else(|| Error::Argument(format!("{r} is not a root of {}", self.rs.lie_type()))),
        }
    }

    pub fn generator_of_basis(&self, b: usize) -> Generator {
        if b >= self.rs.len() {
            Generator::Cartan(b - self.rs.len())
        } else {
            Generator::Root(self.rs.root(b).clone())
        }
    }

    /// Names of the excluded simple roots, `a1`-style.
    pub fn parabolic_names(&self) -> Vec<String> {
        self.parabolic.excluded().iter().map(|i| format!("a{}", i + 1)).collect()
    }
}
