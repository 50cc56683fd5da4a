//! Chevalley-basis structure constants `N_{α,β}` with `[E_α, E_β] = N_{α,β} E_{α+β}`.
//!
//! Signs are fixed by declaring `N_{α,β} = +(p+1)` on every extraspecial pair
//! (the pair `(α, ξ−α)` with `α` minimal in root order among positive roots
//! with `ξ−α` positive). All remaining constants follow from the identities
//! of a Chevalley basis:
//!
//! - `N_{α,β} = −N_{β,α}`, `N_{−α,−β} = −N_{α,β}`;
//! - for `α+β+γ = 0`: `N_{α,β}/(γ,γ) = N_{β,γ}/(α,α) = N_{γ,α}/(β,β)`;
//! - for `α+β+γ+δ = 0`, no two opposite:
//!   `N_{α,β}N_{γ,δ}/(α+β)² + N_{β,γ}N_{α,δ}/(β+γ)² + N_{γ,α}N_{β,δ}/(γ+α)² = 0`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};

use super::roots::RootSystem;
use crate::exactalg::{int, LieAlgebra, Rational};

#[derive(Clone, Debug)]
pub struct StructureConstants {
    table: BTreeMap<(usize, usize), Rational>,
}

impl StructureConstants {
    /// `N_{α,β}` by root index; zero when `α+β` is not a root.
    pub fn n(&self, a: usize, b: usize) -> Rational {
        self.table.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn get(&self, a: usize, b: usize) -> Option<&Rational> {
        self.table.get(&(a, b))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.table.iter()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

struct Builder<'a> {
    rs: &'a RootSystem,
    pos: HashMap<(usize, usize), Rational>,
}

impl Builder<'_> {
    fn norm(&self, i: usize) -> Rational {
        let r = self.rs.root(i);
        self.rs.inner(r, r)
    }

    fn positive(&self, i: usize) -> bool {
        self.rs.root(i).is_positive()
    }

    fn pos_n(&self, a: usize, b: usize) -> Rational {
        self.pos
            .get(&(a, b))
            .cloned()
            .expect("positive pair computed in height order")
    }

    /// `N_{a,b}` for arbitrary roots, reduced to positive pairs of smaller height.
    fn general(&self, a: usize, b: usize) -> Rational {
        let rs = self.rs;
        let Some(s) = rs.sum_index(a, b) else {
            return Rational::zero();
        };
        match (self.positive(a), self.positive(b)) {
            (true, true) => self.pos_n(a, b),
            (false, false) => -self.pos_n(rs.negative_index(a), rs.negative_index(b)),
            (false, true) => -self.general(b, a),
            (true, false) => {
                let nb = rs.negative_index(b);
                if self.positive(s) {
                    // N_{a,b}/(s,s) = N_{b,−s}/(a,a), N_{b,−s} = −N_{−b,s}
                    -self.norm(s) / self.norm(a) * self.pos_n(nb, s)
                } else {
                    let ns = rs.negative_index(s);
                    // N_{a,b}/(s,s) = N_{−s,a}/(b,b)
                    self.norm(s) / self.norm(b) * self.pos_n(ns, a)
                }
            }
        }
    }
}

pub fn structure_constants(rs: &RootSystem) -> StructureConstants {
    let positives: Vec<usize> = rs.positive_roots().collect();
    let mut b = Builder {
        rs,
        pos: HashMap::new(),
    };
    // positive roots are already in height order
    for &xi in &positives {
        let mut pairs: Vec<(usize, usize)> = positives
            .iter()
            .filter_map(|&a| {
                let rest = rs.root(xi).sub(rs.root(a));
                let bi = rs.index_of(&rest)?;
                (rest.is_positive() && a < bi).then_some((a, bi))
            })
            .collect();
        if pairs.is_empty() {
            continue;
        }
        pairs.sort();
        let (g, d) = pairs[0];
        let p = rs.string_down(rs.root(g), rs.root(d));
        let n_gd = int((p + 1).into());
        b.pos.insert((g, d), n_gd.clone());
        b.pos.insert((d, g), -n_gd.clone());
        let ng = rs.negative_index(g);
        let nd = rs.negative_index(d);
        let n_neg_gd = -n_gd;
        for &(al, be) in &pairs[1..] {
            let mut sum = Rational::zero();
            // N_{β,−γ} N_{α,−δ} / (β−γ)²
            if let Some(s) = rs.sum_index(be, ng) {
                sum += b.general(be, ng) * b.general(al, nd) / b.norm(s);
            }
            // N_{−γ,α} N_{β,−δ} / (α−γ)²
            if let Some(s) = rs.sum_index(ng, al) {
                sum += b.general(ng, al) * b.general(be, nd) / b.norm(s);
            }
            let n = -b.norm(xi) * sum / &n_neg_gd;
            b.pos.insert((al, be), n.clone());
            b.pos.insert((be, al), -n);
        }
    }

    let mut table = BTreeMap::new();
    for a in 0..rs.len() {
        for c in 0..rs.len() {
            if rs.sum_index(a, c).is_some() {
                table.insert((a, c), b.general(a, c));
            }
        }
    }
    StructureConstants { table }
}

/// Basis labels: roots as `E[..]` in root order, then `H1..Hr`.
pub fn basis_labels(rs: &RootSystem) -> Vec<String> {
    rs.roots()
        .iter()
        .map(|r| format!("E{}", r.bracket_form()))
        .chain((1..=rs.rank()).map(|i| format!("H{i}")))
        .collect()
}

/// The Cartan–Weyl bracket table on `{E_α} ∪ {H_i}`:
/// `[H_i, E_β] = β(H_i) E_β`, `[E_α, E_{−α}] = H_α`, `[E_α, E_β] = N_{α,β} E_{α+β}`.
pub fn lie_algebra(rs: &RootSystem, sc: &StructureConstants) -> LieAlgebra {
    let nroots = rs.len();
    let rank = rs.rank();
    LieAlgebra::new(basis_labels(rs), |a, b| {
        let cartan = |x: usize| (x >= nroots).then(|| x - nroots);
        match (cartan(a), cartan(b)) {
            (Some(_), Some(_)) => vec![],
            (Some(i), None) => {
                let w = rs.pairing(rs.root(b), i);
                vec![(b, int(w.into()))]
            }
            (None, Some(i)) => {
                let w = rs.pairing(rs.root(a), i);
                vec![(a, int((-w).into()))]
            }
            (None, None) => {
                let ra = rs.root(a);
                let rb = rs.root(b);
                if ra.add(rb).is_zero() {
                    let m = rs.coroot_coords(ra);
                    (0..rank)
                        .filter(|&i| m[i] != 0)
                        .map(|i| (nroots + i, int(m[i].into())))
                        .collect()
                } else {
                    match (rs.sum_index(a, b), sc.get(a, b)) {
                        (Some(s), Some(n)) => vec![(s, n.clone())],
                        _ => vec![],
                    }
                }
            }
        }
    })
}

/// `|N_{α,β}| = p + 1` on every defined pair, `p = max{k : β − kα ∈ Σ}`.
pub fn magnitude_matches_string(rs: &RootSystem, sc: &StructureConstants) -> bool {
    sc.iter().all(|(&(a, b), n)| {
        let p = rs.string_down(rs.root(a), rs.root(b));
        n.abs() == int((p + 1).into())
    })
}
