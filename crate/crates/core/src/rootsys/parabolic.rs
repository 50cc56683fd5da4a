use serde::Serialize;

use super::roots::RootSystem;
use crate::error::{Error, Result};

/// Which block of the parabolic decomposition a root belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootClass {
    /// Nilradical directions (orbit coordinates).
    Plus,
    /// Reductive part: roots supported on the excluded simple roots.
    Zero,
    Minus,
}

/// The partition `Δ₊ / Δ₀ / Δ₋` determined by a set `Φ` of simple roots.
/// `Φ = ∅` is the Borel case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicChoice {
    excluded: Vec<usize>,
    classes: Vec<RootClass>,
}

impl ParabolicChoice {
    pub fn excluded(&self) -> &[usize] {
        &self.excluded
    }

    pub fn class(&self, root: usize) -> RootClass {
        self.classes[root]
    }

    pub fn classes(&self) -> &[RootClass] {
        &self.classes
    }

    pub fn roots_in(&self, class: RootClass) -> impl Iterator<Item = usize> + '_ {
        self.classes
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == class)
            .map(|(i, _)| i)
    }

    pub fn is_borel(&self) -> bool {
        self.excluded.is_empty()
    }

    pub fn is_excluded(&self, simple: usize) -> bool {
        self.excluded.contains(&simple)
    }
}

/// Partitions `rs` by the excluded simple-root indices (0-based).
pub fn partition(rs: &RootSystem, excluded: &[usize]) -> Result<ParabolicChoice> {
    let mut ex: Vec<usize> = excluded.to_vec();
    ex.sort_unstable();
    ex.dedup();
    if let Some(&bad) = ex.iter().find(|&&i| i >= rs.rank()) {
        return Err(Error::Argument(format!(
            "excluded simple root index {} out of range for rank {}",
            bad + 1,
            rs.rank()
        )));
    }
    let classes = rs
        .roots()
        .iter()
        .map(|r| {
            let outside = r
                .coords()
                .iter()
                .enumerate()
                .any(|(mu, &c)| c != 0 && !ex.contains(&mu));
            match (outside, r.is_positive()) {
                (false, _) => RootClass::Zero,
                (true, true) => RootClass::Plus,
                (true, false) => RootClass::Minus,
            }
        })
        .collect();
    Ok(ParabolicChoice {
        excluded: ex,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::super::roots::{build_root_system, Root};
    use super::*;

    fn plus_roots(rs: &RootSystem, p: &ParabolicChoice) -> Vec<Root> {
        p.roots_in(RootClass::Plus).map(|i| rs.root(i).clone()).collect()
    }

    #[test]
    fn borel_a2() {
        let rs = build_root_system("A2".parse().unwrap());
        let p = partition(&rs, &[]).unwrap();
        assert_eq!(p.roots_in(RootClass::Zero).count(), 0);
        assert_eq!(plus_roots(&rs, &p).len(), 3);
        assert!(p.is_borel());
    }

    #[test]
    fn projective_plane_a2() {
        let rs = build_root_system("A2".parse().unwrap());
        let p = partition(&rs, &[1]).unwrap();
        let zero: Vec<Root> = p.roots_in(RootClass::Zero).map(|i| rs.root(i).clone()).collect();
        assert_eq!(zero, vec![Root::new(vec![0, -1]), Root::new(vec![0, 1])]);
        assert_eq!(
            plus_roots(&rs, &p),
            vec![Root::new(vec![1, 0]), Root::new(vec![1, 1])]
        );
    }

    #[test]
    fn a1_borel() {
        let rs = build_root_system("A1".parse().unwrap());
        let p = partition(&rs, &[]).unwrap();
        assert_eq!(plus_roots(&rs, &p), vec![Root::new(vec![1])]);
    }

    #[test]
    fn out_of_range_rejected() {
        let rs = build_root_system("A2".parse().unwrap());
        assert!(partition(&rs, &[2]).is_err());
    }
}
