use std::collections::{HashMap, HashSet};
use std::fmt;

use num_traits::Zero;

use super::types::LieType;
use crate::error::{Error, Result};
use crate::exactalg::{int, Rational};

/// A root as its coefficient vector over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Root(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i32) -> Root {
        Root(self.0.iter().map(|c| c * k).collect())
    }

    /// Bracket form used for variable and generator names: `[1,-1]`.
    pub fn bracket_form(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// LaTeX form `\alpha_1+2\alpha_2`.
    pub fn latex(&self) -> String {
        render_combination(&self.0, "\\alpha_")
    }

    /// Parses either the `a1+2a2` grammar or the bracket form `[1,2]`.
    pub fn parse(s: &str, rank: usize) -> Result<Root> {
        let s = s.trim();
        let bad = |why: &str| Error::Parse(format!("bad root {s:?}: {why}"));
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let coords: std::result::Result<Vec<i32>, _> =
                inner.split(',').map(|c| c.trim().parse::<i32>()).collect();
            let coords = coords.map_err(|_| bad("expected integers"))?;
            if coords.len() != rank {
                return Err(bad("wrong number of coordinates"));
            }
            return Ok(Root(coords));
        }
        let mut coords = vec![0i32; rank];
        let mut rest = s;
        if rest.is_empty() {
            return Err(bad("empty"));
        }
        while !rest.is_empty() {
            let (sign, tail) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let a_pos = tail.find('a').ok_or_else(|| bad("missing 'a'"))?;
            let mult: i32 = if a_pos == 0 {
                1
            } else {
                tail[..a_pos].parse().map_err(|_| bad("bad multiplicity"))?
            };
            let after = &tail[a_pos + 1..];
            let end = after
                .find(['+', '-'])
                .unwrap_or(after.len());
            let idx: usize = after[..end].parse().map_err(|_| bad("bad index"))?;
            if idx == 0 || idx > rank {
                return Err(bad("index out of range"));
            }
            coords[idx - 1] += sign * mult;
            rest = &after[end..];
        }
        Ok(Root(coords))
    }
}

fn render_combination(coords: &[i32], symbol: &str) -> String {
    let mut out = String::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(symbol);
        out.push_str(&(i + 1).to_string());
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders `a1+2a2`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_combination(&self.0, "a"))
    }
}

/// The root system of a simple type, generated by string closure from the
/// Cartan matrix. Roots are sorted by height, then by descending coordinates,
/// so the simple roots appear as `α_1, α_2, …`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i32>>,
    gram: Vec<Vec<Rational>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    simple: Vec<usize>,
    highest: usize,
}

fn sort_key(r: &Root) -> (i32, std::cmp::Reverse<Vec<i32>>) {
    (r.height(), std::cmp::Reverse(r.0.clone()))
}

pub fn build_root_system(t: LieType) -> RootSystem {
    let cartan = t.cartan_matrix();
    let n = t.rank();
    let gram = gram_matrix(&cartan);

    let mut positive: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut known: HashSet<Root> = positive.iter().cloned().collect();
    let mut layer = positive.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let ai = Root::simple(n, i);
                // α_i-string through β: β − pα_i, …, β + qα_i with p − q = ⟨β, α_i^∨⟩
                let mut p = 0;
                while known.contains(&beta.sub(&ai.scaled(p + 1))) {
                    p += 1;
                }
                let pairing: i32 = (0..n).map(|k| beta.0[k] * cartan[i][k]).sum();
                if p - pairing > 0 {
                    let up = beta.add(&ai);
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        positive.extend(next.iter().cloned());
        layer = next;
    }

    let mut roots: Vec<Root> = positive.iter().map(Root::neg).collect();
    roots.extend(positive);
    roots.sort_by_key(sort_key);
    let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let simple = (0..n).map(|i| index[&Root::simple(n, i)]).collect();
    let highest = roots.len() - 1;
    RootSystem {
        lie_type: t,
        cartan,
        gram,
        roots,
        index,
        simple,
        highest,
    }
}

/// `(α_i, α_j)` from the symmetrizable Cartan matrix, with `(α_1, α_1) = 2`.
fn gram_matrix(cartan: &[Vec<i32>]) -> Vec<Vec<Rational>> {
    let n = cartan.len();
    let mut len: Vec<Option<Rational>> = vec![None; n];
    len[0] = Some(int(2));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && len[j].is_none() {
                // A_ij l_i = A_ji l_j
                let lj = len[i].clone().unwrap() * int(cartan[i][j].into()) / int(cartan[j][i].into());
                len[j] = Some(lj);
                stack.push(j);
            }
        }
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let li = len[i].clone().expect("Dynkin diagram is connected");
                    li * int(cartan[i][j].into()) / int(2)
                })
                .collect()
        })
        .collect()
}

impl RootSystem {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// All roots in canonical order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Index of `α_i + α_j` when it is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.index_of(&self.roots[i].add(&self.roots[j]))
    }

    pub fn negative_index(&self, i: usize) -> usize {
        self.index[&self.roots[i].neg()]
    }

    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    /// Indices of the positive roots, in canonical order.
    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (self.roots.len() / 2)..self.roots.len()
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn highest_index(&self) -> usize {
        self.highest
    }

    pub fn dimension(&self) -> usize {
        self.roots.len() + self.rank()
    }

    /// The Killing-normalized inner product with `(α_1, α_1) = 2`.
    pub fn inner(&self, a: &Root, b: &Root) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b.0[j] != 0 {
                    acc += &self.gram[i][j] * int((a.0[i] * b.0[j]).into());
                }
            }
        }
        acc
    }

    /// `β(H_i) = ⟨β, α_i^∨⟩` for the simple coroot `H_i`.
    pub fn pairing(&self, beta: &Root, i: usize) -> i32 {
        (0..self.rank()).map(|k| beta.0[k] * self.cartan[i][k]).sum()
    }

    /// Coefficients of the coroot `α^∨` over the simple coroots, so that
    /// `H_α = [E_α, E_{−α}] = Σ m_i H_i`.
    pub fn coroot_coords(&self, alpha: &Root) -> Vec<i32> {
        let norm = self.inner(alpha, alpha);
        (0..self.rank())
            .map(|i| {
                let m = int(alpha.0[i].into()) * &self.gram[i][i] / &norm;
                assert!(m.is_integer(), "coroot coefficient must be integral");
                i32::try_from(m.to_integer()).expect("small coroot coefficient")
            })
            .collect()
    }

    /// `max{k : β − kα ∈ Σ}`.
    pub fn string_down(&self, alpha: &Root, beta: &Root) -> i32 {
        let mut p = 0;
        while self.contains(&beta.sub(&alpha.scaled(p + 1))) {
            p += 1;
        }
        p
    }

    /// `height(θ) − 1`, the degree bound of the raising series.
    pub fn nu_degree(&self) -> usize {
        (self.highest_root().height() - 1) as usize
    }
}

pub fn nu_degree(rs: &RootSystem) -> usize {
    rs.nu_degree()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    #[test]
    fn a1_is_forced() {
        let r = rs("A1");
        assert_eq!(r.roots(), &[Root::new(vec![-1]), Root::new(vec![1])]);
        assert_eq!(r.highest_root(), &Root::new(vec![1]));
    }

    #[test]
    fn a2_positive_roots() {
        let r = rs("A2");
        let pos: Vec<Root> = r.positive_roots().map(|i| r.root(i).clone()).collect();
        assert_eq!(
            pos,
            vec![Root::new(vec![1, 0]), Root::new(vec![0, 1]), Root::new(vec![1, 1])]
        );
        assert_eq!(r.len(), 6);
    }

    #[test]
    fn g2_highest_root() {
        let r = rs("G2");
        assert_eq!(r.len(), 12);
        assert_eq!(r.highest_root(), &Root::new(vec![3, 2]));
        assert_eq!(r.highest_root().height(), 5);
    }

    #[test]
    fn root_grammar() {
        let r = Root::new(vec![1, 2]);
        assert_eq!(r.to_string(), "a1+2a2");
        assert_eq!(r.neg().to_string(), "-a1-2a2");
        assert_eq!(r.bracket_form(), "[1,2]");
        assert_eq!(r.latex(), "\\alpha_1+2\\alpha_2");
        assert_eq!(Root::parse("a1+2a2", 2).unwrap(), r);
        assert_eq!(Root::parse("-a1-2a2", 2).unwrap(), r.neg());
        assert_eq!(Root::parse("[1,2]", 2).unwrap(), r);
        assert!(Root::parse("a3", 2).is_err());
        assert!(Root::parse("[1]", 2).is_err());
    }

    #[test]
    fn coroots_of_b2() {
        // α_1 long, α_2 short; α_1+α_2 short, α_1+2α_2 long
        let r = rs("B2");
        assert_eq!(r.coroot_coords(&Root::new(vec![1, 1])), vec![2, 1]);
        assert_eq!(r.coroot_coords(&Root::new(vec![1, 2])), vec![1, 1]);
        assert_eq!(r.pairing(&Root::new(vec![0, 1]), 0), -1);
        assert_eq!(r.pairing(&Root::new(vec![1, 0]), 1), -2);
    }
}
