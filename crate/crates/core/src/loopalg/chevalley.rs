use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, FiniteRootSystem};

/// A Chevalley basis element: a root vector `X_γ` (by root index) or a
/// simple coroot `H_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    X(usize),
    H(usize),
}

const EXHAUSTIVE_JACOBI_DIM: usize = 40;

/// A split simple Lie algebra in a Chevalley basis, for simply-laced types.
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    ty: CartanType,
    sys: FiniteRootSystem,
    orientation: Vec<(usize, usize)>,
    sum: Vec<Vec<Option<usize>>>,
    n: Vec<Vec<i64>>,
}

fn adjacency(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let r = cartan.len();
    (0..r).map(|i| (0..r).filter(|&j| j != i && cartan[i][j] != 0).collect()).collect()
}

/// Orientation of the Dynkin diagram compatible with a diagram automorphism.
///
/// Distances are measured from the σ₀-fixed vertices (or, if there are none,
/// from the vertices adjacent to their image). Type A edges point toward that
/// set, all others away from it; ties go from the lower to the higher index.
pub fn symmetric_orientation(ty: CartanType, sigma0: &[usize]) -> Vec<(usize, usize)> {
    let adj = adjacency(&ty.cartan_matrix());
    let r = ty.rank;
    let mut base: Vec<usize> = (0..r).filter(|&i| sigma0[i] == i).collect();
    if base.is_empty() {
        base = (0..r).filter(|&i| adj[i].contains(&sigma0[i])).collect();
    }
    let mut dist = vec![usize::MAX; r];
    let mut queue: VecDeque<usize> = base.iter().copied().collect();
    for &b in &base {
        dist[b] = 0;
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let inward = ty.family == Family::A;
    let mut edges = Vec::new();
    for i in 0..r {
        for &j in &adj[i] {
            if i < j {
                let (near, far) = if dist[i] <= dist[j] { (i, j) } else { (j, i) };
                let edge = if dist[i] == dist[j] {
                    (i, j)
                } else if inward {
                    (far, near)
                } else {
                    (near, far)
                };
                edges.push(edge);
            }
        }
    }
    edges
}

pub fn build_chevalley(label: &str) -> Result<ChevalleyAlgebra> {
    let ty: CartanType = label.parse()?;
    let id: Vec<usize> = (0..ty.rank).collect();
    ChevalleyAlgebra::new(ty, symmetric_orientation(ty, &id))
}

impl ChevalleyAlgebra {
    pub fn new(ty: CartanType, orientation: Vec<(usize, usize)>) -> Result<Self> {
        if !ty.is_simply_laced() {
            return Err(Error::NotSimplyLaced(ty.to_string()));
        }
        let sys = FiniteRootSystem::build(ty);
        let r = ty.rank;
        let mut odd = vec![vec![false; r]; r];
        for i in 0..r {
            odd[i][i] = true;
        }
        for &(i, j) in &orientation {
            odd[i][j] = true;
        }
        let eps = |g: &[i64], d: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..r {
                for j in 0..r {
                    if odd[i][j] {
                        s += g[i] * d[j];
                    }
                }
            }
            if s.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        };
        let sign = |idx: usize| if sys.is_positive(idx) { 1 } else { -1 };
        let nr = sys.num_roots();
        let mut sum = vec![vec![None; nr]; nr];
        let mut n = vec![vec![0i64; nr]; nr];
        for g in 0..nr {
            for d in 0..nr {
                let s: Vec<i64> = sys.root(g).iter().zip(sys.root(d)).map(|(a, b)| a + b).collect();
                if let Some(t) = sys.root_index(&s) {
                    sum[g][d] = Some(t);
                    n[g][d] = sign(g) * sign(d) * sign(t) * eps(sys.root(g), sys.root(d));
                }
            }
        }
        let alg = Self { ty, sys, orientation, sum, n };
        alg.check_relations()?;
        Ok(alg)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn root_system(&self) -> &FiniteRootSystem {
        &self.sys
    }

    pub fn orientation(&self) -> &[(usize, usize)] {
        &self.orientation
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn dim(&self) -> usize {
        self.sys.num_roots() + self.rank()
    }

    pub fn basis(&self) -> impl Iterator<Item = Basis> + '_ {
        (0..self.sys.num_roots()).map(Basis::X).chain((0..self.rank()).map(Basis::H))
    }

    /// `N_{γ,δ}`, zero when γ + δ is not a root.
    pub fn structure_constant(&self, g: usize, d: usize) -> i64 {
        self.n[g][d]
    }

    pub fn root_sum(&self, g: usize, d: usize) -> Option<usize> {
        self.sum[g][d]
    }

    /// Bracket of two basis elements as a list of integer coefficients.
    pub fn bracket_basis(&self, a: Basis, b: Basis) -> Vec<(Basis, i64)> {
        match (a, b) {
            (Basis::X(g), Basis::X(d)) => {
                if d == self.sys.negate(g) {
                    self.coroot_terms(g)
                } else if let Some(t) = self.sum[g][d] {
                    vec![(Basis::X(t), self.n[g][d])]
                } else {
                    Vec::new()
                }
            }
            (Basis::H(i), Basis::X(g)) => {
                let p: i64 = (0..self.rank()).map(|j| self.sys.cartan()[i][j] * self.sys.root(g)[j]).sum();
                if p == 0 {
                    Vec::new()
                } else {
                    vec![(Basis::X(g), p)]
                }
            }
            (Basis::X(_), Basis::H(_)) => self.bracket_basis(b, a).into_iter().map(|(x, c)| (x, -c)).collect(),
            (Basis::H(_), Basis::H(_)) => Vec::new(),
        }
    }

    /// `H_γ` in terms of the simple coroots.
    pub fn coroot_terms(&self, g: usize) -> Vec<(Basis, i64)> {
        self.sys.coroot(g).0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (Basis::H(i), c)).collect()
    }

    /// `[a, [b, c]] + [b, [c, a]] + [c, [a, b]]`, nonzero terms only.
    pub fn jacobiator(&self, a: Basis, b: Basis, c: Basis) -> Vec<(Basis, i64)> {
        let mut acc = std::collections::BTreeMap::new();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for (t, k) in self.bracket_basis(y, z) {
                for (s, l) in self.bracket_basis(x, t) {
                    *acc.entry(s).or_insert(0) += k * l;
                }
            }
        }
        acc.into_iter().filter(|&(_, v)| v != 0).collect()
    }

    fn check_relations(&self) -> Result<()> {
        let basis: Vec<Basis> = self.basis().collect();
        for &a in &basis {
            for &b in &basis {
                let mut ab = self.bracket_basis(a, b);
                let mut ba: Vec<_> = self.bracket_basis(b, a).into_iter().map(|(x, c)| (x, -c)).collect();
                ab.sort();
                ba.sort();
                if ab != ba {
                    return Err(Error::Inconsistent(format!("antisymmetry fails on {a:?}, {b:?}")));
                }
            }
        }
        for g in 0..self.sys.num_roots() {
            for d in 0..self.sys.num_roots() {
                if self.sum[g][d].is_some() && self.n[g][d].abs() != 1 {
                    return Err(Error::Inconsistent(format!("N = {} on roots {g}, {d}", self.n[g][d])));
                }
            }
        }
        // ad x is a derivation for x in a subalgebra, so generators suffice
        // once the algebra is large
        let first: Vec<Basis> = if self.dim() <= EXHAUSTIVE_JACOBI_DIM {
            basis.clone()
        } else {
            (0..self.rank())
                .flat_map(|i| {
                    let s = self.sys.simple_root_index(i);
                    [Basis::X(s), Basis::X(self.sys.negate(s))]
                })
                .collect()
        };
        for &a in &first {
            for &b in &basis {
                for &c in &basis {
                    if !self.jacobiator(a, b, c).is_empty() {
                        return Err(Error::Inconsistent(format!("Jacobi fails on {a:?}, {b:?}, {c:?}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Human-readable name: `H2` or `X(1,1,0)`, with 1-based coroot labels.
    pub fn basis_name(&self, b: Basis) -> String {
        match b {
            Basis::H(i) => format!("H{}", i + 1),
            Basis::X(g) => {
                let c: Vec<String> = self.sys.root(g).iter().map(i64::to_string).collect();
                format!("X({})", c.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_relations() {
        let a = build_chevalley("A1").unwrap();
        let (x, y) = (Basis::X(0), Basis::X(1));
        assert_eq!(a.bracket_basis(x, y), vec![(Basis::H(0), 1)]);
        assert_eq!(a.bracket_basis(Basis::H(0), x), vec![(x, 2)]);
        assert_eq!(a.bracket_basis(Basis::H(0), y), vec![(y, -2)]);
    }

    #[test]
    fn a2_sign_from_orientation() {
        let a = build_chevalley("A2").unwrap();
        let s = a.root_system();
        let (a1, a2) = (s.simple_root_index(0), s.simple_root_index(1));
        assert_eq!(a.orientation(), &[(0, 1)]);
        assert_eq!(a.structure_constant(a1, a2), -1);
        assert_eq!(a.structure_constant(a2, a1), 1);
    }

    #[test]
    fn d4_triality_orientation() {
        let ty: CartanType = "D4".parse().unwrap();
        let o = symmetric_orientation(ty, &[2, 1, 3, 0]);
        assert_eq!(o, vec![(1, 0), (1, 2), (1, 3)]);
        let alg = ChevalleyAlgebra::new(ty, o).unwrap();
        assert_eq!(alg.dim(), 28);
    }

    #[test]
    fn a_type_points_to_center() {
        let ty: CartanType = "A5".parse().unwrap();
        let o = symmetric_orientation(ty, &[4, 3, 2, 1, 0]);
        assert_eq!(o, vec![(0, 1), (1, 2), (3, 2), (4, 3)]);
        let ty: CartanType = "A4".parse().unwrap();
        assert_eq!(symmetric_orientation(ty, &[3, 2, 1, 0]), vec![(0, 1), (1, 2), (3, 2)]);
    }

    #[test]
    fn rejects_non_simply_laced() {
        assert!(matches!(build_chevalley("B2"), Err(Error::NotSimplyLaced(_))));
    }
}
