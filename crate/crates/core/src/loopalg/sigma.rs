use super::chevalley::{Basis, ChevalleyAlgebra};
use crate::error::{Error, Result};

/// A diagram automorphism lifted to the Lie algebra:
/// `σ₀(X_γ) = c_γ X_{σ₀γ}`, `σ₀(H_i) = H_{σ₀(i)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTable {
    simple: Vec<usize>,
    root_perm: Vec<usize>,
    signs: Vec<i64>,
    order: u32,
}

impl SigmaTable {
    pub fn simple_perm(&self) -> &[usize] {
        &self.simple
    }

    pub fn root_perm(&self) -> &[usize] {
        &self.root_perm
    }

    pub fn sign(&self, root: usize) -> i64 {
        self.signs[root]
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn apply_basis(&self, b: Basis) -> (Basis, i64) {
        match b {
            Basis::X(g) => (Basis::X(self.root_perm[g]), self.signs[g]),
            Basis::H(i) => (Basis::H(self.simple[i]), 1),
        }
    }
}

/// Extends a diagram automorphism to the algebra through brackets of
/// simple root vectors.
pub fn sigma0_automorphism(alg: &ChevalleyAlgebra, perm: &[usize]) -> Result<SigmaTable> {
    let sys = alg.root_system();
    let r = sys.rank();
    let bad = |why: String| Error::InvalidAutomorphism(format!("{perm:?}: {why}"));
    if perm.len() != r {
        return Err(bad("wrong length".into()));
    }
    let c = sys.cartan();
    if (0..r).any(|i| perm[i] >= r || (0..r).any(|j| perm[j] >= r || c[perm[i]][perm[j]] != c[i][j])) {
        return Err(bad("not a diagram automorphism".into()));
    }
    let nr = sys.num_roots();
    let mut root_perm = vec![0; nr];
    for (g, slot) in root_perm.iter_mut().enumerate() {
        let mut img = vec![0; r];
        for (i, &x) in sys.root(g).iter().enumerate() {
            img[perm[i]] = x;
        }
        *slot = sys.root_index(&img).ok_or_else(|| bad("image is not a root".into()))?;
    }

    // roots are ordered by height, so every predecessor is already signed
    let mut signs = vec![0i64; nr];
    for g in 0..nr {
        let positive = sys.is_positive(g);
        if sys.height(g).abs() == 1 {
            signs[g] = 1;
            continue;
        }
        let (s, d) = (0..r)
            .find_map(|i| {
                let s = sys.simple_root_index(i);
                let s = if positive { s } else { sys.negate(s) };
                let d: Vec<i64> = sys.root(g).iter().zip(sys.root(s)).map(|(a, b)| a - b).collect();
                sys.root_index(&d).map(|d| (s, d))
            })
            .ok_or_else(|| bad(format!("root {:?} has no predecessor", sys.root(g))))?;
        if signs[d] == 0 {
            return Err(Error::Inconsistent(format!("predecessor of root {g} unsigned")));
        }
        // X_γ = N_{s,d} [X_s, X_d], N = ±1
        signs[g] = signs[d] * alg.structure_constant(root_perm[s], root_perm[d]) * alg.structure_constant(s, d);
    }

    let mut order = 1u32;
    let mut p: Vec<usize> = perm.to_vec();
    while p.iter().enumerate().any(|(i, &x)| i != x) {
        p = p.iter().map(|&x| perm[x]).collect();
        order += 1;
    }
    let table = SigmaTable { simple: perm.to_vec(), root_perm, signs, order };
    check_homomorphism(alg, &table)?;
    check_order(alg, &table)?;
    Ok(table)
}

fn apply_terms(t: &SigmaTable, terms: Vec<(Basis, i64)>) -> Vec<(Basis, i64)> {
    let mut out: Vec<(Basis, i64)> = terms
        .into_iter()
        .map(|(b, k)| {
            let (b2, s) = t.apply_basis(b);
            (b2, s * k)
        })
        .collect();
    out.sort();
    out
}

fn check_homomorphism(alg: &ChevalleyAlgebra, t: &SigmaTable) -> Result<()> {
    let basis: Vec<Basis> = alg.basis().collect();
    for &a in &basis {
        let (sa, ka) = t.apply_basis(a);
        for &b in &basis {
            let (sb, kb) = t.apply_basis(b);
            let lhs = apply_terms(t, alg.bracket_basis(a, b));
            let mut rhs: Vec<(Basis, i64)> =
                alg.bracket_basis(sa, sb).into_iter().map(|(x, k)| (x, k * ka * kb)).collect();
            rhs.sort();
            if lhs != rhs {
                return Err(Error::Inconsistent(format!("σ₀ is not a homomorphism on {a:?}, {b:?}")));
            }
        }
    }
    Ok(())
}

fn check_order(alg: &ChevalleyAlgebra, t: &SigmaTable) -> Result<()> {
    for b in alg.basis() {
        let (mut cur, mut sign) = (b, 1);
        for _ in 0..t.order {
            let (next, s) = t.apply_basis(cur);
            cur = next;
            sign *= s;
        }
        if cur != b || sign != 1 {
            return Err(Error::Inconsistent(format!("σ₀^{} ≠ id on {b:?}", t.order)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loopalg::chevalley::{build_chevalley, symmetric_orientation};
    use crate::rootsys::CartanType;

    #[test]
    fn identity() {
        let alg = build_chevalley("A3").unwrap();
        let t = sigma0_automorphism(&alg, &[0, 1, 2]).unwrap();
        assert_eq!(t.order(), 1);
        assert!(alg.basis().all(|b| t.apply_basis(b) == (b, 1)));
    }

    #[test]
    fn a2_flip_negates_highest_root() {
        let ty: CartanType = "A2".parse().unwrap();
        let alg = ChevalleyAlgebra::new(ty, symmetric_orientation(ty, &[1, 0])).unwrap();
        let t = sigma0_automorphism(&alg, &[1, 0]).unwrap();
        let theta = alg.root_system().highest_root();
        assert_eq!(t.apply_basis(Basis::X(theta)), (Basis::X(theta), -1));
        assert_eq!(t.order(), 2);
    }

    #[test]
    fn d4_rotation_has_order_three() {
        let ty: CartanType = "D4".parse().unwrap();
        let perm = [2, 1, 3, 0];
        let alg = ChevalleyAlgebra::new(ty, symmetric_orientation(ty, &perm)).unwrap();
        let t = sigma0_automorphism(&alg, &perm).unwrap();
        assert_eq!(t.order(), 3);
        let a1 = alg.root_system().simple_root_index(0);
        let a3 = alg.root_system().simple_root_index(2);
        assert_eq!(t.apply_basis(Basis::X(a1)), (Basis::X(a3), 1));
    }

    #[test]
    fn rejects_non_automorphism() {
        let alg = build_chevalley("A3").unwrap();
        assert!(sigma0_automorphism(&alg, &[1, 0, 2]).is_err());
    }
}
