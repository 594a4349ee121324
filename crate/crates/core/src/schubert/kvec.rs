use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Coweight, FiniteRootSystem};

/// `k_α` for every root α of Σ, indexed like `FiniteRootSystem::roots`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct KVector(pub Vec<i64>);

impl KVector {
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Whether the root curve for `α − k` through `t^λ` stays inside the
/// Schubert variety of μ.
pub fn curve_fits(sys: &FiniteRootSystem, lambda: &Coweight, mu: &Coweight, root: usize, k: i64) -> bool {
    let target = sys.dominant_rep(&sys.sub_coroot(lambda, root, k));
    sys.dominance_leq(&target, mu)
}

/// Largest `k` with `(λ − kα^∨)_dom ≼ μ`, found by first failure.
pub fn k_alpha(sys: &FiniteRootSystem, lambda: &Coweight, mu: &Coweight, root: usize) -> Result<i64> {
    let cap = sys.two_rho_pairing(mu) + 1;
    let mut k = 0;
    while curve_fits(sys, lambda, mu, root, k + 1) {
        k += 1;
        if k >= cap {
            return Err(Error::CapExceeded { cap });
        }
    }
    Ok(k)
}

pub fn k_vector(sys: &FiniteRootSystem, lambda: &Coweight, mu: &Coweight) -> Result<KVector> {
    if !sys.dominance_leq(lambda, mu) {
        return Err(Error::NotBelow { lambda: lambda.0.clone(), mu: mu.0.clone() });
    }
    (0..sys.num_roots()).map(|r| k_alpha(sys, lambda, mu, r)).collect::<Result<_>>().map(KVector)
}

/// Lower bound `Σ_α k_α` on the root part of the tangent space at `t^λ`.
pub fn root_tangent_bound(sys: &FiniteRootSystem, lambda: &Coweight, mu: &Coweight) -> Result<i64> {
    Ok(k_vector(sys, lambda, mu)?.total())
}

/// `(λ − kα^∨)_dom`, the stratum reached by the root curve.
pub fn root_curve_target(sys: &FiniteRootSystem, lambda: &Coweight, mu: &Coweight, root: usize, k: i64) -> Result<Coweight> {
    let max = k_alpha(sys, lambda, mu, root)?;
    if k < 1 || k > max {
        return Err(Error::KOutOfRange { k, max });
    }
    Ok(sys.dominant_rep(&sys.sub_coroot(lambda, root, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn quasi_minuscule_g2() {
        let g2 = build_root_system("G2").unwrap();
        let mu = Coweight(vec![0, 1]);
        let zero = Coweight(vec![0, 0]);
        let k = k_vector(&g2, &zero, &mu).unwrap();
        for r in 0..g2.num_roots() {
            let expect = if g2.norm(r) == 6 { 1 } else { 0 };
            assert_eq!(k.0[r], expect, "root {:?}", g2.root(r));
        }
        assert_eq!(k.total(), 6);
    }

    #[test]
    fn a1_values() {
        let a1 = build_root_system("A1").unwrap();
        let k = k_vector(&a1, &Coweight(vec![0]), &Coweight(vec![2])).unwrap();
        assert_eq!(k.0, vec![1, 1]);
        let target = root_curve_target(&a1, &Coweight(vec![2]), &Coweight(vec![2]), 0, 2).unwrap();
        assert_eq!(target, Coweight(vec![2]));
        assert!(matches!(
            root_curve_target(&a1, &Coweight(vec![2]), &Coweight(vec![2]), 0, 3),
            Err(Error::KOutOfRange { .. })
        ));
    }
}
