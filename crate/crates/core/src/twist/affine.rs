use num_traits::{One, Zero};
use serde::Serialize;

use super::datum::TwistedDatum;
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::linalg::{rank, serialize_q, Q};
use crate::rootsys::{Coweight, FiniteRootSystem};

/// The affine function `α + k` on the apartment, α a root of Σ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffineRootSigma {
    pub root: usize,
    pub level: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelCase {
    /// Neither half nor double of the relative root is a root.
    Case1,
    /// The shorter root of a multipliable pair.
    Case2a,
    /// The doubled root of a multipliable pair.
    Case2b,
}

/// An affine root `α + m` in relative coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RelativeAffineRoot {
    pub case: RelCase,
    /// Representative absolute root of the orbit defining α.
    pub orbit_rep: usize,
    #[serde(serialize_with = "serialize_q")]
    pub m: Q,
}

/// An arithmetic progression `offset + step·Z` of rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Progression {
    #[serde(serialize_with = "serialize_q")]
    pub offset: Q,
    #[serde(serialize_with = "serialize_q")]
    pub step: Q,
}

impl Progression {
    pub fn contains(&self, m: Q) -> bool {
        ((m - self.offset) / self.step).is_integer()
    }
}

/// Levels that occur for the relative root(s) behind a Σ-root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LevelSet {
    Single { levels: Progression },
    Multipliable { alpha: Progression, double: Progression },
}

/// `(α, k) ↦ (α, k + ⟨λ, α⟩)`, the conjugation action of `t^λ`.
pub fn translate_affine_root(sys: &FiniteRootSystem, a: AffineRootSigma, lambda: &Coweight) -> AffineRootSigma {
    AffineRootSigma { root: a.root, level: a.level + sys.pairing(lambda, a.root) }
}

impl TwistedDatum {
    pub fn level_set(&self, s: usize) -> LevelSet {
        let meta = self.meta(s);
        if meta.multipliable {
            let half = Q::new(1, 2);
            LevelSet::Multipliable {
                alpha: Progression { offset: Q::zero(), step: half },
                double: Progression { offset: half, step: Q::one() },
            }
        } else {
            LevelSet::Single { levels: Progression { offset: Q::zero(), step: Q::new(1, meta.d as i64) } }
        }
    }

    /// Inverse of the identification of Σ-affine roots with affine roots.
    pub fn sigma_affine_to_relative(&self, a: AffineRootSigma) -> RelativeAffineRoot {
        let meta = self.meta(a.root);
        let k = a.level;
        if !meta.multipliable {
            RelativeAffineRoot { case: RelCase::Case1, orbit_rep: self.orbits()[meta.orbit].rep(), m: Q::new(k, meta.d as i64) }
        } else if k.rem_euclid(2) == 1 {
            let o = meta.double_orbit.expect("multipliable roots carry a doubled orbit");
            RelativeAffineRoot { case: RelCase::Case2b, orbit_rep: self.orbits()[o].rep(), m: Q::new(k, 2) }
        } else {
            RelativeAffineRoot { case: RelCase::Case2a, orbit_rep: self.orbits()[meta.orbit].rep(), m: Q::new(k, 4) }
        }
    }

    /// The Σ-root whose direction matches the orbit of an absolute root.
    pub fn sigma_root_of_orbit(&self, orbit: usize) -> usize {
        (0..self.sigma().num_roots())
            .find(|&s| {
                let m = self.meta(s);
                m.orbit == orbit || m.double_orbit == Some(orbit)
            })
            .expect("every orbit is attached to a Σ-root")
    }

    /// Forward identification `α + m ↦ ν(α) + k`.
    pub fn relative_to_sigma_affine(&self, rel: &RelativeAffineRoot) -> Result<AffineRootSigma> {
        let orbit = self.orbit_of(rel.orbit_rep);
        let s = self.sigma_root_of_orbit(orbit);
        let meta = self.meta(s);
        let bad = || Error::LevelNotInRange(format!("{} for {:?}", rel.m, rel.case));
        let is_double = meta.double_orbit == Some(orbit);
        let k = match rel.case {
            RelCase::Case1 if !meta.multipliable => rel.m * Q::from_integer(meta.d as i64),
            RelCase::Case2a if meta.multipliable && !is_double => rel.m * Q::from_integer(4),
            RelCase::Case2b if is_double => rel.m * Q::from_integer(2),
            _ => return Err(bad()),
        };
        if !k.is_integer() || (rel.case == RelCase::Case2b && k.to_integer().rem_euclid(2) != 1) {
            return Err(bad());
        }
        Ok(AffineRootSigma { root: s, level: k.to_integer() })
    }

    /// Exponent of `u` carried by the root vector `e_a`, namely `e·m`.
    pub fn u_degree(&self, rel: &RelativeAffineRoot) -> Result<i64> {
        let n = rel.m * Q::from_integer(self.e() as i64);
        if n.is_integer() {
            Ok(n.to_integer())
        } else {
            Err(Error::NonIntegral(format!("e·m = {n}")))
        }
    }

    /// The Σ-levels `k` whose affine roots carry `u`-degree `n`, per Σ-root.
    fn levels_at_degree(&self, s: usize, n: i64) -> Vec<i64> {
        let meta = self.meta(s);
        let e = self.e() as i64;
        if meta.multipliable {
            let mut ks = vec![2 * n];
            if n.rem_euclid(2) == 1 {
                ks.push(n);
            }
            ks
        } else {
            let num = n * meta.d as i64;
            if num % e == 0 {
                vec![num / e]
            } else {
                vec![]
            }
        }
    }

    /// All affine roots whose root vector has `u`-degree `n`.
    pub fn relative_roots_at_degree(&self, n: i64) -> Vec<(AffineRootSigma, RelativeAffineRoot)> {
        let mut out = Vec::new();
        for s in 0..self.sigma().num_roots() {
            for k in self.levels_at_degree(s, n) {
                let a = AffineRootSigma { root: s, level: k };
                out.push((a, self.sigma_affine_to_relative(a)));
            }
        }
        out
    }

    /// `(α, −k)` for every root α of Σ and `1 ≤ k ≤ cutoff`, ordered by depth.
    pub fn affine_roots_negative_at_vertex(&self, cutoff: i64) -> Vec<AffineRootSigma> {
        (1..=cutoff)
            .flat_map(|k| (0..self.sigma().num_roots()).map(move |root| AffineRootSigma { root, level: -k }))
            .collect()
    }

    /// Dimension of the ζ^m-eigenspace of σ₀ on the Cartan subalgebra.
    pub fn cartan_sigma_dim(&self, m: i64) -> usize {
        let n = self.absolute().rank();
        let z = CycScalar::zeta_pow(self.e(), m);
        // rows of (P − ζ^m) with P e_i = e_{σ₀(i)}
        let rows: Vec<Vec<CycScalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let p = if self.sigma0()[j] == i { CycScalar::one() } else { CycScalar::zero() };
                        if i == j {
                            p - z
                        } else {
                            p
                        }
                    })
                    .collect()
            })
            .collect();
        n - rank(&rows)
    }
}
