use num_traits::{One, Zero};
use serde::Serialize;

use super::chevalley::{symmetric_orientation, Basis, ChevalleyAlgebra};
use super::sigma::{sigma0_automorphism, SigmaTable};
use super::vector::{LoopVector, TermRecord};
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::linalg::{rank, Q};
use crate::twist::{AffineRootSigma, RelCase, RelativeAffineRoot, TwistedDatum};

/// Largest `|n|` accepted by [`TwistedLoopAlgebra::verify_invariant_basis`].
pub const MAX_WINDOW: i64 = 8;

/// The loop algebra `𝔥 ⊗ Q(ζ)[u, u⁻¹]` with the action of σ.
#[derive(Debug, Clone)]
pub struct TwistedLoopAlgebra {
    datum: TwistedDatum,
    alg: ChevalleyAlgebra,
    sigma0: SigmaTable,
}

/// Outcome of the Cartan-direction computation for one affine root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDirection {
    pub a: AffineRootSigma,
    pub b: AffineRootSigma,
    pub e_a: LoopVector,
    pub e_b: LoopVector,
    pub adjoint: LoopVector,
    pub cartan: LoopVector,
    pub invariant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: i64,
    /// Rank of the σ-averaging projector on the root part of degree `n`.
    pub fixed_dim: usize,
    /// Number of affine roots whose vector has degree `n`.
    pub root_count: usize,
    /// Rank of the span of those vectors.
    pub e_a_rank: usize,
    pub all_invariant: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBasisReport {
    pub label: String,
    pub window: i64,
    pub degrees: Vec<DegreeCheck>,
}

impl InvariantBasisReport {
    pub fn pass(&self) -> bool {
        self.degrees.iter().all(|d| d.pass)
    }
}

impl TwistedLoopAlgebra {
    pub fn new(datum: &TwistedDatum) -> Result<Self> {
        let ty = datum.absolute_type();
        let alg = ChevalleyAlgebra::new(ty, symmetric_orientation(ty, datum.sigma0()))?;
        let sigma0 = sigma0_automorphism(&alg, datum.sigma0())?;
        if sigma0.root_perm() != datum.root_perm() {
            return Err(Error::Inconsistent("root permutation differs from the twisted datum".into()));
        }
        Ok(Self { datum: datum.clone(), alg, sigma0 })
    }

    pub fn parse(label: &str) -> Result<Self> {
        Self::new(&TwistedDatum::parse(label)?)
    }

    pub fn datum(&self) -> &TwistedDatum {
        &self.datum
    }

    pub fn algebra(&self) -> &ChevalleyAlgebra {
        &self.alg
    }

    pub fn sigma0(&self) -> &SigmaTable {
        &self.sigma0
    }

    fn zeta(&self, n: i64) -> CycScalar {
        CycScalar::zeta_pow(self.datum.e(), n)
    }

    /// σ₀ applied to the Lie algebra part only.
    pub fn sigma0_action(&self, v: &LoopVector) -> LoopVector {
        let mut out = LoopVector::zero();
        for (b, e, c) in v.terms() {
            let (b2, s) = self.sigma0.apply_basis(b);
            out.add_term(b2, e, c * CycScalar::int(s));
        }
        out
    }

    /// `σ(X ⊗ uⁿ) = ζⁿ σ₀(X) ⊗ uⁿ`.
    pub fn sigma_action(&self, v: &LoopVector) -> LoopVector {
        let mut out = LoopVector::zero();
        for (b, e, c) in v.terms() {
            let (b2, s) = self.sigma0.apply_basis(b);
            out.add_term(b2, e, c * CycScalar::int(s) * self.zeta(e));
        }
        out
    }

    pub fn is_sigma_invariant(&self, v: &LoopVector) -> bool {
        self.sigma_action(v) == *v
    }

    /// The σ-invariant root vector attached to an affine root.
    pub fn make_e_a(&self, rel: &RelativeAffineRoot) -> Result<LoopVector> {
        self.datum.relative_to_sigma_affine(rel)?;
        let n = self.datum.u_degree(rel)?;
        let x = LoopVector::unit(Basis::X(rel.orbit_rep), 0);
        let body = match rel.case {
            RelCase::Case1 => {
                let d = self.datum.orbits()[self.datum.orbit_of(rel.orbit_rep)].len();
                let mut acc = LoopVector::zero();
                let mut cur = x;
                for i in 1..=d as i64 {
                    cur = self.sigma0_action(&cur);
                    acc = acc + cur.scale(self.zeta(i * n));
                }
                acc
            }
            RelCase::Case2a => {
                let sign = if n.rem_euclid(2) == 0 { CycScalar::one() } else { -CycScalar::one() };
                x.clone() + self.sigma0_action(&x).scale(sign)
            }
            RelCase::Case2b => x,
        };
        let mut v = LoopVector::zero();
        for (b, _, c) in body.terms() {
            v.add_term(b, n, c);
        }
        if v.is_zero() || !self.is_sigma_invariant(&v) {
            return Err(Error::Inconsistent(format!("e_a for {rel:?} is not a nonzero invariant")));
        }
        Ok(v)
    }

    pub fn e_a(&self, a: AffineRootSigma) -> Result<LoopVector> {
        self.make_e_a(&self.datum.sigma_affine_to_relative(a))
    }

    /// The affine root `b` paired with `a = (γ, −k)` in the Cartan-direction
    /// computation.
    pub fn companion(&self, a: AffineRootSigma) -> Result<AffineRootSigma> {
        let k = -a.level;
        if k < 1 {
            return Err(Error::OutOfBounds(format!("level {} must be negative", a.level)));
        }
        let sys = self.datum.sigma();
        if a.root >= sys.num_roots() {
            return Err(Error::IndexOutOfRange { index: a.root, len: sys.num_roots() });
        }
        let neg = sys.negate(a.root);
        let rel = self.datum.sigma_affine_to_relative(a);
        match rel.case {
            RelCase::Case1 => Ok(AffineRootSigma { root: neg, level: k - 1 }),
            RelCase::Case2b => Ok(AffineRootSigma { root: neg, level: 2 * (k - 1) }),
            RelCase::Case2a => {
                Err(Error::OutOfBounds(format!("level {} of a multipliable root must be odd", a.level)))
            }
        }
    }

    /// Cartan part of `Ad(exp e_b) e_a`.
    pub fn cartan_direction(&self, a: AffineRootSigma) -> Result<CartanDirection> {
        let b = self.companion(a)?;
        let e_a = self.e_a(a)?;
        let e_b = self.e_a(b)?;
        let adjoint = self.alg.ad_exp(&e_b, &e_a)?;
        let cartan = adjoint.cartan_component();
        if cartan.is_zero() {
            return Err(Error::ZeroCartan(format!("{a:?} with companion {b:?}")));
        }
        let invariant = self.is_sigma_invariant(&cartan);
        Ok(CartanDirection { a, b, e_a, e_b, adjoint, cartan, invariant })
    }

    /// Coordinates of the root part of a degree-`n` vector, over the roots.
    fn root_coordinates(&self, v: &LoopVector, n: i64) -> Vec<CycScalar> {
        (0..self.alg.root_system().num_roots()).map(|g| v.coeff(Basis::X(g), n)).collect()
    }

    /// Matrix of σ on `span{X_γ ⊗ uⁿ}`, acting on columns.
    fn sigma_matrix(&self, n: i64) -> Vec<Vec<CycScalar>> {
        let nr = self.alg.root_system().num_roots();
        let mut m = vec![vec![CycScalar::zero(); nr]; nr];
        for (g, row) in (0..nr).map(|g| (g, self.sigma0.apply_basis(Basis::X(g)))) {
            if let (Basis::X(h), s) = row {
                m[h][g] = CycScalar::int(s) * self.zeta(n);
            }
        }
        m
    }

    /// Rank of `(1/e) Σ_j σʲ` on the root part of degree `n`.
    pub fn fixed_dim(&self, n: i64) -> usize {
        let s = self.sigma_matrix(n);
        let nr = s.len();
        let e = self.datum.e() as usize;
        let mut power: Vec<Vec<CycScalar>> =
            (0..nr).map(|i| (0..nr).map(|j| if i == j { CycScalar::one() } else { CycScalar::zero() }).collect()).collect();
        let mut proj = power.clone();
        for _ in 1..e {
            power = mat_mul(&s, &power);
            for i in 0..nr {
                for j in 0..nr {
                    proj[i][j] += power[i][j];
                }
            }
        }
        let inv = CycScalar::rat(Q::new(1, e as i64));
        let proj: Vec<Vec<CycScalar>> = proj.into_iter().map(|r| r.into_iter().map(|x| x * inv).collect()).collect();
        rank(&proj)
    }

    pub fn check_degree(&self, n: i64) -> Result<DegreeCheck> {
        let roots = self.datum.relative_roots_at_degree(n);
        let mut rows = Vec::with_capacity(roots.len());
        let mut all_invariant = true;
        for (_, rel) in &roots {
            let v = self.make_e_a(rel)?;
            all_invariant &= self.is_sigma_invariant(&v) && v.degree_part(n) == v;
            rows.push(self.root_coordinates(&v, n));
        }
        let fixed_dim = self.fixed_dim(n);
        let e_a_rank = rank(&rows);
        let root_count = roots.len();
        let pass = all_invariant && fixed_dim == root_count && e_a_rank == root_count;
        Ok(DegreeCheck { degree: n, fixed_dim, root_count, e_a_rank, all_invariant, pass })
    }

    /// Checks that the `e_a` form a basis of the invariants, degree by degree.
    pub fn verify_invariant_basis(&self, window: i64) -> Result<InvariantBasisReport> {
        if !(0..=MAX_WINDOW).contains(&window) {
            return Err(Error::OutOfBounds(format!("window {window} outside 0..={MAX_WINDOW}")));
        }
        let degrees = (-window..=window).map(|n| self.check_degree(n)).collect::<Result<_>>()?;
        Ok(InvariantBasisReport { label: self.datum.label().to_string(), window, degrees })
    }

    pub fn records(&self, v: &LoopVector) -> Vec<TermRecord> {
        v.records(&self.alg)
    }

    pub fn render(&self, v: &LoopVector) -> String {
        v.render(&self.alg)
    }
}

fn mat_mul(a: &[Vec<CycScalar>], b: &[Vec<CycScalar>]) -> Vec<Vec<CycScalar>> {
    let n = a.len();
    let mut out = vec![vec![CycScalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_e_a_is_a_monomial() {
        let t = TwistedLoopAlgebra::parse("A2").unwrap();
        let v = t.e_a(AffineRootSigma { root: 0, level: -2 }).unwrap();
        assert_eq!(v, LoopVector::unit(Basis::X(0), -2));
        assert_eq!(t.sigma_action(&v), v);
    }

    #[test]
    fn triality_e_a() {
        let t = TwistedLoopAlgebra::parse("3D4").unwrap();
        let beta = t.datum().sigma().simple_root_index(1);
        let v = t.e_a(AffineRootSigma { root: beta, level: -1 }).unwrap();
        let abs = t.datum().absolute();
        let (a1, a3, a4) = (abs.simple_root_index(0), abs.simple_root_index(2), abs.simple_root_index(3));
        let z = |n| CycScalar::zeta_pow(3, n);
        let mut want = LoopVector::zero();
        want.add_term(Basis::X(a3), -1, z(-1));
        want.add_term(Basis::X(a4), -1, z(-2));
        want.add_term(Basis::X(a1), -1, z(-3));
        assert_eq!(v, want);
        let x = LoopVector::unit(Basis::X(a1), 0);
        assert_eq!(t.sigma_action(&x), LoopVector::unit(Basis::X(a3), 0));
    }

    #[test]
    fn su3_doubled_root_vector() {
        let t = TwistedLoopAlgebra::parse("2A2").unwrap();
        let v = t.e_a(AffineRootSigma { root: 0, level: -1 }).unwrap();
        let theta = t.algebra().root_system().highest_root();
        assert_eq!(v, LoopVector::unit(Basis::X(theta), -1));
    }

    #[test]
    fn split_cartan_direction() {
        let t = TwistedLoopAlgebra::parse("A1").unwrap();
        let c = t.cartan_direction(AffineRootSigma { root: 0, level: -1 }).unwrap();
        assert_eq!(c.cartan, -LoopVector::unit(Basis::H(0), -1));
        assert!(c.invariant);
    }

    #[test]
    fn triality_cartan_direction_spans_the_line() {
        let t = TwistedLoopAlgebra::parse("3D4").unwrap();
        let beta = t.datum().sigma().simple_root_index(1);
        let c = t.cartan_direction(AffineRootSigma { root: beta, level: -1 }).unwrap();
        assert!(c.invariant);
        let h1 = c.cartan.coeff(Basis::H(0), -1);
        assert!(!h1.is_zero());
        let ratio = |i| c.cartan.coeff(Basis::H(i), -1) / h1;
        let z = |n| CycScalar::zeta_pow(3, n);
        assert!((1..=2).any(|j| ratio(2) == z(j) && ratio(3) == z(2 * j)));
        assert!(c.cartan.coeff(Basis::H(1), -1).is_zero());
    }

    #[test]
    fn invariant_counts() {
        let t = TwistedLoopAlgebra::parse("3D4").unwrap();
        assert_eq!(t.check_degree(-1).unwrap().fixed_dim, 6);
        assert!(t.verify_invariant_basis(2).unwrap().pass());
        let s = TwistedLoopAlgebra::parse("D4").unwrap();
        assert_eq!(s.check_degree(3).unwrap().fixed_dim, 24);
    }

    #[test]
    fn companion_rules() {
        let t = TwistedLoopAlgebra::parse("2A2").unwrap();
        assert_eq!(t.companion(AffineRootSigma { root: 0, level: -3 }).unwrap(), AffineRootSigma { root: 1, level: 4 });
        assert!(t.companion(AffineRootSigma { root: 0, level: -2 }).is_err());
        assert!(t.companion(AffineRootSigma { root: 0, level: 0 }).is_err());
    }
}
