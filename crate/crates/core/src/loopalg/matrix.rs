//! The defining representation of `sl_{n+1}` and the matrix identities it
//! is used to cross-check.

use num_traits::{One, Zero};

use super::chevalley::{build_chevalley, Basis, ChevalleyAlgebra};
use super::laurent::{Laurent, LaurentMatrix};
use super::twisted::TwistedLoopAlgebra;
use super::vector::LoopVector;
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::rootsys::Family;
use crate::twist::AffineRootSigma;

type IntMatrix = Vec<Vec<i64>>;

/// Images of the Chevalley basis of type A in `(n+1) × (n+1)` matrices.
#[derive(Debug, Clone)]
pub struct MatrixRealization {
    size: usize,
    roots: Vec<IntMatrix>,
    coroots: Vec<IntMatrix>,
}

fn elementary(n: usize, i: usize, j: usize) -> IntMatrix {
    let mut m = vec![vec![0; n]; n];
    m[i][j] = 1;
    m
}

fn commutator(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = (0..n).map(|k| a[i][k] * b[k][j] - b[i][k] * a[k][j]).sum();
        }
    }
    out
}

impl MatrixRealization {
    pub fn new(alg: &ChevalleyAlgebra) -> Result<Self> {
        if alg.cartan_type().family != Family::A {
            return Err(Error::UnknownType(format!("no matrix realization for {}", alg.cartan_type())));
        }
        let sys = alg.root_system();
        let r = sys.rank();
        let size = r + 1;
        let mut roots: Vec<Option<IntMatrix>> = vec![None; sys.num_roots()];
        for i in 0..r {
            let s = sys.simple_root_index(i);
            roots[s] = Some(elementary(size, i, i + 1));
            roots[sys.negate(s)] = Some(elementary(size, i + 1, i));
        }
        for g in 0..sys.num_roots() {
            if roots[g].is_some() {
                continue;
            }
            let positive = sys.is_positive(g);
            let (s, d) = (0..r)
                .find_map(|i| {
                    let s = sys.simple_root_index(i);
                    let s = if positive { s } else { sys.negate(s) };
                    let d: Vec<i64> = sys.root(g).iter().zip(sys.root(s)).map(|(a, b)| a - b).collect();
                    sys.root_index(&d).map(|d| (s, d))
                })
                .ok_or_else(|| Error::Inconsistent(format!("root {g} has no predecessor")))?;
            let (ms, md) = (roots[s].clone().expect("simple"), roots[d].clone().expect("lower height first"));
            let n = alg.structure_constant(s, d);
            roots[g] = Some(commutator(&ms, &md).into_iter().map(|row| row.into_iter().map(|x| x * n).collect()).collect());
        }
        let coroots = (0..r)
            .map(|i| {
                let mut m = vec![vec![0; size]; size];
                m[i][i] = 1;
                m[i + 1][i + 1] = -1;
                m
            })
            .collect();
        let out = Self { size, roots: roots.into_iter().map(|m| m.expect("all roots reached")).collect(), coroots };
        out.check(alg)?;
        Ok(out)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basis_matrix(&self, b: Basis) -> &IntMatrix {
        match b {
            Basis::X(g) => &self.roots[g],
            Basis::H(i) => &self.coroots[i],
        }
    }

    fn check(&self, alg: &ChevalleyAlgebra) -> Result<()> {
        let basis: Vec<Basis> = alg.basis().collect();
        for &a in &basis {
            for &b in &basis {
                let lhs = commutator(self.basis_matrix(a), self.basis_matrix(b));
                let mut rhs = vec![vec![0; self.size]; self.size];
                for (t, k) in alg.bracket_basis(a, b) {
                    let m = self.basis_matrix(t);
                    for i in 0..self.size {
                        for j in 0..self.size {
                            rhs[i][j] += k * m[i][j];
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::Inconsistent(format!("matrix realization fails on {a:?}, {b:?}")));
                }
            }
        }
        Ok(())
    }

    /// Image of a loop vector as a matrix of Laurent polynomials.
    pub fn apply(&self, v: &LoopVector) -> LaurentMatrix {
        let mut out = LaurentMatrix::zero(self.size);
        for (b, e, c) in v.terms() {
            let m = self.basis_matrix(b);
            for i in 0..self.size {
                for j in 0..self.size {
                    if m[i][j] != 0 {
                        let t = Laurent::monomial(c * CycScalar::int(m[i][j]), e);
                        out.0[i][j] = out.0[i][j].clone() + t;
                    }
                }
            }
        }
        out
    }
}

/// Matrix form of the Cartan-direction computation for a type A datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCrossCheck {
    pub a: AffineRootSigma,
    /// `exp` of the matrix of `e_b`.
    pub h: LaurentMatrix,
    /// `h · e_a · h⁻¹`.
    pub conjugate: LaurentMatrix,
    /// Matrix of the Cartan part of the abstract `Ad(exp e_b) e_a`.
    pub cartan: LaurentMatrix,
    /// Whether conjugation agrees with the abstract adjoint action.
    pub agrees: bool,
}

impl MatrixCrossCheck {
    pub fn diagonal(&self) -> Vec<Laurent> {
        self.cartan.diagonal()
    }

    pub fn trace(&self) -> Laurent {
        self.cartan.trace()
    }
}

pub fn matrix_cross_check(t: &TwistedLoopAlgebra, a: AffineRootSigma) -> Result<MatrixCrossCheck> {
    let real = MatrixRealization::new(t.algebra())?;
    let dir = t.cartan_direction(a)?;
    let nb = real.apply(&dir.e_b);
    let h = nb.exp_nilpotent().ok_or(Error::NonNilpotent)?;
    let hinv = nb.neg().exp_nilpotent().ok_or(Error::NonNilpotent)?;
    let conjugate = h.mul(&real.apply(&dir.e_a)).mul(&hinv);
    let agrees = conjugate == real.apply(&dir.adjoint);
    Ok(MatrixCrossCheck { a, h, conjugate, cartan: real.apply(&dir.cartan), agrees })
}

/// Checks `exp(x X_α u^{−k}) = exp(x⁻¹ X_{−α} u^k) · α^∨(u^{−k}) · g` with
/// `g` integral of determinant one.
pub fn verify_sl2_factorization(k: i64, x: Q) -> Result<bool> {
    if k < 1 || x.is_zero() {
        return Err(Error::OutOfBounds(format!("need k ≥ 1 and x ≠ 0, got k = {k}, x = {x}")));
    }
    let alg = build_chevalley("A1")?;
    let real = MatrixRealization::new(&alg)?;
    let cx = CycScalar::rat(x);
    let curve = real.apply(&LoopVector::term(Basis::X(0), -k, cx)).exp_nilpotent().ok_or(Error::NonNilpotent)?;
    let lower =
        real.apply(&LoopVector::term(Basis::X(1), k, cx.inv())).exp_nilpotent().ok_or(Error::NonNilpotent)?;
    let u = |c: CycScalar, e| Laurent::monomial(c, e);
    let one = CycScalar::one();
    let torus = LaurentMatrix(vec![vec![u(one, -k), Laurent::zero()], vec![Laurent::zero(), u(one, k)]]);
    let g = LaurentMatrix(vec![vec![u(one, k), u(cx, 0)], vec![u(-cx.inv(), 0), Laurent::zero()]]);
    let product = lower.mul(&torus).mul(&g);
    Ok(product == curve && g.is_integral() && g.det2() == Laurent::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl3_realization() {
        let alg = build_chevalley("A2").unwrap();
        let r = MatrixRealization::new(&alg).unwrap();
        let theta = alg.root_system().highest_root();
        assert_eq!(r.basis_matrix(Basis::X(theta)), &vec![vec![0, 0, -1], vec![0, 0, 0], vec![0, 0, 0]]);
        assert!(MatrixRealization::new(&build_chevalley("D4").unwrap()).is_err());
    }

    #[test]
    fn su3_diagonal() {
        let t = TwistedLoopAlgebra::parse("2A2").unwrap();
        let c = matrix_cross_check(&t, AffineRootSigma { root: 0, level: -1 }).unwrap();
        assert!(c.agrees);
        let q = |n, d| Laurent::monomial(CycScalar::rat(Q::new(n, d)), -1);
        assert_eq!(c.diagonal(), vec![q(-1, 2), q(1, 1), q(-1, 2)]);
        assert!(c.trace().is_zero());
    }

    #[test]
    fn factorization() {
        assert!(verify_sl2_factorization(1, Q::from_integer(1)).unwrap());
        assert!(verify_sl2_factorization(2, Q::new(3, 2)).unwrap());
        assert!(verify_sl2_factorization(0, Q::one()).is_err());
        assert!(verify_sl2_factorization(1, Q::zero()).is_err());
    }
}
