use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use super::chevalley::{Basis, ChevalleyAlgebra};
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::linalg::Q;

/// Iterated brackets longer than this indicate a bug.
const AD_EXP_GUARD: i64 = 10;

/// A finite sum of terms `c · B ⊗ u^n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LoopVector(BTreeMap<(Basis, i64), CycScalar>);

/// One term of a loop vector in printable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub basis: String,
    pub u_exp: i64,
    pub coeff: CycScalar,
}

impl LoopVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(b: Basis, exp: i64, c: CycScalar) -> Self {
        let mut v = Self::zero();
        v.add_term(b, exp, c);
        v
    }

    pub fn unit(b: Basis, exp: i64) -> Self {
        Self::term(b, exp, CycScalar::one())
    }

    pub fn add_term(&mut self, b: Basis, exp: i64, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry((b, exp)).or_insert_with(CycScalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&(b, exp));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, b: Basis, exp: i64) -> CycScalar {
        self.0.get(&(b, exp)).copied().unwrap_or_else(CycScalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Basis, i64, CycScalar)> + '_ {
        self.0.iter().map(|(&(b, e), &c)| (b, e, c))
    }

    pub fn scale(&self, c: CycScalar) -> Self {
        let mut out = Self::zero();
        for (b, e, x) in self.terms() {
            out.add_term(b, e, x * c);
        }
        out
    }

    /// The terms of a single `u`-degree.
    pub fn degree_part(&self, n: i64) -> Self {
        Self(self.0.iter().filter(|((_, e), _)| *e == n).map(|(&k, &v)| (k, v)).collect())
    }

    /// Projection onto the span of the `H_i ⊗ u^n`.
    pub fn cartan_component(&self) -> Self {
        Self(self.0.iter().filter(|((b, _), _)| matches!(b, Basis::H(_))).map(|(&k, &v)| (k, v)).collect())
    }

    pub fn records(&self, alg: &ChevalleyAlgebra) -> Vec<TermRecord> {
        let mut out: Vec<TermRecord> = self
            .terms()
            .map(|(b, e, c)| TermRecord { basis: alg.basis_name(b), u_exp: e, coeff: c })
            .collect();
        out.sort_by(|x, y| y.u_exp.cmp(&x.u_exp).then_with(|| x.basis.cmp(&y.basis)));
        out
    }

    pub fn render(&self, alg: &ChevalleyAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.records(alg)
            .iter()
            .map(|t| {
                let u = match t.u_exp {
                    0 => String::new(),
                    e => format!("·u^{e}"),
                };
                format!("({}){}{}", t.coeff, t.basis, u)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Add for LoopVector {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (b, e, c) in o.terms() {
            self.add_term(b, e, c);
        }
        self
    }
}

impl Sub for LoopVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for LoopVector {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-CycScalar::one())
    }
}

impl ChevalleyAlgebra {
    /// Loop bracket `[x ⊗ u^a, y ⊗ u^b] = [x, y] ⊗ u^(a+b)`.
    pub fn bracket(&self, x: &LoopVector, y: &LoopVector) -> LoopVector {
        let mut out = LoopVector::zero();
        for (a, ea, ca) in x.terms() {
            for (b, eb, cb) in y.terms() {
                let c = ca * cb;
                for (t, k) in self.bracket_basis(a, b) {
                    out.add_term(t, ea + eb, c * CycScalar::int(k));
                }
            }
        }
        out
    }

    /// `Ad(exp x) y = Σ ad(x)^n y / n!`.
    pub fn ad_exp(&self, x: &LoopVector, y: &LoopVector) -> Result<LoopVector> {
        let mut sum = y.clone();
        let mut term = y.clone();
        for n in 1..=AD_EXP_GUARD {
            term = self.bracket(x, &term).scale(CycScalar::rat(Q::new(1, n)));
            if term.is_zero() {
                return Ok(sum);
            }
            sum = sum + term.clone();
        }
        Err(Error::NonNilpotent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loopalg::chevalley::build_chevalley;

    #[test]
    fn sl2_adjoint_expansion() {
        let alg = build_chevalley("A1").unwrap();
        let x = LoopVector::unit(Basis::X(0), 0);
        let y = LoopVector::unit(Basis::X(1), -1);
        let got = alg.ad_exp(&y, &x).unwrap();
        let want = x.clone() - LoopVector::unit(Basis::H(0), -1) - LoopVector::unit(Basis::X(1), -2);
        assert_eq!(got, want);
        assert_eq!(got.cartan_component(), -LoopVector::unit(Basis::H(0), -1));
        assert_eq!(alg.ad_exp(&LoopVector::zero(), &x).unwrap(), x);
    }

    #[test]
    fn cartan_direction_is_not_nilpotent() {
        let alg = build_chevalley("A1").unwrap();
        let h = LoopVector::unit(Basis::H(0), 0);
        let x = LoopVector::unit(Basis::X(0), 0);
        assert_eq!(alg.ad_exp(&h, &x), Err(Error::NonNilpotent));
    }

    #[test]
    fn render() {
        let alg = build_chevalley("A1").unwrap();
        let v = LoopVector::unit(Basis::X(0), 0) - LoopVector::unit(Basis::H(0), -1);
        assert_eq!(v.render(&alg), "(1)X(1) + (-1)H1·u^-1");
        assert_eq!(LoopVector::unit(Basis::X(0), 0).cartan_component(), LoopVector::zero());
    }
}
