//! Laurent polynomials in `u` and small matrices over them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::cyclo::CycScalar;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent(BTreeMap<i64, CycScalar>);

impl Laurent {
    pub fn monomial(c: CycScalar, exp: i64) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(exp, c);
        }
        Self(m)
    }

    pub fn constant(c: CycScalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn coeff(&self, exp: i64) -> CycScalar {
        self.0.get(&exp).copied().unwrap_or_else(CycScalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, CycScalar)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn scale(&self, c: CycScalar) -> Self {
        let mut out = BTreeMap::new();
        for (&e, &v) in &self.0 {
            let p = v * c;
            if !p.is_zero() {
                out.insert(e, p);
            }
        }
        Self(out)
    }

    fn add_term(&mut self, exp: i64, c: CycScalar) {
        let entry = self.0.entry(exp).or_insert_with(CycScalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&exp);
        }
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Self(BTreeMap::new())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Self::constant(CycScalar::one())
    }
}

impl Add for Laurent {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (e, c) in o.0 {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for Laurent {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for Laurent {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-CycScalar::one())
    }
}

impl Mul for Laurent {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Laurent::zero();
        for (&a, &x) in &self.0 {
            for (&b, &y) in &o.0 {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})u^{e}")?,
            }
        }
        Ok(())
    }
}

/// A square matrix of Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix(pub Vec<Vec<Laurent>>);

impl LaurentMatrix {
    pub fn zero(n: usize) -> Self {
        Self(vec![vec![Laurent::zero(); n]; n])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.0[i][i] = Laurent::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|r| r.iter().all(Laurent::is_zero))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.dim();
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                if self.0[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !o.0[k][j].is_zero() {
                        let p = self.0[i][k].clone() * o.0[k][j].clone();
                        out.0[i][j] = out.0[i][j].clone() + p;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.dim();
        Self((0..n).map(|i| (0..n).map(|j| self.0[i][j].clone() + o.0[i][j].clone()).collect()).collect())
    }

    pub fn scale(&self, c: CycScalar) -> Self {
        Self(self.0.iter().map(|r| r.iter().map(|x| x.scale(c)).collect()).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(-CycScalar::one())
    }

    /// `exp(N)` for nilpotent `N`; `None` if `N^(n+1) ≠ 0`.
    pub fn exp_nilpotent(&self) -> Option<Self> {
        let n = self.dim();
        let mut sum = Self::identity(n);
        let mut term = Self::identity(n);
        for k in 1..=n {
            term = term.mul(self).scale(CycScalar::rat(crate::linalg::Q::new(1, k as i64)));
            if term.is_zero() {
                return Some(sum);
            }
            sum = sum.add(&term);
        }
        term.mul(self).is_zero().then_some(sum)
    }

    pub fn diagonal(&self) -> Vec<Laurent> {
        (0..self.dim()).map(|i| self.0[i][i].clone()).collect()
    }

    pub fn trace(&self) -> Laurent {
        self.diagonal().into_iter().fold(Laurent::zero(), |a, b| a + b)
    }

    /// Determinant of a 2×2 matrix.
    pub fn det2(&self) -> Laurent {
        assert_eq!(self.dim(), 2);
        self.0[0][0].clone() * self.0[1][1].clone() - self.0[0][1].clone() * self.0[1][0].clone()
    }

    /// Whether no entry has a negative power of `u`.
    pub fn is_integral(&self) -> bool {
        self.0.iter().flatten().all(|x| x.min_exp().is_none_or(|e| e >= 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Q;

    fn u(e: i64) -> Laurent {
        Laurent::monomial(CycScalar::one(), e)
    }

    #[test]
    fn arithmetic() {
        let p = u(1) + u(-1);
        let q = p.clone() * p.clone();
        assert_eq!(q, u(2) + Laurent::constant(CycScalar::int(2)) + u(-2));
        assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn unipotent_exponential() {
        let mut n = LaurentMatrix::zero(3);
        n.0[1][0] = u(0);
        n.0[2][1] = -u(0);
        let h = n.exp_nilpotent().unwrap();
        assert_eq!(h.0[2][0], Laurent::constant(CycScalar::rat(Q::new(-1, 2))));
        let inv = n.neg().exp_nilpotent().unwrap();
        assert_eq!(h.mul(&inv), LaurentMatrix::identity(3));
    }
}
