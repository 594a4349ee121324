//! The field `Q(ζ)` for ζ a root of unity of order 1, 2 or 3.
//!
//! Elements are `a + bω` with ω a primitive cube root of unity, which
//! covers all three orders since ζ₁ = 1 and ζ₂ = −1 are rational.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::linalg::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycScalar {
    pub a: Q,
    pub b: Q,
}

impl CycScalar {
    pub const fn new(a: Q, b: Q) -> Self {
        Self { a, b }
    }

    pub fn int(n: i64) -> Self {
        Self::new(Q::from_integer(n), Q::zero())
    }

    pub fn rat(q: Q) -> Self {
        Self::new(q, Q::zero())
    }

    pub fn omega() -> Self {
        Self::new(Q::zero(), Q::one())
    }

    /// ζₑⁿ for e ∈ {1, 2, 3}.
    pub fn zeta_pow(e: u32, n: i64) -> Self {
        let r = n.rem_euclid(e as i64);
        match (e, r) {
            (_, 0) => Self::one(),
            (2, 1) => Self::int(-1),
            (3, 1) => Self::omega(),
            (3, 2) => Self::new(Q::from_integer(-1), Q::from_integer(-1)),
            _ => panic!("root of unity of order {e} unsupported"),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field norm `a² − ab + b²`.
    pub fn norm(&self) -> Q {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    /// Galois conjugate, sending ω to ω².
    pub fn conj(&self) -> Self {
        Self::new(self.a - self.b, -self.b)
    }

    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in Q(ω)");
        let c = self.conj();
        Self::new(c.a / n, c.b / n)
    }
}

impl Zero for CycScalar {
    fn zero() -> Self {
        Self::new(Q::zero(), Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for CycScalar {
    fn one() -> Self {
        Self::int(1)
    }
}

impl Add for CycScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for CycScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Mul for CycScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let bd = self.b * o.b;
        Self::new(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)
    }
}

impl Div for CycScalar {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv()
    }
}

impl Neg for CycScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl AddAssign for CycScalar {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for CycScalar {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl MulAssign for CycScalar {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl From<i64> for CycScalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<Q> for CycScalar {
    fn from(q: Q) -> Self {
        Self::rat(q)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zb = self.b.is_zero();
        match (self.a.is_zero(), zb) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write_zeta_term(f, self.b, true),
            (false, false) => {
                write!(f, "{}", self.a)?;
                write_zeta_term(f, self.b, false)
            }
        }
    }
}

fn write_zeta_term(f: &mut fmt::Formatter<'_>, b: Q, leading: bool) -> fmt::Result {
    let neg = b < Q::zero();
    let mag = if neg { -b } else { b };
    if neg {
        write!(f, "-")?;
    } else if !leading {
        write!(f, "+")?;
    }
    if mag != Q::one() {
        write!(f, "{mag}")?;
    }
    write!(f, "ζ")
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
