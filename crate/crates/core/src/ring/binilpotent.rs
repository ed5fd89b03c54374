use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Coefficient, Rational};

/// `c00 + c10·J₁ + c01·J₂ + c11·J₁J₂` in `Q[J₁, J₂]/(J₁², J₂²)`.
///
/// This is the quotient of the toric cohomology ring that survives when only
/// `log U₁`, `log U₂` and the `J₁J₂` part of the prepotential are needed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiNilpotent {
    pub c00: Rational,
    pub c10: Rational,
    pub c01: Rational,
    pub c11: Rational,
}

impl BiNilpotent {
    pub fn new(c00: Rational, c10: Rational, c01: Rational, c11: Rational) -> Self {
        Self { c00, c10, c01, c11 }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(c, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn j1() -> Self {
        Self::new(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn j2() -> Self {
        Self::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    /// The coefficient of `J₁J₂`.
    pub fn mixed(&self) -> &Rational {
        &self.c11
    }
}

impl fmt::Display for BiNilpotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}J1 + {}J2 + {}J1J2",
            self.c00, self.c10, self.c01, self.c11
        )
    }
}

impl Add<&BiNilpotent> for BiNilpotent {
    type Output = BiNilpotent;
    fn add(self, rhs: &BiNilpotent) -> BiNilpotent {
        BiNilpotent {
            c00: self.c00 + &rhs.c00,
            c10: self.c10 + &rhs.c10,
            c01: self.c01 + &rhs.c01,
            c11: self.c11 + &rhs.c11,
        }
    }
}

impl Add for BiNilpotent {
    type Output = BiNilpotent;
    fn add(self, rhs: BiNilpotent) -> BiNilpotent {
        self + &rhs
    }
}

impl Sub<&BiNilpotent> for BiNilpotent {
    type Output = BiNilpotent;
    fn sub(self, rhs: &BiNilpotent) -> BiNilpotent {
        BiNilpotent {
            c00: self.c00 - &rhs.c00,
            c10: self.c10 - &rhs.c10,
            c01: self.c01 - &rhs.c01,
            c11: self.c11 - &rhs.c11,
        }
    }
}

impl Sub for BiNilpotent {
    type Output = BiNilpotent;
    fn sub(self, rhs: BiNilpotent) -> BiNilpotent {
        self - &rhs
    }
}

impl Mul<&BiNilpotent> for BiNilpotent {
    type Output = BiNilpotent;
    fn mul(self, rhs: &BiNilpotent) -> BiNilpotent {
        let (a, b) = (&self, rhs);
        BiNilpotent {
            c00: &a.c00 * &b.c00,
            c10: &a.c00 * &b.c10 + &a.c10 * &b.c00,
            c01: &a.c00 * &b.c01 + &a.c01 * &b.c00,
            c11: &a.c00 * &b.c11 + &a.c10 * &b.c01 + &a.c01 * &b.c10 + &a.c11 * &b.c00,
        }
    }
}

impl Mul for BiNilpotent {
    type Output = BiNilpotent;
    fn mul(self, rhs: BiNilpotent) -> BiNilpotent {
        self * &rhs
    }
}

impl Neg for BiNilpotent {
    type Output = BiNilpotent;
    fn neg(self) -> BiNilpotent {
        BiNilpotent {
            c00: -self.c00,
            c10: -self.c10,
            c01: -self.c01,
            c11: -self.c11,
        }
    }
}

impl Zero for BiNilpotent {
    fn zero() -> Self {
        Self::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.c00.is_zero() && self.c10.is_zero() && self.c01.is_zero() && self.c11.is_zero()
    }
}

impl One for BiNilpotent {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Coefficient for BiNilpotent {
    fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    fn try_inverse(&self) -> Option<Self> {
        // a(1 + x) with x nilpotent, x³ = 0 and x² = 2(b c / a²) J₁J₂
        let inv = self.c00.try_inverse()?;
        let inv2 = &inv * &inv;
        let c10 = -(&self.c10 * &inv2);
        let c01 = -(&self.c01 * &inv2);
        let c11 = -(&self.c11 * &inv2) + Rational::from_int(2) * &self.c10 * &self.c01 * &inv2 * &inv;
        Some(Self::new(inv, c10, c01, c11))
    }
}
