use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Coefficient, Rational};

/// `value + deriv·ε` with `ε² = 0`.
///
/// Substituting `ρ = ε` into a rational function of `ρ` and reading off the
/// `ε` part gives `∂/∂ρ` at `ρ = 0`, exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualScalar {
    pub value: Rational,
    pub deriv: Rational,
}

impl DualScalar {
    pub fn new(value: Rational, deriv: Rational) -> Self {
        Self { value, deriv }
    }

    pub fn constant(value: Rational) -> Self {
        Self {
            value,
            deriv: Rational::zero(),
        }
    }

    /// The nilpotent generator `ε`.
    pub fn epsilon() -> Self {
        Self {
            value: Rational::zero(),
            deriv: Rational::one(),
        }
    }

    /// `log(1 + bε) = bε`. `None` unless the value part is exactly 1.
    pub fn ln_unipotent(&self) -> Option<Self> {
        self.value.is_one().then(|| Self {
            value: Rational::zero(),
            deriv: self.deriv.clone(),
        })
    }

    /// `exp(bε) = 1 + bε`. `None` unless the value part is exactly 0.
    pub fn exp_nilpotent(&self) -> Option<Self> {
        self.value.is_zero().then(|| Self {
            value: Rational::one(),
            deriv: self.deriv.clone(),
        })
    }
}

impl fmt::Display for DualScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.value, self.deriv)
    }
}

impl Add<&DualScalar> for DualScalar {
    type Output = DualScalar;
    fn add(self, rhs: &DualScalar) -> DualScalar {
        DualScalar {
            value: self.value + &rhs.value,
            deriv: self.deriv + &rhs.deriv,
        }
    }
}

impl Add for DualScalar {
    type Output = DualScalar;
    fn add(self, rhs: DualScalar) -> DualScalar {
        self + &rhs
    }
}

impl Sub<&DualScalar> for DualScalar {
    type Output = DualScalar;
    fn sub(self, rhs: &DualScalar) -> DualScalar {
        DualScalar {
            value: self.value - &rhs.value,
            deriv: self.deriv - &rhs.deriv,
        }
    }
}

impl Sub for DualScalar {
    type Output = DualScalar;
    fn sub(self, rhs: DualScalar) -> DualScalar {
        self - &rhs
    }
}

impl Mul<&DualScalar> for DualScalar {
    type Output = DualScalar;
    fn mul(self, rhs: &DualScalar) -> DualScalar {
        let deriv = &self.value * &rhs.deriv + &self.deriv * &rhs.value;
        DualScalar {
            value: self.value * &rhs.value,
            deriv,
        }
    }
}

impl Mul for DualScalar {
    type Output = DualScalar;
    fn mul(self, rhs: DualScalar) -> DualScalar {
        self * &rhs
    }
}

impl Neg for DualScalar {
    type Output = DualScalar;
    fn neg(self) -> DualScalar {
        DualScalar {
            value: -self.value,
            deriv: -self.deriv,
        }
    }
}

impl Zero for DualScalar {
    fn zero() -> Self {
        Self::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.deriv.is_zero()
    }
}

impl One for DualScalar {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Coefficient for DualScalar {
    fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    fn try_inverse(&self) -> Option<Self> {
        // (a + bε)^{-1} = 1/a − (b/a²)ε
        let inv = self.value.try_inverse()?;
        let deriv = -(&self.deriv * &inv * &inv);
        Some(Self { value: inv, deriv })
    }
}
