//! Coefficient rings for [`TruncatedSeries`](crate::TruncatedSeries).
//!
//! The series engine only needs ring operations plus "invert if unit". Big
//! integers and big rationals come from `num`; the two nilpotent extensions
//! used to carry formal derivatives in the Frobenius parameter are defined
//! here.

mod binilpotent;
mod dual;

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use binilpotent::BiNilpotent;
pub use dual::DualScalar;

pub type Integer = BigInt;
pub type Rational = BigRational;

/// A commutative ring with unit, as far as the series engine cares.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Image of an integer under the unique ring map from `Z`.
    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse, when `self` is a unit.
    fn try_inverse(&self) -> Option<Self>;

    /// `self += a·b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        let acc = core::mem::replace(self, Self::zero());
        *self = acc + &(a.clone() * b);
    }
}

impl Coefficient for Integer {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Coefficient for Rational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// `n` as an exact rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_int(n)
}

/// `num / den` in lowest terms. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer value of `q`, if it has one.
pub fn to_integer(q: &Rational) -> Option<Integer> {
    if q.is_integer() {
        Some(q.to_integer())
    } else {
        None
    }
}

/// `1/n` in the ring `R`, or an error if `n` is not a unit there.
pub(crate) fn reciprocal_of_int<R: Coefficient>(n: i64) -> crate::Result<R> {
    R::from_int(n)
        .try_inverse()
        .ok_or(crate::Error::IntegerNotInvertible(n))
}
