//! The one-variable hypergeometric series
//!
//! - `φ₀(w, ρ) = Σ (1+3ρ)_{3n} / (1+ρ)_n³ · wⁿ`
//! - `φ₁(w, ρ) = Σ (1+3ρ)_{1+3n} / (1+ρ)_n³ · wⁿ`
//! - `ξ(w, ρ) = Σ (1+ρ)_{3n} / n!³ · wⁿ`
//!
//! over any coefficient ring, with `ρ` a nilpotent element of that ring.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ring::{Coefficient, DualScalar, Rational};
use crate::series::TruncatedSeries;

/// `g(n) = Σ_{k=1}^n 1/k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicValue {
    pub n: usize,
    pub value: Rational,
}

impl HarmonicValue {
    pub fn zero() -> Self {
        Self {
            n: 0,
            value: Rational::from_int(0),
        }
    }

    /// `g(n + 1) = g(n) + 1/(n + 1)`.
    pub fn next(&self) -> Self {
        let n = self.n + 1;
        Self {
            n,
            value: self.value.clone() + Rational::new(1.into(), n.into()),
        }
    }
}

/// `g(0), …, g(n)`.
pub fn harmonic_numbers(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut h = HarmonicValue::zero();
    out.push(h.value.clone());
    for _ in 0..n {
        h = h.next();
        out.push(h.value.clone());
    }
    out
}

/// `g(n)`.
pub fn harmonic(n: usize) -> Rational {
    let mut h = HarmonicValue::zero();
    for _ in 0..n {
        h = h.next();
    }
    h.value
}

/// `(x)_m = x(x+1)⋯(x+m−1)`.
pub fn pochhammer<R: Coefficient>(base: &R, length: usize) -> R {
    (0..length).fold(R::one(), |acc, k| acc * &(base.clone() + &R::from_int(k as i64)))
}

/// A Pochhammer symbol over dual numbers, kept together with its inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochhammerDual {
    pub base: DualScalar,
    pub length: usize,
    pub value: DualScalar,
}

impl PochhammerDual {
    pub fn new(base: DualScalar, length: usize) -> Self {
        let value = pochhammer(&base, length);
        Self {
            base,
            length,
            value,
        }
    }

    /// `(x)_{m+1} = (x)_m · (x + m)`.
    pub fn extend(&self) -> Self {
        let factor = self.base.clone() + &DualScalar::from_int(self.length as i64);
        Self {
            base: self.base.clone(),
            length: self.length + 1,
            value: self.value.clone() * &factor,
        }
    }
}

fn invert<R: Coefficient>(x: &R) -> Result<R> {
    x.try_inverse().ok_or_else(|| Error::NotInvertible {
        constant: alloc::format!("{x}"),
    })
}

/// `φ₀(w, ρ)` through `w^order`.
///
/// Built from the term ratio
/// `t_n / t_{n−1} = (3n−2+3ρ)(3n−1+3ρ)(3n+3ρ) / (n+ρ)³`.
pub fn phi0_with<R: Coefficient>(rho: &R, order: usize) -> Result<TruncatedSeries<R>> {
    let three_rho = rho.clone() * &R::from_int(3);
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = R::one();
    coeffs.push(term.clone());
    for n in 1..=order as i64 {
        for j in [3 * n - 2, 3 * n - 1, 3 * n] {
            term = term * &(three_rho.clone() + &R::from_int(j));
        }
        let inv = invert(&(rho.clone() + &R::from_int(n)))?;
        term = term * &inv * &inv * &inv;
        coeffs.push(term.clone());
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

/// `φ₁(w, ρ)` through `w^order`: coefficient `n` of `φ₀` times `3n+1+3ρ`.
pub fn phi1_with<R: Coefficient>(rho: &R, order: usize) -> Result<TruncatedSeries<R>> {
    let phi0 = phi0_with(rho, order)?;
    let three_rho = rho.clone() * &R::from_int(3);
    let coeffs = phi0
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c.clone() * &(three_rho.clone() + &R::from_int(3 * n as i64 + 1)))
        .collect();
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

/// `ξ(w, ρ)` through `w^order`, from
/// `t_n / t_{n−1} = (3n−2+ρ)(3n−1+ρ)(3n+ρ) / n³`.
pub fn xi_with<R: Coefficient>(rho: &R, order: usize) -> Result<TruncatedSeries<R>> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = R::one();
    coeffs.push(term.clone());
    for n in 1..=order as i64 {
        for j in [3 * n - 2, 3 * n - 1, 3 * n] {
            term = term * &(rho.clone() + &R::from_int(j));
        }
        let inv = invert(&R::from_int(n * n * n))?;
        term = term * &inv;
        coeffs.push(term.clone());
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}
