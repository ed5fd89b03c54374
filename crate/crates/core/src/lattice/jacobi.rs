//! The restricted E8 theta function through Jacobi theta constants:
//!
//! `Θ_E8(3t, tγ) = ½ {θ₀₀(3t,t)⁸ + θ₀₁(3t,t)⁸ + θ₁₀(3t,t)⁸ − θ₁₁(3t,t)⁸}`.
//!
//! The four specializations have exponents in `U = e^{2πit}` with
//! denominators 3, 12 and 8, so they are expanded in `ζ` with `ζ²⁴ = U`.
//! Only the eighth-power combination is an honest `U`-series.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::Integer;
use crate::series::TruncatedSeries;

/// Powers of `ζ` per power of `U`.
pub const ZETA_PER_U: i64 = 24;

/// One of the four characteristics `θ_{a,b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaKind {
    T00,
    T01,
    T10,
    T11,
}

impl ThetaKind {
    pub const ALL: [ThetaKind; 4] = [ThetaKind::T00, ThetaKind::T01, ThetaKind::T10, ThetaKind::T11];
}

/// `i^phase · Σ_k coeffs[k] ζ^{valuation + k}`, known exactly for exponents
/// up to `valuation + order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalSeries {
    valuation: i64,
    coeffs: TruncatedSeries<Integer>,
    phase: u8,
}

impl FractionalSeries {
    /// Series exact through `ζ^{max_exponent}`, built from `(exponent,
    /// coefficient)` pairs; pairs beyond `max_exponent` are dropped.
    pub fn from_terms(
        valuation: i64,
        max_exponent: i64,
        phase: u8,
        terms: impl IntoIterator<Item = (i64, Integer)>,
    ) -> Self {
        assert!(max_exponent >= valuation, "empty exponent window");
        let len = (max_exponent - valuation) as usize;
        let mut coeffs = vec![Integer::zero(); len + 1];
        for (e, c) in terms {
            assert!(e >= valuation, "exponent {e} below valuation {valuation}");
            if e <= max_exponent {
                coeffs[(e - valuation) as usize] += c;
            }
        }
        Self {
            valuation,
            coeffs: TruncatedSeries::from_coeffs(coeffs),
            phase: phase % 4,
        }
    }

    /// Lowest exponent that may carry a nonzero coefficient.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Highest exponent known exactly.
    pub fn max_exponent(&self) -> i64 {
        self.valuation + self.coeffs.order() as i64
    }

    /// The scalar prefactor is `i^phase`.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// Coefficient of `ζ^exponent` in the stripped series (without the
    /// `i^phase` prefactor). `None` beyond the known window.
    pub fn coeff(&self, exponent: i64) -> Option<Integer> {
        if exponent > self.max_exponent() {
            None
        } else if exponent < self.valuation {
            Some(Integer::zero())
        } else {
            Some(self.coeffs[(exponent - self.valuation) as usize].clone())
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs of the stripped series.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Integer)> {
        self.coeffs
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.valuation + k as i64, c))
    }

    pub fn mul(&self, rhs: &FractionalSeries) -> FractionalSeries {
        FractionalSeries {
            valuation: self.valuation + rhs.valuation,
            coeffs: &self.coeffs * &rhs.coeffs,
            phase: (self.phase + rhs.phase) % 4,
        }
    }

    pub fn pow(&self, k: u32) -> FractionalSeries {
        let mut acc = FractionalSeries {
            valuation: 0,
            coeffs: TruncatedSeries::one(self.coeffs.order()),
            phase: 0,
        };
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Folds a real prefactor `±1` into the coefficients. `None` when the
    /// prefactor is `±i`.
    pub fn into_real(self) -> Option<FractionalSeries> {
        match self.phase {
            0 => Some(self),
            2 => Some(FractionalSeries {
                coeffs: -self.coeffs,
                phase: 0,
                ..self
            }),
            _ => None,
        }
    }

    /// Sum of two real series over their common window.
    fn add_real(&self, rhs: &FractionalSeries) -> FractionalSeries {
        debug_assert!(self.phase == 0 && rhs.phase == 0);
        let valuation = self.valuation.min(rhs.valuation);
        let max_exponent = self.max_exponent().min(rhs.max_exponent());
        let terms = self.terms().chain(rhs.terms()).map(|(e, c)| (e, c.clone()));
        FractionalSeries::from_terms(valuation, max_exponent, 0, terms)
    }

    fn negate(&self) -> FractionalSeries {
        FractionalSeries {
            coeffs: -&self.coeffs,
            ..self.clone()
        }
    }
}

/// Exponent window needed from each factor so that an eighth power is exact
/// through `U^order`: `8·v + (max − v) ≥ 24·order`.
fn factor_window(order: usize, valuation: i64) -> i64 {
    ZETA_PER_U * order as i64 - 7 * valuation
}

/// `θ_{a,b}(3t, t)` as a `ζ`-series exact through `ζ^{24·order}`.
pub fn jacobi_theta_spec(kind: ThetaKind, order: usize) -> FractionalSeries {
    theta_spec_to(kind, ZETA_PER_U * order as i64)
}

fn theta_spec_to(kind: ThetaKind, max_exponent: i64) -> FractionalSeries {
    match kind {
        // Σ_{m ≥ 1, m ≡ ±1 (3)} ζ^{4(m² − 1)}
        ThetaKind::T00 => FractionalSeries::from_terms(
            0,
            max_exponent,
            0,
            odd_square_terms(3, |m| 4 * (m * m - 1), max_exponent, |_| Integer::one()),
        ),
        // Σ_{m ≥ 1, m ≡ ±1 (3)} (−1)^{m+1} ζ^{4(m² − 1)}
        ThetaKind::T01 => FractionalSeries::from_terms(
            0,
            max_exponent,
            0,
            odd_square_terms(3, |m| 4 * (m * m - 1), max_exponent, |m| {
                if m % 2 == 0 {
                    -Integer::one()
                } else {
                    Integer::one()
                }
            }),
        ),
        // Σ_{m ≥ 1, m ≡ ±1 (6)} ζ^{m² − 4}
        ThetaKind::T10 => FractionalSeries::from_terms(
            -3,
            max_exponent,
            0,
            odd_square_terms(6, |m| m * m - 4, max_exponent, |_| Integer::one()),
        ),
        // −i · ζ^{−3} ∏_{m ≥ 1} (1 − ζ^{24m})
        ThetaKind::T11 => {
            let u_order = ((max_exponent + 3).max(0) / ZETA_PER_U) as usize;
            let euler = euler_product(u_order);
            let terms = euler
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| (ZETA_PER_U * n as i64 - 3, c.clone()));
            FractionalSeries::from_terms(-3, max_exponent, 3, terms)
        }
    }
}

/// `(exponent(m), sign(m))` for `m ≥ 1`, `m ≡ ±1 (modulus)`, while the
/// exponent stays within the window. Exponents grow with `m`.
fn odd_square_terms(
    modulus: i64,
    exponent: impl Fn(i64) -> i64,
    max_exponent: i64,
    sign: impl Fn(i64) -> Integer,
) -> Vec<(i64, Integer)> {
    (1..)
        .filter(|m| {
            let r = m % modulus;
            r == 1 || r == modulus - 1
        })
        .map(|m| (exponent(m), sign(m)))
        .take_while(|(e, _)| *e <= max_exponent)
        .collect()
}

/// `∏_{m ≥ 1} (1 − U^m)` through `U^order`, by Euler's pentagonal theorem.
fn euler_product(order: usize) -> TruncatedSeries<Integer> {
    let mut coeffs = vec![Integer::zero(); order + 1];
    coeffs[0] = Integer::one();
    for k in 1.. {
        let first = k * (3 * k - 1) / 2;
        if first > order {
            break;
        }
        let sign = if k % 2 == 1 { -Integer::one() } else { Integer::one() };
        coeffs[first] += &sign;
        let second = k * (3 * k + 1) / 2;
        if second <= order {
            coeffs[second] += &sign;
        }
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `c_0, …, c_order` from the theta-constant combination.
///
/// Fails if a surviving exponent is not a multiple of 24 (or is negative),
/// or if the bracket is odd before halving; both indicate a bookkeeping bug
/// rather than a property of the input.
pub fn theta_e8_restricted_jacobi(order: usize) -> Result<Vec<Integer>> {
    let top = ZETA_PER_U * order as i64;
    let mut total: Option<FractionalSeries> = None;
    for kind in ThetaKind::ALL {
        let valuation = theta_spec_to(kind, 0).valuation();
        let factor = theta_spec_to(kind, factor_window(order, valuation));
        let eighth = factor
            .pow(8)
            .into_real()
            .expect("the eighth power of a fourth root of unity is 1");
        let signed = if kind == ThetaKind::T11 {
            eighth.negate()
        } else {
            eighth
        };
        total = Some(match total {
            None => signed,
            Some(acc) => acc.add_real(&signed),
        });
    }
    let total = total.expect("four characteristics");
    debug_assert!(total.max_exponent() >= top);

    let mut out = vec![Integer::zero(); order + 1];
    for (exponent, value) in total.terms() {
        if exponent > top {
            break;
        }
        if exponent < 0 || exponent % ZETA_PER_U != 0 {
            return Err(Error::FractionalExponent { exponent });
        }
        let index = (exponent / ZETA_PER_U) as usize;
        let (half, rem) = value.div_rem(&Integer::from(2));
        if !rem.is_zero() {
            return Err(Error::OddThetaSum {
                index,
                value: value.clone(),
            });
        }
        out[index] = half;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    /// `i^phase · series` as exponent → (real, imaginary) parts.
    fn gaussian(s: &FractionalSeries, max: i64) -> BTreeMap<i64, (Integer, Integer)> {
        let mut out = BTreeMap::new();
        for (e, c) in s.terms() {
            if e > max {
                continue;
            }
            let c = c.clone();
            let z = Integer::zero();
            let value = match s.phase() {
                0 => (c, z),
                1 => (z, c),
                2 => (-c, z),
                _ => (z, -c),
            };
            out.insert(e, value);
        }
        out
    }

    /// `θ_{a,b}(3t, t) = Σ_{n ∈ Z} exp(πi·3t·x² + 2πi·x(t + b/2))`, `x = n + a/2`,
    /// summed term by term. With `y = 2x` the `ζ`-exponent is `9y² + 12y`
    /// and the prefactor is `i^{yb}`.
    fn defining_sum(a: i64, b: i64, max: i64) -> BTreeMap<i64, (Integer, Integer)> {
        let mut out: BTreeMap<i64, (Integer, Integer)> = BTreeMap::new();
        for n in -200i64..=200 {
            let y = 2 * n + a;
            let zeta = 9 * y * y + 12 * y;
            if zeta > max {
                continue;
            }
            let slot = out.entry(zeta).or_insert((Integer::zero(), Integer::zero()));
            match (y * b).rem_euclid(4) {
                0 => slot.0 += 1,
                1 => slot.1 += 1,
                2 => slot.0 -= 1,
                _ => slot.1 -= 1,
            }
        }
        out.retain(|_, (re, im)| !(re.is_zero() && im.is_zero()));
        out
    }

    fn characteristics(kind: ThetaKind) -> (i64, i64) {
        match kind {
            ThetaKind::T00 => (0, 0),
            ThetaKind::T01 => (0, 1),
            ThetaKind::T10 => (1, 0),
            ThetaKind::T11 => (1, 1),
        }
    }

    #[test]
    fn specializations_match_defining_sums() {
        let max = 24 * 6;
        for kind in ThetaKind::ALL {
            let (a, b) = characteristics(kind);
            assert_eq!(gaussian(&jacobi_theta_spec(kind, 6), max), defining_sum(a, b, max), "{kind:?}");
        }
    }

    #[test]
    fn theta00_leading_coefficient() {
        let t = jacobi_theta_spec(ThetaKind::T00, 2);
        // only m = 1 reaches ζ⁰
        assert_eq!(t.coeff(0), Some(Integer::from(1)));
        assert_eq!(t.coeff(4 * 3), Some(Integer::from(1)));
        assert_eq!(t.coeff(1), Some(Integer::zero()));
    }

    #[test]
    fn theta11_product_starts_with_one() {
        let t = jacobi_theta_spec(ThetaKind::T11, 3);
        assert_eq!(t.phase(), 3);
        assert_eq!(t.valuation(), -3);
        assert_eq!(t.coeff(-3), Some(Integer::from(1)));
        assert_eq!(t.coeff(21), Some(Integer::from(-1)));
    }

    #[test]
    fn theta11_product_matches_character_sum() {
        // ∏(1 − q^n) = Σ_{m ≥ 1} χ₁₂(m) q^{(m² − 1)/24}
        let max = 24 * 30;
        let chi_terms = odd_square_terms(6, |m| m * m - 4, max, |m| {
            let r = m % 12;
            if r == 1 || r == 11 {
                Integer::one()
            } else {
                -Integer::one()
            }
        });
        let chi = FractionalSeries::from_terms(-3, max, 3, chi_terms);
        assert_eq!(chi, jacobi_theta_spec(ThetaKind::T11, 30));
    }

    #[test]
    fn squares_match_defining_sums() {
        let max = 24 * 2;
        for kind in ThetaKind::ALL {
            let t = jacobi_theta_spec(kind, 3);
            let squared = t.mul(&t);
            let (a, b) = characteristics(kind);
            let direct = defining_sum(a, b, 24 * 3);
            // square the Gaussian-integer oracle directly
            let mut expected: BTreeMap<i64, (Integer, Integer)> = BTreeMap::new();
            for (e1, (r1, i1)) in &direct {
                for (e2, (r2, i2)) in &direct {
                    if e1 + e2 > max {
                        continue;
                    }
                    let slot = expected.entry(e1 + e2).or_insert((Integer::zero(), Integer::zero()));
                    slot.0 += r1 * r2 - i1 * i2;
                    slot.1 += r1 * i2 + i1 * r2;
                }
            }
            expected.retain(|_, (re, im)| !(re.is_zero() && im.is_zero()));
            assert_eq!(gaussian(&squared, max), expected, "{kind:?}");
        }
    }

    #[test]
    fn eighth_powers_are_real_and_integral_in_u() {
        let c = theta_e8_restricted_jacobi(4).unwrap();
        let expected = [9, 36, 126, 252, 513].map(Integer::from).to_vec();
        assert_eq!(c, expected);
    }

    #[test]
    fn order_zero_is_computed() {
        assert_eq!(theta_e8_restricted_jacobi(0).unwrap(), vec![Integer::from(9)]);
    }
}
