//! The B-model side.
//!
//! With `S(u) = ∂_ρ log φ₀(u, ρ)|_{ρ=0}` the mirror map is
//! `Ū = u·exp(S(u))`, and with `ψ(u) = exp(∂_ρ log ξ(u, ρ)|_{ρ=0})`
//!
//! `Σ b_n Ūⁿ = 9·ψ(u)^{−1}·u ∂_u log Ū = 9·ψ(u)^{−1}·(1 + θS(u))`.
//!
//! `U₀ = u₀·ψ(u₁)·ψ(u₂) + O(u₀²)` only enters through the `ψ^{−1}` factors;
//! everything here is first order in `u₀`.

mod hypergeometric;
mod picard_fuchs;

use alloc::vec::Vec;

use num_traits::Zero;

use crate::amodel::outer_product;
use crate::error::{Error, Result};
use crate::ring::{to_integer, BiNilpotent, Coefficient, DualScalar, Integer, Rational};
use crate::series::{mirror_reversion, TrivariateSeries, TruncatedSeries};
use crate::table::{CoefficientTable, IntMatrix, TableLabel};

pub use hypergeometric::{
    harmonic, harmonic_numbers, phi0_with, phi1_with, pochhammer, xi_with, HarmonicValue,
    PochhammerDual,
};
pub use picard_fuchs::{
    omega0_trivariate, pf_check, pf_check_with, pf_operators, Affine, PfOperator, PfReport,
    PfResidual, PfTerm,
};

/// `φ₀(w, ε)` over dual numbers.
pub fn phi0_dual(order: usize) -> TruncatedSeries<DualScalar> {
    phi0_with(&DualScalar::epsilon(), order).expect("n + ε is a unit for n ≥ 1")
}

/// `ξ(w, ε)` over dual numbers.
pub fn xi_dual(order: usize) -> TruncatedSeries<DualScalar> {
    xi_with(&DualScalar::epsilon(), order).expect("n³ is a unit over the rationals")
}

/// The `ε`-component of each coefficient.
fn epsilon_part(f: &TruncatedSeries<DualScalar>) -> TruncatedSeries<Rational> {
    f.map(|c| c.deriv.clone())
}

/// `S(u) = log Ū − log u = ∂_ρ log φ₀(u, ρ)|_{ρ=0}`.
pub fn mirror_log_u_shift(order: usize) -> Result<TruncatedSeries<Rational>> {
    Ok(epsilon_part(&phi0_dual(order).log()?))
}

/// `ψ(u) = exp(∂_ρ log ξ(u, ρ)|_{ρ=0})`.
pub fn psi_series(order: usize) -> Result<TruncatedSeries<Rational>> {
    epsilon_part(&xi_dual(order).log()?).exp()
}

/// `9·ψ(u)^{−1}·(1 + θS(u))` as a series in `u`.
pub fn instanton_series_in_u(order: usize) -> Result<TruncatedSeries<Rational>> {
    let shift = mirror_log_u_shift(order)?;
    let log_derivative = &TruncatedSeries::one(order) + &shift.theta_derivative();
    let g = &psi_series(order)?.inverse()? * &log_derivative;
    Ok(g.scale(&Rational::from_int(9)))
}

/// `u(Ū)`, the inverse of the mirror map.
pub fn inverse_mirror_map(order: usize) -> Result<TruncatedSeries<Rational>> {
    mirror_reversion(&mirror_log_u_shift(order)?, order)
}

/// `b_0, …, b_order`, the coefficients of `Σ b_n Ūⁿ`.
///
/// Every intermediate coefficient is a proper fraction; the result is
/// checked to be integral.
pub fn b_series(order: usize) -> Result<CoefficientTable> {
    let in_u = instanton_series_in_u(order)?;
    let in_ubar = in_u.compose(&inverse_mirror_map(order)?)?;
    let values = integral_values(TableLabel::B, in_ubar.coeffs())?;
    Ok(CoefficientTable::new(
        TableLabel::B,
        values,
        "9 psi^-1 (1 + theta S) composed with mirror_reversion",
    ))
}

fn integral_values(label: TableLabel, values: &[Rational]) -> Result<Vec<Integer>> {
    values
        .iter()
        .enumerate()
        .map(|(index, q)| {
            to_integer(q).ok_or_else(|| Error::NonInteger {
                label,
                index,
                value: q.clone(),
            })
        })
        .collect()
}

/// `φ(u_j, J_j)` embedded as a series in `u_j` inside `(u₀, u₁, u₂)`.
fn embed(var: usize, series: &TruncatedSeries<BiNilpotent>, orders: [u32; 3]) -> TrivariateSeries<BiNilpotent> {
    TrivariateSeries::from_univariate(var, series.coeffs(), orders)
}

/// `Ω̃ mod u₀² = φ₀(u₁,J₁)φ₀(u₂,J₂) + φ₁(u₁,J₁)φ₁(u₂,J₂)·u₀`.
pub fn omega_tilde_first_order(order1: usize, order2: usize) -> Result<TrivariateSeries<BiNilpotent>> {
    let orders = [1, order1 as u32, order2 as u32];
    let (j1, j2) = (BiNilpotent::j1(), BiNilpotent::j2());
    let phi0_1 = embed(1, &phi0_with(&j1, order1)?, orders);
    let phi0_2 = embed(2, &phi0_with(&j2, order2)?, orders);
    let phi1_1 = embed(1, &phi1_with(&j1, order1)?, orders);
    let phi1_2 = embed(2, &phi1_with(&j2, order2)?, orders);
    Ok(&(&phi0_1 * &phi0_2) + &(&phi1_1 * &phi1_2).mul_var(0))
}

/// `N_{1,n₁,n₂}` for `n₁ ≤ order1`, `n₂ ≤ order2`, by two routes:
///
/// - factorized: `b_{n₁}·b_{n₂}`;
/// - nilpotent: the `u₀ J₁J₂` coefficient `M(u₁, u₂)` of `log Ω̃`, turned
///   into `9·ψ(u₁)^{−1}ψ(u₂)^{−1}·M` and re-expanded in `(Ū₁, Ū₂)`.
///
/// The routes must agree exactly.
pub fn p0_first_order(order1: usize, order2: usize) -> Result<IntMatrix> {
    let b = b_series(order1.max(order2))?.values;
    let factorized = outer_product(&b[..=order1], &b[..=order2]);

    let log = omega_tilde_first_order(order1, order2)?.log()?;
    let mixed = log.u0_slice(1);
    let left = substitution_matrix(order1)?;
    let right = substitution_matrix(order2)?;
    let nine = Rational::from_int(9);
    for (n1, row) in factorized.iter().enumerate() {
        for (n2, expected) in row.iter().enumerate() {
            let mut acc = Rational::from_int(0);
            for ((i, j), c) in &mixed {
                let (i, j) = (*i as usize, *j as usize);
                let coefficient = c.mixed();
                if i <= n1 && j <= n2 {
                    acc.add_product(&(left[n1][i].clone() * &right[n2][j]), coefficient);
                }
            }
            let nilpotent = acc * &nine;
            let expected_q = Rational::from_integer(expected.clone());
            if nilpotent != expected_q {
                return Err(Error::PrepotentialRouteMismatch {
                    n1,
                    n2,
                    factorized: expected_q,
                    nilpotent,
                });
            }
        }
    }
    Ok(factorized)
}

/// `A[n][i] = [Ūⁿ] (ψ(u)^{−1}·u^i)|_{u = u(Ū)}`.
fn substitution_matrix(order: usize) -> Result<Vec<Vec<Rational>>> {
    let u = inverse_mirror_map(order)?;
    let weight = psi_series(order)?.inverse()?.compose(&u)?;
    let mut columns = Vec::with_capacity(order + 1);
    let mut power = TruncatedSeries::one(order);
    for _ in 0..=order {
        columns.push(&weight * &power);
        power = &power * &u;
    }
    Ok((0..=order)
        .map(|n| columns.iter().map(|col| col[n].clone()).collect())
        .collect())
}

/// Whether `log(φ₀(u₁,J₁)·φ₀(u₂,J₂))` has no `J₁J₂` component through
/// `(u₁^{order1}, u₂^{order2})`.
pub fn n0_vanishing_check(order1: usize, order2: usize) -> Result<bool> {
    let orders = [0, order1 as u32, order2 as u32];
    let phi0_1 = embed(1, &phi0_with(&BiNilpotent::j1(), order1)?, orders);
    let phi0_2 = embed(2, &phi0_with(&BiNilpotent::j2(), order2)?, orders);
    let log = (&phi0_1 * &phi0_2).log()?;
    let vanishes = log.terms().all(|(_, c)| c.mixed().is_zero());
    Ok(vanishes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};
    use num_traits::One;

    fn factorial(n: usize) -> Integer {
        (1..=n).fold(Integer::one(), |acc, k| acc * Integer::from(k))
    }

    fn central(n: usize) -> Rational {
        let f = factorial(n);
        Rational::new(factorial(3 * n), &f * &f * &f)
    }

    #[test]
    fn dual_coefficients_match_harmonic_closed_forms() {
        let order = 50;
        let g = harmonic_numbers(3 * order);
        let phi0 = phi0_dual(order);
        let xi = xi_dual(order);
        for n in 0..=order {
            let c = central(n);
            assert_eq!(phi0[n].value, c, "phi0 value {n}");
            assert_eq!(phi0[n].deriv, &c * rat(3) * (&g[3 * n] - &g[n]), "phi0 eps {n}");
            assert_eq!(xi[n].value, c, "xi value {n}");
            assert_eq!(xi[n].deriv, &c * &g[3 * n], "xi eps {n}");
        }
    }

    #[test]
    fn small_dual_values() {
        let phi0 = phi0_dual(1);
        assert_eq!(phi0[0], DualScalar::one());
        assert_eq!(phi0[1], DualScalar::new(rat(6), rat(15)));
        let xi = xi_dual(1);
        assert_eq!(xi[1], DualScalar::new(rat(6), rat(11)));
    }

    #[test]
    fn log_phi0_value_part() {
        let log = phi0_dual(3).log().unwrap();
        assert_eq!(log[1].value, rat(6));
    }

    #[test]
    fn mirror_shift_and_psi() {
        let s = mirror_log_u_shift(4).unwrap();
        assert!(s[0].is_zero());
        assert_eq!(s[1], rat(15));
        assert_eq!(s[2], ratio(333, 2));
        let ubar = s.exp().unwrap();
        assert_eq!(ubar[1], rat(15));

        let psi = psi_series(4).unwrap();
        assert_eq!(psi[0], rat(1));
        assert_eq!(psi[1], rat(11));
        let eps = epsilon_part(&xi_dual(4).log().unwrap());
        assert_eq!(eps[2], ratio(309, 2));
        assert_eq!(psi.log().unwrap(), eps);
    }

    #[test]
    fn b_series_leading_values() {
        let b = b_series(17).unwrap();
        let head: Vec<Integer> = [9, 36, 126, 360].iter().map(|&v| Integer::from(v)).collect();
        assert_eq!(b.values[..4], head[..]);
        assert_eq!(b.values[17], Integer::from(5421132));
        assert_eq!(b.label, TableLabel::B);
        assert_eq!(b_series(0).unwrap().values, [Integer::from(9)]);
    }

    #[test]
    fn reversion_round_trip_on_mirror_map() {
        let order = 20;
        let s = mirror_log_u_shift(order).unwrap();
        let u = inverse_mirror_map(order).unwrap();
        let ubar = &TruncatedSeries::variable(order) * &s.exp().unwrap();
        assert_eq!(ubar.compose(&u).unwrap(), TruncatedSeries::variable(order));
    }

    /// `Ω̃` from its defining triple sum, restricted to `m₀ ≤ 1`.
    fn omega_tilde_direct(order1: usize, order2: usize) -> TrivariateSeries<BiNilpotent> {
        let (j1, j2) = (BiNilpotent::j1(), BiNilpotent::j2());
        let three = BiNilpotent::from_int(3);
        let one = BiNilpotent::one();
        let a1 = one.clone() + &(j1.clone() * &three);
        let a2 = one.clone() + &(j2.clone() * &three);
        let b1 = one.clone() + &j1;
        let b2 = one.clone() + &j2;
        let orders = [1, order1 as u32, order2 as u32];
        let mut out = TrivariateSeries::zero(orders);
        for m0 in 0..=1usize {
            for m1 in 0..=order1 {
                for m2 in 0..=order2 {
                    let p1 = pochhammer(&b1, m1);
                    let p2 = pochhammer(&b2, m2);
                    let den = p1.clone() * &p1 * &p1 * &p2 * &p2 * &p2;
                    let num = pochhammer(&a1, m0 + 3 * m1) * &pochhammer(&a2, m0 + 3 * m2);
                    out.insert(
                        [m0 as u32, m1 as u32, m2 as u32],
                        num * &den.try_inverse().unwrap(),
                    );
                }
            }
        }
        out
    }

    #[test]
    fn omega_tilde_splits_modulo_u0_squared() {
        assert_eq!(omega_tilde_first_order(5, 4).unwrap(), omega_tilde_direct(5, 4));
    }

    #[test]
    fn omega_tilde_reduces_to_omega0() {
        let tilde = omega_tilde_first_order(4, 4).unwrap();
        let omega0 = omega0_trivariate(9);
        for (e, c) in tilde.terms() {
            assert_eq!(c.c00, omega0.coeff(*e), "{e:?}");
        }
    }

    #[test]
    fn log_omega_tilde_single_parts_are_mirror_shifts() {
        let log = omega_tilde_first_order(6, 6).unwrap().log().unwrap();
        let s = mirror_log_u_shift(6).unwrap();
        for n in 1..=6u32 {
            assert_eq!(log.coeff([0, n, 0]).c10, s[n as usize]);
            assert_eq!(log.coeff([0, 0, n]).c01, s[n as usize]);
        }
    }

    #[test]
    fn p0_routes_agree() {
        let m = p0_first_order(6, 6).unwrap();
        assert_eq!(m[0][0], Integer::from(81));
        assert_eq!(m[1][0], Integer::from(324));
        for i in 0..=6 {
            for j in 0..=6 {
                assert_eq!(m[i][j], m[j][i]);
            }
        }
        let rect = p0_first_order(2, 5).unwrap();
        assert_eq!((rect.len(), rect[0].len()), (3, 6));
    }

    #[test]
    fn p0_nilpotent_route_is_symmetric() {
        let log = omega_tilde_first_order(5, 5).unwrap().log().unwrap();
        for i in 0..=5 {
            for j in 0..=5 {
                assert_eq!(log.coeff([1, i, j]).mixed(), log.coeff([1, j, i]).mixed());
            }
        }
        assert!(!log.coeff([1, 2, 3]).mixed().is_zero());
    }

    #[test]
    fn n0_vanishes() {
        assert!(n0_vanishing_check(0, 0).unwrap());
        assert!(n0_vanishing_check(5, 5).unwrap());
        assert!(n0_vanishing_check(3, 8).unwrap());
    }
}
