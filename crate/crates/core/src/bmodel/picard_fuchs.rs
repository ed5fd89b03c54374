//! The regular period `Ω^{(0)}` and the three Picard–Fuchs operators that
//! annihilate it.
//!
//! An operator is a sum of terms `scalar · u^shift · ∏ (c + Σ aᵢ θ_{u_i})`.
//! Since `θ_{u_i}` acts on `u^m` as multiplication by `mᵢ`, each term acts
//! diagonally on monomials before the shift.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::ring::{Integer, Rational};
use crate::series::{Exponent, TrivariateSeries};

/// `Ω^{(0)}(u) = Σ (m₀+3m₁)!(m₀+3m₂)! / ((m₀!)²(m₁!)³(m₂!)³) · u^m` over
/// all monomials of total degree at most `max_total`.
pub fn omega0_trivariate(max_total: u32) -> TrivariateSeries<Rational> {
    let n = max_total as usize;
    let mut fact = vec![Integer::from(1); 3 * n + 1 + 1];
    for k in 1..fact.len() {
        fact[k] = &fact[k - 1] * Integer::from(k);
    }
    let cube = |k: usize| &fact[k] * &fact[k] * &fact[k];
    let mut out = TrivariateSeries::zero_with_total([max_total; 3], max_total);
    for m0 in 0..=n {
        for m1 in 0..=n - m0 {
            for m2 in 0..=n - m0 - m1 {
                let num = &fact[m0 + 3 * m1] * &fact[m0 + 3 * m2];
                let den = &fact[m0] * &fact[m0] * cube(m1) * cube(m2);
                out.insert(
                    [m0 as u32, m1 as u32, m2 as u32],
                    Rational::new(num, den),
                );
            }
        }
    }
    out
}

/// `constant + Σ theta[i]·θ_{u_i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Affine {
    pub constant: i64,
    pub theta: [i64; 3],
}

impl Affine {
    pub const fn new(constant: i64, theta: [i64; 3]) -> Self {
        Self { constant, theta }
    }

    fn eval(&self, e: &Exponent) -> i64 {
        self.constant
            + self
                .theta
                .iter()
                .zip(e)
                .map(|(a, &m)| a * i64::from(m))
                .sum::<i64>()
    }
}

/// `scalar · u^shift · ∏ factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfTerm {
    pub scalar: i64,
    pub shift: Exponent,
    pub factors: Vec<Affine>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfOperator {
    pub name: &'static str,
    pub terms: Vec<PfTerm>,
}

impl PfOperator {
    /// Applies the operator, keeping the truncation region of `f`.
    pub fn apply(&self, f: &TrivariateSeries<Rational>) -> TrivariateSeries<Rational> {
        let mut acc: alloc::collections::BTreeMap<Exponent, Rational> = Default::default();
        for term in &self.terms {
            for (e, c) in f.terms() {
                let weight: i64 = term.factors.iter().map(|a| a.eval(e)).product::<i64>() * term.scalar;
                if weight == 0 {
                    continue;
                }
                let target = [e[0] + term.shift[0], e[1] + term.shift[1], e[2] + term.shift[2]];
                let slot = acc.entry(target).or_insert_with(Rational::zero);
                *slot += c * Rational::from_integer(weight.into());
            }
        }
        let mut out = TrivariateSeries::zero_with_total(f.orders(), f.max_total());
        for (e, c) in acc {
            out.insert(e, c);
        }
        out
    }

    /// The same operator with the sign of one term reversed.
    pub fn with_flipped_term(&self, index: usize) -> Self {
        let mut out = self.clone();
        out.terms[index].scalar = -out.terms[index].scalar;
        out
    }
}

fn term(scalar: i64, shift: Exponent, factors: &[Affine]) -> PfTerm {
    PfTerm {
        scalar,
        shift,
        factors: factors.to_vec(),
    }
}

fn unit<T: Copy + Default + From<u8>>(i: usize) -> [T; 3] {
    let mut v = [T::default(); 3];
    v[i] = T::from(1);
    v
}

/// `c + 3θ_i + θ₀`.
fn weighted(c: i64, i: usize) -> Affine {
    let mut theta = [1, 0, 0];
    theta[i] = 3;
    Affine::new(c, theta)
}

/// `D_i` for `i = 1, 2`:
/// `(3θ_i − θ₀)θ_i − 9u_i(3θ_i+θ₀+2)(3θ_i+θ₀+1) + u₀θ_i(3θ_j+θ₀+1)`.
fn hesse_type(name: &'static str, i: usize, j: usize) -> PfOperator {
    let mut leading = [-1, 0, 0];
    leading[i] = 3;
    PfOperator {
        name,
        terms: vec![
            term(1, [0; 3], &[Affine::new(0, leading), Affine::new(0, unit(i))]),
            term(-9, unit(i), &[weighted(2, i), weighted(1, i)]),
            term(1, unit(0), &[Affine::new(0, unit(i)), weighted(1, j)]),
        ],
    }
}

/// `D₃ = θ₀² − u₀(3θ₁+θ₀+1)(3θ₂+θ₀+1)`.
fn d3() -> PfOperator {
    let theta0 = Affine::new(0, unit(0));
    PfOperator {
        name: "D3",
        terms: vec![
            term(1, [0; 3], &[theta0, theta0]),
            term(-1, unit(0), &[weighted(1, 1), weighted(1, 2)]),
        ],
    }
}

/// `D₁`, `D₂`, `D₃`.
pub fn pf_operators() -> [PfOperator; 3] {
    [hesse_type("D1", 1, 2), hesse_type("D2", 2, 1), d3()]
}

/// One nonzero coefficient of `D Ω^{(0)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfResidual {
    pub operator: &'static str,
    pub exponent: Exponent,
    pub value: Rational,
}

/// Outcome of applying the operators through a total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfReport {
    pub max_degree: u32,
    pub operators: Vec<&'static str>,
    pub residuals: Vec<PfResidual>,
}

impl PfReport {
    pub fn passed(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// Applies `D₁, D₂, D₃` to `Ω^{(0)}` through total degree `degree + 1` and
/// collects every nonzero coefficient of total degree at most `degree`.
pub fn pf_check(degree: u32) -> PfReport {
    pf_check_with(&pf_operators(), degree)
}

pub fn pf_check_with(operators: &[PfOperator], degree: u32) -> PfReport {
    let omega = omega0_trivariate(degree + 1);
    let mut residuals = Vec::new();
    for op in operators {
        for (e, c) in op.apply(&omega).terms() {
            if e.iter().sum::<u32>() <= degree {
                residuals.push(PfResidual {
                    operator: op.name,
                    exponent: *e,
                    value: c.clone(),
                });
            }
        }
    }
    PfReport {
        max_degree: degree,
        operators: operators.iter().map(|op| op.name).collect(),
        residuals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bmodel::hypergeometric::phi0_with;
    use crate::ring::rat;
    use proptest::prelude::*;

    #[test]
    fn omega0_leading_coefficients() {
        let omega = omega0_trivariate(3);
        assert_eq!(omega.coeff([0, 0, 0]), rat(1));
        assert_eq!(omega.coeff([1, 0, 0]), rat(1));
        assert_eq!(omega.coeff([0, 1, 0]), rat(6));
        assert_eq!(omega.coeff([0, 0, 1]), rat(6));
        // 4!·1!/(1·1·1)
        assert_eq!(omega.coeff([1, 1, 0]), rat(24));
        assert_eq!(omega.coeff([2, 0, 0]), rat(1));
        assert!(omega.coeff([2, 1, 1]).is_zero());
    }

    #[test]
    fn operators_match_hand_expansion() {
        // On u^m: D₃ ↦ m₀² · u^m − (3m₁+m₀+1)(3m₂+m₀+1) · u^{m+e₀}
        let [d1, d2, d3] = pf_operators();
        let e = [2u32, 1, 3];
        let eval = |op: &PfOperator, k: usize| -> i64 {
            op.terms[k].factors.iter().map(|a| a.eval(&e)).product::<i64>() * op.terms[k].scalar
        };
        assert_eq!(eval(&d3, 0), 4);
        assert_eq!(eval(&d3, 1), -(3 + 2 + 1) * (9 + 2 + 1));
        assert_eq!(d3.terms[1].shift, [1, 0, 0]);
        // (3m₁ − m₀)m₁, −9(3m₁+m₀+2)(3m₁+m₀+1), m₁(3m₂+m₀+1)
        assert_eq!(eval(&d1, 0), 1);
        assert_eq!(eval(&d1, 1), -9 * 7 * 6);
        assert_eq!(eval(&d1, 2), 12);
        assert_eq!(d1.terms[1].shift, [0, 1, 0]);
        assert_eq!(eval(&d2, 0), (9 - 2) * 3);
        assert_eq!(eval(&d2, 1), -9 * 13 * 12);
        assert_eq!(eval(&d2, 2), 3 * 6);
        assert_eq!(d2.terms[1].shift, [0, 0, 1]);
    }

    #[test]
    fn d3_degree_one_cancellation() {
        let [_, _, d3] = pf_operators();
        let out = d3.apply(&omega0_trivariate(2));
        assert!(out.coeff([1, 0, 0]).is_zero());
    }

    #[test]
    fn operators_annihilate_through_degree_six() {
        let report = pf_check(6);
        assert!(report.passed(), "{:?}", report.residuals.first());
        assert_eq!(report.operators, ["D1", "D2", "D3"]);
    }

    #[test]
    fn sign_flip_is_detected() {
        let [d1, d2, d3] = pf_operators();
        let report = pf_check_with(&[d1, d2, d3.with_flipped_term(1)], 2);
        assert!(!report.passed());
        let first = &report.residuals[0];
        assert_eq!(first.operator, "D3");
        assert_eq!(first.exponent, [1, 0, 0]);
        assert_eq!(first.value, rat(2));
    }

    #[test]
    fn d1_restricts_to_hesse_operator() {
        let phi0: Vec<Rational> = phi0_with(&rat(0), 10).unwrap().into_coeffs();
        let f = TrivariateSeries::from_univariate(1, &phi0, [0, 10, 0]);
        let [d1, _, _] = pf_operators();
        let out = d1.apply(&f);
        assert!(out.u0_slice(0).keys().all(|&(m1, _)| m1 > 10), "{:?}", out.u0_slice(0));
    }

    proptest! {
        #[test]
        fn annihilation_holds_at_each_degree(degree in 0u32..=6, which in 0usize..3) {
            let op = pf_operators()[which].clone();
            prop_assert!(pf_check_with(&[op], degree).passed());
        }

        #[test]
        fn any_single_corruption_is_seen(e0 in 0u32..3, e1 in 0u32..3, e2 in 0u32..3, delta in 1i64..5) {
            let mut omega = omega0_trivariate(6);
            let e = [e0, e1, e2];
            let bumped = omega.coeff(e) + rat(delta);
            omega.insert(e, bumped);
            let hit = pf_operators()
                .iter()
                .any(|op| op.apply(&omega).terms().any(|(m, _)| m.iter().sum::<u32>() <= 6));
            prop_assert!(hit);
        }
    }
}
