//! The A-model side: `Θ_E8(3t, tγ) = Σ c_m U^m`, the restricted series
//! `A^res(t) = Σ a_m U^m = [Σ c_m U^m]·∏(1 − U^{3m})^{−12}`, pseudo-section
//! multiplicities and the first-order-in-`p` prepotential coefficients
//! `N_{1,n₁,n₂} = a_{n₁}·a_{n₂}`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{
    eta_factor_power12, partition_numbers, theta_e8_restricted_jacobi, theta_e8_restricted_lattice,
};
use crate::ring::{Integer, Rational};
use crate::series::TruncatedSeries;
use crate::table::{CoefficientTable, IntMatrix, TableLabel};

/// Which computation of `c_m` to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Route {
    /// Eighth powers of the four theta constants.
    #[default]
    Jacobi,
    /// Direct enumeration of E8 lattice points.
    Lattice,
    /// Both, with a hard failure on disagreement.
    Both,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Jacobi => "jacobi",
            Route::Lattice => "lattice",
            Route::Both => "both",
        }
    }
}

/// `c_0, …, c_order` by both routes; they must agree.
pub fn c_series(order: usize) -> Result<CoefficientTable> {
    c_series_with(order, Route::Both)
}

/// `c_0, …, c_order` by the chosen route.
pub fn c_series_with(order: usize, route: Route) -> Result<CoefficientTable> {
    let values = match route {
        Route::Jacobi => theta_e8_restricted_jacobi(order)?,
        Route::Lattice => theta_e8_restricted_lattice(order),
        Route::Both => {
            let jacobi = theta_e8_restricted_jacobi(order)?;
            let lattice = theta_e8_restricted_lattice(order);
            if let Some(index) = first_difference(&jacobi, &lattice) {
                return Err(Error::RouteMismatch {
                    index,
                    jacobi: jacobi[index].clone(),
                    lattice: lattice[index].clone(),
                });
            }
            jacobi
        }
    };
    Ok(CoefficientTable::new(
        TableLabel::C,
        values,
        format!("theta_e8_restricted/{}", route.name()),
    ))
}

fn first_difference(a: &[Integer], b: &[Integer]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// `a_0, …, a_order` from the Jacobi route for `c`.
pub fn a_series(order: usize) -> Result<CoefficientTable> {
    a_series_with(order, Route::Jacobi)
}

/// `a_0, …, a_order`, with `c` taken from `route`.
pub fn a_series_with(order: usize, route: Route) -> Result<CoefficientTable> {
    let c = c_series_with(order, route)?;
    Ok(a_from_c(&c))
}

/// `[Σ c_m U^m]·[Σ p(k) U^{3k}]^{12}` truncated at the order of `c`.
pub fn a_from_c(c: &CoefficientTable) -> CoefficientTable {
    let order = c.order();
    let theta = TruncatedSeries::new(c.values.clone(), order);
    let product = &theta * &eta_factor_power12(order, 3);
    CoefficientTable::new(
        TableLabel::A,
        product.into_coeffs(),
        format!("{} * eta_factor_power12(step 3)", c.provenance),
    )
}

/// `n(σ, n, m) = [xⁿ](Σ p(k)x^k)^{12} · [x^m](Σ p(k)x^k)^{12}`.
pub fn pseudo_section_count(n: usize, m: usize) -> Integer {
    let power = eta_factor_power12(n.max(m), 1);
    &power[n] * &power[m]
}

/// A pseudo-section type: the partition sizes `k₁, …, k₁₂` and
/// `k′₁, …, k′₁₂` attached to the twelve singular fibres on either side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PseudoSectionType {
    pub k: [u32; 12],
    pub kprime: [u32; 12],
}

impl PseudoSectionType {
    pub fn new(k: [u32; 12], kprime: [u32; 12]) -> Self {
        Self { k, kprime }
    }

    /// `(Σ kᵢ, Σ k′ⱼ)`.
    pub fn degrees(&self) -> (u32, u32) {
        (self.k.iter().sum(), self.kprime.iter().sum())
    }

    /// `n(μ) = ∏ p(kᵢ) · ∏ p(k′ⱼ)`.
    pub fn multiplicity(&self) -> Integer {
        let top = self.k.iter().chain(&self.kprime).copied().max().unwrap_or(0);
        let p = partition_numbers(top as usize);
        self.k
            .iter()
            .chain(&self.kprime)
            .fold(Integer::from(1), |acc, &k| acc * &p[k as usize])
    }
}

/// Largest colength accepted by [`hilb_euler_oracle`].
pub const HILB_COLENGTH_LIMIT: usize = 12;

/// Number of monomial ideals of `C[x, y]` of colength `k`, counted by
/// growing the standard monomials (a Young diagram) one addable corner at a
/// time.
pub fn hilb_euler_oracle(k: usize) -> Result<Integer> {
    if k > HILB_COLENGTH_LIMIT {
        return Err(Error::ColengthTooLarge {
            requested: k,
            limit: HILB_COLENGTH_LIMIT,
        });
    }
    // A down-set is stored as its sorted list of standard monomials (i, j).
    let mut level: BTreeSet<Vec<(u32, u32)>> = BTreeSet::new();
    level.insert(Vec::new());
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for shape in &level {
            for corner in addable_corners(shape) {
                let mut grown = shape.clone();
                grown.push(corner);
                grown.sort_unstable();
                next.insert(grown);
            }
        }
        level = next;
    }
    Ok(Integer::from(level.len()))
}

/// Monomials `x^i y^j` not in the set whose lower neighbours all are.
fn addable_corners(shape: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let contains = |cell: (u32, u32)| shape.binary_search(&cell).is_ok();
    let mut candidates: Vec<(u32, u32)> = vec![(0, 0)];
    for &(i, j) in shape {
        candidates.push((i + 1, j));
        candidates.push((i, j + 1));
    }
    candidates.sort_unstable();
    candidates.dedup();
    candidates
        .into_iter()
        .filter(|&(i, j)| {
            !contains((i, j))
                && (i == 0 || contains((i - 1, j)))
                && (j == 0 || contains((i, j - 1)))
        })
        .collect()
}

/// `N_{1,n₁,n₂} = a_{n₁}·a_{n₂}` for `n₁ ≤ order1`, `n₂ ≤ order2`.
pub fn n1_matrix(order1: usize, order2: usize) -> Result<IntMatrix> {
    let a = a_series(order1.max(order2))?;
    Ok(outer_product(&a.values[..=order1], &a.values[..=order2]))
}

pub(crate) fn outer_product(left: &[Integer], right: &[Integer]) -> IntMatrix {
    left.iter()
        .map(|x| right.iter().map(|y| x * y).collect())
        .collect()
}

/// The `pⁿ` slices of `Σ_{n≥1} (pⁿ/n³)·A^res(n t₁)·A^res(n t₂)` for
/// `1 ≤ n ≤ k_max`, each as a square matrix of `U₁^{i} U₂^{j}` coefficients
/// with `i, j ≤ order`.
pub fn prepotential_terms(order: usize, k_max: usize) -> Result<Vec<(usize, Vec<Vec<Rational>>)>> {
    let a = a_series(order)?;
    let a = TruncatedSeries::new(a.values, order);
    let mut out = Vec::with_capacity(k_max);
    for n in 1..=k_max {
        let scaled = TruncatedSeries::new(a.coeffs()[..=order / n].to_vec(), order).dilate(n);
        let weight = Rational::new(Integer::from(1), Integer::from(n * n * n));
        let slice = outer_product(scaled.coeffs(), scaled.coeffs())
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| {
                        if x.is_zero() {
                            Rational::zero()
                        } else {
                            Rational::from_integer(x) * &weight
                        }
                    })
                    .collect()
            })
            .collect();
        out.push((n, slice));
    }
    Ok(out)
}
