use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};



use crate::error::{Error, Result};
use crate::ring::{reciprocal_of_int, Coefficient};

/// Exponent triple `(m₀, m₁, m₂)` of `u₀^{m₀} u₁^{m₁} u₂^{m₂}`.
pub type Exponent = [u32; 3];

/// Sparse series in `u₀, u₁, u₂`.
///
/// Known exactly on the region `mᵢ ≤ orders[i]` and `m₀ + m₁ + m₂ ≤
/// max_total`; monomials outside it are never stored. Zero coefficients are
/// never stored either.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivariateSeries<R> {
    terms: BTreeMap<Exponent, R>,
    orders: Exponent,
    max_total: u32,
}

impl<R: Coefficient> TrivariateSeries<R> {
    /// Truncated per variable only.
    pub fn zero(orders: Exponent) -> Self {
        let max_total = orders.iter().sum();
        Self::zero_with_total(orders, max_total)
    }

    /// Truncated per variable and by total degree.
    pub fn zero_with_total(orders: Exponent, max_total: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            orders,
            max_total,
        }
    }

    pub fn one(orders: Exponent) -> Self {
        let mut s = Self::zero(orders);
        s.insert([0, 0, 0], R::one());
        s
    }

    pub fn orders(&self) -> Exponent {
        self.orders
    }

    pub fn max_total(&self) -> u32 {
        self.max_total
    }

    /// Whether `e` lies in the region this series knows about.
    pub fn contains(&self, e: Exponent) -> bool {
        e.iter().zip(&self.orders).all(|(m, n)| m <= n)
            && e.iter().sum::<u32>() <= self.max_total
    }

    /// Sets a coefficient. Exponents outside the truncation region are
    /// silently dropped, as is a zero value.
    pub fn insert(&mut self, e: Exponent, c: R) {
        if !self.contains(e) || c.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, c);
        }
    }

    pub fn coeff(&self, e: Exponent) -> R {
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn common_region(&self, rhs: &Self) -> (Exponent, u32) {
        let orders = core::array::from_fn(|i| self.orders[i].min(rhs.orders[i]));
        (orders, self.max_total.min(rhs.max_total))
    }

    pub fn map_terms(&self, mut f: impl FnMut(&Exponent, &R) -> R) -> Self {
        let mut out = Self::zero_with_total(self.orders, self.max_total);
        for (e, c) in &self.terms {
            out.insert(*e, f(e, c));
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map_terms(|_, x| x.clone() * c)
    }

    /// `θ_{u_i} = u_i ∂/∂u_i`.
    pub fn theta(&self, var: usize) -> Self {
        self.map_terms(|e, c| c.clone() * &R::from_int(i64::from(e[var])))
    }

    /// Multiplication by `u_i`; terms pushed out of the region are dropped.
    pub fn mul_var(&self, var: usize) -> Self {
        let mut out = Self::zero_with_total(self.orders, self.max_total);
        for (e, c) in &self.terms {
            let mut shifted = *e;
            shifted[var] += 1;
            out.insert(shifted, c.clone());
        }
        out
    }

    /// The slice `u₀ = u₀^{m₀}` coefficient as a series in `(u₁, u₂)`,
    /// returned as `(m₁, m₂) → c`.
    pub fn u0_slice(&self, m0: u32) -> BTreeMap<(u32, u32), R> {
        self.terms
            .range([m0, 0, 0]..=[m0, u32::MAX, u32::MAX])
            .map(|(e, c)| ((e[1], e[2]), c.clone()))
            .collect()
    }

    /// Embeds a univariate coefficient list as a series in one variable.
    pub fn from_univariate(var: usize, coeffs: &[R], orders: Exponent) -> Self {
        let mut out = Self::zero(orders);
        for (n, c) in coeffs.iter().enumerate() {
            let mut e = [0; 3];
            e[var] = n as u32;
            out.insert(e, c.clone());
        }
        out
    }

    /// Multiplicative inverse, for a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeff([0, 0, 0]);
        let c0_inv = c0.try_inverse().ok_or_else(|| Error::NotInvertible {
            constant: format!("{c0}"),
        })?;
        let mut out = Self::zero_with_total(self.orders, self.max_total);
        out.insert([0, 0, 0], c0_inv.clone());
        let rest: Vec<(Exponent, R)> = self
            .terms
            .iter()
            .filter(|(e, _)| **e != [0, 0, 0])
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        // Lexicographic order visits e − e' before e for every nonzero e' ≤ e.
        for target in self.region() {
            if target == [0, 0, 0] {
                continue;
            }
            let mut acc = R::zero();
            for (e, c) in &rest {
                if let Some(diff) = sub_exponent(target, *e) {
                    if let Some(g) = out.terms.get(&diff) {
                        acc.add_product(c, g);
                    }
                }
            }
            out.insert(target, -(acc * &c0_inv));
        }
        Ok(out)
    }

    /// `log f` for constant term 1, through the Euler operator
    /// `E = Σ θ_{u_i}`: `E log f = (E f)/f`.
    pub fn log(&self) -> Result<Self> {
        let c0 = self.coeff([0, 0, 0]);
        if !c0.is_one() {
            return Err(Error::LogConstantTerm {
                constant: format!("{c0}"),
            });
        }
        let euler = self.map_terms(|e, c| c.clone() * &R::from_int(total(e) as i64));
        let quotient = &euler * &self.inverse()?;
        let mut out = Self::zero_with_total(self.orders, self.max_total);
        for (e, c) in &quotient.terms {
            out.insert(*e, c.clone() * &reciprocal_of_int::<R>(total(e) as i64)?);
        }
        Ok(out)
    }

    /// All exponents of the truncation region, in lexicographic order.
    fn region(&self) -> impl Iterator<Item = Exponent> + '_ {
        let [n0, n1, n2] = self.orders;
        let cap = self.max_total;
        (0..=n0).flat_map(move |a| {
            (0..=n1.min(cap.saturating_sub(a))).flat_map(move |b| {
                (0..=n2.min(cap.saturating_sub(a + b))).map(move |c| [a, b, c])
            })
        })
    }
}

fn total(e: &Exponent) -> u32 {
    e.iter().sum()
}

fn sub_exponent(a: Exponent, b: Exponent) -> Option<Exponent> {
    Some([
        a[0].checked_sub(b[0])?,
        a[1].checked_sub(b[1])?,
        a[2].checked_sub(b[2])?,
    ])
}

impl<R: Coefficient> Add for &TrivariateSeries<R> {
    type Output = TrivariateSeries<R>;
    fn add(self, rhs: Self) -> TrivariateSeries<R> {
        let (orders, max_total) = self.common_region(rhs);
        let mut out = TrivariateSeries::zero_with_total(orders, max_total);
        for (e, c) in &self.terms {
            out.insert(*e, c.clone());
        }
        for (e, c) in &rhs.terms {
            let sum = out.coeff(*e) + c;
            out.insert(*e, sum);
        }
        out
    }
}

impl<R: Coefficient> Sub for &TrivariateSeries<R> {
    type Output = TrivariateSeries<R>;
    fn sub(self, rhs: Self) -> TrivariateSeries<R> {
        let negated = rhs.map_terms(|_, c| -c.clone());
        self + &negated
    }
}

impl<R: Coefficient> Mul for &TrivariateSeries<R> {
    type Output = TrivariateSeries<R>;
    fn mul(self, rhs: Self) -> TrivariateSeries<R> {
        let (orders, max_total) = self.common_region(rhs);
        let mut out = TrivariateSeries::zero_with_total(orders, max_total);
        let mut acc: BTreeMap<Exponent, R> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                if !out.contains(e) {
                    continue;
                }
                acc.entry(e).or_insert_with(R::zero).add_product(x, y);
            }
        }
        for (e, c) in acc {
            out.insert(e, c);
        }
        out
    }
}
