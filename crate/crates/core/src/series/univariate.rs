use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, Mul, Neg, Sub};



use crate::error::{Error, Result};
use crate::ring::{reciprocal_of_int, Coefficient};

/// A formal power series `Σ_{n ≤ order} c_n U^n`, known exactly up to and
/// including degree `order`.
///
/// Binary operations produce a result whose order is the smaller of the two
/// operand orders; nothing is ever extrapolated past what both inputs know.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<R> {
    // invariant: non-empty, len == order + 1
    coeffs: Vec<R>,
}

impl<R: Coefficient> TruncatedSeries<R> {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients beyond `order`.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Self { coeffs }
    }

    /// Series whose order is `coeffs.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs order >= 0");
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c · U^exponent`; zero when the exponent exceeds `order`.
    pub fn monomial(c: R, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// The series variable `U` itself.
    pub fn variable(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn constant_term(&self) -> &R {
        &self.coeffs[0]
    }

    /// Lowers the order to `min(order, self.order())`.
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    pub fn map<S: Coefficient>(&self, f: impl FnMut(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.clone() * c)
    }

    /// Substitutes `U → U^step`, keeping the order.
    pub fn dilate(&self, step: usize) -> Self {
        assert!(step > 0, "dilation step must be positive");
        let order = self.order();
        let mut out = Self::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            let Some(e) = n.checked_mul(step).filter(|&e| e <= order) else {
                break;
            };
            out.coeffs[e] = c.clone();
        }
        out
    }

    /// `θ f = U·df/dU`: coefficient `n` becomes `n·f_n`.
    pub fn theta_derivative(&self) -> Self {
        self.map_indexed(|n, c| c.clone() * &R::from_int(n as i64))
    }

    fn map_indexed(&self, mut f: impl FnMut(usize, &R) -> R) -> Self {
        Self {
            coeffs: self.coeffs.iter().enumerate().map(|(n, c)| f(n, c)).collect(),
        }
    }

    fn binary(&self, rhs: &Self, f: impl Fn(R, &R) -> R) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| f(a.clone(), b))
                .collect(),
        }
    }

    fn convolve(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j].add_product(a, b);
                }
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self
            .constant_term()
            .try_inverse()
            .ok_or_else(|| Error::NotInvertible {
                constant: format!("{}", self.constant_term()),
            })?;
        let order = self.order();
        let mut out: Vec<R> = Vec::with_capacity(order + 1);
        out.push(c0_inv.clone());
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc.add_product(&self.coeffs[k], &out[n - k]);
                }
            }
            out.push(-(acc * &c0_inv));
        }
        Ok(Self { coeffs: out })
    }

    /// `log f`, defined for constant term exactly 1.
    ///
    /// Needs `1/n` in the coefficient ring for `n ≤ order`.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::LogConstantTerm {
                constant: format!("{}", self.constant_term()),
            });
        }
        // θ log f = θf / f
        let quotient = &self.theta_derivative() * &self.inverse()?;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(R::zero());
        for n in 1..=self.order() {
            coeffs.push(quotient.coeffs[n].clone() * &reciprocal_of_int::<R>(n as i64)?);
        }
        Ok(Self { coeffs })
    }

    /// `exp f`, defined for constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::ExpConstantTerm {
                constant: format!("{}", self.constant_term()),
            });
        }
        // n e_n = Σ_{k=1}^{n} k f_k e_{n−k}
        let theta = self.theta_derivative();
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(R::one());
        for n in 1..=self.order() {
            let mut acc = R::zero();
            for k in 1..=n {
                if !theta.coeffs[k].is_zero() {
                    acc.add_product(&theta.coeffs[k], &out[n - k]);
                }
            }
            out.push(acc * &reciprocal_of_int::<R>(n as i64)?);
        }
        Ok(Self { coeffs: out })
    }

    /// `f^k` by repeated squaring; negative `k` inverts first.
    pub fn pow_int(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut exponent = k.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut square = base;
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = &acc * &square;
            }
            exponent >>= 1;
            if exponent > 0 {
                square = &square * &square;
            }
        }
        Ok(acc)
    }

    /// `f(g(U))` by Horner's rule; `g` must have no constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.constant_term().is_zero() {
            return Err(Error::ComposeConstantTerm {
                constant: format!("{}", inner.constant_term()),
            });
        }
        let order = self.order().min(inner.order());
        let inner = inner.clone().truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for c in self.coeffs[..order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = core::mem::replace(&mut acc.coeffs[0], R::zero()) + c;
        }
        Ok(acc)
    }
}

impl<R> Index<usize> for TruncatedSeries<R> {
    type Output = R;
    fn index(&self, n: usize) -> &R {
        &self.coeffs[n]
    }
}

impl<R: Coefficient> Add for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: Self) -> TruncatedSeries<R> {
        self.binary(rhs, |a, b| a + b)
    }
}

impl<R: Coefficient> Sub for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: Self) -> TruncatedSeries<R> {
        self.binary(rhs, |a, b| a - b)
    }
}

impl<R: Coefficient> Mul for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: Self) -> TruncatedSeries<R> {
        self.convolve(rhs)
    }
}

impl<R: Coefficient> Neg for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn neg(self) -> TruncatedSeries<R> {
        self.map(|c| -c.clone())
    }
}

impl<R: Coefficient> Add for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: Self) -> TruncatedSeries<R> {
        &self + &rhs
    }
}

impl<R: Coefficient> Sub for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: Self) -> TruncatedSeries<R> {
        &self - &rhs
    }
}

impl<R: Coefficient> Mul for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: Self) -> TruncatedSeries<R> {
        &self * &rhs
    }
}

impl<R: Coefficient> Neg for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn neg(self) -> TruncatedSeries<R> {
        -&self
    }
}

/// Inverts the mirror map `Ū = u·exp(S(u))`, returning `u(Ū)`.
///
/// Works order by order on `u ← Ū·exp(−S(u))`: coefficient `k` of the
/// right-hand side only sees coefficients of `u` below `k`, so
/// `u_{k+1} = [exp(−S(u))]_k` once `u_1, …, u_k` are fixed. The powers
/// `[u^i]_k` and the exponential are extended by one coefficient per step
/// rather than recomputed.
///
/// The result has order `min(order, S.order() + 1)`.
pub fn mirror_reversion<R: Coefficient>(
    shift: &TruncatedSeries<R>,
    order: usize,
) -> Result<TruncatedSeries<R>> {
    if !shift.constant_term().is_zero() {
        return Err(Error::ReversionConstantTerm {
            constant: format!("{}", shift.constant_term()),
        });
    }
    let order = order.min(shift.order() + 1);
    let mut u = vec![R::zero(); order + 1];
    if order == 0 {
        return Ok(TruncatedSeries { coeffs: u });
    }
    u[1] = R::one();
    // powers[i][k] = [Ū^k] u^i for 1 ≤ i ≤ k
    let mut powers = vec![vec![R::zero(); order]; order];
    // f = −S(u), e = exp(f)
    let mut f = vec![R::zero(); order];
    let mut e = vec![R::zero(); order];
    e[0] = R::one();
    for k in 1..order {
        powers[1][k] = u[k].clone();
        for i in 2..=k {
            let mut acc = R::zero();
            for j in 1..=k + 1 - i {
                acc.add_product(&u[j], &powers[i - 1][k - j]);
            }
            powers[i][k] = acc;
        }
        let mut s_k = R::zero();
        for i in 1..=k {
            s_k.add_product(&shift.coeffs[i], &powers[i][k]);
        }
        f[k] = -s_k;
        let mut acc = R::zero();
        for j in 1..=k {
            acc.add_product(&(f[j].clone() * &R::from_int(j as i64)), &e[k - j]);
        }
        e[k] = acc * &reciprocal_of_int::<R>(k as i64)?;
        u[k + 1] = e[k].clone();
    }
    Ok(TruncatedSeries { coeffs: u })
}
