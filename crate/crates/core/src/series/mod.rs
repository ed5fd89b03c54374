//! Truncated formal power series over a pluggable [`Coefficient`] ring.
//!
//! [`Coefficient`]: crate::Coefficient

mod trivariate;
mod univariate;

pub use trivariate::{Exponent, TrivariateSeries};
pub use univariate::{mirror_reversion, TruncatedSeries};
