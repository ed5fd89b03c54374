//! Exact-arithmetic machinery for the restricted mirror check on Schoen's
//! Calabi–Yau 3-fold.
//!
//! Two independent pipelines produce the same integer sequence:
//!
//! - the A-model side, [`amodel::a_series`], multiplies the restricted E8
//!   theta function `Θ_E8(3t, tγ) = Σ c_m U^m` by `∏(1 − U^{3m})^{-12}`;
//! - the B-model side, [`bmodel::b_series`], builds the hypergeometric
//!   periods over dual numbers, inverts the mirror map and re-expands
//!   `9·ψ(u)^{-1}·u ∂_u log Ū` in the flat coordinate `Ū`.
//!
//! Everything is computed over big integers and big rationals. The crate is
//! `no_std` and only needs `alloc`; IO, reports and the command line live in
//! the companion `schoen-cli` crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod amodel;
pub mod bmodel;
pub mod error;
pub mod lattice;
pub mod ring;
pub mod series;
pub mod table;

pub use error::{Error, Result};
pub use ring::{BiNilpotent, Coefficient, DualScalar, Integer, Rational};
pub use series::{mirror_reversion, TrivariateSeries, TruncatedSeries};
pub use table::{CoefficientTable, IntMatrix, TableLabel};
