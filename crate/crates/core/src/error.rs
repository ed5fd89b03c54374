use alloc::string::String;

use crate::ring::{Integer, Rational};
use crate::table::TableLabel;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the exact pipelines can report.
///
/// Most variants signal a violated precondition (a series with the wrong
/// constant term, say). The route and integrality variants are different:
/// they mean two computations that must agree did not, and carry enough
/// data to locate the first disagreement.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("logarithm requires constant term 1, found {constant}")]
    LogConstantTerm { constant: String },

    #[error("exponential requires constant term 0, found {constant}")]
    ExpConstantTerm { constant: String },

    #[error("constant term {constant} is not a unit of the coefficient ring")]
    NotInvertible { constant: String },

    #[error("composition requires an inner series without constant term, found {constant}")]
    ComposeConstantTerm { constant: String },

    #[error("mirror-map reversion requires S(0) = 0, found {constant}")]
    ReversionConstantTerm { constant: String },

    #[error("the integer {0} is not invertible in the coefficient ring")]
    IntegerNotInvertible(i64),

    #[error("zeta exponent {exponent} survives in a U-level series but is not a non-negative multiple of 24")]
    FractionalExponent { exponent: i64 },

    #[error("theta combination is odd at U^{index}: {value}")]
    OddThetaSum { index: usize, value: Integer },

    #[error("theta routes disagree at c_{index}: jacobi {jacobi}, lattice {lattice}")]
    RouteMismatch {
        index: usize,
        jacobi: Integer,
        lattice: Integer,
    },

    #[error("{label}_{index} = {value} is not an integer")]
    NonInteger {
        label: TableLabel,
        index: usize,
        value: Rational,
    },

    #[error("monomial-ideal enumeration is limited to colength {limit}, got {requested}")]
    ColengthTooLarge { requested: usize, limit: usize },

    #[error(
        "first-order prepotential routes disagree at ({n1}, {n2}): factorized {factorized}, nilpotent {nilpotent}"
    )]
    PrepotentialRouteMismatch {
        n1: usize,
        n2: usize,
        factorized: Rational,
        nilpotent: Rational,
    },
}
