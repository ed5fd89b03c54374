//! Integer coefficient tables, the unit of comparison between pipelines.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::ring::Integer;

/// Which sequence a table holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableLabel {
    /// `Θ_E8(3t, tγ) = Σ c_m U^m`
    C,
    /// `A^res(t) = Σ a_m U^m`
    A,
    /// `B(t) = Σ b_n Ū^n`
    B,
}

impl TableLabel {
    pub fn as_char(self) -> char {
        match self {
            TableLabel::C => 'c',
            TableLabel::A => 'a',
            TableLabel::B => 'b',
        }
    }
}

impl fmt::Display for TableLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// `values[n]` for `0 ≤ n ≤ order`, tagged with how it was computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub label: TableLabel,
    pub values: Vec<Integer>,
    pub provenance: String,
}

impl CoefficientTable {
    pub fn new(label: TableLabel, values: Vec<Integer>, provenance: impl Into<String>) -> Self {
        assert!(!values.is_empty(), "a coefficient table holds at least entry 0");
        Self {
            label,
            values,
            provenance: provenance.into(),
        }
    }

    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&Integer> {
        self.values.get(n)
    }

    /// First index where the two tables differ, comparing their common
    /// prefix.
    pub fn first_mismatch(&self, other: &CoefficientTable) -> Option<usize> {
        self.values
            .iter()
            .zip(&other.values)
            .position(|(x, y)| x != y)
    }
}

/// Dense matrix of exact integers, indexed `[n₁][n₂]`.
pub type IntMatrix = Vec<Vec<Integer>>;
