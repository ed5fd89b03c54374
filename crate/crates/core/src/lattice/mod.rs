//! E8 theta data and the partition series that multiply it.
//!
//! The restricted theta function `Σ_{σ ∈ E8} U^{3(σ,σ)/2 + (σ,γ)}` is
//! produced two independent ways: by summing over lattice points and by
//! Jacobi theta constants. The two are compared in [`crate::amodel`].

mod e8;
mod jacobi;
mod partitions;

pub use e8::{
    complete_restricted_degree, e8_enumerate, e8_theta_series, restrict_root_theta,
    theta_e8_restricted_lattice, theta_e8_root_multideg, E8Vector, RootTheta, GAMMA,
    GAMMA_IN_SIMPLE_ROOTS, SIMPLE_ROOTS,
};
pub use jacobi::{jacobi_theta_spec, theta_e8_restricted_jacobi, FractionalSeries, ThetaKind, ZETA_PER_U};
pub use partitions::{eta_factor_power12, partition_numbers, partition_series};
