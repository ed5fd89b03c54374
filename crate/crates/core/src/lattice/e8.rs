//! The E8 lattice as `D8 ∪ (D8 + s₀)`, `s₀ = ½ Σ eᵢ`, in doubled coordinates.
//!
//! A vector `σ = Σ xᵢ eᵢ` is stored as `yᵢ = 2xᵢ`, so both cosets are
//! integral: `D8` has all `yᵢ` even, the spinor coset all `yᵢ` odd, and in
//! both cases `Σ yᵢ ≡ 0 (mod 4)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Roots;

use crate::ring::Integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct E8Vector {
    doubled: [i32; 8],
}

impl E8Vector {
    pub const ZERO: E8Vector = E8Vector { doubled: [0; 8] };

    /// Checks lattice membership of the doubled coordinates.
    pub fn from_doubled(doubled: [i32; 8]) -> Option<Self> {
        let parity = doubled[0].rem_euclid(2);
        let same_parity = doubled.iter().all(|y| y.rem_euclid(2) == parity);
        let sum: i32 = doubled.iter().sum();
        (same_parity && sum.rem_euclid(4) == 0).then_some(Self { doubled })
    }

    pub fn doubled(&self) -> [i32; 8] {
        self.doubled
    }

    /// Whether the vector lies in the spinor coset `D8 + s₀`.
    pub fn is_spinor(&self) -> bool {
        self.doubled[0] % 2 != 0
    }

    /// `(σ, σ)`, always a non-negative even integer.
    pub fn norm(&self) -> i64 {
        self.pairing(self)
    }

    /// Euclidean inner product `(σ, τ)`, integral on E8.
    pub fn pairing(&self, other: &E8Vector) -> i64 {
        let dot: i64 = self
            .doubled
            .iter()
            .zip(&other.doubled)
            .map(|(a, b)| i64::from(*a) * i64::from(*b))
            .sum();
        debug_assert_eq!(dot % 4, 0);
        dot / 4
    }
}

/// `γ = (1, 1, 1, 1, 1, 1, 1, −1)`, the direction of the restricted theta.
pub const GAMMA: E8Vector = E8Vector {
    doubled: [2, 2, 2, 2, 2, 2, 2, -2],
};

/// Simple roots `α₁ … α₈`, numbered as in the Dynkin diagram
/// `α₁ − α₂ − α₃ − α₄ − α₅ − α₆ − α₇` with `α₈` attached to `α₃`.
pub const SIMPLE_ROOTS: [E8Vector; 8] = [
    // ½(e₁ + e₈) − ½(e₂ + … + e₇)
    E8Vector { doubled: [1, -1, -1, -1, -1, -1, -1, 1] },
    E8Vector { doubled: [-2, 2, 0, 0, 0, 0, 0, 0] },
    E8Vector { doubled: [0, -2, 2, 0, 0, 0, 0, 0] },
    E8Vector { doubled: [0, 0, -2, 2, 0, 0, 0, 0] },
    E8Vector { doubled: [0, 0, 0, -2, 2, 0, 0, 0] },
    E8Vector { doubled: [0, 0, 0, 0, -2, 2, 0, 0] },
    E8Vector { doubled: [0, 0, 0, 0, 0, -2, 2, 0] },
    E8Vector { doubled: [2, 2, 0, 0, 0, 0, 0, 0] },
];

/// `γ = −2α₁ − α₂ + α₈` in the simple-root basis.
pub const GAMMA_IN_SIMPLE_ROOTS: [i64; 8] = [-2, -1, 0, 0, 0, 0, 0, 1];

/// Region `Σᵢ (scale·yᵢ + offsetᵢ)² ≤ budget` in doubled coordinates.
struct Ellipsoid {
    scale: i64,
    offset: [i64; 8],
    budget: i64,
}

impl Ellipsoid {
    fn cost(&self, i: usize, y: i64) -> i64 {
        let v = self.scale * y + self.offset[i];
        v * v
    }

    /// Smallest cost coordinate `i` can have with the given parity.
    fn min_cost(&self, i: usize, parity: i64) -> i64 {
        let center = -self.offset[i] / self.scale;
        (center - 3..=center + 3)
            .filter(|y| y.rem_euclid(2) == parity)
            .map(|y| self.cost(i, y))
            .min()
            .unwrap_or(0)
    }

    /// Visits every lattice vector inside the region, by coordinate descent
    /// with the remaining budget pruned against the cheapest completion.
    fn for_each(&self, mut visit: impl FnMut(&[i32; 8], i64)) {
        for parity in 0..2 {
            let mut floor = [0i64; 9];
            for i in (0..8).rev() {
                floor[i] = floor[i + 1] + self.min_cost(i, parity);
            }
            if floor[0] > self.budget {
                continue;
            }
            let mut coords = [0i32; 8];
            self.descend(0, parity, 0, 0, &floor, &mut coords, &mut visit);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        i: usize,
        parity: i64,
        spent: i64,
        sum: i64,
        floor: &[i64; 9],
        coords: &mut [i32; 8],
        visit: &mut impl FnMut(&[i32; 8], i64),
    ) {
        let room = self.budget - spent - floor[i + 1];
        if room < 0 {
            return;
        }
        // |scale·y + offset| ≤ √room
        let radius = room.sqrt();
        let lo = div_ceil(-radius - self.offset[i], self.scale);
        let hi = div_floor(radius - self.offset[i], self.scale);
        let mut y = lo + (lo - parity).rem_euclid(2);
        while y <= hi {
            let cost = self.cost(i, y);
            if spent + cost + floor[i + 1] <= self.budget {
                coords[i] = y as i32;
                if i == 7 {
                    if (sum + y).rem_euclid(4) == 0 {
                        visit(coords, spent + cost);
                    }
                } else {
                    self.descend(i + 1, parity, spent + cost, sum + y, floor, coords, visit);
                }
            }
            y += 2;
        }
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

/// All E8 vectors with `(σ, σ) ≤ max_norm`, sorted.
pub fn e8_enumerate(max_norm: u32) -> Vec<E8Vector> {
    let ball = Ellipsoid {
        scale: 1,
        offset: [0; 8],
        budget: 4 * i64::from(max_norm),
    };
    let mut out = Vec::new();
    ball.for_each(|coords, _| out.push(E8Vector { doubled: *coords }));
    out.sort_unstable();
    out
}

/// Coefficients of `θ_E8(τ, 0) = Σ_σ q^{(σ,σ)/2}` through `q^order`.
pub fn e8_theta_series(order: usize) -> Vec<u64> {
    let mut counts = vec![0u64; order + 1];
    for v in e8_enumerate(2 * order as u32) {
        counts[(v.norm() / 2) as usize] += 1;
    }
    counts
}

/// `c_m = #{σ ∈ E8 : (3/2)(σ, σ) + (σ, γ) = m}` for `m ≤ order`, by direct
/// enumeration.
///
/// Completing the square, `24·((3/2)(σ,σ) + (σ,γ)) + 32 = Σ (3yᵢ + 2γᵢ)²`
/// with `y = 2σ` the doubled coordinates, so the vectors contributing to
/// degrees `≤ order` are exactly the lattice points of the ball
/// `Σ (3yᵢ + 2γᵢ)² ≤ 24·order + 32` around `−γ/3`.
pub fn theta_e8_restricted_lattice(order: usize) -> Vec<Integer> {
    let gamma = GAMMA.doubled();
    let shifted = Ellipsoid {
        scale: 3,
        offset: core::array::from_fn(|i| i64::from(gamma[i])),
        budget: 24 * order as i64 + 32,
    };
    let mut counts = vec![0u64; order + 1];
    shifted.for_each(|coords, value| {
        let v = E8Vector { doubled: *coords };
        let degree = (3 * v.norm()) / 2 + v.pairing(&GAMMA);
        debug_assert_eq!(24 * degree + 32, value);
        counts[degree as usize] += 1;
    });
    counts.into_iter().map(Integer::from).collect()
}

/// Lattice vectors grouped by `q`-level `(σ,σ)/2` and by their pairings
/// `((σ, α₁), …, (σ, α₈))` with the simple roots.
pub type RootTheta = BTreeMap<(u32, [i64; 8]), u64>;

/// Low-truncation data of the multivariable theta function
/// `Σ_σ q^{(σ,σ)/2} ∏ⱼ xⱼ^{(σ, αⱼ)}`, for `(σ,σ)/2 ≤ q_order`.
pub fn theta_e8_root_multideg(q_order: u32) -> RootTheta {
    let mut out = RootTheta::new();
    for v in e8_enumerate(2 * q_order) {
        let pairing = core::array::from_fn(|j| v.pairing(&SIMPLE_ROOTS[j]));
        *out.entry(((v.norm() / 2) as u32, pairing)).or_insert(0) += 1;
    }
    out
}

/// Largest degree `d` such that every vector with
/// `(3/2)(σ,σ) + (σ,γ) ≤ d` has `(σ,σ)/2 ≤ q_order`.
///
/// For `(σ,σ) = 2m`, Cauchy–Schwarz gives `(σ,γ) ≥ −4√m`, and `3m − 4√m`
/// increases for `m ≥ 1`, so the first excluded level `m = q_order + 1`
/// decides. Returns `None` when not even degree 0 is complete.
pub fn complete_restricted_degree(q_order: u32) -> Option<usize> {
    let m = i64::from(q_order) + 1;
    // largest d with (3m − d)² > 16m and d < 3m
    (0..3 * m)
        .rev()
        .find(|&d| (3 * m - d) * (3 * m - d) > 16 * m)
        .map(|d| d as usize)
}

/// Specializes `τ → 3t`, `z → t·γ` in the root data: each class contributes
/// to `U^{3m + (σ,γ)}`, with `(σ,γ) = Σⱼ gⱼ (σ, αⱼ)` for `γ = Σ gⱼ αⱼ`.
pub fn restrict_root_theta(data: &RootTheta, max_degree: usize) -> Vec<Integer> {
    let mut out = vec![0u64; max_degree + 1];
    for (&(m, pairing), &count) in data {
        let gamma_pairing: i64 = pairing
            .iter()
            .zip(&GAMMA_IN_SIMPLE_ROOTS)
            .map(|(k, g)| k * g)
            .sum();
        let degree = 3 * i64::from(m) + gamma_pairing;
        if (0..=max_degree as i64).contains(&degree) {
            out[degree as usize] += count;
        }
    }
    out.into_iter().map(Integer::from).collect()
}
