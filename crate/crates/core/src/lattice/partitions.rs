use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::ring::Integer;
use crate::series::TruncatedSeries;

/// `p(0), …, p(order)` by Euler's pentagonal-number recurrence
/// `p(n) = Σ_{k≥1} (−1)^{k+1} [p(n − k(3k−1)/2) + p(n − k(3k+1)/2)]`.
pub fn partition_numbers(order: usize) -> Vec<Integer> {
    let mut p: Vec<Integer> = vec![Integer::zero(); order + 1];
    p[0] = Integer::one();
    for n in 1..=order {
        let mut acc = Integer::zero();
        for k in 1.. {
            let first = k * (3 * k - 1) / 2;
            if first > n {
                break;
            }
            let second = k * (3 * k + 1) / 2;
            let mut term = p[n - first].clone();
            if second <= n {
                term += &p[n - second];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    p
}

/// `Σ_k p(k) U^{step·k}`, truncated at `order`.
pub fn partition_series(order: usize, step: usize) -> TruncatedSeries<Integer> {
    assert!(step > 0, "step must be positive");
    TruncatedSeries::new(partition_numbers(order / step), order).dilate(step)
}

/// `∏_{m≥1} (1 − U^{step·m})^{−12} = (Σ_k p(k) U^{step·k})^{12}`.
pub fn eta_factor_power12(order: usize, step: usize) -> TruncatedSeries<Integer> {
    partition_series(order, step)
        .pow_int(12)
        .expect("non-negative powers never fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Lists every partition of `n` (non-increasing parts) explicitly.
    fn enumerate_partitions(n: usize) -> Vec<Vec<usize>> {
        fn go(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                out.push(prefix.clone());
                return;
            }
            for part in (1..=rest.min(max_part)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn small_values() {
        assert_eq!(partition_numbers(0), vec![Integer::from(1)]);
        let p = partition_numbers(10);
        assert_eq!(p[4], Integer::from(5));
        assert_eq!(p[10], Integer::from(42));
    }

    #[test]
    fn recurrence_matches_enumeration() {
        let p = partition_numbers(30);
        for (n, value) in p.iter().enumerate() {
            assert_eq!(*value, Integer::from(enumerate_partitions(n).len()), "p({n})");
        }
    }

    #[test]
    fn eta_factor_examples() {
        let step3 = eta_factor_power12(9, 3);
        assert_eq!(step3[0], Integer::from(1));
        assert_eq!(step3[3], Integer::from(12));
        assert!(step3[1].is_zero() && step3[2].is_zero());
        assert_eq!(eta_factor_power12(4, 1)[2], Integer::from(90));
    }

    #[test]
    fn eta_factor_matches_product_form() {
        // ∏(1 − U^{3m}) inverted, then multiplied out twelve times
        let order = 40;
        let mut euler = TruncatedSeries::<Integer>::one(order);
        for m in 1..=order / 3 {
            let mut factor = TruncatedSeries::one(order);
            factor = &factor - &TruncatedSeries::monomial(Integer::from(1), 3 * m, order);
            euler = &euler * &factor;
        }
        let inverse = euler.inverse().unwrap();
        let mut expected = TruncatedSeries::one(order);
        for _ in 0..12 {
            expected = &expected * &inverse;
        }
        assert_eq!(eta_factor_power12(order, 3), expected);
    }
}
