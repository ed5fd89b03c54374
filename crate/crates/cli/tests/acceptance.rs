//! The ten acceptance criteria, run in sequence inside one test so that the
//! runtime limits are measured without competition from sibling tests.
//! Prints one PASS/FAIL line per criterion and fails if any criterion fails.

use std::time::{Duration, Instant};

use schoen_cli::golden;
use schoen_core::amodel::{a_series, c_series_with, hilb_euler_oracle, pseudo_section_count, Route};
use schoen_core::bmodel::{
    b_series, harmonic_numbers, n0_vanishing_check, p0_first_order, pf_check, phi0_dual, xi_dual,
};
use schoen_core::lattice::{
    e8_enumerate, e8_theta_series, partition_numbers, theta_e8_restricted_jacobi,
    theta_e8_restricted_lattice,
};
use schoen_core::{Integer, Rational, TableLabel};

const ORDER: usize = 50;
const JACOBI_LIMIT: Duration = Duration::from_secs(1);
const A_SERIES_LIMIT: Duration = Duration::from_secs(1);
const B_SERIES_LIMIT: Duration = Duration::from_secs(30);
const LATTICE_LIMIT: Duration = Duration::from_secs(60);
const PF_LIMIT: Duration = Duration::from_secs(10);
const PF_DEGREE: u32 = 6;
const PARTITION_ORACLE_MAX: usize = 30;
const COLENGTH_MAX: usize = 12;
const PSEUDO_SECTION_MAX: usize = 4;
const N0_ORDERS: (usize, usize) = (20, 20);
const N1_ORDERS: (usize, usize) = (15, 15);

struct Outcome {
    passed: bool,
    detail: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn compare(label: &str, got: &[Integer], expected: &[Integer]) -> Result<(), String> {
    if got.len() != expected.len() {
        return Err(format!("{label}: {} entries, expected {}", got.len(), expected.len()));
    }
    match got.iter().zip(expected).position(|(x, y)| x != y) {
        None => Ok(()),
        Some(n) => Err(format!("{label}_{n} = {}, expected {}", got[n], expected[n])),
    }
}

fn within(limit: Duration, took: Duration) -> Result<(), String> {
    if took < limit {
        Ok(())
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn outcome(result: Result<(), String>, took: Duration) -> Outcome {
    match result {
        Ok(()) => Outcome {
            passed: true,
            detail: format!("{took:.2?}"),
        },
        Err(e) => Outcome {
            passed: false,
            detail: format!("{e} ({took:.2?})"),
        },
    }
}

fn reference(label: TableLabel) -> Vec<Integer> {
    golden::load(label, None).expect("embedded golden table")
}

fn criterion_1_table_c() -> Outcome {
    let (c, took) = timed(|| c_series_with(ORDER, Route::Jacobi));
    let result = c
        .map_err(|e| e.to_string())
        .and_then(|c| compare("c", &c.values, &reference(TableLabel::C)))
        .and_then(|()| within(JACOBI_LIMIT, took));
    outcome(result, took)
}

fn criterion_2_table_a() -> Outcome {
    let (a, took) = timed(|| a_series(ORDER));
    let result = a
        .map_err(|e| e.to_string())
        .and_then(|a| compare("a", &a.values, &reference(TableLabel::A)))
        .and_then(|()| within(A_SERIES_LIMIT, took));
    outcome(result, took)
}

fn criterion_3_table_b() -> Outcome {
    let (b, took) = timed(|| b_series(ORDER));
    let result = b
        .map_err(|e| e.to_string())
        .and_then(|b| compare("b", &b.values, &reference(TableLabel::B)))
        .and_then(|()| within(B_SERIES_LIMIT, took));
    outcome(result, took)
}

fn criterion_4_mirror() -> Outcome {
    let (result, took) = timed(|| -> Result<(), String> {
        let a = a_series(ORDER).map_err(|e| e.to_string())?;
        let b = b_series(ORDER).map_err(|e| e.to_string())?;
        compare("b", &b.values, &a.values)
    });
    outcome(result, took)
}

fn criterion_5_two_routes() -> Outcome {
    let jacobi = theta_e8_restricted_jacobi(ORDER);
    let (lattice, took) = timed(|| theta_e8_restricted_lattice(ORDER));
    let result = jacobi
        .map_err(|e| e.to_string())
        .and_then(|j| compare("c(lattice)", &lattice, &j))
        .and_then(|()| within(LATTICE_LIMIT, took));
    outcome(result, took)
}

fn criterion_6_e8_sanity() -> Outcome {
    let (result, took) = timed(|| -> Result<(), String> {
        let roots = e8_enumerate(2).iter().filter(|v| v.norm() == 2).count();
        if roots != 240 {
            return Err(format!("{roots} vectors of norm 2"));
        }
        let theta = e8_theta_series(3);
        if theta != [1, 240, 2160, 6720] {
            return Err(format!("theta_E8 = {theta:?}"));
        }
        Ok(())
    });
    outcome(result, took)
}

fn criterion_7_harmonic() -> Outcome {
    let (result, took) = timed(|| -> Result<(), String> {
        let g = harmonic_numbers(3 * ORDER);
        let phi0 = phi0_dual(ORDER);
        let xi = xi_dual(ORDER);
        let mut central = Rational::from_integer(1.into());
        for n in 0..=ORDER {
            if n > 0 {
                // (3n)!/n!³ from its predecessor
                let k = n as i64;
                central = central * Rational::new(((3 * k) * (3 * k - 1) * (3 * k - 2)).into(), (k * k * k).into());
            }
            let phi_eps = &central * Rational::from_integer(3.into()) * (&g[3 * n] - &g[n]);
            let xi_eps = &central * &g[3 * n];
            if phi0[n].deriv != phi_eps || phi0[n].value != central {
                return Err(format!("phi0 at n = {n}"));
            }
            if xi[n].deriv != xi_eps || xi[n].value != central {
                return Err(format!("xi at n = {n}"));
            }
        }
        Ok(())
    });
    outcome(result, took)
}

fn criterion_8_picard_fuchs() -> Outcome {
    let (report, took) = timed(|| pf_check(PF_DEGREE));
    let result = match report.residuals.first() {
        None => within(PF_LIMIT, took),
        Some(r) => Err(format!("{} leaves {} at {:?}", r.operator, r.value, r.exponent)),
    };
    outcome(result, took)
}

fn partitions_by_enumeration(n: usize) -> usize {
    fn go(rest: usize, max_part: usize) -> usize {
        if rest == 0 {
            return 1;
        }
        (1..=rest.min(max_part)).map(|part| go(rest - part, part)).sum()
    }
    go(n, n)
}

/// `Σ_{k₁+⋯+k₁₂ = n} ∏ p(kᵢ)` over explicit 12-tuples.
fn twelve_tuples(n: usize, p: &[Integer]) -> Integer {
    fn go(slot: usize, rest: usize, p: &[Integer], acc: Integer) -> Integer {
        if slot == 11 {
            return acc * &p[rest];
        }
        (0..=rest)
            .map(|k| go(slot + 1, rest - k, p, acc.clone() * &p[k]))
            .sum()
    }
    go(0, n, p, Integer::from(1))
}

fn criterion_9_combinatorics() -> Outcome {
    let (result, took) = timed(|| -> Result<(), String> {
        let p = partition_numbers(PARTITION_ORACLE_MAX);
        for (k, value) in p.iter().enumerate() {
            if *value != Integer::from(partitions_by_enumeration(k)) {
                return Err(format!("p({k})"));
            }
        }
        for k in 0..=COLENGTH_MAX {
            if hilb_euler_oracle(k).map_err(|e| e.to_string())? != p[k] {
                return Err(format!("monomial ideals of colength {k}"));
            }
        }
        let sums: Vec<Integer> = (0..=PSEUDO_SECTION_MAX).map(|n| twelve_tuples(n, &p)).collect();
        for n in 0..=PSEUDO_SECTION_MAX {
            for m in 0..=PSEUDO_SECTION_MAX {
                if pseudo_section_count(n, m) != &sums[n] * &sums[m] {
                    return Err(format!("pseudo_section_count({n}, {m})"));
                }
            }
        }
        Ok(())
    });
    outcome(result, took)
}

fn criterion_10_structure() -> Outcome {
    let (result, took) = timed(|| -> Result<(), String> {
        if !n0_vanishing_check(N0_ORDERS.0, N0_ORDERS.1).map_err(|e| e.to_string())? {
            return Err("log(phi0 phi0) has a J1J2 term".into());
        }
        let n1 = p0_first_order(N1_ORDERS.0, N1_ORDERS.1).map_err(|e| e.to_string())?;
        for i in 0..=N1_ORDERS.0 {
            for j in 0..=N1_ORDERS.1 {
                if n1[i][j] != n1[j][i] {
                    return Err(format!("N_1 not symmetric at ({i}, {j})"));
                }
            }
        }
        Ok(())
    });
    outcome(result, took)
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("c_n, n <= 50, equals the published table (Jacobi route < 1 s)", criterion_1_table_c),
        ("a_n, n <= 50, equals the published table (< 1 s)", criterion_2_table_a),
        ("b_n, n <= 50, equals the published expansion (< 30 s)", criterion_3_table_b),
        ("mirror check a_n = b_n for n <= 50", criterion_4_mirror),
        ("Jacobi and lattice routes agree for n <= 50 (lattice < 60 s)", criterion_5_two_routes),
        ("E8: 240 roots, theta 1, 240, 2160, 6720", criterion_6_e8_sanity),
        ("dual-number epsilon parts match harmonic closed forms, n <= 50", criterion_7_harmonic),
        ("D1, D2, D3 annihilate Omega0 through degree 6 (< 10 s)", criterion_8_picard_fuchs),
        ("partition, monomial-ideal and 12-tuple oracles", criterion_9_combinatorics),
        ("N_0 = 0 to (20, 20); N_1 routes agree to (15, 15)", criterion_10_structure),
    ];
    let mut failures = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let mark = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {mark}  {name}  [{}]", i + 1, o.detail);
        if !o.passed {
            failures.push(i + 1);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
