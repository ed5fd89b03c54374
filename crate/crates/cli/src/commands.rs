//! One function per subcommand. Each returns a finished [`RunReport`];
//! failures of the mathematics become failed checks, not errors.

use std::path::Path;

use schoen_core::amodel::{a_from_c, c_series_with, Route};
use schoen_core::bmodel::{b_series, pf_check_with, pf_operators};
use schoen_core::lattice::{
    complete_restricted_degree, e8_theta_series, restrict_root_theta, theta_e8_restricted_jacobi,
    theta_e8_root_multideg,
};
use schoen_core::{CoefficientTable, Error, Integer, TableLabel};

use crate::golden::{self, GoldenError};
use crate::report::{Check, DataRow, Mismatch, RunReport, Status};

/// Problems that prevent a report from being produced at all.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Golden(#[from] GoldenError),
    #[error("internal error: {0}")]
    Core(Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Golden(_) | CliError::Usage(_) => Status::Usage,
            CliError::Core(_) => Status::Internal,
        }
    }
}

/// Compares `table` against its golden file over the common range.
fn golden_check(table: &CoefficientTable, dir: Option<&Path>) -> Result<Check, GoldenError> {
    let reference = golden::load(table.label, dir)?;
    let name = format!("golden-{}", table.label);
    let found = table
        .values
        .iter()
        .zip(&reference)
        .position(|(x, y)| x != y);
    Ok(match found {
        None => Check::pass(name),
        Some(index) => Check::fail(
            name,
            Status::Mismatch,
            Mismatch {
                index,
                expected: reference[index].to_string(),
                actual: table.values[index].to_string(),
                location: Some(golden::file_name(table.label)),
            },
        ),
    })
}

fn route_failure(index: usize, jacobi: &Integer, lattice: &Integer) -> Check {
    Check::fail(
        "route-agreement",
        Status::RouteMismatch,
        Mismatch {
            index,
            expected: jacobi.to_string(),
            actual: lattice.to_string(),
            location: Some("jacobi vs lattice".into()),
        },
    )
}

fn integrality_failure(label: TableLabel, index: usize, value: String) -> Check {
    Check::fail(
        format!("integrality-{label}"),
        Status::Integrality,
        Mismatch {
            index,
            expected: "an integer".into(),
            actual: value,
            location: None,
        },
    )
}

/// `c` by the given route, recording a route check when both run.
fn c_table(order: usize, route: Route, report: &mut RunReport) -> Result<Option<CoefficientTable>, CliError> {
    match c_series_with(order, route) {
        Ok(c) => {
            if route == Route::Both {
                report.push_check(Check::pass("route-agreement"));
            }
            Ok(Some(c))
        }
        Err(Error::RouteMismatch {
            index,
            jacobi,
            lattice,
        }) => {
            report.push_check(route_failure(index, &jacobi, &lattice));
            Ok(None)
        }
        Err(e) => Err(CliError::Core(e)),
    }
}

fn b_table(order: usize, report: &mut RunReport) -> Result<Option<CoefficientTable>, CliError> {
    match b_series(order) {
        Ok(b) => {
            report.push_check(Check::pass("integrality-b"));
            Ok(Some(b))
        }
        Err(Error::NonInteger { label, index, value }) => {
            report.push_check(integrality_failure(label, index, value.to_string()));
            Ok(None)
        }
        Err(e) => Err(CliError::Core(e)),
    }
}

pub fn cmd_amodel(order: usize, route: Route, golden_dir: Option<&Path>) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("amodel", order);
    let Some(c) = c_table(order, route, &mut report)? else {
        return Ok(report);
    };
    let a = a_from_c(&c);
    report.push_table(&c);
    report.push_table(&a);
    report.push_check(golden_check(&c, golden_dir)?);
    report.push_check(golden_check(&a, golden_dir)?);
    Ok(report)
}

pub fn cmd_bmodel(order: usize, golden_dir: Option<&Path>) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("bmodel", order);
    if let Some(b) = b_table(order, &mut report)? {
        report.push_table(&b);
        report.push_check(golden_check(&b, golden_dir)?);
    }
    Ok(report)
}

/// Computes `a` (Jacobi route) and `b` independently and compares them
/// entry by entry, then checks all three tables against the golden files.
pub fn cmd_verify(order: usize, golden_dir: Option<&Path>) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("verify", order);
    let c = c_table(order, Route::Jacobi, &mut report)?.expect("the jacobi route has no route check");
    let a = a_from_c(&c);
    let b = b_table(order, &mut report)?;
    report.push_table(&c);
    report.push_table(&a);
    if let Some(b) = &b {
        report.push_table(b);
        let check = match a.first_mismatch(b) {
            None => Check::pass("mirror a = b"),
            Some(index) => Check::fail(
                "mirror a = b",
                Status::Mismatch,
                Mismatch {
                    index,
                    expected: a.values[index].to_string(),
                    actual: b.values[index].to_string(),
                    location: None,
                },
            ),
        };
        report.push_check(check);
    }
    report.push_check(golden_check(&c, golden_dir)?);
    report.push_check(golden_check(&a, golden_dir)?);
    if let Some(b) = &b {
        report.push_check(golden_check(b, golden_dir)?);
    }
    Ok(report)
}

/// Recomputes `c`, `a` and `b` and overwrites the golden files in `dir`,
/// listing every changed line.
pub fn cmd_regenerate_golden(order: usize, dir: &Path) -> Result<RunReport, CliError> {
    let mut report = RunReport::new("regenerate-golden", order);
    let c = c_table(order, Route::Both, &mut report)?;
    let b = b_table(order, &mut report)?;
    let (Some(c), Some(b)) = (c, b) else {
        return Ok(report);
    };
    let a = a_from_c(&c);
    if let Some(index) = a.first_mismatch(&b) {
        report.push_check(Check::fail(
            "mirror a = b",
            Status::Mismatch,
            Mismatch {
                index,
                expected: a.values[index].to_string(),
                actual: b.values[index].to_string(),
                location: Some("refusing to write golden files".into()),
            },
        ));
        return Ok(report);
    }
    report.push_check(Check::pass("mirror a = b"));
    for table in [&c, &a, &b] {
        let diff = golden::regenerate(table.label, dir, &table.values)?;
        let key = golden::file_name(table.label);
        if diff.is_empty() {
            report.data.push(DataRow {
                key,
                value: "unchanged".into(),
            });
        } else {
            for line in diff.lines() {
                report.data.push(DataRow {
                    key: key.clone(),
                    value: line.to_string(),
                });
            }
        }
    }
    Ok(report)
}

pub fn cmd_pf_check(degree: u32, flip_d3_sign: bool) -> Result<RunReport, CliError> {
    if degree < 2 {
        return Err(CliError::Usage(format!("pf-check needs --degree >= 2, got {degree}")));
    }
    let mut report = RunReport::new("pf-check", degree as usize);
    let mut operators = pf_operators().to_vec();
    if flip_d3_sign {
        operators[2] = operators[2].with_flipped_term(1);
    }
    let result = pf_check_with(&operators, degree);
    for op in &result.operators {
        let name = format!("{op} annihilates Omega0");
        let first = result.residuals.iter().find(|r| r.operator == *op);
        report.push_check(match first {
            None => Check::pass(name),
            Some(r) => Check::fail(
                name,
                Status::PfResidual,
                Mismatch {
                    index: r.exponent.iter().sum::<u32>() as usize,
                    expected: "0".into(),
                    actual: r.value.to_string(),
                    location: Some(format!(
                        "u0^{} u1^{} u2^{}",
                        r.exponent[0], r.exponent[1], r.exponent[2]
                    )),
                },
            ),
        });
    }
    Ok(report)
}

/// Largest `--qorder` accepted by `theta-root`.
pub const THETA_ROOT_QORDER_LIMIT: u32 = 6;

pub fn cmd_theta_root(q_order: u32) -> Result<RunReport, CliError> {
    if q_order > THETA_ROOT_QORDER_LIMIT {
        return Err(CliError::Usage(format!(
            "theta-root supports --qorder <= {THETA_ROOT_QORDER_LIMIT}, got {q_order}"
        )));
    }
    let mut report = RunReport::new("theta-root", q_order as usize);
    let data = theta_e8_root_multideg(q_order);
    let mut totals = vec![0u64; q_order as usize + 1];
    for ((level, pairing), count) in &data {
        totals[*level as usize] += count;
        let vector: Vec<String> = pairing.iter().map(i64::to_string).collect();
        report.data.push(DataRow {
            key: format!("m={level} ({})", vector.join(",")),
            value: count.to_string(),
        });
    }

    let expected = e8_theta_series(q_order as usize);
    let level_check = match totals.iter().zip(&expected).position(|(x, y)| x != y) {
        None => Check::pass("level totals = theta_E8(q, 0)"),
        Some(index) => Check::fail(
            "level totals = theta_E8(q, 0)",
            Status::Mismatch,
            Mismatch {
                index,
                expected: expected[index].to_string(),
                actual: totals[index].to_string(),
                location: None,
            },
        ),
    };
    report.push_check(level_check);

    if let Some(degree) = complete_restricted_degree(q_order) {
        let restricted = restrict_root_theta(&data, degree);
        let c = theta_e8_restricted_jacobi(degree).map_err(CliError::Core)?;
        let name = format!("specialization = c_m for m <= {degree}");
        report.push_check(match restricted.iter().zip(&c).position(|(x, y)| x != y) {
            None => Check::pass(name),
            Some(index) => Check::fail(
                name,
                Status::Mismatch,
                Mismatch {
                    index,
                    expected: c[index].to_string(),
                    actual: restricted[index].to_string(),
                    location: None,
                },
            ),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_checks_carry_their_exit_codes() {
        let route = route_failure(7, &Integer::from(1), &Integer::from(2));
        assert_eq!(route.failure_status.code(), 2);
        assert_eq!(route.mismatch.as_ref().unwrap().index, 7);
        let integrality = integrality_failure(TableLabel::B, 3, "1/2".into());
        assert_eq!(integrality.failure_status.code(), 3);
        assert_eq!(integrality.name, "integrality-b");
    }

    #[test]
    fn golden_check_reports_first_difference() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("c.txt"), "9\n36\n127\n252\n").unwrap();
        let c = schoen_core::amodel::c_series_with(4, Route::Jacobi).unwrap();
        let check = golden_check(&c, Some(dir.path())).unwrap();
        assert!(!check.passed);
        let m = check.mismatch.unwrap();
        assert_eq!((m.index, m.expected.as_str(), m.actual.as_str()), (2, "127", "126"));
    }

    #[test]
    fn argument_guards() {
        assert_eq!(cmd_pf_check(1, false).unwrap_err().status(), Status::Usage);
        assert_eq!(cmd_theta_root(7).unwrap_err().status(), Status::Usage);
    }
}
