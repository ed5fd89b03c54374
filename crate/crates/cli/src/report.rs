//! Run reports and their three renderings.
//!
//! The serialized report is the canonical section: it never contains wall
//! time, so two runs of the same command produce identical bytes.

use std::fmt::Write as _;
use std::io;

use schoen_core::CoefficientTable;
use serde::Serialize;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Mismatch,
    RouteMismatch,
    Integrality,
    PfResidual,
    Usage,
    Internal,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::RouteMismatch => 2,
            Status::Integrality => 3,
            Status::PfResidual => 4,
            Status::Usage => 64,
            Status::Internal => 70,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// Where a failed check first went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: usize,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub location: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip)]
    pub failure_status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            failure_status: Status::Ok,
            mismatch: None,
        }
    }

    pub fn fail(name: impl Into<String>, status: Status, mismatch: Mismatch) -> Self {
        Self {
            name: name.into(),
            passed: false,
            failure_status: status,
            mismatch: Some(mismatch),
        }
    }
}

/// A coefficient table with integers written as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRecord {
    pub label: String,
    pub order: usize,
    pub provenance: String,
    pub values: Vec<String>,
}

impl From<&CoefficientTable> for TableRecord {
    fn from(t: &CoefficientTable) -> Self {
        Self {
            label: t.label.to_string(),
            order: t.order(),
            provenance: t.provenance.clone(),
            values: t.values.iter().map(|v| v.to_string()).collect(),
        }
    }
}

/// Free-form rows for commands whose output is not a coefficient table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DataRow {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub tables: Vec<TableRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub data: Vec<DataRow>,
    pub checks: Vec<Check>,
    pub status: Status,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

/// Orders beyond this extend the published tables.
pub const PUBLISHED_ORDER: usize = 50;

impl RunReport {
    pub fn new(command: &str, order: usize) -> Self {
        let note = (order > PUBLISHED_ORDER).then(|| {
            format!("order {order} extends the published tables (n <= {PUBLISHED_ORDER})")
        });
        Self {
            command: command.to_string(),
            order,
            note,
            tables: Vec::new(),
            data: Vec::new(),
            checks: Vec::new(),
            status: Status::Ok,
            wall_time_ms: 0,
        }
    }

    pub fn push_table(&mut self, table: &CoefficientTable) {
        self.tables.push(table.into());
    }

    pub fn push_check(&mut self, check: Check) {
        if !check.passed {
            self.status = self.status.max(check.failure_status);
        }
        self.checks.push(check);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.render_human(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv().expect("in-memory csv writing"),
        }
    }

    fn render_human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} (order {})", self.command, self.order).unwrap();
        if let Some(note) = &self.note {
            writeln!(out, "note: {note}").unwrap();
        }
        if !self.tables.is_empty() {
            let widths: Vec<usize> = self
                .tables
                .iter()
                .map(|t| t.values.iter().map(String::len).max().unwrap_or(0).max(t.label.len()))
                .collect();
            let rows = self.tables.iter().map(|t| t.values.len()).max().unwrap_or(0);
            let n_width = rows.saturating_sub(1).to_string().len().max(1);
            write!(out, "\n{:>n_width$}", "n").unwrap();
            for (t, w) in self.tables.iter().zip(&widths) {
                write!(out, "  {:>w$}", t.label).unwrap();
            }
            out.push('\n');
            for n in 0..rows {
                write!(out, "{n:>n_width$}").unwrap();
                for (t, w) in self.tables.iter().zip(&widths) {
                    write!(out, "  {:>w$}", t.values.get(n).map(String::as_str).unwrap_or("")).unwrap();
                }
                out.push('\n');
            }
        }
        if !self.data.is_empty() {
            out.push('\n');
            for row in &self.data {
                writeln!(out, "{}  {}", row.key, row.value).unwrap();
            }
        }
        if !self.checks.is_empty() {
            out.push('\n');
        }
        for check in &self.checks {
            if check.passed {
                writeln!(out, "PASS  {}", check.name).unwrap();
            } else {
                let m = check.mismatch.as_ref().expect("failed checks carry a mismatch");
                write!(
                    out,
                    "FAIL  {}: first mismatch at n = {}: expected {}, got {}",
                    check.name, m.index, m.expected, m.actual
                )
                .unwrap();
                if let Some(loc) = &m.location {
                    write!(out, " ({loc})").unwrap();
                }
                out.push('\n');
            }
        }
        writeln!(out, "\nexit {}", self.status.code()).unwrap();
        out
    }

    fn render_csv(&self) -> io::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["record", "name", "n", "value"])?;
        for t in &self.tables {
            for (n, v) in t.values.iter().enumerate() {
                w.write_record(["coefficient", &t.label, &n.to_string(), v])?;
            }
        }
        for row in &self.data {
            w.write_record(["data", &row.key, "", &row.value])?;
        }
        for c in &self.checks {
            let (n, value) = match &c.mismatch {
                Some(m) => (m.index.to_string(), format!("fail: expected {}, got {}", m.expected, m.actual)),
                None => (String::new(), "pass".to_string()),
            };
            w.write_record(["check", &c.name, &n, &value])?;
        }
        w.write_record(["status", "exit", "", &self.status.code().to_string()])?;
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}
