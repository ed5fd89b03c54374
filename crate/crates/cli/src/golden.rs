//! Reference tables for `c`, `a` and `b`, stored as one decimal integer per
//! line (index = line number). Blank lines and `#` comments are ignored.
//!
//! The copies compiled into the binary are used unless `SCHOEN_GOLDEN_DIR`
//! points at a directory holding `c.txt`, `a.txt` and `b.txt`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use schoen_core::{Integer, TableLabel};

pub const GOLDEN_DIR_ENV: &str = "SCHOEN_GOLDEN_DIR";

const EMBEDDED_C: &str = include_str!("../golden/c.txt");
const EMBEDDED_A: &str = include_str!("../golden/a.txt");
const EMBEDDED_B: &str = include_str!("../golden/b.txt");

#[derive(Debug, thiserror::Error)]
pub enum GoldenError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: line {line}: not an integer: {text:?}")]
    Parse {
        path: String,
        line: usize,
        text: String,
    },
}

pub fn file_name(label: TableLabel) -> String {
    format!("{}.txt", label.as_char())
}

pub fn parse(source: &str, text: &str) -> Result<Vec<Integer>, GoldenError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let value = line.parse::<Integer>().map_err(|_| GoldenError::Parse {
            path: source.to_string(),
            line: i + 1,
            text: line.to_string(),
        })?;
        out.push(value);
    }
    Ok(out)
}

pub fn serialize(values: &[Integer]) -> String {
    let mut out = String::new();
    for v in values {
        writeln!(out, "{v}").unwrap();
    }
    out
}

/// The golden directory named by the environment, if any.
pub fn env_dir() -> Option<PathBuf> {
    std::env::var_os(GOLDEN_DIR_ENV).map(PathBuf::from)
}

/// Reference values for `label`, from `dir` or the embedded copy.
pub fn load(label: TableLabel, dir: Option<&Path>) -> Result<Vec<Integer>, GoldenError> {
    match dir {
        Some(dir) => {
            let path = dir.join(file_name(label));
            let text = fs::read_to_string(&path).map_err(|source| GoldenError::Io {
                path: path.clone(),
                source,
            })?;
            parse(&path.display().to_string(), &text)
        }
        None => {
            let text = match label {
                TableLabel::C => EMBEDDED_C,
                TableLabel::A => EMBEDDED_A,
                TableLabel::B => EMBEDDED_B,
            };
            parse(&format!("embedded {}", file_name(label)), text)
        }
    }
}

/// Line-by-line differences between an old and a new list, as
/// `-n old` / `+n new` pairs.
pub fn diff(old: &[Integer], new: &[Integer]) -> String {
    let mut out = String::new();
    for n in 0..old.len().max(new.len()) {
        match (old.get(n), new.get(n)) {
            (Some(a), Some(b)) if a == b => {}
            (a, b) => {
                if let Some(a) = a {
                    writeln!(out, "-{n} {a}").unwrap();
                }
                if let Some(b) = b {
                    writeln!(out, "+{n} {b}").unwrap();
                }
            }
        }
    }
    out
}

/// Writes `values` as the golden file for `label` in `dir`, returning the
/// diff against what was there before.
pub fn regenerate(label: TableLabel, dir: &Path, values: &[Integer]) -> Result<String, GoldenError> {
    let path = dir.join(file_name(label));
    let old = match fs::read_to_string(&path) {
        Ok(text) => parse(&path.display().to_string(), &text)?,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Vec::new(),
        Err(source) => return Err(GoldenError::Io { path, source }),
    };
    fs::write(&path, serialize(values)).map_err(|source| GoldenError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(diff(&old, values))
}
