//! Tables and their CSV/JSON encodings.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::{CliError, Result};

/// Column-named numeric table. Rows are stored in grid order.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    /// Per-run remarks, e.g. schedules the closed form cannot handle.
    pub notes: Vec<String>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            ..Default::default()
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }

    /// Header line, then one line per row. 17 significant digits, so that
    /// parsing recovers every value exactly.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{v:.16e}");
            }
            out.push('\n');
        }
        out
    }

    /// Table plus the resolved configuration that produced it.
    pub fn to_json(&self, config: &RunConfig) -> String {
        #[derive(Serialize)]
        struct Envelope<'a> {
            config: &'a RunConfig,
            #[serde(flatten)]
            table: &'a Table,
        }
        let mut s = serde_json::to_string_pretty(&Envelope {
            config,
            table: self,
        })
        .expect("tables serialize");
        s.push('\n');
        s
    }

    pub fn render(&self, config: &RunConfig) -> String {
        match config.format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(config),
        }
    }
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so a failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(contents.as_bytes())
        .and_then(|_| tmp.as_file().sync_all())
        .map_err(|e| CliError::io(tmp.path(), e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trips_bits() {
        let mut t = Table::new(["a", "b"]);
        let vals = [0.1 + 0.2, std::f64::consts::PI, -1e-300, 6.02214076e23];
        t.rows.push(vals[..2].to_vec());
        t.rows.push(vals[2..].to_vec());
        let csv = t.to_csv();
        let parsed: Vec<f64> = csv
            .lines()
            .skip(1)
            .flat_map(|l| {
                l.split(',')
                    .map(|x| x.parse::<f64>().unwrap())
                    .collect::<Vec<_>>()
            })
            .collect();
        for (p, v) in parsed.iter().zip(vals) {
            assert_eq!(p.to_bits(), v.to_bits());
        }
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("x.csv");
        write_atomic(&p, "one\n").unwrap();
        write_atomic(&p, "two\n").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two\n");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        let missing = dir.path().join("nope/x.csv");
        assert_eq!(write_atomic(&missing, "").unwrap_err().exit_code(), 4);
    }
}
