//! Report rendering. Column order follows the published results tables:
//! instance, bks, opt, best, pct, mean, pct, worst, pct.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::TrialStats;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidParam(format!(
                "unknown output format {other:?}"
            ))),
        }
    }
}

/// A batch of rows plus the settings that produced them. Holds no timing,
/// so equal inputs give byte-identical output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub algorithm: String,
    pub base_seed: u64,
    pub trials: usize,
    pub fe_limit: Option<u64>,
    pub rows: Vec<TrialStats>,
}

pub fn render(report: &Report, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => to_csv(&report.rows),
        OutputFormat::Text => Ok(to_text(&report.rows)),
    }
}

pub fn to_json(report: &Report) -> Result<String> {
    let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn to_csv(rows: &[TrialStats]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record([
        "instance", "bks", "opt", "best", "pct", "mean", "pct", "worst", "pct",
    ])
    .map_err(io)?;
    for r in rows {
        w.write_record([
            r.instance_name.clone(),
            opt(r.bks),
            opt(r.opt_count),
            r.best.to_string(),
            opt(r.pct_best),
            r.mean.to_string(),
            opt(r.pct_mean),
            r.worst.to_string(),
            opt(r.pct_worst),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Aligned table; mean to one decimal and gaps to four, as in the
/// published tables.
pub fn to_text(rows: &[TrialStats]) -> String {
    let pct = |p: Option<f64>| p.map(|x| format!("{x:.4}")).unwrap_or_else(|| "-".into());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<10} {:>6} {:>5} {:>7} {:>7} {:>9} {:>7} {:>7} {:>7}",
        "instance", "bks", "opt", "best", "pct", "mean", "pct", "worst", "pct"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<10} {:>6} {:>5} {:>7} {:>7} {:>9.1} {:>7} {:>7} {:>7}",
            r.instance_name,
            r.bks.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
            r.opt_count
                .map(|c| c.to_string())
                .unwrap_or_else(|| "-".into()),
            r.best,
            pct(r.pct_best),
            r.mean,
            pct(r.pct_mean),
            r.worst,
            pct(r.pct_worst),
        );
    }
    out
}
