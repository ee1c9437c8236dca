//! Instance files: the two OR-Library layouts, a native text format and a
//! seeded random generator.
//!
//! All readers work on a whitespace-separated token stream because the
//! OR-Library files wrap their lines at arbitrary points.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{Cost, Incidence, Instance};

pub const NATIVE_HEADER: &str = "scp-native 1";

/// Layout of an instance file. Always chosen explicitly; the OR-Library
/// layouts are both bare integer streams and cannot be told apart reliably.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceFileFormat {
    /// `m n`, `n` costs, then per row: count and covering columns.
    RowMajorWithCosts,
    /// `m n`, then per column: count and covered rows. Unit costs.
    ColumnMajorUnicost,
    /// `scp-native 1` header followed by the row-major body.
    Native,
}

impl FromStr for InstanceFileFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" | "row-major" => Ok(InstanceFileFormat::RowMajorWithCosts),
            "column" | "column-major" => Ok(InstanceFileFormat::ColumnMajorUnicost),
            "native" => Ok(InstanceFileFormat::Native),
            other => Err(Error::InvalidParam(format!(
                "unknown format {other:?}; expected row, column or native"
            ))),
        }
    }
}

struct Tokens<'a> {
    inner: std::str::SplitWhitespace<'a>,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Tokens {
            inner: text.split_whitespace(),
        }
    }

    fn next_u64(&mut self, what: &'static str) -> Result<u64> {
        let tok = self.inner.next().ok_or(Error::TruncatedFile(what))?;
        tok.parse::<u64>()
            .map_err(|_| Error::BadToken(tok.to_string()))
    }

    fn next_usize(&mut self, what: &'static str) -> Result<usize> {
        let v = self.next_u64(what)?;
        usize::try_from(v).map_err(|_| Error::BadToken(v.to_string()))
    }

    /// Reads a 1-based index and returns it 0-based.
    fn next_index(&mut self, what: &'static str, bound: usize) -> Result<usize> {
        let v = self.next_u64(what)?;
        if v == 0 || v > bound as u64 {
            return Err(Error::IndexOutOfRange {
                what,
                index: v,
                bound,
            });
        }
        Ok(v as usize - 1)
    }

    fn next_list(&mut self, what: &'static str, bound: usize) -> Result<Vec<usize>> {
        let k = self.next_usize("list length")?;
        (0..k).map(|_| self.next_index(what, bound)).collect()
    }
}

fn read_dims(tokens: &mut Tokens<'_>) -> Result<(usize, usize)> {
    let m = tokens.next_usize("row count")?;
    let n = tokens.next_usize("column count")?;
    if m == 0 || n == 0 {
        return Err(Error::BadDimension(format!("m={m}, n={n}")));
    }
    Ok((m, n))
}

fn read_row_major_body(tokens: &mut Tokens<'_>) -> Result<Instance> {
    let (m, n) = read_dims(tokens)?;
    let costs = (0..n)
        .map(|_| tokens.next_u64("column costs"))
        .collect::<Result<Vec<Cost>>>()?;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let cols = tokens.next_list("column index", n)?;
        if cols.is_empty() {
            return Err(Error::UncoverableRow(i + 1));
        }
        rows.push(cols);
    }
    Instance::new(m, n, costs, Incidence::Rows(rows))
}

/// OR-Library weighted layout (`scp41.txt` and friends).
pub fn parse_row_major(text: &str) -> Result<Instance> {
    read_row_major_body(&mut Tokens::new(text))
}

/// OR-Library column-major layout with implicit unit costs.
pub fn parse_column_major_unicost(text: &str) -> Result<Instance> {
    let mut tokens = Tokens::new(text);
    let (m, n) = read_dims(&mut tokens)?;
    let cols = (0..n)
        .map(|_| tokens.next_list("row index", m))
        .collect::<Result<Vec<_>>>()?;
    Instance::new(m, n, vec![1; n], Incidence::Columns(cols))
}

pub fn parse_native(text: &str) -> Result<Instance> {
    let mut lines = text.lines().skip_while(|l| l.trim().is_empty());
    let header = lines.next().unwrap_or("").trim();
    if header != NATIVE_HEADER {
        return Err(Error::VersionMismatch(header.to_string()));
    }
    let body: String = lines.collect::<Vec<_>>().join("\n");
    read_row_major_body(&mut Tokens::new(&body))
}

/// Canonical text form: header, `m n`, one cost line, one line per row.
pub fn write_native(instance: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "{NATIVE_HEADER}").unwrap();
    writeln!(out, "{} {}", instance.rows(), instance.columns()).unwrap();
    let costs: Vec<String> = instance.costs().iter().map(u64::to_string).collect();
    writeln!(out, "{}", costs.join(" ")).unwrap();
    for i in 0..instance.rows() {
        let cols = instance.cols_covering(i);
        write!(out, "{}", cols.len()).unwrap();
        for j in cols {
            write!(out, " {}", j + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse(text: &str, format: InstanceFileFormat) -> Result<Instance> {
    match format {
        InstanceFileFormat::RowMajorWithCosts => parse_row_major(text),
        InstanceFileFormat::ColumnMajorUnicost => parse_column_major_unicost(text),
        InstanceFileFormat::Native => parse_native(text),
    }
}

pub fn read_instance(path: impl AsRef<Path>, format: InstanceFileFormat) -> Result<Instance> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text, format)
}

/// Shape of a generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub m: usize,
    pub n: usize,
    pub density: f64,
    pub cost_lo: Cost,
    pub cost_hi: Cost,
    pub seed: u64,
}

/// What the generator did before patching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorReport {
    pub sampled_nonzeros: usize,
    pub patched_rows: usize,
    pub patched_columns: usize,
}

/// Independent Bernoulli(`density`) entries, then rows and columns left
/// empty get one uniformly random entry each. Deterministic under `seed`.
pub fn generate_random(
    m: usize,
    n: usize,
    density: f64,
    cost_lo: Cost,
    cost_hi: Cost,
    seed: u64,
) -> Result<Instance> {
    generate_with_report(&GeneratorConfig {
        m,
        n,
        density,
        cost_lo,
        cost_hi,
        seed,
    })
    .map(|(inst, _)| inst)
}

pub fn generate_with_report(cfg: &GeneratorConfig) -> Result<(Instance, GeneratorReport)> {
    let GeneratorConfig {
        m,
        n,
        density,
        cost_lo,
        cost_hi,
        seed,
    } = *cfg;
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::BadDensity(density));
    }
    if cost_lo == 0 || cost_lo > cost_hi {
        return Err(Error::BadCostRange {
            lo: cost_lo,
            hi: cost_hi,
        });
    }
    if m == 0 || n == 0 {
        return Err(Error::BadDimension(format!("m={m}, n={n}")));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut col_used = vec![false; n];
    let mut sampled = 0;
    for row in rows.iter_mut() {
        for (j, used) in col_used.iter_mut().enumerate() {
            if density >= 1.0 || rng.gen_bool(density) {
                row.push(j);
                *used = true;
                sampled += 1;
            }
        }
    }

    let mut patched_rows = 0;
    for row in rows.iter_mut() {
        if row.is_empty() {
            let j = rng.gen_range(0..n);
            row.push(j);
            col_used[j] = true;
            patched_rows += 1;
        }
    }
    let mut patched_columns = 0;
    for (j, used) in col_used.iter().enumerate() {
        if !used {
            let i = rng.gen_range(0..m);
            rows[i].push(j);
            patched_columns += 1;
        }
    }

    let costs = (0..n).map(|_| rng.gen_range(cost_lo..=cost_hi)).collect();
    let inst = Instance::new(m, n, costs, Incidence::Rows(rows))?;
    Ok((
        inst,
        GeneratorReport {
            sampled_nonzeros: sampled,
            patched_rows,
            patched_columns,
        },
    ))
}
