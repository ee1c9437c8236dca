use thiserror::Error;

/// Errors raised while building, reading or solving set covering instances.
///
/// Row and column numbers carried by these variants are 1-based, matching
/// the OR-Library files they usually come from.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("row {0} is not covered by any column")]
    UncoverableRow(usize),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("column {0} has a non-positive cost")]
    NonPositiveCost(usize),
    #[error("file ended early while reading {0}")]
    TruncatedFile(&'static str),
    #[error("index {index} out of range 1..={bound} while reading {what}")]
    IndexOutOfRange {
        what: &'static str,
        index: u64,
        bound: usize,
    },
    #[error("unexpected token {0:?}")]
    BadToken(String),
    #[error("unsupported native header {0:?}, expected \"scp-native 1\"")]
    VersionMismatch(String),
    #[error("density must lie in (0, 1], got {0}")]
    BadDensity(f64),
    #[error("invalid cost range {lo}..={hi}")]
    BadCostRange { lo: u64, hi: u64 },
    #[error("the given columns do not cover every row")]
    NotACover,
    #[error("instance has {n} columns, brute force is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no best-known value for instance {0:?}; pass --bks")]
    UnknownInstanceForBks(String),
    #[error("fe budget exhausted ({0} evaluations)")]
    BudgetExhausted(u64),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
