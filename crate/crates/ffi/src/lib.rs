//! C ABI over the `scp-cro` solver.
//!
//! Instances and run results are opaque heap handles released with their
//! `_free` functions. Every call returns an [`ScpStatus`]; on failure the
//! message is available from [`scp_last_error_message`] on the same thread.
//! Panics are caught at the boundary and reported as `SCP_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use scp_cro::bench::{brute_force_optimum, run_once, AlgoConfig, Algorithm};
use scp_cro::orlib::{self, InstanceFileFormat};
use scp_cro::{Cover, Error, Instance};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInstance = 4,
    InvalidParam = 5,
    IoError = 6,
    TooLarge = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScpFormat {
    /// Costs, then per row the covering columns.
    RowMajor = 0,
    /// Unit costs, per column the covered rows.
    ColumnMajor = 1,
    Native = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScpAlgorithm {
    Hcro = 0,
    HcroIr = 1,
    HcroNr = 2,
    Hga = 3,
    Greedy = 4,
}

/// A parsed instance.
pub struct ScpInstance(Instance);

/// Outcome of a solve or oracle call.
pub struct ScpRunResult {
    cost: u64,
    fe_used: u64,
    cover: Cover,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let msg =
        CString::new(msg).unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> ScpStatus {
    match err {
        Error::TruncatedFile(_) | Error::BadToken(_) | Error::VersionMismatch(_) => {
            ScpStatus::ParseError
        }
        Error::UncoverableRow(_)
        | Error::BadDimension(_)
        | Error::NonPositiveCost(_)
        | Error::IndexOutOfRange { .. }
        | Error::NotACover => ScpStatus::InvalidInstance,
        Error::TooLarge { .. } => ScpStatus::TooLarge,
        Error::Io(_) => ScpStatus::IoError,
        _ => ScpStatus::InvalidParam,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (ScpStatus, String)>) -> ScpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ScpStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside scp-cro");
            ScpStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (ScpStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (ScpStatus, String) {
    (ScpStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, (ScpStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (ScpStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

fn file_format(f: ScpFormat) -> InstanceFileFormat {
    match f {
        ScpFormat::RowMajor => InstanceFileFormat::RowMajorWithCosts,
        ScpFormat::ColumnMajor => InstanceFileFormat::ColumnMajorUnicost,
        ScpFormat::Native => InstanceFileFormat::Native,
    }
}

unsafe fn emit_instance(out: *mut *mut ScpInstance, inst: Instance) {
    *out = Box::into_raw(Box::new(ScpInstance(inst)));
}

/// Parses instance text.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn scp_instance_parse(
    text: *const c_char,
    format: ScpFormat,
    out: *mut *mut ScpInstance,
) -> ScpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let text = str_arg(text)?;
        let inst = orlib::parse(text, file_format(format)).map_err(lib_err)?;
        emit_instance(out, inst);
        Ok(())
    })
}

/// Reads an instance file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn scp_instance_load(
    path: *const c_char,
    format: ScpFormat,
    out: *mut *mut ScpInstance,
) -> ScpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let path = str_arg(path)?;
        let inst = orlib::read_instance(Path::new(path), file_format(format)).map_err(lib_err)?;
        emit_instance(out, inst);
        Ok(())
    })
}

/// Seeded random instance with the given density and cost range.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn scp_instance_generate(
    rows: usize,
    columns: usize,
    density: f64,
    cost_lo: u64,
    cost_hi: u64,
    seed: u64,
    out: *mut *mut ScpInstance,
) -> ScpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let inst = orlib::generate_random(rows, columns, density, cost_lo, cost_hi, seed)
            .map_err(lib_err)?;
        emit_instance(out, inst);
        Ok(())
    })
}

/// # Safety
/// `instance` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn scp_instance_free(instance: *mut ScpInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// Row count, or 0 for a null handle.
///
/// # Safety
/// `instance` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scp_instance_rows(instance: *const ScpInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.0.rows())
}

/// Column count, or 0 for a null handle.
///
/// # Safety
/// `instance` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scp_instance_columns(instance: *const ScpInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.0.columns())
}

/// One run with the default parameters. `fe_limit` of 0 means `n * 1000`.
///
/// # Safety
/// `instance` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn scp_solve(
    instance: *const ScpInstance,
    algorithm: ScpAlgorithm,
    seed: u64,
    fe_limit: u64,
    out: *mut *mut ScpRunResult,
) -> ScpStatus {
    guard(|| {
        let (Some(inst), false) = (instance.as_ref(), out.is_null()) else {
            return Err(null());
        };
        let algo = match algorithm {
            ScpAlgorithm::Hcro => Algorithm::Hcro,
            ScpAlgorithm::HcroIr => Algorithm::HcroIr,
            ScpAlgorithm::HcroNr => Algorithm::HcroNr,
            ScpAlgorithm::Hga => Algorithm::Hga,
            ScpAlgorithm::Greedy => Algorithm::Greedy,
        };
        let cfg = AlgoConfig::new(algo).with_fe_limit((fe_limit > 0).then_some(fe_limit));
        let r = run_once(&inst.0, &cfg, seed).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(ScpRunResult {
            cost: r.best_cost,
            fe_used: r.fe_used,
            cover: r.best_cover,
        }));
        Ok(())
    })
}

/// Exact optimum; instances with more than 25 columns give
/// `SCP_STATUS_TOO_LARGE`.
///
/// # Safety
/// `instance` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn scp_oracle(
    instance: *const ScpInstance,
    out: *mut *mut ScpRunResult,
) -> ScpStatus {
    guard(|| {
        let (Some(inst), false) = (instance.as_ref(), out.is_null()) else {
            return Err(null());
        };
        let (cost, cover) = brute_force_optimum(&inst.0).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(ScpRunResult {
            cost,
            fe_used: 0,
            cover,
        }));
        Ok(())
    })
}

/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scp_result_cost(result: *const ScpRunResult) -> u64 {
    result.as_ref().map_or(0, |r| r.cost)
}

/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scp_result_fe_used(result: *const ScpRunResult) -> u64 {
    result.as_ref().map_or(0, |r| r.fe_used)
}

/// Number of columns in the cover.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn scp_result_cover_len(result: *const ScpRunResult) -> usize {
    result.as_ref().map_or(0, |r| r.cover.len())
}

/// Copies the cover's one-based column numbers into `buf`. `written`
/// receives the cover length even when `capacity` is too small.
///
/// # Safety
/// `buf` must hold `capacity` elements; `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn scp_result_cover(
    result: *const ScpRunResult,
    buf: *mut usize,
    capacity: usize,
    written: *mut usize,
) -> ScpStatus {
    guard(|| {
        let (Some(r), false) = (result.as_ref(), written.is_null()) else {
            return Err(null());
        };
        let cols = r.cover.one_based();
        *written = cols.len();
        if cols.len() > capacity {
            return Err((
                ScpStatus::BufferTooSmall,
                format!("cover has {} columns, buffer holds {capacity}", cols.len()),
            ));
        }
        if buf.is_null() && !cols.is_empty() {
            return Err(null());
        }
        std::ptr::copy_nonoverlapping(cols.as_ptr(), buf, cols.len());
        Ok(())
    })
}

/// # Safety
/// `result` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn scp_result_free(result: *mut ScpRunResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Message of the last failed call on this thread. Valid until the next
/// call into the library from the same thread.
#[no_mangle]
pub extern "C" fn scp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn scp_version() -> *const c_char {
    static VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(v) => v,
            Err(_) => panic!("version string"),
        };
    VERSION.as_ptr()
}
