//! C ABI over the verification engine.
//!
//! Every function returns a [`ScStatus`]. Results come back through out
//! pointers; reports are opaque handles released with [`sc_report_free`], and
//! strings handed out by the library are released with [`sc_string_free`].
//! The message for the most recent error on the calling thread is available
//! from [`sc_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use supercong::catalog::{self, CheckResult, RunConfig, Verdict};
use supercong::series;
use supercong::Error;

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    UnknownId = 4,
    NotOddPrime = 5,
    /// Any other engine error; see [`sc_last_error`].
    EvaluationFailed = 6,
    SlowConvergence = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

/// Verdict of a single check.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScVerdict {
    Pass = 0,
    Fail = 1,
    Skipped = 2,
}

/// Output format for [`sc_report_render`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScFormat {
    Json = 0,
    Csv = 1,
    Text = 2,
}

/// Results of a catalog sweep.
pub struct ScReport {
    rows: Vec<CheckResult>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn fail(code: ScStatus, msg: impl Into<String>) -> ScStatus {
    set_error(msg);
    code
}

fn from_error(e: &Error) -> ScStatus {
    let code = match e {
        Error::UnknownId(_) => ScStatus::UnknownId,
        Error::NotOddPrime(_) => ScStatus::NotOddPrime,
        Error::InvalidArgument(_) => ScStatus::InvalidArgument,
        Error::SlowConvergence { .. } => ScStatus::SlowConvergence,
        _ => ScStatus::EvaluationFailed,
    };
    fail(code, e.to_string())
}

fn guarded(f: impl FnOnce() -> ScStatus) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(ScStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ScStatus> {
    if s.is_null() {
        return Err(fail(ScStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(ScStatus::InvalidUtf8, "argument is not UTF-8"))
}

fn verdict(v: &Verdict) -> ScVerdict {
    match v {
        Verdict::Pass => ScVerdict::Pass,
        Verdict::Fail => ScVerdict::Fail,
        Verdict::Skipped(_) => ScVerdict::Skipped,
    }
}

fn hand_out(s: String, out: *mut *mut c_char) -> ScStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            ScStatus::Ok
        }
        Err(_) => fail(ScStatus::EvaluationFailed, "output contains a NUL byte"),
    }
}

/// Message for the last error on this thread; empty if none. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Check catalog entry `id` at the prime `p` and exponent `a`.
///
/// # Safety
/// `id` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_check(
    id: *const c_char,
    p: u64,
    a: u32,
    guard: u32,
    out: *mut ScVerdict,
) -> ScStatus {
    guarded(|| {
        if out.is_null() {
            return fail(ScStatus::NullPointer, "null out pointer");
        }
        let id = match read_str(id) {
            Ok(s) => s,
            Err(c) => return c,
        };
        let Some(spec) = catalog::lookup(id) else {
            return fail(ScStatus::UnknownId, format!("unknown id `{id}`"));
        };
        if p < 3 || p.is_multiple_of(2) || !supercong::arith::is_prime(p) {
            return fail(ScStatus::NotOddPrime, format!("{p} is not an odd prime"));
        }
        if a == 0 {
            return fail(ScStatus::InvalidArgument, "a must be positive");
        }
        let r = catalog::check_with_guard(spec, p, a, guard);
        *out = verdict(&r.verdict);
        ScStatus::Ok
    })
}

/// Sweep the entries matching `patterns` (comma-separated, trailing `*` for a
/// prefix) over primes in `[lo, hi]` and `a = 1..=a_max`.
///
/// # Safety
/// `patterns` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_run_range(
    patterns: *const c_char,
    lo: u64,
    hi: u64,
    a_max: u32,
    guard: u32,
    out: *mut *mut ScReport,
) -> ScStatus {
    guarded(|| {
        if out.is_null() {
            return fail(ScStatus::NullPointer, "null out pointer");
        }
        let pats = match read_str(patterns) {
            Ok(s) => s,
            Err(c) => return c,
        };
        if lo > hi || a_max == 0 {
            return fail(ScStatus::InvalidArgument, "need lo <= hi and a_max >= 1");
        }
        let pats: Vec<String> = pats
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        let cfg = RunConfig {
            guard,
            ..Default::default()
        };
        let rows = catalog::run_range(&pats, lo, hi, a_max, &cfg);
        *out = Box::into_raw(Box::new(ScReport { rows }));
        ScStatus::Ok
    })
}

/// Row and failure counts of a report.
///
/// # Safety
/// `report` must be a live handle; the out pointers must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sc_report_counts(
    report: *const ScReport,
    rows: *mut usize,
    fails: *mut usize,
) -> ScStatus {
    let Some(r) = report.as_ref() else {
        return fail(ScStatus::NullPointer, "null report");
    };
    if !rows.is_null() {
        *rows = r.rows.len();
    }
    if !fails.is_null() {
        *fails = r.rows.iter().filter(|x| x.verdict.is_fail()).count();
    }
    ScStatus::Ok
}

/// Verdict of row `i`.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_report_verdict(
    report: *const ScReport,
    i: usize,
    out: *mut ScVerdict,
) -> ScStatus {
    let Some(r) = report.as_ref() else {
        return fail(ScStatus::NullPointer, "null report");
    };
    if out.is_null() {
        return fail(ScStatus::NullPointer, "null out pointer");
    }
    match r.rows.get(i) {
        Some(row) => {
            *out = verdict(&row.verdict);
            ScStatus::Ok
        }
        None => fail(ScStatus::InvalidArgument, format!("row {i} out of range")),
    }
}

/// Render a report; free the string with [`sc_string_free`].
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_report_render(
    report: *const ScReport,
    format: ScFormat,
    out: *mut *mut c_char,
) -> ScStatus {
    let Some(r) = report.as_ref() else {
        return fail(ScStatus::NullPointer, "null report");
    };
    if out.is_null() {
        return fail(ScStatus::NullPointer, "null out pointer");
    }
    let s = match format {
        ScFormat::Json => catalog::to_json_lines(&r.rows),
        ScFormat::Csv => catalog::to_csv(&r.rows),
        ScFormat::Text => catalog::to_text(&r.rows),
    };
    hand_out(s, out)
}

/// Release a report. Null is ignored.
///
/// # Safety
/// `report` must come from [`sc_run_range`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sc_report_free(report: *mut ScReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Primes `5 <= p <= bound` dividing `E_{p-3}`, written to `buf`. `len`
/// receives the count even when `cap` is too small.
///
/// # Safety
/// `buf` must hold `cap` values (or be null with `cap == 0`); `len` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_search_exceptional(
    bound: u64,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> ScStatus {
    guarded(|| {
        if len.is_null() || (buf.is_null() && cap > 0) {
            return fail(ScStatus::NullPointer, "null buffer");
        }
        let hits = catalog::search_exceptional(bound);
        *len = hits.len();
        if hits.len() > cap {
            return fail(
                ScStatus::BufferTooSmall,
                format!("{} primes found", hits.len()),
            );
        }
        if !hits.is_empty() {
            ptr::copy_nonoverlapping(hits.as_ptr(), buf, hits.len());
        }
        ScStatus::Ok
    })
}

/// A reference constant (`pi`, `zeta3`, `zeta4`, `K`, `sqrt2`, `sqrt3`) to
/// `digits` decimal places.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_reference_constant(
    name: *const c_char,
    digits: u32,
    out: *mut *mut c_char,
) -> ScStatus {
    guarded(|| {
        if out.is_null() {
            return fail(ScStatus::NullPointer, "null out pointer");
        }
        let name = match read_str(name) {
            Ok(s) => s,
            Err(c) => return c,
        };
        match series::reference_constant(name, digits) {
            Ok(d) => hand_out(d.to_string(), out),
            Err(e) => from_error(&e),
        }
    })
}

/// Evaluate series `id` with `terms` terms at `digits` places; `out` gets the
/// verdict and `json` (if non-null) the full result.
///
/// # Safety
/// `id` must be a NUL-terminated string; `out` writable; `json` writable or null.
#[no_mangle]
pub unsafe extern "C" fn sc_eval_series(
    id: *const c_char,
    digits: u32,
    terms: u64,
    out: *mut ScVerdict,
    json: *mut *mut c_char,
) -> ScStatus {
    guarded(|| {
        if out.is_null() {
            return fail(ScStatus::NullPointer, "null out pointer");
        }
        let id = match read_str(id) {
            Ok(s) => s,
            Err(c) => return c,
        };
        match series::eval_series(id, digits, terms) {
            Ok(r) => {
                *out = verdict(&r.verdict);
                if json.is_null() {
                    ScStatus::Ok
                } else {
                    hand_out(serde_json::to_string(&r).expect("serializable"), json)
                }
            }
            Err(e) => from_error(&e),
        }
    })
}
