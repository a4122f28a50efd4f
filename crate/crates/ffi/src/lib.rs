//! C ABI for `cgc`.
//!
//! Codes are created from spec JSON with [`cgc_code_from_json`] and released
//! with [`cgc_code_free`]. Strings returned through `char **` out-parameters
//! are owned by the caller and released with [`cgc_string_free`]. Every
//! function returns a [`CgcStatus`]; on failure [`cgc_last_error`] describes
//! the error for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cgc::conv::free_distance_oracle;
use cgc::fixtures::{fixtures, NAMES};
use cgc::report::{verify_checks, Report};
use cgc::spec_file::{CodeSpecFile, SpecError};

/// Result codes. Values 0–3 match the `cgc` command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CgcStatus {
    Ok = 0,
    CheckFailed = 1,
    ParseError = 2,
    ValidationError = 3,
    NullPointer = 4,
    InvalidArgument = 5,
    Panic = 6,
}

/// Opaque handle to an analyzed code.
pub struct CgcCode {
    report: Report,
}

/// Parameters of an analyzed code.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CgcParams {
    pub n: u64,
    pub k: u64,
    pub delta: u64,
    pub d_free: u64,
    pub singleton_bound: u64,
    pub is_mds: bool,
    pub input_was_catastrophic: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn spec_status(e: &SpecError) -> CgcStatus {
    set_error(e.to_string());
    match e.exit_code() {
        2 => CgcStatus::ParseError,
        _ => CgcStatus::ValidationError,
    }
}

fn guard(f: impl FnOnce() -> CgcStatus) -> CgcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            CgcStatus::Panic
        }
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> CgcStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CgcStatus::Ok
        }
        Err(_) => {
            set_error("string contains an interior nul byte");
            CgcStatus::InvalidArgument
        }
    }
}

macro_rules! nonnull {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            set_error(concat!("`", stringify!($p), "` is null"));
            return CgcStatus::NullPointer;
        })+
    };
}

/// Parses a spec and runs the analysis. On success `*out` holds a new handle.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cgc_code_from_json(json: *const c_char, out: *mut *mut CgcCode) -> CgcStatus {
    nonnull!(json, out);
    guard(|| {
        *out = ptr::null_mut();
        let text = match CStr::from_ptr(json).to_str() {
            Ok(t) => t,
            Err(e) => {
                set_error(format!("spec is not UTF-8: {e}"));
                return CgcStatus::ParseError;
            }
        };
        match CodeSpecFile::from_json(text).and_then(|s| Report::build(&s, false)) {
            Ok(report) => {
                *out = Box::into_raw(Box::new(CgcCode { report }));
                CgcStatus::Ok
            }
            Err(e) => spec_status(&e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `code` must come from [`cgc_code_from_json`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cgc_code_free(code: *mut CgcCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// # Safety
/// `code` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cgc_code_params(code: *const CgcCode, out: *mut CgcParams) -> CgcStatus {
    nonnull!(code, out);
    let r = &(*code).report.analysis.report;
    *out = CgcParams {
        n: r.n as u64,
        k: r.k as u64,
        delta: r.delta as u64,
        d_free: r.d_free,
        singleton_bound: r.singleton_bound,
        is_mds: r.is_mds,
        input_was_catastrophic: r.input_was_catastrophic,
    };
    CgcStatus::Ok
}

/// Writes the JSON report, as printed by `cgc report`, to `*out`.
///
/// # Safety
/// `code` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cgc_code_report_json(code: *const CgcCode, out: *mut *mut c_char) -> CgcStatus {
    nonnull!(code, out);
    guard(|| write_string(out, (*code).report.to_json_string()))
}

/// Runs the rank and duality checks; `*passed` is false if any required
/// check fails, in which case `CheckFailed` is returned.
///
/// # Safety
/// `code` must be a live handle and `passed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cgc_code_verify(code: *const CgcCode, passed: *mut bool) -> CgcStatus {
    nonnull!(code, passed);
    guard(|| match verify_checks(&(*code).report.spec) {
        Ok(checks) => {
            let failed: Vec<&str> =
                checks.iter().filter(|c| c.required && !c.passed).map(|c| c.name.as_str()).collect();
            *passed = failed.is_empty();
            if failed.is_empty() {
                CgcStatus::Ok
            } else {
                set_error(format!("failed checks: {}", failed.join("; ")));
                CgcStatus::CheckFailed
            }
        }
        Err(e) => spec_status(&e),
    })
}

/// Brute-force free distance over inputs of degree at most `deg_bound`.
///
/// # Safety
/// `code` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cgc_code_free_distance_oracle(
    code: *const CgcCode,
    deg_bound: usize,
    out: *mut u64,
) -> CgcStatus {
    nonnull!(code, out);
    guard(|| match free_distance_oracle((*code).report.analysis.encoder.matrix(), deg_bound) {
        Ok(d) => {
            *out = d;
            CgcStatus::Ok
        }
        Err(e) => spec_status(&SpecError::Math(e)),
    })
}

/// Number of built-in examples.
#[no_mangle]
pub extern "C" fn cgc_fixture_count() -> usize {
    NAMES.len()
}

/// Writes the name and spec JSON of built-in example `index`.
/// Either out-pointer may be null.
///
/// # Safety
/// Non-null out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cgc_fixture(index: usize, name: *mut *mut c_char, json: *mut *mut c_char) -> CgcStatus {
    guard(|| {
        let Some(fx) = fixtures().into_iter().nth(index) else {
            set_error(format!("fixture index {index} out of range 0..{}", NAMES.len()));
            return CgcStatus::InvalidArgument;
        };
        if !name.is_null() {
            write_string(name, fx.name.to_string());
        }
        if !json.is_null() {
            write_string(json, fx.spec.to_json());
        }
        CgcStatus::Ok
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cgc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty if none. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cgc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
