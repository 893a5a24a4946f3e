//! C interface to the xjacobi engine.
//!
//! Families are opaque handles created from specification text and released
//! with [`xj_family_free`]. Every fallible function returns an [`XjStatus`];
//! on failure [`xj_last_error`] describes the error for the calling thread.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with [`xj_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use xjacobi::cli::{self, CliError};
use xjacobi::construct::{build, ExceptionalFamily};
use xjacobi::verify::run_checks;

/// Result of an interface call. Codes 1 to 5 match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XjStatus {
    Ok = 0,
    VerifyFailed = 1,
    ParseError = 2,
    InvalidParams = 3,
    IllegalStep = 4,
    IllegalDiagram = 5,
    NullArgument = 6,
    InvalidUtf8 = 7,
    IndexNotInFamily = 8,
    Internal = 9,
}

/// A constructed exceptional family.
pub struct XjFamily {
    inner: ExceptionalFamily,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(code: i32) -> XjStatus {
    match code {
        1 => XjStatus::VerifyFailed,
        2 => XjStatus::ParseError,
        3 => XjStatus::InvalidParams,
        4 => XjStatus::IllegalStep,
        5 => XjStatus::IllegalDiagram,
        _ => XjStatus::Internal,
    }
}

fn fail(status: XjStatus, msg: &str) -> XjStatus {
    set_error(msg);
    status
}

fn from_cli(e: CliError) -> XjStatus {
    fail(status_of(e.code), &e.message)
}

/// Run `f`, turning a panic into [`XjStatus::Internal`].
fn guard(f: impl FnOnce() -> XjStatus) -> XjStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(XjStatus::Internal, "internal panic"),
    }
}

/// # Safety
/// `s` must be null or a valid nul-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, XjStatus> {
    if s.is_null() {
        return Err(fail(XjStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(XjStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

/// # Safety
/// `out` must be null or valid for writing one pointer.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> XjStatus {
    if out.is_null() {
        return fail(XjStatus::NullArgument, "null output pointer");
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            XjStatus::Ok
        }
        Err(_) => fail(XjStatus::Internal, "output contains a nul byte"),
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message of the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn xj_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn xj_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a family from specification text (`key = value` lines).
///
/// # Safety
/// `spec` must be a valid nul-terminated string and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn xj_family_new(spec: *const c_char, out: *mut *mut XjFamily) -> XjStatus {
    guard(|| {
        if out.is_null() {
            return fail(XjStatus::NullArgument, "null output pointer");
        }
        *out = ptr::null_mut();
        let text = tri!(read_str(spec));
        let parsed = tri!(cli::parse_spec(text).map_err(from_cli));
        let fam = tri!(build(&parsed.params).map_err(|e| from_cli(e.into())));
        *out = Box::into_raw(Box::new(XjFamily { inner: fam }));
        XjStatus::Ok
    })
}

/// Release a family. Null is ignored.
///
/// # Safety
/// `fam` must be null or a handle from [`xj_family_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn xj_family_free(fam: *mut XjFamily) {
    if !fam.is_null() {
        drop(Box::from_raw(fam));
    }
}

/// Degree of `tau`, or -1 for a null handle.
///
/// # Safety
/// `fam` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn xj_family_tau_degree(fam: *const XjFamily) -> i64 {
    match fam.as_ref() {
        Some(f) => f.inner.tau().deg_i64(),
        None => -1,
    }
}

/// Whether index `i` belongs to the family's spectrum; false for null.
///
/// # Safety
/// `fam` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn xj_family_contains(fam: *const XjFamily, i: i64) -> bool {
    fam.as_ref().is_some_and(|f| f.inner.contains(i))
}

/// The construction document (operator, index sets, eigenfunctions and
/// norms for the first `window` indices) as JSON.
///
/// # Safety
/// `fam` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn xj_family_json(fam: *const XjFamily, window: usize, out: *mut *mut c_char) -> XjStatus {
    guard(|| {
        let Some(f) = fam.as_ref() else {
            return fail(XjStatus::NullArgument, "null family");
        };
        let doc = tri!(cli::family_json(&f.inner, window).map_err(from_cli));
        write_string(out, doc.to_string())
    })
}

/// The eigenfunction `pi_i` as JSON `{"i": i, "num": [...], "den": [...]}`
/// with ascending coefficients written as `"p/q"` strings.
///
/// # Safety
/// `fam` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn xj_family_pi(fam: *const XjFamily, i: i64, out: *mut *mut c_char) -> XjStatus {
    guard(|| {
        let Some(f) = fam.as_ref() else {
            return fail(XjStatus::NullArgument, "null family");
        };
        if !f.inner.contains(i) {
            return fail(XjStatus::IndexNotInFamily, &format!("index {i} is not in the spectrum"));
        }
        let pi = tri!(f.inner.pi(i).map_err(|e| from_cli(e.into())));
        let doc = serde_json::json!({"i": i, "num": cli::poly_json(pi.num()), "den": cli::poly_json(pi.den())});
        write_string(out, doc.to_string())
    })
}

/// Run comma-separated checks (empty for the default set) over the first
/// `window` indices. Writes a JSON report to `out` when it is not null and
/// returns [`XjStatus::VerifyFailed`] if any check fails.
///
/// # Safety
/// `fam` must be a live handle, `checks` a valid string, and `out` null or
/// valid for writing.
#[no_mangle]
pub unsafe extern "C" fn xj_family_verify(fam: *const XjFamily, checks: *const c_char, window: usize, out: *mut *mut c_char) -> XjStatus {
    guard(|| {
        let Some(f) = fam.as_ref() else {
            return fail(XjStatus::NullArgument, "null family");
        };
        let list = tri!(read_str(checks));
        let names = tri!(cli::parse_checks(list).map_err(from_cli));
        let names: Vec<&str> = if names.is_empty() {
            cli::DEFAULT_CHECKS.to_vec()
        } else {
            names.iter().map(String::as_str).collect()
        };
        let results = run_checks(&f.inner, window, &names);
        let all = results.iter().all(|(_, v)| v.pass);
        if !out.is_null() {
            let items: Vec<_> = results
                .iter()
                .map(|(n, v)| serde_json::json!({"check": n, "pass": v.pass, "witness": v.witness}))
                .collect();
            let s = write_string(out, serde_json::json!({"checks": items, "pass": all}).to_string());
            if s != XjStatus::Ok {
                return s;
            }
        }
        if all {
            XjStatus::Ok
        } else {
            let first = results.iter().find(|(_, v)| !v.pass).expect("a failed check");
            fail(XjStatus::VerifyFailed, &format!("{}: {}", first.0, first.1.witness))
        }
    })
}

/// Render the spectral diagram of a specification.
///
/// # Safety
/// `spec` must be a valid string and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn xj_render(spec: *const c_char, window: usize, out: *mut *mut c_char) -> XjStatus {
    guard(|| {
        let text = tri!(read_str(spec));
        let s = tri!(cli::cmd_render(text, Some(window)).map_err(from_cli));
        write_string(out, s)
    })
}

/// Decode a rendered diagram into a canonical specification.
///
/// # Safety
/// `diagram` must be a valid string and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn xj_decode(diagram: *const c_char, out: *mut *mut c_char) -> XjStatus {
    guard(|| {
        let text = tri!(read_str(diagram));
        let s = tri!(cli::cmd_decode(text).map_err(from_cli));
        write_string(out, s)
    })
}
