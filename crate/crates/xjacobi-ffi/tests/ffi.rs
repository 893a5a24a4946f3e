//! The C interface exercised through its exported symbols.

use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use xjacobi_ffi::*;

const D_SPEC: &str = "class = D\na = 0\nb = 0\nK = [1]\nL1 = [0]\nt = [\"1\"]\n";

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { xj_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(xj_last_error()) }.to_str().unwrap().to_string()
}

fn family(spec: &str) -> (XjStatus, *mut XjFamily) {
    let c = CString::new(spec).unwrap();
    let mut fam = ptr::null_mut();
    let s = unsafe { xj_family_new(c.as_ptr(), &mut fam) };
    (s, fam)
}

#[test]
fn builds_and_queries_a_family() {
    let (s, fam) = family(D_SPEC);
    assert_eq!(s, XjStatus::Ok);
    unsafe {
        assert_eq!(xj_family_tau_degree(fam), 2);
        assert!(xj_family_contains(fam, -2));
        assert!(!xj_family_contains(fam, 0));
        let mut out = ptr::null_mut();
        assert_eq!(xj_family_pi(fam, 2, &mut out), XjStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["den"], serde_json::json!(["1", "4", "1"]));
        assert_eq!(xj_family_json(fam, 3, &mut out), XjStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["tau"], serde_json::json!(["1", "4", "1"]));
        assert_eq!(v["pi"].as_array().unwrap().len(), 3);
        assert_eq!(xj_family_pi(fam, 0, &mut out), XjStatus::IndexNotInFamily);
        xj_family_free(fam);
    }
}

#[test]
fn verification_status_follows_the_checks() {
    let (_, fam) = family(D_SPEC);
    let checks = CString::new("eigen,ortho").unwrap();
    let regularity = CString::new("regularity").unwrap();
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(xj_family_verify(fam, checks.as_ptr(), 4, &mut out), XjStatus::Ok);
        assert!(take(out).contains("\"pass\":true"));
        assert_eq!(xj_family_verify(fam, regularity.as_ptr(), 4, ptr::null_mut()), XjStatus::VerifyFailed);
        assert!(last_error().contains("irregular"));
        xj_family_free(fam);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let (s, fam) = family(&D_SPEC.replace("\"1\"", "\"0\""));
    assert_eq!(s, XjStatus::InvalidParams);
    assert!(fam.is_null());
    assert!(last_error().contains("DegenerateDeformation"));
    let (s, _) = family("class = Z\n");
    assert_eq!(s, XjStatus::ParseError);
    let mut fam = ptr::null_mut();
    assert_eq!(unsafe { xj_family_new(ptr::null(), &mut fam) }, XjStatus::NullArgument);
    unsafe {
        assert_eq!(xj_family_tau_degree(ptr::null()), -1);
        xj_family_free(ptr::null_mut());
        xj_string_free(ptr::null_mut());
    }
}

#[test]
fn render_and_decode_roundtrip() {
    let spec = CString::new("class = A\na = 0\nb = 2/5\nK = [2, 4]\nL = [1, 3]\n").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { xj_render(spec.as_ptr(), 8, &mut out) }, XjStatus::Ok);
    let text = CString::new(take(out)).unwrap();
    assert_eq!(unsafe { xj_decode(text.as_ptr(), &mut out) }, XjStatus::Ok);
    let decoded = take(out);
    assert!(decoded.contains("K = [2, 4]") && decoded.contains("L = [1, 3]"), "{decoded}");
    let junk = CString::new("not a diagram").unwrap();
    assert_ne!(unsafe { xj_decode(junk.as_ptr(), &mut out) }, XjStatus::Ok);
}

#[test]
fn generated_header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/xjacobi.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["xj_family_new", "xj_family_free", "xj_family_verify", "xj_last_error", "XJ_STATUS_ILLEGAL_DIAGRAM"] {
        assert!(text.contains(name), "header lacks {name}");
    }
    let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-x", "c", header]).status() else {
        eprintln!("no C compiler found; syntax check skipped");
        return;
    };
    assert!(status.success());
}
