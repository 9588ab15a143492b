use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use qtinv_ffi::*;

fn series_text(s: *const QtinvSeries) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qtinv_series_to_string(s, &mut out) }, QtinvStatus::Ok);
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
    unsafe { qtinv_string_free(out) };
    text
}

fn last_error() -> String {
    let p = qtinv_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn fixed_series_matches_closed_form() {
    for (q, m, alpha) in [(3u64, 2u32, vec![2u32]), (2, 2, vec![1, 1]), (4, 1, vec![2, 1])] {
        let (mut c, mut h) = (ptr::null_mut(), ptr::null_mut());
        unsafe {
            assert_eq!(qtinv_closed_form(q, m, alpha.as_ptr(), alpha.len(), &mut c), QtinvStatus::Ok);
            assert_eq!(qtinv_hilb_fixed(q, m, alpha.as_ptr(), alpha.len(), 0, &mut h), QtinvStatus::Ok);
        }
        assert_eq!(series_text(c), series_text(h));
        unsafe {
            qtinv_series_free(c);
            qtinv_series_free(h);
        }
    }
}

#[test]
fn coefficients_and_degree() {
    let alpha = [2u32];
    let mut h = ptr::null_mut();
    unsafe { assert_eq!(qtinv_hilb_fixed(3, 2, alpha.as_ptr(), 1, 0, &mut h), QtinvStatus::Ok) };
    assert_eq!(unsafe { qtinv_series_degree(h) }, 16);
    let coeffs: Vec<i64> = (0..=16)
        .map(|k| {
            let mut c = -7;
            assert_eq!(unsafe { qtinv_series_coeff(h, k, &mut c) }, QtinvStatus::Ok);
            c
        })
        .collect();
    let ones: Vec<usize> = coeffs.iter().enumerate().filter(|(_, &c)| c == 1).map(|(k, _)| k).collect();
    assert_eq!(ones, [0, 6, 8, 10, 12, 16]);
    assert_eq!(coeffs.iter().sum::<i64>(), 6);
    unsafe { qtinv_series_free(h) };
    assert_eq!(unsafe { qtinv_series_degree(ptr::null()) }, -1);
}

#[test]
fn cofixed_series_low_degrees() {
    let alpha = [1u32];
    let mut h = ptr::null_mut();
    unsafe { assert_eq!(qtinv_hilb_cofixed(3, alpha.as_ptr(), 1, 4, 0, &mut h), QtinvStatus::Ok) };
    // One variable over F_3: the torus {1, 2} fixes x^d for even d only.
    assert_eq!(series_text(h), "1 + t^2 + t^4");
    unsafe { qtinv_series_free(h) };
}

#[test]
fn error_codes_and_messages() {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { qtinv_field_new(12, &mut f) }, QtinvStatus::InvalidArgument);
    assert!(last_error().contains("12"));
    assert_eq!(unsafe { qtinv_field_new(7, ptr::null_mut()) }, QtinvStatus::NullPointer);

    let alpha = [4u32];
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { qtinv_hilb_fixed(2, 4, alpha.as_ptr(), 1, 1024, &mut h) }, QtinvStatus::ProblemTooLarge);
    assert!(h.is_null());
    assert_eq!(unsafe { qtinv_closed_form(3, 1, ptr::null(), 2, &mut h) }, QtinvStatus::NullPointer);
    let bad = [0u32];
    assert_eq!(unsafe { qtinv_closed_form(3, 1, bad.as_ptr(), 1, &mut h) }, QtinvStatus::InvalidArgument);

    let mut n = 0u64;
    assert_eq!(unsafe { qtinv_orbit_count(2, 2, alpha.as_ptr(), 1, 16, &mut n) }, QtinvStatus::ProblemTooLarge);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qtinv_series_to_string(ptr::null(), &mut out) }, QtinvStatus::NullPointer);

    let ok = [1u32];
    assert_eq!(unsafe { qtinv_orbit_count(2, 1, ok.as_ptr(), 1, 0, &mut n) }, QtinvStatus::Ok);
    assert_eq!(n, 2);
    assert!(qtinv_last_error().is_null());
}

#[test]
fn field_operations() {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { qtinv_field_new(9, &mut f) }, QtinvStatus::Ok);
    assert_eq!(unsafe { qtinv_field_order(f) }, 9);
    let op = |o, a, b| {
        let mut x = 0;
        let s = unsafe { qtinv_field_op(f, o, a, b, &mut x) };
        (s, x)
    };
    for a in 1..9 {
        let (s, inv) = op(QtinvFieldOp::Div, 1, a);
        assert_eq!(s, QtinvStatus::Ok);
        assert_eq!(op(QtinvFieldOp::Mul, a, inv), (QtinvStatus::Ok, 1));
        let (_, d) = op(QtinvFieldOp::Sub, 0, a);
        assert_eq!(op(QtinvFieldOp::Add, a, d), (QtinvStatus::Ok, 0));
    }
    assert_eq!(op(QtinvFieldOp::Div, 2, 0).0, QtinvStatus::Arithmetic);
    assert_eq!(op(QtinvFieldOp::Add, 9, 0).0, QtinvStatus::InvalidArgument);
    unsafe { qtinv_field_free(f) };
}

#[test]
fn show_and_run_grid() {
    let object = CString::new("C").unwrap();
    let params: Vec<CString> = ["q=3", "n=2", "m=2"].iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs: Vec<_> = params.iter().map(|p| p.as_ptr()).collect();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qtinv_show(object.as_ptr(), ptrs.as_ptr(), ptrs.len(), &mut out) }, QtinvStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(out) }.to_str().unwrap(), "1 + t^6 + t^8 + t^10 + t^12 + t^16");
    unsafe { qtinv_string_free(out) };
    let unknown = CString::new("nope").unwrap();
    assert_eq!(unsafe { qtinv_show(unknown.as_ptr(), ptr::null(), 0, &mut out) }, QtinvStatus::InvalidArgument);

    let tmp = tempfile::TempDir::new().unwrap();
    let dir = CString::new(tmp.path().to_str().unwrap()).unwrap();
    let cfg = CString::new(r#"{"cells": [[3,1,2,2,[2]], [2,1,2,1,[1,1]]], "checks": ["conj1","orbits"]}"#).unwrap();
    let mut s = QtinvRunSummary::default();
    assert_eq!(unsafe { qtinv_run_grid(cfg.as_ptr(), dir.as_ptr(), &mut s) }, QtinvStatus::Ok);
    assert_eq!((s.cells, s.passed, s.failed, s.skipped, s.cache_hits), (2, 4, 0, 0, 0));
    assert!(tmp.path().join("cells/q3_n2_m2_a2.json").exists());
    assert_eq!(unsafe { qtinv_run_grid(cfg.as_ptr(), dir.as_ptr(), &mut s) }, QtinvStatus::Ok);
    assert_eq!(s.cache_hits, 4);

    let bad = CString::new("{not json").unwrap();
    assert_eq!(unsafe { qtinv_run_grid(bad.as_ptr(), dir.as_ptr(), &mut s) }, QtinvStatus::InvalidArgument);
    assert_eq!(unsafe { qtinv_run_grid(ptr::null(), dir.as_ptr(), &mut s) }, QtinvStatus::NullPointer);
}

#[test]
fn version_is_package_version() {
    let v = unsafe { CStr::from_ptr(qtinv_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Builds and runs a C program against the generated header and the static library.
#[test]
fn c_program_links_against_header() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include/qtinv.h");
    assert!(header.exists(), "header not generated");
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libqtinv_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let tmp = tempfile::TempDir::new().unwrap();
    let exe = tmp.path().join("smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap_or_else(|e| panic!("cannot run {cc}: {e}"));
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
