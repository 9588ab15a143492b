//! C ABI for `qtinv`.
//!
//! Every fallible function returns a [`QtinvStatus`]. On failure a message is
//! stored per thread and can be read with [`qtinv_last_error`]. Objects are
//! handed out as opaque pointers and must be released with their `_free`
//! function; strings returned through out-parameters are released with
//! [`qtinv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::sync::Arc;

use num_traits::ToPrimitive;
use qtinv::cli::{self, GridConfig, RunBounds};
use qtinv::engine::{self, Bounds};
use qtinv::gf::{self, FieldSpec};
use qtinv::orbits;
use qtinv::qtcomb::{self, Composition};
use qtinv::series::TPoly;
use qtinv::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtinvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    ProblemTooLarge = 4,
    Arithmetic = 5,
    Overflow = 6,
    Io = 7,
    Internal = 8,
    Panic = 9,
}

/// Finite field `F_q`.
pub struct QtinvField(Arc<FieldSpec>);

/// Polynomial in `t` with integer coefficients.
pub struct QtinvSeries(TPoly);

/// Counts from a grid run.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QtinvRunSummary {
    pub cells: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub cache_hits: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn fail(status: QtinvStatus, msg: impl Into<String>) -> QtinvStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> QtinvStatus {
    match e {
        Error::TooLarge { .. } | Error::ProblemTooLarge(_) | Error::TooManyVectors { .. } | Error::FieldTooLarge { .. } => {
            QtinvStatus::ProblemTooLarge
        }
        Error::DivisionByZeroSeries
        | Error::DegreeExceedsD0 { .. }
        | Error::DivisionNotExact(_)
        | Error::LimitNotFinite
        | Error::NonIntegralLimit { .. } => QtinvStatus::Arithmetic,
        Error::InversesMissing | Error::CacheCorrupt(_) => QtinvStatus::Internal,
        _ => QtinvStatus::InvalidArgument,
    }
}

fn from_err(e: Error) -> QtinvStatus {
    let s = status_of(&e);
    fail(s, e.to_string())
}

/// Runs `f`, converting panics into [`QtinvStatus::Panic`].
fn guard(f: impl FnOnce() -> QtinvStatus) -> QtinvStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(QtinvStatus::Panic, msg)
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, QtinvStatus> {
    if p.is_null() {
        return Err(fail(QtinvStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(QtinvStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn composition(parts: *const u32, len: usize) -> Result<Composition, QtinvStatus> {
    if parts.is_null() && len > 0 {
        return Err(fail(QtinvStatus::NullPointer, "alpha is null"));
    }
    let v = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(parts, len).to_vec() };
    Composition::new(v).map_err(from_err)
}

fn write_out<T>(out: *mut T, v: T) -> QtinvStatus {
    if out.is_null() {
        return fail(QtinvStatus::NullPointer, "output pointer is null");
    }
    unsafe { out.write(v) };
    QtinvStatus::Ok
}

fn write_string(out: *mut *mut c_char, s: String) -> QtinvStatus {
    match CString::new(s) {
        Ok(c) => write_out(out, c.into_raw()),
        Err(_) => fail(QtinvStatus::Internal, "string contains NUL"),
    }
}

fn write_series(out: *mut *mut QtinvSeries, p: TPoly) -> QtinvStatus {
    write_out(out, Box::into_raw(Box::new(QtinvSeries(p))))
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qtinv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failure on this thread, or null. Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn qtinv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtinv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `F_q` for a prime power `q`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qtinv_field_new(q: u64, out: *mut *mut QtinvField) -> QtinvStatus {
    guard(|| {
        let f = try_ffi!(gf::field_of_order(q).map_err(from_err));
        write_out(out, Box::into_raw(Box::new(QtinvField(f))))
    })
}

/// # Safety
/// `f` must be null or a field from [`qtinv_field_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtinv_field_free(f: *mut QtinvField) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

unsafe fn field_ref<'a>(f: *const QtinvField) -> Result<&'a FieldSpec, QtinvStatus> {
    f.as_ref().map(|f| &*f.0).ok_or_else(|| fail(QtinvStatus::NullPointer, "field is null"))
}

/// Field order; 0 if `f` is null.
///
/// # Safety
/// `f` must be null or a live field handle.
#[no_mangle]
pub unsafe extern "C" fn qtinv_field_order(f: *const QtinvField) -> u32 {
    f.as_ref().map_or(0, |f| f.0.q())
}

/// Elements are the integers `0..q`; `0` and `1` are the field's zero and one.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtinvFieldOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
    Div = 3,
}

/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qtinv_field_op(f: *const QtinvField, op: QtinvFieldOp, a: u32, b: u32, out: *mut u32) -> QtinvStatus {
    guard(|| {
        let f = try_ffi!(field_ref(f));
        if a >= f.q() || b >= f.q() {
            return fail(QtinvStatus::InvalidArgument, format!("element out of range for F_{}", f.q()));
        }
        let v = match op {
            QtinvFieldOp::Add => f.add(a, b),
            QtinvFieldOp::Sub => f.sub(a, b),
            QtinvFieldOp::Mul => f.mul(a, b),
            QtinvFieldOp::Div => match f.inv(b) {
                Some(i) => f.mul(a, i),
                None => return fail(QtinvStatus::Arithmetic, "division by zero"),
            },
        };
        write_out(out, v)
    })
}

/// Closed-form orbit polynomial `C_alpha(q, m; t)`.
///
/// # Safety
/// `alpha` must point to `alpha_len` parts; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qtinv_closed_form(
    q: u64,
    m: u32,
    alpha: *const u32,
    alpha_len: usize,
    out: *mut *mut QtinvSeries,
) -> QtinvStatus {
    guard(|| {
        try_ffi!(gf::field_of_order(q).map_err(from_err));
        let a = try_ffi!(composition(alpha, alpha_len));
        write_series(out, qtcomb::parabolic_C(q, m, &a))
    })
}

/// Computes the Hilbert series of the invariants of `P_alpha` on `F_q[x]/(x_i^{q^m})`.
/// A `basis_bound` of 0 selects the default.
///
/// # Safety
/// `alpha` must point to `alpha_len` parts; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qtinv_hilb_fixed(
    q: u64,
    m: u32,
    alpha: *const u32,
    alpha_len: usize,
    basis_bound: u64,
    out: *mut *mut QtinvSeries,
) -> QtinvStatus {
    guard(|| {
        let a = try_ffi!(composition(alpha, alpha_len));
        let bounds = bounds_with(basis_bound);
        let r = try_ffi!(engine::hilb_fixed_Q(q, a.n(), m, &a, &bounds).map_err(from_err));
        write_series(out, r.series)
    })
}

/// Computes the cofixed Hilbert series of `P_alpha` on `F_q[x]` through degree `max_degree`.
/// A `basis_bound` of 0 selects the default.
///
/// # Safety
/// `alpha` must point to `alpha_len` parts; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qtinv_hilb_cofixed(
    q: u64,
    alpha: *const u32,
    alpha_len: usize,
    max_degree: u32,
    basis_bound: u64,
    out: *mut *mut QtinvSeries,
) -> QtinvStatus {
    guard(|| {
        let a = try_ffi!(composition(alpha, alpha_len));
        let bounds = bounds_with(basis_bound);
        let r = try_ffi!(engine::hilb_cofixed_S(q, a.n(), &a, max_degree, &bounds).map_err(from_err));
        write_series(out, r.series)
    })
}

fn bounds_with(basis_bound: u64) -> Bounds {
    let mut b = Bounds::default();
    if basis_bound != 0 {
        b.basis_bound = basis_bound;
    }
    b
}

/// Counts `P_alpha`-orbits on `F_{q^m}^n` by enumeration. An `enum_bound` of 0 selects the default.
///
/// # Safety
/// `alpha` must point to `alpha_len` parts; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qtinv_orbit_count(
    q: u64,
    m: u32,
    alpha: *const u32,
    alpha_len: usize,
    enum_bound: u64,
    out: *mut u64,
) -> QtinvStatus {
    guard(|| {
        let a = try_ffi!(composition(alpha, alpha_len));
        let bound = if enum_bound == 0 { Bounds::default().enum_bound } else { enum_bound };
        let c = try_ffi!(orbits::orbit_count(q, a.n(), m, &a, bound).map_err(from_err));
        match c.enumerated.to_u64() {
            Some(v) => write_out(out, v),
            None => fail(QtinvStatus::Overflow, "orbit count exceeds u64"),
        }
    })
}

/// # Safety
/// `s` must be null or a live series handle.
#[no_mangle]
pub unsafe extern "C" fn qtinv_series_free(s: *mut QtinvSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

unsafe fn series_ref<'a>(s: *const QtinvSeries) -> Result<&'a TPoly, QtinvStatus> {
    s.as_ref().map(|s| &s.0).ok_or_else(|| fail(QtinvStatus::NullPointer, "series is null"))
}

/// Degree of the series; -1 for the zero polynomial or a null handle.
///
/// # Safety
/// `s` must be null or a live series handle.
#[no_mangle]
pub unsafe extern "C" fn qtinv_series_degree(s: *const QtinvSeries) -> i64 {
    s.as_ref().and_then(|s| s.0.degree()).map_or(-1, |d| d as i64)
}

/// Coefficient of `t^k`; [`QtinvStatus::Overflow`] if it does not fit in `i64`.
///
/// # Safety
/// `s` must be a live series handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qtinv_series_coeff(s: *const QtinvSeries, k: u64, out: *mut i64) -> QtinvStatus {
    guard(|| {
        let p = try_ffi!(series_ref(s));
        match p.coeff(k).to_i64() {
            Some(v) => write_out(out, v),
            None => fail(QtinvStatus::Overflow, format!("coefficient of t^{k} exceeds i64")),
        }
    })
}

/// Decimal text such as `1 + t^6 + t^8`; free with [`qtinv_string_free`].
///
/// # Safety
/// `s` must be a live series handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qtinv_series_to_string(s: *const QtinvSeries, out: *mut *mut c_char) -> QtinvStatus {
    guard(|| {
        let p = try_ffi!(series_ref(s));
        write_string(out, p.to_string())
    })
}

/// Same as the `show` subcommand: `object` names a closed form and `params`
/// holds `key=value` strings.
///
/// # Safety
/// `object` must be a NUL-terminated string, `params` must point to
/// `params_len` such strings, and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qtinv_show(
    object: *const c_char,
    params: *const *const c_char,
    params_len: usize,
    out: *mut *mut c_char,
) -> QtinvStatus {
    guard(|| {
        let object = try_ffi!(str_arg(object, "object"));
        if params.is_null() && params_len > 0 {
            return fail(QtinvStatus::NullPointer, "params is null");
        }
        let mut args = Vec::with_capacity(params_len);
        for i in 0..params_len {
            args.push(try_ffi!(str_arg(*params.add(i), "param")).to_string());
        }
        let s = try_ffi!(cli::show(object, &args).map_err(from_err));
        write_string(out, s)
    })
}

/// Runs a JSON grid config and writes reports under `output_dir` (or the
/// directory named in the config when null). Failing checks are counted in
/// `summary`, not reported as an error status.
///
/// # Safety
/// `config_json` must be a NUL-terminated string, `output_dir` null or a
/// NUL-terminated string, and `summary` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qtinv_run_grid(
    config_json: *const c_char,
    output_dir: *const c_char,
    summary: *mut QtinvRunSummary,
) -> QtinvStatus {
    guard(|| {
        let text = try_ffi!(str_arg(config_json, "config_json"));
        let dir = if output_dir.is_null() {
            None
        } else {
            Some(PathBuf::from(try_ffi!(str_arg(output_dir, "output_dir"))))
        };
        if summary.is_null() {
            return fail(QtinvStatus::NullPointer, "summary is null");
        }
        let cfg = try_ffi!(GridConfig::from_json(text).map_err(from_err));
        let dir = dir.or_else(|| cfg.output_dir.clone()).unwrap_or_else(|| PathBuf::from("qtinv-out"));
        let bounds = RunBounds::from_config(&cfg.bounds);
        if let Err(e) = std::fs::create_dir_all(&dir) {
            return fail(QtinvStatus::Io, format!("cannot create {}: {e}", dir.display()));
        }
        let out = try_ffi!(cli::run_grid(&cfg, &bounds, &dir).map_err(from_err));
        let s = &out.summary;
        write_out(
            summary,
            QtinvRunSummary {
                cells: s.cells as u64,
                passed: s.passed as u64,
                failed: s.failed as u64,
                skipped: s.skipped as u64,
                cache_hits: s.cache_hits as u64,
            },
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_mapping() {
        assert_eq!(status_of(&Error::NonPrime(6)), QtinvStatus::InvalidArgument);
        assert_eq!(status_of(&Error::TooManyVectors { count: 9, bound: 1 }), QtinvStatus::ProblemTooLarge);
        assert_eq!(status_of(&Error::DivisionByZeroSeries), QtinvStatus::Arithmetic);
        assert_eq!(status_of(&Error::InversesMissing), QtinvStatus::Internal);
    }

    #[test]
    fn panics_become_status() {
        assert_eq!(guard(|| panic!("boom")), QtinvStatus::Panic);
        let msg = unsafe { CStr::from_ptr(qtinv_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "boom");
    }
}
