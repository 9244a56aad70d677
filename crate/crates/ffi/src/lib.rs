//! C ABI over the `hdepth` library.
//!
//! Series and results are opaque handles owned by the caller and released
//! with [`hd_series_free`] / [`hd_result_free`]. Every fallible call returns an
//! [`HdStatus`]; the message of the most recent failure on the calling thread
//! is available from [`hd_last_error`]. Strings returned by the library are
//! freed with [`hd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hdepth::cli::parse::parse_polynomial;
use hdepth::cli::render;
use hdepth::{
    hdepth as compute_hdepth, Depth, HdepthError, HdepthResult, HilbertSeries, IntPolynomial,
    Monomial, MonomialIdeal, MonomialModuleExpr,
};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    NotReduced = 5,
    NegativeMultiplicity = 6,
    NotPositive = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdModuleKind {
    /// R/I
    Quotient = 0,
    /// I
    Ideal = 1,
}

/// Opaque Hilbert series handle.
pub struct HdSeries(HilbertSeries);

/// Opaque result handle: depth value plus trace.
pub struct HdResult {
    numerator: IntPolynomial,
    dim: usize,
    result: HdepthResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let msg = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: HdStatus, message: impl Into<String>) -> HdStatus {
    set_error(message);
    status
}

fn guard(f: impl FnOnce() -> HdStatus) -> HdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(HdStatus::Panic, "internal panic"),
    }
}

fn depth_status(e: &HdepthError) -> HdStatus {
    match e {
        HdepthError::NotReduced { .. } => HdStatus::NotReduced,
        HdepthError::NegativeMultiplicity { .. } => HdStatus::NegativeMultiplicity,
        HdepthError::SeriesNotPositive { .. } => HdStatus::NotPositive,
    }
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> HdStatus {
    *out = Box::into_raw(Box::new(value));
    HdStatus::Ok
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message describing the last failure on this thread, or NULL if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Series `t^offset * (c_0 + c_1 t + ... ) / (1-t)^denom_exp`, stored as given.
///
/// # Safety
/// `coeffs` must point to `len` readable values (it may be NULL when `len`
/// is 0) and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_series_from_coeffs(
    coeffs: *const i64,
    len: usize,
    denom_exp: u32,
    offset: i64,
    out: *mut *mut HdSeries,
) -> HdStatus {
    guard(|| {
        if out.is_null() || (coeffs.is_null() && len > 0) {
            return fail(HdStatus::NullPointer, "null pointer argument");
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(coeffs, len)
        };
        let series = HilbertSeries::new(IntPolynomial::from_i64s(slice), denom_exp as usize, offset);
        write_out(out, HdSeries(series))
    })
}

/// Series with a numerator given as text, e.g. `"2-3*t-2*t^2+2*t^3+4*t^4"`.
///
/// # Safety
/// `numerator` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_series_from_text(
    numerator: *const c_char,
    denom_exp: u32,
    out: *mut *mut HdSeries,
) -> HdStatus {
    guard(|| {
        if numerator.is_null() || out.is_null() {
            return fail(HdStatus::NullPointer, "null pointer argument");
        }
        let Ok(text) = CStr::from_ptr(numerator).to_str() else {
            return fail(HdStatus::InvalidUtf8, "numerator is not UTF-8");
        };
        match parse_polynomial(text) {
            Ok(g) => write_out(out, HdSeries(HilbertSeries::new(g, denom_exp as usize, 0))),
            Err(e) => fail(HdStatus::ParseError, e.to_string()),
        }
    })
}

/// Series of `R^free_rank ⊕ m` in `n_vars` variables, reduced.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_series_free_plus_maximal(
    n_vars: u32,
    free_rank: u64,
    out: *mut *mut HdSeries,
) -> HdStatus {
    guard(|| {
        if out.is_null() {
            return fail(HdStatus::NullPointer, "null pointer argument");
        }
        match MonomialModuleExpr::free_plus_maximal(n_vars as usize, free_rank)
            .and_then(|e| e.series())
        {
            Ok(s) => write_out(out, HdSeries(s)),
            Err(e) => fail(HdStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Reduced series of `R/I` or `I` (plus `R^free_rank` when nonzero), where
/// `I` is generated by `n_gens` monomials whose exponent vectors are stored
/// row by row in `exponents` (`n_gens * n_vars` values).
///
/// # Safety
/// `exponents` must point to `n_gens * n_vars` readable values (or be NULL
/// when `n_gens` is 0) and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_series_monomial_module(
    n_vars: u32,
    exponents: *const u32,
    n_gens: usize,
    kind: HdModuleKind,
    free_rank: u64,
    out: *mut *mut HdSeries,
) -> HdStatus {
    guard(|| {
        if out.is_null() || (exponents.is_null() && n_gens > 0) {
            return fail(HdStatus::NullPointer, "null pointer argument");
        }
        let n = n_vars as usize;
        let Some(total) = n_gens.checked_mul(n) else {
            return fail(HdStatus::InvalidInput, "generator table too large");
        };
        let flat = if total == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(exponents, total)
        };
        let gens = if n == 0 {
            Vec::new()
        } else {
            flat.chunks(n).map(|c| Monomial::new(c.to_vec())).collect()
        };
        let ideal = match MonomialIdeal::new(n, gens) {
            Ok(i) => i,
            Err(e) => return fail(HdStatus::InvalidInput, e.to_string()),
        };
        let base = match kind {
            HdModuleKind::Quotient => MonomialModuleExpr::Quotient(ideal),
            HdModuleKind::Ideal => MonomialModuleExpr::Ideal(ideal),
        };
        let expr = if free_rank == 0 {
            base
        } else {
            MonomialModuleExpr::DirectSum(vec![
                MonomialModuleExpr::FreeTwist {
                    n_vars: n,
                    rank: free_rank,
                    shift: 0,
                },
                base,
            ])
        };
        match expr.series() {
            Ok(s) => write_out(out, HdSeries(s)),
            Err(e) => fail(HdStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Cancels common `(1-t)` factors in place.
///
/// # Safety
/// `series` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_series_reduce(series: *mut HdSeries) -> HdStatus {
    guard(|| {
        let Some(s) = series.as_mut() else {
            return fail(HdStatus::NullPointer, "null series");
        };
        s.0 = s.0.clone().reduce();
        HdStatus::Ok
    })
}

/// Exponent of `(1-t)` in the denominator; the dimension once reduced.
///
/// # Safety
/// `series` must be a live handle or NULL (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn hd_series_denom_exp(series: *const HdSeries) -> u32 {
    series.as_ref().map_or(0, |s| s.0.denom_exp() as u32)
}

/// Numerator as text. Free with [`hd_string_free`]. NULL on a NULL handle.
///
/// # Safety
/// `series` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_series_numerator_text(series: *const HdSeries) -> *mut c_char {
    series
        .as_ref()
        .map_or(ptr::null_mut(), |s| into_c_string(s.0.numerator().to_string()))
}

/// # Safety
/// `series` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hd_series_free(series: *mut HdSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// Hilbert depth of a reduced series.
///
/// # Safety
/// `series` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_hdepth(series: *const HdSeries, out: *mut *mut HdResult) -> HdStatus {
    guard(|| {
        let Some(s) = series.as_ref() else {
            return fail(HdStatus::NullPointer, "null series");
        };
        if out.is_null() {
            return fail(HdStatus::NullPointer, "null output pointer");
        }
        match compute_hdepth(&s.0) {
            Ok(result) => write_out(
                out,
                HdResult {
                    numerator: s.0.numerator().clone(),
                    dim: s.0.denom_exp(),
                    result,
                },
            ),
            Err(e) => fail(depth_status(&e), e.to_string()),
        }
    })
}

/// True for the zero module.
///
/// # Safety
/// `result` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_result_is_infinite(result: *const HdResult) -> bool {
    result
        .as_ref()
        .is_some_and(|r| r.result.value == Depth::Infinite)
}

/// The depth, or `UINT32_MAX` when infinite or for a NULL handle.
///
/// # Safety
/// `result` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_result_value(result: *const HdResult) -> u32 {
    result
        .as_ref()
        .and_then(|r| r.result.value.finite())
        .map_or(u32::MAX, |e| e as u32)
}

/// Number of trace steps.
///
/// # Safety
/// `result` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_result_trace_len(result: *const HdResult) -> usize {
    result.as_ref().map_or(0, |r| r.result.trace.len())
}

/// JSON report, the same document `hdepth num --json` prints.
/// Free with [`hd_string_free`].
///
/// # Safety
/// `result` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_result_to_json(result: *const HdResult) -> *mut c_char {
    result.as_ref().map_or(ptr::null_mut(), |r| {
        into_c_string(render::json_report(&r.numerator, r.dim, &r.result).to_string())
    })
}

/// Verbose text report (`G(t)= ...`, one line per step, `hdepth= ...`).
/// Free with [`hd_string_free`].
///
/// # Safety
/// `result` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn hd_result_to_text(result: *const HdResult) -> *mut c_char {
    result.as_ref().map_or(ptr::null_mut(), |r| {
        into_c_string(render::text_report(&r.numerator, &r.result, true, None))
    })
}

/// # Safety
/// `result` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hd_result_free(result: *mut HdResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// # Safety
/// `s` must be a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
