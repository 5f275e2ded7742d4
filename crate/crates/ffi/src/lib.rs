//! C ABI over `polybound`.
//!
//! Polynomials cross the boundary as opaque `PbPolynomial` handles. Every
//! fallible call returns a `PbStatus` and writes its result through an out
//! pointer; on failure `pb_last_error` describes what went wrong on the
//! calling thread. Panics are caught and reported as `PB_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polybound::bounds::{crossover_threshold, optimal_p_constant, thm1_asym, thm1_sym};
use polybound::kernel::{bp_constant, ip_value};
use polybound::{bound_report, lp_norm, mahler_roots, roots, sup_norm, Complex, Error, Polynomial, QuadratureConfig};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    Range = 4,
    NumericalFailure = 5,
    Panic = 6,
}

/// Opaque polynomial handle. Create with `pb_polynomial_parse` or
/// `pb_polynomial_new`, release with `pb_polynomial_free`.
pub struct PbPolynomial {
    inner: Polynomial,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PbStatus {
    match e {
        Error::Parse { .. } => PbStatus::Parse,
        Error::ExponentRange { .. }
        | Error::Domain { .. }
        | Error::DegreeTooLarge { .. }
        | Error::SubsetIndex { .. }
        | Error::ScanCap { .. } => PbStatus::Range,
        Error::EmptyInput
        | Error::ZeroPolynomial
        | Error::NonFinite(_)
        | Error::ConstantPolynomial(_)
        | Error::DegenerateBinomial
        | Error::InadmissiblePair { .. }
        | Error::RootAtOrigin
        | Error::InvalidConfig(_)
        | Error::Output(_) => PbStatus::InvalidInput,
        Error::RootFindingFailed { .. }
        | Error::SingularIntegrand { .. }
        | Error::KernelTooPeaked(_)
        | Error::FilterMismatch(_)
        | Error::QuadratureNotConverged { .. }
        | Error::WitnessSearchExhausted(_) => PbStatus::NumericalFailure,
    }
}

/// Runs `f`, converting errors and panics into a status code.
fn guard<F: FnOnce() -> Result<(), PbStatus>>(f: F) -> PbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PbStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("panic inside polybound".to_string());
            PbStatus::Panic
        }
    }
}

fn fail(e: Error) -> PbStatus {
    let status = status_of(&e);
    set_last_error(e.to_string());
    status
}

fn null(what: &str) -> PbStatus {
    set_last_error(format!("null pointer: {what}"));
    PbStatus::NullPointer
}

unsafe fn handle<'a>(p: *const PbPolynomial) -> Result<&'a Polynomial, PbStatus> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| null("polynomial handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), PbStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

fn into_handle(inner: Polynomial) -> *mut PbPolynomial {
    Box::into_raw(Box::new(PbPolynomial { inner }))
}

/// Parses `"90,-101,18"`-style ascending coefficients (or a JSON array of
/// `[re, im]` pairs) into a new handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pb_polynomial_parse(text: *const c_char, out: *mut *mut PbPolynomial) -> PbStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| fail(Error::Parse { position: e.valid_up_to(), message: "invalid UTF-8".into() }))?;
        let f: Polynomial = s.parse().map_err(fail)?;
        write_out(out, into_handle(f))
    })
}

/// Builds a polynomial from `len` ascending coefficients. `im` may be null
/// for real coefficients.
///
/// # Safety
/// `re` (and `im` if non-null) must point to `len` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn pb_polynomial_new(
    re: *const f64,
    im: *const f64,
    len: usize,
    out: *mut *mut PbPolynomial,
) -> PbStatus {
    guard(|| {
        if re.is_null() {
            return Err(null("re"));
        }
        let re = std::slice::from_raw_parts(re, len);
        let coeffs: Vec<Complex> = if im.is_null() {
            re.iter().map(|&x| Complex::new(x, 0.0)).collect()
        } else {
            let im = std::slice::from_raw_parts(im, len);
            re.iter().zip(im).map(|(&a, &b)| Complex::new(a, b)).collect()
        };
        let f = Polynomial::new(&coeffs).map_err(fail)?;
        write_out(out, into_handle(f))
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `poly` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pb_polynomial_free(poly: *mut PbPolynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Total degree, counting any `z^k` factor.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pb_polynomial_degree(poly: *const PbPolynomial, out: *mut usize) -> PbStatus {
    guard(|| write_out(out, handle(poly)?.degree()))
}

/// `‖F‖_p` on the unit circle with default quadrature; `p` may be `INFINITY`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pb_lp_norm(poly: *const PbPolynomial, p: f64, out: *mut f64) -> PbStatus {
    guard(|| {
        let v = lp_norm(handle(poly)?, p, &QuadratureConfig::default()).map_err(fail)?;
        write_out(out, v.value)
    })
}

/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pb_sup_norm(poly: *const PbPolynomial, out: *mut f64) -> PbStatus {
    guard(|| write_out(out, sup_norm(handle(poly)?)))
}

/// Mahler measure from the roots.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pb_mahler_measure(poly: *const PbPolynomial, out: *mut f64) -> PbStatus {
    guard(|| {
        let g = handle(poly)?.stripped();
        let m = if g.is_monomial() {
            g.leading().norm()
        } else {
            mahler_roots(&roots(&g).map_err(fail)?)
        };
        write_out(out, m)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pb_bp_constant(p: f64, out: *mut f64) -> PbStatus {
    guard(|| write_out(out, bp_constant(p).map_err(fail)?))
}

/// `I_p(r)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pb_ip_value(p: f64, r: f64, out: *mut f64) -> PbStatus {
    guard(|| write_out(out, ip_value(p, r).map_err(fail)?.0))
}

unsafe fn root_bound(
    poly: *const PbPolynomial,
    p: f64,
    out: *mut f64,
    bound: fn(&polybound::RootDecomposition, f64) -> polybound::Result<f64>,
) -> PbStatus {
    guard(|| {
        let g = handle(poly)?.stripped();
        let d = roots(&g).map_err(fail)?;
        write_out(out, bound(&d, p).map_err(fail)?)
    })
}

/// Symmetric root-product bound, `1 <= p <= 2`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pb_thm1_sym(poly: *const PbPolynomial, p: f64, out: *mut f64) -> PbStatus {
    root_bound(poly, p, out, thm1_sym)
}

/// Asymmetric Mahler-measure bound, `p >= 1`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pb_thm1_asym(poly: *const PbPolynomial, p: f64, out: *mut f64) -> PbStatus {
    root_bound(poly, p, out, thm1_asym)
}

/// The full bound report as JSON. Free the string with `pb_string_free`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pb_bound_report_json(poly: *const PbPolynomial, p: f64, out: *mut *mut c_char) -> PbStatus {
    guard(|| {
        let report = bound_report(handle(poly)?, p, &QuadratureConfig::default()).map_err(fail)?;
        let json = CString::new(report.to_json()).map_err(|e| fail(Error::Output(e.to_string())))?;
        write_out(out, json.into_raw())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Value of `M(F)² / |a_0 a_N|` above which the asymmetric bound wins at `p = 1`.
#[no_mangle]
pub extern "C" fn pb_crossover_threshold() -> f64 {
    crossover_threshold()
}

/// Positive root of `2c² = (1 + c²) log(1 + c²)`.
#[no_mangle]
pub extern "C" fn pb_optimal_p_constant() -> f64 {
    optimal_p_constant()
}
