//! C ABI for `qchar`.
//!
//! Every fallible call returns a [`QcStatus`] and writes its result through
//! an out-pointer. On failure a message is kept per thread and can be read
//! with [`qc_last_error_message`]. Objects are opaque handles released with
//! the matching `*_free` function; strings returned by the library are
//! released with [`qc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qchar::characters::{kr_character, simple_character, standard_character, standard_character_geometric};
use qchar::decomp::{decomposition_row_with, ic_stalk_poly, multiplicity_closed, MultiplicityQuery, OracleOptions, StalkQuery};
use qchar::io::{parse_drinfeld, row_to_entries};
use qchar::polyring::{gauss_binom_t, LaurentPoly, TPoly};
use qchar::qstrings::DrinfeldData;
use qchar::quiver::stratum;
use qchar::verify::cap_from_env;
use qchar::Error;

/// Result code of every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Overflow = 5,
    CapExceeded = 6,
    NotSparse = 7,
    Consistency = 8,
    Panic = 9,
}

/// Outcome of comparing the closed formula with the elimination oracle.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcVerdict {
    Agree = 0,
    Disagree = 1,
    NotApplicable = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QcMultiplicity {
    /// Whether `closed` holds a value (sparse or zero-multiplicity data).
    pub closed_applicable: bool,
    pub closed: u64,
    pub oracle: u64,
    pub verdict: QcVerdict,
}

/// Opaque multiset of spectral exponents.
pub struct QcDrinfeld(DrinfeldData);

/// Opaque Laurent polynomial in the `Y_k`.
pub struct QcPoly(LaurentPoly);

/// Opaque polynomial in `t`.
pub struct QcTPoly(TPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QcStatus {
    match e {
        Error::Overflow(_) => QcStatus::Overflow,
        Error::Parse { .. } => QcStatus::Parse,
        Error::CapExceeded { .. } => QcStatus::CapExceeded,
        Error::NotSparse(_) => QcStatus::NotSparse,
        Error::Consistency(_) => QcStatus::Consistency,
        _ => QcStatus::InvalidArgument,
    }
}

struct Fail(QcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(QcStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> QcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            QcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            QcStatus::Panic
        }
    }
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Fail(QcStatus::InvalidArgument, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn slice<'a>(p: *const u64, len: usize, what: &str) -> Result<&'a [u64], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn oracle_options() -> Result<OracleOptions, Fail> {
    let mut opts = OracleOptions::default();
    if let Some(cap) = cap_from_env()? {
        opts.cap = cap;
    }
    Ok(opts)
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn qc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `k:m,k:m,...` (a bare `k` means multiplicity one).
///
/// # Safety
/// `input` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_drinfeld_parse(input: *const c_char, out: *mut *mut QcDrinfeld) -> QcStatus {
    guard(|| {
        if input.is_null() {
            return Err(null("input"));
        }
        let s = CStr::from_ptr(input)
            .to_str()
            .map_err(|_| Fail(QcStatus::InvalidUtf8, "input is not UTF-8".into()))?;
        put(out, QcDrinfeld(parse_drinfeld(s)?))
    })
}

/// # Safety
/// `d` must come from [`qc_drinfeld_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qc_drinfeld_free(d: *mut QcDrinfeld) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Total multiplicity; 0 for a null handle.
///
/// # Safety
/// `d` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qc_drinfeld_total(d: *const QcDrinfeld) -> u64 {
    d.as_ref().map_or(0, |d| d.0.total())
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_drinfeld_to_string(d: *const QcDrinfeld, out: *mut *mut c_char) -> QcStatus {
    guard(|| put_string(out, get(d, "drinfeld")?.0.to_string()))
}

/// q-character of the KR module on the string `k, ..., k + n - 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_kr_character(n: u32, k: i64, out: *mut *mut QcPoly) -> QcStatus {
    guard(|| put(out, QcPoly(kr_character(n, k)?)))
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_standard_character(d: *const QcDrinfeld, geometric: bool, out: *mut *mut QcPoly) -> QcStatus {
    guard(|| {
        let d = &get(d, "drinfeld")?.0;
        let ch = if geometric { standard_character_geometric(d)? } else { standard_character(d)? };
        put(out, QcPoly(ch))
    })
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_simple_character(d: *const QcDrinfeld, out: *mut *mut QcPoly) -> QcStatus {
    guard(|| put(out, QcPoly(simple_character(&get(d, "drinfeld")?.0)?)))
}

/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qc_poly_free(p: *mut QcPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of nonzero terms; 0 for a null handle.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qc_poly_num_terms(p: *const QcPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Sum of coefficients, i.e. the dimension of the module.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_poly_dimension(p: *const QcPoly, out: *mut i64) -> QcStatus {
    guard(|| {
        let dim = get(p, "poly")?.0.dimension();
        let dim = i64::try_from(dim).map_err(|_| Fail(QcStatus::Overflow, "dimension exceeds int64".into()))?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = dim;
        Ok(())
    })
}

/// Text form such as `Y[0]*Y[1] + 1`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_poly_to_string(p: *const QcPoly, out: *mut *mut c_char) -> QcStatus {
    guard(|| put_string(out, get(p, "poly")?.0.to_string()))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_poly_to_json(p: *const QcPoly, out: *mut *mut c_char) -> QcStatus {
    guard(|| {
        let json = serde_json::to_string(&get(p, "poly")?.0).map_err(|e| Fail(QcStatus::Consistency, e.to_string()))?;
        put_string(out, json)
    })
}

/// `[M(pi) : V(pitilde)]` by the closed formula and by elimination.
///
/// # Safety
/// `pi` and `pitilde` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_multiplicity(
    pi: *const QcDrinfeld,
    pitilde: *const QcDrinfeld,
    out: *mut QcMultiplicity,
) -> QcStatus {
    guard(|| {
        let q = MultiplicityQuery::new(get(pi, "pi")?.0.clone(), get(pitilde, "pitilde")?.0.clone());
        let closed = multiplicity_closed(&q)?;
        let row = decomposition_row_with(&q.pi, &oracle_options()?)?;
        let oracle = row.get(&q.pitilde).copied().unwrap_or(0);
        let verdict = match closed {
            Some(c) if c == oracle => QcVerdict::Agree,
            Some(_) => QcVerdict::Disagree,
            None => QcVerdict::NotApplicable,
        };
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = QcMultiplicity { closed_applicable: closed.is_some(), closed: closed.unwrap_or(0), oracle, verdict };
        Ok(())
    })
}

/// Decomposition row of `M(pi)` as JSON: `[{"simple": ..., "mult": m}, ...]`.
///
/// # Safety
/// `pi` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_decomposition_row_json(pi: *const QcDrinfeld, out: *mut *mut c_char) -> QcStatus {
    guard(|| {
        let row = decomposition_row_with(&get(pi, "pi")?.0, &oracle_options()?)?;
        let json = serde_json::to_string(&row_to_entries(&row)).map_err(|e| Fail(QcStatus::Consistency, e.to_string()))?;
        put_string(out, json)
    })
}

/// IC stalk polynomial for dimension vector `w` (length `n`), rank tuple
/// `r` and point `k` (both of length `n - 1`).
///
/// # Safety
/// `w` must hold `n` values, `r` and `k` must hold `n - 1` values each (they
/// may be null when `n <= 1`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_ic_stalk(
    w: *const u64,
    n: usize,
    r: *const u64,
    k: *const u64,
    out: *mut *mut QcTPoly,
) -> QcStatus {
    guard(|| {
        let m = n.saturating_sub(1);
        let s = stratum(slice(w, n, "w")?, slice(r, m, "r")?)?;
        let q = StalkQuery::new(s, slice(k, m, "k")?.to_vec())?;
        put(out, QcTPoly(ic_stalk_poly(&q)?))
    })
}

/// Gaussian binomial `(a choose n)_t`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_gauss_binom(a: u32, n: u32, out: *mut *mut QcTPoly) -> QcStatus {
    guard(|| put(out, QcTPoly(gauss_binom_t(a, n)?)))
}

/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qc_tpoly_free(p: *mut QcTPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of stored coefficients (degree + 1; 0 for the zero polynomial).
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qc_tpoly_len(p: *const QcTPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.coeffs().len())
}

/// Coefficient of `t^i`; 0 past the end or for a null handle.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qc_tpoly_coeff(p: *const QcTPoly, i: usize) -> i64 {
    p.as_ref().map_or(0, |p| p.0.coeff(i))
}
