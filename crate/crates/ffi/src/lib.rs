//! C ABI bindings.
//!
//! Every fallible function returns a [`QhlStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`qhl_last_error`]. Handles are opaque and must be released with
//! the matching `*_free` function. Strings returned to the caller are owned by
//! the caller and released with [`qhl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use qhl_core::bases::{transition_matrix, Basis, TransitionMatrix};
use qhl_core::combinatorics::{Composition, WeakComposition};
use qhl_core::conjectures::{check_conjecture, ConjectureId};
use qhl_core::pasep::{parse_rational, stationary_report, Method, PasepState};
use qhl_core::tableaux::{pt_a_closed, pt_b_closed};
use qhl_core::{Error, LaurentQPoly};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QhlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    OutOfRange = 4,
    Unsupported = 5,
    SingularSystem = 6,
    Consistency = 7,
    Panic = 8,
}

impl From<&Error> for QhlStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::OutOfRange { .. } => QhlStatus::OutOfRange,
            Error::UnsupportedBasisPair { .. } => QhlStatus::Unsupported,
            Error::SingularSystem => QhlStatus::SingularSystem,
            Error::Consistency(_) => QhlStatus::Consistency,
            _ => QhlStatus::InvalidInput,
        }
    }
}

/// Opaque Laurent polynomial.
pub struct QhlPoly(LaurentQPoly);

/// Opaque transition matrix.
pub struct QhlMatrix(TransitionMatrix);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(QhlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail((&e).into(), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail> + UnwindSafe) -> QhlStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(f) {
        Ok(Ok(())) => QhlStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            QhlStatus::Panic
        }
    }
}

unsafe fn input<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(QhlStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(QhlStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(QhlStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| Fail(QhlStatus::Panic, e.to_string()))?;
    put(out, c.into_raw())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(QhlStatus::NullPointer, "handle is null".into()))
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Fail> {
    serde_json::to_string(v).map_err(|e| Fail(QhlStatus::Panic, e.to_string()))
}

/// Message for the most recent failure on this thread, or null.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn qhl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qhl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a polynomial from its JSON form `{"minexp":..,"coeffs":[..]}`.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_poly_from_json(text: *const c_char, out: *mut *mut QhlPoly) -> QhlStatus {
    guard(|| {
        let text = input(text, "text")?;
        let p: LaurentQPoly =
            serde_json::from_str(text).map_err(|e| Fail(QhlStatus::InvalidInput, e.to_string()))?;
        put(out, Box::into_raw(Box::new(QhlPoly(p))))
    })
}

/// Human-readable form such as `1+2q+q^2`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_poly_to_string(p: *const QhlPoly, out: *mut *mut c_char) -> QhlStatus {
    guard(|| put_string(out, handle(p)?.0.to_string()))
}

/// Canonical JSON form.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_poly_to_json(p: *const QhlPoly, out: *mut *mut c_char) -> QhlStatus {
    guard(|| put_string(out, json(&handle(p)?.0)?))
}

/// Value at q = 1 as a decimal string.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_poly_eval_at_one(p: *const QhlPoly, out: *mut *mut c_char) -> QhlStatus {
    guard(|| put_string(out, handle(p)?.0.eval_at_one().to_string()))
}

/// Writes 1 to `out` when both polynomials are equal, else 0.
///
/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_poly_equal(a: *const QhlPoly, b: *const QhlPoly, out: *mut i32) -> QhlStatus {
    guard(|| put(out, i32::from(handle(a)?.0 == handle(b)?.0)))
}

/// # Safety
/// `p` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qhl_poly_free(p: *mut QhlPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Builds the transition matrix from basis `from` to basis `to` in degree `n`.
/// Basis names are `S`, `R`, `Psi` and `L`.
///
/// # Safety
/// Strings must be valid C strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_matrix_new(
    n: usize,
    from: *const c_char,
    to: *const c_char,
    out: *mut *mut QhlMatrix,
) -> QhlStatus {
    guard(|| {
        let from: Basis = input(from, "from")?.parse()?;
        let to: Basis = input(to, "to")?.parse()?;
        let m = transition_matrix(n, from, to)?;
        put(out, Box::into_raw(Box::new(QhlMatrix(m))))
    })
}

/// Number of rows, which equals the number of columns.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_matrix_size(m: *const QhlMatrix, out: *mut usize) -> QhlStatus {
    guard(|| put(out, handle(m)?.0.size()))
}

/// Dotted label of the composition at position `index` of the canonical order.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_matrix_label(m: *const QhlMatrix, index: usize, out: *mut *mut c_char) -> QhlStatus {
    guard(|| {
        let m = handle(m)?;
        let c = m.0.order().get(index).ok_or_else(|| Fail(QhlStatus::OutOfRange, format!("index {index}")))?;
        put_string(out, c.label())
    })
}

/// Copies entry (`row`, `col`) into a new polynomial handle.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_matrix_entry(
    m: *const QhlMatrix,
    row: usize,
    col: usize,
    out: *mut *mut QhlPoly,
) -> QhlStatus {
    guard(|| {
        let m = handle(m)?;
        let p = m
            .0
            .get(row, col)
            .ok_or_else(|| Fail(QhlStatus::OutOfRange, format!("entry ({row}, {col})")))?;
        put(out, Box::into_raw(Box::new(QhlPoly(p.clone()))))
    })
}

/// Whole matrix as JSON.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_matrix_to_json(m: *const QhlMatrix, out: *mut *mut c_char) -> QhlStatus {
    guard(|| put_string(out, json(&handle(m)?.0)?))
}

/// # Safety
/// `m` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qhl_matrix_free(m: *mut QhlMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Closed-form tableau polynomial. `kind` is `'A'` (composition such as `3.4.1`)
/// or `'B'` (weak composition such as `1.2.0`).
///
/// # Safety
/// `comp` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_pt(kind: c_char, comp: *const c_char, out: *mut *mut QhlPoly) -> QhlStatus {
    guard(|| {
        let comp = input(comp, "comp")?;
        let p = match kind as u8 {
            b'A' | b'a' => pt_a_closed(&comp.parse::<Composition>()?)?,
            b'B' | b'b' => pt_b_closed(&comp.parse::<WeakComposition>()?)?,
            k => return Err(Fail(QhlStatus::InvalidInput, format!("tableau type {:?}", k as char))),
        };
        put(out, Box::into_raw(Box::new(QhlPoly(p))))
    })
}

/// Stationary distribution report as JSON. `method` is `formula`, `exact` or
/// `mc`; `state` may be null to report every state.
///
/// # Safety
/// Non-null strings must be valid C strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_pasep_report(
    n: usize,
    q: *const c_char,
    method: *const c_char,
    state: *const c_char,
    seed: u64,
    steps: u64,
    out: *mut *mut c_char,
) -> QhlStatus {
    guard(|| {
        let q = parse_rational(input(q, "q")?)?;
        let method: Method = input(method, "method")?.parse()?;
        let only: Option<PasepState> =
            if state.is_null() { None } else { Some(input(state, "state")?.parse()?) };
        let report = stationary_report(n, &q, method, seed, steps, only.as_ref())?;
        put_string(out, json(&report)?)
    })
}

/// Conjecture check report as JSON. `which` is `E-words`, `E-perms` or `F`.
///
/// # Safety
/// `which` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qhl_conjecture_report(n: usize, which: *const c_char, out: *mut *mut c_char) -> QhlStatus {
    guard(|| {
        let id: ConjectureId = input(which, "which")?.parse()?;
        put_string(out, json(&check_conjecture(id, n)?)?)
    })
}
