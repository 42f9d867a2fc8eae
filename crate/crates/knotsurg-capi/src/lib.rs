//! C ABI for the knotsurg engine.
//!
//! All handles are opaque pointers owned by the library; release them
//! with the matching `*_free` function. Fallible calls return a
//! [`KnotsurgStatus`] and write their result through an out-pointer,
//! which is left untouched on failure. A human-readable message for the
//! most recent failure on the current thread is available from
//! [`knotsurg_last_error`].

// pointer contracts are stated on each function and in the generated header
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use knotsurg::{
    alexander, alexander_oracle, concordance_surgery, fox_milnor_check, knot_surgery, sw_equal,
    twisted_surgery_changes, AlexanderPolynomial, Braid, Concordance, Error, SWInvariant,
    TorusClass,
};

/// Result codes. Everything except `Ok` leaves an explanation in
/// [`knotsurg_last_error`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnotsurgStatus {
    Ok = 0,
    NullArgument,
    InvalidUtf8,
    Syntax,
    IndexOutOfRange,
    NotAKnot,
    RankMismatch,
    Domain,
    Overflow,
    Internal,
}

/// Which concordance of `K # -K` acts in
/// [`knotsurg_concordance_surgery`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnotsurgConcordance {
    Product = 0,
    SliceSum,
}

/// Opaque braid handle.
pub struct KnotsurgBraid(Braid);

/// Opaque handle to a normalized Alexander polynomial.
pub struct KnotsurgDelta(AlexanderPolynomial);

/// Opaque handle to a Seiberg-Witten invariant (a finitely supported
/// integer function on a rank-`b` lattice).
pub struct KnotsurgSw(SWInvariant);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn fail(status: KnotsurgStatus, message: impl Into<String>) -> KnotsurgStatus {
    set_error(message.into());
    status
}

fn status_of(err: &Error) -> KnotsurgStatus {
    match err {
        Error::Syntax(_) | Error::Schema(_) | Error::Table(_) | Error::UnknownKnot(_) => {
            KnotsurgStatus::Syntax
        }
        Error::GeneratorIndex { .. } => KnotsurgStatus::IndexOutOfRange,
        Error::NotAKnot { .. } => KnotsurgStatus::NotAKnot,
        Error::RankMismatch { .. } => KnotsurgStatus::RankMismatch,
        Error::DivisionByZero
        | Error::EvaluateAtZero
        | Error::NotIsotropic { .. }
        | Error::NotNormalized(_) => KnotsurgStatus::Domain,
        Error::CoordinateOverflow => KnotsurgStatus::Overflow,
        Error::InexactDivision | Error::Internal(_) | Error::Io(_) => KnotsurgStatus::Internal,
    }
}

fn report(err: Error) -> KnotsurgStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, KnotsurgStatus> {
    if ptr.is_null() {
        return Err(fail(KnotsurgStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        fail(
            KnotsurgStatus::InvalidUtf8,
            "string argument is not valid UTF-8",
        )
    })
}

unsafe fn read_slice<'a>(ptr: *const i64, len: usize) -> Result<&'a [i64], KnotsurgStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(fail(KnotsurgStatus::NullArgument, "null array argument"));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

macro_rules! try_ref {
    ($ptr:expr) => {
        match $ptr.as_ref() {
            Some(r) => &r.0,
            None => return fail(KnotsurgStatus::NullArgument, "null handle argument"),
        }
    };
}

macro_rules! try_out {
    ($ptr:expr) => {
        match $ptr.as_mut() {
            Some(r) => r,
            None => return fail(KnotsurgStatus::NullArgument, "null out-pointer"),
        }
    };
}

/// Message for the most recent failure on this thread, or null if no
/// call has failed yet. The pointer is valid until the next failing call
/// on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn knotsurg_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |msg| msg.as_ptr())
    })
}

/// Frees a string returned through a `char **` out-pointer.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses braid text (`"B2: s1 s1 s1"`) into a new handle.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_braid_parse(
    text: *const c_char,
    out: *mut *mut KnotsurgBraid,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let text = match read_str(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match text.parse::<Braid>() {
        Ok(braid) => {
            *out = Box::into_raw(Box::new(KnotsurgBraid(braid)));
            KnotsurgStatus::Ok
        }
        Err(e) => report(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn knotsurg_braid_free(braid: *mut KnotsurgBraid) {
    if !braid.is_null() {
        drop(Box::from_raw(braid));
    }
}

/// Renders the braid back to its textual form. Free the result with
/// [`knotsurg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn knotsurg_braid_format(
    braid: *const KnotsurgBraid,
    out: *mut *mut c_char,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let braid = try_ref!(braid);
    *out = CString::new(braid.to_string()).unwrap().into_raw();
    KnotsurgStatus::Ok
}

/// Strand count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_braid_strands(braid: *const KnotsurgBraid) -> usize {
    braid.as_ref().map_or(0, |b| b.0.strands())
}

/// Number of components of the braid closure, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_braid_components(braid: *const KnotsurgBraid) -> usize {
    braid.as_ref().map_or(0, |b| b.0.closure_components())
}

/// New braid with every crossing sign inverted; null on a null input.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_braid_mirror(braid: *const KnotsurgBraid) -> *mut KnotsurgBraid {
    match braid.as_ref() {
        Some(b) => Box::into_raw(Box::new(KnotsurgBraid(b.0.mirror()))),
        None => ptr::null_mut(),
    }
}

/// New braid with the word reversed; null on a null input.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_braid_reverse(braid: *const KnotsurgBraid) -> *mut KnotsurgBraid {
    match braid.as_ref() {
        Some(b) => Box::into_raw(Box::new(KnotsurgBraid(b.0.reverse()))),
        None => ptr::null_mut(),
    }
}

/// Connected sum of two knot closures.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_braid_connected_sum(
    a: *const KnotsurgBraid,
    b: *const KnotsurgBraid,
    out: *mut *mut KnotsurgBraid,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let a = try_ref!(a);
    let b = try_ref!(b);
    match a.connected_sum(b) {
        Ok(sum) => {
            *out = Box::into_raw(Box::new(KnotsurgBraid(sum)));
            KnotsurgStatus::Ok
        }
        Err(e) => report(e),
    }
}

/// Alexander polynomial of the braid closure via the reduced Burau
/// pipeline.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_alexander(
    braid: *const KnotsurgBraid,
    out: *mut *mut KnotsurgDelta,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let braid = try_ref!(braid);
    match alexander(braid) {
        Ok(delta) => {
            *out = Box::into_raw(Box::new(KnotsurgDelta(delta)));
            KnotsurgStatus::Ok
        }
        Err(e) => report(e),
    }
}

/// Same invariant computed independently through Fox calculus; useful
/// for cross-checking a build.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_alexander_oracle(
    braid: *const KnotsurgBraid,
    out: *mut *mut KnotsurgDelta,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let braid = try_ref!(braid);
    match alexander_oracle(braid) {
        Ok(delta) => {
            *out = Box::into_raw(Box::new(KnotsurgDelta(delta)));
            KnotsurgStatus::Ok
        }
        Err(e) => report(e),
    }
}

/// Parses a rendered polynomial (`"t^1 - 1 + t^-1"`); it must already be
/// normalized (symmetric, value 1 at `t = 1`).
#[no_mangle]
pub unsafe extern "C" fn knotsurg_delta_parse(
    text: *const c_char,
    out: *mut *mut KnotsurgDelta,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let text = match read_str(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match text.parse::<AlexanderPolynomial>() {
        Ok(delta) => {
            *out = Box::into_raw(Box::new(KnotsurgDelta(delta)));
            KnotsurgStatus::Ok
        }
        Err(e) => report(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn knotsurg_delta_free(delta: *mut KnotsurgDelta) {
    if !delta.is_null() {
        drop(Box::from_raw(delta));
    }
}

/// Renders in decreasing exponent order, e.g. `t^1 - 1 + t^-1`. Free the
/// result with [`knotsurg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn knotsurg_delta_render(
    delta: *const KnotsurgDelta,
    out: *mut *mut c_char,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let delta = try_ref!(delta);
    *out = CString::new(delta.to_string()).unwrap().into_raw();
    KnotsurgStatus::Ok
}

/// Exact equality; false when either handle is null.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_delta_eq(
    a: *const KnotsurgDelta,
    b: *const KnotsurgDelta,
) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Product of two polynomials (the polynomial of a connected sum); null
/// on null inputs.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_delta_mul(
    a: *const KnotsurgDelta,
    b: *const KnotsurgDelta,
) -> *mut KnotsurgDelta {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => Box::into_raw(Box::new(KnotsurgDelta(&a.0 * &b.0))),
        _ => ptr::null_mut(),
    }
}

/// Bounded Fox-Milnor slice obstruction: true iff the polynomial factors
/// as `f(t) f(1/t)` for some integer `f` of degree at most
/// `degree_bound`. False when the handle is null.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_fox_milnor_check(
    delta: *const KnotsurgDelta,
    degree_bound: u32,
) -> bool {
    delta
        .as_ref()
        .is_some_and(|d| fox_milnor_check(&d.0, degree_bound))
}

/// New zero invariant on a rank-`rank` lattice.
#[no_mangle]
pub extern "C" fn knotsurg_sw_new(rank: usize) -> *mut KnotsurgSw {
    Box::into_raw(Box::new(KnotsurgSw(SWInvariant::zero(rank))))
}

#[no_mangle]
pub unsafe extern "C" fn knotsurg_sw_free(sw: *mut KnotsurgSw) {
    if !sw.is_null() {
        drop(Box::from_raw(sw));
    }
}

/// Adds `coeff` at `class` (an array of `class_len == rank` entries),
/// accumulating with any existing coefficient.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_sw_add_term(
    sw: *mut KnotsurgSw,
    class: *const i64,
    class_len: usize,
    coeff: i64,
) -> KnotsurgStatus {
    let handle = match sw.as_mut() {
        Some(h) => h,
        None => return fail(KnotsurgStatus::NullArgument, "null handle argument"),
    };
    let class = match read_slice(class, class_len) {
        Ok(c) => c,
        Err(status) => return status,
    };
    let single = match SWInvariant::from_terms(handle.0.rank(), [(class.to_vec(), coeff.into())]) {
        Ok(s) => s,
        Err(e) => return report(e),
    };
    match handle.0.add(&single) {
        Ok(sum) => {
            handle.0 = sum;
            KnotsurgStatus::Ok
        }
        Err(e) => report(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn knotsurg_sw_rank(sw: *const KnotsurgSw) -> usize {
    sw.as_ref().map_or(0, |s| s.0.rank())
}

/// Size of the support (number of basic classes), or 0 for null.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_sw_support_size(sw: *const KnotsurgSw) -> usize {
    sw.as_ref().map_or(0, |s| s.0.support_size())
}

/// Reads the term at `index` (lexicographic class order). `class_out`
/// must have room for `rank` entries. Fails with `Overflow` when the
/// coefficient does not fit in an `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_sw_term(
    sw: *const KnotsurgSw,
    index: usize,
    class_out: *mut i64,
    coeff_out: *mut i64,
) -> KnotsurgStatus {
    let sw = try_ref!(sw);
    if class_out.is_null() && sw.rank() > 0 {
        return fail(KnotsurgStatus::NullArgument, "null class out-pointer");
    }
    let coeff_out = try_out!(coeff_out);
    let Some((class, coeff)) = sw.terms().nth(index) else {
        return fail(
            KnotsurgStatus::IndexOutOfRange,
            format!(
                "term index {index} out of range for support size {}",
                sw.support_size()
            ),
        );
    };
    let Ok(coeff) = i64::try_from(coeff.clone()) else {
        return fail(
            KnotsurgStatus::Overflow,
            "coefficient does not fit in int64_t",
        );
    };
    for (i, &c) in class.iter().enumerate() {
        *class_out.add(i) = c;
    }
    *coeff_out = coeff;
    KnotsurgStatus::Ok
}

/// Exact equality of invariants; ranks must match.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_sw_equal(
    a: *const KnotsurgSw,
    b: *const KnotsurgSw,
    out: *mut bool,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let a = try_ref!(a);
    let b = try_ref!(b);
    match sw_equal(a, b) {
        Ok(eq) => {
            *out = eq;
            KnotsurgStatus::Ok
        }
        Err(e) => report(e),
    }
}

/// Knot surgery along the torus class `torus` (an array of
/// `torus_len == rank` entries): multiplies the invariant by `delta`
/// under `t = exp(2[T])`.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_knot_surgery(
    sw: *const KnotsurgSw,
    torus: *const i64,
    torus_len: usize,
    delta: *const KnotsurgDelta,
    out: *mut *mut KnotsurgSw,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let sw = try_ref!(sw);
    let delta = try_ref!(delta);
    let torus = match read_slice(torus, torus_len) {
        Ok(t) => TorusClass::new(t.to_vec()),
        Err(status) => return status,
    };
    match knot_surgery(sw, &torus, delta) {
        Ok(result) => {
            *out = Box::into_raw(Box::new(KnotsurgSw(result)));
            KnotsurgStatus::Ok
        }
        Err(e) => report(e),
    }
}

/// True iff surgery by `delta` moves the double cover's invariant,
/// certifying a changed smooth structure downstairs.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_twisted_surgery_changes(
    sw_cover: *const KnotsurgSw,
    torus: *const i64,
    torus_len: usize,
    delta: *const KnotsurgDelta,
    out: *mut bool,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let sw_cover = try_ref!(sw_cover);
    let delta = try_ref!(delta);
    let torus = match read_slice(torus, torus_len) {
        Ok(t) => TorusClass::new(t.to_vec()),
        Err(status) => return status,
    };
    match twisted_surgery_changes(sw_cover, &torus, delta) {
        Ok(changes) => {
            *out = changes;
            KnotsurgStatus::Ok
        }
        Err(e) => report(e),
    }
}

/// Applies a concordance action of `K # -K` built from the knot `braid`.
#[no_mangle]
pub unsafe extern "C" fn knotsurg_concordance_surgery(
    sw: *const KnotsurgSw,
    torus: *const i64,
    torus_len: usize,
    braid: *const KnotsurgBraid,
    concordance: KnotsurgConcordance,
    out: *mut *mut KnotsurgSw,
) -> KnotsurgStatus {
    let out = try_out!(out);
    let sw = try_ref!(sw);
    let braid = try_ref!(braid);
    let torus = match read_slice(torus, torus_len) {
        Ok(t) => TorusClass::new(t.to_vec()),
        Err(status) => return status,
    };
    let kind = match concordance {
        KnotsurgConcordance::Product => Concordance::Product,
        KnotsurgConcordance::SliceSum => Concordance::SliceSum,
    };
    match concordance_surgery(sw, &torus, braid, kind) {
        Ok(result) => {
            *out = Box::into_raw(Box::new(KnotsurgSw(result)));
            KnotsurgStatus::Ok
        }
        Err(e) => report(e),
    }
}
