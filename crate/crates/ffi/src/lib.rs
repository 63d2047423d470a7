//! C interface to `hlvertex`.
//!
//! Results come back through opaque handles owned by the caller and released
//! with the matching `*_free`. Every entry point returns an [`HlvStatus`]; on
//! failure the calling thread's last error message can be read with
//! [`hlv_last_error_message`]. Strings handed out here are released with
//! [`hlv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hlvertex::kostka::{kostka, KostkaKey, Method};
use hlvertex::rewrite::{
    evaluate, parse_word, rewrite_dominant, shift_support, swap_factors, OpSum, ShiftDirection,
};
use hlvertex::symfunc::SymFunc;
use hlvertex::weights::{
    parse_blocked, parse_dominant, parse_partition, parse_shape, parse_weight, straighten,
    BlockedWeight, Straightened,
};
use hlvertex::{Error, QPoly};

/// Outcome of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlvStatus {
    Ok = 0,
    /// A required pointer argument was null.
    Null = 1,
    /// An input string was not valid UTF-8.
    Utf8 = 2,
    Parse = 3,
    /// Well-formed input that the operation does not accept.
    Invalid = 4,
    /// The two Kostka engines returned different values.
    Disagreement = 5,
    NonIntegral = 6,
    Termination = 7,
    /// Division by zero, a pole, or a result that does not fit the output type.
    Arithmetic = 8,
    /// An internal panic was caught at the boundary.
    Panic = 9,
}

/// Engine selector for [`hlv_kostka`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlvMethod {
    Kostant = 0,
    Vertex = 1,
    /// Runs both engines and fails with `HLV_STATUS_DISAGREEMENT` if they differ.
    Both = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlvDirection {
    LeftToRight = 0,
    RightToLeft = 1,
}

/// A polynomial in `q` with integer coefficients.
pub struct HlvPoly(QPoly);

/// A symmetric function with coefficients in `Q(q)`.
pub struct HlvSymFunc(SymFunc);

/// A linear combination of operator words.
pub struct HlvOpSum(OpSum);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    let c = CString::new(msg).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_for(e: &Error) -> HlvStatus {
    match e {
        Error::Parse { .. } => HlvStatus::Parse,
        Error::NotDominant(_) | Error::LengthMismatch { .. } | Error::InvalidArgument(_) => {
            HlvStatus::Invalid
        }
        Error::EngineDisagreement { .. } => HlvStatus::Disagreement,
        Error::NonIntegral(_) => HlvStatus::NonIntegral,
        Error::Termination(_) => HlvStatus::Termination,
        Error::DivisionByZero | Error::Pole(_) => HlvStatus::Arithmetic,
    }
}

struct Failure(HlvStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_for(&e), e.to_string())
    }
}

/// Runs `body`, recording any error or panic as the last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HlvStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HlvStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(format!("internal panic: {msg}"));
            HlvStatus::Panic
        }
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(HlvStatus::Null, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(HlvStatus::Utf8, format!("{what} is not UTF-8")))
}

fn check_out<T>(out: *mut T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(HlvStatus::Null, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn check_handle<T>(h: *const T, what: &str) -> Result<(), Failure> {
    check_out(h as *mut T, what)
}

/// # Safety
/// `out` is a valid, writable pointer.
unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s)
        .map_err(|_| Failure(HlvStatus::Arithmetic, "output contains NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn box_into<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// The message for the last failed call on this thread, or null.
///
/// The pointer stays valid until the next call into this library on the same
/// thread. Do not free it.
#[no_mangle]
pub extern "C" fn hlv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or came from this library and has not been freed.
#[no_mangle]
pub unsafe extern "C" fn hlv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Computes one generalized Kostka polynomial.
///
/// `lambda` is a dominant weight such as `"2,1,1"`, `eta` a block shape such as
/// `"2,2"`. `gamma` is either flat (`"1,1,0,2"`, cut by `eta`) or given by
/// blocks separated by `;`.
///
/// # Safety
/// String arguments are NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_kostka(
    lambda: *const c_char,
    gamma: *const c_char,
    eta: *const c_char,
    method: HlvMethod,
    out: *mut *mut HlvPoly,
) -> HlvStatus {
    guard(|| {
        check_out(out, "out")?;
        let lambda = parse_dominant(read_str(lambda, "lambda")?)?;
        let shape = parse_shape(read_str(eta, "eta")?)?;
        let gamma = read_str(gamma, "gamma")?;
        let gamma = if gamma.contains(';') {
            let g = parse_blocked(gamma)?;
            if g.shape() != &shape {
                return Err(Error::InvalidArgument(format!(
                    "gamma has blocks {} but eta is {shape}",
                    g.shape()
                ))
                .into());
            }
            g
        } else {
            BlockedWeight::split(&shape, &parse_weight(gamma)?)?
        };
        let key = KostkaKey::new(lambda, gamma)?;
        let method = match method {
            HlvMethod::Kostant => Method::Kostant,
            HlvMethod::Vertex => Method::Vertex,
            HlvMethod::Both => Method::Both,
        };
        box_into(out, HlvPoly(kostka(&key, method)?));
        Ok(())
    })
}

/// # Safety
/// `p` is null or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hlv_poly_free(p: *mut HlvPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Text form, e.g. `"q^2 + q"`.
///
/// # Safety
/// `p` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_poly_to_string(p: *const HlvPoly, out: *mut *mut c_char) -> HlvStatus {
    guard(|| {
        check_handle(p, "poly")?;
        check_out(out, "out")?;
        put_string(out, (*p).0.to_string())
    })
}

/// JSON object mapping exponents to coefficients.
///
/// # Safety
/// `p` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_poly_to_json(p: *const HlvPoly, out: *mut *mut c_char) -> HlvStatus {
    guard(|| {
        check_handle(p, "poly")?;
        check_out(out, "out")?;
        put_string(out, (*p).0.to_json().to_string())
    })
}

/// Degree of the polynomial, or -1 for zero.
///
/// # Safety
/// `p` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_poly_degree(p: *const HlvPoly, out: *mut i64) -> HlvStatus {
    guard(|| {
        check_handle(p, "poly")?;
        check_out(out, "out")?;
        *out = (*p).0.degree().unwrap_or(-1);
        Ok(())
    })
}

/// Coefficient of `q^exponent`. Fails with `HLV_STATUS_ARITHMETIC` if it does
/// not fit in 64 bits.
///
/// # Safety
/// `p` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_poly_coeff(
    p: *const HlvPoly,
    exponent: i64,
    out: *mut i64,
) -> HlvStatus {
    guard(|| {
        check_handle(p, "poly")?;
        check_out(out, "out")?;
        let c = (*p).0.coeff(exponent);
        *out = i64::try_from(&c).map_err(|_| {
            Failure(
                HlvStatus::Arithmetic,
                format!("coefficient {c} does not fit in 64 bits"),
            )
        })?;
        Ok(())
    })
}

/// Straightens `H_v`. Writes the sign (-1, 0 or 1) and, when the sign is
/// nonzero, the dominant weight as text.
///
/// On a zero result `*weight_out` is set to null.
///
/// # Safety
/// `weight` is NUL-terminated; both outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_straighten(
    weight: *const c_char,
    sign_out: *mut i32,
    weight_out: *mut *mut c_char,
) -> HlvStatus {
    guard(|| {
        check_out(sign_out, "sign_out")?;
        check_out(weight_out, "weight_out")?;
        let v = parse_weight(read_str(weight, "weight")?)?;
        match straighten(&v) {
            Straightened::Zero => {
                *sign_out = 0;
                *weight_out = ptr::null_mut();
            }
            Straightened::Signed { sign, weight } => {
                put_string(weight_out, weight.to_string())?;
                *sign_out = i32::from(sign);
            }
        }
        Ok(())
    })
}

unsafe fn word_op(
    word: *const c_char,
    out: *mut *mut HlvOpSum,
    op: impl FnOnce(&hlvertex::rewrite::OpWord) -> hlvertex::Result<OpSum>,
) -> HlvStatus {
    guard(|| {
        check_out(out, "out")?;
        let w = parse_word(read_str(word, "word")?)?;
        box_into(out, HlvOpSum(op(&w)?));
        Ok(())
    })
}

/// Rewrites a two-factor word such as `"H[2,2]H[4,1]"` into dominant words.
///
/// # Safety
/// `word` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_rewrite(word: *const c_char, out: *mut *mut HlvOpSum) -> HlvStatus {
    word_op(word, out, rewrite_dominant)
}

/// Exchanges the block lengths of a two-factor word.
///
/// # Safety
/// `word` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_swap(word: *const c_char, out: *mut *mut HlvOpSum) -> HlvStatus {
    word_op(word, out, swap_factors)
}

/// Moves one entry between the factors of a two-factor word.
///
/// # Safety
/// `word` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_shift(
    word: *const c_char,
    direction: HlvDirection,
    out: *mut *mut HlvOpSum,
) -> HlvStatus {
    let d = match direction {
        HlvDirection::LeftToRight => ShiftDirection::LeftToRight,
        HlvDirection::RightToLeft => ShiftDirection::RightToLeft,
    };
    word_op(word, out, |w| shift_support(w, d))
}

/// # Safety
/// `s` is null or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hlv_opsum_free(s: *mut HlvOpSum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of terms.
///
/// # Safety
/// `s` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_opsum_len(s: *const HlvOpSum, out: *mut usize) -> HlvStatus {
    guard(|| {
        check_handle(s, "opsum")?;
        check_out(out, "out")?;
        *out = (*s).0.len();
        Ok(())
    })
}

/// # Safety
/// `s` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_opsum_to_string(
    s: *const HlvOpSum,
    out: *mut *mut c_char,
) -> HlvStatus {
    guard(|| {
        check_handle(s, "opsum")?;
        check_out(out, "out")?;
        put_string(out, (*s).0.to_string())
    })
}

/// # Safety
/// `s` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_opsum_to_json(s: *const HlvOpSum, out: *mut *mut c_char) -> HlvStatus {
    guard(|| {
        check_handle(s, "opsum")?;
        check_out(out, "out")?;
        put_string(out, (*s).0.to_json().to_string())
    })
}

/// Applies an operator word to the Schur function of `partition`
/// (empty string for 1).
///
/// # Safety
/// Strings are NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_eval(
    word: *const c_char,
    partition: *const c_char,
    out: *mut *mut HlvSymFunc,
) -> HlvStatus {
    guard(|| {
        check_out(out, "out")?;
        let w = parse_word(read_str(word, "word")?)?;
        let f = SymFunc::schur(parse_partition(read_str(partition, "partition")?)?);
        box_into(out, HlvSymFunc(evaluate(&OpSum::word(w), &f)));
        Ok(())
    })
}

/// # Safety
/// `f` is null or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hlv_symfunc_free(f: *mut HlvSymFunc) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_symfunc_to_string(
    f: *const HlvSymFunc,
    out: *mut *mut c_char,
) -> HlvStatus {
    guard(|| {
        check_handle(f, "symfunc")?;
        check_out(out, "out")?;
        put_string(out, (*f).0.to_string())
    })
}

/// # Safety
/// `f` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hlv_symfunc_to_json(
    f: *const HlvSymFunc,
    out: *mut *mut c_char,
) -> HlvStatus {
    guard(|| {
        check_handle(f, "symfunc")?;
        check_out(out, "out")?;
        put_string(out, (*f).0.to_json().to_string())
    })
}
