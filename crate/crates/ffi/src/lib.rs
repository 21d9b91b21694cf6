//! C ABI over `schurweyl`.
//!
//! Every fallible entry point returns an [`SwStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`sw_last_error`]. Strings handed out by the library are
//! NUL-terminated UTF-8 JSON and must be released with [`sw_string_free`];
//! weights are opaque [`SwWeight`] handles released with [`sw_weight_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::{json, Value};

use schurweyl::majorization::{
    extreme_points_norm_hull, extreme_points_weakstar, in_norm_hull, in_weakstar_hull,
    separating_vector, support_functional, RationalWeight,
};
use schurweyl::momentum::{
    in_momentum_set_matrix, in_norm_momentum_set_matrix, spectral_s_k, Matrix,
};
use schurweyl::rational::format_q;
use schurweyl::tensor::{schur_weyl_decompose, weight_multiset, Partition};
use schurweyl::weights::{is_contractive, orbit_equal};
use schurweyl::{Error, Weight};

/// Result codes. `SW_STATUS_OK` is zero; everything else is a failure.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Argument = 4,
    Dimension = 5,
    Resource = 6,
    Undecided = 7,
    OracleMismatch = 8,
    Panic = 9,
}

impl From<&Error> for SwStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Argument(_) => SwStatus::Argument,
            Error::Parse(_) => SwStatus::Parse,
            Error::Dimension { .. } => SwStatus::Dimension,
            Error::Resource { .. } => SwStatus::Resource,
            Error::Undecided => SwStatus::Undecided,
            Error::OracleMismatch(_) => SwStatus::OracleMismatch,
        }
    }
}

/// An integer weight with finite support.
pub struct SwWeight(Weight);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(SwStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(SwStatus::from(&e), e.to_string())
    }
}

fn set_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("no interior NUL"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            SwStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(_) => {
            set_error(Some("internal panic".into()));
            SwStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(SwStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SwStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn weight_arg<'a>(p: *const SwWeight, what: &str) -> Result<&'a Weight, Failure> {
    p.as_ref().map(|w| &w.0).ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_json(out: *mut *mut c_char, value: &Value) -> Result<(), Failure> {
    let s = CString::new(value.to_string()).expect("JSON has no interior NUL");
    write(out, s.into_raw())
}

/// Message of the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call into the library on the
/// same thread.
#[no_mangle]
pub extern "C" fn sw_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn sw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"entries":{"3":-1}}` or the bare map `{"3":-1}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_weight_from_json(
    json: *const c_char,
    out: *mut *mut SwWeight,
) -> SwStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let w: Weight = serde_json::from_str(text)
            .map_err(|e| Failure(SwStatus::Parse, format!("weight: {e}")))?;
        write(out, Box::into_raw(Box::new(SwWeight(w))))
    })
}

/// Builds the weight `j -> values[j]`; zero values are skipped.
///
/// # Safety
/// `values` must point to `len` readable integers (or be null with `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn sw_weight_from_values(
    values: *const i64,
    len: usize,
    out: *mut *mut SwWeight,
) -> SwStatus {
    guard(|| {
        let slice = if len == 0 {
            &[][..]
        } else if values.is_null() {
            return Err(null("values"));
        } else {
            std::slice::from_raw_parts(values, len)
        };
        write(
            out,
            Box::into_raw(Box::new(SwWeight(Weight::from_values(slice)))),
        )
    })
}

/// Releases a weight. Null is ignored.
///
/// # Safety
/// `w` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn sw_weight_free(w: *mut SwWeight) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Canonical JSON of a weight.
///
/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_weight_to_json(w: *const SwWeight, out: *mut *mut c_char) -> SwStatus {
    guard(|| {
        let w = weight_arg(w, "weight")?;
        let v = serde_json::to_value(w).expect("weights serialize");
        write_json(out, &v)
    })
}

/// `sum |lambda_j|`.
///
/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_weight_l1_norm(w: *const SwWeight, out: *mut u64) -> SwStatus {
    guard(|| write(out, weight_arg(w, "weight")?.l1_norm()))
}

/// Do `a` and `b` differ by a finite permutation of indices?
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_orbit_equal(
    a: *const SwWeight,
    b: *const SwWeight,
    out: *mut bool,
) -> SwStatus {
    guard(|| write(out, orbit_equal(weight_arg(a, "a")?, weight_arg(b, "b")?)))
}

/// Is `lambda = ±e_j`?
///
/// # Safety
/// `w` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_is_contractive(w: *const SwWeight, out: *mut bool) -> SwStatus {
    guard(|| write(out, is_contractive(weight_arg(w, "weight")?)))
}

/// Membership of the rational point `mu_json` (`{"0":"1/2",..}`) in the
/// weak-* closed (`norm_closed == false`) or norm-closed hull of the orbit
/// of `lambda`.
///
/// # Safety
/// `lambda` must be a live handle, `mu_json` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_hull_contains(
    lambda: *const SwWeight,
    mu_json: *const c_char,
    norm_closed: bool,
    out: *mut bool,
) -> SwStatus {
    guard(|| {
        let lambda = weight_arg(lambda, "lambda")?;
        let mu = RationalWeight::from_json(str_arg(mu_json, "mu_json")?)?;
        let inside = if norm_closed {
            in_norm_hull(&mu, lambda)
        } else {
            in_weakstar_hull(&mu, lambda)
        };
        write(out, inside)
    })
}

/// Extreme orbits of the hull, as a JSON list of value lists.
///
/// # Safety
/// `lambda` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_extreme_points(
    lambda: *const SwWeight,
    norm_closed: bool,
    out: *mut *mut c_char,
) -> SwStatus {
    guard(|| {
        let lambda = weight_arg(lambda, "lambda")?;
        let set = if norm_closed {
            extreme_points_norm_hull(lambda)
        } else {
            extreme_points_weakstar(lambda)
        };
        let list: Vec<Value> = set
            .signatures
            .iter()
            .map(|s| json!(s.sorted_values()))
            .collect();
        write_json(out, &Value::Array(list))
    })
}

/// `max_w <w lambda, x>` as a `"p/q"` JSON string.
///
/// # Safety
/// `lambda` must be a live handle, `x_json` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_support_functional(
    lambda: *const SwWeight,
    x_json: *const c_char,
    out: *mut *mut c_char,
) -> SwStatus {
    guard(|| {
        let lambda = weight_arg(lambda, "lambda")?;
        let x = RationalWeight::from_json(str_arg(x_json, "x_json")?)?;
        write_json(out, &json!(format_q(&support_functional(lambda, &x))))
    })
}

/// A separating functional for two weights in different orbits:
/// `{"direction","witness","gap"}`.
///
/// # Safety
/// `lambda`, `mu` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_separating_vector(
    lambda: *const SwWeight,
    mu: *const SwWeight,
    out: *mut *mut c_char,
) -> SwStatus {
    guard(|| {
        let cert = separating_vector(weight_arg(lambda, "lambda")?, weight_arg(mu, "mu")?)?;
        write_json(
            out,
            &json!({
                "direction": cert.direction,
                "witness": cert.witness.to_json(),
                "gap": format_q(&cert.gap),
            }),
        )
    })
}

/// Isotypic decomposition of `(Q^n)^{⊗k}` as a JSON list of
/// `{"partition","dimS","dimM"}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sw_decompose(n: usize, k: usize, out: *mut *mut c_char) -> SwStatus {
    guard(|| {
        let parts = schur_weyl_decompose(n, k)?;
        write_json(
            out,
            &serde_json::to_value(parts).expect("components serialize"),
        )
    })
}

/// Weights with multiplicity of the Schur module of a partition given as
/// `[2,1]`: `{"partition","n","weights":[{"weight","multiplicity"}]}`.
///
/// # Safety
/// `partition_json` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_weights_of(
    partition_json: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> SwStatus {
    guard(|| {
        let shape = Partition::from_json(str_arg(partition_json, "partition_json")?)?;
        let list: Vec<Value> = weight_multiset(&shape, n)?
            .into_iter()
            .map(|(w, m)| Ok(json!({ "weight": w.to_dense(n)?, "multiplicity": m })))
            .collect::<Result<_, Error>>()?;
        write_json(out, &json!({ "partition": shape, "n": n, "weights": list }))
    })
}

/// Membership of a Hermitian matrix (`{"n","re","im"}`) in the weak-* or
/// norm-closed momentum set of `lambda`.
///
/// # Safety
/// `lambda` must be a live handle, `matrix_json` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_momentum_contains(
    lambda: *const SwWeight,
    matrix_json: *const c_char,
    norm_closed: bool,
    out: *mut bool,
) -> SwStatus {
    guard(|| {
        let lambda = weight_arg(lambda, "lambda")?;
        let x = Matrix::from_json(str_arg(matrix_json, "matrix_json")?)?;
        let inside = if norm_closed {
            in_norm_momentum_set_matrix(&x, lambda)?
        } else {
            in_momentum_set_matrix(&x, lambda)?
        };
        write(out, inside)
    })
}

/// Sum of the `k` largest eigenvalues of a Hermitian matrix:
/// `{"exact":"p/q"}` or an enclosing `{"lo","hi"}`.
///
/// # Safety
/// `matrix_json` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_spectral_s_k(
    matrix_json: *const c_char,
    k: usize,
    out: *mut *mut c_char,
) -> SwStatus {
    guard(|| {
        let x = Matrix::from_json(str_arg(matrix_json, "matrix_json")?)?;
        let value = spectral_s_k(&x, k)?;
        write_json(
            out,
            &serde_json::to_value(value).expect("intervals serialize"),
        )
    })
}
