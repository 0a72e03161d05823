//! C interface to `hopf-core`.
//!
//! Matrices and certificates are opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns
//! a [`HopfStatus`] and writes its result through an out-pointer, which is
//! left untouched on failure. Panics are caught at the boundary and reported
//! as [`HopfStatus::Internal`].
//!
//! Matrix entries cross the boundary as `int64_t`, row-major. Entries that do
//! not fit are reported as [`HopfStatus::Overflow`]; the JSON form of a
//! certificate carries integers of any size.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hopf_core::abelian::torsion_order;
use hopf_core::cli::document::{render, CertificateDocument};
use hopf_core::hopf::{
    calibrated_zeta_variant, compose_two_fiber, mu_of, normalize_to_sl3, pi1_single_gluing,
    pi1_two_log_transforms, reduce_to_normal_form, reduce_to_standard, verify_certificate,
    zeta_matrix, GluingMatrix, LogTransformParams, ReductionCertificate,
};
use hopf_core::linalg::IntMatrix;
use hopf_core::Error;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotUnimodular = 3,
    NotPrimitive = 4,
    NotHomologyHopf = 5,
    OrientationReversing = 6,
    Overflow = 7,
    ParseError = 8,
    InvalidCertificate = 9,
    Internal = 10,
}

/// A 3x3 integer gluing matrix with determinant ±1.
pub struct HopfMatrix {
    inner: GluingMatrix,
}

/// A reduction certificate: `output = L₀ L₁ … · input · R₀ R₁ …`.
pub struct HopfCertificate {
    inner: ReductionCertificate,
    orientation_normalized: bool,
}

/// Invariants of a single gluing.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HopfClassification {
    /// +1 or -1.
    pub det: i32,
    /// gcd(g, h) of the third column's first two entries.
    pub meridian_gcd: i64,
    /// Free rank of the fundamental group.
    pub rank: u32,
    /// Order of the torsion subgroup, 1 when torsion-free.
    pub torsion_order: i64,
    pub homology_hopf: bool,
}

impl From<&Error> for HopfStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NotUnimodular { .. } => HopfStatus::NotUnimodular,
            Error::NotPrimitive { .. } => HopfStatus::NotPrimitive,
            Error::NotHomologyHopf { .. } => HopfStatus::NotHomologyHopf,
            Error::OrientationReversing => HopfStatus::OrientationReversing,
            Error::Document(_) => HopfStatus::ParseError,
            Error::ReductionMismatch(_) => HopfStatus::Internal,
            _ => HopfStatus::InvalidArgument,
        }
    }
}

fn guard(f: impl FnOnce() -> Result<(), HopfStatus>) -> HopfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HopfStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => HopfStatus::Internal,
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, HopfStatus> {
    p.as_ref().ok_or(HopfStatus::NullPointer)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), HopfStatus> {
    if out.is_null() {
        return Err(HopfStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

unsafe fn write_boxed<T>(out: *mut *mut T, value: T) -> Result<(), HopfStatus> {
    if out.is_null() {
        return Err(HopfStatus::NullPointer);
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

fn to_i64(x: &BigInt) -> Result<i64, HopfStatus> {
    x.to_i64().ok_or(HopfStatus::Overflow)
}

unsafe fn triple(p: *const i64) -> Result<[i64; 3], HopfStatus> {
    if p.is_null() {
        return Err(HopfStatus::NullPointer);
    }
    Ok(std::slice::from_raw_parts(p, 3).try_into().unwrap())
}

fn big_triple(t: [i64; 3]) -> [BigInt; 3] {
    t.map(Into::into)
}

/// Human-readable name of a status code. The string is static.
#[no_mangle]
pub extern "C" fn hopf_status_message(status: HopfStatus) -> *const c_char {
    let s: &'static CStr = match status {
        HopfStatus::Ok => c"ok",
        HopfStatus::NullPointer => c"null pointer argument",
        HopfStatus::InvalidArgument => c"invalid argument",
        HopfStatus::NotUnimodular => c"matrix is not unimodular",
        HopfStatus::NotPrimitive => c"triple is not primitive",
        HopfStatus::NotHomologyHopf => c"not a homology Hopf surface",
        HopfStatus::OrientationReversing => c"gluing matrix has determinant -1",
        HopfStatus::Overflow => c"integer does not fit in 64 bits",
        HopfStatus::ParseError => c"malformed document",
        HopfStatus::InvalidCertificate => c"certificate does not verify",
        HopfStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Builds a gluing matrix from nine row-major entries.
///
/// # Safety
/// `entries` must point to nine readable `int64_t`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_matrix_new(
    entries: *const i64,
    out: *mut *mut HopfMatrix,
) -> HopfStatus {
    guard(|| {
        if entries.is_null() || out.is_null() {
            return Err(HopfStatus::NullPointer);
        }
        let values = std::slice::from_raw_parts(entries, 9);
        let rows: Vec<Vec<_>> = values
            .chunks(3)
            .map(|r| r.iter().map(|&x| x.into()).collect())
            .collect();
        let m = IntMatrix::from_big_rows(rows).map_err(|e| HopfStatus::from(&e))?;
        let inner = GluingMatrix::new(m).map_err(|e| HopfStatus::from(&e))?;
        write_boxed(out, HopfMatrix { inner })
    })
}

/// The Hopf gluing `[[1,0,1],[0,1,0],[0,0,-1]]`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_matrix_zeta(out: *mut *mut HopfMatrix) -> HopfStatus {
    guard(|| {
        write_boxed(
            out,
            HopfMatrix {
                inner: zeta_matrix(),
            },
        )
    })
}

/// Releases a matrix. Null is ignored.
///
/// # Safety
/// `m` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopf_matrix_free(m: *mut HopfMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Reads entry `(row, col)`, both zero-based.
///
/// # Safety
/// `m` must be a live matrix; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_matrix_get(
    m: *const HopfMatrix,
    row: usize,
    col: usize,
    out: *mut i64,
) -> HopfStatus {
    guard(|| {
        let m = deref(m)?;
        if row >= 3 || col >= 3 {
            return Err(HopfStatus::InvalidArgument);
        }
        write(out, to_i64(m.inner.entry(row, col))?)
    })
}

/// Copies the matrix with its meridian flipped when the determinant is -1.
///
/// # Safety
/// `m` must be a live matrix; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_matrix_normalize(
    m: *const HopfMatrix,
    out: *mut *mut HopfMatrix,
) -> HopfStatus {
    guard(|| {
        let inner = normalize_to_sl3(&deref(m)?.inner);
        write_boxed(out, HopfMatrix { inner })
    })
}

/// Determinant, gcd(g, h), fundamental group and homology-Hopf flag.
///
/// # Safety
/// `m` must be a live matrix; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_matrix_classify(
    m: *const HopfMatrix,
    out: *mut HopfClassification,
) -> HopfStatus {
    guard(|| {
        let m = &deref(m)?.inner;
        let group = pi1_single_gluing(m);
        let gcd = m.meridian_gcd();
        let result = HopfClassification {
            det: i32::from(m.det()),
            meridian_gcd: to_i64(&gcd)?,
            rank: group.rank() as u32,
            torsion_order: to_i64(&torsion_order(&group))?,
            homology_hopf: gcd.is_one(),
        };
        write(out, result)
    })
}

/// Composes `φ₊⁻¹ ζ φ₋` from the canonical completions of two primitive
/// triples `(a, b, p)` and `(c, d, q)`.
///
/// # Safety
/// `plus` and `minus` must point to three `int64_t` each; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_compose(
    plus: *const i64,
    minus: *const i64,
    out: *mut *mut HopfMatrix,
) -> HopfStatus {
    guard(|| {
        let [a, b, p] = triple(plus)?;
        let [c, d, q] = triple(minus)?;
        let plus = LogTransformParams::from_i64(a, b, p).map_err(|e| HopfStatus::from(&e))?;
        let minus = LogTransformParams::from_i64(c, d, q).map_err(|e| HopfStatus::from(&e))?;
        write_boxed(
            out,
            HopfMatrix {
                inner: compose_two_fiber(&plus, &minus),
            },
        )
    })
}

/// Rank and torsion order `mu` of the fundamental group after two
/// logarithmic transformations, read directly from the presentation.
/// `mu` is 0 when the group is `Z²`.
///
/// # Safety
/// `plus` and `minus` must point to three `int64_t` each; `rank` and `mu`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_pi1_two_log_transforms(
    plus: *const i64,
    minus: *const i64,
    rank: *mut u32,
    mu: *mut i64,
) -> HopfStatus {
    guard(|| {
        let (plus, minus) = (big_triple(triple(plus)?), big_triple(triple(minus)?));
        if rank.is_null() || mu.is_null() {
            return Err(HopfStatus::NullPointer);
        }
        let group = pi1_two_log_transforms(&plus, &minus).map_err(|e| HopfStatus::from(&e))?;
        let value = to_i64(&mu_of(&group))?;
        write(rank, group.rank() as u32)?;
        write(mu, value)
    })
}

/// Reduces a determinant-one homology-Hopf gluing to normal form, or to
/// `[[1,0,1],[0,1,0],[0,0,1]]` when `standard` is set.
///
/// # Safety
/// `m` must be a live matrix; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_reduce(
    m: *const HopfMatrix,
    standard: bool,
    out: *mut *mut HopfCertificate,
) -> HopfStatus {
    guard(|| {
        let m = &deref(m)?.inner;
        let inner = if standard {
            reduce_to_standard(m)
        } else {
            reduce_to_normal_form(m).map(|(_, c)| c)
        }
        .map_err(|e| HopfStatus::from(&e))?;
        let cert = HopfCertificate {
            inner,
            orientation_normalized: false,
        };
        write_boxed(out, cert)
    })
}

/// Writes `true` when every factor is extendable and the product identity holds.
///
/// # Safety
/// `c` must be a live certificate; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_certificate_verify(
    c: *const HopfCertificate,
    out: *mut bool,
) -> HopfStatus {
    guard(|| write(out, verify_certificate(&deref(c)?.inner)))
}

/// Number of left and right factors.
///
/// # Safety
/// `c` must be a live certificate; `left` and `right` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_certificate_factor_counts(
    c: *const HopfCertificate,
    left: *mut usize,
    right: *mut usize,
) -> HopfStatus {
    guard(|| {
        let c = &deref(c)?.inner;
        if left.is_null() || right.is_null() {
            return Err(HopfStatus::NullPointer);
        }
        write(left, c.left_factors.len())?;
        write(right, c.right_factors.len())
    })
}

/// Serializes a certificate as a JSON document. Free the string with
/// [`hopf_string_free`].
///
/// # Safety
/// `c` must be a live certificate; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_certificate_to_json(
    c: *const HopfCertificate,
    out: *mut *mut c_char,
) -> HopfStatus {
    guard(|| {
        let c = deref(c)?;
        let doc = CertificateDocument {
            certificate: c.inner.clone(),
            zeta_variant: calibrated_zeta_variant(),
            orientation_normalized: c.orientation_normalized,
        };
        let text = CString::new(render(&doc.to_value())).map_err(|_| HopfStatus::Internal)?;
        write(out, text.into_raw())
    })
}

/// Parses a certificate document. The certificate is not verified.
///
/// # Safety
/// `json` must be a NUL-terminated UTF-8 string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopf_certificate_from_json(
    json: *const c_char,
    out: *mut *mut HopfCertificate,
) -> HopfStatus {
    guard(|| {
        if json.is_null() {
            return Err(HopfStatus::NullPointer);
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| HopfStatus::ParseError)?;
        let doc = CertificateDocument::parse(text).map_err(|e| HopfStatus::from(&e))?;
        let cert = HopfCertificate {
            inner: doc.certificate,
            orientation_normalized: doc.orientation_normalized,
        };
        write_boxed(out, cert)
    })
}

/// Parses and verifies a certificate document in one call.
/// Returns `HOPF_STATUS_INVALID_CERTIFICATE` when it parses but does not verify.
///
/// # Safety
/// `json` must be a NUL-terminated UTF-8 string.
#[no_mangle]
pub unsafe extern "C" fn hopf_verify_json(json: *const c_char) -> HopfStatus {
    let mut cert = ptr::null_mut();
    let status = hopf_certificate_from_json(json, &mut cert);
    if status != HopfStatus::Ok {
        return status;
    }
    let ok = verify_certificate(&(*cert).inner);
    hopf_certificate_free(cert);
    if ok {
        HopfStatus::Ok
    } else {
        HopfStatus::InvalidCertificate
    }
}

/// Releases a certificate. Null is ignored.
///
/// # Safety
/// `c` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopf_certificate_free(c: *mut HopfCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
