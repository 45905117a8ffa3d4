//! C ABI over `bvq`.
//!
//! Plain data (coefficients, axis-angle pairs, states) crosses the boundary by
//! value in `#[repr(C)]` structs. Certified transformations and samplers are
//! opaque heap handles owned by the caller and released with the matching
//! `*_free` function. Every fallible call returns a [`BvqStatus`]; out
//! parameters are written only on `BVQ_STATUS_OK`.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bvq::transform::{Residuals, CANONICAL_TOLERANCE};
use bvq::{AxisAngle, BVCoefficients, ComplexScalar, Error, ExternalFieldHamiltonian, HaarSampler, StateVector, Transform};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BvqStatus {
    Ok = 0,
    NullPointer = 1,
    NotCanonical = 2,
    Domain = 3,
    Constraint = 4,
    NotHermitian = 5,
    BasisMismatch = 6,
    Internal = 7,
    Panic = 8,
}

impl From<&Error> for BvqStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::BasisMismatch => Self::BasisMismatch,
            Error::NotCanonical(_) => Self::NotCanonical,
            Error::Domain(_) => Self::Domain,
            Error::Constraint(_) => Self::Constraint,
            Error::NotHermitian(_) => Self::NotHermitian,
            Error::Internal(_) => Self::Internal,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BvqComplex {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexScalar> for BvqComplex {
    fn from(z: ComplexScalar) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<BvqComplex> for ComplexScalar {
    fn from(z: BvqComplex) -> Self {
        ComplexScalar::new(z.re, z.im)
    }
}

/// Coefficients of `b = l00 + l01 a + l10 a† + l11 a†a`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BvqCoefficients {
    pub l00: BvqComplex,
    pub l01: BvqComplex,
    pub l10: BvqComplex,
    pub l11: BvqComplex,
}

impl From<BVCoefficients> for BvqCoefficients {
    fn from(l: BVCoefficients) -> Self {
        Self { l00: l.l00.into(), l01: l.l01.into(), l10: l.l10.into(), l11: l.l11.into() }
    }
}

impl From<BvqCoefficients> for BVCoefficients {
    fn from(l: BvqCoefficients) -> Self {
        BVCoefficients::new(l.l00.into(), l.l01.into(), l.l10.into(), l.l11.into())
    }
}

/// Canonicity residuals, one per constraint, as in the JSON validation report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BvqResiduals {
    pub eq6a: f64,
    pub eq6b: f64,
    pub eq6c: f64,
    pub eq6d: f64,
}

impl From<Residuals> for BvqResiduals {
    fn from(r: Residuals) -> Self {
        Self { eq6a: r.eq6a, eq6b: r.eq6b, eq6c: r.eq6c, eq6d: r.eq6d }
    }
}

/// Rotation by `phi` about the unit axis `n`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BvqAxisAngle {
    pub phi: f64,
    pub n: [f64; 3],
}

impl From<AxisAngle> for BvqAxisAngle {
    fn from(p: AxisAngle) -> Self {
        Self { phi: p.phi, n: p.n }
    }
}

impl From<BvqAxisAngle> for AxisAngle {
    fn from(p: BvqAxisAngle) -> Self {
        AxisAngle::new(p.phi, p.n)
    }
}

/// Amplitudes on `|0⟩` and `|1⟩`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BvqState {
    pub amp0: BvqComplex,
    pub amp1: BvqComplex,
}

impl From<StateVector> for BvqState {
    fn from(s: StateVector) -> Self {
        Self { amp0: s.amp0.into(), amp1: s.amp1.into() }
    }
}

/// A transformation known to satisfy the canonicity constraints.
pub struct BvqTransform(Transform);

/// Deterministic Haar-uniform generator of transformations.
pub struct BvqSampler(HaarSampler);

fn guard(f: impl FnOnce() -> Result<(), BvqStatus>) -> BvqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BvqStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => BvqStatus::Panic,
    }
}

fn lift<T>(r: bvq::Result<T>) -> Result<T, BvqStatus> {
    r.map_err(|e| BvqStatus::from(&e))
}

unsafe fn read<'a, T>(p: *const T) -> Result<&'a T, BvqStatus> {
    p.as_ref().ok_or(BvqStatus::NullPointer)
}

unsafe fn write<T>(p: *mut T, value: T) {
    p.write(value)
}

fn boxed(t: Transform) -> *mut BvqTransform {
    Box::into_raw(Box::new(BvqTransform(t)))
}

/// Static, NUL-terminated description of a status code. Never free it.
#[no_mangle]
pub extern "C" fn bvq_status_message(status: BvqStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        BvqStatus::Ok => b"ok\0",
        BvqStatus::NullPointer => b"null pointer argument\0",
        BvqStatus::NotCanonical => b"coefficients are not canonical\0",
        BvqStatus::Domain => b"argument outside the domain\0",
        BvqStatus::Constraint => b"constraint violated\0",
        BvqStatus::NotHermitian => b"operator is not hermitian\0",
        BvqStatus::BasisMismatch => b"operands are expressed in different bases\0",
        BvqStatus::Internal => b"internal consistency check failed\0",
        BvqStatus::Panic => b"unexpected panic inside bvq\0",
    };
    s.as_ptr().cast()
}

/// Default tolerance used by the library for canonicity checks.
#[no_mangle]
pub extern "C" fn bvq_default_tolerance() -> f64 {
    CANONICAL_TOLERANCE
}

/// Computes the canonicity residuals of `l` and whether they are all within
/// `tolerance`. Either out pointer may be null if that result is not wanted.
///
/// # Safety
/// `l` must point to a valid `BvqCoefficients`; non-null out pointers must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bvq_validate(
    l: *const BvqCoefficients,
    tolerance: f64,
    out_residuals: *mut BvqResiduals,
    out_canonical: *mut bool,
) -> BvqStatus {
    guard(|| {
        let l = BVCoefficients::from(*read(l)?);
        let report = l.validate_within(tolerance);
        if !out_residuals.is_null() {
            write(out_residuals, report.residuals.into());
        }
        if !out_canonical.is_null() {
            write(out_canonical, report.canonical);
        }
        Ok(())
    })
}

/// Certifies `l` at `tolerance` and returns a new handle in `*out`.
///
/// # Safety
/// `l` must point to a valid `BvqCoefficients` and `out` must be valid for
/// writes. The handle must be released with `bvq_transform_free`.
#[no_mangle]
pub unsafe extern "C" fn bvq_transform_new(
    l: *const BvqCoefficients,
    tolerance: f64,
    out: *mut *mut BvqTransform,
) -> BvqStatus {
    guard(|| {
        let l = *read(l)?;
        if out.is_null() {
            return Err(BvqStatus::NullPointer);
        }
        let t = lift(Transform::with_tolerance(l.into(), tolerance))?;
        write(out, boxed(t));
        Ok(())
    })
}

/// Returns a new handle to the identity transformation `b = a`.
#[no_mangle]
pub extern "C" fn bvq_transform_identity() -> *mut BvqTransform {
    boxed(Transform::identity())
}

/// Builds the transformation implemented by rotating `phi` about `n`.
///
/// # Safety
/// `p` must point to a valid `BvqAxisAngle` and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bvq_transform_from_axis_angle(p: *const BvqAxisAngle, out: *mut *mut BvqTransform) -> BvqStatus {
    guard(|| {
        let p = *read(p)?;
        if out.is_null() {
            return Err(BvqStatus::NullPointer);
        }
        let t = lift(Transform::from_axis_angle(&p.into()))?;
        write(out, boxed(t));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `t` must be null or a handle returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn bvq_transform_free(t: *mut BvqTransform) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live handle and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bvq_transform_coefficients(t: *const BvqTransform, out: *mut BvqCoefficients) -> BvqStatus {
    guard(|| {
        let t = read(t)?;
        if out.is_null() {
            return Err(BvqStatus::NullPointer);
        }
        write(out, t.0.coefficients().into());
        Ok(())
    })
}

/// Returns the inverse transformation as a new handle.
///
/// # Safety
/// `t` must be a live handle and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bvq_transform_invert(t: *const BvqTransform, out: *mut *mut BvqTransform) -> BvqStatus {
    guard(|| {
        let t = read(t)?;
        if out.is_null() {
            return Err(BvqStatus::NullPointer);
        }
        write(out, boxed(t.0.invert()));
        Ok(())
    })
}

/// Applies `inner` first, then `outer`, and returns the result as a new handle.
///
/// # Safety
/// `outer` and `inner` must be live handles and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bvq_transform_compose(
    outer: *const BvqTransform,
    inner: *const BvqTransform,
    out: *mut *mut BvqTransform,
) -> BvqStatus {
    guard(|| {
        let (outer, inner) = (read(outer)?, read(inner)?);
        if out.is_null() {
            return Err(BvqStatus::NullPointer);
        }
        write(out, boxed(outer.0.compose(&inner.0)));
        Ok(())
    })
}

/// Writes the 3×3 rotation matrix in row-major order.
///
/// # Safety
/// `t` must be a live handle and `out` must point to 9 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn bvq_transform_rotation_matrix(t: *const BvqTransform, out: *mut f64) -> BvqStatus {
    guard(|| {
        let t = read(t)?;
        if out.is_null() {
            return Err(BvqStatus::NullPointer);
        }
        let flat = t.0.rotation_matrix().rows.concat();
        ptr::copy_nonoverlapping(flat.as_ptr(), out, flat.len());
        Ok(())
    })
}

/// Writes the canonical axis-angle form, with `phi` in `[0, π]`.
///
/// # Safety
/// `t` must be a live handle and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bvq_transform_axis_angle(t: *const BvqTransform, out: *mut BvqAxisAngle) -> BvqStatus {
    guard(|| {
        let t = read(t)?;
        if out.is_null() {
            return Err(BvqStatus::NullPointer);
        }
        write(out, t.0.axis_angle().into());
        Ok(())
    })
}

/// The vacuum of the transformed mode, `U|0⟩`.
///
/// # Safety
/// `p` must point to a valid `BvqAxisAngle` and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bvq_transformed_vacuum(p: *const BvqAxisAngle, out: *mut BvqState) -> BvqStatus {
    guard(|| {
        let p = *read(p)?;
        if out.is_null() {
            return Err(BvqStatus::NullPointer);
        }
        write(out, lift(bvq::transformed_vacuum(&p.into()))?.into());
        Ok(())
    })
}

/// Diagonalizes `α a†a + β a + β̄ a†`. Writes the excitation energy and a
/// transformation mapping it onto `E (b†b - 1/2)` up to a constant.
/// `out_axis_angle` may be null.
///
/// # Safety
/// `out_energy` and `out_coefficients` must be valid for writes; a non-null
/// `out_axis_angle` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bvq_diagonalize(
    alpha: f64,
    beta: BvqComplex,
    out_energy: *mut f64,
    out_coefficients: *mut BvqCoefficients,
    out_axis_angle: *mut BvqAxisAngle,
) -> BvqStatus {
    guard(|| {
        if out_energy.is_null() || out_coefficients.is_null() {
            return Err(BvqStatus::NullPointer);
        }
        let r = lift(bvq::diagonalize(&ExternalFieldHamiltonian::new(alpha, beta.into())))?;
        write(out_energy, r.energy);
        write(out_coefficients, r.coefficients.into());
        if !out_axis_angle.is_null() {
            write(out_axis_angle, r.axis_angle.into());
        }
        Ok(())
    })
}

/// A sampler seeded with `seed`; the same seed gives the same sequence as
/// `bvq sample --seed`.
#[no_mangle]
pub extern "C" fn bvq_sampler_new(seed: u64) -> *mut BvqSampler {
    Box::into_raw(Box::new(BvqSampler(HaarSampler::new(seed))))
}

/// Releases a sampler. Null is ignored.
///
/// # Safety
/// `s` must be null or a sampler returned by `bvq_sampler_new` that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn bvq_sampler_free(s: *mut BvqSampler) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Draws the next transformation as a new handle.
///
/// # Safety
/// `s` must be a live sampler not used concurrently from another thread, and
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bvq_sampler_next(s: *mut BvqSampler, out: *mut *mut BvqTransform) -> BvqStatus {
    guard(|| {
        let s = s.as_mut().ok_or(BvqStatus::NullPointer)?;
        if out.is_null() {
            return Err(BvqStatus::NullPointer);
        }
        write(out, boxed(s.0.next_transform()));
        Ok(())
    })
}
