//! The Bogolyubov-Valatin group of a single fermionic mode.
//!
//! A transformation replaces `a` by
//!
//! ```text
//! b = l00 + l01 a + l10 a† + l11 a†a
//! ```
//!
//! and is canonical when `b`, `b†` again obey the anticommutation relations.
//! That happens exactly when
//!
//! ```text
//! 2|l00|² + |l10|² + |l01|² = 1
//! l00² + l10 l01 = 0
//! 2 l00 + l11 = 0
//! ```
//!
//! which also forces `|l10| + |l01| = 1`. Raw coefficient sets are carried by
//! [`BVCoefficients`]; [`Transform`] is a coefficient set that has passed
//! [`BVCoefficients::validate`] and is the receiver for every group operation.
//!
//! The sign of `l00` is never inferred from `l01`, `l10`: both roots of
//! `l00² = -l10 l01` are distinct group elements.

pub(crate) mod representation;
mod sample;
mod su2;

use serde::{Deserialize, Serialize};

use crate::algebra::{ComplexScalar, FockOperator, ONE, ZERO};
use crate::error::{Error, Result};

pub use representation::{from_kappa, isotropic_frame, IsotropicFrame, KappaTriple, RotationMatrix3, Vector3};
pub use sample::HaarSampler;
pub use su2::{AxisAngle, UnitQuaternion};

/// Absolute tolerance for canonicity residuals and oracle comparisons.
pub const CANONICAL_TOLERANCE: f64 = 1e-12;

/// Tolerance for `from_axis_angle(axis_angle_from_coefficients(l)) = l`.
pub const AXIS_ANGLE_ROUND_TRIP_TOLERANCE: f64 = 1e-10;

/// The four complex coefficients `λ^(k;l)` of a transformation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BVCoefficients {
    pub l00: ComplexScalar,
    pub l01: ComplexScalar,
    pub l10: ComplexScalar,
    pub l11: ComplexScalar,
}

/// Residuals of the canonicity conditions, one per condition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    pub eq6a: f64,
    pub eq6b: f64,
    pub eq6c: f64,
    pub eq6d: f64,
}

impl Residuals {
    fn iter(&self) -> impl Iterator<Item = f64> {
        [self.eq6a, self.eq6b, self.eq6c, self.eq6d].into_iter()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub residuals: Residuals,
    pub canonical: bool,
    pub tolerance: f64,
}

impl ValidationReport {
    /// Largest residual; NaN if any coefficient was non-finite.
    pub fn max_residual(&self) -> f64 {
        self.residuals
            .iter()
            .fold(0.0, |acc: f64, r| if r.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(r) })
    }
}

impl BVCoefficients {
    pub const fn new(l00: ComplexScalar, l01: ComplexScalar, l10: ComplexScalar, l11: ComplexScalar) -> Self {
        Self { l00, l01, l10, l11 }
    }

    /// `b = a`
    pub const fn identity() -> Self {
        Self::new(ZERO, ONE, ZERO, ZERO)
    }

    pub fn is_finite(&self) -> bool {
        [self.l00, self.l01, self.l10, self.l11].iter().all(|z| z.is_finite())
    }

    pub fn validate(&self) -> ValidationReport {
        self.validate_within(CANONICAL_TOLERANCE)
    }

    pub fn validate_within(&self, tolerance: f64) -> ValidationReport {
        let Self { l00, l01, l10, l11 } = *self;
        let residuals = Residuals {
            eq6a: (2.0 * l00.norm_sqr() + l10.norm_sqr() + l01.norm_sqr() - 1.0).abs(),
            eq6b: (l00 * l00 + l10 * l01).norm(),
            eq6c: (l00 * 2.0 + l11).norm(),
            eq6d: (l10.norm() + l01.norm() - 1.0).abs(),
        };
        let canonical = self.is_finite() && residuals.iter().all(|r| r <= tolerance);
        ValidationReport { residuals, canonical, tolerance }
    }

    /// The operator `b` built from these coefficients, canonical or not.
    pub fn operator(&self) -> FockOperator {
        FockOperator::standard([self.l00, self.l01, self.l10, self.l11])
    }

    /// Largest coefficient distance to `other`.
    pub fn distance(&self, other: &Self) -> f64 {
        self.operator().distance(&other.operator())
    }
}

/// Coefficients certified canonical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform(BVCoefficients);

impl Transform {
    pub fn new(l: BVCoefficients) -> Result<Self> {
        Self::with_tolerance(l, CANONICAL_TOLERANCE)
    }

    pub fn with_tolerance(l: BVCoefficients, tolerance: f64) -> Result<Self> {
        let report = l.validate_within(tolerance);
        if report.canonical {
            Ok(Self(l))
        } else {
            Err(Error::NotCanonical(Box::new(report)))
        }
    }

    /// Caller guarantees canonicity by construction.
    pub(crate) fn trusted(l: BVCoefficients) -> Self {
        Self(l)
    }

    pub fn identity() -> Self {
        Self(BVCoefficients::identity())
    }

    pub fn coefficients(&self) -> BVCoefficients {
        self.0
    }

    /// The transformed annihilation operator `b`.
    pub fn apply(&self) -> FockOperator {
        self.0.operator()
    }

    /// Coefficients `ν` expressing `a` through `b`, `b†`.
    pub fn invert(&self) -> Self {
        let BVCoefficients { l00, l01, l10, .. } = self.0;
        let nu00 = l00.conj() * l10 - l00 * l01.conj();
        Self(BVCoefficients::new(nu00, l01.conj(), l10, nu00 * -2.0))
    }

    /// `self` applied after `inner`: substitutes the operators produced by
    /// `inner` into this transformation's ansatz.
    pub fn compose(&self, inner: &Self) -> Self {
        Self(substitute(&self.0, &inner.apply()))
    }

    pub fn kappa(&self) -> KappaTriple {
        let BVCoefficients { l01, l10, l11, .. } = self.0;
        KappaTriple { k01: l01 + l10, k10: (l01 - l10) * crate::algebra::I, k11: l11 }
    }

    pub fn rotation_matrix(&self) -> RotationMatrix3 {
        RotationMatrix3::from_kappa(&self.kappa())
    }

    pub fn from_quaternion(q: &UnitQuaternion) -> Self {
        Self(q.coefficients())
    }

    pub fn from_axis_angle(p: &AxisAngle) -> Result<Self> {
        Ok(Self::from_quaternion(&p.to_quaternion()?))
    }

    /// One of the two unit quaternions implementing this transformation.
    pub fn unit_quaternion(&self) -> UnitQuaternion {
        UnitQuaternion::from_coefficients(&self.0)
    }

    /// The canonical axis-angle representative: `phi` in `[0, π]`, `(0,0,1)`
    /// for the identity, first nonzero axis component positive at `phi = π`.
    pub fn axis_angle(&self) -> AxisAngle {
        self.unit_quaternion().to_axis_angle()
    }
}

/// `l00 + l01 b + l10 b† + l11 b†b` for an arbitrary operator `b`.
pub fn substitute(l: &BVCoefficients, b: &FockOperator) -> BVCoefficients {
    let b = b.to_standard_basis();
    let bd = b.adjoint();
    let terms = [
        FockOperator::scalar(l.l00),
        b.scale(l.l01),
        bd.scale(l.l10),
        bd.multiply(&b).expect("standard basis").scale(l.l11),
    ];
    let sum = terms
        .iter()
        .fold(FockOperator::zero(), |acc, t| acc.add(t).expect("standard basis"));
    let [c0, c1, c2, c3] = sum.coefficients();
    BVCoefficients::new(c0, c1, c2, c3)
}

pub fn validate(l: &BVCoefficients) -> ValidationReport {
    l.validate()
}

pub fn apply(l: &BVCoefficients) -> Result<FockOperator> {
    Ok(Transform::new(*l)?.apply())
}

pub fn invert(l: &BVCoefficients) -> Result<BVCoefficients> {
    Ok(Transform::new(*l)?.invert().coefficients())
}

pub fn compose(outer: &BVCoefficients, inner: &BVCoefficients) -> Result<BVCoefficients> {
    let outer = Transform::new(*outer)?;
    let inner = Transform::new(*inner)?;
    Ok(outer.compose(&inner).coefficients())
}

pub fn to_kappa(l: &BVCoefficients) -> Result<KappaTriple> {
    Ok(Transform::new(*l)?.kappa())
}

pub fn rotation_matrix(l: &BVCoefficients) -> Result<RotationMatrix3> {
    Ok(Transform::new(*l)?.rotation_matrix())
}

pub fn from_axis_angle(p: &AxisAngle) -> Result<BVCoefficients> {
    Ok(Transform::from_axis_angle(p)?.coefficients())
}

/// The unit quaternion `U = cos(φ/2) + sin(φ/2)(n₁i + n₂j + n₃k)` as an operator.
pub fn to_unitary(p: &AxisAngle) -> Result<FockOperator> {
    Ok(p.to_quaternion()?.to_operator())
}

pub fn axis_angle_from_coefficients(l: &BVCoefficients) -> Result<AxisAngle> {
    Ok(Transform::new(*l)?.axis_angle())
}
