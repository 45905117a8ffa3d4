//! Unit quaternions `U = w + x i + y j + z k` and their axis-angle form.
//!
//! Conjugating `a` by `U` gives a canonical `b = U a U†`. Writing
//! `p = w - i z` and `r = x + i y` the coefficients are
//!
//! ```text
//! l01 = p²,  l10 = r²,  l11 = -2 l00 = 2i p r
//! ```
//!
//! which are quadratic in `U`, so `U` and `-U` give the same transformation.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::representation::Vector3;
use super::BVCoefficients;
use crate::algebra::{ComplexScalar, FockOperator, I};
use crate::error::{Error, Result};

/// Tolerance on `|n| = 1` and on the quaternion norm.
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// Below this, `|w|` is treated as zero and the angle as exactly `π`.
const HALF_TURN_EPS: f64 = 1e-12;

/// Below this, the vector part is treated as zero and the angle as `0`.
const IDENTITY_EPS: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisAngle {
    pub phi: f64,
    pub n: Vector3,
}

impl AxisAngle {
    pub const fn new(phi: f64, n: Vector3) -> Self {
        Self { phi, n }
    }

    pub fn check(&self) -> Result<()> {
        if !self.phi.is_finite() || !self.n.iter().all(|x| x.is_finite()) {
            return Err(Error::Domain("axis-angle parameters must be finite".into()));
        }
        if !(self.phi > -PI && self.phi <= PI) {
            return Err(Error::Domain(format!("phi = {} outside (-pi, pi]", self.phi)));
        }
        let norm = self.n.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::Domain(format!("axis is not a unit vector (|n| = {norm})")));
        }
        Ok(())
    }

    pub fn to_quaternion(&self) -> Result<UnitQuaternion> {
        self.check()?;
        let (s, c) = (0.5 * self.phi).sin_cos();
        let [n1, n2, n3] = self.n;
        Ok(UnitQuaternion { w: c, x: s * n1, y: s * n2, z: s * n3 })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitQuaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl UnitQuaternion {
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let q = Self { w, x, y, z };
        let norm = q.norm();
        if !norm.is_finite() || (norm - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::Domain(format!("quaternion is not of unit norm (|q| = {norm})")));
        }
        Ok(q)
    }

    /// Scales a nonzero quaternion onto the unit sphere.
    pub fn normalized(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (w * w + x * x + y * y + z * z).sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::Domain("cannot normalize a zero or non-finite quaternion".into()));
        }
        Ok(Self { w: w / norm, x: x / norm, y: y / norm, z: z / norm })
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn negate(&self) -> Self {
        Self { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    /// The operator `w + x i + y j + z k`.
    pub fn to_operator(&self) -> FockOperator {
        FockOperator::from_real_quaternion([self.w, self.x, self.y, self.z])
    }

    fn spinor(&self) -> (ComplexScalar, ComplexScalar) {
        (ComplexScalar::new(self.w, -self.z), ComplexScalar::new(self.x, self.y))
    }

    /// The coefficients of `U a U†`.
    pub fn coefficients(&self) -> BVCoefficients {
        let (p, r) = self.spinor();
        let pr = p * r;
        BVCoefficients::new(-I * pr, p * p, r * r, I * pr * 2.0)
    }

    /// Recovers `±U` from canonical coefficients; the sign is unspecified.
    pub(crate) fn from_coefficients(l: &BVCoefficients) -> Self {
        // Take the square root of the larger of l01 = p², l10 = r²; the
        // other factor follows from l11 = 2i p r.
        let (p, r) = if l.l01.norm() >= l.l10.norm() {
            let p = l.l01.sqrt();
            (p, l.l11 / (I * p * 2.0))
        } else {
            let r = l.l10.sqrt();
            (l.l11 / (I * r * 2.0), r)
        };
        let norm = (p.norm_sqr() + r.norm_sqr()).sqrt();
        let (p, r) = (p / norm, r / norm);
        Self { w: p.re, x: r.re, y: r.im, z: -p.im }
    }

    /// Canonical representative of `±U` in axis-angle form.
    pub fn to_axis_angle(&self) -> AxisAngle {
        let q = if self.w < 0.0 { self.negate() } else { *self };
        let v = [q.x, q.y, q.z];
        let s = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if s <= IDENTITY_EPS {
            return AxisAngle::new(0.0, [0.0, 0.0, 1.0]);
        }
        let mut n = v.map(|x| x / s);
        if q.w <= HALF_TURN_EPS {
            let leading = n.iter().copied().find(|x| x.abs() > HALF_TURN_EPS).unwrap_or(1.0);
            if leading < 0.0 {
                n = n.map(|x| -x);
            }
            return AxisAngle::new(PI, n);
        }
        AxisAngle::new(2.0 * s.atan2(q.w), n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_angle_domain_checks() {
        assert!(AxisAngle::new(PI, [0.0, 1.0, 0.0]).check().is_ok());
        assert!(AxisAngle::new(-PI, [0.0, 1.0, 0.0]).check().is_err());
        assert!(AxisAngle::new(0.5, [0.0, 2.0, 0.0]).check().is_err());
        assert!(AxisAngle::new(f64::NAN, [0.0, 0.0, 1.0]).check().is_err());
    }

    #[test]
    fn quaternion_constructors() {
        assert!(UnitQuaternion::new(1.0, 0.0, 0.0, 0.0).is_ok());
        assert!(UnitQuaternion::new(1.0, 1.0, 0.0, 0.0).is_err());
        let q = UnitQuaternion::normalized(1.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(q, UnitQuaternion { w: 0.5, x: 0.5, y: 0.5, z: 0.5 });
        assert!(UnitQuaternion::normalized(0.0, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn half_turn_axis_sign_convention() {
        let q = UnitQuaternion { w: 0.0, x: 0.0, y: -0.6, z: 0.8 };
        assert_eq!(q.to_axis_angle(), AxisAngle::new(PI, [0.0, 0.6, -0.8]));
        let q = UnitQuaternion { w: -0.0, x: -1.0, y: 0.0, z: 0.0 };
        assert_eq!(q.to_axis_angle(), AxisAngle::new(PI, [1.0, 0.0, 0.0]));
    }

    #[test]
    fn negative_scalar_part_is_folded_into_range() {
        let q = UnitQuaternion::normalized(-1.0, 0.0, 1.0, 0.0).unwrap();
        let p = q.to_axis_angle();
        assert!((p.phi - PI / 2.0).abs() < 1e-15);
        assert!((p.n[1] + 1.0).abs() < 1e-15);
    }
}
