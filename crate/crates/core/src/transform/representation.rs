//! The isotropic vector `e′ = (κ01, κ10, κ11)` and the SO(3) matrix built
//! from it.

use serde::{Deserialize, Serialize};

use super::{BVCoefficients, Transform, CANONICAL_TOLERANCE};
use crate::algebra::{ComplexScalar, I};
use crate::error::{Error, Result};

pub type Vector3 = [f64; 3];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KappaTriple {
    pub k01: ComplexScalar,
    pub k10: ComplexScalar,
    pub k11: ComplexScalar,
}

impl KappaTriple {
    pub fn components(&self) -> [ComplexScalar; 3] {
        [self.k01, self.k10, self.k11]
    }

    /// `(| |e′|² - 2 |, |e′ᵀe′|)`
    pub fn isotropy_residuals(&self) -> (f64, f64) {
        let e = self.components();
        let norm = e.iter().map(|z| z.norm_sqr()).sum::<f64>();
        let square: ComplexScalar = e.iter().map(|z| z * z).sum();
        ((norm - 2.0).abs(), square.norm())
    }

    fn check(&self) -> Result<()> {
        let (norm, square) = self.isotropy_residuals();
        if norm <= CANONICAL_TOLERANCE && square <= CANONICAL_TOLERANCE {
            Ok(())
        } else {
            Err(Error::Constraint(format!(
                "kappa is not isotropic: | |e|^2 - 2 | = {norm:.3e}, |e.e| = {square:.3e}"
            )))
        }
    }

    pub fn real_part(&self) -> Vector3 {
        self.components().map(|z| z.re)
    }

    pub fn imag_part(&self) -> Vector3 {
        self.components().map(|z| z.im)
    }
}

/// Inverse of `Transform::kappa`; the map is linear, so there is no branch.
pub fn from_kappa(k: &KappaTriple) -> Result<Transform> {
    k.check()?;
    let l01 = (k.k01 - I * k.k10) * 0.5;
    let l10 = (k.k01 + I * k.k10) * 0.5;
    Ok(Transform::trusted(BVCoefficients::new(k.k11 * -0.5, l01, l10, k.k11)))
}

/// Orthonormal triple `e1 = Re e′`, `e2 = Im e′`, `e3 = e1 × e2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsotropicFrame {
    pub e1: Vector3,
    pub e2: Vector3,
    pub e3: Vector3,
}

pub fn isotropic_frame(k: &KappaTriple) -> Result<IsotropicFrame> {
    k.check()?;
    let e1 = k.real_part();
    let e2 = k.imag_part();
    Ok(IsotropicFrame { e1, e2, e3: cross(&e1, &e2) })
}

impl IsotropicFrame {
    pub fn rows(&self) -> [Vector3; 3] {
        [self.e1, self.e2, self.e3]
    }

    /// Largest deviation from orthonormality and from `e3 = e1 × e2`.
    pub fn orthonormality_residual(&self) -> f64 {
        let handed = cross(&self.e1, &self.e2);
        let cross_err = (0..3).map(|i| (handed[i] - self.e3[i]).abs()).fold(0.0, f64::max);
        RotationMatrix3 { rows: self.rows() }.orthogonality_residual().max(cross_err)
    }
}

pub(crate) fn cross(u: &Vector3, v: &Vector3) -> Vector3 {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

pub(crate) fn dot(u: &Vector3, v: &Vector3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

/// Real 3×3 matrix, row-major. Serialized as a nested array.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RotationMatrix3 {
    pub rows: [Vector3; 3],
}

impl RotationMatrix3 {
    pub fn identity() -> Self {
        Self { rows: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] }
    }

    /// Rows `Re e′`, `Im e′` and `(Im(κ̄10 κ11), Im(κ̄11 κ01), Im(κ̄01 κ10))`.
    pub fn from_kappa(k: &KappaTriple) -> Self {
        let KappaTriple { k01, k10, k11 } = *k;
        let third = [(k10.conj() * k11).im, (k11.conj() * k01).im, (k01.conj() * k10).im];
        Self { rows: [k.real_part(), k.imag_part(), third] }
    }

    pub fn transpose(&self) -> Self {
        let r = &self.rows;
        Self { rows: [0, 1, 2].map(|i| [r[0][i], r[1][i], r[2][i]]) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cols = other.transpose().rows;
        Self { rows: self.rows.map(|row| cols.map(|col| dot(&row, &col))) }
    }

    pub fn determinant(&self) -> f64 {
        dot(&self.rows[0], &cross(&self.rows[1], &self.rows[2]))
    }

    /// Largest entry of `|AᵀA - I|`.
    pub fn orthogonality_residual(&self) -> f64 {
        self.transpose().mul(self).distance(&Self::identity())
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .zip(other.rows.iter().flatten())
            .map(|(l, r)| (l - r).abs())
            .fold(0.0, f64::max)
    }
}
