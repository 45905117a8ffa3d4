//! The four-dimensional operator algebra of a single fermionic mode.
//!
//! Every operator is a complex combination of `1`, `a`, `a†` and `a†a`.
//! The relations `a†a + aa† = 1` and `a² = (a†)² = 0` close the product on
//! this basis, and the anti-hermitian units
//!
//! ```text
//! i = i(a + a†),   j = a - a†,   k = ij = i(a†a - aa†)
//! ```
//!
//! satisfy the quaternion relations `i² = j² = k² = ijk = -1`. The same
//! coefficients can therefore be read over `(1, i, j, k)`; [`Basis`] records
//! which reading a value currently carries.
//!
//! [`FockMatrix`] is the 2×2 representation on `{|0⟩, |1⟩}` with `a|1⟩ = |0⟩`.
//! It is faithful, so it doubles as a brute-force oracle for the product.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex coefficient. Serialized as `[re, im]`.
pub type ComplexScalar = Complex64;

pub(crate) const ZERO: ComplexScalar = Complex64::new(0.0, 0.0);
pub(crate) const ONE: ComplexScalar = Complex64::new(1.0, 0.0);
pub(crate) const I: ComplexScalar = Complex64::new(0.0, 1.0);

/// Tolerance for hermiticity of a matrix handed to [`eigenvalues_hermitian`].
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `(1, a, a†, a†a)`
    Standard,
    /// `(1, i, j, k)`
    Quaternion,
}

/// An element of the single-mode operator algebra.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FockOperator {
    basis: Basis,
    c: [ComplexScalar; 4],
}

impl FockOperator {
    pub const fn standard(c: [ComplexScalar; 4]) -> Self {
        Self { basis: Basis::Standard, c }
    }

    pub const fn quaternion(c: [ComplexScalar; 4]) -> Self {
        Self { basis: Basis::Quaternion, c }
    }

    pub const fn zero() -> Self {
        Self::standard([ZERO; 4])
    }

    pub const fn identity() -> Self {
        Self::standard([ONE, ZERO, ZERO, ZERO])
    }

    pub fn scalar(z: ComplexScalar) -> Self {
        Self::standard([z, ZERO, ZERO, ZERO])
    }

    /// The annihilation operator `a`.
    pub const fn annihilation() -> Self {
        Self::standard([ZERO, ONE, ZERO, ZERO])
    }

    /// The creation operator `a†`.
    pub const fn creation() -> Self {
        Self::standard([ZERO, ZERO, ONE, ZERO])
    }

    /// The number operator `a†a`.
    pub const fn number() -> Self {
        Self::standard([ZERO, ZERO, ZERO, ONE])
    }

    /// Quaternion unit `i = i(a + a†)`, in the standard basis.
    pub const fn unit_i() -> Self {
        Self::standard([ZERO, I, I, ZERO])
    }

    /// Quaternion unit `j = a - a†`, in the standard basis.
    pub const fn unit_j() -> Self {
        Self::standard([ZERO, ONE, Complex64::new(-1.0, 0.0), ZERO])
    }

    /// Quaternion unit `k = i(2a†a - 1)`, in the standard basis.
    pub const fn unit_k() -> Self {
        Self::standard([Complex64::new(0.0, -1.0), ZERO, ZERO, Complex64::new(0.0, 2.0)])
    }

    /// `c0 + c1 i + c2 j + c3 k` for real components, in the standard basis.
    pub fn from_real_quaternion(q: [f64; 4]) -> Self {
        let c = q.map(|x| Complex64::new(x, 0.0));
        Self::quaternion(c).to_standard_basis()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Coefficients over the current basis.
    pub fn coefficients(&self) -> [ComplexScalar; 4] {
        self.c
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|z| z.is_finite())
    }

    pub fn to_quaternion_basis(&self) -> Self {
        match self.basis {
            Basis::Quaternion => *self,
            Basis::Standard => {
                let [s0, s1, s2, s3] = self.c;
                let q3 = -I * s3 * 0.5;
                Self::quaternion([s0 + s3 * 0.5, -I * (s1 + s2) * 0.5, (s1 - s2) * 0.5, q3])
            }
        }
    }

    pub fn to_standard_basis(&self) -> Self {
        match self.basis {
            Basis::Standard => *self,
            Basis::Quaternion => {
                let [q0, q1, q2, q3] = self.c;
                Self::standard([q0 - I * q3, I * q1 + q2, I * q1 - q2, I * q3 * 2.0])
            }
        }
    }

    fn same_basis(&self, other: &Self) -> Result<()> {
        if self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch)
        }
    }

    fn in_basis(c: [ComplexScalar; 4], basis: Basis) -> Self {
        let out = Self::standard(c);
        match basis {
            Basis::Standard => out,
            Basis::Quaternion => out.to_quaternion_basis(),
        }
    }

    /// Algebra product `self · other`. The result carries the operands' basis.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        let x = self.to_standard_basis().c;
        let y = other.to_standard_basis().c;
        Ok(Self::in_basis(mul_standard(&x, &y), self.basis))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        let mut c = self.c;
        c.iter_mut().zip(other.c).for_each(|(l, r)| *l += r);
        Ok(Self { basis: self.basis, c })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, z: ComplexScalar) -> Self {
        Self { basis: self.basis, c: self.c.map(|w| w * z) }
    }

    /// Hermitian conjugate: conjugates coefficients and swaps `a` with `a†`.
    pub fn adjoint(&self) -> Self {
        let [s0, s1, s2, s3] = self.to_standard_basis().c;
        Self::in_basis([s0.conj(), s2.conj(), s1.conj(), s3.conj()], self.basis)
    }

    /// `xy + yx`
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.multiply(other)?.add(&other.multiply(self)?)
    }

    /// `xy - yx`
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// Largest coefficient distance to `other`, compared in the standard basis.
    pub fn distance(&self, other: &Self) -> f64 {
        let x = self.to_standard_basis().c;
        let y = other.to_standard_basis().c;
        x.iter().zip(&y).map(|(l, r)| (l - r).norm()).fold(0.0, f64::max)
    }

    pub fn to_matrix(&self) -> FockMatrix {
        let [s0, s1, s2, s3] = self.to_standard_basis().c;
        FockMatrix { m: [[s0, s1], [s2, s0 + s3]] }
    }

    /// Reads the coefficients back off a 2×2 matrix (the representation is onto).
    pub fn from_matrix(m: &FockMatrix) -> Self {
        let [[m00, m01], [m10, m11]] = m.m;
        Self::standard([m00, m01, m10, m11 - m00])
    }
}

/// Product table over `(1, a, a†, a†a)` generated by the anticommutation relations.
fn mul_standard(x: &[ComplexScalar; 4], y: &[ComplexScalar; 4]) -> [ComplexScalar; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[0] + x[1] * y[3],
        x[0] * y[2] + x[2] * y[0] + x[3] * y[2],
        x[0] * y[3] - x[1] * y[2] + x[2] * y[1] + x[3] * y[0] + x[3] * y[3],
    ]
}

/// A 2×2 complex matrix on `{|0⟩, |1⟩}`, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FockMatrix {
    pub m: [[ComplexScalar; 2]; 2],
}

impl FockMatrix {
    pub const fn new(m: [[ComplexScalar; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self::new([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = self.m[r][0] * other.m[0][c] + self.m[r][1] * other.m[1][c];
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.m;
        for (r, row) in out.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry += other.m[r][c];
            }
        }
        Self::new(out)
    }

    pub fn adjoint(&self) -> Self {
        let [[a, b], [c, d]] = self.m;
        Self::new([[a.conj(), c.conj()], [b.conj(), d.conj()]])
    }

    pub fn determinant(&self) -> ComplexScalar {
        let [[a, b], [c, d]] = self.m;
        a * d - b * c
    }

    pub fn apply(&self, v: [ComplexScalar; 2]) -> [ComplexScalar; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    /// Largest entrywise distance.
    pub fn distance(&self, other: &Self) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(l, r)| (l - r).norm())
            .fold(0.0, f64::max)
    }

    pub fn hermiticity_residual(&self) -> f64 {
        self.distance(&self.adjoint())
    }
}

/// Eigenvalues of a hermitian 2×2 matrix, ascending.
pub fn eigenvalues_hermitian(m: &FockMatrix) -> Result<(f64, f64)> {
    let residual = m.hermiticity_residual();
    if residual.is_nan() || residual > HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitian(residual));
    }
    let a = m.m[0][0].re;
    let d = m.m[1][1].re;
    let b = m.m[0][1];
    let mean = 0.5 * (a + d);
    let half_gap = (0.5 * (a - d)).hypot(b.norm());
    Ok((mean - half_gap, mean + half_gap))
}
