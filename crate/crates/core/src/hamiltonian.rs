//! Fermi oscillators in an external field,
//! `H₀ = α(a†a - ½) + β a + β̄ a†`, and their reduction to a single
//! oscillator `E(b†b - ½)` with `E = sqrt(α² + 4|β|²)`.
//!
//! Over the quaternion units `H₀ = -i(v₁ i + v₂ j + v₃ k)` with
//! `v = (Re β, -Im β, α/2)`, while `b†b - ½ = -(i/2) b^[3]` and `b^[3]` is
//! the third row of the rotation matrix applied to `(i, j, k)`. A
//! transformation whose third row is `v/|v|` therefore diagonalizes `H₀`.
//! [`diagonalize`] checks this conjugation on every call.

use serde::{Deserialize, Serialize};

use crate::algebra::{ComplexScalar, FockOperator};
use crate::error::{Error, Result};
use crate::transform::representation::{cross, dot, Vector3};
use crate::transform::{from_kappa, AxisAngle, BVCoefficients, KappaTriple, Transform, CANONICAL_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExternalFieldHamiltonian {
    pub alpha: f64,
    pub beta: ComplexScalar,
}

impl ExternalFieldHamiltonian {
    pub const fn new(alpha: f64, beta: ComplexScalar) -> Self {
        Self { alpha, beta }
    }

    pub fn check(&self) -> Result<()> {
        if !self.alpha.is_finite() || !self.beta.is_finite() {
            return Err(Error::Domain("hamiltonian parameters must be finite".into()));
        }
        if self.alpha < 0.0 {
            return Err(Error::Domain(format!("alpha = {} must be non-negative", self.alpha)));
        }
        Ok(())
    }

    /// `sqrt(α² + 4|β|²)`
    pub fn energy(&self) -> f64 {
        self.alpha.hypot(2.0 * self.beta.norm())
    }

    /// Axis vector `v`, with `|v| = E/2`.
    fn axis(&self) -> Vector3 {
        [self.beta.re, -self.beta.im, 0.5 * self.alpha]
    }
}

pub fn build_operator(h: &ExternalFieldHamiltonian) -> Result<FockOperator> {
    h.check()?;
    Ok(external_field_operator(h.alpha, h.beta, h.beta.conj()))
}

/// `number (a†a - ½) + a_coeff a + a_dag_coeff a†`
fn external_field_operator(number: f64, a: ComplexScalar, a_dag: ComplexScalar) -> FockOperator {
    let n = ComplexScalar::new(number, 0.0);
    FockOperator::standard([n * -0.5, a, a_dag, n])
}

/// `b†b - ½` expanded over `(a†a - ½, a, a†)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FermiOscillatorImage {
    pub number: f64,
    pub a: ComplexScalar,
    pub a_dag: ComplexScalar,
}

impl FermiOscillatorImage {
    pub fn to_operator(&self) -> FockOperator {
        external_field_operator(self.number, self.a, self.a_dag)
    }
}

/// Closed-form coefficients of the transformed Fermi oscillator.
pub fn fermi_oscillator_image(t: &Transform) -> FermiOscillatorImage {
    let BVCoefficients { l00, l01, l10, .. } = t.coefficients();
    FermiOscillatorImage {
        number: l01.norm() - l10.norm(),
        a: l00.conj() * l01 - l00 * l10.conj(),
        a_dag: l00 * l01.conj() - l00.conj() * l10,
    }
}

/// `b†b - ½` computed by multiplying out `b†` and `b`.
pub fn expand_fermi_oscillator(t: &Transform) -> FockOperator {
    let b = t.apply();
    let bdb = b.adjoint().multiply(&b).expect("standard basis");
    bdb.sub(&FockOperator::scalar(ComplexScalar::new(0.5, 0.0))).expect("standard basis")
}

pub fn transform_fermi_oscillator(l: &BVCoefficients) -> Result<FermiOscillatorImage> {
    Ok(fermi_oscillator_image(&Transform::new(*l)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagonalizationResult {
    pub energy: f64,
    pub coefficients: BVCoefficients,
    pub axis_angle: AxisAngle,
}

/// Below this, `e3` counts as parallel to the `(1,0,0)` seed.
const SEED_PARALLEL_EPS: f64 = 1e-8;

pub fn diagonalize(h: &ExternalFieldHamiltonian) -> Result<DiagonalizationResult> {
    h.check()?;
    let energy = h.energy();
    let transform = if energy == 0.0 || h.beta == ComplexScalar::new(0.0, 0.0) {
        Transform::identity()
    } else {
        rotation_onto(&h.axis().map(|x| 2.0 * x / energy))?
    };

    let rebuilt = fermi_oscillator_image(&transform).to_operator().scale(ComplexScalar::new(energy, 0.0));
    let residual = rebuilt.distance(&build_operator(h)?);
    if residual.is_nan() || residual > CANONICAL_TOLERANCE * energy.max(1.0) {
        return Err(Error::Internal(format!("diagonalization does not reproduce H0 (residual {residual:.3e})")));
    }

    Ok(DiagonalizationResult {
        energy,
        coefficients: transform.coefficients(),
        axis_angle: transform.axis_angle(),
    })
}

/// A transformation whose rotation matrix has third row `e3`.
fn rotation_onto(e3: &Vector3) -> Result<Transform> {
    let mut seed = [1.0, 0.0, 0.0];
    let c = cross(e3, &seed);
    if dot(&c, &c).sqrt() < SEED_PARALLEL_EPS {
        seed = [0.0, 1.0, 0.0];
    }
    let along = dot(&seed, e3);
    let e1 = normalize(&[0, 1, 2].map(|i| seed[i] - along * e3[i]));
    let e2 = cross(e3, &e1);
    let k = KappaTriple {
        k01: ComplexScalar::new(e1[0], e2[0]),
        k10: ComplexScalar::new(e1[1], e2[1]),
        k11: ComplexScalar::new(e1[2], e2[2]),
    };
    from_kappa(&k)
}

fn normalize(v: &Vector3) -> Vector3 {
    let n = dot(v, v).sqrt();
    v.map(|x| x / n)
}
