//! Batch checks of the group and representation identities over random
//! inputs. Every trial draws from its own sampler stream, so the report is
//! independent of how trials are split across threads.

use std::f64::consts::PI;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::algebra::{ComplexScalar, FockMatrix, FockOperator};
use crate::fock::{apply_operator, spin_coherent_state};
use crate::hamiltonian::{build_operator, expand_fermi_oscillator, fermi_oscillator_image, ExternalFieldHamiltonian};
use crate::transform::{
    isotropic_frame, substitute, AxisAngle, BVCoefficients, HaarSampler, Transform, UnitQuaternion,
    AXIS_ANGLE_ROUND_TRIP_TOLERANCE, CANONICAL_TOLERANCE,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Property {
    AxisAngleRoundTrip,
    CarPreservation,
    ConjugationIdentity,
    Constraints,
    DiagonalizationRoundTrip,
    DoubleCover,
    FermiOscillatorClosedForm,
    FrameConsistency,
    InversionRoundTrip,
    So3Homomorphism,
    SpecialUnitary,
    VacuumAnnihilation,
}

const PROPERTIES: [Property; 12] = [
    Property::AxisAngleRoundTrip,
    Property::CarPreservation,
    Property::ConjugationIdentity,
    Property::Constraints,
    Property::DiagonalizationRoundTrip,
    Property::DoubleCover,
    Property::FermiOscillatorClosedForm,
    Property::FrameConsistency,
    Property::InversionRoundTrip,
    Property::So3Homomorphism,
    Property::SpecialUnitary,
    Property::VacuumAnnihilation,
];

impl Property {
    fn name(self) -> &'static str {
        match self {
            Self::AxisAngleRoundTrip => "axis_angle_round_trip",
            Self::CarPreservation => "car_preservation",
            Self::ConjugationIdentity => "conjugation_identity",
            Self::Constraints => "constraints",
            Self::DiagonalizationRoundTrip => "diagonalization_round_trip",
            Self::DoubleCover => "double_cover",
            Self::FermiOscillatorClosedForm => "fermi_oscillator_closed_form",
            Self::FrameConsistency => "frame_consistency",
            Self::InversionRoundTrip => "inversion_round_trip",
            Self::So3Homomorphism => "so3_homomorphism",
            Self::SpecialUnitary => "special_unitary",
            Self::VacuumAnnihilation => "vacuum_annihilation",
        }
    }

    fn tolerance(self, base: f64) -> f64 {
        match self {
            Self::AxisAngleRoundTrip => AXIS_ANGLE_ROUND_TRIP_TOLERANCE.max(base),
            _ => base,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: u64,
    /// Sorted by name.
    pub properties: Vec<PropertyResult>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn failing(&self) -> impl Iterator<Item = &PropertyResult> {
        self.properties.iter().filter(|p| !p.passed)
    }
}

/// Runs every property `trials` times with the default tolerance.
pub fn run(seed: u64, trials: u64, jobs: usize) -> VerifyReport {
    run_with_tolerance(seed, trials, jobs, CANONICAL_TOLERANCE)
}

pub fn run_with_tolerance(seed: u64, trials: u64, jobs: usize, tolerance: f64) -> VerifyReport {
    let jobs = jobs.clamp(1, trials.max(1) as usize) as u64;
    let chunk = trials.div_ceil(jobs);
    let partials: Vec<[f64; 12]> = thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let range = (j * chunk)..((j + 1) * chunk).min(trials);
                scope.spawn(move || {
                    range.fold([0.0; 12], |acc, t| merge(&acc, &trial_residuals(seed, t)))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verification worker panicked")).collect()
    });
    let max = partials.iter().fold([0.0; 12], |acc, p| merge(&acc, p));

    let properties: Vec<PropertyResult> = PROPERTIES
        .iter()
        .zip(max)
        .map(|(&p, r)| {
            let tolerance = p.tolerance(tolerance);
            PropertyResult { name: p.name().to_string(), max_residual: r, tolerance, passed: r <= tolerance }
        })
        .collect();
    let passed = properties.iter().all(|p| p.passed);
    VerifyReport { seed, trials, properties, passed }
}

/// Elementwise max that keeps NaN.
fn merge(a: &[f64; 12], b: &[f64; 12]) -> [f64; 12] {
    let mut out = *a;
    for (o, &r) in out.iter_mut().zip(b) {
        *o = if o.is_nan() || r.is_nan() { f64::NAN } else { o.max(r) };
    }
    out
}

fn trial_residuals(seed: u64, trial: u64) -> [f64; 12] {
    let mut rng = HaarSampler::for_trial(seed, trial);
    let lambda = rng.next_transform();
    let mu = rng.next_transform();
    let q = rng.next_quaternion();
    let p = random_axis_angle(&mut rng);
    let h = random_hamiltonian(&mut rng);

    let mut out = [0.0; 12];
    for (slot, prop) in out.iter_mut().zip(PROPERTIES) {
        *slot = match prop {
            Property::AxisAngleRoundTrip => axis_angle_round_trip_residual(&lambda),
            Property::CarPreservation => car_residual(&lambda.coefficients()),
            Property::ConjugationIdentity => conjugation_residual(&p),
            Property::Constraints => lambda.coefficients().validate().max_residual(),
            Property::DiagonalizationRoundTrip => diagonalization_residual(&h),
            Property::DoubleCover => double_cover_residual(&q),
            Property::FermiOscillatorClosedForm => fermi_oscillator_residual(&lambda),
            Property::FrameConsistency => frame_residual(&lambda),
            Property::InversionRoundTrip => inversion_residual(&lambda, &lambda.invert().coefficients()),
            Property::So3Homomorphism => homomorphism_residual(&mu, &lambda),
            Property::SpecialUnitary => special_unitary_residual(&p),
            Property::VacuumAnnihilation => vacuum_residual(&p),
        };
    }
    out
}

/// Uniform angle in `(-π, π]` and an isotropic unit axis.
pub fn random_axis_angle(rng: &mut HaarSampler) -> AxisAngle {
    let phi = -rng.uniform(-PI, PI);
    let n = loop {
        let v = [rng.normal(), rng.normal(), rng.normal()];
        let s = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if s > 1e-6 {
            break v.map(|x| x / s);
        }
    };
    AxisAngle::new(phi, n)
}

/// `alpha` uniform in `[0, 10)`, `beta` uniform in the disc `|beta| ≤ 10`.
pub fn random_hamiltonian(rng: &mut HaarSampler) -> ExternalFieldHamiltonian {
    let alpha = rng.uniform(0.0, 10.0);
    let radius = 10.0 * rng.uniform(0.0, 1.0).sqrt();
    let angle = rng.uniform(-PI, PI);
    ExternalFieldHamiltonian::new(alpha, ComplexScalar::from_polar(radius, angle))
}

/// `{B, B†} = I` and `B² = 0` for the matrix of `b`.
pub fn car_residual(l: &BVCoefficients) -> f64 {
    let b = l.operator().to_matrix();
    let bd = b.adjoint();
    let anti = b.mul(&bd).add(&bd.mul(&b)).distance(&FockMatrix::identity());
    let square = b.mul(&b).distance(&FockMatrix::new([[ComplexScalar::new(0.0, 0.0); 2]; 2]));
    anti.max(square)
}

/// Distance of `ν00 + ν01 b + ν10 b† + ν11 b†b` from `a`, and of
/// `compose(ν, l)` from the identity, with the matrix oracle for the first.
pub fn inversion_residual(l: &Transform, nu: &BVCoefficients) -> f64 {
    let b = l.apply().to_matrix();
    let bd = b.adjoint();
    let scaled = |m: &FockMatrix, z: ComplexScalar| FockMatrix::new(m.m.map(|row| row.map(|x| x * z)));
    let a = scaled(&FockMatrix::identity(), nu.l00)
        .add(&scaled(&b, nu.l01))
        .add(&scaled(&bd, nu.l10))
        .add(&scaled(&bd.mul(&b), nu.l11));
    let via_matrix = a.distance(&FockOperator::annihilation().to_matrix());
    let via_algebra = substitute(nu, &l.apply()).distance(&BVCoefficients::identity());
    via_matrix.max(via_algebra)
}

/// `A(μ∘λ) = A(μ)A(λ)`, `A(λ⁻¹) = A(λ)ᵀ`, orthogonality and `det A = 1`.
pub fn homomorphism_residual(mu: &Transform, lambda: &Transform) -> f64 {
    let a_mu = mu.rotation_matrix();
    let a_lambda = lambda.rotation_matrix();
    let product = mu.compose(lambda).rotation_matrix().distance(&a_mu.mul(&a_lambda));
    let inverse = lambda.invert().rotation_matrix().distance(&a_lambda.transpose());
    let orthogonal = a_lambda.orthogonality_residual();
    let det = (a_lambda.determinant() - 1.0).abs();
    product.max(inverse).max(orthogonal).max(det)
}

pub fn frame_residual(l: &Transform) -> f64 {
    let frame = match isotropic_frame(&l.kappa()) {
        Ok(f) => f,
        Err(_) => return f64::INFINITY,
    };
    let a = l.rotation_matrix();
    let rows = crate::transform::RotationMatrix3 { rows: frame.rows() };
    rows.distance(&a).max(frame.orthonormality_residual())
}

pub fn double_cover_residual(q: &UnitQuaternion) -> f64 {
    q.coefficients().distance(&q.negate().coefficients())
}

/// `U a U†` by operator algebra against the closed-form coefficients.
pub fn conjugation_residual(p: &AxisAngle) -> f64 {
    let (Ok(u), Ok(t)) = (p.to_quaternion(), Transform::from_axis_angle(p)) else {
        return f64::INFINITY;
    };
    let u = u.to_operator();
    let uau = u
        .multiply(&FockOperator::annihilation())
        .and_then(|x| x.multiply(&u.adjoint()))
        .expect("standard basis");
    uau.distance(&t.apply())
}

pub fn special_unitary_residual(p: &AxisAngle) -> f64 {
    let Ok(q) = p.to_quaternion() else {
        return f64::INFINITY;
    };
    let u = q.to_operator().to_matrix();
    let unitary = u.adjoint().mul(&u).distance(&FockMatrix::identity());
    let det = (u.determinant() - ComplexScalar::new(1.0, 0.0)).norm();
    unitary.max(det)
}

/// `|b U|0⟩|` together with the deviation of `|U|0⟩|` from one.
pub fn vacuum_residual(p: &AxisAngle) -> f64 {
    let (Ok(q), Ok(t)) = (p.to_quaternion(), Transform::from_axis_angle(p)) else {
        return f64::INFINITY;
    };
    let state = spin_coherent_state(&q);
    apply_operator(&t.apply(), &state).norm().max((state.norm() - 1.0).abs())
}

pub fn axis_angle_round_trip_residual(l: &Transform) -> f64 {
    match Transform::from_axis_angle(&l.axis_angle()) {
        Ok(back) => back.coefficients().distance(&l.coefficients()),
        Err(_) => f64::INFINITY,
    }
}

pub fn fermi_oscillator_residual(l: &Transform) -> f64 {
    fermi_oscillator_image(l).to_operator().distance(&expand_fermi_oscillator(l))
}

/// Reconstruction error of `E(b†b - ½)` against `H₀` relative to
/// `max(1, E)`, and the gap between `E` and the oracle eigenvalue spread.
pub fn diagonalization_residual(h: &ExternalFieldHamiltonian) -> f64 {
    let Ok(result) = crate::hamiltonian::diagonalize(h) else {
        return f64::INFINITY;
    };
    let Ok(t) = Transform::new(result.coefficients) else {
        return f64::INFINITY;
    };
    let h0 = build_operator(h).expect("checked by diagonalize");
    let energy = result.energy;
    let rebuilt = expand_fermi_oscillator(&t).scale(ComplexScalar::new(energy, 0.0));
    let scale = energy.max(1.0);
    let round_trip = rebuilt.distance(&h0) / scale;
    let spectrum = match crate::algebra::eigenvalues_hermitian(&h0.to_matrix()) {
        Ok((lo, hi)) => ((hi - lo) - energy).abs() / scale,
        Err(_) => f64::INFINITY,
    };
    round_trip.max(spectrum)
}
