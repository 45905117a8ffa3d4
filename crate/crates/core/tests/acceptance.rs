//! Acceptance suite. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p bvq --test acceptance -- --nocapture` to see them.

use std::process::Command;
use std::time::{Duration, Instant};

use bvq::hamiltonian::{build_operator, expand_fermi_oscillator, fermi_oscillator_image};
use bvq::transform::{isotropic_frame, substitute, BVCoefficients, HaarSampler, RotationMatrix3, Transform, UnitQuaternion};
use bvq::verify::{
    car_residual, conjugation_residual, homomorphism_residual, inversion_residual, random_axis_angle, random_hamiltonian,
    special_unitary_residual, vacuum_residual,
};
use bvq::{diagonalize, eigenvalues_hermitian, ExternalFieldHamiltonian};
use num_complex::Complex64 as C;

const SEED: u64 = 20040624;
const SAMPLES: usize = 1000;
const TOL: f64 = 1e-12;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn max(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |acc, r| if r.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(r) })
}

fn samples() -> Vec<Transform> {
    let mut s = HaarSampler::new(SEED);
    (0..SAMPLES).map(|_| s.next_transform()).collect()
}

fn constraint_suite() -> Outcome {
    let start = Instant::now();
    let ts = samples();
    let worst = max(ts.iter().map(|t| t.coefficients().validate().max_residual()));
    let all = ts.iter().all(|t| t.coefficients().validate().canonical);
    let elapsed = start.elapsed();
    outcome(
        all && worst < TOL && elapsed < Duration::from_secs(1),
        format!("max residual {worst:.2e}, {:.1} ms", elapsed.as_secs_f64() * 1e3),
    )
}

fn car_preservation() -> Outcome {
    let worst = max(samples().iter().map(|t| car_residual(&t.coefficients())));
    outcome(worst < TOL, format!("max residual {worst:.2e}"))
}

fn inversion() -> Outcome {
    let ts = samples();
    let round_trip = max(ts.iter().map(|t| inversion_residual(t, &t.invert().coefficients())));
    let group = max(ts.iter().map(|t| t.invert().compose(t).coefficients().distance(&BVCoefficients::identity())));
    let expressed = max(ts.iter().map(|t| substitute(&t.invert().coefficients(), &t.apply()).distance(&BVCoefficients::identity())));

    let l = BVCoefficients::new(C::new(0.0, 0.5), C::new(0.5, 0.0), C::new(0.5, 0.0), C::new(0.0, -1.0));
    let expected = BVCoefficients::new(C::new(0.0, -0.5), C::new(0.5, 0.0), C::new(0.5, 0.0), C::new(0.0, 1.0));
    let worked = bvq::transform::invert(&l).map(|nu| nu.distance(&expected)).unwrap_or(f64::INFINITY);

    outcome(
        round_trip < TOL && group < TOL && expressed < TOL && worked < 1e-15,
        format!("round trip {round_trip:.2e}, compose {group:.2e}, worked value {worked:.2e}"),
    )
}

fn so3_representation() -> Outcome {
    let ts = samples();
    let orth = max(ts.iter().map(|t| t.rotation_matrix().orthogonality_residual()));
    let det = max(ts.iter().map(|t| (t.rotation_matrix().determinant() - 1.0).abs()));
    let rows = max(ts.iter().map(|t| match isotropic_frame(&t.kappa()) {
        Ok(f) => RotationMatrix3 { rows: f.rows() }.distance(&t.rotation_matrix()),
        Err(_) => f64::INFINITY,
    }));
    outcome(
        orth < TOL && det < TOL && rows < TOL,
        format!("AᵀA-I {orth:.2e}, det-1 {det:.2e}, frame rows {rows:.2e}"),
    )
}

fn homomorphism_and_double_cover() -> Outcome {
    let mut s = HaarSampler::new(SEED ^ 0x5a5a);
    let hom = max((0..SAMPLES).map(|_| {
        let (mu, lambda) = (s.next_transform(), s.next_transform());
        homomorphism_residual(&mu, &lambda)
    }));
    let cover = max((0..SAMPLES).map(|_| {
        let q: UnitQuaternion = s.next_quaternion();
        let direct = q.coefficients().distance(&q.negate().coefficients());
        let rebuilt = Transform::from_axis_angle(&q.negate().to_axis_angle())
            .map(|t| t.coefficients().distance(&q.coefficients()))
            .unwrap_or(f64::INFINITY);
        direct.max(rebuilt)
    }));
    outcome(hom < TOL && cover < TOL, format!("homomorphism {hom:.2e}, sign flip {cover:.2e}"))
}

fn unitary_implementation() -> Outcome {
    let mut s = HaarSampler::new(SEED + 6);
    let ps: Vec<_> = (0..SAMPLES).map(|_| random_axis_angle(&mut s)).collect();
    let conj = max(ps.iter().map(conjugation_residual));
    let su = max(ps.iter().map(special_unitary_residual));
    outcome(conj < TOL && su < TOL, format!("U a U† {conj:.2e}, special unitary {su:.2e}"))
}

fn transformed_vacuum() -> Outcome {
    let mut s = HaarSampler::new(SEED + 7);
    let worst = max((0..SAMPLES).map(|_| vacuum_residual(&random_axis_angle(&mut s))));
    outcome(worst < TOL, format!("|b|0⟩_λ| max {worst:.2e}"))
}

fn diagonalization() -> Outcome {
    let mut s = HaarSampler::new(SEED + 8);
    let mut gap_err: f64 = 0.0;
    let mut rebuild_err: f64 = 0.0;
    for _ in 0..SAMPLES {
        let h = random_hamiltonian(&mut s);
        let Ok(r) = diagonalize(&h) else {
            return outcome(false, format!("diagonalize failed for {h:?}"));
        };
        let h0 = build_operator(&h).unwrap();
        let (lo, hi) = eigenvalues_hermitian(&h0.to_matrix()).unwrap();
        let formula = (h.alpha * h.alpha + 4.0 * h.beta.norm_sqr()).sqrt();
        gap_err = gap_err.max((r.energy - (hi - lo)).abs()).max((r.energy - formula).abs());
        let t = Transform::new(r.coefficients).unwrap();
        let rebuilt = expand_fermi_oscillator(&t).scale(C::new(r.energy, 0.0));
        rebuild_err = rebuild_err.max(rebuilt.distance(&h0) / r.energy.max(1.0));
    }
    let exact = diagonalize(&ExternalFieldHamiltonian::new(3.0, C::new(2.0, 0.0)))
        .map(|r| (r.energy - 5.0).abs())
        .unwrap_or(f64::INFINITY);
    outcome(
        gap_err < TOL && rebuild_err < TOL && exact < 1e-14,
        format!("energy vs gap {gap_err:.2e}, rebuild {rebuild_err:.2e} (relative), (3,2) error {exact:.1e}"),
    )
}

fn fermi_oscillator_cross_check() -> Outcome {
    let mut ts = samples();
    // |l01| = |l10| = 1/2 gives a linear image; identity is the opposite extreme
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut s = HaarSampler::new(SEED + 9);
    for _ in 0..100 {
        let (theta, chi) = (s.uniform(-3.0, 3.0), s.uniform(-3.0, 3.0));
        let q = UnitQuaternion::new(h * theta.cos(), h * chi.cos(), h * chi.sin(), -h * theta.sin()).unwrap();
        ts.push(Transform::from_quaternion(&q));
    }
    ts.push(Transform::identity());

    let closed_form = max(ts.iter().map(|t| fermi_oscillator_image(t).to_operator().distance(&expand_fermi_oscillator(t))));
    let mismatched = ts
        .iter()
        .filter(|t| {
            let l = t.coefficients();
            let expanded_number = expand_fermi_oscillator(t).coefficients()[3].norm();
            (expanded_number < TOL) != ((l.l01.norm() - l.l10.norm()).abs() < TOL)
        })
        .count();
    outcome(
        closed_form < TOL && mismatched == 0,
        format!("closed form vs expansion {closed_form:.2e}, iff violations {mismatched}/{}", ts.len()),
    )
}

fn cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_bvq");
    let sample = || Command::new(bin).args(["sample", "--seed", "0", "--count", "10"]).output().unwrap();
    let (a, b) = (sample(), sample());
    let identical = a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();

    let start = Instant::now();
    let verify = Command::new(bin).args(["verify", "--trials", "1000"]).output().unwrap();
    let elapsed = start.elapsed();
    let ok = verify.status.code() == Some(0);
    outcome(
        identical && ok && elapsed < Duration::from_secs(5),
        format!("sample byte-identical: {identical}, verify exit {:?} in {:.2} s", verify.status.code(), elapsed.as_secs_f64()),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("constraint suite", constraint_suite),
        ("CAR preservation", car_preservation),
        ("inversion", inversion),
        ("SO(3) representation", so3_representation),
        ("homomorphism + double cover", homomorphism_and_double_cover),
        ("unitary implementation", unitary_implementation),
        ("transformed vacuum", transformed_vacuum),
        ("diagonalization", diagonalization),
        ("Fermi oscillator cross-check", fermi_oscillator_cross_check),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let o = check();
        println!("{:>2}. [{}] {name}: {}", i + 1, if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if !o.passed {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
