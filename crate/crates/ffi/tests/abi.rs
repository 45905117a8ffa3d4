use std::ptr;

use bvq::{BVCoefficients, HaarSampler};
use bvq_ffi::*;

const HALF: BvqCoefficients = BvqCoefficients {
    l00: BvqComplex { re: 0.0, im: 0.5 },
    l01: BvqComplex { re: 0.5, im: 0.0 },
    l10: BvqComplex { re: 0.5, im: 0.0 },
    l11: BvqComplex { re: 0.0, im: -1.0 },
};

fn distance(x: &BvqCoefficients, y: &BvqCoefficients) -> f64 {
    BVCoefficients::from(*x).distance(&BVCoefficients::from(*y))
}

fn new(l: &BvqCoefficients) -> *mut BvqTransform {
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { bvq_transform_new(l, bvq_default_tolerance(), &mut t) }, BvqStatus::Ok);
    t
}

fn coefficients(t: *const BvqTransform) -> BvqCoefficients {
    let mut l = BvqCoefficients::default();
    assert_eq!(unsafe { bvq_transform_coefficients(t, &mut l) }, BvqStatus::Ok);
    l
}

#[test]
fn validate_reports_residuals() {
    let mut r = BvqResiduals::default();
    let mut ok = false;
    assert_eq!(unsafe { bvq_validate(&HALF, 1e-12, &mut r, &mut ok) }, BvqStatus::Ok);
    assert!(ok);
    assert!(r.eq6a < 1e-15 && r.eq6d < 1e-15);

    let swap = BvqCoefficients { l01: BvqComplex { re: 1.0, im: 0.0 }, l10: BvqComplex { re: 1.0, im: 0.0 }, ..Default::default() };
    assert_eq!(unsafe { bvq_validate(&swap, 1e-12, &mut r, &mut ok) }, BvqStatus::Ok);
    assert!(!ok);
    assert_eq!((r.eq6a, r.eq6b, r.eq6c, r.eq6d), (1.0, 1.0, 0.0, 1.0));

    let mut t = ptr::null_mut();
    assert_eq!(unsafe { bvq_transform_new(&swap, 1e-12, &mut t) }, BvqStatus::NotCanonical);
    assert!(t.is_null());
}

#[test]
fn inverse_and_composition() {
    let l = new(&HALF);
    let mut nu = ptr::null_mut();
    assert_eq!(unsafe { bvq_transform_invert(l, &mut nu) }, BvqStatus::Ok);
    let expected = BvqCoefficients { l00: BvqComplex { re: 0.0, im: -0.5 }, l11: BvqComplex { re: 0.0, im: 1.0 }, ..HALF };
    assert!(distance(&coefficients(nu), &expected) < 1e-15);

    let mut id = ptr::null_mut();
    assert_eq!(unsafe { bvq_transform_compose(nu, l, &mut id) }, BvqStatus::Ok);
    let identity = coefficients(bvq_transform_identity());
    assert!(distance(&coefficients(id), &identity) < 1e-12);
    unsafe {
        bvq_transform_free(l);
        bvq_transform_free(nu);
        bvq_transform_free(id);
    }
}

#[test]
fn rotation_matrix_is_row_major() {
    let l = new(&HALF);
    let mut m = [f64::NAN; 9];
    assert_eq!(unsafe { bvq_transform_rotation_matrix(l, m.as_mut_ptr()) }, BvqStatus::Ok);
    let expected = bvq::Transform::new(HALF.into()).unwrap().rotation_matrix().rows.concat();
    assert_eq!(m.to_vec(), expected);
    unsafe { bvq_transform_free(l) };
}

#[test]
fn axis_angle_round_trip_and_vacuum() {
    let p = BvqAxisAngle { phi: std::f64::consts::PI, n: [1.0, 0.0, 0.0] };
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { bvq_transform_from_axis_angle(&p, &mut t) }, BvqStatus::Ok);
    let mut back = BvqAxisAngle::default();
    assert_eq!(unsafe { bvq_transform_axis_angle(t, &mut back) }, BvqStatus::Ok);
    assert!((back.phi - p.phi).abs() < 1e-12 && (back.n[0] - 1.0).abs() < 1e-12);
    unsafe { bvq_transform_free(t) };

    let mut s = BvqState::default();
    assert_eq!(unsafe { bvq_transformed_vacuum(&p, &mut s) }, BvqStatus::Ok);
    assert!(s.amp0.re.abs() < 1e-15 && s.amp0.im.abs() < 1e-15);
    assert_eq!(s.amp1, BvqComplex { re: 0.0, im: 1.0 });

    let bad = BvqAxisAngle { phi: 0.5, n: [1.0, 1.0, 1.0] };
    assert_eq!(unsafe { bvq_transformed_vacuum(&bad, &mut s) }, BvqStatus::Domain);
    assert_eq!(unsafe { bvq_transform_from_axis_angle(&bad, &mut t) }, BvqStatus::Domain);
}

#[test]
fn diagonalize_three_two() {
    let (mut e, mut l, mut p) = (0.0, BvqCoefficients::default(), BvqAxisAngle::default());
    let beta = BvqComplex { re: 2.0, im: 0.0 };
    assert_eq!(unsafe { bvq_diagonalize(3.0, beta, &mut e, &mut l, &mut p) }, BvqStatus::Ok);
    assert!((e - 5.0).abs() < 1e-14);
    let expected = BvqCoefficients {
        l00: BvqComplex { re: 0.4, im: 0.0 },
        l01: BvqComplex { re: 0.8, im: 0.0 },
        l10: BvqComplex { re: -0.2, im: 0.0 },
        l11: BvqComplex { re: -0.8, im: 0.0 },
    };
    assert!(distance(&l, &expected) < 1e-14);
    assert_eq!(unsafe { bvq_diagonalize(3.0, beta, &mut e, &mut l, ptr::null_mut()) }, BvqStatus::Ok);
    assert_eq!(unsafe { bvq_diagonalize(-1.0, beta, &mut e, &mut l, ptr::null_mut()) }, BvqStatus::Domain);
    assert_eq!(unsafe { bvq_diagonalize(3.0, beta, ptr::null_mut(), &mut l, ptr::null_mut()) }, BvqStatus::NullPointer);
}

#[test]
fn sampler_matches_the_library() {
    let s = bvq_sampler_new(7);
    let mut reference = HaarSampler::new(7);
    for _ in 0..20 {
        let mut t = ptr::null_mut();
        assert_eq!(unsafe { bvq_sampler_next(s, &mut t) }, BvqStatus::Ok);
        assert_eq!(BVCoefficients::from(coefficients(t)), reference.next_transform().coefficients());
        unsafe { bvq_transform_free(t) };
    }
    unsafe { bvq_sampler_free(s) };
    assert_eq!(unsafe { bvq_sampler_next(ptr::null_mut(), &mut ptr::null_mut()) }, BvqStatus::NullPointer);
}
