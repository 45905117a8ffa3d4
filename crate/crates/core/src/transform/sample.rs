use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use super::{AxisAngle, Transform, UnitQuaternion};

/// Haar-uniform transformations.
///
/// Four independent standard normals `(w, x, y, z)` are scaled to a unit
/// quaternion, folded into `w ≥ 0`, written as `(φ, n)` with
/// `φ = 2 atan2(|v|, w)` and `n = v/|v|`, and passed to
/// [`Transform::from_axis_angle`]. The stream is ChaCha20 seeded with
/// `seed_from_u64(seed)`; [`HaarSampler::for_trial`] selects stream `trial`
/// of the same seed so batches can be split across threads.
#[derive(Debug, Clone)]
pub struct HaarSampler {
    rng: ChaCha20Rng,
}

impl HaarSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha20Rng::seed_from_u64(seed) }
    }

    pub fn for_trial(seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        Self { rng }
    }

    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn uniform(&mut self, low: f64, high: f64) -> f64 {
        self.rng.random_range(low..high)
    }

    /// Haar-distributed on SU(2); the sign of `w` is left as drawn.
    pub fn next_quaternion(&mut self) -> UnitQuaternion {
        loop {
            let [w, x, y, z] = [self.normal(), self.normal(), self.normal(), self.normal()];
            if let Ok(q) = UnitQuaternion::normalized(w, x, y, z) {
                return q;
            }
        }
    }

    pub fn next_axis_angle(&mut self) -> AxisAngle {
        loop {
            let q = self.next_quaternion();
            let q = if q.w < 0.0 { q.negate() } else { q };
            let v = [q.x, q.y, q.z];
            let s = v.iter().map(|c| c * c).sum::<f64>().sqrt();
            if s > 0.0 {
                return AxisAngle::new(2.0 * s.atan2(q.w), v.map(|c| c / s));
            }
        }
    }

    pub fn next_transform(&mut self) -> Transform {
        let p = self.next_axis_angle();
        Transform::from_axis_angle(&p).expect("sampled axis-angle is in domain")
    }
}
