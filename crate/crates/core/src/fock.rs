//! States of the single-mode Fock space and transformed vacua.

use serde::{Deserialize, Serialize};

use crate::algebra::{ComplexScalar, FockOperator, ONE, ZERO};
use crate::error::Result;
use crate::transform::{AxisAngle, UnitQuaternion};

/// Amplitudes on `|0⟩` and `|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateVector {
    pub amp0: ComplexScalar,
    pub amp1: ComplexScalar,
}

impl StateVector {
    pub const fn new(amp0: ComplexScalar, amp1: ComplexScalar) -> Self {
        Self { amp0, amp1 }
    }

    pub fn norm(&self) -> f64 {
        (self.amp0.norm_sqr() + self.amp1.norm_sqr()).sqrt()
    }

    pub fn scale(&self, z: ComplexScalar) -> Self {
        Self::new(self.amp0 * z, self.amp1 * z)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self.amp0 - other.amp0).norm().max((self.amp1 - other.amp1).norm())
    }
}

/// `|0⟩`, annihilated by `a`.
pub fn vacuum() -> StateVector {
    StateVector::new(ONE, ZERO)
}

pub fn apply_operator(x: &FockOperator, s: &StateVector) -> StateVector {
    let [amp0, amp1] = x.to_matrix().apply([s.amp0, s.amp1]);
    StateVector::new(amp0, amp1)
}

/// `U|0⟩` for the SU(2) element `U`, with its phase as computed.
pub fn spin_coherent_state(q: &UnitQuaternion) -> StateVector {
    apply_operator(&q.to_operator(), &vacuum())
}

/// The vacuum of `b = U a U†`.
pub fn transformed_vacuum(p: &AxisAngle) -> Result<StateVector> {
    Ok(spin_coherent_state(&p.to_quaternion()?))
}
