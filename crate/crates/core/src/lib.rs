//! Nonlinear Bogolyubov-Valatin transformations of a single fermionic mode.
//!
//! The operators `1, a, a†, a†a` span a four-dimensional algebra isomorphic
//! to the complexified quaternions, with units `i = i(a + a†)`, `j = a - a†`
//! and `k = ij`. Canonical transformations `a ↦ b` of this algebra form a
//! group whose elements are rotations of `(i, j, k)`, implemented by
//! conjugation with a unit quaternion.
//!
//! - [`algebra`]: the operator algebra and its 2×2 matrix representation
//! - [`transform`]: canonicity, inversion, composition, SO(3) and SU(2) forms
//! - [`fock`]: states, the vacuum and its transforms
//! - [`hamiltonian`]: diagonalization of `α(a†a - ½) + β a + β̄ a†`
//! - [`verify`]: randomized checks of the identities above
//! - [`cli`]: the `bvq` command-line tool

pub mod algebra;
pub mod cli;
pub mod error;
pub mod fock;
pub mod hamiltonian;
pub mod transform;
pub mod verify;

pub use algebra::{eigenvalues_hermitian, Basis, ComplexScalar, FockMatrix, FockOperator};
pub use error::{Error, Result};
pub use fock::{apply_operator, transformed_vacuum, vacuum, StateVector};
pub use hamiltonian::{diagonalize, DiagonalizationResult, ExternalFieldHamiltonian, FermiOscillatorImage};
pub use transform::{AxisAngle, BVCoefficients, HaarSampler, KappaTriple, RotationMatrix3, Transform, UnitQuaternion};
