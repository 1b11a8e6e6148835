//! Numerical Dirac-algebra toolkit.
//!
//! Builds gamma matrices in the Dirac representation, boosted two-spinors and
//! bispinor bases (including the complex "breve" continuation into
//! `|p0| < m`), spin/energy/π projectors and polarization sums, and checks a
//! registry of algebraic identities over seeded random kinematics.

#![forbid(unsafe_code)]

pub mod cli;
pub mod clifford;
pub mod error;
pub mod projectors;
pub mod spinors;
pub mod verify;

pub use clifford::{FourVector, Matrix2, MatrixC4, Sign, C64};
pub use error::{Error, Result};
pub use spinors::{Bispinor, BispinorRow, Helicity, KinematicPoint, TetradIndex, TwoSpinor};
