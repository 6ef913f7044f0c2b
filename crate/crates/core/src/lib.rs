//! Cl(3,0) with a hidden orientation λ = ±1.
//!
//! - [`clifford`]: dense multivectors over the blades `1, e1, e2, e3, e12, e23, e31, e123`.
//! - [`frames`]: the λ-handed bivector frame under two realizations and the
//!   identity checks that distinguish them.
//! - [`model`]: the seeded λ stream and the measurement functions.
//! - [`lab`]: estimators, λ-decay diagnostics and CHSH.

pub mod clifford;
pub mod error;
pub mod frames;
pub mod lab;
pub mod model;

pub use error::{Error, Result};
