//! Dense arithmetic in the Clifford algebra Cl(3,0).

pub mod blade;
mod multivector;
mod vector;

pub use multivector::{contract_trivector_vector, gp, grade_project, inverse_unit_even, reverse, Grade, Multivector};
pub use vector::{cross, dot, Vector3, DEGENERATE_NORM};

/// Residual bound for identities evaluated on unit inputs.
pub const IDENTITY_TOL: f64 = 1e-12;

/// Tolerance for unit-norm preconditions.
pub const UNIT_TOL: f64 = 1e-9;
