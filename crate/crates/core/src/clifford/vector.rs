use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Norm below which a direction is considered degenerate.
pub const DEGENERATE_NORM: f64 = 1e-9;

/// A unit detector direction in R³.
///
/// The constructor normalizes its input, so every value satisfies
/// `‖v‖ = 1` to within rounding.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vector3 {
    x: f64,
    y: f64,
    z: f64,
}

impl Vector3 {
    pub const X: Vector3 = Vector3 { x: 1.0, y: 0.0, z: 0.0 };
    pub const Y: Vector3 = Vector3 { x: 0.0, y: 1.0, z: 0.0 };
    pub const Z: Vector3 = Vector3 { x: 0.0, y: 0.0, z: 1.0 };

    /// Normalizes `(x, y, z)`; rejects non-finite or near-zero input.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || norm < DEGENERATE_NORM {
            return Err(Error::DegenerateVector { x, y, z });
        }
        Ok(Vector3 { x: x / norm, y: y / norm, z: z / norm })
    }

    /// Unit vector at angle `theta` in the e_x/e_y plane.
    pub fn in_plane(theta: f64) -> Result<Self> {
        Self::new(theta.cos(), theta.sin(), 0.0)
    }

    /// Basis vector `e_j` for `axis` in `0..3`.
    pub fn axis(axis: usize) -> Self {
        [Self::X, Self::Y, Self::Z][axis]
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &Vector3) -> f64 {
        dot(&self.components(), &other.components())
    }

    pub fn cross(&self, other: &Vector3) -> [f64; 3] {
        cross(&self.components(), &other.components())
    }
}

impl From<Vector3> for [f64; 3] {
    fn from(v: Vector3) -> Self {
        v.components()
    }
}

impl TryFrom<[f64; 3]> for Vector3 {
    type Error = Error;

    fn try_from(c: [f64; 3]) -> Result<Self> {
        Vector3::new(c[0], c[1], c[2])
    }
}

pub fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Standard R³ cross product.
pub fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}
