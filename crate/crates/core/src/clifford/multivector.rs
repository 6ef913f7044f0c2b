use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::blade::{BLADE_COUNT, BLADE_GRADES, DUAL_SLOTS, E1, E123, GP_TABLE, SCALAR};
use super::{IDENTITY_TOL, UNIT_TOL};
use crate::error::{Error, Result};

/// Grade of a homogeneous component, `0..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grade(u8);

impl Grade {
    pub const SCALAR: Grade = Grade(0);
    pub const VECTOR: Grade = Grade(1);
    pub const BIVECTOR: Grade = Grade(2);
    pub const TRIVECTOR: Grade = Grade(3);

    pub fn new(value: u8) -> Result<Self> {
        if value <= 3 {
            Ok(Grade(value))
        } else {
            Err(Error::InvalidGrade(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn all() -> [Grade; 4] {
        [Grade(0), Grade(1), Grade(2), Grade(3)]
    }
}

impl TryFrom<u8> for Grade {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Grade::new(value)
    }
}

/// A general element of Cl(3,0): eight real coefficients over the blades
/// `1, e1, e2, e3, e12, e23, e31, e123`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "[f64; 8]", into = "[f64; 8]")]
pub struct Multivector {
    coeffs: [f64; BLADE_COUNT],
}

impl Multivector {
    pub const ZERO: Multivector = Multivector { coeffs: [0.0; BLADE_COUNT] };
    pub const ONE: Multivector = Multivector::basis(SCALAR);
    /// The unit pseudoscalar `I = e1 e2 e3`.
    pub const I: Multivector = Multivector::basis(E123);

    /// Builds a multivector, rejecting NaN and infinite coefficients.
    pub fn new(coeffs: [f64; BLADE_COUNT]) -> Result<Self> {
        if let Some((index, &value)) = coeffs.iter().enumerate().find(|(_, c)| !c.is_finite()) {
            return Err(Error::NonFinite { index, value });
        }
        Ok(Multivector { coeffs })
    }

    /// Unit blade at storage slot `index`.
    pub const fn basis(index: usize) -> Self {
        let mut coeffs = [0.0; BLADE_COUNT];
        coeffs[index] = 1.0;
        Multivector { coeffs }
    }

    pub fn scalar(s: f64) -> Self {
        let mut coeffs = [0.0; BLADE_COUNT];
        coeffs[SCALAR] = s;
        Multivector { coeffs }
    }

    /// Grade-1 element `v_x e1 + v_y e2 + v_z e3`.
    pub fn vector(v: impl Into<[f64; 3]>) -> Self {
        let v = v.into();
        let mut coeffs = [0.0; BLADE_COUNT];
        coeffs[E1..E1 + 3].copy_from_slice(&v);
        Multivector { coeffs }
    }

    /// Grade-2 element `b_x β_x + b_y β_y + b_z β_z` with `β_j = I e_j`.
    pub fn bivector(b: impl Into<[f64; 3]>) -> Self {
        let b = b.into();
        let mut coeffs = [0.0; BLADE_COUNT];
        for (j, slot) in DUAL_SLOTS.iter().enumerate() {
            coeffs[*slot] = b[j];
        }
        Multivector { coeffs }
    }

    /// Even element `s + b_j β_j`.
    pub fn even(s: f64, b: impl Into<[f64; 3]>) -> Self {
        let mut m = Self::bivector(b);
        m.coeffs[SCALAR] = s;
        m
    }

    /// The basis bivector `β_j = I e_j` for `axis` in `0..3`.
    pub fn beta(axis: usize) -> Self {
        Self::basis(DUAL_SLOTS[axis])
    }

    pub fn coeffs(&self) -> &[f64; BLADE_COUNT] {
        &self.coeffs
    }

    pub fn get(&self, index: usize) -> f64 {
        self.coeffs[index]
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[SCALAR]
    }

    /// Coefficients along `β_x, β_y, β_z`.
    pub fn bivector_part(&self) -> [f64; 3] {
        DUAL_SLOTS.map(|slot| self.coeffs[slot])
    }

    pub fn vector_part(&self) -> [f64; 3] {
        [self.coeffs[1], self.coeffs[2], self.coeffs[3]]
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Componentwise residual `max_i |self_i - other_i|`.
    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        (*self - *other).max_abs()
    }

    /// Largest coefficient outside the given grades.
    pub fn residue_outside(&self, grades: &[Grade]) -> f64 {
        self.coeffs
            .iter()
            .zip(BLADE_GRADES)
            .filter(|(_, g)| !grades.iter().any(|k| k.0 == *g))
            .fold(0.0, |m, (c, _)| m.max(c.abs()))
    }

    pub fn gp(&self, other: &Multivector) -> Multivector {
        gp(self, other)
    }

    pub fn reverse(&self) -> Multivector {
        reverse(self)
    }

    pub fn grade(&self, k: Grade) -> Multivector {
        grade_project(self, k)
    }
}

impl TryFrom<[f64; BLADE_COUNT]> for Multivector {
    type Error = Error;

    fn try_from(coeffs: [f64; BLADE_COUNT]) -> Result<Self> {
        Multivector::new(coeffs)
    }
}

impl From<Multivector> for [f64; BLADE_COUNT] {
    fn from(m: Multivector) -> Self {
        m.coeffs
    }
}

/// Geometric product, expanded over the blade sign table.
pub fn gp(x: &Multivector, y: &Multivector) -> Multivector {
    let mut out = [0.0; BLADE_COUNT];
    for (i, &xi) in x.coeffs.iter().enumerate() {
        if xi == 0.0 {
            continue;
        }
        for (j, &yj) in y.coeffs.iter().enumerate() {
            if yj == 0.0 {
                continue;
            }
            let entry = GP_TABLE[i][j];
            out[entry.target as usize] += f64::from(entry.sign) * xi * yj;
        }
    }
    Multivector { coeffs: out }
}

/// The grade-`k` component of `x`.
pub fn grade_project(x: &Multivector, k: Grade) -> Multivector {
    let mut out = Multivector::ZERO;
    for (i, g) in BLADE_GRADES.iter().enumerate() {
        if *g == k.0 {
            out.coeffs[i] = x.coeffs[i];
        }
    }
    out
}

/// Reversion: negates the grade-2 and grade-3 parts.
pub fn reverse(x: &Multivector) -> Multivector {
    let mut out = *x;
    for (c, g) in out.coeffs.iter_mut().zip(BLADE_GRADES) {
        if g >= 2 {
            *c = -*c;
        }
    }
    out
}

/// Contraction of a trivector with a vector, taken as the grade-2 part of
/// their geometric product. `contract_trivector_vector(I, e_x) = e23`.
pub fn contract_trivector_vector(t: &Multivector, v: impl Into<[f64; 3]>) -> Result<Multivector> {
    let residue = t.residue_outside(&[Grade::TRIVECTOR]);
    if residue > IDENTITY_TOL {
        return Err(Error::NotTrivector { residue });
    }
    Ok(grade_project(&gp(t, &Multivector::vector(v)), Grade::BIVECTOR))
}

/// Inverse of a unit even element (scalar plus bivector), which is its
/// reverse.
pub fn inverse_unit_even(x: &Multivector) -> Result<Multivector> {
    let odd = x.residue_outside(&[Grade::SCALAR, Grade::BIVECTOR]);
    if odd > IDENTITY_TOL {
        return Err(Error::NotInvertible { residue: odd });
    }
    let rev = reverse(x);
    let norm_residue = gp(x, &rev).max_abs_diff(&Multivector::ONE);
    if norm_residue.is_nan() || norm_residue > UNIT_TOL {
        return Err(Error::NotInvertible { residue: norm_residue });
    }
    Ok(rev)
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(mut self, rhs: Multivector) -> Multivector {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(mut self, rhs: Multivector) -> Multivector {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
        self
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        Multivector { coeffs: self.coeffs.map(|c| -c) }
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: f64) -> Multivector {
        Multivector { coeffs: self.coeffs.map(|c| c * rhs) }
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        rhs * self
    }
}

impl Mul for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        gp(&self, &rhs)
    }
}

impl fmt::Display for Multivector {
    /// `s + x e1 + y e2 + z e3 + p e12 + q e23 + r e31 + t e123`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeffs[0])?;
        for (c, name) in self.coeffs.iter().zip(super::blade::BLADE_NAMES).skip(1) {
            write!(f, " + {c} {name}")?;
        }
        Ok(())
    }
}
