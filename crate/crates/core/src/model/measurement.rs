//! Alice's and Bob's measurement functions and their standardized scores.
//!
//! Raw scores are evaluated in Cl(3,0) as products of a fixed detector
//! bivector and the random spin bivector `μ·n` with `μ = λI`:
//!
//! ```text
//! A(a, λ) = (−I·a)(μ·a)        B(b, λ) = (μ·b)(+I·b)
//! ```
//!
//! Each product must be a pure scalar; its sign is the reported score.

use serde::{Deserialize, Serialize};

use crate::clifford::IDENTITY_TOL;
use crate::clifford::{contract_trivector_vector, gp, inverse_unit_even, Grade, Multivector, Vector3};
use crate::error::{Error, Result};
use crate::frames::Orientation;

/// The mean subtracted before standardizing a raw score.
pub const RAW_SCORE_MEAN: f64 = 0.0;

fn dual(t: &Multivector, n: &Vector3) -> Multivector {
    contract_trivector_vector(t, *n).expect("argument is a pure trivector")
}

/// `μ = λI`.
pub fn mu(lambda: Orientation) -> Multivector {
    Multivector::I * lambda.sign()
}

fn scalar_sign(product: &Multivector) -> Result<i8> {
    let residue = product.residue_outside(&[Grade::SCALAR]);
    if residue > IDENTITY_TOL {
        return Err(Error::NonScalarOutcome { residue });
    }
    Ok(if product.scalar_part() > 0.0 { 1 } else { -1 })
}

/// Dispersion scale of Alice's score, `σ(A) = −I·a`.
pub fn sigma_a(a: &Vector3) -> Multivector {
    dual(&-Multivector::I, a)
}

/// Dispersion scale of Bob's score, `σ(B) = +I·b`.
pub fn sigma_b(b: &Vector3) -> Multivector {
    dual(&Multivector::I, b)
}

/// Alice's raw score `(−I·a)(μ·a)`.
pub fn measure_a(a: &Vector3, lambda: Orientation) -> Result<i8> {
    scalar_sign(&gp(&sigma_a(a), &dual(&mu(lambda), a)))
}

/// Bob's raw score `(μ·b)(+I·b)`.
pub fn measure_b(b: &Vector3, lambda: Orientation) -> Result<i8> {
    scalar_sign(&gp(&dual(&mu(lambda), b), &sigma_b(b)))
}

fn standardize(raw: i8, sigma: &Multivector, n: &Vector3, lambda: Orientation) -> Result<Multivector> {
    let centred = Multivector::scalar(f64::from(raw) - RAW_SCORE_MEAN);
    let score = gp(&centred, &inverse_unit_even(sigma)?);
    let expected = dual(&Multivector::I, n) * lambda.sign();
    let residue = score.max_abs_diff(&expected);
    if residue > IDENTITY_TOL {
        return Err(Error::StandardizationMismatch { residue });
    }
    Ok(score)
}

/// `(A − 0) / σ(A)`, which equals `μ·a`.
pub fn standardize_a(a: &Vector3, lambda: Orientation) -> Result<Multivector> {
    standardize(measure_a(a, lambda)?, &sigma_a(a), a, lambda)
}

/// `(B − 0) / σ(B)`, which equals `μ·b`.
pub fn standardize_b(b: &Vector3, lambda: Orientation) -> Result<Multivector> {
    standardize(measure_b(b, lambda)?, &sigma_b(b), b, lambda)
}

/// One run of the experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub lambda: Orientation,
    pub a_raw: i8,
    pub b_raw: i8,
    pub product: i8,
    pub a_std: Multivector,
    pub b_std: Multivector,
}

impl TrialRecord {
    pub const CSV_HEADER: &'static str = "lambda,A,B,AB,a_std_x,a_std_y,a_std_z,b_std_x,b_std_y,b_std_z";

    /// One CSV line; standardized scores are written as their `β_x, β_y, β_z`
    /// coefficients.
    pub fn to_csv_row(&self) -> String {
        let [ax, ay, az] = self.a_std.bivector_part();
        let [bx, by, bz] = self.b_std.bivector_part();
        format!("{},{},{},{},{ax},{ay},{az},{bx},{by},{bz}", self.lambda.value(), self.a_raw, self.b_raw, self.product)
    }
}

/// Assembles and validates one trial.
pub fn run_trial(a: &Vector3, b: &Vector3, lambda: Orientation) -> Result<TrialRecord> {
    let a_raw = measure_a(a, lambda)?;
    let b_raw = measure_b(b, lambda)?;
    let record = TrialRecord {
        lambda,
        a_raw,
        b_raw,
        product: a_raw * b_raw,
        a_std: standardize_a(a, lambda)?,
        b_std: standardize_b(b, lambda)?,
    };
    let l = lambda.value() as i8;
    if record.a_raw != l || record.b_raw != -l || record.product != -1 {
        return Err(Error::TrialInvariant { a_raw, b_raw, lambda: lambda.value() });
    }
    Ok(record)
}
