//! Correlation estimators.
//!
//! Each estimator averages one even element per trial and reports the
//! scalar part and the bivector residue separately; nothing is collapsed to
//! a scalar. Per-trial terms that depend on the detector settings only
//! through λ (standardized scores, the dispersion product `D`) are computed
//! once per orientation through the measurement model; the per-trial work
//! is then a single even-element product in the λ_i frame algebra.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::trials::{accumulate, TrialPlan};
use crate::clifford::{contract_trivector_vector, gp, inverse_unit_even, Multivector, Vector3};
use crate::error::{Error, Result};
use crate::frames::{EvenElement, FrameAlgebra, Orientation, Realization};
use crate::model::{measure_a, measure_b, sigma_a, sigma_b, standardize_a, standardize_b};

/// Slack allowed on the `[-1, 1]` range of a correlation.
pub const RANGE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Estimator {
    /// Average of the raw products `A_i B_i`.
    Raw,
    /// Average product of the standardized scores `(μ_i·a)(μ_i·b)`.
    Standardized,
    /// Average of `{a_j β_j(λ_i)}{b_k β_k(λ_i)}`.
    OnePage,
    /// `AB = −1` substituted, then divided by `D = {−a_j β_j}{b_k β_k}`.
    GillGame,
}

impl Estimator {
    pub const ALL: [Estimator; 4] = [Estimator::Raw, Estimator::Standardized, Estimator::OnePage, Estimator::GillGame];

    pub fn name(self) -> &'static str {
        match self {
            Estimator::Raw => "raw",
            Estimator::Standardized => "standardized",
            Estimator::OnePage => "onepage",
            Estimator::GillGame => "gillgame",
        }
    }
}

impl fmt::Display for Estimator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Estimator {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Estimator::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| format!("unknown estimator `{s}` (expected raw|standardized|onepage|gillgame)"))
    }
}

/// Estimator output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub estimator: Estimator,
    pub realization: Realization,
    pub n: u64,
    pub scalar_part: f64,
    /// Coefficients of `β_x, β_y, β_z`.
    pub bivector_part: [f64; 3],
    /// `−a·b`.
    pub reference: f64,
    pub scalar_deviation: f64,
    pub seed: u64,
}

fn positive_zero(x: f64) -> f64 {
    x + 0.0
}

impl CorrelationReport {
    pub fn new(
        estimator: Estimator,
        realization: Realization,
        plan: &TrialPlan,
        mean: EvenElement,
        a: &Vector3,
        b: &Vector3,
    ) -> Result<Self> {
        let scalar_part = positive_zero(mean.scalar);
        if scalar_part.is_nan() || scalar_part.abs() > 1.0 + RANGE_SLACK {
            return Err(Error::CorrelationOutOfRange(scalar_part));
        }
        let reference = positive_zero(-a.dot(b));
        Ok(CorrelationReport {
            estimator,
            realization,
            n: plan.n,
            scalar_part,
            bivector_part: mean.bivector.map(positive_zero),
            reference,
            scalar_deviation: (scalar_part - reference).abs(),
            seed: plan.seed,
        })
    }

    pub fn bivector_norm(&self) -> f64 {
        self.bivector_part.iter().map(|b| b * b).sum::<f64>().sqrt()
    }

    pub fn even_part(&self) -> EvenElement {
        EvenElement::new(self.scalar_part, self.bivector_part)
    }
}

/// Per-orientation lookup, indexed by λ.
#[derive(Debug, Clone, Copy)]
struct ByOrientation<T> {
    positive: T,
    negative: T,
}

impl<T: Copy> ByOrientation<T> {
    fn try_build(f: impl Fn(Orientation) -> Result<T>) -> Result<Self> {
        Ok(ByOrientation { positive: f(Orientation::Positive)?, negative: f(Orientation::Negative)? })
    }

    fn get(&self, lambda: Orientation) -> T {
        match lambda {
            Orientation::Positive => self.positive,
            Orientation::Negative => self.negative,
        }
    }
}

/// Expresses a Cl(3,0) bivector over the fixed basis of `alg`.
fn as_even(m: &Multivector) -> Result<EvenElement> {
    EvenElement::from_multivector(m)
}

/// Raw-product average `(1/n) Σ A_i B_i`.
pub fn estimate_raw(a: &Vector3, b: &Vector3, plan: &TrialPlan) -> Result<CorrelationReport> {
    let scores = ByOrientation::try_build(|l| Ok((measure_a(a, l)?, measure_b(b, l)?)))?;
    let sum = accumulate(plan, |l| {
        let (ra, rb) = scores.get(l);
        EvenElement::scalar(f64::from(ra * rb))
    })?;
    CorrelationReport::new(Estimator::Raw, Realization::ConcreteEmbedding, plan, sum.mean(plan.n), a, b)
}

/// Average product of standardized scores, multiplied in the λ_i algebra.
pub fn estimate_standardized(
    a: &Vector3,
    b: &Vector3,
    plan: &TrialPlan,
    realization: Realization,
) -> Result<CorrelationReport> {
    let scores = ByOrientation::try_build(|l| Ok((as_even(&standardize_a(a, l)?)?, as_even(&standardize_b(b, l)?)?)))?;
    let sum = accumulate(plan, |l| {
        let (sa, sb) = scores.get(l);
        FrameAlgebra::new(l, realization).mul(&sa, &sb)
    })?;
    CorrelationReport::new(Estimator::Standardized, realization, plan, sum.mean(plan.n), a, b)
}

/// Both forms of the one-page calculation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OnePageOutcome {
    /// `(1/n) Σ {a_j β_j(λ_i)}{b_k β_k(λ_i)}`; the primary result.
    pub report: CorrelationReport,
    /// `(1/n) Σ (A_i B_i) D⁻¹` with `D = {−a_j β_j}{b_k β_k}`, the division
    /// taken on the right.
    pub division_form: EvenElement,
}

/// `D = {−a_j β_j}{b_k β_k}` in the given algebra.
fn dispersion_product(alg: &FrameAlgebra, a: &Vector3, b: &Vector3) -> Result<EvenElement> {
    match alg.realization() {
        Realization::ConcreteEmbedding => as_even(&gp(&sigma_a(a), &sigma_b(b))),
        Realization::OrientedStructure => Ok(alg.mul(&-alg.dual(a.components()), &alg.dual(b.components()))),
    }
}

fn frame_combination(alg: &FrameAlgebra, v: &Vector3) -> EvenElement {
    let c = v.components();
    (0..3).fold(EvenElement::ZERO, |acc, j| acc + c[j] * alg.frame_element(j))
}

pub fn estimate_onepage(
    a: &Vector3,
    b: &Vector3,
    plan: &TrialPlan,
    realization: Realization,
) -> Result<OnePageOutcome> {
    let sum = accumulate(plan, |l| {
        let alg = FrameAlgebra::new(l, realization);
        alg.mul(&frame_combination(&alg, a), &frame_combination(&alg, b))
    })?;
    let report = CorrelationReport::new(Estimator::OnePage, realization, plan, sum.mean(plan.n), a, b)?;

    let divided = ByOrientation::try_build(|l| {
        let alg = FrameAlgebra::new(l, realization);
        let d_inv = alg.inverse_unit(&dispersion_product(&alg, a, b)?)?;
        let ab = f64::from(measure_a(a, l)? * measure_b(b, l)?);
        Ok(ab * d_inv)
    })?;
    let division_form = accumulate(plan, |l| divided.get(l))?.mean(plan.n);
    Ok(OnePageOutcome { report, division_form })
}

/// The calculation with `A_i B_i = −1` imposed.
///
/// Under the oriented structure each trial expands `{a_j β_j}{b_k β_k}`
/// with the λ_i rule. Under the concrete embedding the summand
/// `(−1) D⁻¹` does not depend on the trial and is reported directly.
pub fn estimate_gillgame(
    a: &Vector3,
    b: &Vector3,
    plan: &TrialPlan,
    realization: Realization,
) -> Result<CorrelationReport> {
    let mean = match realization {
        Realization::OrientedStructure => {
            let (da, db) = (a.components(), b.components());
            accumulate(plan, |l| {
                let alg = FrameAlgebra::new(l, realization);
                alg.mul(&alg.dual(da), &alg.dual(db))
            })?
            .mean(plan.n)
        }
        Realization::ConcreteEmbedding => {
            plan.validate()?;
            let d =
                gp(&contract_trivector_vector(&-Multivector::I, *a)?, &contract_trivector_vector(&Multivector::I, *b)?);
            as_even(&-inverse_unit_even(&d)?)?
        }
    };
    CorrelationReport::new(Estimator::GillGame, realization, plan, mean, a, b)
}

/// Runs `estimator`; one-page runs report their primary form.
pub fn estimate(
    estimator: Estimator,
    a: &Vector3,
    b: &Vector3,
    plan: &TrialPlan,
    realization: Realization,
) -> Result<CorrelationReport> {
    match estimator {
        Estimator::Raw => estimate_raw(a, b, plan),
        Estimator::Standardized => estimate_standardized(a, b, plan, realization),
        Estimator::OnePage => estimate_onepage(a, b, plan, realization).map(|o| o.report),
        Estimator::GillGame => estimate_gillgame(a, b, plan, realization),
    }
}
