use serde::{Deserialize, Serialize};

use super::sum::CompensatedSum;
use super::trials::TrialPlan;
use crate::clifford::Vector3;
use crate::error::Result;
use crate::model::{measure_a, measure_b};

/// Partial means after `trials` runs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecayPoint {
    pub trials: u64,
    pub mean_lambda: f64,
    /// `(1/k) Σ λ_i a_j β_j`, as `β` coefficients.
    pub bivector_mean: [f64; 3],
    pub bivector_norm: f64,
}

/// Checkpoints `1, 10, 100, …` below `n`, followed by `n`.
pub fn checkpoints(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = std::iter::successors(Some(1u64), |k| k.checked_mul(10)).take_while(|&k| k < n).collect();
    out.push(n);
    out
}

/// Decay of the λ mean and of the bivector sum `λ_i a_j β_j` over the
/// trial sequence of `plan`.
pub fn lambda_mean_diagnostics(a: &Vector3, plan: &TrialPlan) -> Result<Vec<DecayPoint>> {
    plan.validate()?;
    let marks = checkpoints(plan.n);
    let mut out = Vec::with_capacity(marks.len());
    let mut next = marks.iter().peekable();
    let mut lambda_sum: i64 = 0;
    let mut biv = [CompensatedSum::new(); 3];
    let comps = a.components();
    for (i, lambda) in plan.lambdas().enumerate() {
        let k = i as u64 + 1;
        lambda_sum += lambda.value();
        for (acc, c) in biv.iter_mut().zip(comps) {
            acc.add(lambda.sign() * c);
        }
        if next.peek() == Some(&&k) {
            next.next();
            let bivector_mean = biv.map(|s| s.mean(k));
            out.push(DecayPoint {
                trials: k,
                mean_lambda: lambda_sum as f64 / k as f64,
                bivector_mean,
                bivector_norm: bivector_mean.iter().map(|b| b * b).sum::<f64>().sqrt(),
            });
        }
    }
    Ok(out)
}

/// Empirical counts of the outcome pairs `(A, B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointCounts {
    pub n: u64,
    pub plus_plus: u64,
    pub plus_minus: u64,
    pub minus_plus: u64,
    pub minus_minus: u64,
}

impl JointCounts {
    pub fn freq_a_plus(&self) -> f64 {
        (self.plus_plus + self.plus_minus) as f64 / self.n as f64
    }

    pub fn freq_b_plus(&self) -> f64 {
        (self.plus_plus + self.minus_plus) as f64 / self.n as f64
    }

    pub fn freq_both_plus(&self) -> f64 {
        self.plus_plus as f64 / self.n as f64
    }
}

/// Tallies `(A(a, λ_i), B(b, λ_i))` over the trials of `plan`.
pub fn joint_frequencies(a: &Vector3, b: &Vector3, plan: &TrialPlan) -> Result<JointCounts> {
    plan.validate()?;
    let mut counts = JointCounts { n: plan.n, plus_plus: 0, plus_minus: 0, minus_plus: 0, minus_minus: 0 };
    for lambda in plan.lambdas() {
        match (measure_a(a, lambda)?, measure_b(b, lambda)?) {
            (1, 1) => counts.plus_plus += 1,
            (1, _) => counts.plus_minus += 1,
            (_, 1) => counts.minus_plus += 1,
            _ => counts.minus_minus += 1,
        }
    }
    Ok(counts)
}
