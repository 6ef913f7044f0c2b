use serde::{Deserialize, Serialize};

use super::estimators::{estimate, CorrelationReport, Estimator};
use super::trials::TrialPlan;
use crate::clifford::Vector3;
use crate::error::Result;
use crate::frames::Realization;

/// Four correlations and `S = E(a,b) + E(a,b′) + E(a′,b) − E(a′,b′)`, from
/// scalar parts only. Every correlation uses the same trial plan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChshReport {
    pub e_ab: CorrelationReport,
    pub e_ab_prime: CorrelationReport,
    pub e_a_prime_b: CorrelationReport,
    pub e_a_prime_b_prime: CorrelationReport,
    pub s_value: f64,
}

impl ChshReport {
    pub fn correlations(&self) -> [&CorrelationReport; 4] {
        [&self.e_ab, &self.e_ab_prime, &self.e_a_prime_b, &self.e_a_prime_b_prime]
    }
}

#[allow(clippy::too_many_arguments)]
pub fn chsh(
    a: &Vector3,
    a_prime: &Vector3,
    b: &Vector3,
    b_prime: &Vector3,
    plan: &TrialPlan,
    estimator: Estimator,
    realization: Realization,
) -> Result<ChshReport> {
    let e_ab = estimate(estimator, a, b, plan, realization)?;
    let e_ab_prime = estimate(estimator, a, b_prime, plan, realization)?;
    let e_a_prime_b = estimate(estimator, a_prime, b, plan, realization)?;
    let e_a_prime_b_prime = estimate(estimator, a_prime, b_prime, plan, realization)?;
    let s_value = e_ab.scalar_part + e_ab_prime.scalar_part + e_a_prime_b.scalar_part - e_a_prime_b_prime.scalar_part;
    Ok(ChshReport { e_ab, e_ab_prime, e_a_prime_b, e_a_prime_b_prime, s_value })
}
