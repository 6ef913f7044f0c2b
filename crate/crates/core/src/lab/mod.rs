//! Trial loops, estimators and CHSH.

mod chsh;
mod diagnostics;
mod estimators;
mod sum;
mod trials;

pub use chsh::{chsh, ChshReport};
pub use diagnostics::{checkpoints, joint_frequencies, lambda_mean_diagnostics, DecayPoint, JointCounts};
pub use estimators::{
    estimate, estimate_gillgame, estimate_onepage, estimate_raw, estimate_standardized, CorrelationReport, Estimator,
    OnePageOutcome, RANGE_SLACK,
};
pub use sum::{CompensatedSum, EvenAccumulator};
pub use trials::{accumulate, TrialPlan, DEFAULT_CHUNK_LEN};
