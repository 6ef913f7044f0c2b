//! The hidden-variable measurement model.

mod measurement;
mod rng;

pub use measurement::{
    measure_a, measure_b, mu, run_trial, sigma_a, sigma_b, standardize_a, standardize_b, TrialRecord, RAW_SCORE_MEAN,
};
pub use rng::{
    chunk_seed, random_unit_pairs, random_unit_vectors, sample_lambda, splitmix64, RngStream, DIRECTION_SEED,
    STREAM_VERSION,
};
