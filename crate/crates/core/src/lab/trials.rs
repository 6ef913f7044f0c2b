//! Chunked, seed-deterministic trial loops.

use rayon::prelude::*;

use super::sum::EvenAccumulator;
use crate::error::{Error, Result};
use crate::frames::{EvenElement, Orientation};
use crate::model::{sample_lambda, RngStream};

/// Trials per chunk unless overridden.
pub const DEFAULT_CHUNK_LEN: u64 = 1 << 16;

/// How many trials to run, from which seed, and how to split them.
///
/// Results depend on `(seed, n, chunk_len)` only; `parallel` changes
/// scheduling, never output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialPlan {
    pub seed: u64,
    pub n: u64,
    pub chunk_len: u64,
    pub parallel: bool,
}

impl TrialPlan {
    pub fn new(seed: u64, n: u64) -> Self {
        TrialPlan { seed, n, chunk_len: DEFAULT_CHUNK_LEN, parallel: true }
    }

    pub fn with_chunk_len(mut self, chunk_len: u64) -> Self {
        self.chunk_len = chunk_len;
        self
    }

    pub fn serial(mut self) -> Self {
        self.parallel = false;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptySample);
        }
        if self.chunk_len == 0 {
            return Err(Error::EmptyChunk);
        }
        Ok(())
    }

    pub fn chunk_count(&self) -> u64 {
        self.n.div_ceil(self.chunk_len)
    }

    fn chunk_size(&self, chunk: u64) -> u64 {
        self.chunk_len.min(self.n - chunk * self.chunk_len)
    }

    /// The λ sequence of chunk `chunk`.
    pub fn chunk_lambdas(&self, chunk: u64) -> impl Iterator<Item = Orientation> {
        let mut rng = RngStream::for_chunk(self.seed, chunk);
        (0..self.chunk_size(chunk)).map(move |_| sample_lambda(&mut rng))
    }

    /// The full λ sequence, in trial order.
    pub fn lambdas(&self) -> impl Iterator<Item = Orientation> + '_ {
        (0..self.chunk_count()).flat_map(move |c| self.chunk_lambdas(c))
    }
}

/// Sums `summand(λ_i)` over all trials of `plan`; chunk partial sums are
/// merged in chunk order.
pub fn accumulate<F>(plan: &TrialPlan, summand: F) -> Result<EvenAccumulator>
where
    F: Fn(Orientation) -> EvenElement + Sync,
{
    plan.validate()?;
    let chunk = |c: u64| {
        let mut acc = EvenAccumulator::new();
        for lambda in plan.chunk_lambdas(c) {
            acc.add(&summand(lambda));
        }
        acc
    };
    let partials: Vec<EvenAccumulator> = if plan.parallel {
        (0..plan.chunk_count()).into_par_iter().map(chunk).collect()
    } else {
        (0..plan.chunk_count()).map(chunk).collect()
    };
    let mut total = EvenAccumulator::new();
    for p in &partials {
        total.merge(p);
    }
    Ok(total)
}
