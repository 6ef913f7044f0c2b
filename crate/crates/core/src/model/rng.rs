//! Fair-coin orientation streams.
//!
//! Generator: ChaCha with 8 rounds (`rand_chacha::ChaCha8Rng`), seeded
//! through `SeedableRng::seed_from_u64`. One draw consumes one `u64`; its
//! most significant bit selects λ (`0 → +1`, `1 → −1`). Changing any of
//! this changes every committed golden file.
//!
//! Parallel runs split trials into fixed-length chunks. Chunk `c` of a run
//! seeded with `s` draws from its own stream seeded with
//! `splitmix64(splitmix64(s) ^ c)`.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::Vector3;
use crate::frames::Orientation;

/// Version tag of the λ bit-stream.
pub const STREAM_VERSION: &str = "chacha8-msb-v1";

/// SplitMix64 finalizer.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of the sub-stream owned by trial chunk `chunk` of a run seeded with
/// `seed`.
pub fn chunk_seed(seed: u64, chunk: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ chunk)
}

/// A single-owner deterministic random stream.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    counter: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream { seed, counter: 0, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Stream for trial chunk `chunk` of a run seeded with `seed`.
    pub fn for_chunk(seed: u64, chunk: u64) -> Self {
        Self::new(chunk_seed(seed, chunk))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of draws taken so far.
    pub fn counter(&self) -> u64 {
        self.counter
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter += 1;
        self.rng.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 bits of resolution.
    pub fn next_unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Draws λ = ±1 with equal probability; advances the stream by one.
pub fn sample_lambda(rng: &mut RngStream) -> Orientation {
    if rng.next_u64() >> 63 == 0 {
        Orientation::Positive
    } else {
        Orientation::Negative
    }
}

/// Seed of the direction pairs used by the identity checks.
pub const DIRECTION_SEED: u64 = 0x0051_7E57;

/// Uniformly distributed unit vectors by rejection from the cube.
///
/// Uses only correctly rounded arithmetic, so the sequence is identical on
/// every IEEE-754 platform.
pub fn random_unit_vectors(rng: &mut RngStream, count: usize) -> Vec<Vector3> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x = 2.0 * rng.next_unit_f64() - 1.0;
        let y = 2.0 * rng.next_unit_f64() - 1.0;
        let z = 2.0 * rng.next_unit_f64() - 1.0;
        let r2 = x * x + y * y + z * z;
        if !(1e-6..=1.0).contains(&r2) {
            continue;
        }
        out.push(Vector3::new(x, y, z).expect("radius bounded away from zero"));
    }
    out
}

/// `count` pairs of unit vectors from a stream seeded with `seed`.
pub fn random_unit_pairs(seed: u64, count: usize) -> Vec<(Vector3, Vector3)> {
    let mut rng = RngStream::new(seed);
    let v = random_unit_vectors(&mut rng, 2 * count);
    v.chunks_exact(2).map(|p| (p[0], p[1])).collect()
}
