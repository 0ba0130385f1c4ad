//! Seeded random streams.
//!
//! Every random draw in the crate comes from a ChaCha8 generator (a
//! counter-based cipher stream) seeded with `seed ^ counter`, where the
//! counter identifies the operation or sweep row. Results therefore do not
//! depend on scheduling or thread count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream counter used by [`crate::statevec::StateVector::sample_counts`].
pub const SAMPLE_STREAM: u64 = 0x5348_4f54; // "SHOT"
/// Stream counter used by [`crate::noise::inject_pauli_noise`].
pub const PAULI_STREAM: u64 = 0x5041_554c; // "PAUL"

/// Derive the seed of sub-stream `counter` from a master seed.
#[inline]
pub fn derive_seed(seed: u64, counter: u64) -> u64 {
    seed ^ counter
}

/// Generator for sub-stream `counter` of `seed`.
pub fn stream(seed: u64, counter: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, counter))
}
