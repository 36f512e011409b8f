use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent stream for replication `r` of an experiment seeded with `seed`.
///
/// Depends only on `(seed, r)`, so results do not depend on scheduling.
pub fn replication_rng(seed: u64, replication: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replication);
    rng
}
