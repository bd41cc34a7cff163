//! Seeded random transitive origamis for property tests.

use origami_forge_core::origami::Origami;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Rejection-samples a transitive pair of uniformly random permutations.
pub fn random_origami(rng: &mut ChaCha8Rng, d: usize) -> Origami {
    loop {
        let mut p1: Vec<usize> = (1..=d).collect();
        let mut p2: Vec<usize> = (1..=d).collect();
        p1.shuffle(rng);
        p2.shuffle(rng);
        if let Ok(o) = Origami::from_images(p1, p2) {
            return o;
        }
    }
}

/// `count` origamis with `1 ≤ d ≤ max_d` from a fixed seed.
pub fn sample(seed: u64, count: usize, max_d: usize) -> Vec<Origami> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.random_range(1..=max_d);
            random_origami(&mut rng, d)
        })
        .collect()
}
