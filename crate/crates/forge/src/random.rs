//! Seed-deterministic random origamis.
//!
//! Algorithm `chacha8-fy-reject`: a `ChaCha8Rng` is seeded with the `u64`
//! seed.  For each sample the square count is drawn as
//! `1 + (u32 uniform below max_d)`; then `p1` and `p2` are drawn by a
//! Fisher–Yates shuffle of `1..=d` (for `i = d−1` down to `1`, swap
//! position `i` with a uniform position `≤ i`, drawn as a `u32`), and
//! the pair is redrawn until the generated group acts transitively.
//! Only 32-bit draws are used, so the stream does not depend on the
//! platform's pointer width.

use origami_forge_core::origami::Origami;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The generator of random origamis.
pub struct OrigamiSampler {
    rng: ChaCha8Rng,
}

impl OrigamiSampler {
    pub fn new(seed: u64) -> OrigamiSampler {
        OrigamiSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn shuffle(&mut self, d: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (1..=d).collect();
        for i in (1..d).rev() {
            let j = self.rng.random_range(0..=i as u32) as usize;
            v.swap(i, j);
        }
        v
    }

    /// A transitive origami with exactly `d` squares.
    pub fn origami(&mut self, d: usize) -> Origami {
        loop {
            let p1 = self.shuffle(d);
            let p2 = self.shuffle(d);
            if let Ok(o) = Origami::from_images(p1, p2) {
                return o;
            }
        }
    }

    /// A transitive origami with between 1 and `max_d` squares.
    pub fn origami_up_to(&mut self, max_d: usize) -> Origami {
        let d = 1 + self.rng.random_range(0..max_d as u32) as usize;
        self.origami(d)
    }

    /// A raw 64-bit draw, e.g. to seed per-sample generators.
    pub fn next_seed(&mut self) -> u64 {
        self.rng.next_u64()
    }
}
