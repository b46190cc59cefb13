//! Seeded benchmark inputs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wellcov::generate::{random_chordal_corona, random_graph};
use wellcov::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with a fixed seed per size.
pub fn dense_random(n: usize, p: f64) -> Graph {
    random_graph(&mut rng(n as u64), n, p)
}

/// A corona over a random chordal base with pendant cliques of size 1 or 2,
/// so the chordal routes run to completion.
pub fn chordal_corona(base: usize) -> Graph {
    random_chordal_corona(&mut rng(base as u64), base, 2, true)
}
