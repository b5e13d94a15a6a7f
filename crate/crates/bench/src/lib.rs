//! Shared fixtures for benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stablecx::{corpus, random_complex, Complex, CorpusEntry, RandomCaps};

/// The corpus entry called `name` with `count` seeded random complexes over it.
pub fn samples(name: &str, count: usize, seed: u64) -> (CorpusEntry, Vec<Complex>) {
    let entry = corpus().into_iter().find(|e| e.name == name).expect("corpus algebra");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs = (0..count).map(|_| random_complex(&entry.ring, RandomCaps::default(), &mut rng)).collect();
    (entry, xs)
}
