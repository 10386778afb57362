//! Fixed benchmark instances shared by the criterion benches.

use ttone::random::{random_apollonian, random_subdivided, rng_from_seed};
use ttone::Graph;

pub fn apollonian(n: usize) -> Graph {
    random_apollonian(n, 0.3, &mut rng_from_seed(n as u64))
}

/// A subdivided random graph; sparse enough for the sparse 2-tone construction.
pub fn subdivided(base: usize) -> Graph {
    random_subdivided(base, base / 3, 3, base / 2, &mut rng_from_seed(base as u64))
}

pub fn grid(side: usize) -> Graph {
    Graph::grid(side, side).expect("side >= 1")
}
