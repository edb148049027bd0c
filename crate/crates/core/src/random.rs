// SPDX-License-Identifier: Apache-2.0

//! Seeded random connected graphs for test corpora.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Attempts at plain `G(n, p)` before falling back to a spanning-tree seed.
pub const GNP_ATTEMPTS: usize = 64;

/// A connected graph on `n >= 1` vertices, deterministic in `(n, p, seed)`.
///
/// Samples `G(n, p)` up to [`GNP_ATTEMPTS`] times and returns the first
/// connected sample. If none is connected, a uniformly shuffled random
/// recursive tree is laid down first and every remaining pair is added with
/// probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 1, "random graphs need at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for _ in 0..GNP_ATTEMPTS {
        let edges = pairs.iter().copied().filter(|_| rng.gen_bool(p));
        let g = Graph::new(n, edges).expect("pairs are in range");
        if g.is_connected() {
            return g;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|i| (order[rng.gen_range(0..i)], order[i]))
        .collect();
    edges.extend(pairs.iter().copied().filter(|_| rng.gen_bool(p)));
    Graph::new(n, edges).expect("pairs are in range")
}
