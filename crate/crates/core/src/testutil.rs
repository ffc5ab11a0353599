//! Small seeded random structures for unit tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Tournament, UndirectedGraph};
use crate::vertex_set::VertexSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(n: usize, p: f64, seed: u64) -> UndirectedGraph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::new(n, edges).unwrap()
}

pub fn random_tournament(n: usize, seed: u64) -> Tournament {
    let mut rng = rng(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
        }
    }
    Tournament::new(n, arcs).unwrap()
}

pub fn random_subset(n: usize, p: f64, seed: u64) -> VertexSet {
    let mut rng = rng(seed ^ 0x5eed_5eed);
    VertexSet::from_vertices(n, (0..n).filter(|_| rng.random_bool(p)))
}

pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng(seed));
    order
}
