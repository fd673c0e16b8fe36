//! Seeded random instances.
//!
//! All generators draw from ChaCha8 seeded with `seed_from_u64`, one `u64`
//! per candidate edge in row-major order. A draw `x` becomes an edge when
//! `(x >> 11) * 2^-53 < p`, which is exact for `p = 0` and `p = 1` and does
//! not depend on platform or float formatting.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn coin(rng: &mut ChaCha8Rng, p: f64) -> bool {
    const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
    ((rng.next_u64() >> 11) as f64 * SCALE) < p
}

/// Clique on ids `0..clique_size`, independent set on the next `is_size`
/// ids. One draw per (clique vertex, independent vertex) pair, clique index
/// outer.
pub fn generate_split(clique_size: usize, is_size: usize, edge_prob: f64, seed: u64) -> Graph {
    let adjacency = split_adjacency(clique_size, is_size, edge_prob, seed);
    split_from_adjacency(clique_size, is_size, &adjacency)
}

fn split_adjacency(
    clique_size: usize,
    is_size: usize,
    edge_prob: f64,
    seed: u64,
) -> Vec<Vec<bool>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..clique_size)
        .map(|_| (0..is_size).map(|_| coin(&mut rng, edge_prob)).collect())
        .collect()
}

fn split_from_adjacency(clique_size: usize, is_size: usize, adjacency: &[Vec<bool>]) -> Graph {
    let clique = (0..clique_size).flat_map(|u| (u + 1..clique_size).map(move |v| (u, v)));
    let cross = adjacency.iter().enumerate().flat_map(|(c, row)| {
        row.iter()
            .enumerate()
            .filter(|&(_, &e)| e)
            .map(move |(j, _)| (c, clique_size + j))
    });
    Graph::from_edges(clique_size + is_size, clique.chain(cross))
        .expect("generated split graph is simple")
}

/// Split graph with `|C| = |I| = t` where every independent vertex has
/// between 1 and `t - 1` clique neighbors, so the graph is connected and the
/// recognized clique is exactly `0..t`.
///
/// Starts from [`generate_split`] and repairs independent vertex `j` by
/// adding or removing its edge to clique vertex `j mod t`.
///
/// Panics if `t < 2`.
pub fn balanced_instance(t: usize, edge_prob: f64, seed: u64) -> Graph {
    assert!(t >= 2, "balanced instances need t >= 2");
    let mut adjacency = split_adjacency(t, t, edge_prob, seed);
    for j in 0..t {
        let degree = (0..t).filter(|&c| adjacency[c][j]).count();
        if degree == 0 {
            adjacency[j % t][j] = true;
        } else if degree == t {
            adjacency[j % t][j] = false;
        }
    }
    split_from_adjacency(t, t, &adjacency)
}

/// Erdős–Rényi `G(n, p)`, one draw per pair `u < v` in lexicographic order.
pub fn generate_gnp(n: usize, edge_prob: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if coin(&mut rng, edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated graph is simple")
}
