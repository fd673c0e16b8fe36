#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use splitcut_core::generate::generate_split;
use splitcut_core::{cut_size, Cut, Graph, VertexSet};

/// Relabels vertex `v` as `perm[v]`.
pub fn permute(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

pub fn random_perm(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm
}

/// Seeded split graph with shuffled ids, so the clique is not `0..c`.
pub fn shuffled_split(clique: usize, independent: usize, p: f64, seed: u64) -> Graph {
    let g = generate_split(clique, independent, p, seed);
    permute(&g, &random_perm(g.n(), seed ^ 0x9e37_79b9_7f4a_7c15))
}

/// Cut with side 1 = members of `pool` selected by `mask`, plus `extra`.
pub fn cut_from(n: usize, pool: &[usize], mask: u64, extra: &VertexSet) -> Cut {
    let mut side1 = extra.clone();
    for (bit, &v) in pool.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            side1.insert(v);
        }
    }
    assert_eq!(side1.universe(), n);
    Cut::from_side1(side1)
}

pub fn size_of(g: &Graph, side1: &VertexSet) -> usize {
    cut_size(g, &Cut::from_side1(side1.clone())).unwrap()
}

/// Hammer–Simeone splittance test, written out independently of the library.
pub fn splittance_says_split(g: &Graph) -> bool {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let mut m = 0;
    for i in 1..=d.len() {
        if d[i - 1] + 1 >= i {
            m = i;
        }
    }
    let lhs: usize = d[..m].iter().sum();
    let rhs: usize = m * m.saturating_sub(1) + d[m..].iter().sum::<usize>();
    lhs == rhs
}
