use std::cmp::Reverse;
use std::ops::Range;

use super::{check_enumerable, scan_subsets, Algorithm, Best, CutReport, SolveOptions};
use crate::error::{Error, Result};
use crate::graph::{cut_size, require_clique, require_universe, Cut, Graph};
use crate::vertex_set::VertexSet;

/// Orders `clique` by `|N(v) ∩ i2| - |N(v) ∩ i1|`, largest first with ties
/// by ascending id, and splits off the first `m` vertices as `c1`.
pub fn clique_prefix_partition(
    g: &Graph,
    clique: &VertexSet,
    i1: &VertexSet,
    i2: &VertexSet,
    m: usize,
) -> Result<(VertexSet, VertexSet)> {
    for s in [clique, i1, i2] {
        require_universe(g, s)?;
    }
    if !i1.is_disjoint(i2) || i1.union(i2) != clique.complement() {
        return Err(Error::InvalidPartition(
            "(i1, i2) must partition V minus the clique",
        ));
    }
    if m > clique.len() {
        return Err(Error::PrefixOutOfRange {
            m,
            size: clique.len(),
        });
    }
    let mut order = clique.to_vec();
    order.sort_by_key(|&v| Reverse(g.neighbors_in(v, i2) as i64 - g.neighbors_in(v, i1) as i64));
    let c1 = VertexSet::from_iter_in(g.n(), order[..m].iter().copied());
    let c2 = clique.difference(&c1);
    Ok((c1, c2))
}

pub fn maxcut_given_clique(g: &Graph, clique: &VertexSet) -> Result<CutReport> {
    maxcut_given_clique_with(g, clique, &SolveOptions::default())
}

/// Maximum cut of any graph given one of its cliques: every subset of the
/// other vertices is tried as side 1, each with every clique prefix length.
pub fn maxcut_given_clique_with(
    g: &Graph,
    clique: &VertexSet,
    opts: &SolveOptions,
) -> Result<CutReport> {
    require_clique(g, clique)?;
    let rest = clique.complement();
    check_enumerable(rest.len())?;

    let scanner = Scanner::new(g, clique, &rest);
    let best = scan_subsets(scanner.enumerated.len(), opts.threads, |range| {
        scanner.scan(range)
    });

    let (mask, m) = best.position;
    let i1 = VertexSet::from_iter_in(
        g.n(),
        scanner
            .enumerated
            .iter()
            .enumerate()
            .filter(|&(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &v)| v),
    );
    let i2 = rest.difference(&i1);
    let (c1, _) = clique_prefix_partition(g, clique, &i1, &i2, m)?;
    let cut = Cut::from_side1(c1.union(&i1));
    let size = cut_size(g, &cut)?;
    debug_assert_eq!(size as i64, best.size);
    Ok(CutReport {
        cut,
        size,
        algorithm: Algorithm::GivenClique,
        subsets_enumerated: 1u64 << scanner.enumerated.len(),
    })
}

struct Scanner<'a> {
    g: &'a Graph,
    enumerated: Vec<usize>,
    clique: Vec<usize>,
    in_clique: Vec<bool>,
    /// `|N(v) ∩ (V ∖ C)|` for every vertex.
    rest_degree: Vec<i64>,
}

struct State {
    in_i1: Vec<bool>,
    /// `|N(v) ∩ i1|` for every vertex.
    i1_count: Vec<i64>,
    /// Edges between `i1` and `i2`.
    rest_crossing: i64,
    /// Clique-to-rest crossing edges with the whole clique on side 2.
    base: i64,
}

impl<'a> Scanner<'a> {
    fn new(g: &'a Graph, clique: &VertexSet, rest: &VertexSet) -> Self {
        let n = g.n();
        let mut in_clique = vec![false; n];
        for v in clique {
            in_clique[v] = true;
        }
        Self {
            g,
            enumerated: rest.to_vec(),
            clique: clique.to_vec(),
            in_clique,
            rest_degree: (0..n).map(|v| g.neighbors_in(v, rest) as i64).collect(),
        }
    }

    fn flip(&self, s: &mut State, u: usize) {
        let delta = if s.in_i1[u] { -1 } else { 1 };
        s.rest_crossing += delta * (self.rest_degree[u] - 2 * s.i1_count[u]);
        s.in_i1[u] = !s.in_i1[u];
        for &w in self.g.neighbors(u) {
            s.i1_count[w] += delta;
            if self.in_clique[w] {
                s.base += delta;
            }
        }
    }

    fn scan(&self, range: Range<u64>) -> Best {
        let n = self.g.n();
        let size = self.clique.len();
        let mut s = State {
            in_i1: vec![false; n],
            i1_count: vec![0; n],
            rest_crossing: 0,
            base: 0,
        };
        for (bit, &v) in self.enumerated.iter().enumerate() {
            if range.start >> bit & 1 == 1 {
                self.flip(&mut s, v);
            }
        }

        let mut keys = vec![0i64; size];
        let mut order: Vec<usize> = (0..size).collect();
        let mut best = Best {
            size: -1,
            position: (range.start, 0),
        };
        let mut mask = range.start;
        loop {
            for (key, &v) in keys.iter_mut().zip(&self.clique) {
                *key = self.rest_degree[v] - 2 * s.i1_count[v];
            }
            // Stable on ascending ids, so equal keys keep id order.
            order.clear();
            order.extend(0..size);
            order.sort_by_key(|&j| Reverse(keys[j]));

            let fixed = s.base + s.rest_crossing;
            let mut prefix = 0;
            for m in 0..=size {
                if m > 0 {
                    prefix += keys[order[m - 1]];
                }
                let value = (m * (size - m)) as i64 + fixed + prefix;
                if value > best.size {
                    best = Best {
                        size: value,
                        position: (mask, m),
                    };
                }
            }

            let next = mask + 1;
            if next >= range.end {
                break;
            }
            let mut flips = mask ^ next;
            while flips != 0 {
                let bit = flips.trailing_zeros() as usize;
                flips &= flips - 1;
                self.flip(&mut s, self.enumerated[bit]);
            }
            mask = next;
        }
        best
    }
}
