use std::ops::Range;

use super::{check_enumerable, scan_subsets, Algorithm, Best, CutReport, SolveOptions};
use crate::error::{Error, Result};
use crate::graph::{cut_size, require_independent, require_universe, Cut, Graph};
use crate::vertex_set::VertexSet;

/// Places every vertex of `independent` on the side opposite the majority
/// of its neighbors, given the split `(c1, c2)` of the remaining vertices.
/// A vertex with `|N(v) ∩ c2| >= |N(v) ∩ c1|` goes to `i1`.
pub fn greedy_extend_is(
    g: &Graph,
    independent: &VertexSet,
    c1: &VertexSet,
    c2: &VertexSet,
) -> Result<(VertexSet, VertexSet)> {
    require_independent(g, independent)?;
    require_universe(g, c1)?;
    require_universe(g, c2)?;
    if !c1.is_disjoint(c2) || c1.union(c2) != independent.complement() {
        return Err(Error::InvalidPartition(
            "(c1, c2) must partition V minus the independent set",
        ));
    }
    Ok(place_independent(g, independent, c1, c2))
}

fn place_independent(
    g: &Graph,
    independent: &VertexSet,
    c1: &VertexSet,
    c2: &VertexSet,
) -> (VertexSet, VertexSet) {
    let mut i1 = VertexSet::empty(g.n());
    for v in independent {
        if g.neighbors_in(v, c2) >= g.neighbors_in(v, c1) {
            i1.insert(v);
        }
    }
    let i2 = independent.difference(&i1);
    (i1, i2)
}

pub fn maxcut_given_is(g: &Graph, independent: &VertexSet) -> Result<CutReport> {
    maxcut_given_is_with(g, independent, &SolveOptions::default())
}

/// Maximum cut of any graph given one of its independent sets, by trying
/// every subset of the other vertices as side 1.
pub fn maxcut_given_is_with(
    g: &Graph,
    independent: &VertexSet,
    opts: &SolveOptions,
) -> Result<CutReport> {
    require_independent(g, independent)?;
    let rest = independent.complement();
    check_enumerable(rest.len())?;

    let scanner = Scanner::new(g, &rest);
    let best = scan_subsets(scanner.enumerated.len(), opts.threads, |range| {
        scanner.scan(range)
    });

    let c1 = VertexSet::from_iter_in(
        g.n(),
        scanner
            .enumerated
            .iter()
            .enumerate()
            .filter(|&(bit, _)| best.position.0 >> bit & 1 == 1)
            .map(|(_, &v)| v),
    );
    let c2 = rest.difference(&c1);
    let (i1, _) = place_independent(g, independent, &c1, &c2);
    let cut = Cut::from_side1(c1.union(&i1));
    let size = cut_size(g, &cut)?;
    debug_assert_eq!(size as i64, best.size);
    Ok(CutReport {
        cut,
        size,
        algorithm: Algorithm::GivenIndependent,
        subsets_enumerated: 1u64 << scanner.enumerated.len(),
    })
}

struct Scanner<'a> {
    g: &'a Graph,
    /// Bit `i` of the counter is vertex `enumerated[i]`.
    enumerated: Vec<usize>,
    in_rest: Vec<bool>,
    /// `|N(v) ∩ (V ∖ I)|` for every vertex.
    rest_degree: Vec<i64>,
}

/// Running totals for one side-1 choice `c1 ⊆ V ∖ I`.
struct State {
    in_c1: Vec<bool>,
    /// `|N(v) ∩ c1|` for every vertex.
    c1_count: Vec<i64>,
    /// Edges between `c1` and `(V ∖ I) ∖ c1`.
    rest_crossing: i64,
    /// Sum over independent vertices of their best placement.
    independent_gain: i64,
}

impl<'a> Scanner<'a> {
    fn new(g: &'a Graph, rest: &VertexSet) -> Self {
        let n = g.n();
        let mut in_rest = vec![false; n];
        for v in rest {
            in_rest[v] = true;
        }
        let rest_degree = (0..n).map(|v| g.neighbors_in(v, rest) as i64).collect();
        Self {
            g,
            enumerated: rest.to_vec(),
            in_rest,
            rest_degree,
        }
    }

    fn gain(&self, v: usize, c1_count: i64) -> i64 {
        c1_count.max(self.rest_degree[v] - c1_count)
    }

    fn add(&self, s: &mut State, u: usize) {
        s.rest_crossing += self.rest_degree[u] - 2 * s.c1_count[u];
        s.in_c1[u] = true;
        for &w in self.g.neighbors(u) {
            let before = s.c1_count[w];
            s.c1_count[w] += 1;
            if !self.in_rest[w] {
                s.independent_gain += self.gain(w, before + 1) - self.gain(w, before);
            }
        }
    }

    fn remove(&self, s: &mut State, u: usize) {
        s.rest_crossing += 2 * s.c1_count[u] - self.rest_degree[u];
        s.in_c1[u] = false;
        for &w in self.g.neighbors(u) {
            let before = s.c1_count[w];
            s.c1_count[w] -= 1;
            if !self.in_rest[w] {
                s.independent_gain += self.gain(w, before - 1) - self.gain(w, before);
            }
        }
    }

    fn scan(&self, range: Range<u64>) -> Best {
        let n = self.g.n();
        let mut s = State {
            in_c1: vec![false; n],
            c1_count: vec![0; n],
            rest_crossing: 0,
            independent_gain: (0..n)
                .filter(|&v| !self.in_rest[v])
                .map(|v| self.rest_degree[v])
                .sum(),
        };
        for (bit, &v) in self.enumerated.iter().enumerate() {
            if range.start >> bit & 1 == 1 {
                self.add(&mut s, v);
            }
        }

        let mut best = Best {
            size: -1,
            position: (range.start, 0),
        };
        let mut mask = range.start;
        loop {
            let size = s.rest_crossing + s.independent_gain;
            if size > best.size {
                best = Best {
                    size,
                    position: (mask, 0),
                };
            }
            let next = mask + 1;
            if next >= range.end {
                break;
            }
            let mut flips = mask ^ next;
            while flips != 0 {
                let bit = flips.trailing_zeros() as usize;
                flips &= flips - 1;
                let v = self.enumerated[bit];
                if s.in_c1[v] {
                    self.remove(&mut s, v);
                } else {
                    self.add(&mut s, v);
                }
            }
            mask = next;
        }
        best
    }
}
