//! Simple undirected graphs over dense vertex ids `0..n`, and cuts on them.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Undirected simple graph.
///
/// Adjacency is held twice: sorted neighbor lists for iteration and one
/// bit row per vertex so that `|N(v) ∩ S|` is a popcount over a few words.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            neighbors: vec![Vec::new(); n],
            rows: vec![VertexSet::empty(n); n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are simple")
    }

    /// Builds a graph from an edge list. Self-loops, duplicate edges (in
    /// either orientation) and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        for list in g.neighbors.iter_mut() {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.rows[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.neighbors[u].push(v);
        self.neighbors[v].push(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Neighborhood of `v` as a bit row.
    #[inline]
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// `|N(v) ∩ set|`.
    #[inline]
    pub fn neighbors_in(&self, v: usize, set: &VertexSet) -> usize {
        self.rows[v].intersection_len(set)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Subgraph induced by `vertices` (ascending), relabelled to `0..k`.
    /// Position `i` of the returned list is the original id of new vertex `i`.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> (Graph, Vec<usize>) {
        let ids = vertices.to_vec();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let edges = ids.iter().enumerate().flat_map(|(i, &v)| {
            let local = &local;
            self.neighbors[v]
                .iter()
                .map(move |&w| local[w])
                .filter(move |&j| j != usize::MAX && j > i)
                .map(move |j| (i, j))
        });
        let sub = Graph::from_edges(ids.len(), edges).expect("induced subgraph is simple");
        (sub, ids)
    }

    fn check_universe(&self, set: &VertexSet) -> Result<()> {
        if set.universe() != self.n() {
            return Err(Error::UniverseMismatch {
                expected: self.n(),
                got: set.universe(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A partition `(side1, side2)` of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    side1: VertexSet,
    side2: VertexSet,
}

impl Cut {
    /// Cut with `side1` as given and everything else on side 2.
    pub fn from_side1(side1: VertexSet) -> Self {
        let side2 = side1.complement();
        Self { side1, side2 }
    }

    /// Validates that the two sides partition their (common) universe.
    pub fn from_sides(side1: VertexSet, side2: VertexSet) -> Result<Self> {
        if side1.universe() != side2.universe() {
            return Err(Error::InvalidPartition("sides over different universes"));
        }
        if !side1.is_disjoint(&side2) {
            return Err(Error::InvalidPartition("sides overlap"));
        }
        if side1.len() + side2.len() != side1.universe() {
            return Err(Error::InvalidPartition("vertex missing from both sides"));
        }
        Ok(Self { side1, side2 })
    }

    pub fn side1(&self) -> &VertexSet {
        &self.side1
    }

    pub fn side2(&self) -> &VertexSet {
        &self.side2
    }

    pub fn universe(&self) -> usize {
        self.side1.universe()
    }

    /// Same partition with the sides exchanged.
    pub fn swapped(&self) -> Cut {
        Cut {
            side1: self.side2.clone(),
            side2: self.side1.clone(),
        }
    }
}

/// Number of edges with one endpoint on each side of `cut`.
pub fn cut_size(g: &Graph, cut: &Cut) -> Result<usize> {
    g.check_universe(cut.side1())?;
    Ok(cut
        .side1()
        .iter()
        .map(|v| g.neighbors_in(v, cut.side2()))
        .sum())
}

/// Graph whose edges are exactly the non-edges of `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&v| !g.has_edge(u, v))
            .map(move |v| (u, v))
    });
    Graph::from_edges(n, edges).expect("complement of a simple graph is simple")
}

/// Connected components ordered by their smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = VertexSet::empty(n);
        seen[start] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            comp.insert(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_clique(g: &Graph, set: &VertexSet) -> bool {
    find_non_adjacent_pair(g, set).is_none()
}

pub fn is_independent_set(g: &Graph, set: &VertexSet) -> bool {
    find_adjacent_pair(g, set).is_none()
}

pub(crate) fn find_non_adjacent_pair(g: &Graph, set: &VertexSet) -> Option<(usize, usize)> {
    let size = set.len();
    set.iter().find_map(|v| {
        if g.neighbors_in(v, set) == size - 1 {
            None
        } else {
            let w = set.iter().find(|&w| w != v && !g.has_edge(v, w))?;
            Some((v.min(w), v.max(w)))
        }
    })
}

pub(crate) fn find_adjacent_pair(g: &Graph, set: &VertexSet) -> Option<(usize, usize)> {
    set.iter().find_map(|v| {
        let w = g.neighbors(v).iter().copied().find(|&w| set.contains(w))?;
        Some((v.min(w), v.max(w)))
    })
}

/// Checks that `set` is an independent set of `g`.
pub(crate) fn require_independent(g: &Graph, set: &VertexSet) -> Result<()> {
    g.check_universe(set)?;
    match find_adjacent_pair(g, set) {
        Some((u, v)) => Err(Error::NotIndependent(u, v)),
        None => Ok(()),
    }
}

pub(crate) fn require_clique(g: &Graph, set: &VertexSet) -> Result<()> {
    g.check_universe(set)?;
    match find_non_adjacent_pair(g, set) {
        Some((u, v)) => Err(Error::NotClique(u, v)),
        None => Ok(()),
    }
}

pub(crate) fn require_universe(g: &Graph, set: &VertexSet) -> Result<()> {
    g.check_universe(set)
}
