//! Transformation of an arbitrary graph into a split graph whose maximum
//! cut is larger by exactly twice the number of non-edges.
//!
//! The original vertices are completed into a clique and every non-edge
//! `{u, v}` gets its own auxiliary vertex adjacent to exactly `u` and `v`.

use crate::error::{Error, Result};
use crate::graph::{cut_size, Cut, Graph};
use crate::solver::{maxcut_split_with, Algorithm, CutReport, SolveOptions};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct ReductionMap {
    original: Graph,
    image: Graph,
    /// Non-edges of the original in lexicographic order; the `i`-th one is
    /// represented by image vertex `n + i`.
    nonedges: Vec<(usize, usize)>,
}

impl ReductionMap {
    pub fn original(&self) -> &Graph {
        &self.original
    }

    pub fn image(&self) -> &Graph {
        &self.image
    }

    pub fn nonedge_count(&self) -> usize {
        self.nonedges.len()
    }

    /// Auxiliary image vertex standing for the non-edge `{u, v}`.
    pub fn nonedge_vertex(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.nonedges
            .binary_search(&key)
            .ok()
            .map(|i| self.original.n() + i)
    }

    /// `(auxiliary vertex, u, v)` triples in id order.
    pub fn auxiliaries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.original.n();
        self.nonedges
            .iter()
            .enumerate()
            .map(move |(i, &(u, v))| (n + i, u, v))
    }

    /// Ids `0..n` of the image, i.e. the original vertices.
    pub fn original_vertices(&self) -> VertexSet {
        VertexSet::from_iter_in(self.image.n(), 0..self.original.n())
    }
}

pub fn build_split_instance(g: &Graph) -> ReductionMap {
    let n = g.n();
    let nonedges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let clique = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let gadgets = nonedges
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)]);
    let image = Graph::from_edges(n + nonedges.len(), clique.chain(gadgets))
        .expect("reduction image is simple");
    ReductionMap {
        original: g.clone(),
        image,
        nonedges,
    }
}

/// Restricts a cut of the image to the original vertices. Auxiliary
/// placement is ignored.
pub fn lift_cut(map: &ReductionMap, image_cut: &Cut) -> Result<Cut> {
    if image_cut.universe() != map.image.n() {
        return Err(Error::UniverseMismatch {
            expected: map.image.n(),
            got: image_cut.universe(),
        });
    }
    let n = map.original.n();
    let side1 = VertexSet::from_iter_in(n, image_cut.side1().iter().filter(|&v| v < n));
    Ok(Cut::from_side1(side1))
}

/// Maximum cut of an arbitrary graph through the split-graph solver.
pub fn maxcut_via_reduction(g: &Graph) -> Result<CutReport> {
    maxcut_via_reduction_with(g, &SolveOptions::default())
}

pub fn maxcut_via_reduction_with(g: &Graph, opts: &SolveOptions) -> Result<CutReport> {
    let map = build_split_instance(g);
    let image_report = maxcut_split_with(&map.image, opts)?;
    let cut = lift_cut(&map, &image_report.cut)?;
    let size = cut_size(g, &cut)?;
    debug_assert_eq!(size + 2 * map.nonedge_count(), image_report.size);
    Ok(CutReport {
        cut,
        size,
        algorithm: Algorithm::Reduction,
        subsets_enumerated: image_report.subsets_enumerated,
    })
}
