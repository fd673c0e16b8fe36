//! Split graph recognition via the Hammer–Simeone degree-sequence test.

use crate::error::{Error, Result};
use crate::graph::{find_adjacent_pair, find_non_adjacent_pair, require_universe, Graph};
use crate::vertex_set::VertexSet;

/// A vertex partition into a clique and an independent set, checked on
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    clique: VertexSet,
    independent: VertexSet,
}

impl SplitPartition {
    pub fn new(g: &Graph, clique: VertexSet, independent: VertexSet) -> Result<Self> {
        if let Some((u, v)) = find_non_adjacent_pair_checked(g, &clique, &independent)? {
            return Err(Error::NotClique(u, v));
        }
        if let Some((u, v)) = find_adjacent_pair(g, &independent) {
            return Err(Error::NotIndependent(u, v));
        }
        Ok(Self {
            clique,
            independent,
        })
    }

    pub fn clique(&self) -> &VertexSet {
        &self.clique
    }

    pub fn independent(&self) -> &VertexSet {
        &self.independent
    }
}

fn find_non_adjacent_pair_checked(
    g: &Graph,
    clique: &VertexSet,
    independent: &VertexSet,
) -> Result<Option<(usize, usize)>> {
    check_cover(g, clique, independent)?;
    Ok(find_non_adjacent_pair(g, clique))
}

fn check_cover(g: &Graph, clique: &VertexSet, independent: &VertexSet) -> Result<()> {
    require_universe(g, clique)?;
    require_universe(g, independent)?;
    if !clique.is_disjoint(independent) {
        return Err(Error::InvalidPartition(
            "clique and independent set overlap",
        ));
    }
    if clique.len() + independent.len() != g.n() {
        return Err(Error::InvalidPartition(
            "clique and independent set do not cover V",
        ));
    }
    Ok(())
}

/// `true` iff `clique` is pairwise adjacent and `independent` pairwise
/// non-adjacent. Errors when the two sets do not partition `V`.
pub fn verify_partition(g: &Graph, clique: &VertexSet, independent: &VertexSet) -> Result<bool> {
    check_cover(g, clique, independent)?;
    Ok(find_non_adjacent_pair(g, clique).is_none() && find_adjacent_pair(g, independent).is_none())
}

/// Vertices ordered by non-increasing degree, ties by ascending id.
fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order
}

/// `m* = max{i : d_i >= i - 1}` over the 1-based sorted degree sequence,
/// and whether the splittance equality holds at `m*`.
pub fn splittance(degrees_desc: &[usize]) -> (usize, bool) {
    let m_star = degrees_desc
        .iter()
        .enumerate()
        .rev()
        .find(|&(i, &d)| d >= i)
        .map_or(0, |(i, _)| i + 1);
    let head: usize = degrees_desc[..m_star].iter().sum();
    let tail: usize = degrees_desc[m_star..].iter().sum();
    (m_star, head == m_star * m_star.saturating_sub(1) + tail)
}

/// Returns a clique/independent-set partition, or `None` if `g` is not split.
///
/// The clique is the `m*` highest-degree vertices (ties to lower ids).
pub fn recognize_split(g: &Graph) -> Option<SplitPartition> {
    let order = degree_order(g);
    let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let (m_star, is_split) = splittance(&degrees);
    if !is_split {
        return None;
    }
    let clique = VertexSet::from_iter_in(g.n(), order[..m_star].iter().copied());
    let independent = clique.complement();
    debug_assert_eq!(verify_partition(g, &clique, &independent), Ok(true));
    Some(SplitPartition {
        clique,
        independent,
    })
}
