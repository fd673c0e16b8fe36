//! Exhaustive ground truth. Deliberately naive: every cut is recounted
//! edge by edge and nothing is shared with the solver's enumeration.

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph};
use crate::solver::{Algorithm, CutReport};
use crate::vertex_set::VertexSet;

pub const DEFAULT_CAP: usize = 20;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    // Masks are u64 regardless of the requested cap.
    let cap = cap.min(63);
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    Ok(())
}

pub fn brute_force_maxcut(g: &Graph) -> Result<CutReport> {
    brute_force_maxcut_capped(g, DEFAULT_CAP)
}

/// Tries all `2^(n-1)` cuts with vertex 0 fixed on side 1.
pub fn brute_force_maxcut_capped(g: &Graph, cap: usize) -> Result<CutReport> {
    check_cap(g, cap)?;
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let free = n.saturating_sub(1);
    let mut best_size = 0;
    let mut best_assignment = 0u64;
    for mask in 0..1u64 << free {
        // Bit v set means vertex v is on side 2; vertex 0 never is.
        let assignment = mask << 1;
        let size = edges
            .iter()
            .filter(|&&(u, v)| (assignment >> u ^ assignment >> v) & 1 == 1)
            .count();
        if size > best_size {
            best_size = size;
            best_assignment = assignment;
        }
    }
    let side1 = VertexSet::from_iter_in(n, (0..n).filter(|&v| best_assignment >> v & 1 == 0));
    Ok(CutReport {
        cut: Cut::from_side1(side1),
        size: best_size,
        algorithm: Algorithm::Oracle,
        subsets_enumerated: 1u64 << free,
    })
}

pub fn brute_force_decision(g: &Graph, k: u64) -> Result<bool> {
    Ok(brute_force_maxcut(g)?.size as u64 >= k)
}

/// Tries every subset as the clique side.
pub fn brute_force_split_check(g: &Graph) -> Result<bool> {
    brute_force_split_check_capped(g, DEFAULT_CAP)
}

pub fn brute_force_split_check_capped(g: &Graph, cap: usize) -> Result<bool> {
    check_cap(g, cap)?;
    let n = g.n();
    let found = (0..1u64 << n).any(|mask| {
        let inside = |v: usize| mask >> v & 1 == 1;
        (0..n).all(|u| {
            (u + 1..n).all(|v| match (inside(u), inside(v)) {
                (true, true) => g.has_edge(u, v),
                (false, false) => !g.has_edge(u, v),
                _ => true,
            })
        })
    });
    Ok(found)
}
