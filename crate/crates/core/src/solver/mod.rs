//! Exact maximum cut on split graphs.
//!
//! Two enumerations are available. Given an independent set `I`,
//! [`maxcut_given_is`] walks every subset of `V ∖ I` and places each
//! independent vertex greedily. Given a clique `C`, [`maxcut_given_clique`]
//! walks every subset of `V ∖ C` and picks the best prefix of the clique
//! ordered by neighbor imbalance. [`maxcut_split`] routes each connected
//! component to whichever enumerates the smaller side, so at most
//! `2^(n/2)` subsets are visited.

mod clique;
mod independent;

use std::fmt;
use std::ops::Range;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{connected_components, Cut, Graph};
use crate::split::{recognize_split, SplitPartition};
use crate::vertex_set::VertexSet;

pub use clique::{clique_prefix_partition, maxcut_given_clique, maxcut_given_clique_with};
pub use independent::{greedy_extend_is, maxcut_given_is, maxcut_given_is_with};

/// Largest enumerated side the solver accepts.
pub const MAX_ENUMERATED: usize = 62;

/// Below this many subsets the enumeration always runs on the calling thread.
const PARALLEL_MIN_SUBSETS: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Algorithm {
    /// Enumerate subsets of the complement of a known independent set.
    #[serde(rename = "alg1")]
    GivenIndependent,
    /// Enumerate subsets of the complement of a known clique.
    #[serde(rename = "alg2")]
    GivenClique,
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "component-merge")]
    ComponentMerge,
    #[serde(rename = "oracle")]
    Oracle,
    #[serde(rename = "reduction")]
    Reduction,
}

impl Algorithm {
    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::GivenIndependent => "alg1",
            Algorithm::GivenClique => "alg2",
            Algorithm::Trivial => "trivial",
            Algorithm::ComponentMerge => "component-merge",
            Algorithm::Oracle => "oracle",
            Algorithm::Reduction => "reduction",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A maximum cut together with how it was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    pub cut: Cut,
    pub size: usize,
    pub algorithm: Algorithm,
    pub subsets_enumerated: u64,
}

/// Which enumeration [`maxcut_split_with`] should use on non-trivial components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    GivenIndependent,
    GivenClique,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads for the subset loop; 0 and 1 both mean sequential.
    /// Results are identical for every value.
    pub threads: usize,
    /// Overrides the smaller-side dispatch.
    pub force: Option<Strategy>,
}

/// Best value seen in a scan and the enumeration position where it first
/// occurred. Positions compare lexicographically in enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Best {
    pub size: i64,
    pub position: (u64, usize),
}

impl Best {
    fn first_of(a: Best, b: Best) -> Best {
        if a.size > b.size || (a.size == b.size && a.position <= b.position) {
            a
        } else {
            b
        }
    }
}

/// Scans `0..2^bits` in blocks and keeps the first maximum in counter order,
/// so the outcome does not depend on `threads`.
pub(crate) fn scan_subsets<F>(bits: usize, threads: usize, scan: F) -> Best
where
    F: Fn(Range<u64>) -> Best + Sync,
{
    let total = 1u64 << bits;
    if threads <= 1 || total < PARALLEL_MIN_SUBSETS {
        return scan(0..total);
    }
    let blocks = (threads as u64 * 8).min(total);
    let width = total.div_ceil(blocks);
    let run = || {
        (0..blocks)
            .into_par_iter()
            .map(|b| scan(b * width..((b + 1) * width).min(total)))
            .reduce_with(Best::first_of)
            .expect("at least one block")
    };
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(run),
        Err(_) => scan(0..total),
    }
}

pub(crate) fn check_enumerable(side: usize) -> Result<()> {
    if side > MAX_ENUMERATED {
        return Err(Error::TooLarge {
            n: side,
            cap: MAX_ENUMERATED,
        });
    }
    Ok(())
}

/// Maximum cut of a split graph with default options.
pub fn maxcut_split(g: &Graph) -> Result<CutReport> {
    maxcut_split_with(g, &SolveOptions::default())
}

/// Maximum cut of a split graph.
///
/// Edgeless and complete graphs are answered directly. Otherwise each
/// connected component is solved on its own and the component cuts are
/// concatenated as returned.
pub fn maxcut_split_with(g: &Graph, opts: &SolveOptions) -> Result<CutReport> {
    let partition = recognize_split(g).ok_or(Error::NotSplit)?;
    if let Some(report) = trivial_cut(g) {
        return Ok(report);
    }
    let components = connected_components(g);
    if components.len() == 1 {
        return solve_connected(g, &partition, opts);
    }

    let mut side1 = VertexSet::empty(g.n());
    let mut size = 0;
    let mut subsets = 0;
    for component in &components {
        let (sub, ids) = g.induced_subgraph(component);
        let sub_partition =
            recognize_split(&sub).expect("induced subgraph of a split graph is split");
        let report = solve_connected(&sub, &sub_partition, opts)?;
        for v in report.cut.side1() {
            side1.insert(ids[v]);
        }
        size += report.size;
        subsets += report.subsets_enumerated;
    }
    Ok(CutReport {
        cut: Cut::from_side1(side1),
        size,
        algorithm: Algorithm::ComponentMerge,
        subsets_enumerated: subsets,
    })
}

fn solve_connected(
    g: &Graph,
    partition: &SplitPartition,
    opts: &SolveOptions,
) -> Result<CutReport> {
    if let Some(report) = trivial_cut(g) {
        return Ok(report);
    }
    let strategy = opts.force.unwrap_or(
        if partition.clique().len() <= partition.independent().len() {
            Strategy::GivenIndependent
        } else {
            Strategy::GivenClique
        },
    );
    match strategy {
        Strategy::GivenIndependent => maxcut_given_is_with(g, partition.independent(), opts),
        Strategy::GivenClique => maxcut_given_clique_with(g, partition.clique(), opts),
    }
}

/// Edgeless graph: everything on one side. Complete graph: halves.
fn trivial_cut(g: &Graph) -> Option<CutReport> {
    let n = g.n();
    let (side1, size) = if g.m() == 0 {
        (VertexSet::full(n), 0)
    } else if g.is_complete() {
        (VertexSet::from_iter_in(n, 0..n / 2), (n / 2) * (n - n / 2))
    } else {
        return None;
    };
    Some(CutReport {
        cut: Cut::from_side1(side1),
        size,
        algorithm: Algorithm::Trivial,
        subsets_enumerated: 0,
    })
}

/// Outcome of the threshold decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decision {
    pub answer: bool,
    /// Answered from the clique size alone.
    pub early_exit: bool,
    pub subsets_enumerated: u64,
}

/// Does the split graph `g` have a cut of size at least `k`?
///
/// Splitting the clique into halves already crosses `⌊|C|²/4⌋` edges, so
/// `4k <= |C|²` is an immediate yes. Otherwise `|C| < 2√k` and the
/// independent-set enumeration over the clique is exact.
pub fn decide_maxcut(g: &Graph, k: u64) -> Result<Decision> {
    decide_maxcut_with(g, k, &SolveOptions::default())
}

pub fn decide_maxcut_with(g: &Graph, k: u64, opts: &SolveOptions) -> Result<Decision> {
    let partition = recognize_split(g).ok_or(Error::NotSplit)?;
    let c = partition.clique().len() as u128;
    if 4 * k as u128 <= c * c {
        return Ok(Decision {
            answer: true,
            early_exit: true,
            subsets_enumerated: 0,
        });
    }
    let report = maxcut_given_is_with(g, partition.independent(), opts)?;
    Ok(Decision {
        answer: report.size as u64 >= k,
        early_exit: false,
        subsets_enumerated: report.subsets_enumerated,
    })
}
