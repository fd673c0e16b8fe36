//! Exact maximum cut for split graphs, and for arbitrary graphs through a
//! split-graph reduction.
//!
//! A split graph has its vertices partitioned into a clique `C` and an
//! independent set `I`. Knowing either side is enough to find a maximum
//! cut by enumerating only the subsets of the other side, so on split
//! graphs the solver visits at most `2^(n/2)` subsets in polynomial space.
//!
//! ```
//! use splitcut_core::{fixtures, maxcut_split};
//!
//! let report = maxcut_split(&fixtures::clique5_split()).unwrap();
//! assert_eq!(report.size, 14);
//! ```

pub mod bench;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reduction;
pub mod report;
pub mod solver;
pub mod split;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{
    complement, connected_components, cut_size, is_clique, is_independent_set, Cut, Graph,
};
pub use reduction::{build_split_instance, lift_cut, maxcut_via_reduction, ReductionMap};
pub use solver::{
    clique_prefix_partition, decide_maxcut, greedy_extend_is, maxcut_given_clique, maxcut_given_is,
    maxcut_split, maxcut_split_with, Algorithm, CutReport, Decision, SolveOptions, Strategy,
};
pub use split::{recognize_split, verify_partition, SplitPartition};
pub use vertex_set::VertexSet;
