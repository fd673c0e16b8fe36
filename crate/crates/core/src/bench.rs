//! Subset-count scaling harness on balanced split instances.

use std::time::Instant;

use crate::error::Result;
use crate::generate::balanced_instance;
use crate::solver::{maxcut_split_with, SolveOptions};

pub const CSV_HEADER: &str = "t,n,subsets,size,millis";

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub t: usize,
    pub n: usize,
    pub subsets: u64,
    pub size: usize,
    pub millis: f64,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{:.3}",
            self.t, self.n, self.subsets, self.size, self.millis
        )
    }
}

/// Solves one [`balanced_instance`] per `t` in `min_t..=max_t`, seeded with
/// `seed + t`.
pub fn bench_rows(
    min_t: usize,
    max_t: usize,
    edge_prob: f64,
    seed: u64,
    opts: &SolveOptions,
) -> Result<Vec<BenchRow>> {
    (min_t.max(2)..=max_t)
        .map(|t| {
            let g = balanced_instance(t, edge_prob, seed.wrapping_add(t as u64));
            let start = Instant::now();
            let report = maxcut_split_with(&g, opts)?;
            Ok(BenchRow {
                t,
                n: g.n(),
                subsets: report.subsets_enumerated,
                size: report.size,
                millis: start.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect()
}
