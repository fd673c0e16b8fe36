//! Serialized solve output.
//!
//! JSON field order is fixed: `instance`, `n`, `m`, `algorithm`, `k`,
//! `side1`, `subsets`, `wall_ms`.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::graph::{cut_size, Cut, Graph};
use crate::solver::{Algorithm, CutReport};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algorithm,
    pub k: usize,
    /// 1-based, ascending.
    pub side1: Vec<usize>,
    pub subsets: u64,
    pub wall_ms: f64,
}

impl SolveReport {
    pub fn new(instance: impl Into<String>, g: &Graph, report: &CutReport, wall: Duration) -> Self {
        Self {
            instance: instance.into(),
            n: g.n(),
            m: g.m(),
            algorithm: report.algorithm,
            k: report.size,
            side1: report.cut.side1().iter().map(|v| v + 1).collect(),
            subsets: report.subsets_enumerated,
            wall_ms: wall.as_secs_f64() * 1e3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "instance: {}", self.instance).unwrap();
        writeln!(out, "n: {}", self.n).unwrap();
        writeln!(out, "m: {}", self.m).unwrap();
        writeln!(out, "algorithm: {}", self.algorithm).unwrap();
        writeln!(out, "k: {}", self.k).unwrap();
        let side1: Vec<String> = self.side1.iter().map(usize::to_string).collect();
        writeln!(out, "side1: {}", side1.join(" ")).unwrap();
        writeln!(out, "subsets: {}", self.subsets).unwrap();
        writeln!(out, "wall_ms: {:.3}", self.wall_ms).unwrap();
        out
    }

    /// Re-evaluates the reported side 1 on `g` and compares with `k`.
    pub fn reproduces_on(&self, g: &Graph) -> bool {
        if self.n != g.n() || self.side1.iter().any(|&v| v == 0 || v > g.n()) {
            return false;
        }
        let side1 = VertexSet::from_iter_in(g.n(), self.side1.iter().map(|v| v - 1));
        cut_size(g, &Cut::from_side1(side1)) == Ok(self.k)
    }
}
