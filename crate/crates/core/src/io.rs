//! DIMACS `p edge` instance files and the reduction sidecar format.
//!
//! ```text
//! c comment
//! p edge <n> <m>
//! e <u> <v>
//! ```
//!
//! Labels are 1-based on disk and 0-based in memory.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;
use crate::reduction::ReductionMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("second problem line")]
    DuplicateHeader,
    #[error("malformed header")]
    MalformedHeader,
    #[error("malformed edge line")]
    MalformedEdge,
    #[error("weighted instances are not supported")]
    Weighted,
    #[error("unrecognized line")]
    UnknownLine,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("header declares {declared} edges but {found} were given")]
    CountMismatch { declared: usize, found: usize },
}

fn fail(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_instance(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(fail(line, ParseErrorKind::DuplicateHeader));
                }
                let fields: Vec<&str> = tokens.collect();
                let [format, n, m] = fields[..] else {
                    return Err(fail(line, ParseErrorKind::MalformedHeader));
                };
                if format != "edge" {
                    return Err(fail(line, ParseErrorKind::MalformedHeader));
                }
                let (Ok(n), Ok(m)) = (n.parse(), m.parse()) else {
                    return Err(fail(line, ParseErrorKind::MalformedHeader));
                };
                header = Some((n, m, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(fail(line, ParseErrorKind::MissingHeader));
                };
                let fields: Vec<&str> = tokens.collect();
                let [u, v] = fields[..] else {
                    return Err(fail(line, ParseErrorKind::MalformedEdge));
                };
                let (Ok(u), Ok(v)) = (u.parse::<usize>(), v.parse::<usize>()) else {
                    return Err(fail(line, ParseErrorKind::MalformedEdge));
                };
                for vertex in [u, v] {
                    if vertex == 0 || vertex > n {
                        return Err(fail(line, ParseErrorKind::VertexOutOfRange { vertex, n }));
                    }
                }
                if u == v {
                    return Err(fail(line, ParseErrorKind::SelfLoop(u)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(fail(line, ParseErrorKind::DuplicateEdge(u, v)));
                }
                edges.push((u - 1, v - 1));
            }
            "w" => return Err(fail(line, ParseErrorKind::Weighted)),
            _ => return Err(fail(line, ParseErrorKind::UnknownLine)),
        }
    }

    let Some((n, declared, header_line)) = header else {
        return Err(fail(last_line.max(1), ParseErrorKind::MissingHeader));
    };
    if declared != edges.len() {
        return Err(fail(
            header_line,
            ParseErrorKind::CountMismatch {
                declared,
                found: edges.len(),
            },
        ));
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated during parsing"))
}

/// Serializes `g` with edges in lexicographic order, preceded by optional
/// comment lines.
pub fn write_instance(g: &Graph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// One `a <aux> <u> <v>` line per auxiliary vertex of the image, 1-based.
pub fn write_mapping(map: &ReductionMap) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "c auxiliary vertices of a {}-vertex reduction image; original vertices are 1..{}",
        map.image().n(),
        map.original().n()
    )
    .unwrap();
    for (aux, u, v) in map.auxiliaries() {
        writeln!(out, "a {} {} {}", aux + 1, u + 1, v + 1).unwrap();
    }
    out
}
