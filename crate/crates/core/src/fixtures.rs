//! Small hand-built instances shared by tests, benches and the CLI suite.
//!
//! Labels in comments are 1-based (`v1` is vertex 0).

use crate::graph::Graph;

/// Five-cycle `v1..v5` plus the chord `v5v2`; maximum cut 5.
pub fn chorded_pentagon() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 1)]).unwrap()
}

/// Split image of [`chorded_pentagon`] with auxiliary vertices labelled as
/// drawn: `v6:(v1,v3)`, `v7:(v3,v5)`, `v8:(v2,v4)`, `v9:(v1,v4)`.
/// Maximum cut 13.
pub fn chorded_pentagon_image() -> Graph {
    let clique = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)));
    let aux = [
        (0, 5),
        (2, 5),
        (2, 6),
        (4, 6),
        (1, 7),
        (3, 7),
        (0, 8),
        (3, 8),
    ];
    Graph::from_edges(9, clique.chain(aux)).unwrap()
}

/// Clique `v1..v5` (ids 0..5) with independent vertices `u1..u5` (ids 5..10):
/// `u1–v1`, `u2–v1,v2,v3`, `u3–v4,v5`, `u4–v5`, `u5–v3,v5`. Maximum cut 14.
pub fn clique5_split() -> Graph {
    let clique = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)));
    let pendant = [
        (5, 0),
        (6, 0),
        (6, 1),
        (6, 2),
        (7, 3),
        (7, 4),
        (8, 4),
        (9, 2),
        (9, 4),
    ];
    Graph::from_edges(10, clique.chain(pendant)).unwrap()
}

/// Path `0-1-2-3`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}
