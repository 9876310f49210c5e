use serde::Serialize;

use crate::graph::Graph;

/// A vertex pair on which a model disagrees with the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub u: String,
    pub v: String,
    /// Whether the graph has the edge (the model says the opposite).
    pub expected_edge: bool,
}

/// Outcome of comparing a model's adjacency with a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub discrepancies: Vec<Discrepancy>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares `adjacent(u, v)` with `g` on every unordered pair.
pub fn compare_adjacency(g: &Graph, mut adjacent: impl FnMut(usize, usize) -> bool) -> Verification {
    let mut discrepancies = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let expected = g.has_edge(u, v);
            if adjacent(u, v) != expected {
                discrepancies.push(Discrepancy { u: g.name(u).to_owned(), v: g.name(v).to_owned(), expected_edge: expected });
            }
        }
    }
    Verification { discrepancies }
}
