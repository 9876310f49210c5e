//! Exhaustive enumeration of connected chordal graphs up to isomorphism.
//!
//! Every connected chordal graph on `n + 1` vertices arises from one on `n`
//! vertices by adding a vertex whose neighbourhood is a nonempty clique (it is
//! a simplicial vertex, and chordal graphs always have one whose removal keeps
//! them connected). Candidates are deduplicated by a canonical form: the
//! smallest adjacency code over all relabelings that respect a degree-based
//! vertex invariant.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Adjacency masks of a small graph.
pub type SmallGraph = Vec<u32>;

fn code(adj: &[u32], perm: &[usize]) -> u64 {
    // perm[new] = old
    let n = perm.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = c << 1 | u64::from(adj[perm[i]] >> perm[j] & 1);
        }
    }
    c
}

fn invariant(adj: &[u32], v: usize) -> (u32, Vec<u32>) {
    let mut nd: Vec<u32> = (0..adj.len()).filter(|&w| adj[v] >> w & 1 == 1).map(|w| adj[w].count_ones()).collect();
    nd.sort_unstable();
    (adj[v].count_ones(), nd)
}

/// Canonical code of a graph with at most 11 vertices.
pub fn canonical_code(adj: &[u32]) -> u64 {
    let n = adj.len();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let inv: Vec<_> = (0..n).map(|v| invariant(adj, v)).collect();
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    // Position p must hold a vertex whose invariant equals inv[slots[p]].
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(adj: &[u32], inv: &[(u32, Vec<u32>)], slots: &[usize], perm: &mut Vec<usize>, used: &mut [bool], best: &mut u64) {
        let p = perm.len();
        if p == slots.len() {
            *best = (*best).min(code(adj, perm));
            return;
        }
        for v in 0..slots.len() {
            if !used[v] && inv[v] == inv[slots[p]] {
                used[v] = true;
                perm.push(v);
                rec(adj, inv, slots, perm, used, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
    rec(adj, &inv, &slots, &mut perm, &mut used, &mut best);
    best
}

fn cliques(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    (1u32..1 << n).filter(|&s| (0..n).filter(|&v| s >> v & 1 == 1).all(|v| s & !(1 << v) & !adj[v] == 0)).collect()
}

/// All connected chordal graphs on `n` vertices, one per isomorphism class,
/// as adjacency masks.
pub fn connected_chordal_masks(n: usize) -> Vec<SmallGraph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<SmallGraph> = vec![vec![0]];
    for size in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for s in cliques(adj) {
                let mut grown = adj.clone();
                for (v, m) in grown.iter_mut().enumerate() {
                    if s >> v & 1 == 1 {
                        *m |= 1 << size;
                    }
                }
                grown.push(s);
                if seen.insert(canonical_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

pub fn graph_from_masks(adj: &[u32]) -> Graph {
    let n = adj.len();
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v))).collect();
    Graph::with_order(n, &edges).expect("masks describe a simple graph")
}

/// All connected chordal graphs on 1 to `max_n` vertices.
pub fn connected_chordal_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| connected_chordal_masks(n).into_iter().map(|adj| graph_from_masks(&adj))).collect()
}
