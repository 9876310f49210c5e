//! Chordality: maximum cardinality search, perfect elimination orders,
//! chordless-cycle witnesses and maximal cliques.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A perfect elimination order together with each vertex's position in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
    pub position: Vec<usize>,
}

impl EliminationOrder {
    fn from_order(order: Vec<usize>) -> Self {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        Self { order, position }
    }

    /// Neighbours of `v` eliminated after it.
    pub fn later_neighbors(&self, g: &Graph, v: usize) -> VertexSet {
        let mut later = g.neighbors(v).clone();
        for u in g.neighbors(v).iter() {
            if self.position[u] < self.position[v] {
                later.remove(u);
            }
        }
        later
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal(EliminationOrder),
    /// Vertices of an induced cycle of length at least four, in cyclic order.
    NotChordal(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Maximum cardinality search; returns the visit order (ties → smallest index).
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = None;
        for v in 0..n {
            if !visited[v] && best.is_none_or(|b: usize| weight[v] > weight[b]) {
                best = Some(v);
            }
        }
        let v = best.expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Returns a vertex at which `order` fails to be a perfect elimination order,
/// together with two non-adjacent later neighbours.
fn peo_violation(g: &Graph, peo: &EliminationOrder) -> Option<(usize, usize, usize)> {
    for &v in &peo.order {
        let later = peo.later_neighbors(g, v);
        let Some(parent) = later.iter().min_by_key(|&u| peo.position[u]) else {
            continue;
        };
        for u in later.iter() {
            if u != parent && !g.has_edge(u, parent) {
                return Some((v, parent, u));
            }
        }
    }
    None
}

pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.order() {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in order {
        if v >= g.order() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    peo_violation(g, &EliminationOrder::from_order(order.to_vec())).is_none()
}

/// Shortest path from `a` to `b` avoiding `v` and the rest of `N(v)`; closing
/// it through `v` gives a chordless cycle.
fn cycle_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let mut blocked = g.neighbors(v).clone();
    blocked.insert(v);
    blocked.remove(a);
    blocked.remove(b);
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for y in g.neighbors(x).iter() {
            if !blocked.contains(y) && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[b] == usize::MAX {
        return None;
    }
    let mut path = vec![b];
    let mut x = b;
    while x != a {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    path.push(v);
    Some(path)
}

fn chordless_cycle(g: &Graph, hint: usize) -> Vec<usize> {
    let candidates = std::iter::once(hint).chain(0..g.order());
    for v in candidates {
        let nbrs = g.neighbors(v).to_vec();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(cycle) = cycle_through(g, v, a, b) {
                        return cycle;
                    }
                }
            }
        }
    }
    unreachable!("a graph without a perfect elimination order has a chordless cycle")
}

pub fn chordality(g: &Graph) -> Chordality {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    let peo = EliminationOrder::from_order(order);
    match peo_violation(g, &peo) {
        None => Chordality::Chordal(peo),
        Some((v, _, _)) => Chordality::NotChordal(chordless_cycle(g, v)),
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_chordal()
}

/// Checks that `cycle` is an induced cycle of length ≥ 4.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || VertexSet::from_indices(g.order(), cycle.iter().copied()).len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Maximal cliques of a chordal graph, from a perfect elimination order.
pub fn maximal_cliques_from(g: &Graph, peo: &EliminationOrder) -> Vec<VertexSet> {
    let mut candidates: Vec<VertexSet> = peo
        .order
        .iter()
        .map(|&v| {
            let mut c = peo.later_neighbors(g, v);
            c.insert(v);
            c
        })
        .collect();
    candidates.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut cliques: Vec<VertexSet> = Vec::new();
    for c in candidates {
        if !cliques.iter().any(|k| c.is_subset(k)) {
            cliques.push(c);
        }
    }
    cliques.sort_by_key(|c| c.first());
    cliques
}

pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    match chordality(g) {
        Chordality::Chordal(peo) => Ok(maximal_cliques_from(g, &peo)),
        Chordality::NotChordal(_) => Err(Error::NotChordal),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::with_order(n, &edges).unwrap()
    }

    #[test]
    fn cycles_are_not_chordal_and_have_witness() {
        for n in 4..9 {
            let g = cycle(n);
            match chordality(&g) {
                Chordality::NotChordal(c) => assert!(is_chordless_cycle(&g, &c)),
                _ => panic!("C{n} reported chordal"),
            }
        }
    }

    #[test]
    fn triangle_and_trees_are_chordal() {
        assert!(is_chordal(&cycle(3)));
        let path = Graph::with_order(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(is_chordal(&path));
        assert_eq!(maximal_cliques(&path).unwrap().len(), 4);
    }

    #[test]
    fn witness_inside_larger_graph() {
        // C5 with a pendant clique attached.
        let g = Graph::with_order(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (0, 6), (5, 6)]).unwrap();
        let Chordality::NotChordal(c) = chordality(&g) else { panic!() };
        assert!(is_chordless_cycle(&g, &c));
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn cliques_of_three_sun() {
        let g = Graph::new(
            ["x", "y", "z", "a", "b", "c"],
            [("x", "y"), ("y", "z"), ("x", "z"), ("a", "x"), ("a", "y"), ("b", "x"), ("b", "z"), ("c", "y"), ("c", "z")],
        )
        .unwrap();
        let cliques = maximal_cliques(&g).unwrap();
        assert_eq!(cliques.len(), 4);
        assert!(cliques.iter().all(|c| g.is_maximal_clique(c)));
    }

    #[test]
    fn peo_validation() {
        let g = Graph::with_order(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_perfect_elimination_order(&g, &[0, 1, 2]));
        assert!(!is_perfect_elimination_order(&g, &[1, 0, 2]));
        assert!(!is_perfect_elimination_order(&g, &[0, 0, 2]));
    }

    #[test]
    fn empty_graph() {
        let g = Graph::with_order(0, &[]).unwrap();
        assert!(maximal_cliques(&g).unwrap().is_empty());
    }
}
