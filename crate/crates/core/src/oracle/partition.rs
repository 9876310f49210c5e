//! Exhaustive clique-path and good-partition search on small graphs.
//!
//! Everything here works on `u32` adjacency masks and shares no code with the
//! polynomial recognizers it is meant to check.

use std::collections::HashMap;

use crate::chordal::is_chordal;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;
use crate::star::{validate_good_partition, GoodPartition};

/// Largest graph the mask-based searches accept.
pub const MASK_LIMIT: usize = 20;

pub(crate) fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order()).map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w)).collect()
}

fn to_mask(s: &VertexSet) -> u32 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

fn to_set(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_indices(n, bits(mask))
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |v| mask >> v & 1 == 1)
}

/// Maximal cliques of the subgraph induced by `within` (Bron–Kerbosch).
pub(crate) fn maximal_cliques_in(adj: &[u32], within: u32) -> Vec<u32> {
    fn bk(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        while p != 0 {
            let v = p.trailing_zeros() as usize;
            bk(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    if within != 0 {
        bk(adj, 0, within, 0, &mut out);
    }
    out.sort_unstable();
    out
}

/// Orders `cliques` into a path ending in `last` in which every vertex's
/// cliques are consecutive, trying all orders with contiguity pruning.
fn clique_path_ending(cliques: &[u32], last: u32) -> Option<Vec<u32>> {
    fn grow(rest: &mut Vec<u32>, path: &mut Vec<u32>, seen: u32, closed: u32) -> bool {
        if rest.is_empty() {
            return true;
        }
        for i in 0..rest.len() {
            let c = rest[i];
            if c & closed != 0 {
                continue;
            }
            // Vertices seen so far but missing from `c` end their run here.
            let closed2 = closed | (seen & !c);
            rest.swap_remove(i);
            path.push(c);
            if grow(rest, path, seen | c, closed2) {
                return true;
            }
            path.pop();
            rest.push(c);
            let j = rest.len() - 1;
            rest.swap(i, j);
        }
        false
    }
    if !cliques.contains(&last) {
        return None;
    }
    let mut rest: Vec<u32> = cliques.iter().copied().filter(|&c| c != last).collect();
    let mut path = vec![last];
    if grow(&mut rest, &mut path, last, 0) {
        path.reverse();
        Some(path)
    } else {
        None
    }
}

/// Brute-force clique path of `G[x ∪ s]` ending in the clique `x`, which must
/// be maximal there.
pub fn bruteforce_x_interval_on(g: &Graph, x: &VertexSet, s: &VertexSet) -> Result<Option<Vec<VertexSet>>> {
    if g.order() > MASK_LIMIT {
        return Err(Error::SizeLimit { n: g.order(), limit: MASK_LIMIT });
    }
    let adj = masks(g);
    let cliques = maximal_cliques_in(&adj, to_mask(x) | to_mask(s));
    Ok(clique_path_ending(&cliques, to_mask(x)).map(|p| p.into_iter().map(|c| to_set(g.order(), c)).collect()))
}

pub fn bruteforce_x_interval(g: &Graph, x: &VertexSet) -> Result<Option<Vec<VertexSet>>> {
    bruteforce_x_interval_on(g, x, &g.all())
}

/// Brute-force clique path of the whole graph, any end.
pub fn bruteforce_clique_path(g: &Graph) -> Result<Option<Vec<VertexSet>>> {
    if g.order() > MASK_LIMIT {
        return Err(Error::SizeLimit { n: g.order(), limit: MASK_LIMIT });
    }
    let adj = masks(g);
    let cliques = maximal_cliques_in(&adj, (1u32 << g.order()) - 1);
    if cliques.is_empty() {
        return Ok(Some(Vec::new()));
    }
    Ok(cliques.iter().find_map(|&end| clique_path_ending(&cliques, end)).map(|p| p.into_iter().map(|c| to_set(g.order(), c)).collect()))
}

fn components(adj: &[u32], within: u32) -> Vec<u32> {
    let mut left = within;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = 1u32 << left.trailing_zeros();
        loop {
            let grown = bits(comp).fold(comp, |m, v| m | (adj[v] & within));
            if grown == comp {
                break;
            }
            comp = grown;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

/// Set partitions of `0..k` as restricted growth strings.
fn set_partitions(k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(a: &mut Vec<usize>, k: usize, max: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if a.len() == k {
            return visit(a);
        }
        for b in 0..=max + 1 {
            a.push(b);
            let next = if b > max { b } else { max };
            if rec(a, k, next, visit) {
                return true;
            }
            a.pop();
        }
        false
    }
    if k == 0 {
        return visit(&[]);
    }
    let mut a = vec![0];
    rec(&mut a, k, 0, &mut visit)
}

/// `x` removable from `y` for `blocks`: `N(x) ∩ B ⊆ N(z)` for all `z ∈ y` in
/// all but at most one block.
fn removable(adj: &[u32], x: usize, y: u32, blocks: &[u32]) -> bool {
    let failing = blocks.iter().filter(|&&b| bits(y).any(|z| adj[x] & b & !adj[z] != 0)).count();
    failing <= 1
}

/// A good elimination order of `x_mask` for `blocks`, by memoized search over
/// the remaining subsets.
fn good_order(adj: &[u32], x_mask: u32, blocks: &[u32]) -> Option<Vec<usize>> {
    fn rec(adj: &[u32], y: u32, blocks: &[u32], dead: &mut HashMap<u32, ()>, order: &mut Vec<usize>) -> bool {
        if y == 0 {
            return true;
        }
        if dead.contains_key(&y) {
            return false;
        }
        for x in bits(y) {
            if removable(adj, x, y, blocks) {
                order.push(x);
                if rec(adj, y & !(1 << x), blocks, dead, order) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(y, ());
        false
    }
    let mut order = Vec::new();
    rec(adj, x_mask, blocks, &mut HashMap::new(), &mut order).then_some(order)
}

/// Exhaustive search for a good partition: every maximal clique `X`, every
/// coarsening of the components of `G − X` into X-interval blocks, every
/// elimination order of `X`.
pub fn bruteforce_good_partition(g: &Graph, limit: usize) -> Result<Option<GoodPartition>> {
    let n = g.order();
    if n > limit.min(MASK_LIMIT) {
        return Err(Error::SizeLimit { n, limit: limit.min(MASK_LIMIT) });
    }
    if n == 0 {
        let empty = g.empty_set();
        return Ok(Some(GoodPartition { x: empty.clone(), blocks: Partition::singletons(empty), permutation: vec![] }));
    }
    if !is_chordal(g) {
        return Ok(None);
    }
    let adj = masks(g);
    let all = (1u32 << n) - 1;
    for x in maximal_cliques_in(&adj, all) {
        let comps = components(&adj, all & !x);
        let mut x_interval: HashMap<u32, bool> = HashMap::new();
        let mut found = None;
        set_partitions(comps.len(), |labels| {
            let count = labels.iter().max().map_or(0, |m| m + 1);
            let mut blocks = vec![0u32; count];
            for (c, &l) in comps.iter().zip(labels) {
                blocks[l] |= c;
            }
            let all_interval = blocks.iter().all(|&b| {
                *x_interval.entry(b).or_insert_with(|| {
                    let cliques = maximal_cliques_in(&adj, x | b);
                    clique_path_ending(&cliques, x).is_some()
                })
            });
            if !all_interval {
                return false;
            }
            if let Some(order) = good_order(&adj, x, &blocks) {
                found = Some((blocks, order));
                return true;
            }
            false
        });
        if let Some((blocks, permutation)) = found {
            let x_set = to_set(n, x);
            let partition = Partition::new(to_set(n, all & !x), blocks.iter().map(|&b| to_set(n, b)).collect())?;
            let gp = validate_good_partition(g, &x_set, &partition)
                .map_err(|f| Error::InvalidModel(format!("exhaustive search and validator disagree: {}", f.describe(g))))?;
            return Ok(Some(GoodPartition { permutation, ..gp }));
        }
    }
    Ok(None)
}
