//! Star NeS models and good partitions.
//!
//! A good partition `(X, 𝓑)` of `G` is a maximal clique `X` and a partition of
//! `V ∖ X` such that (1) every component of `G − X` lies in one block, (2)
//! each `G[X ∪ B]` has a clique path ending in `X`, and (3) `X` can be
//! eliminated one removable vertex at a time. A graph has a good partition iff
//! it has a star NeS model; [`find_good_partition`] decides this and
//! [`synthesize_star_model`] builds the model.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::chordal::{chordality, maximal_cliques_from, Chordality};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::interval::is_x_interval_on;
use crate::linear::check_cover;
use crate::nes::{Ball, EmbeddedTree, NesModel, TreePoint};
use crate::partition::Partition;
use crate::rational::{int, Rational};
use crate::verify::{compare_adjacency, Verification};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodPartition {
    pub x: VertexSet,
    pub blocks: Partition,
    /// A good permutation `(x_1, …, x_t)` of `X`.
    pub permutation: Vec<usize>,
}

/// `⋃_{y ∈ w, y ≠ x} N(x) ∖ N(y)`, restricted to `outside`.
fn excess(g: &Graph, x: usize, w: &VertexSet, outside: &VertexSet) -> VertexSet {
    let mut d = VertexSet::empty(g.order());
    let nx = g.neighbors(x).intersection(outside);
    for y in w.iter().filter(|&y| y != x) {
        d.union_with(&nx.difference(g.neighbors(y)));
    }
    d
}

/// Union of the blocks of `a` in which `N(x)` is not minimal for `w`.
pub fn notmin(g: &Graph, x: usize, w: &VertexSet, a: &Partition) -> Result<VertexSet> {
    if !w.contains(x) {
        return Err(Error::Precondition(format!("`{}` is not in W", g.name(x))));
    }
    let d = excess(g, x, w, a.ground());
    let mut out = VertexSet::empty(g.order());
    for block in a.blocks() {
        if block.intersects(&d) {
            out.union_with(block);
        }
    }
    Ok(out)
}

/// Number of blocks of `b` in which `N(x)` is not minimal for `y`.
fn nonminimal_blocks(g: &Graph, x: usize, y: &VertexSet, b: &Partition) -> usize {
    let d = excess(g, x, y, b.ground());
    b.blocks().iter().filter(|block| block.intersects(&d)).count()
}

/// `x` is removable from `y` for `b`: `N(x)` is minimal for `y` in all blocks but at most one.
pub fn is_removable(g: &Graph, x: usize, y: &VertexSet, b: &Partition) -> bool {
    debug_assert!(y.contains(x));
    nonminimal_blocks(g, x, y, b) <= 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionFailure {
    NotMaximalClique,
    /// The blocks do not partition `V ∖ X`.
    NotAPartition(String),
    /// Property 1: this component of `G − X` meets several blocks.
    ComponentSplit(VertexSet),
    /// Property 2: `G[X ∪ block]` has no clique path ending in `X`.
    NotXInterval(VertexSet),
    /// Property 3: no vertex of `remaining` is removable.
    NoRemovableVertex(VertexSet),
}

impl PartitionFailure {
    pub fn describe(&self, g: &Graph) -> String {
        match self {
            Self::NotMaximalClique => "X is not a maximal clique".into(),
            Self::NotAPartition(why) => format!("blocks do not partition V∖X: {why}"),
            Self::ComponentSplit(c) => format!("property 1: component {:?} is split across blocks", g.set_names(c)),
            Self::NotXInterval(b) => format!("property 2: G[X ∪ {:?}] is not X-interval", g.set_names(b)),
            Self::NoRemovableVertex(r) => format!("property 3: no removable vertex among {:?}", g.set_names(r)),
        }
    }
}

/// Greedy elimination: repeatedly drop the smallest removable vertex.
/// Removability only gets easier as `Y` shrinks, so this finds a good
/// permutation whenever one exists.
fn greedy_permutation(g: &Graph, x: &VertexSet, b: &Partition) -> std::result::Result<Vec<usize>, VertexSet> {
    let mut y = x.clone();
    let mut order = Vec::with_capacity(x.len());
    while !y.is_empty() {
        let next = y.iter().find(|&v| is_removable(g, v, &y, b)).ok_or_else(|| y.clone())?;
        order.push(next);
        y.remove(next);
    }
    Ok(order)
}

/// Checks a permutation of `x` against Property 3 directly.
pub fn is_good_permutation(g: &Graph, x: &VertexSet, b: &Partition, permutation: &[usize]) -> bool {
    if permutation.len() != x.len() || VertexSet::from_indices(g.order(), permutation.iter().copied()) != *x {
        return false;
    }
    let mut y = x.clone();
    for &v in permutation {
        if !is_removable(g, v, &y, b) {
            return false;
        }
        y.remove(v);
    }
    true
}

pub fn validate_good_partition(g: &Graph, x: &VertexSet, b: &Partition) -> std::result::Result<GoodPartition, PartitionFailure> {
    if x.capacity() != g.order() || !g.is_maximal_clique(x) {
        return Err(PartitionFailure::NotMaximalClique);
    }
    let rest = g.all().difference(x);
    if b.ground() != &rest {
        return Err(PartitionFailure::NotAPartition("ground set differs from V∖X".into()));
    }
    for c in g.components_without(x).blocks() {
        if !b.blocks().iter().any(|block| c.is_subset(block)) {
            return Err(PartitionFailure::ComponentSplit(c.clone()));
        }
    }
    for block in b.blocks() {
        if !matches!(is_x_interval_on(g, x, block), Ok(Some(_))) {
            return Err(PartitionFailure::NotXInterval(block.clone()));
        }
    }
    let permutation = greedy_permutation(g, x, b).map_err(PartitionFailure::NoRemovableVertex)?;
    Ok(GoodPartition { x: x.clone(), blocks: b.clone(), permutation })
}

/// Why the recognizer gave up on one candidate central clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliqueFailure {
    /// `G[X ∪ C]` is not X-interval for this component.
    ComponentNotXInterval(VertexSet),
    /// No vertex of `remaining` qualifies; `blocks` is the partition reached.
    Stuck { remaining: VertexSet, blocks: Partition },
}

#[derive(Clone, Debug)]
pub enum StarOutcome {
    NotChordal(Vec<usize>),
    Found(GoodPartition),
    /// Every maximal clique failed; one entry per clique in the order tried.
    NoGoodPartition(Vec<(VertexSet, CliqueFailure)>),
}

/// X-interval tests of `G[X ∪ S]` for unions `S` of components of `G − X`,
/// memoised by `S`.
///
/// In a clique path of `G[X ∪ S]` ending in `X` the cliques of each component
/// form one run and every `x ∈ X` occupies a suffix, so for two components
/// `C` before `D` every `x` touching `C` is complete to `D`. Sets containing a
/// pair comparable in neither direction are rejected without the gadget test.
struct XIntervalCache<'a> {
    g: &'a Graph,
    x: &'a VertexSet,
    known: HashMap<VertexSet, bool>,
    component_of: Vec<usize>,
    /// Per component: members of `X` with a neighbour in it, and members
    /// adjacent to all of it.
    traces: Vec<(VertexSet, VertexSet)>,
}

impl<'a> XIntervalCache<'a> {
    fn new(g: &'a Graph, x: &'a VertexSet, components: &Partition) -> Self {
        let mut component_of = vec![usize::MAX; g.order()];
        let mut traces = Vec::with_capacity(components.len());
        for (i, c) in components.blocks().iter().enumerate() {
            let mut touch = g.empty_set();
            let mut full = x.clone();
            for v in c.iter() {
                component_of[v] = i;
                let nx = g.neighbors(v).intersection(x);
                touch.union_with(&nx);
                full.intersect_with(&nx);
            }
            traces.push((touch, full));
        }
        Self { g, x, known: HashMap::new(), component_of, traces }
    }

    fn comparable(&self, s: &VertexSet) -> bool {
        let mut ids: Vec<usize> = s.iter().map(|v| self.component_of[v]).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.iter().enumerate().all(|(k, &i)| {
            ids[k + 1..].iter().all(|&j| {
                let ((ti, fi), (tj, fj)) = (&self.traces[i], &self.traces[j]);
                ti.is_subset(fj) || tj.is_subset(fi)
            })
        })
    }

    fn test(&mut self, s: &VertexSet) -> bool {
        if let Some(&hit) = self.known.get(s) {
            return hit;
        }
        let ok = self.comparable(s) && matches!(is_x_interval_on(self.g, self.x, s), Ok(Some(_)));
        self.known.insert(s.clone(), ok);
        ok
    }
}

/// The body of the recognizer's outer loop for one candidate `X`.
pub fn try_central_clique(g: &Graph, x: &VertexSet) -> std::result::Result<GoodPartition, CliqueFailure> {
    let mut a = g.components_without(x);
    let mut cache = XIntervalCache::new(g, x, &a);
    for c in a.blocks() {
        if !cache.test(c) {
            return Err(CliqueFailure::ComponentNotXInterval(c.clone()));
        }
    }
    let mut w = x.clone();
    let mut permutation = Vec::with_capacity(x.len());
    while !w.is_empty() {
        let mut chosen = None;
        for cand in w.iter() {
            let nm = notmin(g, cand, &w, &a).expect("candidate is in W");
            // Every block of `a` is already X-interval, so a single block needs no test.
            let spans = a.blocks().iter().filter(|b| b.is_subset(&nm)).take(2).count();
            if spans <= 1 || cache.test(&nm) {
                chosen = Some((cand, nm));
                break;
            }
        }
        let Some((wr, nm)) = chosen else {
            return Err(CliqueFailure::Stuck { remaining: w, blocks: a });
        };
        a = a.merge(&nm).expect("notmin is a union of blocks");
        permutation.push(wr);
        w.remove(wr);
    }
    Ok(GoodPartition { x: x.clone(), blocks: a, permutation })
}

/// Candidate central cliques in the order they are tried: larger first,
/// then lexicographically.
fn candidate_order(mut cliques: Vec<VertexSet>) -> Vec<VertexSet> {
    cliques.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.iter().cmp(b.iter())));
    cliques
}

/// Star NeS recognition with the per-clique failure log. Cliques are processed in
/// parallel; the reported success is the first one in candidate order.
pub fn find_good_partition_detailed(g: &Graph) -> StarOutcome {
    if g.order() == 0 {
        let empty = g.empty_set();
        return StarOutcome::Found(GoodPartition { x: empty.clone(), blocks: Partition::singletons(empty), permutation: vec![] });
    }
    let peo = match chordality(g) {
        Chordality::Chordal(peo) => peo,
        Chordality::NotChordal(cycle) => return StarOutcome::NotChordal(cycle),
    };
    let cliques = candidate_order(maximal_cliques_from(g, &peo));
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<std::result::Result<GoodPartition, CliqueFailure>>> = cliques
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            if best.load(Ordering::Relaxed) < i {
                return None;
            }
            let r = try_central_clique(g, x);
            if r.is_ok() {
                best.fetch_min(i, Ordering::Relaxed);
            }
            Some(r)
        })
        .collect();
    let mut failures = Vec::with_capacity(cliques.len());
    for (x, r) in cliques.into_iter().zip(results) {
        match r {
            Some(Ok(gp)) => return StarOutcome::Found(gp),
            Some(Err(f)) => failures.push((x, f)),
            None => {}
        }
    }
    StarOutcome::NoGoodPartition(failures)
}

pub fn find_good_partition(g: &Graph) -> Option<GoodPartition> {
    match find_good_partition_detailed(g) {
        StarOutcome::Found(gp) => Some(gp),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockInterval {
    pub ray: usize,
    pub start: Rational,
    pub end: Rational,
}

/// A NeS model on a star: rays `L_0 … L_{β−1}` leave a common center.
/// Central vertices are given by how far their subtree reaches along each ray;
/// every other vertex by an interval `[start, end]` of center distances on one
/// ray.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StarNesModel {
    pub ray_lengths: Vec<Rational>,
    pub central: BTreeMap<String, Vec<Rational>>,
    pub blocks: BTreeMap<String, BlockInterval>,
}

impl StarNesModel {
    pub fn ray_count(&self) -> usize {
        self.ray_lengths.len()
    }

    pub fn check_shape(&self) -> Result<()> {
        if self.ray_lengths.is_empty() {
            return Err(Error::InvalidModel("a star needs at least one ray".into()));
        }
        if self.ray_lengths.iter().any(|l| !l.is_positive()) {
            return Err(Error::InvalidModel("ray lengths must be positive".into()));
        }
        for (v, reach) in &self.central {
            if reach.len() != self.ray_count() {
                return Err(Error::InvalidModel(format!("central `{v}` lists {} rays, expected {}", reach.len(), self.ray_count())));
            }
            if reach.iter().zip(&self.ray_lengths).any(|(r, len)| r.is_negative() || r > len) {
                return Err(Error::InvalidModel(format!("central `{v}` reaches outside its rays")));
            }
            if central_shape(reach).is_none() {
                return Err(Error::InvalidModel(format!("central `{v}` extends unevenly on more than one ray")));
            }
        }
        for (v, b) in &self.blocks {
            if self.central.contains_key(v) {
                return Err(Error::InvalidModel(format!("`{v}` is both central and on a ray")));
            }
            let len = self.ray_lengths.get(b.ray).ok_or_else(|| Error::InvalidModel(format!("`{v}` on missing ray {}", b.ray)))?;
            if !b.start.is_positive() || b.start > b.end || &b.end > len {
                return Err(Error::InvalidModel(format!("`{v}` needs 0 < start ≤ end ≤ ray length")));
            }
        }
        Ok(())
    }

    pub fn adjacent(&self, u: &str, v: &str) -> Option<bool> {
        let central_block = |reach: &Vec<Rational>, b: &BlockInterval| reach[b.ray] >= b.start;
        Some(match (self.central.get(u), self.central.get(v)) {
            (Some(_), Some(_)) => true,
            (Some(reach), None) => central_block(reach, self.blocks.get(v)?),
            (None, Some(reach)) => central_block(reach, self.blocks.get(u)?),
            (None, None) => {
                let (a, b) = (self.blocks.get(u)?, self.blocks.get(v)?);
                a.ray == b.ray && a.start <= b.end && b.start <= a.end
            }
        })
    }

    /// The represented graph, central vertices first, each group in name order.
    pub fn induced_graph(&self) -> Result<Graph> {
        self.check_shape()?;
        let names: Vec<String> = self.central.keys().chain(self.blocks.keys()).cloned().collect();
        let mut edges = Vec::new();
        for a in 0..names.len() {
            for b in a + 1..names.len() {
                if self.adjacent(&names[a], &names[b]).expect("both present") {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_index_edges(names, &edges)
    }

    /// The general NeS form: a star tree with the center as node 0 and the tip
    /// of ray `j` as node `j + 1`.
    pub fn to_nes_model(&self) -> Result<NesModel> {
        self.check_shape()?;
        let tree = EmbeddedTree {
            nodes: self.ray_count() + 1,
            edges: self.ray_lengths.iter().enumerate().map(|(j, len)| (0, j + 1, len.clone())).collect(),
        };
        let point_on_ray = |j: usize, dist: Rational| tree.point_on_edge(j, dist).expect("distance within the ray");
        let mut balls = BTreeMap::new();
        for (v, reach) in &self.central {
            let (common, long) = central_shape(reach).expect("shape checked");
            let ball = match long {
                None => Ball { center: TreePoint::Node(0), radius: common },
                Some(f) => Ball { center: point_on_ray(f, (&reach[f] - &common) / int(2)), radius: (&reach[f] + &common) / int(2) },
            };
            balls.insert(v.clone(), ball);
        }
        for (v, b) in &self.blocks {
            let center = point_on_ray(b.ray, (&b.start + &b.end) / int(2));
            balls.insert(v.clone(), Ball { center, radius: (&b.end - &b.start) / int(2) });
        }
        Ok(NesModel { tree, balls })
    }
}

/// `(ℓ_x, Some(f))` when ray `f` alone reaches further than the common value
/// `ℓ_x` on every other ray, `(ℓ_x, None)` when all rays agree; `None` when the
/// reaches do not have this shape.
fn central_shape(reach: &[Rational]) -> Option<(Rational, Option<usize>)> {
    let min = reach.iter().min()?.clone();
    let longer: Vec<usize> = (0..reach.len()).filter(|&j| reach[j] > min).collect();
    match longer.as_slice() {
        [] => Some((min, None)),
        [f] if reach.len() >= 2 => Some((min, Some(*f))),
        _ => None,
    }
}

pub fn verify_star_model(g: &Graph, m: &StarNesModel) -> Result<Verification> {
    m.check_shape()?;
    check_cover(g, m.central.keys().chain(m.blocks.keys()))?;
    Ok(compare_adjacency(g, |u, v| m.adjacent(g.name(u), g.name(v)).expect("cover checked")))
}

/// Builds a star NeS model from a good partition: `β = |𝓑|` rays (one ray
/// when there are no blocks) of length `2t + 1`, central reaches per the
/// elimination order, and block vertices placed between points read off the
/// clique path of each `G[X ∪ B_j]`.
pub fn synthesize_star_model(g: &Graph, gp: &GoodPartition) -> Result<StarNesModel> {
    let checked = validate_good_partition(g, &gp.x, &gp.blocks).map_err(|f| Error::Precondition(f.describe(g)))?;
    let permutation = if is_good_permutation(g, &gp.x, &gp.blocks, &gp.permutation) { gp.permutation.clone() } else { checked.permutation };
    let t = permutation.len();
    let blocks = gp.blocks.blocks();
    let beta = blocks.len().max(1);
    let ray_len = int(2 * t as i64 + 1);
    let nb = |x: usize, j: usize| -> VertexSet {
        match blocks.get(j) {
            Some(b) => g.neighbors(x).intersection(b),
            None => g.empty_set(),
        }
    };

    // reach[i][j] = ℓ(x_{i+1}, L_j)
    let mut reach: Vec<Vec<Rational>> = (0..t).map(|i| vec![int(i as i64 + 1); beta]).collect();
    for i in (0..t).rev() {
        let xi = permutation[i];
        let later = VertexSet::from_indices(g.order(), permutation[i..].iter().copied());
        let f = (0..blocks.len())
            .find(|&j| {
                let single = Partition::from_canonical_blocks(blocks[j].clone(), vec![blocks[j].clone()]);
                nonminimal_blocks(g, xi, &later, &single) > 0
            })
            .unwrap_or(0);
        if i + 1 == t {
            continue;
        }
        let own = nb(xi, f);
        let rest = &permutation[i + 1..];
        let minimal = rest.iter().all(|&y| own.is_subset(&nb(y, f)));
        let value = if minimal {
            int(i as i64 + 1)
        } else if rest.iter().all(|&y| nb(y, f).is_subset(&own)) {
            rest.iter().map(|&y| reach[index_in(&permutation, y)][f].clone()).max().expect("rest is non-empty") + int(1)
        } else {
            // x_min: largest neighbourhood below own (ties → larger reach);
            // x_max: smallest neighbourhood above own (ties → smaller reach).
            let level = |y: usize| (nb(y, f).len(), reach[index_in(&permutation, y)][f].clone());
            let below = rest.iter().copied().filter(|&y| nb(y, f).is_subset(&own));
            let above = rest.iter().copied().filter(|&y| own.is_subset(&nb(y, f)));
            let x_min = below.max_by(|&a, &b| level(a).cmp(&level(b))).expect("some neighbourhood lies below");
            let x_max = above
                .min_by(|&a, &b| {
                    let (la, ra) = level(a);
                    let (lb, rb) = level(b);
                    la.cmp(&lb).then(ra.cmp(&rb))
                })
                .expect("some neighbourhood lies above");
            (&reach[index_in(&permutation, x_min)][f] + &reach[index_in(&permutation, x_max)][f]) / int(2)
        };
        reach[i][f] = value;
    }

    let mut model = StarNesModel { ray_lengths: vec![ray_len.clone(); beta], ..Default::default() };
    for (i, &x) in permutation.iter().enumerate() {
        model.central.insert(g.name(x).to_owned(), reach[i].clone());
    }
    let reach_of = |x: usize, j: usize| reach[index_in(&permutation, x)][j].clone();

    for (j, block) in blocks.iter().enumerate() {
        let path = is_x_interval_on(g, &gp.x, block)?.ok_or_else(|| Error::Precondition("block is not X-interval".into()))?;
        // (X, K_1, …, K_k), moving away from the center.
        let ks: Vec<VertexSet> = path.cliques[..path.len() - 1].iter().rev().cloned().collect();
        let mut points: Vec<Rational> = Vec::with_capacity(ks.len());
        let mut start = 0;
        while start < ks.len() {
            let core = ks[start].intersection(&gp.x);
            let mut end = start;
            while end + 1 < ks.len() && ks[end + 1].intersection(&gp.x) == core {
                end += 1;
            }
            let lo = gp.x.difference(&core).iter().map(|x| reach_of(x, j)).max().unwrap_or_else(Rational::zero);
            let hi = core.iter().map(|x| reach_of(x, j)).min().unwrap_or_else(|| ray_len.clone());
            if lo >= hi {
                return Err(Error::Precondition("central reaches are not ordered along the clique path".into()));
            }
            let count = (end - start + 1) as i64;
            for r in 1..=count {
                points.push(&lo + (&hi - &lo) * Rational::new(r.into(), count.into()));
            }
            start = end + 1;
        }
        for b in block.iter() {
            let s = ks.iter().position(|k| k.contains(b)).expect("vertex lies in some clique");
            let e = ks.iter().rposition(|k| k.contains(b)).expect("vertex lies in some clique");
            model.blocks.insert(g.name(b).to_owned(), BlockInterval { ray: j, start: points[s].clone(), end: points[e].clone() });
        }
    }
    Ok(model)
}

fn index_in(permutation: &[usize], x: usize) -> usize {
    permutation.iter().position(|&y| y == x).expect("x is in the permutation")
}

/// Checks both conditions of the length construction on a synthesized model:
/// `ℓ(x_i, L_j) ≥ i`, and `N(x) ∩ B_j ⊂ N(y)` strictly implies
/// `ℓ(x, L_j) < ℓ(y, L_j)`. Ray `j` is block `j` of the partition.
pub fn check_reach_conditions(g: &Graph, gp: &GoodPartition, m: &StarNesModel) -> std::result::Result<(), String> {
    let blocks = gp.blocks.blocks();
    for (i, &x) in gp.permutation.iter().enumerate() {
        let reach = m.central.get(g.name(x)).ok_or_else(|| format!("no reach for `{}`", g.name(x)))?;
        if let Some(j) = (0..reach.len()).find(|&j| reach[j] < int(i as i64 + 1)) {
            return Err(format!("ℓ({}, L_{j}) < {}", g.name(x), i + 1));
        }
    }
    for (j, block) in blocks.iter().enumerate() {
        for x in gp.x.iter() {
            for y in gp.x.iter() {
                let (nx, ny) = (g.neighbors(x).intersection(block), g.neighbors(y).intersection(block));
                if nx.is_subset(&ny) && nx != ny && m.central[g.name(x)][j] >= m.central[g.name(y)][j] {
                    return Err(format!("N({}) ⊂ N({}) on block {j} but reaches are not increasing", g.name(x), g.name(y)));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn three_sun() -> Graph {
        Graph::new(
            ["x", "y", "z", "a", "b", "c"],
            [("x", "y"), ("y", "z"), ("x", "z"), ("a", "x"), ("a", "y"), ("b", "x"), ("b", "z"), ("c", "y"), ("c", "z")],
        )
        .unwrap()
    }

    /// X = {x,y,z}; a–x; b–x,y; c–y; d–x,y.
    fn g_star1() -> Graph {
        Graph::new(
            ["x", "y", "z", "a", "b", "c", "d"],
            [("x", "y"), ("y", "z"), ("x", "z"), ("a", "x"), ("b", "x"), ("b", "y"), ("c", "y"), ("d", "x"), ("d", "y")],
        )
        .unwrap()
    }

    /// X = {x,y,z}; a, c pendant on x; p, q pendant on y.
    fn g_merge() -> Graph {
        Graph::new(
            ["x", "y", "z", "a", "c", "p", "q"],
            [("x", "y"), ("y", "z"), ("x", "z"), ("a", "x"), ("c", "x"), ("p", "y"), ("q", "y")],
        )
        .unwrap()
    }

    fn singletons(g: &Graph, x: &VertexSet) -> Partition {
        Partition::singletons(g.all().difference(x))
    }

    #[test]
    fn notmin_examples() {
        let g = g_star1();
        let x = g.vertex_set(["x", "y", "z"]).unwrap();
        let b = singletons(&g, &x);
        let xi = g.index_of("x").unwrap();
        assert!(notmin(&g, xi, &g.vertex_set(["x"]).unwrap(), &b).unwrap().is_empty());
        let w = g.vertex_set(["x", "y"]).unwrap();
        assert_eq!(notmin(&g, xi, &w, &b).unwrap(), g.vertex_set(["a"]).unwrap());
        assert!(notmin(&g, xi, &g.vertex_set(["y"]).unwrap(), &b).is_err());

        let g = g_merge();
        let w = g.vertex_set(["x", "y"]).unwrap();
        let b = g.components_without(&g.vertex_set(["x", "y", "z"]).unwrap());
        assert_eq!(notmin(&g, g.index_of("x").unwrap(), &w, &b).unwrap(), g.vertex_set(["a", "c"]).unwrap());
    }

    #[test]
    fn removable_examples() {
        let sun = three_sun();
        let x = sun.vertex_set(["x", "y", "z"]).unwrap();
        assert!(!is_removable(&sun, sun.index_of("x").unwrap(), &x, &singletons(&sun, &x)));
        let one = Partition::new(sun.all().difference(&x), vec![sun.all().difference(&x)]).unwrap();
        assert!(is_removable(&sun, sun.index_of("x").unwrap(), &x, &one));

        let g = g_star1();
        let x = g.vertex_set(["x", "y", "z"]).unwrap();
        assert!(is_removable(&g, g.index_of("z").unwrap(), &x, &singletons(&g, &x)));
    }

    #[test]
    fn validate_examples() {
        let k3 = Graph::with_order(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let gp = validate_good_partition(&k3, &k3.all(), &Partition::singletons(k3.empty_set())).unwrap();
        assert_eq!(gp.permutation.len(), 3);

        let g = g_star1();
        let x = g.vertex_set(["x", "y", "z"]).unwrap();
        let gp = validate_good_partition(&g, &x, &singletons(&g, &x)).unwrap();
        let names: Vec<_> = gp.permutation.iter().map(|&v| g.name(v)).collect();
        assert_eq!(names, ["z", "x", "y"]);

        let sun = three_sun();
        let x = sun.vertex_set(["x", "y", "z"]).unwrap();
        assert!(matches!(validate_good_partition(&sun, &x, &singletons(&sun, &x)), Err(PartitionFailure::NoRemovableVertex(_))));
        let ab = sun.vertex_set(["a", "b"]).unwrap();
        let merged = singletons(&sun, &x).merge(&ab).unwrap();
        assert!(matches!(validate_good_partition(&sun, &x, &merged), Err(PartitionFailure::NotXInterval(_))));
        let xy = sun.vertex_set(["x", "y"]).unwrap();
        assert_eq!(validate_good_partition(&sun, &xy, &singletons(&sun, &xy)), Err(PartitionFailure::NotMaximalClique));
    }

    #[test]
    fn validate_detects_split_component() {
        let p4 = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let x = p4.vertex_set(["a", "b"]).unwrap();
        assert!(matches!(validate_good_partition(&p4, &x, &singletons(&p4, &x)), Err(PartitionFailure::ComponentSplit(_))));
    }

    #[test]
    fn algorithm_examples() {
        let c4 = Graph::with_order(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(matches!(find_good_partition_detailed(&c4), StarOutcome::NotChordal(_)));
        match find_good_partition_detailed(&three_sun()) {
            StarOutcome::NoGoodPartition(fails) => {
                assert_eq!(fails.len(), 4);
                let central = three_sun().vertex_set(["x", "y", "z"]).unwrap();
                for (x, f) in fails {
                    if x == central {
                        assert!(matches!(f, CliqueFailure::Stuck { .. }));
                    } else {
                        assert!(matches!(f, CliqueFailure::ComponentNotXInterval(_)));
                    }
                }
            }
            other => panic!("3-sun accepted: {other:?}"),
        }
        let g = g_merge();
        let gp = find_good_partition(&g).unwrap();
        assert!(validate_good_partition(&g, &gp.x, &gp.blocks).is_ok());
        let ac = g.vertex_set(["a", "c"]).unwrap();
        let pq = g.vertex_set(["p", "q"]).unwrap();
        assert!(gp.blocks.blocks().contains(&ac) || gp.blocks.blocks().contains(&pq));
    }

    fn round_trip(g: &Graph) -> StarNesModel {
        let gp = find_good_partition(g).expect("accepted");
        let m = synthesize_star_model(g, &gp).unwrap();
        assert!(verify_star_model(g, &m).unwrap().is_valid(), "{m:?}");
        check_reach_conditions(g, &gp, &m).unwrap();
        let nes = m.to_nes_model().unwrap();
        assert!(crate::nes::verify_nes_model(g, &nes).unwrap().is_valid());
        m
    }

    #[test]
    fn synthesis_examples() {
        let k3 = Graph::with_order(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = round_trip(&k3);
        assert_eq!(m.ray_count(), 1);
        let mut reaches: Vec<_> = m.central.values().map(|r| r[0].clone()).collect();
        reaches.sort();
        assert_eq!(reaches, vec![int(1), int(2), int(3)]);

        let m = round_trip(&g_star1());
        assert_eq!(m.ray_count(), 2);
        assert!(m.central["z"].iter().all(|r| *r == int(2)));
        round_trip(&g_merge());
        let path = Graph::with_order(9, &(0..8).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        round_trip(&path);
    }

    #[test]
    fn star_verifier_semantics() {
        let g = Graph::new(["x", "b1", "b2"], [("x", "b1")]).unwrap();
        let mut m = StarNesModel { ray_lengths: vec![int(3), int(3)], ..Default::default() };
        m.central.insert("x".into(), vec![int(1), int(1)]);
        m.blocks.insert("b1".into(), BlockInterval { ray: 0, start: int(1), end: int(2) });
        m.blocks.insert("b2".into(), BlockInterval { ray: 1, start: int(2), end: int(3) });
        assert!(verify_star_model(&g, &m).unwrap().is_valid());
        m.blocks.get_mut("b2").unwrap().start = Rational::zero();
        assert!(verify_star_model(&g, &m).is_err());
        m.blocks.get_mut("b2").unwrap().start = rat(1, 2);
        m.central.insert("x".into(), vec![int(2), int(3)]);
        assert!(verify_star_model(&g, &m).is_ok());
        m.central.insert("x".into(), vec![int(2), int(3), int(1)]);
        assert!(verify_star_model(&g, &m).is_err());
    }

    #[test]
    fn uneven_on_two_rays_is_malformed() {
        let mut m = StarNesModel { ray_lengths: vec![int(5); 3], ..Default::default() };
        m.central.insert("x".into(), vec![int(1), int(2), int(3)]);
        assert!(m.check_shape().is_err());
    }
}
