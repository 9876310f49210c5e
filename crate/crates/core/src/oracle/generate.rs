//! Seeded random instances. Every generator draws a model with small-denominator
//! rational parameters and returns it with the graph it induces, so the pair
//! verifies by construction.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::linear::{BlueRedModel, Color, Leg, LinearLeafRoot, RatInterval};
use crate::nes::{Ball, EmbeddedTree, NesModel, TreePoint};
use crate::rational::{int, rat, Rational};
use crate::star::{BlockInterval, StarNesModel};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn graph_of(names: Vec<String>, adjacent: impl Fn(usize, usize) -> bool) -> Graph {
    let n = names.len();
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adjacent(u, v)).collect();
    Graph::from_index_edges(names, &edges).expect("generated names are distinct")
}

/// Blue-red intervals with quarter-integer endpoints and lengths up to 2
/// (so some models need normalizing); red intervals are shorter to make
/// containments likely.
pub fn gen_bluered(seed: u64, n: usize) -> (Graph, BlueRedModel) {
    let mut r = rng(seed);
    let span = 4 * (n as i64 / 2 + 1);
    let mut model = BlueRedModel::default();
    for v in names(n) {
        let red = r.gen_bool(0.3);
        let lo = rat(r.gen_range(0..=span), 4);
        let len = if red { rat(r.gen_range(0..=4), 4) } else { rat(r.gen_range(1..=8), 4) };
        let color = if red { Color::Red } else { Color::Blue };
        model.insert(v, color, RatInterval { hi: &lo + len, lo });
    }
    (model.induced_graph(), model)
}

/// A caterpillar with legs in `[0, 3/4]` and spine weights in `[0, 1/2]`
/// (eighths), vertices shuffled along the spine. Draws are repeated until the
/// graph has no isolated vertex; a complete graph is the fallback.
pub fn gen_linear_root(seed: u64, n: usize) -> (Graph, LinearLeafRoot) {
    let mut r = rng(seed);
    let mut order = names(n);
    for _ in 0..100 {
        order.shuffle(&mut r);
        let root = LinearLeafRoot {
            legs: order.iter().map(|v| Some(Leg { vertex: v.clone(), weight: rat(r.gen_range(0..=6), 8) })).collect(),
            spine_weights: (1..n).map(|_| rat(r.gen_range(0..=4), 8)).collect(),
        };
        let g = root_graph(n, &root);
        if n < 2 || (0..n).all(|v| g.degree(v) > 0) {
            return (g, root);
        }
    }
    let root = LinearLeafRoot {
        legs: order.iter().map(|v| Some(Leg { vertex: v.clone(), weight: Rational::from_integer(0.into()) })).collect(),
        spine_weights: vec![Rational::from_integer(0.into()); n.saturating_sub(1)],
    };
    (root_graph(n, &root), root)
}

fn root_graph(n: usize, root: &LinearLeafRoot) -> Graph {
    let pos = root.positions();
    let index = root.spine_index();
    let spine: Vec<usize> = names(n).iter().map(|v| index[v.as_str()]).collect();
    graph_of(names(n), |u, v| root.leg_distance(&pos, spine[u], spine[v]).unwrap() <= int(1))
}

/// A star model with `β` rays of length `2n + 1`, about a third of the
/// vertices central (at least one), half-integer reaches and block intervals.
pub fn gen_star_model(seed: u64, n: usize, beta: usize) -> (Graph, StarNesModel) {
    let mut r = rng(seed);
    let beta = beta.max(1);
    let len = 2 * n as i64 + 1;
    let mut model = StarNesModel { ray_lengths: vec![int(len); beta], ..Default::default() };
    let vertices = names(n);
    let t = if n == 0 { 0 } else { r.gen_range(1..=(n / 3).max(1)) };
    for v in &vertices[..t] {
        let common = r.gen_range(0..=2 * len);
        let mut reach = vec![rat(common, 2); beta];
        if beta > 1 && common < 2 * len && r.gen_bool(0.5) {
            let f = r.gen_range(0..beta);
            reach[f] = rat(r.gen_range(common + 1..=2 * len), 2);
        }
        model.central.insert(v.clone(), reach);
    }
    for v in &vertices[t..] {
        let start = r.gen_range(1..=2 * len);
        let end = (start + r.gen_range(0..=8)).min(2 * len);
        model.blocks.insert(v.clone(), BlockInterval { ray: r.gen_range(0..beta), start: rat(start, 2), end: rat(end, 2) });
    }
    let g = graph_of(vertices.clone(), |u, v| model.adjacent(&vertices[u], &vertices[v]).unwrap());
    (g, model)
}

/// Balls in a random tree (random attachment, half-integer edge lengths),
/// centers at nodes or quarter points of edges, quarter-integer radii.
pub fn gen_nes_model(seed: u64, n: usize) -> (Graph, NesModel) {
    let mut r = rng(seed);
    let nodes = r.gen_range(1..=(n / 2).max(1)) + 1;
    let edges: Vec<(usize, usize, Rational)> = (1..nodes).map(|b| (r.gen_range(0..b), b, rat(r.gen_range(1..=8), 2))).collect();
    let tree = EmbeddedTree { nodes, edges };
    let mut balls = BTreeMap::new();
    for v in names(n) {
        let center = if r.gen_bool(0.4) {
            TreePoint::Node(r.gen_range(0..nodes))
        } else {
            let e = r.gen_range(0..tree.edges.len());
            let quarters = tree.edges[e].2.clone() * int(4);
            let max = quarters.to_integer().try_into().unwrap_or(4i64);
            tree.point_on_edge(e, rat(r.gen_range(0..=max), 4)).expect("within the edge")
        };
        balls.insert(v, Ball { center, radius: rat(r.gen_range(0..=12), 4) });
    }
    let model = NesModel { tree, balls };
    (model.induced_graph(), model)
}

/// A random chordal graph built by repeatedly adding a vertex adjacent to a
/// random clique (occasionally to nothing, which starts a new component).
pub fn random_chordal(seed: u64, n: usize) -> Graph {
    let mut r = rng(seed);
    let keep = r.gen_range(0.3..0.9);
    let mut edges = Vec::new();
    let mut adj: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut clique = Vec::new();
        if v > 0 && !r.gen_bool(0.08) {
            let seed_vertex = r.gen_range(0..v);
            clique.push(seed_vertex);
            let mut candidates = adj[seed_vertex].clone();
            candidates.shuffle(&mut r);
            for w in candidates {
                if clique.iter().all(|c| adj[w].contains(c)) && r.gen_bool(keep) {
                    clique.push(w);
                }
            }
        }
        adj.push(clique.clone());
        for &c in &clique {
            adj[c].push(v);
            edges.push((c, v));
        }
    }
    Graph::with_order(n, &edges).expect("fresh vertex each step")
}

/// Which vertex-addition rule a closure case exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureRule {
    Universal,
    Pendant,
    MaxClique,
    MinSeparator,
}

/// A verified model of `target − u` and the graph `target` it should grow into.
#[derive(Clone, Debug)]
pub struct ClosureCase {
    pub model: NesModel,
    pub target: Graph,
    pub u: String,
    /// The neighbour of `u` for the pendant rule.
    pub x: Option<String>,
}

impl ClosureCase {
    pub fn apply(&self, rule: ClosureRule) -> crate::Result<NesModel> {
        use crate::nes::{add_min_separator, add_pendant, add_simplicial_max_clique, add_universal};
        match rule {
            ClosureRule::Universal => add_universal(&self.model, &self.target, &self.u),
            ClosureRule::Pendant => add_pendant(&self.model, &self.target, &self.u, self.x.as_deref().unwrap_or_default()),
            ClosureRule::MaxClique => add_simplicial_max_clique(&self.model, &self.target, &self.u),
            ClosureRule::MinSeparator => add_min_separator(&self.model, &self.target, &self.u),
        }
    }
}

/// A random case to which `rule` applies, or `None` when the drawn model
/// offers no suitable neighbourhood (e.g. no minimal separator).
pub fn gen_closure_case(seed: u64, n: usize, rule: ClosureRule) -> Option<ClosureCase> {
    use crate::chordal::maximal_cliques;
    use crate::nes::is_minimal_separator;
    let (g, model) = gen_nes_model(seed, n);
    let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let u = "u";
    let (nbrs, x) = match rule {
        ClosureRule::Universal => (g.all(), None),
        ClosureRule::Pendant => {
            if g.order() == 0 {
                return None;
            }
            let x = r.gen_range(0..g.order());
            (crate::graph::VertexSet::from_indices(g.order(), [x]), Some(g.name(x).to_owned()))
        }
        ClosureRule::MaxClique => {
            let cliques = maximal_cliques(&g).ok()?;
            (cliques.choose(&mut r)?.clone(), None)
        }
        ClosureRule::MinSeparator => {
            let cliques = maximal_cliques(&g).ok()?;
            let mut candidates: Vec<_> = Vec::new();
            for i in 0..cliques.len() {
                for j in i + 1..cliques.len() {
                    let s = cliques[i].intersection(&cliques[j]);
                    if is_minimal_separator(&g, &s) && !candidates.contains(&s) {
                        candidates.push(s);
                    }
                }
            }
            (candidates.choose(&mut r)?.clone(), None)
        }
    };
    let target = g.with_vertex(u, &nbrs).ok()?;
    Some(ClosureCase { model, target, u: u.to_owned(), x })
}

/// Models of the blocks `G[C_i ∪ {u}]` around a shared vertex `u`, and `G`.
#[derive(Clone, Debug)]
pub struct CutVertexCase {
    pub graph: Graph,
    pub models: Vec<NesModel>,
    pub u: String,
}

/// Glues 1–3 random NeS models at one vertex each. Every model is cut down to
/// the component of its chosen vertex and then split along that vertex, so
/// the pieces are exactly the blocks of the glued graph.
pub fn gen_cut_vertex_case(seed: u64, n: usize) -> CutVertexCase {
    let mut r = rng(seed);
    let parts = r.gen_range(1..=3);
    let mut models = Vec::new();
    let mut names_all = vec!["u".to_owned()];
    let mut edges: Vec<(String, String)> = Vec::new();
    for p in 0..parts {
        let (g, m) = gen_nes_model(r.gen(), n.max(2));
        let c = r.gen_range(0..g.order());
        let comp = g.components_within(&g.all()).into_iter().find(|k| k.contains(c)).expect("c is somewhere");
        let mut rest = comp.clone();
        rest.remove(c);
        let rename = |v: usize| if v == c { "u".to_owned() } else { format!("p{p}_{}", g.name(v)) };
        for (a, b) in g.edges() {
            if comp.contains(a) && comp.contains(b) {
                edges.push((rename(a), rename(b)));
            }
        }
        for piece in g.components_within(&rest) {
            let balls = piece
                .iter()
                .chain([c])
                .map(|v| (rename(v), m.balls[g.name(v)].clone()))
                .collect();
            names_all.extend(piece.iter().map(rename));
            models.push(NesModel { tree: m.tree.clone(), balls });
        }
    }
    let graph = Graph::new(names_all, edges).expect("renamed vertices are distinct");
    CutVertexCase { graph, models, u: "u".to_owned() }
}

/// Deletes vertices one at a time while `fails` keeps holding.
pub fn shrink_graph(g: &Graph, fails: impl Fn(&Graph) -> bool) -> Graph {
    let mut current = g.clone();
    'outer: loop {
        for v in 0..current.order() {
            let smaller = current.without_vertex(v);
            if fails(&smaller) {
                current = smaller;
                continue 'outer;
            }
        }
        return current;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;
    use crate::linear::{verify_bluered_model, verify_linear_leafroot};
    use crate::nes::verify_nes_model;
    use crate::star::verify_star_model;

    #[test]
    fn generated_pairs_verify() {
        for seed in 0..40 {
            let n = 1 + seed as usize % 15;
            let (g, m) = gen_bluered(seed, n);
            assert!(verify_bluered_model(&g, &m).unwrap().is_valid());
            let (g, m) = gen_linear_root(seed, n);
            assert!(verify_linear_leafroot(&g, &m).unwrap().is_valid());
            let (g, m) = gen_star_model(seed, n, 1 + seed as usize % 5);
            assert!(verify_star_model(&g, &m).unwrap().is_valid());
            let (g, m) = gen_nes_model(seed, n);
            assert!(verify_nes_model(&g, &m).unwrap().is_valid());
            assert!(is_chordal(&random_chordal(seed, n)));
        }
    }

    #[test]
    fn deterministic_in_seed() {
        assert_eq!(gen_bluered(7, 10).1, gen_bluered(7, 10).1);
        assert!(random_chordal(3, 9).same_graph(&random_chordal(3, 9)));
        assert_eq!(gen_star_model(5, 12, 3).1, gen_star_model(5, 12, 3).1);
    }

    #[test]
    fn shrinking_keeps_failure() {
        // Smallest induced subgraph still containing a triangle.
        let g = random_chordal(11, 10);
        let has_triangle = |h: &Graph| (0..h.order()).any(|u| h.edges().any(|(a, b)| a != u && b != u && h.has_edge(u, a) && h.has_edge(u, b)));
        if has_triangle(&g) {
            assert_eq!(shrink_graph(&g, has_triangle).order(), 3);
        }
    }
}
