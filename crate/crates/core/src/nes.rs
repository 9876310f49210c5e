//! NeS models: balls in embedded trees.
//!
//! Every vertex is a ball (center point, radius) in the metric of a tree whose
//! edges are line segments; two vertices are adjacent iff their balls meet,
//! which in a tree happens iff the center distance is at most the sum of the
//! radii.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linear::check_cover;
use crate::rational::{int, Rational};
use crate::verify::{compare_adjacency, Verification};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedTree {
    pub nodes: usize,
    /// `(a, b, length)`; offsets on an edge are measured from `a`.
    pub edges: Vec<(usize, usize, Rational)>,
}

/// A point of an embedded tree. Points at an edge end are always given as
/// the node, so equal points compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TreePoint {
    Node(usize),
    OnEdge { edge: usize, offset: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: TreePoint,
    pub radius: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NesModel {
    pub tree: EmbeddedTree,
    pub balls: BTreeMap<String, Ball>,
}

impl EmbeddedTree {
    pub fn single_node() -> Self {
        Self { nodes: 1, edges: Vec::new() }
    }

    /// A single segment of the given length.
    pub fn segment(length: Rational) -> Self {
        Self { nodes: 2, edges: vec![(0, 1, length)] }
    }

    pub fn validate(&self) -> Result<()> {
        if self.nodes == 0 || self.edges.len() + 1 != self.nodes {
            return Err(Error::InvalidModel("embedding is not a tree: wrong edge count".into()));
        }
        for (a, b, len) in &self.edges {
            if *a >= self.nodes || *b >= self.nodes || a == b {
                return Err(Error::InvalidModel("edge endpoint out of range".into()));
            }
            if !len.is_positive() {
                return Err(Error::InvalidModel("edge lengths must be positive".into()));
            }
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.nodes];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &(y, _) in &adj[x] {
                if !std::mem::replace(&mut seen[y], true) {
                    stack.push(y);
                }
            }
        }
        if seen.contains(&false) {
            return Err(Error::InvalidModel("embedding is not a tree: disconnected".into()));
        }
        Ok(())
    }

    /// Neighbours of each node with the connecting edge.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for (e, (a, b, _)) in self.edges.iter().enumerate() {
            adj[*a].push((*b, e));
            adj[*b].push((*a, e));
        }
        adj
    }

    pub fn total_length(&self) -> Rational {
        self.edges.iter().map(|(_, _, l)| l.clone()).sum()
    }

    /// The point at `offset` from the first endpoint of `edge`, canonicalized.
    pub fn point_on_edge(&self, edge: usize, offset: Rational) -> Result<TreePoint> {
        let (a, b, len) = self.edges.get(edge).ok_or_else(|| Error::InvalidModel(format!("no edge {edge}")))?;
        if offset.is_negative() || offset > *len {
            return Err(Error::InvalidModel("offset outside the edge".into()));
        }
        Ok(if offset.is_zero() {
            TreePoint::Node(*a)
        } else if offset == *len {
            TreePoint::Node(*b)
        } else {
            TreePoint::OnEdge { edge, offset }
        })
    }

    pub fn contains_point(&self, p: &TreePoint) -> bool {
        match p {
            TreePoint::Node(v) => *v < self.nodes,
            TreePoint::OnEdge { edge, offset } => {
                self.edges.get(*edge).is_some_and(|(_, _, len)| offset.is_positive() && offset < len)
            }
        }
    }

    /// Nodes next to `p` with their distance from it.
    fn anchors(&self, p: &TreePoint) -> Vec<(usize, Rational)> {
        match p {
            TreePoint::Node(v) => vec![(*v, Rational::zero())],
            TreePoint::OnEdge { edge, offset } => {
                let (a, b, len) = &self.edges[*edge];
                vec![(*a, offset.clone()), (*b, len - offset)]
            }
        }
    }

    /// Splits the edge under `p` so that `p` becomes a node; returns the node
    /// and a function that maps old points to new ones.
    fn subdivide_at(&mut self, p: &TreePoint) -> (usize, impl Fn(&TreePoint) -> TreePoint) {
        let split = match p {
            TreePoint::Node(v) => return (*v, Box::new(|q: &TreePoint| q.clone()) as Box<dyn Fn(&TreePoint) -> TreePoint>),
            TreePoint::OnEdge { edge, offset } => (*edge, offset.clone()),
        };
        let (edge, at) = split;
        let (a, b, len) = self.edges[edge].clone();
        let mid = self.nodes;
        self.nodes += 1;
        self.edges[edge] = (a, mid, at.clone());
        let tail = self.edges.len();
        self.edges.push((mid, b, &len - &at));
        let remap = move |q: &TreePoint| match q {
            TreePoint::OnEdge { edge: e, offset } if *e == edge => {
                if *offset < at {
                    q.clone()
                } else if *offset == at {
                    TreePoint::Node(mid)
                } else {
                    TreePoint::OnEdge { edge: tail, offset: offset - &at }
                }
            }
            _ => q.clone(),
        };
        (mid, Box::new(remap))
    }
}

/// Tree metric with all node-to-node distances precomputed.
pub struct Metric<'a> {
    tree: &'a EmbeddedTree,
    adj: Vec<Vec<(usize, usize)>>,
    dist: Vec<Vec<Rational>>,
}

impl<'a> Metric<'a> {
    pub fn new(tree: &'a EmbeddedTree) -> Self {
        let adj = tree.adjacency();
        let dist = (0..tree.nodes)
            .map(|s| {
                let mut d = vec![Rational::zero(); tree.nodes];
                let mut seen = vec![false; tree.nodes];
                seen[s] = true;
                let mut stack = vec![s];
                while let Some(x) = stack.pop() {
                    for &(y, e) in &adj[x] {
                        if !std::mem::replace(&mut seen[y], true) {
                            d[y] = &d[x] + &tree.edges[e].2;
                            stack.push(y);
                        }
                    }
                }
                d
            })
            .collect();
        Self { tree, adj, dist }
    }

    pub fn distance(&self, p: &TreePoint, q: &TreePoint) -> Rational {
        if let (TreePoint::OnEdge { edge: e1, offset: o1 }, TreePoint::OnEdge { edge: e2, offset: o2 }) = (p, q) {
            if e1 == e2 {
                return (o1 - o2).abs();
            }
        }
        let mut best: Option<Rational> = None;
        for (a, da) in self.tree.anchors(p) {
            for (b, db) in self.tree.anchors(q) {
                let d = &da + &self.dist[a][b] + &db;
                if best.as_ref().is_none_or(|x| d < *x) {
                    best = Some(d);
                }
            }
        }
        best.expect("points have anchors")
    }

    /// The point at distance `along` from `p` on the path to `q`.
    pub fn walk(&self, p: &TreePoint, q: &TreePoint, along: &Rational) -> TreePoint {
        let total = self.distance(p, q);
        debug_assert!(!along.is_negative() && *along <= total);
        if let (TreePoint::OnEdge { edge: e1, offset: o1 }, TreePoint::OnEdge { edge: e2, offset: o2 }) = (p, q) {
            if e1 == e2 {
                let offset = if o2 >= o1 { o1 + along } else { o1 - along };
                return self.tree.point_on_edge(*e1, offset).expect("stays on the edge");
            }
        }
        // Exit node of p and entry node of q on the geodesic.
        let (ap, dp, aq, dq) = self
            .tree
            .anchors(p)
            .into_iter()
            .flat_map(|(a, da)| self.tree.anchors(q).into_iter().map(move |(b, db)| (a, da.clone(), b, db)))
            .find(|(a, da, b, db)| da + &self.dist[*a][*b] + db == total)
            .expect("some anchor pair realizes the distance");
        let mut left = along.clone();
        if left <= dp {
            return self.toward_node(p, ap, &left);
        }
        left -= &dp;
        for (u, v, e) in self.node_path(ap, aq) {
            let len = &self.tree.edges[e].2;
            if left <= *len {
                let (a, _, _) = &self.tree.edges[e];
                let offset = if *a == u { left.clone() } else { len - &left };
                let _ = v;
                return self.tree.point_on_edge(e, offset).expect("within the edge");
            }
            left -= len;
        }
        // Remaining distance lies between aq and q.
        let back = &dq - &left;
        self.toward_node(q, aq, &back)
    }

    /// From `p` (on an edge incident to `node`, or `node` itself) move `by` toward `node`.
    fn toward_node(&self, p: &TreePoint, node: usize, by: &Rational) -> TreePoint {
        match p {
            TreePoint::Node(_) => p.clone(),
            TreePoint::OnEdge { edge, offset } => {
                let (a, _, _) = &self.tree.edges[*edge];
                let next = if *a == node { offset - by } else { offset + by };
                self.tree.point_on_edge(*edge, next).expect("within the edge")
            }
        }
    }

    /// Edges `(from, to, edge)` along the node path from `a` to `b`.
    fn node_path(&self, a: usize, b: usize) -> Vec<(usize, usize, usize)> {
        let mut parent = vec![None; self.tree.nodes];
        let mut seen = vec![false; self.tree.nodes];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &self.adj[x] {
                if !std::mem::replace(&mut seen[y], true) {
                    parent[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        let mut path = Vec::new();
        let mut x = b;
        while let Some((p, e)) = parent[x] {
            path.push((p, x, e));
            x = p;
        }
        path.reverse();
        path
    }
}

pub fn point_distance(t: &EmbeddedTree, p: &TreePoint, q: &TreePoint) -> Rational {
    Metric::new(t).distance(p, q)
}

pub fn balls_intersect(t: &EmbeddedTree, b1: &Ball, b2: &Ball) -> bool {
    point_distance(t, &b1.center, &b2.center) <= &b1.radius + &b2.radius
}

/// The intersection of two balls, itself a ball, or `None` when they are disjoint.
pub fn balls_intersection(t: &EmbeddedTree, b1: &Ball, b2: &Ball) -> Option<Ball> {
    intersection_in(&Metric::new(t), b1, b2)
}

fn intersection_in(metric: &Metric, b1: &Ball, b2: &Ball) -> Option<Ball> {
    let d = metric.distance(&b1.center, &b2.center);
    if d > &b1.radius + &b2.radius {
        return None;
    }
    if &d + &b1.radius <= b2.radius {
        return Some(b1.clone());
    }
    if &d + &b2.radius <= b1.radius {
        return Some(b2.clone());
    }
    let along = (&d + &b1.radius - &b2.radius) / int(2);
    Some(Ball { center: metric.walk(&b1.center, &b2.center, &along), radius: (&b1.radius + &b2.radius - &d) / int(2) })
}

impl NesModel {
    pub fn check_shape(&self) -> Result<()> {
        self.tree.validate()?;
        for (v, ball) in &self.balls {
            if !self.tree.contains_point(&ball.center) {
                return Err(Error::InvalidModel(format!("center of `{v}` is not a point of the tree")));
            }
            if ball.radius.is_negative() {
                return Err(Error::InvalidModel(format!("radius of `{v}` is negative")));
            }
        }
        Ok(())
    }

    /// The graph the model represents, vertices in name order.
    pub fn induced_graph(&self) -> Graph {
        let metric = Metric::new(&self.tree);
        let balls: Vec<(&String, &Ball)> = self.balls.iter().collect();
        let mut edges = Vec::new();
        for i in 0..balls.len() {
            for j in i + 1..balls.len() {
                if metric.distance(&balls[i].1.center, &balls[j].1.center) <= &balls[i].1.radius + &balls[j].1.radius {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_index_edges(balls.iter().map(|(v, _)| (*v).clone()).collect(), &edges).expect("names are distinct")
    }

    /// Multiplies every length and radius by `factor > 0`.
    pub fn scaled(&self, factor: &Rational) -> NesModel {
        let tree = EmbeddedTree { nodes: self.tree.nodes, edges: self.tree.edges.iter().map(|(a, b, l)| (*a, *b, l * factor)).collect() };
        let balls = self
            .balls
            .iter()
            .map(|(v, ball)| {
                let center = match &ball.center {
                    TreePoint::Node(n) => TreePoint::Node(*n),
                    TreePoint::OnEdge { edge, offset } => TreePoint::OnEdge { edge: *edge, offset: offset * factor },
                };
                (v.clone(), Ball { center, radius: &ball.radius * factor })
            })
            .collect();
        NesModel { tree, balls }
    }

    fn max_radius(&self) -> Rational {
        self.balls.values().map(|b| b.radius.clone()).max().unwrap_or_else(Rational::zero)
    }

    /// A length no ball can cover: total edge length + largest radius + 1.
    fn long_enough(&self) -> Rational {
        self.tree.total_length() + self.max_radius() + int(1)
    }

    /// Attaches a fresh line of `length` at `p`; returns the model with the
    /// attachment node and the tip node.
    fn attach_line(&self, p: &TreePoint, length: Rational) -> (NesModel, usize, usize) {
        let mut tree = self.tree.clone();
        let (node, remap) = tree.subdivide_at(p);
        let tip = tree.nodes;
        tree.nodes += 1;
        tree.edges.push((node, tip, length));
        let balls = self.balls.iter().map(|(v, b)| (v.clone(), Ball { center: remap(&b.center), radius: b.radius.clone() })).collect();
        (NesModel { tree, balls }, node, tip)
    }
}

pub fn verify_nes_model(g: &Graph, m: &NesModel) -> Result<Verification> {
    m.check_shape()?;
    check_cover(g, m.balls.keys())?;
    let metric = Metric::new(&m.tree);
    let balls: Vec<&Ball> = g.names().iter().map(|v| &m.balls[v]).collect();
    Ok(compare_adjacency(g, |u, v| metric.distance(&balls[u].center, &balls[v].center) <= &balls[u].radius + &balls[v].radius))
}

/// Moves the center of `T_x` to the tip of a fresh line so long that no other
/// ball reaches the tip, growing the radius of `T_x` by the line length.
pub fn isolate(m: &NesModel, x: &str) -> Result<NesModel> {
    let ball = m.balls.get(x).ok_or_else(|| Error::MissingVertex(x.to_owned()))?;
    let length = m.long_enough();
    let (mut out, _, tip) = m.attach_line(&ball.center, length.clone());
    let radius = &ball.radius + &length;
    out.balls.insert(x.to_owned(), Ball { center: TreePoint::Node(tip), radius });
    Ok(out)
}

/// Checks that `m` models `g − u` for a vertex `u` of `g`.
fn split_target(m: &NesModel, g: &Graph, u: &str) -> Result<(usize, Graph)> {
    let ui = g.index_of(u).ok_or_else(|| Error::UnknownVertex(u.to_owned()))?;
    if m.balls.contains_key(u) {
        return Err(Error::Precondition(format!("model already has `{u}`")));
    }
    let rest = g.without_vertex(ui);
    check_cover(&rest, m.balls.keys())?;
    Ok((ui, rest))
}

fn finish(g: &Graph, m: NesModel, rule: &str) -> Result<NesModel> {
    let report = verify_nes_model(g, &m)?;
    if !report.is_valid() {
        return Err(Error::InvalidModel(format!("{rule}: result disagrees with the graph on {} pairs", report.discrepancies.len())));
    }
    Ok(m)
}

/// Adds a universal vertex `u`.
pub fn add_universal(m: &NesModel, g: &Graph, u: &str) -> Result<NesModel> {
    let (ui, _) = split_target(m, g, u)?;
    if g.degree(ui) + 1 != g.order() {
        return Err(Error::Precondition(format!("universal rule: `{u}` is not universal")));
    }
    let metric = Metric::new(&m.tree);
    let center = TreePoint::Node(0);
    let radius = m.balls.values().map(|b| metric.distance(&center, &b.center)).max().unwrap_or_else(Rational::zero);
    let mut out = m.clone();
    out.balls.insert(u.to_owned(), Ball { center, radius });
    finish(g, out, "universal rule")
}

/// Adds `u` whose only neighbour is `x`.
pub fn add_pendant(m: &NesModel, g: &Graph, u: &str, x: &str) -> Result<NesModel> {
    let (ui, _) = split_target(m, g, u)?;
    let xi = g.index_of(x).ok_or_else(|| Error::UnknownVertex(x.to_owned()))?;
    if g.degree(ui) != 1 || !g.has_edge(ui, xi) {
        return Err(Error::Precondition(format!("pendant rule: `{u}` is not a degree-1 vertex hanging off `{x}`")));
    }
    let mut out = isolate(m, x)?;
    let center = out.balls[x].center.clone();
    out.balls.insert(u.to_owned(), Ball { center, radius: Rational::zero() });
    finish(g, out, "pendant rule")
}

/// `∩_{v ∈ N(u)} T_v` folded pairwise.
fn common_ball(m: &NesModel, metric: &Metric, members: &[String]) -> Result<Ball> {
    let mut acc = m.balls[&members[0]].clone();
    for v in &members[1..] {
        acc = intersection_in(metric, &acc, &m.balls[v]).ok_or_else(|| Error::InvalidModel("balls of a clique do not share a point".into()))?;
    }
    Ok(acc)
}

/// Adds `u` with `N(u)` a maximal clique of `g − u`: a point ball inside all
/// neighbour balls.
pub fn add_simplicial_max_clique(m: &NesModel, g: &Graph, u: &str) -> Result<NesModel> {
    let (ui, rest) = split_target(m, g, u)?;
    let nbrs = g.set_names(g.neighbors(ui));
    let local = rest.vertex_set(&nbrs)?;
    if !rest.is_maximal_clique(&local) {
        return Err(Error::Precondition(format!("maximal-clique rule: N(`{u}`) is not a maximal clique of G − u")));
    }
    let center = if nbrs.is_empty() {
        TreePoint::Node(0)
    } else {
        common_ball(m, &Metric::new(&m.tree), &nbrs)?.center
    };
    let mut out = m.clone();
    out.balls.insert(u.to_owned(), Ball { center, radius: Rational::zero() });
    finish(g, out, "maximal-clique rule")
}

/// Whether `s` is a minimal separator of `g`: at least two components of
/// `g − s` are full (every vertex of `s` has a neighbour in them).
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> bool {
    let comps = g.components_without(s);
    let full = comps.blocks().iter().filter(|c| s.iter().all(|v| g.neighbors(v).intersects(c))).count();
    full >= 2
}

/// Adds `u` with `N(u)` a minimal separator of `g − u`: a fresh line leaves
/// the center of `T = ∩ T_v` and `u` sits where the line leaves `T`.
pub fn add_min_separator(m: &NesModel, g: &Graph, u: &str) -> Result<NesModel> {
    let (ui, rest) = split_target(m, g, u)?;
    let nbrs = g.set_names(g.neighbors(ui));
    let local = rest.vertex_set(&nbrs)?;
    if !is_minimal_separator(&rest, &local) {
        return Err(Error::Precondition(format!("separator rule: N(`{u}`) is not a minimal separator of G − u")));
    }
    if nbrs.is_empty() {
        let length = m.long_enough();
        let (mut out, _, tip) = m.attach_line(&TreePoint::Node(0), length);
        out.balls.insert(u.to_owned(), Ball { center: TreePoint::Node(tip), radius: Rational::zero() });
        return finish(g, out, "separator rule");
    }
    let t = common_ball(m, &Metric::new(&m.tree), &nbrs)?;
    let length = &t.radius + int(1);
    let (mut out, _, _) = m.attach_line(&t.center, length);
    let line = out.tree.edges.len() - 1;
    let center = out.tree.point_on_edge(line, t.radius.clone())?;
    out.balls.insert(u.to_owned(), Ball { center, radius: Rational::zero() });
    finish(g, out, "separator rule")
}

/// Glues models of the blocks `G[C_i ∪ {u}]` (one per component `C_i` of
/// `G − u`) into a model of `G`: each model has `T_u` isolated and is rescaled
/// so `T_u` has radius 1, then the centers of the `T_u` are identified.
pub fn merge_at_cut_vertex(models: &[NesModel], u: &str, g: &Graph) -> Result<NesModel> {
    let ui = g.index_of(u).ok_or_else(|| Error::UnknownVertex(u.to_owned()))?;
    let mut without_u = g.all();
    without_u.remove(ui);
    let comps = g.components_within(&without_u);
    if comps.len() != models.len() {
        return Err(Error::Precondition(format!("{} components of G − u but {} models", comps.len(), models.len())));
    }
    let mut used = vec![false; comps.len()];
    let mut nodes = 1; // node 0 is the shared center of T_u
    let mut edges = Vec::new();
    let mut balls = BTreeMap::new();
    for m in models {
        let verts: Vec<&String> = m.balls.keys().filter(|v| v.as_str() != u).collect();
        let first = verts.first().and_then(|v| g.index_of(v)).ok_or_else(|| Error::Precondition("model without a component vertex".into()))?;
        let k = comps.iter().position(|c| c.contains(first)).ok_or_else(|| Error::Precondition("model vertex not in G − u".into()))?;
        if std::mem::replace(&mut used[k], true) {
            return Err(Error::Precondition("two models for the same component".into()));
        }
        let mut block = comps[k].clone();
        block.insert(ui);
        let sub = g.induced_subgraph(&block);
        let report = verify_nes_model(&sub, m)?;
        if !report.is_valid() {
            return Err(Error::Precondition("a block model does not verify".into()));
        }
        let isolated = isolate(m, u)?;
        let r_u = isolated.balls[u].radius.clone();
        let scaled = isolated.scaled(&(Rational::from_integer(1.into()) / r_u));
        let TreePoint::Node(tip) = scaled.balls[u].center else { unreachable!("isolate centers T_u on a node") };
        let remap = |n: usize| if n == tip { 0 } else if n < tip { nodes + n } else { nodes + n - 1 };
        let base_edge = edges.len();
        for (a, b, len) in &scaled.tree.edges {
            edges.push((remap(*a), remap(*b), len.clone()));
        }
        for (v, ball) in &scaled.balls {
            if v == u {
                continue;
            }
            let center = match &ball.center {
                TreePoint::Node(n) => TreePoint::Node(remap(*n)),
                TreePoint::OnEdge { edge, offset } => TreePoint::OnEdge { edge: base_edge + edge, offset: offset.clone() },
            };
            balls.insert(v.clone(), Ball { center, radius: ball.radius.clone() });
        }
        nodes += scaled.tree.nodes - 1;
    }
    balls.insert(u.to_owned(), Ball { center: TreePoint::Node(0), radius: int(1) });
    finish(g, NesModel { tree: EmbeddedTree { nodes, edges }, balls }, "cut-vertex merge")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn on(edge: usize, offset: Rational) -> TreePoint {
        TreePoint::OnEdge { edge, offset }
    }

    fn ball(center: TreePoint, radius: Rational) -> Ball {
        Ball { center, radius }
    }

    #[test]
    fn distances() {
        let t = EmbeddedTree::segment(int(5));
        assert_eq!(point_distance(&t, &TreePoint::Node(0), &TreePoint::Node(0)), int(0));
        assert_eq!(point_distance(&t, &TreePoint::Node(0), &TreePoint::Node(1)), int(5));
        assert_eq!(point_distance(&t, &on(0, int(1)), &on(0, int(4))), int(3));
        // Star with three rays of length 2.
        let star = EmbeddedTree { nodes: 4, edges: vec![(0, 1, int(2)), (0, 2, int(2)), (3, 0, int(2))] };
        assert_eq!(point_distance(&star, &on(0, int(1)), &on(2, int(1))), int(2));
        assert_eq!(point_distance(&star, &on(1, rat(1, 2)), &TreePoint::Node(3)), rat(5, 2));
    }

    #[test]
    fn point_canonicalization() {
        let t = EmbeddedTree::segment(int(5));
        assert_eq!(t.point_on_edge(0, int(0)).unwrap(), TreePoint::Node(0));
        assert_eq!(t.point_on_edge(0, int(5)).unwrap(), TreePoint::Node(1));
        assert!(t.point_on_edge(0, int(6)).is_err());
    }

    #[test]
    fn ball_intersection_examples() {
        let t = EmbeddedTree::segment(int(10));
        let a = ball(TreePoint::Node(0), int(0));
        assert!(balls_intersect(&t, &a, &a));
        assert!(!balls_intersect(&t, &ball(TreePoint::Node(0), int(4)), &ball(TreePoint::Node(1), int(5))));
        assert!(balls_intersect(&t, &ball(on(0, int(1)), int(4)), &ball(TreePoint::Node(1), int(5))));

        let inner = ball(on(0, int(5)), int(1));
        let outer = ball(on(0, int(4)), int(3));
        assert_eq!(balls_intersection(&t, &inner, &outer), Some(inner.clone()));
        let b1 = ball(on(0, int(2)), int(3));
        let b2 = ball(on(0, int(6)), int(2));
        let i = balls_intersection(&t, &b1, &b2).unwrap();
        assert_eq!(i, ball(on(0, rat(9, 2)), rat(1, 2)));
        assert!(balls_intersection(&t, &ball(TreePoint::Node(0), int(1)), &ball(TreePoint::Node(1), int(1))).is_none());
    }

    #[test]
    fn intersection_matches_membership_on_star() {
        let star = EmbeddedTree { nodes: 4, edges: vec![(0, 1, int(4)), (0, 2, int(4)), (3, 0, int(4))] };
        let metric = Metric::new(&star);
        let b1 = ball(on(0, int(3)), int(4));
        let b2 = ball(on(1, int(2)), int(3));
        let i = balls_intersection(&star, &b1, &b2).unwrap();
        for e in 0..3 {
            for k in 0..=16 {
                let p = star.point_on_edge(e, rat(k, 4)).unwrap();
                let inside = |b: &Ball| metric.distance(&p, &b.center) <= b.radius;
                assert_eq!(inside(&i), inside(&b1) && inside(&b2), "edge {e} offset {k}/4");
            }
        }
    }

    fn k2_model() -> (Graph, NesModel) {
        let g = Graph::new(["a", "b"], [("a", "b")]).unwrap();
        let mut balls = BTreeMap::new();
        balls.insert("a".to_owned(), ball(TreePoint::Node(0), int(1)));
        balls.insert("b".to_owned(), ball(TreePoint::Node(1), int(1)));
        (g, NesModel { tree: EmbeddedTree::segment(int(2)), balls })
    }

    #[test]
    fn verify_and_perturb() {
        let (g, m) = k2_model();
        assert!(verify_nes_model(&g, &m).unwrap().is_valid());
        let mut bad = m.clone();
        bad.balls.get_mut("b").unwrap().radius = rat(1, 2);
        assert_eq!(verify_nes_model(&g, &bad).unwrap().discrepancies.len(), 1);
    }

    #[test]
    fn isolate_keeps_graph_and_owns_center() {
        let (g, m) = k2_model();
        let iso = isolate(&m, "a").unwrap();
        assert!(verify_nes_model(&g, &iso).unwrap().is_valid());
        let metric = Metric::new(&iso.tree);
        let c = &iso.balls["a"].center;
        for (v, b) in &iso.balls {
            assert_eq!(metric.distance(c, &b.center) <= b.radius, v == "a");
        }
        // Center in the middle of an edge gets split first.
        let mut mid = m.clone();
        mid.balls.insert("a".into(), ball(on(0, int(1)), int(1)));
        let iso = isolate(&mid, "a").unwrap();
        assert_eq!(iso.tree.nodes, 4);
        assert!(verify_nes_model(&g, &iso).unwrap().is_valid());
    }

    #[test]
    fn closure_rules() {
        let (g, m) = k2_model();
        let p3 = Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        assert!(add_pendant(&m, &p3, "c", "b").is_ok());
        assert!(add_pendant(&m, &p3, "c", "a").is_err());

        let k3 = Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert!(add_universal(&m, &k3, "c").is_ok());
        assert!(add_simplicial_max_clique(&m, &k3, "c").is_ok());
        assert!(add_universal(&m, &p3, "c").is_err());
        assert!(add_simplicial_max_clique(&m, &p3, "c").is_err());

        // P3 a–b–c, then d adjacent to b separates… no: N(d) = {b} separates a from c.
        let p3m = add_pendant(&m, &p3, "c", "b").unwrap();
        let claw = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("b", "d")]).unwrap();
        assert!(add_min_separator(&p3m, &claw, "d").is_ok());
        let _ = g;
    }

    #[test]
    fn cut_vertex_merge() {
        let (_, m) = k2_model();
        let p3 = Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        let mut other = m.clone();
        let ball_a = other.balls.remove("a").unwrap();
        other.balls.insert("c".into(), ball_a);
        let merged = merge_at_cut_vertex(&[m.clone(), other], "b", &p3).unwrap();
        assert!(verify_nes_model(&p3, &merged).unwrap().is_valid());
        assert_eq!(merged.balls["b"].radius, int(1));

        let (k2, m) = k2_model();
        let single = merge_at_cut_vertex(&[m], "a", &k2).unwrap();
        assert!(verify_nes_model(&k2, &single).unwrap().is_valid());
    }

    #[test]
    fn interval_graphs_live_on_one_edge() {
        let g = Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        let mut balls = BTreeMap::new();
        balls.insert("a".to_owned(), ball(on(0, rat(1, 2)), rat(1, 2)));
        balls.insert("b".to_owned(), ball(on(0, rat(3, 2)), rat(1, 2)));
        balls.insert("c".to_owned(), ball(on(0, rat(5, 2)), rat(1, 2)));
        let m = NesModel { tree: EmbeddedTree::segment(int(3)), balls };
        assert!(verify_nes_model(&g, &m).unwrap().is_valid());
        assert!(verify_nes_model(&g, &m.scaled(&rat(7, 3))).unwrap().is_valid());
    }
}
