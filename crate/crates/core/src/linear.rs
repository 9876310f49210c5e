//! Blue-red interval models and weighted caterpillar leaf roots.
//!
//! A blue-red model assigns each vertex an interval and a colour: blue-blue
//! pairs are adjacent when their intervals meet, red-blue pairs when the red
//! interval lies inside the blue one, and red-red pairs never. Such graphs are
//! exactly the linear leaf powers; the conversions below turn one certificate
//! into the other. Distances in a caterpillar between legs `i < j` are
//! `f_i + e_i + … + e_{j−1} + f_j`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, int, Rational};
use crate::verify::{compare_adjacency, Verification};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidModel(format!("interval [{}, {}] is reversed", rational::display(&lo), rational::display(&hi))));
        }
        Ok(Self { lo, hi })
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// `|m1 − m2| ≤ (ℓ1 + ℓ2)/2`
    pub fn intersects(&self, other: &RatInterval) -> bool {
        (self.midpoint() - other.midpoint()).abs() <= (self.length() + other.length()) / int(2)
    }

    /// `|m1 − m2| ≤ (ℓ1 − ℓ2)/2`
    pub fn contains(&self, inner: &RatInterval) -> bool {
        (self.midpoint() - inner.midpoint()).abs() <= (self.length() - inner.length()) / int(2)
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> RatInterval {
        RatInterval { lo: f(&self.lo), hi: f(&self.hi) }
    }
}

pub fn intervals_intersect(a: &RatInterval, b: &RatInterval) -> bool {
    a.intersects(b)
}

pub fn interval_contains(outer: &RatInterval, inner: &RatInterval) -> bool {
    outer.contains(inner)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Blue,
    Red,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlueRedModel {
    pub intervals: BTreeMap<String, (Color, RatInterval)>,
}

impl BlueRedModel {
    pub fn insert(&mut self, v: impl Into<String>, color: Color, interval: RatInterval) {
        self.intervals.insert(v.into(), (color, interval));
    }

    pub fn vertices_of(&self, color: Color) -> Vec<String> {
        self.intervals.iter().filter(|(_, (c, _))| *c == color).map(|(v, _)| v.clone()).collect()
    }

    pub fn get(&self, v: &str) -> Option<&(Color, RatInterval)> {
        self.intervals.get(v)
    }

    /// Whether the model makes `u` and `v` adjacent.
    pub fn adjacent(&self, u: &str, v: &str) -> Option<bool> {
        let (cu, iu) = self.get(u)?;
        let (cv, iv) = self.get(v)?;
        Some(match (cu, cv) {
            (Color::Blue, Color::Blue) => iu.intersects(iv),
            (Color::Red, Color::Blue) => iv.contains(iu),
            (Color::Blue, Color::Red) => iu.contains(iv),
            (Color::Red, Color::Red) => false,
        })
    }

    /// The graph the model represents, vertices in name order.
    pub fn induced_graph(&self) -> Graph {
        let names: Vec<&String> = self.intervals.keys().collect();
        let mut edges = Vec::new();
        for i in 0..names.len() {
            for j in i + 1..names.len() {
                if self.adjacent(names[i], names[j]) == Some(true) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_index_edges(names.into_iter().cloned().collect(), &edges).expect("model names are distinct")
    }

    fn map_intervals(&self, f: impl Fn(Color, &RatInterval) -> RatInterval) -> BlueRedModel {
        BlueRedModel { intervals: self.intervals.iter().map(|(v, (c, i))| (v.clone(), (*c, f(*c, i)))).collect() }
    }

    fn max_length(&self) -> Rational {
        self.intervals.values().map(|(_, i)| i.length()).max().unwrap_or_else(Rational::zero)
    }
}

/// The model's vertex names are exactly those of `g`.
pub(crate) fn check_cover<'a>(g: &Graph, keys: impl Iterator<Item = &'a String> + Clone) -> Result<()> {
    if let Some(extra) = keys.clone().find(|k| g.index_of(k).is_none()) {
        return Err(Error::UnknownVertex(extra.clone()));
    }
    let present: BTreeSet<&str> = keys.map(String::as_str).collect();
    match g.names().iter().find(|v| !present.contains(v.as_str())) {
        Some(missing) => Err(Error::MissingVertex(missing.clone())),
        None => Ok(()),
    }
}

pub fn verify_bluered_model(g: &Graph, m: &BlueRedModel) -> Result<Verification> {
    check_cover(g, m.intervals.keys())?;
    Ok(compare_adjacency(g, |u, v| m.adjacent(g.name(u), g.name(v)) == Some(true)))
}

/// Every interval has length in `(0, 1]`.
pub fn is_normalized(m: &BlueRedModel) -> bool {
    m.intervals.values().all(|(_, i)| i.length().is_positive() && i.length() <= Rational::one())
}

/// Rescales so the longest interval has length 1, then thickens zero-length
/// intervals `[p, p]` to `[p, p + ε]`, ε a quarter of the smallest positive
/// gap between endpoints. When thickening would change the represented graph
/// (a red point at the right end of a blue interval), every blue interval is
/// widened by ε on both sides and red points become `[p − ε/2, p + ε/2]`
/// instead, followed by another rescale.
pub fn normalize_bluered(m: &BlueRedModel) -> BlueRedModel {
    let max_len = m.max_length();
    let scaled = if max_len.is_positive() { m.map_intervals(|_, i| i.map(|x| x / &max_len)) } else { m.clone() };
    let endpoints: BTreeSet<Rational> = scaled.intervals.values().flat_map(|(_, i)| [i.lo.clone(), i.hi.clone()]).collect();
    let endpoints: Vec<Rational> = endpoints.into_iter().collect();
    let eps = endpoints.windows(2).map(|w| &w[1] - &w[0]).min().map(|gap| gap / int(4)).unwrap_or_else(Rational::one);

    let thickened = scaled.map_intervals(|_, i| {
        if i.length().is_zero() {
            RatInterval { lo: i.lo.clone(), hi: &i.hi + &eps }
        } else {
            i.clone()
        }
    });
    let result = if thickened.induced_graph() == scaled.induced_graph() {
        thickened
    } else {
        let half_eps = &eps / int(2);
        let widened = scaled.map_intervals(|c, i| match c {
            Color::Blue => RatInterval { lo: &i.lo - &eps, hi: &i.hi + &eps },
            Color::Red if i.length().is_zero() => RatInterval { lo: &i.lo - &half_eps, hi: &i.hi + &half_eps },
            Color::Red => i.clone(),
        });
        let max_len = widened.max_length();
        widened.map_intervals(|_, i| i.map(|x| x / &max_len))
    };
    debug_assert!(is_normalized(&result));
    debug_assert!(result.induced_graph() == m.induced_graph());
    result
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leg {
    pub vertex: String,
    pub weight: Rational,
}

/// A caterpillar: spine nodes `u_1 … u_k` joined by edges of weight `e_i`;
/// spine node `u_i` carries the leaf of one vertex through a leg of weight
/// `f_i`, or no leaf at all (a joining node between components).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearLeafRoot {
    pub legs: Vec<Option<Leg>>,
    pub spine_weights: Vec<Rational>,
}

impl LinearLeafRoot {
    /// Spine positions from `u_1`.
    pub fn positions(&self) -> Vec<Rational> {
        let mut acc = Rational::zero();
        let mut out = Vec::with_capacity(self.legs.len());
        for i in 0..self.legs.len() {
            if i > 0 {
                acc += &self.spine_weights[i - 1];
            }
            out.push(acc.clone());
        }
        out
    }

    /// Leaf-to-leaf distance between the legs at spine positions `i` and `j`.
    pub fn leg_distance(&self, positions: &[Rational], i: usize, j: usize) -> Option<Rational> {
        let a = self.legs[i].as_ref()?;
        let b = self.legs[j].as_ref()?;
        Some(&a.weight + (&positions[j] - &positions[i]).abs() + &b.weight)
    }

    /// Spine index of each vertex.
    pub fn spine_index(&self) -> BTreeMap<&str, usize> {
        self.legs.iter().enumerate().filter_map(|(i, l)| l.as_ref().map(|l| (l.vertex.as_str(), i))).collect()
    }

    pub fn check_shape(&self) -> Result<()> {
        if self.legs.is_empty() {
            if self.spine_weights.is_empty() {
                return Ok(());
            }
            return Err(Error::InvalidModel("spine weights without spine".into()));
        }
        if self.spine_weights.len() + 1 != self.legs.len() {
            return Err(Error::InvalidModel(format!(
                "{} spine nodes need {} spine weights, found {}",
                self.legs.len(),
                self.legs.len() - 1,
                self.spine_weights.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for leg in self.legs.iter().flatten() {
            if !rational::in_unit_interval(&leg.weight) {
                return Err(Error::InvalidModel(format!("leg weight of `{}` outside [0,1]", leg.vertex)));
            }
            if !seen.insert(leg.vertex.as_str()) {
                return Err(Error::InvalidModel(format!("vertex `{}` has two legs", leg.vertex)));
            }
        }
        if let Some(w) = self.spine_weights.iter().find(|w| !rational::in_unit_interval(w)) {
            return Err(Error::InvalidModel(format!("spine weight {} outside [0,1]", rational::display(w))));
        }
        Ok(())
    }

    /// The leaf power of the caterpillar, vertices in spine order.
    pub fn induced_graph(&self) -> Result<Graph> {
        self.check_shape()?;
        let pos = self.positions();
        let spine: Vec<usize> = (0..self.legs.len()).filter(|&i| self.legs[i].is_some()).collect();
        let names = spine.iter().map(|&i| self.legs[i].as_ref().unwrap().vertex.clone()).collect();
        let mut edges = Vec::new();
        for a in 0..spine.len() {
            for b in a + 1..spine.len() {
                if self.leg_distance(&pos, spine[a], spine[b]).expect("legs exist") <= Rational::one() {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_index_edges(names, &edges)
    }

    pub fn to_general(&self) -> GeneralLeafRoot {
        let k = self.legs.len();
        let mut edges: Vec<(usize, usize, Rational)> =
            self.spine_weights.iter().enumerate().map(|(i, w)| (i, i + 1, w.clone())).collect();
        let mut leaves = BTreeMap::new();
        let mut next = k;
        for (i, leg) in self.legs.iter().enumerate() {
            if let Some(leg) = leg {
                edges.push((i, next, leg.weight.clone()));
                leaves.insert(leg.vertex.clone(), next);
                next += 1;
            }
        }
        GeneralLeafRoot { nodes: next, edges, leaves }
    }
}

pub fn verify_linear_leafroot(g: &Graph, r: &LinearLeafRoot) -> Result<Verification> {
    r.check_shape()?;
    let index = r.spine_index();
    for v in g.names() {
        if !index.contains_key(v.as_str()) {
            return Err(Error::MissingVertex(v.clone()));
        }
    }
    if let Some(extra) = index.keys().find(|v| g.index_of(v).is_none()) {
        return Err(Error::UnknownVertex((*extra).to_owned()));
    }
    let pos = r.positions();
    let spine: Vec<usize> = g.names().iter().map(|v| index[v.as_str()]).collect();
    Ok(compare_adjacency(g, |u, v| r.leg_distance(&pos, spine[u], spine[v]).expect("both legs exist") <= Rational::one()))
}

/// Builds a caterpillar from a verified, normalized blue-red model: per
/// component, legs sorted by midpoint with `e_i` the midpoint differences and
/// `f_i = (1 − ℓ)/2` for blue, `(1 + ℓ)/2` for red; consecutive components are
/// separated by a leafless spine node and two weight-1 spine edges.
pub fn bluered_to_linear_leafroot(g: &Graph, m: &BlueRedModel) -> Result<LinearLeafRoot> {
    let report = verify_bluered_model(g, m)?;
    if !report.is_valid() {
        return Err(Error::InvalidModel(format!("model disagrees with the graph on {} pairs", report.discrepancies.len())));
    }
    if let Some((v, _)) = m.intervals.iter().find(|(_, (_, i))| !(i.length().is_positive() && i.length() <= Rational::one())) {
        return Err(Error::NotNormalized(format!("interval of `{v}` does not have length in (0,1]")));
    }
    let mut root = LinearLeafRoot::default();
    for (ci, comp) in g.connected_components().blocks().iter().enumerate() {
        let mut members: Vec<(Rational, usize)> = comp.iter().map(|v| (m.get(g.name(v)).unwrap().1.midpoint(), v)).collect();
        members.sort();
        if ci > 0 {
            root.spine_weights.push(Rational::one());
            root.legs.push(None);
            root.spine_weights.push(Rational::one());
        }
        for (k, (mid, v)) in members.iter().enumerate() {
            if k > 0 {
                root.spine_weights.push(mid - &members[k - 1].0);
            }
            let (color, interval) = m.get(g.name(*v)).unwrap();
            let weight = match color {
                Color::Blue => (Rational::one() - interval.length()) / int(2),
                Color::Red => (Rational::one() + interval.length()) / int(2),
            };
            root.legs.push(Some(Leg { vertex: g.name(*v).to_owned(), weight }));
        }
    }
    Ok(root)
}

/// Reads a blue-red model off a caterpillar: the midpoint is the spine
/// position, a leg of weight `w ≤ 1/2` gives a blue interval of length
/// `1 − 2w`, otherwise a red one of length `2w − 1`. Isolated vertices get
/// unit blue intervals far to the right of everything else.
pub fn linear_leafroot_to_bluered(g: &Graph, r: &LinearLeafRoot) -> Result<BlueRedModel> {
    r.check_shape()?;
    let pos = r.positions();
    let index = r.spine_index();
    let mut model = BlueRedModel::default();
    let mut far = pos.last().cloned().unwrap_or_else(Rational::zero) + int(2);
    for v in g.names() {
        let &i = index.get(v.as_str()).ok_or_else(|| Error::MissingVertex(v.clone()))?;
        let w = &r.legs[i].as_ref().unwrap().weight;
        let isolated = g.degree(g.index_of(v).unwrap()) == 0;
        let (color, half_len) = if isolated {
            (Color::Blue, rational::half())
        } else if *w <= rational::half() {
            (Color::Blue, (Rational::one() - w * int(2)) / int(2))
        } else {
            (Color::Red, (w * int(2) - Rational::one()) / int(2))
        };
        let mid = if isolated {
            far += int(3);
            far.clone()
        } else {
            pos[i].clone()
        };
        model.insert(v.clone(), color, RatInterval { lo: &mid - &half_len, hi: &mid + &half_len });
    }
    Ok(model)
}

/// An arbitrary weighted tree whose nodes `leaves[v]` stand for the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralLeafRoot {
    pub nodes: usize,
    pub edges: Vec<(usize, usize, Rational)>,
    pub leaves: BTreeMap<String, usize>,
}

impl GeneralLeafRoot {
    fn adjacency(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for (a, b, w) in &self.edges {
            adj[*a].push((*b, w.clone()));
            adj[*b].push((*a, w.clone()));
        }
        adj
    }

    fn check_tree(&self) -> Result<()> {
        if self.nodes == 0 || self.edges.len() + 1 != self.nodes {
            return Err(Error::InvalidModel("not a tree: wrong edge count".into()));
        }
        if self.edges.iter().any(|(a, b, _)| *a >= self.nodes || *b >= self.nodes || a == b) {
            return Err(Error::InvalidModel("edge endpoint out of range".into()));
        }
        if let Some((_, _, w)) = self.edges.iter().find(|(_, _, w)| !rational::in_unit_interval(w)) {
            return Err(Error::InvalidModel(format!("edge weight {} outside [0,1]", rational::display(w))));
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.nodes];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for (y, _) in &adj[x] {
                if !std::mem::replace(&mut seen[*y], true) {
                    stack.push(*y);
                }
            }
        }
        if seen.contains(&false) {
            return Err(Error::InvalidModel("not a tree: disconnected".into()));
        }
        let mut used = BTreeSet::new();
        for (v, &node) in &self.leaves {
            if node >= self.nodes || adj[node].len() > 1 {
                return Err(Error::InvalidModel(format!("vertex `{v}` is not mapped to a leaf")));
            }
            if !used.insert(node) {
                return Err(Error::InvalidModel(format!("leaf {node} carries two vertices")));
            }
        }
        Ok(())
    }

    /// Distances from `source` to every node.
    pub fn distances_from(&self, source: usize) -> Vec<Rational> {
        let adj = self.adjacency();
        let mut dist = vec![None; self.nodes];
        dist[source] = Some(Rational::zero());
        let mut stack = vec![source];
        while let Some(x) = stack.pop() {
            let dx = dist[x].clone().unwrap();
            for (y, w) in &adj[x] {
                if dist[*y].is_none() {
                    dist[*y] = Some(&dx + w);
                    stack.push(*y);
                }
            }
        }
        dist.into_iter().map(|d| d.expect("tree is connected")).collect()
    }
}

pub fn verify_general_leafroot(g: &Graph, r: &GeneralLeafRoot) -> Result<Verification> {
    r.check_tree()?;
    check_cover(g, r.leaves.keys())?;
    let node: Vec<usize> = g.names().iter().map(|v| r.leaves.get(v).copied().ok_or_else(|| Error::MissingVertex(v.clone()))).collect::<Result<_>>()?;
    let dist: Vec<Vec<Rational>> = node.iter().map(|&x| r.distances_from(x)).collect();
    Ok(compare_adjacency(g, |u, v| dist[u][node[v]] <= Rational::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn iv(lo: Rational, hi: Rational) -> RatInterval {
        RatInterval::new(lo, hi).unwrap()
    }

    fn p3() -> Graph {
        Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    fn p3_model() -> BlueRedModel {
        let mut m = BlueRedModel::default();
        m.insert("a", Color::Blue, iv(int(0), int(1)));
        m.insert("b", Color::Blue, iv(int(1), int(2)));
        m.insert("c", Color::Blue, iv(int(2), int(3)));
        m
    }

    #[test]
    fn fact_two_examples() {
        assert!(iv(int(0), int(2)).intersects(&iv(int(1), int(3))));
        assert!(iv(int(0), int(4)).contains(&iv(int(1), int(2))));
        assert!(!iv(int(0), int(1)).intersects(&iv(int(2), int(3))));
        assert!(!iv(int(1), int(2)).contains(&iv(int(0), int(4))));
        assert!(RatInterval::new(int(1), int(0)).is_err());
    }

    #[test]
    fn verify_bluered_examples() {
        assert!(verify_bluered_model(&p3(), &p3_model()).unwrap().is_valid());

        let k2 = Graph::new(["u", "v"], [("u", "v")]).unwrap();
        let mut m = BlueRedModel::default();
        m.insert("u", Color::Blue, iv(int(0), int(1)));
        m.insert("v", Color::Red, iv(rat(1, 4), rat(3, 4)));
        assert!(verify_bluered_model(&k2, &m).unwrap().is_valid());

        let mut reds = BlueRedModel::default();
        reds.insert("u", Color::Red, iv(int(0), int(2)));
        reds.insert("v", Color::Red, iv(int(1), int(3)));
        let report = verify_bluered_model(&k2, &reds).unwrap();
        assert_eq!(report.discrepancies.len(), 1);
        assert!(report.discrepancies[0].expected_edge);

        let mut partial = BlueRedModel::default();
        partial.insert("u", Color::Blue, iv(int(0), int(1)));
        assert!(matches!(verify_bluered_model(&k2, &partial), Err(Error::MissingVertex(_))));
    }

    #[test]
    fn normalize_examples() {
        let mut m = BlueRedModel::default();
        m.insert("a", Color::Blue, iv(int(0), int(12)));
        assert_eq!(normalize_bluered(&m).get("a").unwrap().1, iv(int(0), int(1)));

        let mut m = BlueRedModel::default();
        m.insert("a", Color::Blue, iv(int(0), int(2)));
        m.insert("b", Color::Blue, iv(int(1), int(3)));
        let n = normalize_bluered(&m);
        assert_eq!(n.get("b").unwrap().1, iv(rat(1, 2), rat(3, 2)));

        let mut m = BlueRedModel::default();
        m.insert("a", Color::Blue, iv(int(0), int(2)));
        m.insert("p", Color::Blue, iv(int(1), int(1)));
        let n = normalize_bluered(&m);
        assert_eq!(n.get("p").unwrap().1, iv(rat(1, 2), rat(5, 8)));
    }

    #[test]
    fn normalize_coincident_points_and_right_endpoint() {
        let mut m = BlueRedModel::default();
        m.insert("a", Color::Blue, iv(int(3), int(3)));
        m.insert("b", Color::Blue, iv(int(3), int(3)));
        let n = normalize_bluered(&m);
        assert!(is_normalized(&n));
        assert_eq!(n.induced_graph(), m.induced_graph());

        // A red point at the right end of a blue interval is contained in it.
        let mut m = BlueRedModel::default();
        m.insert("b", Color::Blue, iv(int(0), int(2)));
        m.insert("r", Color::Red, iv(int(2), int(2)));
        let n = normalize_bluered(&m);
        assert!(is_normalized(&n));
        assert_eq!(n.induced_graph().edge_count(), 1);
    }

    #[test]
    fn bluered_to_root_examples() {
        let g = p3();
        let root = bluered_to_linear_leafroot(&g, &normalize_bluered(&p3_model())).unwrap();
        assert!(root.legs.iter().all(|l| l.as_ref().unwrap().weight.is_zero()));
        assert_eq!(root.spine_weights, vec![int(1), int(1)]);
        assert!(verify_linear_leafroot(&g, &root).unwrap().is_valid());

        let k2 = Graph::new(["u", "v"], [("u", "v")]).unwrap();
        let mut m = BlueRedModel::default();
        m.insert("u", Color::Blue, iv(int(0), int(1)));
        m.insert("v", Color::Red, iv(rat(1, 4), rat(3, 4)));
        let root = bluered_to_linear_leafroot(&k2, &m).unwrap();
        let pos = root.positions();
        assert_eq!(root.spine_weights, vec![int(0)]);
        assert_eq!(root.leg_distance(&pos, 0, 1).unwrap(), rat(3, 4));

        assert!(matches!(bluered_to_linear_leafroot(&g, &p3_model().map_intervals(|_, i| i.map(|x| x * int(2)))), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn root_to_bluered_examples() {
        let g = p3();
        let root = bluered_to_linear_leafroot(&g, &p3_model()).unwrap();
        let back = linear_leafroot_to_bluered(&g, &root).unwrap();
        assert!(verify_bluered_model(&g, &back).unwrap().is_valid());
        let mids: Vec<_> = ["a", "b", "c"].iter().map(|v| back.get(v).unwrap().1.midpoint()).collect();
        assert_eq!(mids, vec![int(0), int(1), int(2)]);

        let single = Graph::new(["s"], Vec::<(&str, &str)>::new()).unwrap();
        let root = LinearLeafRoot { legs: vec![Some(Leg { vertex: "s".into(), weight: rat(1, 2) })], spine_weights: vec![] };
        assert!(verify_linear_leafroot(&single, &root).unwrap().is_valid());

        let k2 = Graph::new(["u", "v"], [("u", "v")]).unwrap();
        let root = LinearLeafRoot {
            legs: vec![Some(Leg { vertex: "u".into(), weight: int(0) }), Some(Leg { vertex: "v".into(), weight: rat(3, 4) })],
            spine_weights: vec![rat(1, 4)],
        };
        let m = linear_leafroot_to_bluered(&k2, &root).unwrap();
        let (c, i) = m.get("v").unwrap();
        assert_eq!((*c, i.length()), (Color::Red, rat(1, 2)));
        assert!(verify_bluered_model(&k2, &m).unwrap().is_valid());
    }

    #[test]
    fn leafroot_boundary_distance_is_adjacent() {
        let k2 = Graph::new(["u", "v"], [("u", "v")]).unwrap();
        let root = LinearLeafRoot {
            legs: vec![Some(Leg { vertex: "u".into(), weight: rat(1, 2) }), Some(Leg { vertex: "v".into(), weight: rat(1, 2) })],
            spine_weights: vec![int(0)],
        };
        assert!(verify_linear_leafroot(&k2, &root).unwrap().is_valid());
        let empty = Graph::new(["u", "v"], Vec::<(&str, &str)>::new()).unwrap();
        let report = verify_linear_leafroot(&empty, &root).unwrap();
        assert_eq!(report.discrepancies.len(), 1);
        assert!(verify_general_leafroot(&k2, &root.to_general()).unwrap().is_valid());
        assert!(!verify_general_leafroot(&empty, &root.to_general()).unwrap().is_valid());
    }

    #[test]
    fn rejects_bad_weights() {
        let k1 = Graph::new(["u"], Vec::<(&str, &str)>::new()).unwrap();
        let root = LinearLeafRoot { legs: vec![Some(Leg { vertex: "u".into(), weight: rat(3, 2) })], spine_weights: vec![] };
        assert!(verify_linear_leafroot(&k1, &root).is_err());
        assert!(linear_leafroot_to_bluered(&k1, &root).is_err());
    }

    #[test]
    fn isolated_vertices_round_trip() {
        let g = Graph::new(["a", "b", "c"], [("a", "b")]).unwrap();
        let root = LinearLeafRoot {
            legs: vec![
                Some(Leg { vertex: "a".into(), weight: int(0) }),
                Some(Leg { vertex: "b".into(), weight: rat(1, 2) }),
                None,
                Some(Leg { vertex: "c".into(), weight: int(1) }),
            ],
            spine_weights: vec![rat(1, 2), int(1), int(1)],
        };
        assert!(verify_linear_leafroot(&g, &root).unwrap().is_valid());
        let m = linear_leafroot_to_bluered(&g, &root).unwrap();
        assert!(verify_bluered_model(&g, &m).unwrap().is_valid());
    }
}
