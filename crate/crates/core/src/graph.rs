//! Undirected simple graphs over named vertices.
//!
//! Vertex names are mapped to dense indices `0..n` in insertion order and all
//! set manipulation goes through [`VertexSet`], a bitset over those indices.
//! A [`Graph`] is never mutated in place; the editing helpers return new
//! graphs.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A set of vertex indices of some host graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        Self { bits: FixedBitSet::with_capacity(capacity) }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        Self { bits }
    }

    pub fn from_indices(capacity: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(capacity);
        for v in indices {
            set.insert(v);
        }
        set
    }

    pub fn singleton(capacity: usize, v: usize) -> Self {
        Self::from_indices(capacity, [v])
    }

    /// Size of the host vertex range, not the number of members.
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Self { bits }
    }

    pub fn union_with(&mut self, other: &Self) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.bits.difference_with(&other.bits);
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected simple graph with named vertices.
#[derive(Clone)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<VertexSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().map(|(u, v)| (self.name(u), self.name(v))).collect();
        f.debug_struct("Graph").field("vertices", &self.names).field("edges", &edges).finish()
    }
}

impl Graph {
    /// Builds a graph from vertex names and named edges. Vertices mentioned
    /// only in `edges` are rejected; list them in `vertices`.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let names: Vec<String> = vertices.into_iter().map(|s| s.as_ref().to_owned()).collect();
        let mut graph = Self::edgeless(names)?;
        let mut pairs = Vec::new();
        for (u, v) in edges {
            let ui = graph.require(u.as_ref())?;
            let vi = graph.require(v.as_ref())?;
            pairs.push((ui, vi));
        }
        graph.add_index_edges(&pairs)?;
        Ok(graph)
    }

    /// Builds a graph from vertex names and index pairs.
    pub fn from_index_edges(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut graph = Self::edgeless(names)?;
        graph.add_index_edges(edges)?;
        Ok(graph)
    }

    /// Vertices named `v0, v1, ...`.
    pub fn with_order(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_index_edges((0..n).map(|i| format!("v{i}")).collect(), edges)
    }

    fn edgeless(names: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let n = names.len();
        Ok(Self { names, index, adjacency: vec![VertexSet::empty(n); n] })
    }

    fn add_index_edges(&mut self, edges: &[(usize, usize)]) -> Result<()> {
        let n = self.order();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(Error::SelfLoop(self.names[u].clone()));
            }
            if self.adjacency[u].contains(v) {
                return Err(Error::DuplicateEdge(self.names[u].clone(), self.names[v].clone()));
            }
            self.adjacency[u].insert(v);
            self.adjacency[v].insert(u);
        }
        Ok(())
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Resolves names into a vertex set, failing on unknown names.
    pub fn vertex_set<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Result<VertexSet> {
        let mut set = self.empty_set();
        for name in names {
            set.insert(self.require(name.as_ref())?);
        }
        Ok(set)
    }

    pub fn set_names(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.names[v].clone()).collect()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.order())
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    /// Edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Union of the neighborhoods of `set`, minus `set` itself.
    pub fn open_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in set.iter() {
            out.union_with(&self.adjacency[v]);
        }
        out.difference_with(set);
        out
    }

    /// Connected components of `G[within]`, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = self.empty_set();
        let mut components = Vec::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut component = self.empty_set();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                component.insert(v);
                for w in self.adjacency[v].iter() {
                    if within.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    /// `CC(G)`: the partition of `V(G)` into connected components.
    pub fn connected_components(&self) -> Partition {
        let all = self.all();
        let blocks = self.components_within(&all);
        Partition::from_canonical_blocks(all, blocks)
    }

    /// `CC(G - removed)` as a partition of `V(G) \ removed`.
    pub fn components_without(&self, removed: &VertexSet) -> Partition {
        let rest = self.all().difference(removed);
        let blocks = self.components_within(&rest);
        Partition::from_canonical_blocks(rest, blocks)
    }

    pub fn is_connected(&self) -> bool {
        self.components_within(&self.all()).len() <= 1
    }

    /// `G[set]`, keeping the host's relative vertex order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Graph {
        self.induced_subgraph_with_map(set).0
    }

    /// `G[set]` together with the host index of every subgraph vertex.
    pub fn induced_subgraph_with_map(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let host: Vec<usize> = set.iter().collect();
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in host.iter().enumerate() {
            local[v] = i;
        }
        let names: Vec<String> = host.iter().map(|&v| self.names[v].clone()).collect();
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let adjacency = host
            .iter()
            .map(|&v| {
                VertexSet::from_indices(
                    host.len(),
                    self.adjacency[v].iter().filter(|&w| set.contains(w)).map(|w| local[w]),
                )
            })
            .collect();
        (Graph { names, index, adjacency }, host)
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.adjacency[v])
        })
    }

    /// A clique no outside vertex is completely joined to.
    pub fn is_maximal_clique(&self, set: &VertexSet) -> bool {
        if !self.is_clique(set) {
            return false;
        }
        let mut common = self.all().difference(set);
        for v in set.iter() {
            common.intersect_with(&self.adjacency[v]);
        }
        common.is_empty()
    }

    /// `G - v`.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let mut keep = self.all();
        keep.remove(v);
        self.induced_subgraph(&keep)
    }

    /// Adds a new vertex joined to `neighbors`.
    pub fn with_vertex(&self, name: &str, neighbors: &VertexSet) -> Result<Graph> {
        if self.index.contains_key(name) {
            return Err(Error::DuplicateVertex(name.to_owned()));
        }
        let mut names = self.names.clone();
        names.push(name.to_owned());
        let new = self.order();
        let mut edges: Vec<_> = self.edges().collect();
        edges.extend(neighbors.iter().map(|w| (w, new)));
        Graph::from_index_edges(names, &edges)
    }

    /// Flips adjacency of `u` and `v`.
    pub fn toggle_edge(&self, u: usize, v: usize) -> Graph {
        assert_ne!(u, v, "cannot toggle a self-loop");
        let mut adjacency = self.adjacency.clone();
        if adjacency[u].contains(v) {
            adjacency[u].remove(v);
            adjacency[v].remove(u);
        } else {
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Graph { names: self.names.clone(), index: self.index.clone(), adjacency }
    }

    /// Same vertex names, edges compared by name. Vertex order may differ.
    pub fn same_graph(&self, other: &Graph) -> bool {
        if self.order() != other.order() || self.edge_count() != other.edge_count() {
            return false;
        }
        let Some(map): Option<Vec<usize>> =
            self.names.iter().map(|s| other.index_of(s)).collect()
        else {
            return false;
        };
        self.edges().all(|(u, v)| other.has_edge(map[u], map[v]))
    }
}
