//! Clique paths, interval recognition and the X-interval test.
//!
//! Interval recognition orders the maximal cliques so that every vertex
//! occupies a consecutive run (a consecutive-ones arrangement of the
//! vertex/clique incidence sets). The arrangement is built one overlap
//! component at a time: within a component the order of its classes is forced
//! up to reversal, and the remaining sets either nest inside a single class or
//! treat the component's union as one element.

use serde_json::Value;

use crate::chordal::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Maximal cliques in path order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePath {
    pub cliques: Vec<VertexSet>,
}

impl CliquePath {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn last(&self) -> Option<&VertexSet> {
        self.cliques.last()
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        Value::Array(
            self.cliques
                .iter()
                .map(|c| Value::Array(g.set_names(c).into_iter().map(Value::String).collect()))
                .collect(),
        )
    }
}

/// True when `cliques` lists each maximal clique of `g` exactly once and every
/// vertex occurs in a consecutive run. Independent of how the path was built.
pub fn verify_clique_path(g: &Graph, cliques: &[VertexSet]) -> bool {
    for (i, c) in cliques.iter().enumerate() {
        if c.capacity() != g.order() || !g.is_maximal_clique(c) || cliques[..i].contains(c) {
            return false;
        }
    }
    // By the Helly property of subpaths, covering every edge with a contiguous
    // arrangement forces every maximal clique to be listed.
    if !consecutive_runs(g.order(), cliques) {
        return false;
    }
    let covered = |u: usize, v: usize| cliques.iter().any(|c| c.contains(u) && c.contains(v));
    (0..g.order()).all(|v| cliques.iter().any(|c| c.contains(v))) && g.edges().all(|(u, v)| covered(u, v))
}

/// Every vertex appears in a consecutive run of `cliques`.
pub fn consecutive_runs(n: usize, cliques: &[VertexSet]) -> bool {
    let mut state = vec![0u8; n]; // 0 unseen, 1 open, 2 closed
    for c in cliques {
        for (v, s) in state.iter_mut().enumerate() {
            match (*s, c.contains(v)) {
                (0, true) => *s = 1,
                (1, false) => *s = 2,
                (2, true) => return false,
                _ => {}
            }
        }
    }
    true
}

/// Orders `ground` so that every set in `sets` is consecutive, if possible.
/// Sets are given over a universe of `capacity` elements and must lie inside
/// `ground`.
pub fn consecutive_ones_order(capacity: usize, ground: &[usize], sets: &[VertexSet]) -> Option<Vec<usize>> {
    let ground_set = VertexSet::from_indices(capacity, ground.iter().copied());
    if sets.iter().any(|s| !s.is_subset(&ground_set)) {
        return None;
    }
    c1p(ground.to_vec(), sets.to_vec())
}

fn overlaps(a: &VertexSet, b: &VertexSet) -> bool {
    a.intersects(b) && !a.is_subset(b) && !b.is_subset(a)
}

fn c1p(ground: Vec<usize>, sets: Vec<VertexSet>) -> Option<Vec<usize>> {
    let Some(cap) = sets.first().map(VertexSet::capacity) else {
        return Some(ground);
    };
    let ground_set = VertexSet::from_indices(cap, ground.iter().copied());
    let mut pending: Vec<VertexSet> = Vec::new();
    for s in sets {
        if s.len() >= 2 && s != ground_set && !pending.contains(&s) {
            pending.push(s);
        }
    }
    if pending.is_empty() {
        return Some(ground);
    }

    // Overlap component of the first set, in discovery order.
    let mut in_comp = vec![false; pending.len()];
    in_comp[0] = true;
    let mut comp = vec![0];
    let mut head = 0;
    while head < comp.len() {
        let s = comp[head];
        head += 1;
        for t in 0..pending.len() {
            if !in_comp[t] && overlaps(&pending[s], &pending[t]) {
                in_comp[t] = true;
                comp.push(t);
            }
        }
    }

    let classes = arrange_component(comp.iter().map(|&i| &pending[i]))?;
    let mut union = VertexSet::empty(cap);
    for c in &classes {
        union.union_with(c);
    }

    let mut outer_sets = Vec::new();
    let mut inner_sets: Vec<Vec<VertexSet>> = vec![Vec::new(); classes.len()];
    let rep = union.first().expect("component is non-empty");
    for (i, s) in pending.into_iter().enumerate() {
        if in_comp[i] {
            continue;
        }
        if union.is_subset(&s) {
            let mut contracted = s.difference(&union);
            contracted.insert(rep);
            outer_sets.push(contracted);
        } else if s.is_disjoint(&union) {
            outer_sets.push(s);
        } else {
            let k = classes.iter().position(|c| s.is_subset(c))?;
            inner_sets[k].push(s);
        }
    }

    let mut outer_ground: Vec<usize> = ground.iter().copied().filter(|&e| !union.contains(e)).collect();
    outer_ground.push(rep);
    let outer = c1p(outer_ground, outer_sets)?;
    let mut expanded = Vec::with_capacity(ground.len());
    for e in outer {
        if e == rep {
            for (k, class) in classes.iter().enumerate() {
                expanded.extend(c1p(class.to_vec(), std::mem::take(&mut inner_sets[k]))?);
            }
        } else {
            expanded.push(e);
        }
    }
    Some(expanded)
}

/// Places the sets of one overlap component (each overlapping an earlier one)
/// and returns the forced sequence of classes.
fn arrange_component<'a>(mut sets: impl Iterator<Item = &'a VertexSet>) -> Option<Vec<VertexSet>> {
    let first = sets.next()?;
    let mut classes = vec![first.clone()];
    let mut union = first.clone();
    for s in sets {
        let inside = s.intersection(&union);
        let outside = s.difference(&union);
        let touched: Vec<usize> = (0..classes.len()).filter(|&k| classes[k].intersects(&inside)).collect();
        let (a, b) = (*touched.first()?, *touched.last()?);
        if touched.len() != b - a + 1 || (a + 1..b).any(|k| !classes[k].is_subset(&inside)) {
            return None;
        }
        let full = |k: usize| classes[k].is_subset(&inside);
        let last = classes.len() - 1;
        let mut next = Vec::with_capacity(classes.len() + 2);
        if !outside.is_empty() {
            if b == last && (a == b || full(b)) {
                next.extend(classes[..a].iter().cloned());
                push_nonempty(&mut next, classes[a].difference(&inside));
                push_nonempty(&mut next, classes[a].intersection(&inside));
                next.extend(classes[a + 1..].iter().cloned());
                next.push(outside.clone());
            } else if a == 0 && (a == b || full(a)) {
                next.push(outside.clone());
                next.extend(classes[..b].iter().cloned());
                push_nonempty(&mut next, classes[b].intersection(&inside));
                push_nonempty(&mut next, classes[b].difference(&inside));
                next.extend(classes[b + 1..].iter().cloned());
            } else {
                return None;
            }
        } else {
            if a == b {
                return None;
            }
            next.extend(classes[..a].iter().cloned());
            push_nonempty(&mut next, classes[a].difference(&inside));
            push_nonempty(&mut next, classes[a].intersection(&inside));
            next.extend(classes[a + 1..b].iter().cloned());
            push_nonempty(&mut next, classes[b].intersection(&inside));
            push_nonempty(&mut next, classes[b].difference(&inside));
            next.extend(classes[b + 1..].iter().cloned());
        }
        classes = next;
        union.union_with(&outside);
    }
    Some(classes)
}

fn push_nonempty(out: &mut Vec<VertexSet>, set: VertexSet) {
    if !set.is_empty() {
        out.push(set);
    }
}

/// Orders `cliques` (the maximal cliques of `g`) into a clique path, if one exists.
pub fn order_cliques(g: &Graph, cliques: &[VertexSet]) -> Option<CliquePath> {
    let k = cliques.len();
    let occurrences: Vec<VertexSet> = (0..g.order())
        .map(|v| VertexSet::from_indices(k, (0..k).filter(|&i| cliques[i].contains(v))))
        .collect();
    let ground: Vec<usize> = (0..k).collect();
    let order = consecutive_ones_order(k, &ground, &occurrences)?;
    let path: Vec<VertexSet> = order.into_iter().map(|i| cliques[i].clone()).collect();
    verify_clique_path(g, &path).then_some(CliquePath { cliques: path })
}

/// A clique path of `g`, or `None` when `g` is not an interval graph.
pub fn recognize_interval(g: &Graph) -> Option<CliquePath> {
    let cliques = maximal_cliques(g).ok()?;
    order_cliques(g, &cliques)
}

fn fresh_name(g: &Graph, base: &str) -> String {
    let mut name = base.to_owned();
    while g.index_of(&name).is_some() {
        name.push('\'');
    }
    name
}

/// The graph `G′` obtained by adding `u`, `v` with `N(u) = {v}` and
/// `N(v) = {u} ∪ x`. Returns it with the indices of `u` and `v`.
pub fn x_interval_gadget(g: &Graph, x: &VertexSet) -> Result<(Graph, usize, usize)> {
    let n = g.order();
    let v_name = fresh_name(g, "gadget_v");
    let with_v = g.with_vertex(&v_name, x)?;
    let u_name = fresh_name(&with_v, "gadget_u");
    let with_u = with_v.with_vertex(&u_name, &VertexSet::singleton(n + 1, n))?;
    Ok((with_u, n + 1, n))
}

/// A clique path of `g` ending in `x`, or `None` when `g` is not X-interval.
/// Decided through the gadget graph: `g` is X-interval iff the gadget is interval.
pub fn is_x_interval(g: &Graph, x: &VertexSet) -> Result<Option<CliquePath>> {
    if !g.is_maximal_clique(x) {
        return Err(Error::NotMaximalClique);
    }
    let n = g.order();
    let (gadget, u, v) = x_interval_gadget(g, x)?;
    let Some(path) = recognize_interval(&gadget) else {
        return Ok(None);
    };
    let mut seq = path.cliques;
    let uv = seq.iter().position(|c| c.contains(u)).expect("u is covered");
    let xv = seq.iter().position(|c| c.contains(v) && !c.contains(u)).expect("x ∪ {v} is a clique");
    if xv < uv {
        seq.reverse();
    }
    let uv = seq.iter().position(|c| c.contains(u)).expect("u is covered");
    // seq = A, {u,v}, X∪{v}, B; nothing in A touches X or B.
    let shrink = |c: &VertexSet| VertexSet::from_indices(n, c.iter().filter(|&w| w < n));
    let mut cliques: Vec<VertexSet> = seq[..uv].iter().map(shrink).collect();
    cliques.extend(seq[uv + 2..].iter().rev().map(shrink));
    cliques.push(x.clone());
    debug_assert!(verify_clique_path(g, &cliques));
    Ok(Some(CliquePath { cliques }))
}

/// `is_x_interval` on `G[x ∪ s]`, with the path mapped back to host indices.
pub fn is_x_interval_on(g: &Graph, x: &VertexSet, s: &VertexSet) -> Result<Option<CliquePath>> {
    let (sub, map) = g.induced_subgraph_with_map(&x.union(s));
    let local_x = VertexSet::from_indices(sub.order(), (0..sub.order()).filter(|&i| x.contains(map[i])));
    Ok(is_x_interval(&sub, &local_x)?.map(|path| CliquePath {
        cliques: path
            .cliques
            .iter()
            .map(|c| VertexSet::from_indices(g.order(), c.iter().map(|i| map[i])))
            .collect(),
    }))
}

/// X-intervality of `G[x ∪ s]` when `x` is a maximal clique there, as a plain decision.
pub fn is_x_interval_block(g: &Graph, x: &VertexSet, s: &VertexSet) -> bool {
    matches!(is_x_interval_on(g, x, s), Ok(Some(_)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_sun() -> Graph {
        Graph::new(
            ["x", "y", "z", "a", "b", "c"],
            [("x", "y"), ("y", "z"), ("x", "z"), ("a", "x"), ("a", "y"), ("b", "x"), ("b", "z"), ("c", "y"), ("c", "z")],
        )
        .unwrap()
    }

    #[test]
    fn path_graph_is_interval() {
        let g = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let path = recognize_interval(&g).unwrap();
        let names: Vec<_> = path.cliques.iter().map(|c| g.set_names(c)).collect();
        let forward = vec![vec!["a", "b"], vec!["b", "c"], vec!["c", "d"]];
        let mut backward = forward.clone();
        backward.reverse();
        assert!(names == forward || names == backward);
    }

    #[test]
    fn non_interval_examples() {
        let c4 = Graph::with_order(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(recognize_interval(&c4).is_none());
        assert!(recognize_interval(&three_sun()).is_none());
        // Claw with subdivided edges (asteroidal triple).
        let t = Graph::with_order(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(recognize_interval(&t).is_none());
    }

    #[test]
    fn disconnected_graphs_concatenate() {
        let g = Graph::with_order(5, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(recognize_interval(&g).unwrap().len(), 3);
    }

    #[test]
    fn x_interval_examples() {
        let k3 = Graph::with_order(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let path = is_x_interval(&k3, &k3.all()).unwrap().unwrap();
        assert_eq!(path.cliques, vec![k3.all()]);

        let sun = three_sun();
        let x = sun.vertex_set(["x", "y", "z"]).unwrap();
        assert!(is_x_interval_on(&sun, &x, &sun.vertex_set(["a", "b"]).unwrap()).unwrap().is_none());
        assert!(is_x_interval_on(&sun, &x, &sun.vertex_set(["a"]).unwrap()).unwrap().is_some());

        let merge = Graph::new(
            ["x", "y", "z", "a", "c", "p", "q"],
            [("x", "y"), ("y", "z"), ("x", "z"), ("a", "x"), ("c", "x"), ("p", "y"), ("q", "y")],
        )
        .unwrap();
        let x = merge.vertex_set(["x", "y", "z"]).unwrap();
        let path = is_x_interval_on(&merge, &x, &merge.vertex_set(["a", "c"]).unwrap()).unwrap().unwrap();
        assert_eq!(path.len(), 3);
        assert_eq!(path.last(), Some(&x));
        // A pendant on each side of X cannot both precede X.
        let p4 = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let mid = p4.vertex_set(["b", "c"]).unwrap();
        assert!(is_x_interval(&p4, &mid).unwrap().is_none());
        let end = p4.vertex_set(["c", "d"]).unwrap();
        assert!(is_x_interval(&p4, &end).unwrap().is_some());
    }

    #[test]
    fn x_must_be_maximal() {
        let k3 = Graph::with_order(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(is_x_interval(&k3, &VertexSet::from_indices(3, [0, 1])), Err(Error::NotMaximalClique));
    }

    #[test]
    fn x_interval_separated_parts_move_before_x() {
        // Component {d,e} far from X = {a,b}; a–c pendant.
        let g = Graph::new(["a", "b", "c", "d", "e"], [("a", "b"), ("a", "c"), ("d", "e")]).unwrap();
        let x = g.vertex_set(["a", "b"]).unwrap();
        let path = is_x_interval(&g, &x).unwrap().unwrap();
        assert!(verify_clique_path(&g, &path.cliques));
        assert_eq!(path.last(), Some(&x));
    }

    #[test]
    fn c1p_rejects_and_accepts() {
        let s = |v: &[usize]| VertexSet::from_indices(4, v.iter().copied());
        let ground = [0, 1, 2, 3];
        let order = consecutive_ones_order(4, &ground, &[s(&[0, 1]), s(&[1, 2]), s(&[2, 3])]).unwrap();
        assert!(order == vec![0, 1, 2, 3] || order == vec![3, 2, 1, 0]);
        assert!(consecutive_ones_order(4, &ground, &[s(&[0, 1]), s(&[0, 2]), s(&[0, 3])]).is_none());
    }
}
