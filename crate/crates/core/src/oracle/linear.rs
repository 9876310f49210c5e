//! Exhaustive linear-leaf-power decision for small graphs.
//!
//! For a spine order `v_1 … v_k` the caterpillar distance between `v_p` and
//! `v_q` is `a_p + (g_p + … + g_{q−1}) + a_q` with legs `a ∈ [0,1]` and spine
//! gaps `g ≥ 0`; an order is feasible iff the linear system (at most 1 on
//! edges, more than 1 on non-edges) is. Orders are grown one vertex at a time and a prefix is
//! abandoned as soon as its own system is infeasible.

use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linear::{verify_linear_leafroot, Leg, LinearLeafRoot};
use crate::oracle::simplex::{FeasibilitySystem, Relation};
use crate::rational::Rational;

fn prefix_system(g: &Graph, order: &[usize]) -> FeasibilitySystem {
    let k = order.len();
    let gap = |i: usize| i;
    let leg = |i: usize| k.saturating_sub(1) + i;
    let mut s = FeasibilitySystem::new(2 * k - 1);
    for p in 0..k {
        s.add(vec![(leg(p), Rational::one())], Relation::Le, Rational::one()).expect("declared");
        for q in p + 1..k {
            let mut terms = vec![(leg(p), Rational::one()), (leg(q), Rational::one())];
            terms.extend((p..q).map(|i| (gap(i), Rational::one())));
            let relation = if g.has_edge(order[p], order[q]) { Relation::Le } else { Relation::Gt };
            s.add(terms, relation, Rational::one()).expect("declared");
        }
    }
    s
}

/// Caterpillar from a solution; gaps longer than 1 are split by leafless
/// spine nodes so every spine weight stays in `[0, 1]`.
fn root_from_solution(g: &Graph, order: &[usize], x: &[Rational]) -> LinearLeafRoot {
    let k = order.len();
    let mut root = LinearLeafRoot::default();
    for (p, &v) in order.iter().enumerate() {
        if p > 0 {
            let mut rest = x[p - 1].clone();
            while rest > Rational::one() {
                root.spine_weights.push(Rational::one());
                root.legs.push(None);
                rest -= Rational::one();
            }
            root.spine_weights.push(rest);
        }
        root.legs.push(Some(Leg { vertex: g.name(v).to_owned(), weight: x[k - 1 + p].clone() }));
    }
    root
}

fn extend(g: &Graph, order: &mut Vec<usize>, used: &mut [bool]) -> Option<LinearLeafRoot> {
    if order.len() == g.order() {
        let x = prefix_system(g, order).solve()?;
        return Some(root_from_solution(g, order, &x));
    }
    for v in 0..g.order() {
        if used[v] {
            continue;
        }
        order.push(v);
        used[v] = true;
        let feasible = order.len() < 3 || prefix_system(g, order).solve().is_some();
        if feasible {
            if let Some(root) = extend(g, order, used) {
                return Some(root);
            }
        }
        order.pop();
        used[v] = false;
    }
    None
}

/// A verified linear leaf root of `g`, or `None` if there is none.
pub fn bruteforce_linear_leafpower(g: &Graph, limit: usize) -> Result<Option<LinearLeafRoot>> {
    if g.order() > limit {
        return Err(Error::SizeLimit { n: g.order(), limit });
    }
    if g.order() == 0 {
        return Ok(Some(LinearLeafRoot::default()));
    }
    let Some(root) = extend(g, &mut Vec::new(), &mut vec![false; g.order()]) else {
        return Ok(None);
    };
    if !verify_linear_leafroot(g, &root)?.is_valid() {
        return Err(Error::InvalidModel("solver produced a root that does not verify".into()));
    }
    Ok(Some(root))
}
