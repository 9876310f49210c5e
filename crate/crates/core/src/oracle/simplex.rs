//! Exact two-phase simplex over rationals, Bland's rule throughout.
//!
//! All variables are nonnegative. Strict inequalities are decided by
//! maximizing a margin `δ ∈ [0, 1]` added to every strict row and accepting
//! iff the optimum is positive.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
    Lt,
    Gt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub terms: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LinearConstraint {
    fn lhs(&self, x: &[Rational]) -> Rational {
        self.terms.iter().map(|(v, c)| c * &x[*v]).sum()
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Lt => lhs < self.rhs,
            Relation::Gt => lhs > self.rhs,
        }
    }
}

/// A system of linear constraints over nonnegative rational variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FeasibilitySystem {
    pub variables: usize,
    pub constraints: Vec<LinearConstraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Rational>, value: Rational },
}

impl FeasibilitySystem {
    pub fn new(variables: usize) -> Self {
        Self { variables, constraints: Vec::new() }
    }

    pub fn add(&mut self, terms: Vec<(usize, Rational)>, relation: Relation, rhs: Rational) -> Result<&mut Self> {
        if let Some((v, _)) = terms.iter().find(|(v, _)| *v >= self.variables) {
            return Err(Error::Precondition(format!("constraint uses undeclared variable {v}")));
        }
        self.constraints.push(LinearConstraint { terms, relation, rhs });
        Ok(self)
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.variables && x.iter().all(|v| !v.is_negative()) && self.constraints.iter().all(|c| c.holds(x))
    }

    /// A nonnegative point satisfying every constraint (strict ones strictly).
    pub fn solve(&self) -> Option<Vec<Rational>> {
        let strict = self.constraints.iter().any(|c| matches!(c.relation, Relation::Lt | Relation::Gt));
        if !strict {
            return match maximize(self.variables, &self.constraints, &vec![Rational::zero(); self.variables]) {
                LpOutcome::Optimal { x, .. } => Some(x),
                _ => None,
            };
        }
        let delta = self.variables;
        let mut rows: Vec<LinearConstraint> = self
            .constraints
            .iter()
            .map(|c| {
                let mut terms = c.terms.clone();
                let relation = match c.relation {
                    Relation::Lt => {
                        terms.push((delta, Rational::one()));
                        Relation::Le
                    }
                    Relation::Gt => {
                        terms.push((delta, -Rational::one()));
                        Relation::Ge
                    }
                    r => r,
                };
                LinearConstraint { terms, relation, rhs: c.rhs.clone() }
            })
            .collect();
        rows.push(LinearConstraint { terms: vec![(delta, Rational::one())], relation: Relation::Le, rhs: Rational::one() });
        let mut objective = vec![Rational::zero(); delta + 1];
        objective[delta] = Rational::one();
        match maximize(delta + 1, &rows, &objective) {
            LpOutcome::Optimal { mut x, value } if value.is_positive() => {
                x.truncate(delta);
                Some(x)
            }
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced costs of the current objective; last entry is its value.
    z: Vec<Rational>,
    columns: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        *v -= &f * pv;
                    }
                }
            }
        }
        if !self.z[c].is_zero() {
            let f = self.z[c].clone();
            for (v, pv) in self.z.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Sets the objective to maximize `c · x` and prices out the basis.
    fn set_objective(&mut self, c: &[Rational]) {
        self.z = c.iter().map(|v| -v.clone()).collect();
        self.z.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if !self.z[b].is_zero() {
                let f = self.z[b].clone();
                for (v, rv) in self.z.iter_mut().zip(&self.rows[i]) {
                    *v -= &f * rv;
                }
            }
        }
    }

    /// Runs to optimality over the allowed columns; `false` if unbounded.
    fn run(&mut self, allowed: &[bool]) -> bool {
        let rhs = self.columns;
        loop {
            let Some(enter) = (0..self.columns).find(|&j| allowed[j] && self.z[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[enter].is_positive() {
                    let ratio = &row[rhs] / &row[enter];
                    let better = match &leave {
                        None => true,
                        Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, enter);
        }
    }
}

/// Maximizes `objective · x` over `x ≥ 0` subject to non-strict rows.
pub fn maximize(variables: usize, constraints: &[LinearConstraint], objective: &[Rational]) -> LpOutcome {
    assert!(constraints.iter().all(|c| !matches!(c.relation, Relation::Lt | Relation::Gt)), "strict rows need a margin");
    let m = constraints.len();
    // Columns: original, one slack/surplus per inequality, one artificial per Ge/Eq row.
    let mut slack_of = vec![None; m];
    let mut art_of = vec![None; m];
    let mut columns = variables;
    let mut normalized = Vec::with_capacity(m);
    for (i, c) in constraints.iter().enumerate() {
        let flip = c.rhs.is_negative();
        let sign = if flip { -Rational::one() } else { Rational::one() };
        let relation = match (c.relation, flip) {
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
            (r, _) => r,
        };
        if relation != Relation::Eq {
            slack_of[i] = Some(columns);
            columns += 1;
        }
        normalized.push((c, sign, relation));
    }
    for (i, (_, _, relation)) in normalized.iter().enumerate() {
        if *relation != Relation::Le {
            art_of[i] = Some(columns);
            columns += 1;
        }
    }
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for (i, (c, sign, relation)) in normalized.iter().enumerate() {
        let mut row = vec![Rational::zero(); columns + 1];
        for (v, coef) in &c.terms {
            row[*v] += coef * sign;
        }
        row[columns] = &c.rhs * sign;
        match relation {
            Relation::Le => {
                row[slack_of[i].unwrap()] = Rational::one();
                basis.push(slack_of[i].unwrap());
            }
            Relation::Ge => {
                row[slack_of[i].unwrap()] = -Rational::one();
                row[art_of[i].unwrap()] = Rational::one();
                basis.push(art_of[i].unwrap());
            }
            _ => {
                row[art_of[i].unwrap()] = Rational::one();
                basis.push(art_of[i].unwrap());
            }
        }
        rows.push(row);
    }
    let is_art: Vec<bool> = (0..columns).map(|j| art_of.contains(&Some(j))).collect();
    let mut t = Tableau { rows, basis, z: Vec::new(), columns };

    if is_art.iter().any(|&a| a) {
        let phase1: Vec<Rational> = is_art.iter().map(|&a| if a { -Rational::one() } else { Rational::zero() }).collect();
        t.set_objective(&phase1);
        t.run(&vec![true; columns]);
        if t.z[columns].is_negative() {
            return LpOutcome::Infeasible;
        }
        // Drive remaining (zero-valued) artificials out of the basis.
        for r in 0..m {
            if is_art[t.basis[r]] {
                if let Some(c) = (0..columns).find(|&j| !is_art[j] && !t.rows[r][j].is_zero()) {
                    t.pivot(r, c);
                }
            }
        }
    }
    let mut full = objective.to_vec();
    full.resize(columns, Rational::zero());
    t.set_objective(&full);
    let allowed: Vec<bool> = is_art.iter().map(|a| !a).collect();
    if !t.run(&allowed) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); variables];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < variables {
            x[b] = t.rows[r][columns].clone();
        }
    }
    LpOutcome::Optimal { value: t.z[columns].clone(), x }
}
