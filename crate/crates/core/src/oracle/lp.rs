//! Exact rational linear programming.
//!
//! Dense two-phase simplex with Bland's rule over [`Q`]. All variables are
//! non-negative; constraints carry a sense flag. A separate Fourier–Motzkin
//! eliminator decides feasibility of tiny systems by an unrelated route.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

/// `optimize c.x  s.t.  a_i . x (sense_i) b_i,  x >= 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    rows: Vec<Vec<Q>>,
    rhs: Vec<Q>,
    senses: Vec<Sense>,
    objective: Vec<Q>,
    direction: Direction,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Q, x: Vec<Q> },
}

impl LinearProgram {
    /// A feasibility problem (zero objective) in `num_vars` variables.
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            rows: Vec::new(),
            rhs: Vec::new(),
            senses: Vec::new(),
            objective: vec![Q::zero(); num_vars],
            direction: Direction::Minimize,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_constraints(&self) -> usize {
        self.rows.len()
    }

    pub fn add_constraint(&mut self, row: Vec<Q>, sense: Sense, rhs: Q) -> Result<()> {
        if row.len() != self.num_vars {
            return Err(Error::Dimension {
                expected: self.num_vars,
                found: row.len(),
            });
        }
        self.rows.push(row);
        self.senses.push(sense);
        self.rhs.push(rhs);
        Ok(())
    }

    pub fn set_objective(&mut self, objective: Vec<Q>, direction: Direction) -> Result<()> {
        if objective.len() != self.num_vars {
            return Err(Error::Dimension {
                expected: self.num_vars,
                found: objective.len(),
            });
        }
        self.objective = objective;
        self.direction = direction;
        Ok(())
    }

    /// Checks `x` against every constraint and the sign restrictions.
    pub fn is_feasible_point(&self, x: &[Q]) -> bool {
        if x.len() != self.num_vars || x.iter().any(|v| v.is_negative()) {
            return false;
        }
        self.rows
            .iter()
            .zip(&self.senses)
            .zip(&self.rhs)
            .all(|((row, s), b)| {
                let lhs: Q = row.iter().zip(x).map(|(a, v)| a * v).sum();
                match s {
                    Sense::Le => lhs <= *b,
                    Sense::Ge => lhs >= *b,
                    Sense::Eq => lhs == *b,
                }
            })
    }

    pub fn objective_value(&self, x: &[Q]) -> Q {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run(self)
    }
}

/// Exact feasibility with a witness point when feasible.
pub fn lp_feasible(lp: &LinearProgram) -> Option<Vec<Q>> {
    let mut feas = lp.clone();
    feas.objective = vec![Q::zero(); lp.num_vars];
    match feas.solve() {
        LpOutcome::Optimal { x, .. } => Some(x),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}

struct Tableau {
    // m rows of (coefficients..., rhs)
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    num_cols: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let m = lp.rows.len();
        let n = lp.num_vars;
        // normalise to b >= 0
        let mut rows = Vec::with_capacity(m);
        let mut senses = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        for i in 0..m {
            if lp.rhs[i].is_negative() {
                rows.push(lp.rows[i].iter().map(|a| -a).collect::<Vec<_>>());
                rhs.push(-&lp.rhs[i]);
                senses.push(match lp.senses[i] {
                    Sense::Le => Sense::Ge,
                    Sense::Ge => Sense::Le,
                    Sense::Eq => Sense::Eq,
                });
            } else {
                rows.push(lp.rows[i].clone());
                rhs.push(lp.rhs[i].clone());
                senses.push(lp.senses[i]);
            }
        }
        let num_slack = senses.iter().filter(|s| **s != Sense::Eq).count();
        let num_art = senses.iter().filter(|s| **s != Sense::Le).count();
        let first_artificial = n + num_slack;
        let num_cols = first_artificial + num_art;

        let mut table = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut slack, mut art) = (n, first_artificial);
        for i in 0..m {
            let mut r = rows[i].clone();
            r.resize(num_cols + 1, Q::zero());
            match senses[i] {
                Sense::Le => {
                    r[slack] = Q::one();
                    basis.push(slack);
                    slack += 1;
                }
                Sense::Ge => {
                    r[slack] = -Q::one();
                    slack += 1;
                    r[art] = Q::one();
                    basis.push(art);
                    art += 1;
                }
                Sense::Eq => {
                    r[art] = Q::one();
                    basis.push(art);
                    art += 1;
                }
            }
            r[num_cols] = rhs[i].clone();
            table.push(r);
        }
        Self {
            rows: table,
            basis,
            num_cols,
            first_artificial,
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for v in self.rows[r].iter_mut() {
                *v /= &p;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Minimises `cost . x` over columns `< allowed`; returns false if unbounded.
    fn minimize(&mut self, cost: &[Q], allowed: usize) -> bool {
        let rhs = self.num_cols;
        loop {
            // reduced costs: c_j - c_B B^-1 A_j, tableau already holds B^-1 A
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut red = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        red -= &cost[b] * &self.rows[i][j];
                    }
                }
                if red.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[rhs] / &row[c];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn run(mut self, lp: &LinearProgram) -> LpOutcome {
        let n = lp.num_vars;
        let rhs = self.num_cols;
        if self.num_cols > self.first_artificial {
            let mut cost = vec![Q::zero(); self.num_cols];
            for c in cost.iter_mut().skip(self.first_artificial) {
                *c = Q::one();
            }
            self.minimize(&cost, self.num_cols);
            let infeas: Q = self
                .basis
                .iter()
                .zip(&self.rows)
                .filter(|(&b, _)| b >= self.first_artificial)
                .map(|(_, r)| r[rhs].clone())
                .sum();
            if infeas.is_positive() {
                return LpOutcome::Infeasible;
            }
            // drive remaining (zero-level) artificials out of the basis
            let mut i = 0;
            while i < self.rows.len() {
                if self.basis[i] >= self.first_artificial {
                    match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                        Some(j) => {
                            self.pivot(i, j);
                            i += 1;
                        }
                        None => {
                            // redundant row
                            self.rows.remove(i);
                            self.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
        }
        let mut cost = vec![Q::zero(); self.num_cols];
        for (j, c) in lp.objective.iter().enumerate() {
            cost[j] = match lp.direction {
                Direction::Minimize => c.clone(),
                Direction::Maximize => -c,
            };
        }
        if !self.minimize(&cost, self.first_artificial) {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![Q::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rows[i][rhs].clone();
            }
        }
        let value = lp.objective_value(&x);
        LpOutcome::Optimal { value, x }
    }
}

/// Feasibility by Fourier–Motzkin elimination. Only for tiny systems: the
/// number of derived inequalities grows doubly exponentially.
pub fn fourier_motzkin_feasible(lp: &LinearProgram) -> Result<bool> {
    const MAX_VARS: usize = 4;
    if lp.num_vars > MAX_VARS {
        return Err(Error::Resource {
            what: "Fourier-Motzkin variables",
            value: lp.num_vars,
            limit: MAX_VARS,
        });
    }
    let n = lp.num_vars;
    // every system becomes a list of `a . x <= b`
    let mut ineqs: Vec<(Vec<Q>, Q)> = Vec::new();
    for ((row, s), b) in lp.rows.iter().zip(&lp.senses).zip(&lp.rhs) {
        if matches!(s, Sense::Le | Sense::Eq) {
            ineqs.push((row.clone(), b.clone()));
        }
        if matches!(s, Sense::Ge | Sense::Eq) {
            ineqs.push((row.iter().map(|a| -a).collect(), -b));
        }
    }
    for j in 0..n {
        let mut e = vec![Q::zero(); n];
        e[j] = -Q::one();
        ineqs.push((e, Q::zero()));
    }
    for var in 0..n {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (a, b) in ineqs {
            if a[var].is_positive() {
                pos.push((a, b));
            } else if a[var].is_negative() {
                neg.push((a, b));
            } else {
                rest.push((a, b));
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let sp = an[var].abs();
                let sn = ap[var].clone();
                let a: Vec<Q> = ap.iter().zip(an).map(|(x, y)| x * &sp + y * &sn).collect();
                let b = bp * &sp + bn * &sn;
                rest.push((a, b));
            }
        }
        rest.sort();
        rest.dedup();
        ineqs = rest;
    }
    Ok(ineqs.iter().all(|(_, b)| !b.is_negative()))
}
