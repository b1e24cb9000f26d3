//! Two-phase dense tableau simplex over exact rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::program::{LinearProgram, LpSolution, Relation, Sense, Sign, Status};
use super::LpError;
use crate::rational::Rational;

struct Tableau {
    /// `rows[r]` holds the coefficient row followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.cols]
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.rows[r][j].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let factor = row[j].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = j;
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .map(|(r, &b)| &cost[b] * self.rhs(r))
            .sum()
    }

    /// Minimises `cost · x` over columns with `allowed[j]`.
    fn run(&mut self, cost: &[Rational], allowed: &[bool]) -> Outcome {
        loop {
            // Bland: lowest-index column with negative reduced cost enters.
            let entering = (0..self.cols).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && {
                    let reduced: Rational = self
                        .basis
                        .iter()
                        .enumerate()
                        .filter(|(r, _)| !self.rows[*r][j].is_zero())
                        .map(|(r, &b)| &cost[b] * &self.rows[r][j])
                        .sum();
                    (&cost[j] - reduced).is_negative()
                }
            });
            let Some(j) = entering else {
                return Outcome::Optimal;
            };

            // Minimum ratio; ties go to the lowest basic column index.
            let mut leaving: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &leaving {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[r] < self.basis[*best])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
            match leaving {
                Some((r, _)) => self.pivot(r, j),
                None => return Outcome::Unbounded,
            }
        }
    }
}

/// Solves `lp` exactly. Infeasibility and unboundedness are reported through
/// [`Status`]; an optimal assignment is re-checked against the original
/// program before it is returned.
pub fn solve(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    lp.validate()?;

    // Structural columns: one per non-negative variable, two (x⁺, x⁻) per free one.
    let mut columns: Vec<(usize, Option<usize>)> = Vec::with_capacity(lp.variables.len());
    let mut structural = 0;
    for var in &lp.variables {
        let pos = structural;
        structural += 1;
        let neg = (var.sign == Sign::Free).then(|| {
            structural += 1;
            structural - 1
        });
        columns.push((pos, neg));
    }

    // Normalise rows to rhs >= 0, then count slack and artificial columns.
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
    for c in &lp.constraints {
        let mut row = vec![Rational::zero(); structural];
        for (k, coef) in c.coefficients.iter().enumerate() {
            let (pos, neg) = columns[k];
            row[pos] = coef.clone();
            if let Some(neg) = neg {
                row[neg] = -coef;
            }
        }
        let (mut rel, mut rhs) = (c.relation, c.rhs.clone());
        if rhs.is_negative() {
            row.iter_mut().for_each(|v| *v = -&*v);
            rhs = -rhs;
            rel = match rel {
                Relation::Ge => Relation::Le,
                Relation::Le => Relation::Ge,
                Relation::Eq => Relation::Eq,
            };
        }
        rows.push((row, rel, rhs));
    }
    let slacks = rows
        .iter()
        .filter(|(_, rel, _)| *rel != Relation::Eq)
        .count();
    let artificials = rows
        .iter()
        .filter(|(_, rel, _)| *rel != Relation::Le)
        .count();
    let cols = structural + slacks + artificials;

    let mut tab = Tableau {
        rows: Vec::with_capacity(rows.len()),
        basis: Vec::new(),
        cols,
    };
    let mut is_artificial = vec![false; cols];
    let (mut next_slack, mut next_art) = (structural, structural + slacks);
    for (row, rel, rhs) in rows {
        let mut full = row;
        full.resize(cols + 1, Rational::zero());
        full[cols] = rhs;
        match rel {
            Relation::Le => {
                full[next_slack] = Rational::one();
                tab.basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge | Relation::Eq => {
                if rel == Relation::Ge {
                    full[next_slack] = -Rational::one();
                    next_slack += 1;
                }
                full[next_art] = Rational::one();
                is_artificial[next_art] = true;
                tab.basis.push(next_art);
                next_art += 1;
            }
        }
        tab.rows.push(full);
    }

    if artificials > 0 {
        let phase1: Vec<Rational> = is_artificial
            .iter()
            .map(|&a| if a { Rational::one() } else { Rational::zero() })
            .collect();
        tab.run(&phase1, &vec![true; cols]);
        if tab.objective(&phase1).is_positive() {
            return Ok(LpSolution {
                status: Status::Infeasible,
                value: None,
                assignment: Vec::new(),
            });
        }
        // Artificials left in the basis sit at zero; pivot them out or drop
        // their (redundant) rows.
        let mut r = 0;
        while r < tab.rows.len() {
            if is_artificial[tab.basis[r]] {
                match (0..cols).find(|&j| !is_artificial[j] && !tab.rows[r][j].is_zero()) {
                    Some(j) => tab.pivot(r, j),
                    None => {
                        tab.rows.remove(r);
                        tab.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    let mut cost = vec![Rational::zero(); cols];
    for (k, coef) in lp.objective.iter().enumerate() {
        let c = if lp.sense == Sense::Maximize {
            -coef
        } else {
            coef.clone()
        };
        let (pos, neg) = columns[k];
        if let Some(neg) = neg {
            cost[neg] = -&c;
        }
        cost[pos] = c;
    }
    let allowed: Vec<bool> = is_artificial.iter().map(|a| !a).collect();
    if let Outcome::Unbounded = tab.run(&cost, &allowed) {
        return Ok(LpSolution {
            status: Status::Unbounded,
            value: None,
            assignment: Vec::new(),
        });
    }

    let mut column_value = vec![Rational::zero(); cols];
    for (r, &b) in tab.basis.iter().enumerate() {
        column_value[b] = tab.rhs(r).clone();
    }
    let values: Vec<Rational> = columns
        .iter()
        .map(|&(pos, neg)| match neg {
            Some(neg) => &column_value[pos] - &column_value[neg],
            None => column_value[pos].clone(),
        })
        .collect();

    if !lp.is_feasible_point(&values) {
        return Err(LpError::Verification(
            "optimal basis violates a constraint".into(),
        ));
    }
    let value = lp.objective_value(&values);
    let mut tableau_value = tab.objective(&cost);
    if lp.sense == Sense::Maximize {
        tableau_value = -tableau_value;
    }
    if value != tableau_value {
        return Err(LpError::Verification(format!(
            "objective re-evaluates to {value}, tableau reports {tableau_value}"
        )));
    }

    let assignment = lp
        .variables
        .iter()
        .map(|v| v.name.clone())
        .zip(values)
        .collect();
    Ok(LpSolution {
        status: Status::Optimal,
        value: Some(value),
        assignment,
    })
}
