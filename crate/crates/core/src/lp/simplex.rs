//! Two-phase dense tableau simplex with Bland's rule.
//!
//! Variables are shifted so every lower bound becomes zero, rows are
//! normalized to non-negative right-hand sides, `<=` rows receive a slack,
//! `>=` rows a surplus plus an artificial, `=` rows an artificial. Phase one
//! minimizes the artificial sum; phase two optimizes the real objective over
//! the structural and slack columns only.
//!
//! Entering column is the lowest-index column with a negative reduced cost;
//! ratio ties are broken by the lowest basic variable index. Both choices
//! are deterministic, so identical inputs produce bit-identical output.

use crate::error::{Error, Result};
use crate::lp::{check_feasible, dot, LinearProgram, Relation, Sense, Solution, Status};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Absolute tolerance on row slack and on the phase-one residual.
    pub feasibility_tol: f64,
    /// Reduced costs below `-optimality_tol * max|cost|` can enter.
    pub optimality_tol: f64,
    /// Column entries at or below this magnitude are not pivoted on.
    pub pivot_tol: f64,
    pub max_iterations: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            feasibility_tol: 1e-7,
            optimality_tol: 1e-11,
            pivot_tol: 1e-9,
            max_iterations: 50_000,
        }
    }
}

/// Solve with [`SolverOptions::default`].
pub fn solve(lp: &LinearProgram) -> Result<Solution> {
    solve_with(lp, &SolverOptions::default())
}

pub fn solve_with(lp: &LinearProgram, opts: &SolverOptions) -> Result<Solution> {
    lp.validate()?;
    let mut tableau = Tableau::build(lp);
    let n = lp.num_vars();

    let phase_one_cost: Vec<f64> = (0..tableau.cols)
        .map(|j| if j >= tableau.first_artificial { 1.0 } else { 0.0 })
        .collect();
    match tableau.optimize(&phase_one_cost, tableau.cols, opts)? {
        Outcome::Optimal => {}
        // the phase-one objective is bounded below by zero
        Outcome::Unbounded => {
            return Err(tableau.breakdown("phase one reported an unbounded ray"));
        }
    }
    let residual: f64 = tableau
        .basis
        .iter()
        .zip(&tableau.rows)
        .filter(|(&b, _)| b >= tableau.first_artificial)
        .map(|(_, row)| row[tableau.cols])
        .sum();
    if residual > opts.feasibility_tol {
        return Ok(Solution::without_point(Status::Infeasible, tableau.pivots));
    }
    tableau.drive_out_artificials(opts);

    let sign = match lp.sense {
        Sense::Maximize => -1.0,
        Sense::Minimize => 1.0,
    };
    let mut phase_two_cost = vec![0.0; tableau.cols];
    for (cost, c) in phase_two_cost.iter_mut().zip(&lp.objective) {
        *cost = sign * c;
    }
    if let Outcome::Unbounded = tableau.optimize(&phase_two_cost, tableau.first_artificial, opts)? {
        return Ok(Solution::without_point(Status::Unbounded, tableau.pivots));
    }

    let mut x = lp.var_lower.clone();
    for (row, &b) in tableau.rows.iter().zip(&tableau.basis) {
        if b < n {
            x[b] += row[tableau.cols];
        }
    }
    let objective = dot(&lp.objective, &x);

    let scale = x.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let report = check_feasible(lp, &x, opts.feasibility_tol * scale)?;
    if let Some(bad) = report.violated().next() {
        return Err(tableau.breakdown(&format!(
            "returned point violates '{}' by {:e}",
            bad.label, -bad.slack
        )));
    }

    Ok(Solution {
        status: Status::Optimal,
        x,
        objective,
        iterations: tableau.pivots,
    })
}

enum Outcome {
    Optimal,
    Unbounded,
}

struct Tableau {
    /// `rows[i]` holds the constraint coefficients followed by the rhs.
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    cols: usize,
    first_artificial: usize,
    pivots: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let n = lp.num_vars();
        let m = lp.rows.len();

        // shift x = y + lower and flip rows with negative rhs
        let normalized: Vec<(Vec<f64>, Relation, f64)> = lp
            .rows
            .iter()
            .map(|row| {
                let rhs = row.rhs - dot(&row.coeffs, &lp.var_lower);
                if rhs < 0.0 {
                    let flipped = match row.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (row.coeffs.iter().map(|a| -a).collect(), flipped, -rhs)
                } else {
                    (row.coeffs.clone(), row.relation, rhs)
                }
            })
            .collect();

        let slack_count = normalized.iter().filter(|r| r.1 != Relation::Eq).count();
        let artificial_count = normalized.iter().filter(|r| r.1 != Relation::Le).count();
        let first_artificial = n + slack_count;
        let cols = first_artificial + artificial_count;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_slack = n;
        let mut next_artificial = first_artificial;
        for (coeffs, relation, rhs) in normalized {
            let mut row = vec![0.0; cols + 1];
            row[..n].copy_from_slice(&coeffs);
            row[cols] = rhs;
            match relation {
                Relation::Le => {
                    row[next_slack] = 1.0;
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -1.0;
                    next_slack += 1;
                    row[next_artificial] = 1.0;
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
                Relation::Eq => {
                    row[next_artificial] = 1.0;
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
            }
            rows.push(row);
        }

        Self {
            rows,
            basis,
            cols,
            first_artificial,
            pivots: 0,
        }
    }

    /// Minimizes `cost . z` using only columns `< allowed` as entering candidates.
    fn optimize(&mut self, cost: &[f64], allowed: usize, opts: &SolverOptions) -> Result<Outcome> {
        let cost_scale = cost[..allowed].iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if cost_scale == 0.0 {
            return Ok(Outcome::Optimal);
        }
        let threshold = -opts.optimality_tol * cost_scale;
        loop {
            let Some(entering) = (0..allowed)
                .filter(|j| !self.basis.contains(j))
                .find(|&j| self.reduced_cost(cost, j) < threshold)
            else {
                return Ok(Outcome::Optimal);
            };

            let mut leaving: Option<(usize, f64)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                let a = row[entering];
                if a <= opts.pivot_tol {
                    continue;
                }
                let ratio = row[self.cols] / a;
                leaving = match leaving {
                    None => Some((i, ratio)),
                    Some((best, best_ratio)) => {
                        let tie = (ratio - best_ratio).abs() <= 1e-12 * best_ratio.abs().max(1.0);
                        if ratio < best_ratio && !tie
                            || tie && self.basis[i] < self.basis[best]
                        {
                            Some((i, ratio))
                        } else {
                            Some((best, best_ratio))
                        }
                    }
                };
            }
            let Some((pivot_row, _)) = leaving else {
                return Ok(Outcome::Unbounded);
            };

            if self.pivots >= opts.max_iterations {
                return Err(self.breakdown(&format!(
                    "iteration limit {} reached (entering column {entering})",
                    opts.max_iterations
                )));
            }
            self.pivot(pivot_row, entering);
        }
    }

    fn reduced_cost(&self, cost: &[f64], j: usize) -> f64 {
        cost[j]
            - self
                .rows
                .iter()
                .zip(&self.basis)
                .map(|(row, &b)| cost[b] * row[j])
                .sum::<f64>()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c];
        for v in self.rows[r].iter_mut() {
            *v /= p;
        }
        self.rows[r][c] = 1.0;
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[c];
            if factor == 0.0 {
                continue;
            }
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                *v -= factor * pv;
                if v.abs() < 1e-13 {
                    *v = 0.0;
                }
            }
            row[c] = 0.0;
        }
        self.basis[r] = c;
        self.pivots += 1;
    }

    /// After a feasible phase one, every artificial left in the basis sits
    /// at zero. Pivot each out on a real column, or drop its row when the
    /// row has no real column left (a redundant constraint).
    fn drive_out_artificials(&mut self, opts: &SolverOptions) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < self.first_artificial {
                i += 1;
                continue;
            }
            let replacement = (0..self.first_artificial)
                .filter(|j| !self.basis.contains(j))
                .find(|&j| self.rows[i][j].abs() > opts.pivot_tol);
            match replacement {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }

    fn breakdown(&self, message: &str) -> Error {
        Error::Solver {
            iterations: self.pivots,
            message: format!("{message}; basis = {:?}", self.basis),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::LinearProgram;

    #[test]
    fn single_upper_bound() {
        let lp = LinearProgram::maximize(vec![1.0]).with_row(vec![1.0], Relation::Le, 1.0);
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert_eq!(sol.x, vec![1.0]);
        assert_eq!(sol.objective, 1.0);
    }

    #[test]
    fn lower_row_only_is_unbounded() {
        let lp = LinearProgram::maximize(vec![1.0]).with_row(vec![1.0], Relation::Ge, 1.0);
        assert_eq!(solve(&lp).unwrap().status, Status::Unbounded);
    }

    #[test]
    fn empty_box_is_infeasible() {
        let lp = LinearProgram::maximize(vec![1.0])
            .with_row(vec![1.0], Relation::Le, 0.0)
            .with_row(vec![1.0], Relation::Ge, 1.0);
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, Status::Infeasible);
        assert!(sol.x.is_empty());
    }

    #[test]
    fn minimize_with_equality_and_negative_lower_bound() {
        // min x + y  s.t. x + y = 3, x - y <= 1, x >= -2, y >= 0
        let lp = LinearProgram::minimize(vec![1.0, 2.0])
            .with_row(vec![1.0, 1.0], Relation::Eq, 3.0)
            .with_row(vec![1.0, -1.0], Relation::Le, 1.0)
            .with_lower_bounds(vec![-2.0, 0.0]);
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        // best to push x as high as possible: x = 2, y = 1
        assert!((sol.x[0] - 2.0).abs() < 1e-12);
        assert!((sol.x[1] - 1.0).abs() < 1e-12);
        assert!((sol.objective - 4.0).abs() < 1e-12);
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let lp = LinearProgram::maximize(vec![1.0, 1.0])
            .with_row(vec![1.0, 1.0], Relation::Eq, 2.0)
            .with_row(vec![2.0, 2.0], Relation::Eq, 4.0)
            .with_row(vec![1.0, 0.0], Relation::Le, 1.5);
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective - 2.0).abs() < 1e-12);
    }

    #[test]
    fn no_rows_zero_objective() {
        let sol = solve(&LinearProgram::maximize(vec![0.0, 0.0])).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert_eq!(sol.x, vec![0.0, 0.0]);
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example, which cycles under the largest-coefficient rule
        let lp = LinearProgram::minimize(vec![-0.75, 150.0, -0.02, 6.0])
            .with_row(vec![0.25, -60.0, -0.04, 9.0], Relation::Le, 0.0)
            .with_row(vec![0.5, -90.0, -0.02, 3.0], Relation::Le, 0.0)
            .with_row(vec![0.0, 0.0, 1.0, 0.0], Relation::Le, 1.0);
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, Status::Optimal);
        assert!((sol.objective + 0.05).abs() < 1e-9, "{}", sol.objective);
    }

    #[test]
    fn iteration_limit_is_reported() {
        let lp = LinearProgram::maximize(vec![1.0, 1.0])
            .with_row(vec![1.0, 0.0], Relation::Le, 1.0)
            .with_row(vec![0.0, 1.0], Relation::Le, 1.0);
        let opts = SolverOptions {
            max_iterations: 1,
            ..SolverOptions::default()
        };
        assert!(matches!(solve_with(&lp, &opts), Err(Error::Solver { iterations: 1, .. })));
    }

    #[test]
    fn dimension_mismatch_is_a_model_error() {
        let lp = LinearProgram::maximize(vec![1.0, 1.0]).with_row(vec![1.0], Relation::Le, 1.0);
        assert!(matches!(solve(&lp), Err(Error::Dimension { .. })));
    }
}
