//! Maximum common satisfaction level.
//!
//! The objective goal is an ascending S-curve on `[goal_lo, goal_hi]`, where
//! `goal_lo` and `goal_hi` are the optima with every fuzzy coefficient at its
//! lower and upper bound. At a degree `lambda` the model is defuzzified
//! (strict policy) and solved; `lambda` is attainable when the optimum reaches
//! the objective value the goal curve demands at `lambda`. Raising `lambda`
//! lowers the defuzzified coefficients and raises the demanded value, so
//! attainability is monotone and bisection finds the largest attainable
//! degree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flp::FuzzyLinearProgram;
use crate::lp::{solve, Sense, Solution, Status};
use crate::membership::{Endpoint, InversePolicy, SCurve};

/// Ascending mirror of the model's S-curve over the goal interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoalCurve {
    curve: SCurve,
}

impl GoalCurve {
    pub fn new(flp: &FuzzyLinearProgram, goal_lo: f64, goal_hi: f64) -> Result<Self> {
        if !(goal_lo < goal_hi) {
            return Err(Error::DegenerateGoal {
                lo: goal_lo,
                hi: goal_hi,
            });
        }
        Ok(Self {
            curve: SCurve::new(flp.params(), goal_lo, goal_hi)?,
        })
    }

    pub fn goal_lo(&self) -> f64 {
        self.curve.lower()
    }

    pub fn goal_hi(&self) -> f64 {
        self.curve.upper()
    }

    /// Satisfaction of objective value `z`; increasing in `z`.
    pub fn satisfaction(&self, z: f64) -> f64 {
        self.curve.interior(self.goal_lo() + self.goal_hi() - z)
    }

    /// Objective value whose satisfaction is `lambda` (strict range).
    pub fn target(&self, lambda: f64) -> Result<f64> {
        let mirrored = self.curve.inverse(lambda, InversePolicy::Strict)?.value;
        Ok(self.goal_lo() + self.goal_hi() - mirrored)
    }

    pub fn valid_range(&self) -> (f64, f64) {
        self.curve.valid_range()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SatisfactionOptions {
    /// Bisection stops once the bracket is no wider than this.
    pub tol: f64,
    pub max_iterations: usize,
    /// Initial `(lo, hi)` degree bracket; defaults to the goal curve's
    /// invertible range.
    pub bracket: Option<(f64, f64)>,
}

impl Default for SatisfactionOptions {
    fn default() -> Self {
        Self {
            tol: 1e-6,
            max_iterations: 60,
            bracket: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SatisfactionResult {
    pub lambda: f64,
    pub x: Vec<f64>,
    pub achieved_objective: f64,
    pub goal_lo: f64,
    pub goal_hi: f64,
    pub iterations: usize,
}

/// Solves the model defuzzified at `lambda` and returns the solution when it
/// reaches the goal's target at `lambda`.
pub fn attains_goal(
    flp: &FuzzyLinearProgram,
    goal: &GoalCurve,
    lambda: f64,
) -> Result<Option<Solution>> {
    let target = goal.target(lambda)?;
    let lp = flp.defuzzify_at(lambda, lambda, InversePolicy::Strict)?;
    let sol = solve(&lp)?;
    match sol.status {
        Status::Optimal => {
            let reached = match flp.sense() {
                Sense::Maximize => sol.objective >= target,
                Sense::Minimize => sol.objective <= target,
            };
            Ok(reached.then_some(sol))
        }
        Status::Infeasible => Ok(None),
        Status::Unbounded => Err(Error::Model(format!(
            "defuzzified model is unbounded at degree {lambda}"
        ))),
    }
}

pub fn max_satisfaction_solve(flp: &FuzzyLinearProgram, tol: f64) -> Result<SatisfactionResult> {
    max_satisfaction_with(
        flp,
        &SatisfactionOptions {
            tol,
            ..SatisfactionOptions::default()
        },
    )
}

pub fn max_satisfaction_with(
    flp: &FuzzyLinearProgram,
    opts: &SatisfactionOptions,
) -> Result<SatisfactionResult> {
    if !(opts.tol > 0.0 && opts.tol < 0.1) {
        return Err(Error::Model(format!("tolerance must be in (0, 0.1), got {}", opts.tol)));
    }
    if flp.sense() != Sense::Maximize {
        return Err(Error::Model("satisfaction solve supports maximization only".into()));
    }
    if !flp.has_fuzzy_objective() {
        return Err(Error::Model("objective has no fuzzy coefficient".into()));
    }

    let anchor = |end: Endpoint| -> Result<f64> {
        let sol = solve(&flp.at_endpoint(end))?;
        if sol.is_optimal() {
            Ok(sol.objective)
        } else {
            Err(Error::Infeasible(format!(
                "model with all fuzzy coefficients at the {end:?} bound is {}",
                sol.status
            )))
        }
    };
    let goal = GoalCurve::new(flp, anchor(Endpoint::Lower)?, anchor(Endpoint::Upper)?)?;

    let (range_lo, range_hi) = goal.valid_range();
    let inset = 1e-12 * (range_hi - range_lo);
    let (mut lo, mut hi) = opts.bracket.unwrap_or((range_lo + inset, range_hi - inset));
    if !(range_lo < lo && lo < hi && hi < range_hi) {
        return Err(Error::DegreeRange {
            degree: if lo > range_lo { hi } else { lo },
            lo: range_lo,
            hi: range_hi,
        });
    }

    let Some(mut witness) = attains_goal(flp, &goal, lo)? else {
        return Err(Error::Infeasible(format!(
            "goal not attainable at the lowest degree {lo}"
        )));
    };
    let mut iterations = 0;
    if let Some(sol) = attains_goal(flp, &goal, hi)? {
        lo = hi;
        witness = sol;
    } else {
        while hi - lo > opts.tol && iterations < opts.max_iterations {
            let mid = 0.5 * (lo + hi);
            iterations += 1;
            match attains_goal(flp, &goal, mid)? {
                Some(sol) => {
                    lo = mid;
                    witness = sol;
                }
                None => hi = mid,
            }
        }
    }

    Ok(SatisfactionResult {
        lambda: lo,
        achieved_objective: witness.objective,
        x: witness.x,
        goal_lo: goal.goal_lo(),
        goal_hi: goal.goal_hi(),
        iterations,
    })
}
