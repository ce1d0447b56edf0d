//! Dense crisp linear programs.
//!
//! [`LinearProgram`] is the model every other layer reduces to. It is solved
//! by the two-phase simplex in [`simplex`] and, for small instances, can be
//! cross-checked against the exhaustive vertex enumeration in [`oracle`].

pub mod oracle;
pub mod simplex;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use oracle::brute_force_optimum;
pub use simplex::{solve, solve_with, SolverOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Maximize,
    Minimize,
}

impl Sense {
    /// True if `a` is strictly better than `b` under this sense.
    pub fn better(self, a: f64, b: f64) -> bool {
        match self {
            Sense::Maximize => a > b,
            Sense::Minimize => a < b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }

    /// Signed slack of `lhs rel rhs`; negative means violated.
    pub fn slack(self, lhs: f64, rhs: f64) -> f64 {
        match self {
            Relation::Le => rhs - lhs,
            Relation::Ge => lhs - rhs,
            Relation::Eq => -(lhs - rhs).abs(),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstraintRow {
    pub label: String,
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

impl ConstraintRow {
    pub fn new(label: impl Into<String>, coeffs: Vec<f64>, relation: Relation, rhs: f64) -> Self {
        Self {
            label: label.into(),
            coeffs,
            relation,
            rhs,
        }
    }

    pub fn lhs(&self, x: &[f64]) -> f64 {
        dot(&self.coeffs, x)
    }
}

/// A crisp LP: optimize `objective . x` subject to `rows`, `x >= var_lower`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<f64>,
    pub rows: Vec<ConstraintRow>,
    pub var_lower: Vec<f64>,
    pub var_names: Vec<String>,
}

impl LinearProgram {
    /// Variables default to `x1..xn`, bounded below by zero.
    pub fn new(sense: Sense, objective: Vec<f64>) -> Self {
        let n = objective.len();
        Self {
            sense,
            objective,
            rows: Vec::new(),
            var_lower: vec![0.0; n],
            var_names: (1..=n).map(|j| format!("x{j}")).collect(),
        }
    }

    pub fn maximize(objective: Vec<f64>) -> Self {
        Self::new(Sense::Maximize, objective)
    }

    pub fn minimize(objective: Vec<f64>) -> Self {
        Self::new(Sense::Minimize, objective)
    }

    /// Appends a row labelled `r<k>`.
    pub fn with_row(mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) -> Self {
        let label = format!("r{}", self.rows.len() + 1);
        self.rows.push(ConstraintRow::new(label, coeffs, relation, rhs));
        self
    }

    pub fn with_lower_bounds(mut self, var_lower: Vec<f64>) -> Self {
        self.var_lower = var_lower;
        self
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        check_len(n, self.var_lower.len())?;
        check_len(n, self.var_names.len())?;
        if let Some(c) = self.objective.iter().find(|c| !c.is_finite()) {
            return Err(Error::Model(format!("objective coefficient {c} is not finite")));
        }
        if let Some(l) = self.var_lower.iter().find(|l| !l.is_finite()) {
            return Err(Error::Model(format!("variable lower bound {l} is not finite")));
        }
        for row in &self.rows {
            check_len(n, row.coeffs.len())?;
            if !row.rhs.is_finite() || row.coeffs.iter().any(|a| !a.is_finite()) {
                return Err(Error::Model(format!("row '{}' has a non-finite entry", row.label)));
            }
        }
        Ok(())
    }

    pub fn objective_value(&self, x: &[f64]) -> Result<f64> {
        evaluate_objective(&self.objective, x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Optimal => "optimal",
            Status::Infeasible => "infeasible",
            Status::Unbounded => "unbounded",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a solve. `x` is empty and `objective` is NaN unless optimal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub status: Status,
    pub x: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
}

impl Solution {
    pub(crate) fn without_point(status: Status, iterations: usize) -> Self {
        Self {
            status,
            x: Vec::new(),
            objective: f64::NAN,
            iterations,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }
}

/// `sum_j c_j x_j`.
pub fn evaluate_objective(c: &[f64], x: &[f64]) -> Result<f64> {
    check_len(c.len(), x.len())?;
    Ok(dot(c, x))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowCheck {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: Relation,
    /// Positive when there is room left, zero when tight, negative when violated.
    pub slack: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeasibilityReport {
    pub rows: Vec<RowCheck>,
    /// One entry per variable, `x_j >= lower_j`.
    pub bounds: Vec<RowCheck>,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.rows.iter().chain(&self.bounds).all(|r| r.satisfied)
    }

    pub fn violated(&self) -> impl Iterator<Item = &RowCheck> {
        self.rows.iter().chain(&self.bounds).filter(|r| !r.satisfied)
    }

    pub fn row(&self, label: &str) -> Option<&RowCheck> {
        self.rows.iter().find(|r| r.label == label)
    }
}

/// Per-row slack of `x`. A row is violated iff its slack is below `-tol`.
pub fn check_feasible(lp: &LinearProgram, x: &[f64], tol: f64) -> Result<FeasibilityReport> {
    check_len(lp.num_vars(), x.len())?;
    if !(tol > 0.0) {
        return Err(Error::Model(format!("feasibility tolerance must be > 0, got {tol}")));
    }
    let check = |label: &str, lhs: f64, relation: Relation, rhs: f64| {
        let slack = relation.slack(lhs, rhs);
        RowCheck {
            label: label.to_string(),
            lhs,
            rhs,
            relation,
            slack,
            satisfied: slack >= -tol,
        }
    };
    let rows = lp
        .rows
        .iter()
        .map(|row| {
            check_len(lp.num_vars(), row.coeffs.len())?;
            Ok(check(&row.label, row.lhs(x), row.relation, row.rhs))
        })
        .collect::<Result<Vec<_>>>()?;
    let bounds = lp
        .var_names
        .iter()
        .zip(&lp.var_lower)
        .zip(x)
        .map(|((name, &lower), &xj)| check(name, xj, Relation::Ge, lower))
        .collect();
    Ok(FeasibilityReport { rows, bounds })
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::Dimension { expected, got })
    }
}
