//! Fuzzy linear programs.
//!
//! Objective coefficients and coefficients of `<=` rows may be fuzzy
//! intervals carrying an S-curve. Fixing a membership degree turns each of
//! them into the unique crisp value with that membership, which yields an
//! ordinary [`LinearProgram`].

mod compare;
mod satisfaction;
mod sweep;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp::{ConstraintRow, LinearProgram, Relation, Sense};
use crate::membership::{Endpoint, InversePolicy, Logistic, SCurve};

pub use compare::{compare_methods, ComparisonRow, Convention};
pub use satisfaction::{
    attains_goal, max_satisfaction_solve, max_satisfaction_with, GoalCurve, SatisfactionOptions,
    SatisfactionResult,
};
pub use sweep::{default_alpha_grid, sweep, StatusCounts, SweepGrid, SweepRecord, SweepResult};

/// An interval coefficient `~(lower, upper)` with an optional nominal
/// ("around") value inside the interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FuzzyCoeff {
    curve: SCurve,
    nominal: Option<f64>,
}

impl FuzzyCoeff {
    pub fn new(curve: SCurve) -> Self {
        Self {
            curve,
            nominal: None,
        }
    }

    pub fn with_nominal(curve: SCurve, nominal: f64) -> Result<Self> {
        if !(curve.lower()..=curve.upper()).contains(&nominal) {
            return Err(Error::Parameter(format!(
                "nominal value {nominal} outside ({}, {})",
                curve.lower(),
                curve.upper()
            )));
        }
        Ok(Self {
            curve,
            nominal: Some(nominal),
        })
    }

    pub fn curve(&self) -> &SCurve {
        &self.curve
    }

    pub fn nominal(&self) -> Option<f64> {
        self.nominal
    }

    /// The nominal value if declared, the interval midpoint otherwise.
    pub fn center(&self) -> f64 {
        self.nominal
            .unwrap_or_else(|| 0.5 * (self.curve.lower() + self.curve.upper()))
    }

    pub fn defuzzify(&self, degree: f64, policy: InversePolicy) -> Result<f64> {
        Ok(self.curve.inverse(degree, policy)?.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Coeff {
    Crisp(f64),
    Fuzzy(FuzzyCoeff),
}

impl Coeff {
    pub fn is_fuzzy(&self) -> bool {
        matches!(self, Coeff::Fuzzy(_))
    }

    fn resolve(&self, pick: impl Fn(&FuzzyCoeff) -> Result<f64>) -> Result<f64> {
        match self {
            Coeff::Crisp(v) => Ok(*v),
            Coeff::Fuzzy(f) => pick(f),
        }
    }
}

impl From<f64> for Coeff {
    fn from(v: f64) -> Self {
        Coeff::Crisp(v)
    }
}

impl From<FuzzyCoeff> for Coeff {
    fn from(f: FuzzyCoeff) -> Self {
        Coeff::Fuzzy(f)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzyRow {
    pub label: String,
    pub coeffs: Vec<Coeff>,
    pub relation: Relation,
    pub rhs: f64,
}

/// Which value each fuzzy coefficient takes when crispifying a model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoeffChoice {
    /// Every fuzzy coefficient at its interval lower bound.
    Lower,
    /// Every fuzzy coefficient at [`FuzzyCoeff::center`].
    Center,
    /// Every fuzzy coefficient at its interval upper bound.
    Upper,
    /// Objective coefficients at one degree, `<=` row coefficients at another.
    Degrees {
        objective: f64,
        constraint: f64,
        policy: InversePolicy,
    },
}

/// An LP with fuzzy objective and/or fuzzy `<=` row coefficients.
///
/// All fuzzy coefficients share one set of S-curve parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzyLinearProgram {
    sense: Sense,
    objective: Vec<Coeff>,
    rows: Vec<FuzzyRow>,
    var_lower: Vec<f64>,
    var_names: Vec<String>,
    params: Logistic,
}

impl FuzzyLinearProgram {
    pub fn new(
        sense: Sense,
        objective: Vec<Coeff>,
        rows: Vec<FuzzyRow>,
        var_lower: Vec<f64>,
        var_names: Vec<String>,
        params: Logistic,
    ) -> Result<Self> {
        params.validate()?;
        let n = objective.len();
        for len in [var_lower.len(), var_names.len()] {
            if len != n {
                return Err(Error::Dimension { expected: n, got: len });
            }
        }
        for row in &rows {
            if row.coeffs.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: row.coeffs.len(),
                });
            }
            if row.relation != Relation::Le && row.coeffs.iter().any(Coeff::is_fuzzy) {
                return Err(Error::Model(format!(
                    "row '{}': fuzzy coefficients are only allowed in <= rows",
                    row.label
                )));
            }
        }
        let all = objective.iter().chain(rows.iter().flat_map(|r| &r.coeffs));
        for coeff in all {
            if let Coeff::Fuzzy(f) = coeff {
                if f.curve().params() != params {
                    return Err(Error::Model(
                        "fuzzy coefficients must share the model's S-curve parameters".into(),
                    ));
                }
            }
        }
        Ok(Self {
            sense,
            objective,
            rows,
            var_lower,
            var_names,
            params,
        })
    }

    /// Wraps a crisp LP with no fuzzy entries.
    pub fn from_crisp(lp: &LinearProgram, params: Logistic) -> Result<Self> {
        lp.validate()?;
        let rows = lp
            .rows
            .iter()
            .map(|r| FuzzyRow {
                label: r.label.clone(),
                coeffs: r.coeffs.iter().map(|&a| Coeff::Crisp(a)).collect(),
                relation: r.relation,
                rhs: r.rhs,
            })
            .collect();
        Self::new(
            lp.sense,
            lp.objective.iter().map(|&c| Coeff::Crisp(c)).collect(),
            rows,
            lp.var_lower.clone(),
            lp.var_names.clone(),
            params,
        )
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn objective(&self) -> &[Coeff] {
        &self.objective
    }

    pub fn rows(&self) -> &[FuzzyRow] {
        &self.rows
    }

    pub fn var_lower(&self) -> &[f64] {
        &self.var_lower
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn params(&self) -> Logistic {
        self.params
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn has_fuzzy_objective(&self) -> bool {
        self.objective.iter().any(Coeff::is_fuzzy)
    }

    pub fn has_fuzzy_rows(&self) -> bool {
        self.rows.iter().flat_map(|r| &r.coeffs).any(Coeff::is_fuzzy)
    }

    /// Replaces objective fuzzy coefficients by their value at membership
    /// `alpha_obj` and `<=`-row fuzzy coefficients by their value at
    /// `alpha_con`.
    ///
    /// Degrees must lie in `(0, 1]`. Under [`InversePolicy::Clamp`] a degree
    /// outside a curve's invertible range maps to the nearer endpoint, so
    /// `1.0` yields the lower bounds.
    pub fn defuzzify_at(
        &self,
        alpha_obj: f64,
        alpha_con: f64,
        policy: InversePolicy,
    ) -> Result<LinearProgram> {
        for (name, degree) in [("objective", alpha_obj), ("constraint", alpha_con)] {
            if !(degree > 0.0 && degree <= 1.0) {
                return Err(Error::Model(format!(
                    "{name} degree must be in (0, 1], got {degree}"
                )));
            }
        }
        self.crisp(CoeffChoice::Degrees {
            objective: alpha_obj,
            constraint: alpha_con,
            policy,
        })
    }

    /// Every fuzzy coefficient at the given interval end.
    pub fn at_endpoint(&self, end: Endpoint) -> LinearProgram {
        let choice = match end {
            Endpoint::Lower => CoeffChoice::Lower,
            Endpoint::Upper => CoeffChoice::Upper,
        };
        self.crisp(choice).expect("endpoint selection cannot fail")
    }

    pub fn crisp(&self, choice: CoeffChoice) -> Result<LinearProgram> {
        let pick = |f: &FuzzyCoeff, in_objective: bool| -> Result<f64> {
            match choice {
                CoeffChoice::Lower => Ok(f.curve().lower()),
                CoeffChoice::Upper => Ok(f.curve().upper()),
                CoeffChoice::Center => Ok(f.center()),
                CoeffChoice::Degrees {
                    objective,
                    constraint,
                    policy,
                } => f.defuzzify(if in_objective { objective } else { constraint }, policy),
            }
        };
        let objective = self
            .objective
            .iter()
            .map(|c| c.resolve(|f| pick(f, true)))
            .collect::<Result<Vec<_>>>()?;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let coeffs = r
                    .coeffs
                    .iter()
                    .map(|c| c.resolve(|f| pick(f, false)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(ConstraintRow::new(r.label.clone(), coeffs, r.relation, r.rhs))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearProgram {
            sense: self.sense,
            objective,
            rows,
            var_lower: self.var_lower.clone(),
            var_names: self.var_names.clone(),
        })
    }
}
