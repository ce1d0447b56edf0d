use serde::Serialize;

use crate::error::{Error, Result};
use crate::flp::{CoeffChoice, FuzzyLinearProgram};
use crate::lp::{check_feasible, evaluate_objective};
use crate::membership::InversePolicy;

/// How fuzzy coefficients are fixed before scoring a plan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Convention {
    Lower,
    /// Nominal value when declared, otherwise the interval midpoint.
    Mid,
    Upper,
    /// Both objective and row coefficients at this degree (clamp policy).
    AtDegree(f64),
}

impl Convention {
    fn choice(self) -> Result<CoeffChoice> {
        Ok(match self {
            Convention::Lower => CoeffChoice::Lower,
            Convention::Mid => CoeffChoice::Center,
            Convention::Upper => CoeffChoice::Upper,
            Convention::AtDegree(m) => {
                if !(m > 0.0 && m <= 1.0) {
                    return Err(Error::Model(format!("degree {m} outside (0, 1]")));
                }
                CoeffChoice::Degrees {
                    objective: m,
                    constraint: m,
                    policy: InversePolicy::Clamp,
                }
            }
        })
    }
}

impl std::str::FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lower" => Ok(Convention::Lower),
            "mid" => Ok(Convention::Mid),
            "upper" => Ok(Convention::Upper),
            other => other
                .parse::<f64>()
                .map(Convention::AtDegree)
                .map_err(|_| Error::Model(format!("unknown convention '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub plan: String,
    pub convention: String,
    pub objective: f64,
    pub feasible: bool,
    /// Labels of rows and bounds the plan violates.
    pub violated: Vec<String>,
}

/// Scores each plan under each convention. Rows are ordered plan-major.
///
/// `tol` is the absolute slack tolerance used to flag infeasible plans.
pub fn compare_methods(
    flp: &FuzzyLinearProgram,
    plans: &[(String, Vec<f64>)],
    conventions: &[(String, Convention)],
    tol: f64,
) -> Result<Vec<ComparisonRow>> {
    let models = conventions
        .iter()
        .map(|(_, conv)| flp.crisp(conv.choice()?))
        .collect::<Result<Vec<_>>>()?;

    let mut out = Vec::with_capacity(plans.len() * conventions.len());
    for (plan, x) in plans {
        for ((label, _), lp) in conventions.iter().zip(&models) {
            let objective = evaluate_objective(&lp.objective, x)?;
            let report = check_feasible(lp, x, tol)?;
            out.push(ComparisonRow {
                plan: plan.clone(),
                convention: label.clone(),
                objective,
                feasible: report.feasible(),
                violated: report.violated().map(|r| r.label.clone()).collect(),
            });
        }
    }
    Ok(out)
}
