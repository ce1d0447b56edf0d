use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flp::FuzzyLinearProgram;
use crate::lp::{solve, Status};
use crate::membership::InversePolicy;

/// The harmonic degrees `1, 1/2, ..., 1/9` at four decimals.
pub fn default_alpha_grid() -> Vec<f64> {
    vec![1.0, 0.5, 0.3333, 0.25, 0.2, 0.1667, 0.1429, 0.125, 0.1111]
}

/// The square grid of `(alpha1, alpha2)` degrees to evaluate.
///
/// `alpha1` defuzzifies the objective and `alpha2` the `<=` rows. `m` is a
/// resolution tag carried through to the output; `alpha3` is accepted and
/// validated but does not influence any result.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub alphas: Vec<f64>,
    pub m: u32,
    pub alpha3: Option<f64>,
}

impl SweepGrid {
    pub fn new(alphas: Vec<f64>, m: u32) -> Self {
        Self {
            alphas,
            m,
            alpha3: None,
        }
    }

    pub fn with_alpha3(mut self, alpha3: f64) -> Self {
        self.alpha3 = Some(alpha3);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.alphas.is_empty() {
            return Err(Error::Model("alpha grid is empty".into()));
        }
        let degrees = self.alphas.iter().chain(self.alpha3.iter());
        if let Some(bad) = degrees.copied().find(|a| !(*a > 0.0 && *a <= 1.0)) {
            return Err(Error::Model(format!("alpha {bad} outside (0, 1]")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub alpha1: f64,
    pub alpha2: f64,
    pub status: Status,
    /// `G`, present when the grid point solved to optimality.
    pub objective: Option<f64>,
    pub x: Vec<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub optimal: usize,
    pub infeasible: usize,
    pub unbounded: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub m: u32,
    pub var_names: Vec<String>,
    /// Sorted by `(alpha1, alpha2)` descending.
    pub records: Vec<SweepRecord>,
    pub g_max: Option<f64>,
    pub g_min: Option<f64>,
    pub counts: StatusCounts,
}

impl SweepResult {
    pub fn get(&self, alpha1: f64, alpha2: f64) -> Option<&SweepRecord> {
        self.records
            .iter()
            .find(|r| r.alpha1 == alpha1 && r.alpha2 == alpha2)
    }

    /// First record in grid order attaining `g_max`.
    pub fn best(&self) -> Option<&SweepRecord> {
        let g_max = self.g_max?;
        self.records.iter().find(|r| r.objective == Some(g_max))
    }
}

/// Defuzzifies (clamp policy) and solves the model at every grid point.
///
/// Grid points are solved in parallel; record order depends only on the
/// degrees, never on completion order.
pub fn sweep(flp: &FuzzyLinearProgram, grid: &SweepGrid) -> Result<SweepResult> {
    grid.validate()?;
    let points: Vec<(f64, f64)> = grid
        .alphas
        .iter()
        .flat_map(|&a1| grid.alphas.iter().map(move |&a2| (a1, a2)))
        .collect();

    let mut records = points
        .par_iter()
        .map(|&(alpha1, alpha2)| {
            let lp = flp.defuzzify_at(alpha1, alpha2, InversePolicy::Clamp)?;
            let sol = solve(&lp)?;
            Ok(SweepRecord {
                alpha1,
                alpha2,
                status: sol.status,
                objective: sol.is_optimal().then_some(sol.objective),
                x: sol.x,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|p, q| {
        q.alpha1
            .total_cmp(&p.alpha1)
            .then(q.alpha2.total_cmp(&p.alpha2))
    });

    let mut counts = StatusCounts::default();
    for r in &records {
        match r.status {
            Status::Optimal => counts.optimal += 1,
            Status::Infeasible => counts.infeasible += 1,
            Status::Unbounded => counts.unbounded += 1,
        }
    }
    let values = || records.iter().filter_map(|r| r.objective);
    let g_max = values().reduce(f64::max);
    let g_min = values().reduce(f64::min);

    Ok(SweepResult {
        m: grid.m,
        var_names: flp.var_names().to_vec(),
        records,
        g_max,
        g_min,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flp::{Coeff, FuzzyCoeff, FuzzyRow};
    use crate::lp::{LinearProgram, Relation, Sense};
    use crate::membership::{Logistic, SCurve};
    use crate::model_io::textile_model;

    #[test]
    fn default_grid_shape() {
        let grid = default_alpha_grid();
        assert_eq!(grid.len(), 9);
        assert_eq!(grid[3], 0.25);
        assert!(grid.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn records_cover_grid_in_descending_order() {
        let r = sweep(&textile_model(), &SweepGrid::new(vec![0.5, 1.0, 0.25], 748)).unwrap();
        assert_eq!(r.records.len(), 9);
        assert_eq!(r.m, 748);
        let order: Vec<(f64, f64)> = r.records.iter().map(|x| (x.alpha1, x.alpha2)).collect();
        assert_eq!(order[0], (1.0, 1.0));
        assert_eq!(order[1], (1.0, 0.5));
        assert_eq!(order[8], (0.25, 0.25));
        assert_eq!(r.counts.optimal, 9);
        let all: Vec<f64> = r.records.iter().filter_map(|x| x.objective).collect();
        assert_eq!(r.g_max, all.iter().copied().reduce(f64::max));
        assert_eq!(r.g_min, all.iter().copied().reduce(f64::min));
        assert_eq!(r.best().unwrap().alpha1, 0.25);
    }

    #[test]
    fn crisp_model_sweep_is_constant() {
        let lp = LinearProgram::maximize(vec![3.0, 2.0])
            .with_row(vec![1.0, 1.0], Relation::Le, 4.0)
            .with_row(vec![1.0, 3.0], Relation::Le, 6.0);
        let flp = FuzzyLinearProgram::from_crisp(&lp, Logistic::default()).unwrap();
        let r = sweep(&flp, &SweepGrid::new(default_alpha_grid(), 1)).unwrap();
        assert_eq!(r.g_max, r.g_min);
        assert_eq!(r.g_max, Some(12.0));
    }

    #[test]
    fn fuzzy_rows_make_g_rise_with_alpha2() {
        let fuzzy = |lo, hi| Coeff::Fuzzy(FuzzyCoeff::new(SCurve::with_defaults(lo, hi).unwrap()));
        let flp = FuzzyLinearProgram::new(
            Sense::Maximize,
            vec![Coeff::Crisp(1.0), Coeff::Crisp(1.0)],
            vec![FuzzyRow {
                label: "capacity".into(),
                coeffs: vec![fuzzy(1.0, 2.0), fuzzy(2.0, 3.0)],
                relation: Relation::Le,
                rhs: 10.0,
            }],
            vec![0.0, 0.0],
            vec!["a".into(), "b".into()],
            Logistic::default(),
        )
        .unwrap();
        let r = sweep(&flp, &SweepGrid::new(vec![1.0, 0.5, 0.1], 1)).unwrap();
        let g = |a2| r.get(0.5, a2).unwrap().objective.unwrap();
        assert!(g(1.0) > g(0.5) && g(0.5) > g(0.1));
        assert_eq!(g(1.0), 10.0);
    }

    #[test]
    fn infeasible_points_are_counted_not_fatal() {
        let lp = LinearProgram::maximize(vec![1.0])
            .with_row(vec![1.0], Relation::Le, 0.0)
            .with_row(vec![1.0], Relation::Ge, 1.0);
        let flp = FuzzyLinearProgram::from_crisp(&lp, Logistic::default()).unwrap();
        let r = sweep(&flp, &SweepGrid::new(vec![1.0, 0.5], 1)).unwrap();
        assert_eq!(r.counts.infeasible, 4);
        assert_eq!(r.g_max, None);
        assert!(r.best().is_none());
    }

    #[test]
    fn bad_grids_rejected() {
        let flp = textile_model();
        assert!(sweep(&flp, &SweepGrid::new(vec![], 1)).is_err());
        assert!(sweep(&flp, &SweepGrid::new(vec![0.0], 1)).is_err());
        assert!(sweep(&flp, &SweepGrid::new(vec![0.5], 1).with_alpha3(2.0)).is_err());
    }
}
