//! Exhaustive vertex enumeration for small LPs.
//!
//! Shares nothing with the simplex path: every `n`-subset of the constraint
//! set (rows plus variable bounds) is solved as a square system by Gaussian
//! elimination, feasible vertices are scored, and unboundedness is decided by
//! enumerating the extreme rays of the recession cone. Because every variable
//! carries a finite lower bound the feasible region is pointed, so a
//! non-empty region always has a vertex and an improving ray exists iff some
//! extreme ray improves.

use crate::error::{Error, Result};
use crate::lp::{dot, LinearProgram, Relation, Sense, Solution, Status};

pub const MAX_VARS: usize = 6;
pub const MAX_CONSTRAINTS: usize = 12;

const SINGULAR_TOL: f64 = 1e-10;
const FEASIBILITY_TOL: f64 = 1e-7;
const RAY_TOL: f64 = 1e-9;

/// `a . x <= b` (or `= b` when `equality`).
struct Halfspace {
    a: Vec<f64>,
    b: f64,
    equality: bool,
}

fn halfspaces(lp: &LinearProgram) -> Vec<Halfspace> {
    let n = lp.num_vars();
    let mut out: Vec<Halfspace> = lp
        .rows
        .iter()
        .map(|row| match row.relation {
            Relation::Le => Halfspace {
                a: row.coeffs.clone(),
                b: row.rhs,
                equality: false,
            },
            Relation::Ge => Halfspace {
                a: row.coeffs.iter().map(|v| -v).collect(),
                b: -row.rhs,
                equality: false,
            },
            Relation::Eq => Halfspace {
                a: row.coeffs.clone(),
                b: row.rhs,
                equality: true,
            },
        })
        .collect();
    for (j, &lower) in lp.var_lower.iter().enumerate() {
        let mut a = vec![0.0; n];
        a[j] = -1.0;
        out.push(Halfspace {
            a,
            b: -lower,
            equality: false,
        });
    }
    out
}

fn check_limits(lp: &LinearProgram) -> Result<()> {
    lp.validate()?;
    let n = lp.num_vars();
    if n == 0 || n > MAX_VARS {
        return Err(Error::OracleLimits(format!(
            "{n} variables (supported: 1..={MAX_VARS})"
        )));
    }
    let total = lp.rows.len() + n;
    if total > MAX_CONSTRAINTS {
        return Err(Error::OracleLimits(format!(
            "{total} constraints including bounds (max {MAX_CONSTRAINTS})"
        )));
    }
    Ok(())
}

/// Best vertex by exhaustive enumeration, with infeasible and unbounded
/// detection. `iterations` counts the subsets examined.
pub fn brute_force_optimum(lp: &LinearProgram) -> Result<Solution> {
    check_limits(lp)?;
    let n = lp.num_vars();
    let spaces = halfspaces(lp);

    let mut examined = 0;
    let mut best: Option<(f64, Vec<f64>)> = None;
    for subset in Combinations::new(spaces.len(), n) {
        examined += 1;
        let matrix: Vec<Vec<f64>> = subset.iter().map(|&k| spaces[k].a.clone()).collect();
        let rhs: Vec<f64> = subset.iter().map(|&k| spaces[k].b).collect();
        let Some(x) = solve_square(matrix, rhs) else {
            continue;
        };
        if !contains(&spaces, &x) {
            continue;
        }
        let value = dot(&lp.objective, &x);
        if best.as_ref().is_none_or(|(v, _)| lp.sense.better(value, *v)) {
            best = Some((value, x));
        }
    }

    let Some((objective, x)) = best else {
        return Ok(Solution::without_point(Status::Infeasible, examined));
    };
    let improving = |d: &[f64]| {
        let gain = dot(&lp.objective, d);
        match lp.sense {
            Sense::Maximize => gain > RAY_TOL,
            Sense::Minimize => gain < -RAY_TOL,
        }
    };
    if extreme_rays(lp)?.iter().any(|d| improving(d)) {
        return Ok(Solution::without_point(Status::Unbounded, examined));
    }
    Ok(Solution {
        status: Status::Optimal,
        x,
        objective,
        iterations: examined,
    })
}

/// Whether the constraint set admits any non-zero recession direction,
/// i.e. whether the feasible region (if non-empty) is unbounded.
pub fn has_recession_direction(lp: &LinearProgram) -> Result<bool> {
    check_limits(lp)?;
    Ok(!extreme_rays(lp)?.is_empty())
}

/// Extreme rays of `{d : a.d <= 0 (or = 0) for every halfspace}`, each
/// scaled to unit max-norm.
fn extreme_rays(lp: &LinearProgram) -> Result<Vec<Vec<f64>>> {
    let n = lp.num_vars();
    let cone: Vec<Halfspace> = halfspaces(lp)
        .into_iter()
        .map(|h| Halfspace { b: 0.0, ..h })
        .collect();
    let mut rays = Vec::new();
    for subset in Combinations::new(cone.len(), n - 1) {
        let rows: Vec<&[f64]> = subset.iter().map(|&k| cone[k].a.as_slice()).collect();
        let Some(d) = null_vector(&rows, n) else {
            continue;
        };
        for sign in [1.0, -1.0] {
            let cand: Vec<f64> = d.iter().map(|v| sign * v).collect();
            let admissible = cone.iter().all(|h| {
                let s = dot(&h.a, &cand);
                if h.equality {
                    s.abs() <= RAY_TOL
                } else {
                    s <= RAY_TOL
                }
            });
            if admissible {
                rays.push(cand);
            }
        }
    }
    Ok(rays)
}

fn contains(spaces: &[Halfspace], x: &[f64]) -> bool {
    spaces.iter().all(|h| {
        let lhs = dot(&h.a, x);
        let tol = FEASIBILITY_TOL * (1.0 + h.b.abs());
        if h.equality {
            (lhs - h.b).abs() <= tol
        } else {
            lhs <= h.b + tol
        }
    })
}

/// Gaussian elimination with partial pivoting; `None` when singular.
#[allow(clippy::needless_range_loop)] // rows r and col of `a` are read and written together
fn solve_square(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    for col in 0..n {
        let pivot = (col..n).max_by(|&p, &q| a[p][col].abs().total_cmp(&a[q][col].abs()))?;
        if a[pivot][col].abs() <= SINGULAR_TOL * scale {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                a[r][k] -= f * a[col][k];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let tail: f64 = (r + 1..n).map(|k| a[r][k] * x[k]).sum();
        x[r] = (b[r] - tail) / a[r][r];
    }
    Some(x)
}

/// Generalized cross product of `n - 1` rows in `n` dimensions. `None` when
/// the rows are rank deficient.
fn null_vector(rows: &[&[f64]], n: usize) -> Option<Vec<f64>> {
    if n == 1 {
        return Some(vec![1.0]);
    }
    let d: Vec<f64> = (0..n)
        .map(|skip| {
            let minor: Vec<Vec<f64>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect())
                .collect();
            let sign = if skip % 2 == 0 { 1.0 } else { -1.0 };
            sign * determinant(minor)
        })
        .collect();
    let norm = d.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let scale = rows
        .iter()
        .map(|r| r.iter().fold(0.0f64, |m, v| m.max(v.abs())))
        .product::<f64>();
    if norm <= SINGULAR_TOL * scale.max(f64::MIN_POSITIVE) {
        return None;
    }
    Some(d.into_iter().map(|v| v / norm).collect())
}

#[allow(clippy::needless_range_loop)]
fn determinant(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&p, &q| a[p][col].abs().total_cmp(&a[q][col].abs()))
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for k in col..n {
                a[r][k] -= f * a[col][k];
            }
        }
    }
    det
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}
