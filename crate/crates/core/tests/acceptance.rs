//! Acceptance criteria for the textile case study and the solver core.
//!
//! Runs without the libtest harness so that every criterion prints exactly
//! one PASS/FAIL line; the process exits non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use fuzzylp::flp::{
    attains_goal, default_alpha_grid, max_satisfaction_solve, max_satisfaction_with, sweep,
    GoalCurve, SatisfactionOptions, SweepGrid,
};
use fuzzylp::lp::{brute_force_optimum, check_feasible, evaluate_objective, oracle, solve, Status};
use fuzzylp::membership::{Endpoint, InversePolicy, Logistic, SCurve};
use fuzzylp::model_io::{
    emit_sweep_csv, parse_model, print_model, read_sweep_csv, textile_as_published, textile_model,
    ModelSource,
};
use fuzzylp::Coeff;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_lp, rel_close};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

const PLAN_A_X: [f64; 3] = [33825.16, 40000.00, 9374.760];
const PLAN_B_X: [f64; 3] = [27766.99, 40000.00, 10233.01];

fn criterion_1() -> Outcome {
    let g = evaluate_objective(&[1.05, 0.3, 1.8], &PLAN_A_X).map_err(|e| e.to_string())?;
    ensure((g - 64390.999).abs() <= 0.05, || format!("G = {g}"))?;
    Ok(format!("G = {g:.3} (target 64390.999 +- 0.05)"))
}

fn criterion_2() -> Outcome {
    let g = evaluate_objective(&[1.08, 0.4, 2.0], &PLAN_B_X).map_err(|e| e.to_string())?;
    ensure((g - 66454.369).abs() <= 0.05, || format!("G = {g}"))?;
    Ok(format!("G = {g:.3} (target 66454.369 +- 0.05)"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let lp = textile_model().at_endpoint(Endpoint::Upper);
    ensure(lp.objective == [1.08, 0.4, 2.0], || format!("objective {:?}", lp.objective))?;
    let sol = solve(&lp).map_err(|e| e.to_string())?;
    let oracle = brute_force_optimum(&lp).map_err(|e| e.to_string())?;
    ensure(sol.status == Status::Optimal && oracle.status == Status::Optimal, || {
        format!("status {} / oracle {}", sol.status, oracle.status)
    })?;
    ensure(rel_close(sol.objective, oracle.objective, 1e-6), || {
        format!("simplex {} vs oracle {}", sol.objective, oracle.objective)
    })?;
    ensure(rel_close(sol.objective, 66454.369, 1e-4), || {
        format!("objective {} vs 66454.369", sol.objective)
    })?;
    let report = check_feasible(&lp, &sol.x, 1e-7).map_err(|e| e.to_string())?;
    for label in ["pleating", "packaging"] {
        let row = report.row(label).ok_or(format!("no row {label}"))?;
        ensure(row.slack.abs() <= 1e-9 * row.rhs, || format!("{label} slack {}", row.slack))?;
    }
    ensure((sol.x[1] - 40000.0).abs() <= 1e-6, || format!("x2 = {}", sol.x[1]))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "G = {:.5}, x = ({:.2}, {:.2}, {:.2}), oracle agrees",
        sol.objective, sol.x[0], sol.x[1], sol.x[2]
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1f1b);
    let (mut accepted, mut attempts) = (0usize, 0usize);
    let (mut optimal, mut infeasible) = (0usize, 0usize);
    while accepted < 500 {
        attempts += 1;
        ensure(attempts < 200_000, || "could not generate enough bounded LPs".into())?;
        let lp = random_lp(&mut rng, 4, 6);
        if oracle::has_recession_direction(&lp).map_err(|e| e.to_string())? {
            continue;
        }
        accepted += 1;
        let fast = solve(&lp).map_err(|e| format!("simplex failed: {e}"))?;
        let slow = brute_force_optimum(&lp).map_err(|e| e.to_string())?;
        ensure(fast.status == slow.status, || {
            format!("status {} vs oracle {} on {lp:?}", fast.status, slow.status)
        })?;
        if fast.status == Status::Optimal {
            optimal += 1;
            ensure(rel_close(fast.objective, slow.objective, 1e-6), || {
                format!("objective {} vs oracle {} on {lp:?}", fast.objective, slow.objective)
            })?;
        } else {
            infeasible += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!(
        "{accepted} bounded LPs ({optimal} optimal, {infeasible} infeasible) agree with the oracle"
    ))
}

fn criterion_5() -> Outcome {
    let params = Logistic::default();
    let curves = [
        (params, 1.02, 1.08),
        (params, 0.2, 0.4),
        (params, 1.7, 2.0),
        (params, -5.0, 1e4),
        (Logistic::new(0.8, 0.05, 4.0).unwrap(), 10.0, 10.5),
        (Logistic::new(1.0, 1.0, 1.0).unwrap(), 0.0, 1.0),
    ];
    let mut worst = 0.0f64;
    for (p, a, b) in curves {
        let s = SCurve::new(p, a, b).map_err(|e| e.to_string())?;
        for k in 1..=1000 {
            let v = a + (b - a) * (k as f64 - 0.5) / 1000.0;
            let back = s
                .inverse(s.mu(v), InversePolicy::Strict)
                .map_err(|e| e.to_string())?
                .value;
            let err = (back - v).abs() / (b - a);
            worst = worst.max(err);
            ensure(err <= 1e-9, || format!("round trip at {v} on ({a}, {b}): {back}"))?;
        }
        let left = p.scale / (1.0 + p.shape);
        let right = p.scale / (1.0 + p.shape * p.steepness.exp());
        ensure((s.interior(a) - left).abs() <= 1e-12 * left, || {
            format!("mu(v_a) = {} vs {left}", s.interior(a))
        })?;
        ensure((s.interior(b) - right).abs() <= 1e-12 * right, || {
            format!("mu(v_b) = {} vs {right}", s.interior(b))
        })?;
    }
    let textile = SCurve::with_defaults(1.02, 1.08).unwrap();
    let left = textile.interior(1.02);
    ensure((left - 0.999001).abs() < 1e-6, || format!("mu(v_a) = {left}"))?;
    Ok(format!(
        "6 curves x 1000 points, worst relative round trip {worst:.1e}; mu(v_a) = {left:.6}"
    ))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let flp = textile_model();
    let grid = default_alpha_grid();
    let result = sweep(&flp, &SweepGrid::new(grid.clone(), 748)).map_err(|e| e.to_string())?;
    ensure(result.records.len() == 81 && result.counts.optimal == 81, || {
        format!("{} records, {:?}", result.records.len(), result.counts)
    })?;
    let g = |a1: f64, a2: f64| result.get(a1, a2).and_then(|r| r.objective).unwrap();
    for &a2 in &grid {
        // grid is in decreasing order, so G must be non-decreasing along it
        for w in grid.windows(2) {
            ensure(g(w[0], a2) <= g(w[1], a2), || {
                format!("G({}, {a2}) > G({}, {a2})", w[0], w[1])
            })?;
        }
        ensure(g(0.1111, a2) > g(1.0, a2), || format!("no strict rise at alpha2 = {a2}"))?;
    }
    for &a1 in &grid {
        let first = g(a1, grid[0]);
        ensure(grid.iter().all(|&a2| g(a1, a2).to_bits() == first.to_bits()), || {
            format!("G varies with alpha2 at alpha1 = {a1}")
        })?;
    }
    let with_a3 = |a3| sweep(&flp, &SweepGrid::new(grid.clone(), 748).with_alpha3(a3));
    let low = with_a3(0.2).map_err(|e| e.to_string())?;
    let high = with_a3(0.9).map_err(|e| e.to_string())?;
    ensure(low.records == result.records && high.records == result.records, || {
        "alpha3 changed the sweep".into()
    })?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "G rises from {:.2} (alpha1 = 1) to {:.2} (alpha1 = 0.1111); constant in alpha2, alpha3",
        g(1.0, 1.0),
        g(0.1111, 1.0)
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let flp = textile_model();
    let tol = 1e-6;
    let r = max_satisfaction_solve(&flp, tol).map_err(|e| e.to_string())?;
    ensure(r.lambda > 0.0 && r.lambda < 1.0, || format!("lambda {}", r.lambda))?;
    let goal = GoalCurve::new(&flp, r.goal_lo, r.goal_hi).map_err(|e| e.to_string())?;
    let at = attains_goal(&flp, &goal, r.lambda).map_err(|e| e.to_string())?;
    ensure(at.is_some(), || format!("goal not attained at lambda* = {}", r.lambda))?;
    let above = attains_goal(&flp, &goal, r.lambda + tol).map_err(|e| e.to_string())?;
    ensure(above.is_none(), || format!("goal still attained at lambda* + {tol}"))?;

    let mut lambdas = vec![r.lambda];
    for bracket in [(0.01, 0.99), (0.3, 0.9), (0.45, 0.6)] {
        let other = max_satisfaction_with(
            &flp,
            &SatisfactionOptions {
                tol,
                bracket: Some(bracket),
                ..SatisfactionOptions::default()
            },
        )
        .map_err(|e| e.to_string())?;
        lambdas.push(other.lambda);
    }
    let spread = lambdas.iter().fold(f64::NEG_INFINITY, |m, &v| m.max(v))
        - lambdas.iter().fold(f64::INFINITY, |m, &v| m.min(v));
    ensure(spread <= 2.0 * tol, || format!("brackets disagree: {lambdas:?}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "lambda* = {:.7}, G = {:.2}, two-sided certificate holds, bracket spread {spread:.1e}",
        r.lambda, r.achieved_objective
    ))
}

fn criterion_8() -> Outcome {
    for (name, model) in [("textile", textile_model()), ("as-published", textile_as_published())] {
        let text = print_model(&model);
        let back = parse_model(&ModelSource::inline(name, text))
            .map_err(|d| format!("{name}: reparse failed: {d:?}"))?
            .model;
        ensure(back == model, || format!("{name}: printed model differs after reparse"))?;
    }

    let result = sweep(&textile_model(), &SweepGrid::new(default_alpha_grid(), 748))
        .map_err(|e| e.to_string())?;
    let rows = read_sweep_csv(&emit_sweep_csv(&result)).map_err(|e| e.to_string())?;
    ensure(rows.len() == result.records.len(), || "csv row count".into())?;
    for (row, rec) in rows.iter().zip(&result.records) {
        ensure(
            row.objective.map(f64::to_bits) == rec.objective.map(f64::to_bits),
            || format!("G {:?} vs {:?}", row.objective, rec.objective),
        )?;
    }

    let table = [
        ("cutting", [0.0033, 0.001, 0.0033], 208.0),
        ("sewing", [0.056, 0.025, 0.1], 4368.0),
        ("pleating", [0.0067, 0.004, 0.017], 520.0),
        ("packaging", [0.01, 0.01, 0.01], 780.0),
    ];
    let model = textile_model();
    for (row, (label, coeffs, hours)) in model.rows().iter().zip(table) {
        let crisp: Vec<Coeff> = coeffs.iter().map(|&c| Coeff::Crisp(c)).collect();
        ensure(row.label == label && row.coeffs == crisp && row.rhs == hours, || {
            format!("row {} differs from the process-time table", row.label)
        })?;
    }
    Ok("model print/parse exact on both bundled files; sweep CSV G bit-identical; table rows exact".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 comparison row, midpoint coefficients", criterion_1),
        ("2 comparison row, upper coefficients", criterion_2),
        ("3 aspiration solve vs oracle", criterion_3),
        ("4 oracle property suite", criterion_4),
        ("5 membership suite", criterion_5),
        ("6 sweep monotonicity", criterion_6),
        ("7 satisfaction certificate", criterion_7),
        ("8 round trips", criterion_8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
