//! Score published production plans under different coefficient conventions.
//!
//!     cargo run --example compare_methods

use fuzzylp::flp::{compare_methods, max_satisfaction_solve, Convention};
use fuzzylp::model_io::textile_model;

fn main() -> fuzzylp::Result<()> {
    let flp = textile_model();
    let ours = max_satisfaction_solve(&flp, 1e-6)?;
    let plans = vec![
        ("plan_a".to_string(), vec![33825.16, 40000.00, 9374.760]),
        ("plan_b".to_string(), vec![27766.99, 40000.00, 10233.01]),
        ("lambda*".to_string(), ours.x.clone()),
    ];
    let conventions = vec![
        ("lower".to_string(), Convention::Lower),
        ("mid".to_string(), Convention::Mid),
        ("upper".to_string(), Convention::Upper),
        (format!("{:.4}", ours.lambda), Convention::AtDegree(ours.lambda)),
    ];

    println!("{:<8} {:<8} {:>12}  feasibility", "plan", "coeffs", "objective");
    for row in compare_methods(&flp, &plans, &conventions, 1e-3)? {
        let note = if row.feasible {
            "ok".to_string()
        } else {
            format!("violates {}", row.violated.join(", "))
        };
        println!("{:<8} {:<8} {:>12.3}  {note}", row.plan, row.convention, row.objective);
    }
    Ok(())
}
