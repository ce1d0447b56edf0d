//! Find the largest common satisfaction degree for the textile plan.
//!
//!     cargo run --example satisfaction

use fuzzylp::flp::{attains_goal, max_satisfaction_solve, GoalCurve};
use fuzzylp::model_io::textile_model;

fn main() -> fuzzylp::Result<()> {
    let flp = textile_model();
    let r = max_satisfaction_solve(&flp, 1e-6)?;
    println!("goal interval [{:.2}, {:.2}]", r.goal_lo, r.goal_hi);
    println!("lambda* = {:.7} after {} bisection steps", r.lambda, r.iterations);
    println!("profit at lambda* = {:.2}", r.achieved_objective);
    for (name, v) in flp.var_names().iter().zip(&r.x) {
        println!("  {name} = {v:.2}");
    }

    let goal = GoalCurve::new(&flp, r.goal_lo, r.goal_hi)?;
    for lambda in [r.lambda - 1e-3, r.lambda, r.lambda + 1e-6, r.lambda + 1e-3] {
        let target = goal.target(lambda)?;
        let ok = attains_goal(&flp, &goal, lambda)?.is_some();
        println!("lambda {lambda:.7}: target {target:.2}, attained {ok}");
    }
    Ok(())
}
