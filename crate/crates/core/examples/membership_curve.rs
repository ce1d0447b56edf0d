//! Evaluate and invert the logistic S-curve used for every fuzzy coefficient.
//!
//!     cargo run --example membership_curve

use fuzzylp::membership::{InversePolicy, Logistic, SCurve};

fn main() -> fuzzylp::Result<()> {
    let params = Logistic::default();
    let profit = SCurve::new(params, 1.02, 1.08)?;
    let (lo, hi) = profit.valid_range();
    println!("B = {}, C = {}, d = {}", params.scale, params.shape, params.steepness);
    println!("invertible degrees: ({lo:.7}, {hi:.7})\n");

    println!("{:>8}  {:>10}", "value", "membership");
    for k in 0..=12 {
        let v = 1.01 + 0.0075 * k as f64;
        println!("{v:>8.4}  {:>10.6}", profit.mu(v));
    }

    println!("\n{:>8}  {:>10}", "degree", "value");
    for m in [0.999, 0.9, 0.75, 0.5, 0.25, 0.1, 0.002] {
        println!("{m:>8}  {:>10.6}", profit.value_at(m)?);
    }

    // degree 1 lies outside the open range: strict rejects, clamp snaps
    match profit.inverse(1.0, InversePolicy::Strict) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\nstrict inverse of 1.0: {e}"),
    }
    let snapped = profit.inverse(1.0, InversePolicy::Clamp)?;
    println!("clamped inverse of 1.0: {} ({:?})", snapped.value, snapped.clamped);
    Ok(())
}
