//! Sweep the (alpha1, alpha2) grid for several resolution tags and write the
//! surfaces as CSV, ready for a 3D plot.
//!
//!     cargo run --example alpha_sweep [output-dir]

use fuzzylp::flp::{default_alpha_grid, sweep, SweepGrid};
use fuzzylp::model_io::{emit_sweep_csv, emit_sweep_summary, textile_model};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out_dir = std::env::args().nth(1);
    let flp = textile_model();

    let mut results = Vec::new();
    for m in 748..=751 {
        let r = sweep(&flp, &SweepGrid::new(default_alpha_grid(), m))?;
        if let Some(dir) = &out_dir {
            std::fs::create_dir_all(dir)?;
            let path = std::path::Path::new(dir).join(format!("sweep_m{m}.csv"));
            std::fs::write(&path, emit_sweep_csv(&r))?;
            println!("wrote {}", path.display());
        }
        results.push(r);
    }

    let first = &results[0];
    println!("\nalpha1 -> G (alpha2 = 1)");
    for a1 in default_alpha_grid() {
        let g = first.get(a1, 1.0).and_then(|r| r.objective).unwrap_or(f64::NAN);
        println!("  {a1:<7} {g:.2}");
    }
    println!("\n{}", emit_sweep_summary(&results));
    Ok(())
}
