//! Parse model files, report located diagnostics, and print a model back.
//!
//!     cargo run --example model_file [path.flp]

use fuzzylp::flp::Coeff;
use fuzzylp::lp::solve;
use fuzzylp::membership::Endpoint;
use fuzzylp::model_io::{parse_model, print_model, ModelSource, TEXTILE_AS_PUBLISHED};

const BROKEN: &str = "\
maximize: ~(2, 1) x + 3 y
subject to:
  capacity: x + y <= 10
  capacity: x - y >= oops
  y <= 4
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let src = match std::env::args().nth(1) {
        Some(path) => ModelSource::from_path(path)?,
        None => ModelSource::inline("broken.flp", BROKEN),
    };
    match parse_model(&src) {
        Ok(parsed) => {
            for w in &parsed.warnings {
                println!("{}:{w}", src.origin);
            }
            let m = parsed.model;
            let fuzzy = m.objective().iter().filter(|c| matches!(c, Coeff::Fuzzy(_))).count();
            println!("{}: {} variables, {} rows, {fuzzy} fuzzy profits", src.origin, m.num_vars(), m.rows().len());
            print!("{}", print_model(&m));
        }
        Err(diags) => {
            for d in diags {
                println!("{}:{d}", src.origin);
            }
        }
    }

    // The typeset variant of the textile model cannot meet its own demands.
    let published = parse_model(&ModelSource::inline("as-published", TEXTILE_AS_PUBLISHED))
        .map_err(|d| format!("{d:?}"))?
        .model;
    let sol = solve(&published.at_endpoint(Endpoint::Upper))?;
    println!("\nas-published constraint coefficients: {}", sol.status);
    Ok(())
}
