#![allow(dead_code)]

use fuzzylp::lp::{LinearProgram, Relation};
use rand::Rng;

/// Random LP with `1..=max_vars` variables and `1..=max_rows` rows,
/// coefficients in [-10, 10] and right-hand sides in [0, 100].
pub fn random_lp<R: Rng>(rng: &mut R, max_vars: usize, max_rows: usize) -> LinearProgram {
    let n = rng.gen_range(1..=max_vars);
    let rows = rng.gen_range(1..=max_rows);
    let objective = (0..n).map(|_| rng.gen_range(-10.0..=10.0)).collect();
    let sense = if rng.gen_bool(0.5) {
        fuzzylp::Sense::Maximize
    } else {
        fuzzylp::Sense::Minimize
    };
    let mut lp = LinearProgram::new(sense, objective);
    for _ in 0..rows {
        let coeffs = (0..n).map(|_| rng.gen_range(-10.0..=10.0)).collect();
        let relation = match rng.gen_range(0..20) {
            0..=14 => Relation::Le,
            15..=17 => Relation::Ge,
            _ => Relation::Eq,
        };
        lp = lp.with_row(coeffs, relation, rng.gen_range(0.0..=100.0));
    }
    lp
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}
