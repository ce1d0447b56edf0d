//! A model whose process times are fuzzy as well: raising the constraint
//! degree shrinks the coefficients of `<=` rows and lets profit grow.
//!
//!     cargo run --example fuzzy_capacity

use fuzzylp::flp::{sweep, Coeff, FuzzyCoeff, FuzzyLinearProgram, FuzzyRow, SweepGrid};
use fuzzylp::lp::{Relation, Sense};
use fuzzylp::membership::{Logistic, SCurve};

fn main() -> fuzzylp::Result<()> {
    let params = Logistic::default();
    let fuzzy = |lo, hi| -> fuzzylp::Result<Coeff> {
        Ok(Coeff::Fuzzy(FuzzyCoeff::new(SCurve::new(params, lo, hi)?)))
    };
    let flp = FuzzyLinearProgram::new(
        Sense::Maximize,
        vec![fuzzy(4.0, 5.0)?, fuzzy(3.0, 3.5)?],
        vec![
            FuzzyRow {
                label: "assembly".into(),
                coeffs: vec![fuzzy(0.9, 1.2)?, fuzzy(0.5, 0.7)?],
                relation: Relation::Le,
                rhs: 120.0,
            },
            FuzzyRow {
                label: "finishing".into(),
                coeffs: vec![Coeff::Crisp(0.4), fuzzy(0.8, 1.0)?],
                relation: Relation::Le,
                rhs: 90.0,
            },
        ],
        vec![10.0, 0.0],
        vec!["tables".into(), "chairs".into()],
        params,
    )?;

    let alphas = vec![1.0, 0.75, 0.5, 0.25, 0.05];
    let r = sweep(&flp, &SweepGrid::new(alphas.clone(), 1))?;
    print!("{:>12}", "a1 \\ a2");
    for a2 in &alphas {
        print!("{a2:>10}");
    }
    println!();
    for a1 in &alphas {
        print!("{a1:>12}");
        for a2 in &alphas {
            let g = r.get(*a1, *a2).and_then(|x| x.objective).unwrap_or(f64::NAN);
            print!("{g:>10.2}");
        }
        println!();
    }
    println!("G in [{:.2}, {:.2}]", r.g_min.unwrap(), r.g_max.unwrap());
    Ok(())
}
