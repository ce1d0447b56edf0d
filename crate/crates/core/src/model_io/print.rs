use std::fmt::Write;

use crate::flp::{Coeff, FuzzyLinearProgram};
use crate::lp::Sense;

/// Shortest decimal text that parses back to the same `f64`.
pub fn format_number(v: f64) -> String {
    format!("{v}")
}

fn term(out: &mut String, first: bool, coeff: &Coeff, var: &str) {
    match coeff {
        Coeff::Crisp(v) => {
            let sign = if v.is_sign_negative() { "-" } else { "+" };
            if first && sign == "+" {
                write!(out, "{} {var}", format_number(*v))
            } else if first {
                write!(out, "- {} {var}", format_number(v.abs()))
            } else {
                write!(out, " {sign} {} {var}", format_number(v.abs()))
            }
        }
        Coeff::Fuzzy(f) => {
            if !first {
                out.push_str(" + ");
            }
            let c = f.curve();
            match f.nominal() {
                Some(m) => write!(
                    out,
                    "~({}, {}, {}) {var}",
                    format_number(c.lower()),
                    format_number(m),
                    format_number(c.upper())
                ),
                None => write!(
                    out,
                    "~({}, {}) {var}",
                    format_number(c.lower()),
                    format_number(c.upper())
                ),
            }
        }
    }
    .expect("writing to a String cannot fail");
}

fn expression(out: &mut String, coeffs: &[Coeff], names: &[String]) {
    for (j, (c, name)) in coeffs.iter().zip(names).enumerate() {
        term(out, j == 0, c, name);
    }
}

/// Renders a model in the `.flp` format. Every variable appears in the
/// objective (with a zero coefficient if need be) so that variable order
/// survives a round trip.
pub fn print_model(model: &FuzzyLinearProgram) -> String {
    let p = model.params();
    let mut out = format!(
        "scurve: B={} C={} d={}\n",
        format_number(p.scale),
        format_number(p.shape),
        format_number(p.steepness)
    );
    out.push_str(match model.sense() {
        Sense::Maximize => "maximize: ",
        Sense::Minimize => "minimize: ",
    });
    expression(&mut out, model.objective(), model.var_names());
    out.push_str("\nsubject to:\n");
    for row in model.rows() {
        write!(out, "  {}: ", row.label).unwrap();
        expression(&mut out, &row.coeffs, model.var_names());
        writeln!(out, " {} {}", row.relation, format_number(row.rhs)).unwrap();
    }
    for (name, &lower) in model.var_names().iter().zip(model.var_lower()) {
        if lower != 0.0 {
            writeln!(out, "  {name} >= {}", format_number(lower)).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model_io::{parse_model, textile_as_published, textile_model, ModelSource};

    fn round_trip(model: &FuzzyLinearProgram) -> FuzzyLinearProgram {
        parse_model(&ModelSource::inline("printed", print_model(model)))
            .unwrap()
            .model
    }

    #[test]
    fn bundled_models_round_trip() {
        for m in [textile_model(), textile_as_published()] {
            assert_eq!(round_trip(&m), m);
        }
    }

    #[test]
    fn printed_textile_is_readable() {
        let text = print_model(&textile_model());
        assert!(text.contains("maximize: ~(1.02, 1.05, 1.08) x1 + ~(0.2, 0.3, 0.4) x2"));
        assert!(text.contains("  cutting: 0.0033 x1 + 0.001 x2 + 0.0033 x3 <= 208\n"));
        assert!(text.contains("  demand_quilt: 0 x1 + 0 x2 + 1 x3 >= 10000\n"));
    }

    #[test]
    fn negative_and_awkward_numbers() {
        let src = "minimize: - 0.1 a + 1e-300 b - 123456789.125 c\nsubject to:\n  r: - 3 a + 0.30000000000000004 b <= -7\n  a >= -2.5\n";
        let m = parse_model(&ModelSource::inline("t", src)).unwrap().model;
        assert_eq!(round_trip(&m), m);
    }
}
