//! Model files and report emitters.
//!
//! The `.flp` format is line oriented, `#` starts a comment:
//!
//! ```text
//! scurve: B=1 C=0.001 d=13.8          # optional, these are the defaults
//! maximize: ~(1.02, 1.08) x1 + 0.3 x2 # ~(lo, hi) or ~(lo, nominal, hi)
//! subject to:
//!   cutting: 0.0033 x1 + 0.001 x2 <= 208
//!   demand: x1 >= 25000               # labelled: a constraint row
//!   x2 >= 10                          # unlabelled: a variable lower bound
//! ```
//!
//! Variables are implicitly `>= 0` and ordered by first appearance.

mod emit;
mod parse;
mod print;

pub use emit::{
    emit_solution_report, emit_sweep_csv, emit_sweep_summary, read_sweep_csv, Report,
    ReportFormat, SweepCsvRow,
};
pub use parse::{parse_model, ModelSource, ParseDiagnostic, ParsedModel, Severity};
pub use print::{format_number, print_model};

use crate::flp::FuzzyLinearProgram;

/// Canonical textile production-planning model (process-time table values).
pub const TEXTILE_MODEL: &str = include_str!("../../data/textile.flp");

/// The same model with the constraint coefficients as they appear in the
/// typeset model statement, kept for auditing.
pub const TEXTILE_AS_PUBLISHED: &str = include_str!("../../data/textile-as-published-eq5.flp");

pub fn textile_model() -> FuzzyLinearProgram {
    parse_model(&ModelSource::inline("textile.flp", TEXTILE_MODEL))
        .expect("bundled model parses")
        .model
}

pub fn textile_as_published() -> FuzzyLinearProgram {
    parse_model(&ModelSource::inline(
        "textile-as-published-eq5.flp",
        TEXTILE_AS_PUBLISHED,
    ))
    .expect("bundled model parses")
    .model
}
