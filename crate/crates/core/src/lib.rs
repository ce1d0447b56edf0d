//! Fuzzy linear programming with logistic S-curve membership functions.
//!
//! The crate is layered bottom-up:
//!
//! * [`membership`]: the decreasing logistic membership curve and its inverse.
//! * [`lp`]: dense crisp LPs, a two-phase simplex solver and a
//!   vertex-enumeration oracle for small instances.
//! * [`flp`]: fuzzy coefficients, defuzzification at a membership degree,
//!   the `(alpha1, alpha2)` grid sweep, the max-satisfaction bisection and
//!   the method-comparison table.
//! * [`model_io`]: the `.flp` text format, CSV sweep surfaces and
//!   solution reports.
//! * [`cli`]: the `fuzzylp` command line.
//!
//! The textile production-planning model ships with the crate, see
//! [`model_io::textile_model`].

// `!(a < b)` is used deliberately throughout so that NaN inputs are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod flp;
pub mod lp;
pub mod membership;
pub mod model_io;

pub use error::{Error, Result};
pub use flp::{Coeff, FuzzyCoeff, FuzzyLinearProgram, FuzzyRow};
pub use lp::{ConstraintRow, LinearProgram, Relation, Sense, Solution, Status};
pub use membership::{InversePolicy, Logistic, SCurve};
