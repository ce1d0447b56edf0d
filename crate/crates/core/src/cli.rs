//! The `fuzzylp` command line.
//!
//! Exit codes: 0 success, 1 infeasible or unbounded, 2 usage or I/O error,
//! 3 model parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::flp::{
    compare_methods, default_alpha_grid, max_satisfaction_solve, sweep, CoeffChoice, Convention,
    FuzzyLinearProgram, SweepGrid,
};
use crate::lp::{check_feasible, solve, Status};
use crate::membership::InversePolicy;
use crate::model_io::{
    emit_solution_report, emit_sweep_csv, emit_sweep_summary, format_number, parse_model,
    ModelSource, Report, ReportFormat,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_OPTIMUM: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fuzzylp", version, about = "Fuzzy linear programming with S-curve membership functions")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Defuzzify at fixed degrees and solve (default: minimal membership,
    /// i.e. every fuzzy coefficient at its upper bound).
    Solve {
        model: PathBuf,
        #[arg(long, value_parser = parse_degree)]
        alpha_obj: Option<f64>,
        #[arg(long, value_parser = parse_degree)]
        alpha_con: Option<f64>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Maximize the common satisfaction degree by bisection.
    Fsolve {
        model: PathBuf,
        #[arg(long, default_value_t = 1e-6, value_parser = parse_tol)]
        tol: f64,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve over the (alpha1, alpha2) grid for each resolution tag.
    Sweep {
        model: PathBuf,
        /// Comma separated degrees in (0, 1]; defaults to 1, 0.5, ..., 0.1111.
        #[arg(long, value_delimiter = ',', value_parser = parse_degree)]
        alphas: Option<Vec<f64>>,
        /// Resolution tags, one CSV per tag.
        #[arg(long = "m", value_delimiter = ',', default_value = "748")]
        m_tags: Vec<u32>,
        /// Accepted for compatibility; has no effect on results.
        #[arg(long, value_parser = parse_degree)]
        alpha3: Option<f64>,
        /// Directory receiving sweep_m<M>.csv and summary.csv.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Score given plans under coefficient conventions.
    Compare {
        model: PathBuf,
        /// LABEL=v1,v2,...  (repeatable)
        #[arg(long = "plan", required = true)]
        plans: Vec<String>,
        /// lower | mid | upper | <degree>  (repeatable; default mid and upper)
        #[arg(long = "convention")]
        conventions: Vec<String>,
        /// Absolute slack tolerance when flagging infeasible plans.
        #[arg(long, default_value_t = 1e-3, value_parser = parse_tol_any)]
        tol: f64,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Parse and validate a model file.
    Check { model: PathBuf },
}

fn parse_degree(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("'{s}' is not a number"))?;
    if v > 0.0 && v <= 1.0 {
        Ok(v)
    } else {
        Err(format!("degree {v} outside (0, 1]"))
    }
}

fn parse_tol_any(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("'{s}' is not a number"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("tolerance must be > 0, got {v}"))
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v = parse_tol_any(s)?;
    if v < 0.1 {
        Ok(v)
    } else {
        Err(format!("tolerance must be below 0.1, got {v}"))
    }
}

/// Failure carrying the exit code and a message for stderr.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Infeasible(_) | Error::DegenerateGoal { .. } => EXIT_NO_OPTIMUM,
            _ => EXIT_USAGE,
        };
        Failure(code, format!("error: {e}"))
    }
}

/// Runs the CLI on `args` (including the program name), writing normal
/// output to `out` and messages to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(config.command, out, err) {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "{message}");
            code
        }
    }
}

fn load(path: &Path, err: &mut dyn Write) -> Result<FuzzyLinearProgram, Failure> {
    let src = ModelSource::from_path(path)
        .map_err(|e| Failure(EXIT_USAGE, format!("error: cannot read {}: {e}", path.display())))?;
    match parse_model(&src) {
        Ok(parsed) => {
            for w in &parsed.warnings {
                let _ = writeln!(err, "{}:{w}", src.origin);
            }
            Ok(parsed.model)
        }
        Err(diags) => {
            let text: Vec<String> = diags.iter().map(|d| format!("{}:{d}", src.origin)).collect();
            Err(Failure(EXIT_PARSE, text.join("\n")))
        }
    }
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure(EXIT_USAGE, format!("error: cannot write {}: {e}", path.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure(EXIT_USAGE, format!("error: {e}"))),
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Check { model } => {
            let m = load(&model, err)?;
            emit(&format!("ok: {} variables, {} rows\n", m.num_vars(), m.rows().len()), None, out)?;
            Ok(EXIT_OK)
        }
        Command::Solve {
            model,
            alpha_obj,
            alpha_con,
            format,
            output,
        } => {
            let m = load(&model, err)?;
            let minimal = m.params().valid_range().0;
            let lp = m.crisp(CoeffChoice::Degrees {
                objective: alpha_obj.unwrap_or(minimal),
                constraint: alpha_con.unwrap_or(minimal),
                policy: InversePolicy::Clamp,
            })?;
            let sol = solve(&lp)?;
            let text = match format {
                Format::Json => emit_solution_report(Report::Solution(&sol), &lp.var_names, ReportFormat::Json),
                Format::Csv => emit_solution_report(Report::Solution(&sol), &lp.var_names, ReportFormat::Csv),
                Format::Human => {
                    let mut s = format!("status: {}\n", sol.status);
                    if sol.is_optimal() {
                        s += &format!("objective: {}\n", format_number(sol.objective));
                        for (name, v) in lp.var_names.iter().zip(&sol.x) {
                            s += &format!("{name} = {}\n", format_number(*v));
                        }
                        let report = check_feasible(&lp, &sol.x, 1e-7)?;
                        s += "rows:\n";
                        for r in &report.rows {
                            let state = if r.slack.abs() <= 1e-7 * r.rhs.abs().max(1.0) {
                                "tight"
                            } else {
                                "slack"
                            };
                            s += &format!(
                                "  {:<16} {} {:<12} lhs {:<24} slack {:<24} {state}\n",
                                r.label,
                                r.relation,
                                format_number(r.rhs),
                                format_number(r.lhs),
                                format_number(r.slack)
                            );
                        }
                    }
                    s
                }
            };
            emit(&text, output.as_deref(), out)?;
            Ok(if sol.status == Status::Optimal { EXIT_OK } else { EXIT_NO_OPTIMUM })
        }
        Command::Fsolve {
            model,
            tol,
            format,
            output,
        } => {
            let m = load(&model, err)?;
            let r = max_satisfaction_solve(&m, tol)?;
            let text = match format {
                Format::Json => emit_solution_report(Report::Satisfaction(&r), m.var_names(), ReportFormat::Json),
                Format::Csv => emit_solution_report(Report::Satisfaction(&r), m.var_names(), ReportFormat::Csv),
                Format::Human => {
                    let mut s = format!(
                        "lambda: {}\nobjective: {}\ngoal: [{}, {}]\nbisection steps: {}\n",
                        format_number(r.lambda),
                        format_number(r.achieved_objective),
                        format_number(r.goal_lo),
                        format_number(r.goal_hi),
                        r.iterations
                    );
                    for (name, v) in m.var_names().iter().zip(&r.x) {
                        s += &format!("{name} = {}\n", format_number(*v));
                    }
                    s
                }
            };
            emit(&text, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            model,
            alphas,
            m_tags,
            alpha3,
            output,
        } => {
            let m = load(&model, err)?;
            let alphas = alphas.unwrap_or_else(default_alpha_grid);
            let mut results = Vec::with_capacity(m_tags.len());
            for &tag in &m_tags {
                let mut grid = SweepGrid::new(alphas.clone(), tag);
                if let Some(a3) = alpha3 {
                    grid = grid.with_alpha3(a3);
                }
                results.push(sweep(&m, &grid)?);
            }
            let summary = emit_sweep_summary(&results);
            match output {
                Some(dir) => {
                    std::fs::create_dir_all(&dir).map_err(|e| {
                        Failure(EXIT_USAGE, format!("error: cannot create {}: {e}", dir.display()))
                    })?;
                    for r in &results {
                        emit(&emit_sweep_csv(r), Some(&dir.join(format!("sweep_m{}.csv", r.m))), out)?;
                    }
                    emit(&summary, Some(&dir.join("summary.csv")), out)?;
                    emit(&summary, None, out)?;
                }
                None => {
                    for r in &results {
                        emit(&emit_sweep_csv(r), None, out)?;
                        emit("\n", None, out)?;
                    }
                    emit(&summary, None, out)?;
                }
            }
            let failed: usize = results.iter().map(|r| r.counts.infeasible + r.counts.unbounded).sum();
            if failed > 0 {
                let _ = writeln!(err, "warning: {failed} grid points without an optimum");
            }
            Ok(if results.iter().all(|r| r.counts.optimal == 0) {
                EXIT_NO_OPTIMUM
            } else {
                EXIT_OK
            })
        }
        Command::Compare {
            model,
            plans,
            conventions,
            tol,
            format,
            output,
        } => {
            let m = load(&model, err)?;
            let plans = plans
                .iter()
                .map(|p| parse_plan(p, m.num_vars()))
                .collect::<Result<Vec<_>, _>>()?;
            let conventions = if conventions.is_empty() {
                vec!["mid".to_string(), "upper".to_string()]
            } else {
                conventions
            };
            let conventions = conventions
                .into_iter()
                .map(|c| {
                    let parsed = c
                        .parse::<Convention>()
                        .map_err(|e| Failure(EXIT_USAGE, format!("error: {e}")))?;
                    Ok((c, parsed))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let rows = compare_methods(&m, &plans, &conventions, tol)?;
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
                    s.push('\n');
                    s
                }
                Format::Csv => {
                    let mut s = String::from("plan,convention,objective,feasible,violated\n");
                    for r in &rows {
                        s += &format!(
                            "{},{},{},{},{}\n",
                            r.plan,
                            r.convention,
                            format_number(r.objective),
                            r.feasible,
                            r.violated.join(";")
                        );
                    }
                    s
                }
                Format::Human => {
                    let mut s = format!("{:<12} {:<10} {:>20}  {}\n", "plan", "convention", "objective", "feasibility");
                    for r in &rows {
                        let note = if r.feasible {
                            "feasible".to_string()
                        } else {
                            format!("violates {}", r.violated.join(", "))
                        };
                        s += &format!(
                            "{:<12} {:<10} {:>20}  {note}\n",
                            r.plan,
                            r.convention,
                            format!("{:.3}", r.objective)
                        );
                    }
                    s
                }
            };
            emit(&text, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
    }
}

fn parse_plan(spec: &str, n: usize) -> Result<(String, Vec<f64>), Failure> {
    let usage = |msg: String| Failure(EXIT_USAGE, format!("error: plan '{spec}': {msg}"));
    let (label, values) = spec
        .split_once('=')
        .ok_or_else(|| usage("expected LABEL=v1,v2,...".into()))?;
    let x = values
        .split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|_| usage(format!("'{v}' is not a number"))))
        .collect::<Result<Vec<_>, _>>()?;
    if x.len() != n {
        return Err(usage(format!("expected {n} values, got {}", x.len())));
    }
    Ok((label.to_string(), x))
}
