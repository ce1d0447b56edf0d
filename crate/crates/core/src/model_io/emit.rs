//! CSV and JSON output for sweeps and solutions.
//!
//! Numbers are written with the shortest representation that parses back to
//! the same `f64`, so every emitted value round-trips bit for bit.
//!
//! JSON report keys, in order:
//!
//! | key          | solution | satisfaction | value                           |
//! |--------------|----------|--------------|---------------------------------|
//! | `kind`       | yes      | yes          | `"solution"` / `"satisfaction"` |
//! | `status`     | yes      | yes          | `"optimal"`, `"infeasible"`, `"unbounded"` |
//! | `objective`  | yes      | yes          | number, `null` unless optimal   |
//! | `iterations` | yes      | yes          | pivots / bisection steps        |
//! | `lambda`     |          | yes          | satisfaction degree             |
//! | `goal_lo`    |          | yes          | goal interval lower end         |
//! | `goal_hi`    |          | yes          | goal interval upper end         |
//! | `x`          | yes      | yes          | object, variable name to value  |
//!
//! The CSV report has a `field,value` header and one line per scalar, with
//! variables as `x.<name>`.

use std::fmt::Write;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::flp::{SatisfactionResult, SweepResult};
use crate::lp::{Solution, Status};
use crate::model_io::format_number;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy)]
pub enum Report<'a> {
    Solution(&'a Solution),
    Satisfaction(&'a SatisfactionResult),
}

fn opt_number(v: Option<f64>) -> String {
    v.map_or_else(String::new, format_number)
}

/// Header `M,alpha1,alpha2,G,<vars>`, one line per record in grid order,
/// then `# g_max=..., g_min=...`. Non-optimal points leave `G` and `x` empty.
pub fn emit_sweep_csv(r: &SweepResult) -> String {
    let mut out = String::from("M,alpha1,alpha2,G");
    for name in &r.var_names {
        write!(out, ",{name}").unwrap();
    }
    out.push('\n');
    for rec in &r.records {
        write!(
            out,
            "{},{},{},{}",
            r.m,
            format_number(rec.alpha1),
            format_number(rec.alpha2),
            opt_number(rec.objective)
        )
        .unwrap();
        for j in 0..r.var_names.len() {
            write!(out, ",{}", opt_number(rec.x.get(j).copied())).unwrap();
        }
        out.push('\n');
    }
    let show = |v: Option<f64>| v.map_or_else(|| "none".to_string(), format_number);
    writeln!(out, "# g_max={}, g_min={}", show(r.g_max), show(r.g_min)).unwrap();
    out
}

/// One data line of a sweep CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepCsvRow {
    pub m: u32,
    pub alpha1: f64,
    pub alpha2: f64,
    pub objective: Option<f64>,
    pub x: Vec<Option<f64>>,
}

/// Reads back the data lines of [`emit_sweep_csv`] output.
pub fn read_sweep_csv(text: &str) -> Result<Vec<SweepCsvRow>> {
    let bad = |line: usize, what: &str| Error::Model(format!("sweep csv line {line}: {what}"));
    let field = |s: &str, line: usize| -> Result<Option<f64>> {
        if s.is_empty() {
            Ok(None)
        } else {
            s.parse().map(Some).map_err(|_| bad(line, &format!("bad number '{s}'")))
        }
    };
    let mut lines = text.lines().enumerate();
    let Some((_, header)) = lines.next() else {
        return Err(bad(1, "missing header"));
    };
    let width = header.split(',').count();
    if width < 4 || !header.starts_with("M,alpha1,alpha2,G") {
        return Err(bad(1, "unexpected header"));
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != width {
            return Err(bad(lineno, "wrong number of fields"));
        }
        let required = |s: &str| field(s, lineno)?.ok_or_else(|| bad(lineno, "missing value"));
        rows.push(SweepCsvRow {
            m: cells[0].parse().map_err(|_| bad(lineno, "bad M"))?,
            alpha1: required(cells[1])?,
            alpha2: required(cells[2])?,
            objective: field(cells[3], lineno)?,
            x: cells[4..]
                .iter()
                .map(|s| field(s, lineno))
                .collect::<Result<_>>()?,
        });
    }
    Ok(rows)
}

/// Per-`M` summary: the plan at the best grid point plus `G (max)` and
/// `G (min)`.
pub fn emit_sweep_summary(results: &[SweepResult]) -> String {
    let names = results.first().map_or(&[][..], |r| &r.var_names[..]);
    let mut out = String::from("M");
    for name in names {
        write!(out, ",{name}").unwrap();
    }
    out.push_str(",G_max,G_min\n");
    for r in results {
        write!(out, "{}", r.m).unwrap();
        let best = r.best();
        for j in 0..names.len() {
            write!(out, ",{}", opt_number(best.and_then(|b| b.x.get(j).copied()))).unwrap();
        }
        writeln!(out, ",{},{}", opt_number(r.g_max), opt_number(r.g_min)).unwrap();
    }
    out
}

struct Fields {
    kind: &'static str,
    status: Status,
    objective: Option<f64>,
    iterations: usize,
    extra: Vec<(&'static str, f64)>,
    x: Vec<f64>,
}

fn fields(report: Report<'_>) -> Fields {
    match report {
        Report::Solution(s) => Fields {
            kind: "solution",
            status: s.status,
            objective: s.is_optimal().then_some(s.objective),
            iterations: s.iterations,
            extra: Vec::new(),
            x: s.x.clone(),
        },
        Report::Satisfaction(r) => Fields {
            kind: "satisfaction",
            status: Status::Optimal,
            objective: Some(r.achieved_objective),
            iterations: r.iterations,
            extra: vec![
                ("lambda", r.lambda),
                ("goal_lo", r.goal_lo),
                ("goal_hi", r.goal_hi),
            ],
            x: r.x.clone(),
        },
    }
}

/// Solution or satisfaction report; `var_names` labels the entries of `x`.
pub fn emit_solution_report(report: Report<'_>, var_names: &[String], format: ReportFormat) -> String {
    let f = fields(report);
    match format {
        ReportFormat::Json => {
            let mut obj = Map::new();
            obj.insert("kind".into(), json!(f.kind));
            obj.insert("status".into(), json!(f.status.as_str()));
            obj.insert("objective".into(), f.objective.map_or(Value::Null, |v| json!(v)));
            obj.insert("iterations".into(), json!(f.iterations));
            for (key, v) in &f.extra {
                obj.insert((*key).into(), json!(v));
            }
            let x: Map<String, Value> = var_names
                .iter()
                .zip(&f.x)
                .map(|(name, v)| (name.clone(), json!(v)))
                .collect();
            obj.insert("x".into(), Value::Object(x));
            let mut text = serde_json::to_string_pretty(&Value::Object(obj)).unwrap();
            text.push('\n');
            text
        }
        ReportFormat::Csv => {
            let mut out = String::from("field,value\n");
            writeln!(out, "kind,{}", f.kind).unwrap();
            writeln!(out, "status,{}", f.status).unwrap();
            writeln!(out, "objective,{}", opt_number(f.objective)).unwrap();
            writeln!(out, "iterations,{}", f.iterations).unwrap();
            for (key, v) in &f.extra {
                writeln!(out, "{key},{}", format_number(*v)).unwrap();
            }
            for (name, v) in var_names.iter().zip(&f.x) {
                writeln!(out, "x.{name},{}", format_number(*v)).unwrap();
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flp::{sweep, SweepGrid};
    use crate::model_io::textile_model;

    #[test]
    fn two_by_two_sweep_layout() {
        let r = sweep(&textile_model(), &SweepGrid::new(vec![0.5, 1.0], 748)).unwrap();
        let csv = emit_sweep_csv(&r);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "M,alpha1,alpha2,G,x1,x2,x3");
        assert!(lines[1].starts_with("748,1,1,"));
        assert!(lines[2].starts_with("748,1,0.5,"));
        assert!(lines[3].starts_with("748,0.5,1,"));
        assert!(lines[5].starts_with("# g_max="));

        let back = read_sweep_csv(&csv).unwrap();
        assert_eq!(back.len(), 4);
        for (row, rec) in back.iter().zip(&r.records) {
            assert_eq!(row.objective.map(f64::to_bits), rec.objective.map(f64::to_bits));
            assert_eq!(row.alpha1, rec.alpha1);
        }
    }

    #[test]
    fn solution_json_has_status() {
        let sol = Solution {
            status: Status::Optimal,
            x: vec![1.0],
            objective: 1.0,
            iterations: 1,
        };
        let text = emit_solution_report(Report::Solution(&sol), &["x".into()], ReportFormat::Json);
        let compact: String = text.split_whitespace().collect();
        assert!(compact.contains("\"status\":\"optimal\""));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["x"]["x"], json!(1.0));
    }

    #[test]
    fn infeasible_solution_has_null_objective() {
        let sol = Solution {
            status: Status::Infeasible,
            x: vec![],
            objective: f64::NAN,
            iterations: 3,
        };
        let v: Value = serde_json::from_str(&emit_solution_report(
            Report::Solution(&sol),
            &["a".into()],
            ReportFormat::Json,
        ))
        .unwrap();
        assert_eq!(v["objective"], Value::Null);
        assert_eq!(v["x"], json!({}));
        let csv = emit_solution_report(Report::Solution(&sol), &["a".into()], ReportFormat::Csv);
        assert!(csv.contains("objective,\n"));
    }

    #[test]
    fn satisfaction_fields_present() {
        let r = SatisfactionResult {
            lambda: 0.5,
            x: vec![1.0, 2.0],
            achieved_objective: 3.0,
            goal_lo: 1.0,
            goal_hi: 4.0,
            iterations: 20,
        };
        let names = ["p".to_string(), "q".to_string()];
        let v: Value = serde_json::from_str(&emit_solution_report(
            Report::Satisfaction(&r),
            &names,
            ReportFormat::Json,
        ))
        .unwrap();
        for key in ["kind", "status", "objective", "iterations", "lambda", "goal_lo", "goal_hi", "x"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let csv = emit_solution_report(Report::Satisfaction(&r), &names, ReportFormat::Csv);
        for key in ["lambda,0.5", "goal_lo,1", "goal_hi,4", "x.q,2"] {
            assert!(csv.contains(key), "missing {key}");
        }
    }

    #[test]
    fn read_rejects_malformed() {
        assert!(read_sweep_csv("").is_err());
        assert!(read_sweep_csv("a,b\n").is_err());
        assert!(read_sweep_csv("M,alpha1,alpha2,G,x\n1,1,1\n").is_err());
        assert!(read_sweep_csv("M,alpha1,alpha2,G,x\n1,1,1,abc,2\n").is_err());
    }
}
