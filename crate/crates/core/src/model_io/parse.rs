use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;

use crate::flp::{Coeff, FuzzyCoeff, FuzzyLinearProgram, FuzzyRow};
use crate::lp::{Relation, Sense};
use crate::membership::{Logistic, SCurve};

/// Raw model text plus where it came from, kept verbatim for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelSource {
    pub text: String,
    pub origin: String,
}

impl ModelSource {
    pub fn inline(origin: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            text: text.into(),
            origin: origin.into(),
        }
    }

    pub fn from_path(path: impl AsRef<Path>) -> std::io::Result<Self> {
        let path = path.as_ref();
        Ok(Self {
            text: std::fs::read_to_string(path)?,
            origin: path.display().to_string(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// A located message. Lines and columns are 1-based; columns count chars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub severity: Severity,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}:{}: {kind}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedModel {
    pub model: FuzzyLinearProgram,
    pub warnings: Vec<ParseDiagnostic>,
}

/// Parses a model, collecting every diagnostic. Any error means no model.
pub fn parse_model(src: &ModelSource) -> Result<ParsedModel, Vec<ParseDiagnostic>> {
    let mut parser = Parser::default();
    for (idx, raw) in src.text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        parser.line(idx + 1, line);
    }
    parser.finish()
}

#[derive(Debug, Clone, Copy)]
enum RawCoeff {
    Crisp(f64),
    Fuzzy {
        lower: f64,
        nominal: Option<f64>,
        upper: f64,
    },
}

#[derive(Debug, Clone, Copy)]
struct Term {
    var: usize,
    coeff: RawCoeff,
    line: usize,
    column: usize,
}

struct RawRow {
    label: String,
    terms: Vec<Term>,
    relation: Relation,
    rhs: f64,
}

#[derive(Default)]
struct Parser {
    diags: Vec<ParseDiagnostic>,
    vars: Vec<String>,
    index: HashMap<String, usize>,
    objective: Option<(Sense, Vec<Term>)>,
    rows: Vec<RawRow>,
    labels: HashSet<String>,
    bounds: HashMap<usize, f64>,
    params: Option<Logistic>,
    in_block: bool,
    objective_attempted: bool,
}

/// Error raised inside a line; carries the 1-based column.
struct LineError(usize, String);

type LineResult<T> = Result<T, LineError>;

impl Parser {
    fn error(&mut self, line: usize, column: usize, message: impl Into<String>) {
        self.diags.push(ParseDiagnostic {
            severity: Severity::Error,
            line,
            column,
            message: message.into(),
        });
    }

    fn warning(&mut self, line: usize, column: usize, message: impl Into<String>) {
        self.diags.push(ParseDiagnostic {
            severity: Severity::Warning,
            line,
            column,
            message: message.into(),
        });
    }

    fn var(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        self.vars.push(name.to_string());
        self.index.insert(name.to_string(), self.vars.len() - 1);
        self.vars.len() - 1
    }

    fn line(&mut self, lineno: usize, text: &str) {
        let mut cur = Cursor::new(text, lineno);
        cur.skip_ws();
        if cur.at_end() {
            return;
        }
        if let Err(LineError(column, message)) = self.statement(&mut cur) {
            self.error(lineno, column, message);
        }
    }

    fn statement(&mut self, cur: &mut Cursor) -> LineResult<()> {
        let start = cur.column();
        let checkpoint = cur.pos;
        let head = cur.ident();
        cur.skip_ws();

        if head.as_deref() == Some("subject") {
            let after = cur.pos;
            if cur.ident().as_deref() == Some("to") {
                cur.skip_ws();
                if cur.eat(":") {
                    cur.expect_end()?;
                    if self.in_block {
                        self.warning(cur.lineno, start, "repeated 'subject to:' block header");
                    }
                    self.in_block = true;
                    return Ok(());
                }
            }
            cur.pos = after;
        }

        match head {
            Some(name) if cur.eat(":") => match name.as_str() {
                "maximize" | "minimize" => {
                    if self.objective_attempted {
                        return Err(LineError(start, "objective already defined".into()));
                    }
                    self.objective_attempted = true;
                    let sense = if name == "maximize" {
                        Sense::Maximize
                    } else {
                        Sense::Minimize
                    };
                    let terms = self.expression(cur)?;
                    cur.expect_end()?;
                    self.objective = Some((sense, terms));
                    Ok(())
                }
                "scurve" => self.scurve(cur, start),
                _ if self.in_block => self.row(cur, name, start),
                _ => Err(LineError(start, format!("unknown directive '{name}'"))),
            },
            Some(name) if self.in_block => {
                let relation_col = cur.column();
                match cur.relation() {
                    Some(Relation::Ge) => {
                        let value = cur.signed_number()?;
                        cur.expect_end()?;
                        let var = self.var(&name);
                        if self.bounds.insert(var, value).is_some() {
                            self.warning(
                                cur.lineno,
                                start,
                                format!("lower bound on '{name}' redefined"),
                            );
                        }
                        Ok(())
                    }
                    Some(Relation::Le) => Err(LineError(
                        relation_col,
                        "upper bounds are not variable bounds here; write a labelled row".into(),
                    )),
                    _ => {
                        cur.pos = checkpoint;
                        Err(LineError(start, "constraint row needs a label ('name: ...')".into()))
                    }
                }
            }
            _ => Err(LineError(
                start,
                "expected a directive ('maximize:', 'minimize:', 'subject to:' or 'scurve:')"
                    .into(),
            )),
        }
    }

    fn scurve(&mut self, cur: &mut Cursor, start: usize) -> LineResult<()> {
        if self.params.is_some() {
            return Err(LineError(start, "scurve parameters already defined".into()));
        }
        let defaults = Logistic::default();
        let (mut b, mut c, mut d) = (None, None, None);
        loop {
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
            let key_col = cur.column();
            let key = cur
                .ident()
                .ok_or_else(|| LineError(key_col, "expected parameter name B, C or d".into()))?;
            cur.skip_ws();
            if !cur.eat("=") {
                return Err(LineError(cur.column(), "expected '=' after parameter name".into()));
            }
            let value = cur.signed_number()?;
            let slot = match key.as_str() {
                "B" => &mut b,
                "C" => &mut c,
                "d" => &mut d,
                other => {
                    return Err(LineError(key_col, format!("unknown scurve parameter '{other}'")))
                }
            };
            if slot.replace(value).is_some() {
                return Err(LineError(key_col, format!("parameter '{key}' given twice")));
            }
        }
        let params = Logistic::new(
            b.unwrap_or(defaults.scale),
            c.unwrap_or(defaults.shape),
            d.unwrap_or(defaults.steepness),
        )
        .map_err(|e| LineError(start, e.to_string()))?;
        self.params = Some(params);
        Ok(())
    }

    fn row(&mut self, cur: &mut Cursor, label: String, start: usize) -> LineResult<()> {
        let terms = self.expression(cur)?;
        cur.skip_ws();
        let relation_col = cur.column();
        let relation = cur
            .relation()
            .ok_or_else(|| LineError(relation_col, "expected '<=', '>=' or '='".into()))?;
        let rhs = cur.signed_number()?;
        cur.expect_end()?;
        if relation != Relation::Le {
            if let Some(t) = terms.iter().find(|t| matches!(t.coeff, RawCoeff::Fuzzy { .. })) {
                return Err(LineError(
                    t.column,
                    "fuzzy coefficients are only allowed in '<=' rows".into(),
                ));
            }
        }
        if !self.labels.insert(label.clone()) {
            self.warning(cur.lineno, start, format!("duplicate row label '{label}'"));
        }
        self.rows.push(RawRow {
            label,
            terms,
            relation,
            rhs,
        });
        Ok(())
    }

    /// `[+|-] term { (+|-) term }`, stopping before a relation or the end.
    fn expression(&mut self, cur: &mut Cursor) -> LineResult<Vec<Term>> {
        let mut terms: Vec<Term> = Vec::new();
        loop {
            cur.skip_ws();
            if cur.at_end() || cur.at_relation() {
                break;
            }
            let sign_col = cur.column();
            let negative = if cur.eat("-") {
                true
            } else if cur.eat("+") || terms.is_empty() {
                false
            } else {
                return Err(LineError(sign_col, "expected '+' or '-' between terms".into()));
            };
            cur.skip_ws();
            let column = cur.column();
            let coeff = match cur.peek() {
                Some('~') => {
                    if negative {
                        return Err(LineError(
                            column,
                            "fuzzy coefficient cannot be negated; write the negative interval instead"
                                .into(),
                        ));
                    }
                    Some(cur.fuzzy()?)
                }
                Some(ch) if ch.is_ascii_digit() || ch == '.' => {
                    let v = cur.number()?;
                    Some(RawCoeff::Crisp(if negative { -v } else { v }))
                }
                _ => None,
            };
            cur.skip_ws();
            if coeff.is_some() {
                cur.eat("*");
                cur.skip_ws();
            }
            let var_col = cur.column();
            let Some(name) = cur.ident() else {
                return Err(LineError(var_col, "expected a variable name".into()));
            };
            let var = self.var(&name);
            if terms.iter().any(|t| t.var == var) {
                return Err(LineError(var_col, format!("variable '{name}' appears twice")));
            }
            let coeff = coeff.unwrap_or(RawCoeff::Crisp(if negative { -1.0 } else { 1.0 }));
            terms.push(Term {
                var,
                coeff,
                line: cur.lineno,
                column,
            });
        }
        if terms.is_empty() {
            return Err(LineError(cur.column(), "expected at least one term".into()));
        }
        Ok(terms)
    }

    fn finish(mut self) -> Result<ParsedModel, Vec<ParseDiagnostic>> {
        let Some((sense, objective_terms)) = self.objective.take() else {
            if !self.objective_attempted {
                self.error(1, 1, "missing 'maximize:' or 'minimize:' line");
            }
            return Err(self.diags);
        };
        let params = self.params.unwrap_or_default();
        let n = self.vars.len();

        let resolve = |terms: &[Term], diags: &mut Vec<ParseDiagnostic>| -> Vec<Coeff> {
            let mut out = vec![Coeff::Crisp(0.0); n];
            for t in terms {
                out[t.var] = match t.coeff {
                    RawCoeff::Crisp(v) => Coeff::Crisp(v),
                    RawCoeff::Fuzzy {
                        lower,
                        nominal,
                        upper,
                    } => {
                        let built = SCurve::new(params, lower, upper).and_then(|curve| match nominal {
                            Some(v) => FuzzyCoeff::with_nominal(curve, v),
                            None => Ok(FuzzyCoeff::new(curve)),
                        });
                        match built {
                            Ok(f) => Coeff::Fuzzy(f),
                            Err(e) => {
                                diags.push(ParseDiagnostic {
                                    severity: Severity::Error,
                                    line: t.line,
                                    column: t.column,
                                    message: e.to_string(),
                                });
                                Coeff::Crisp(0.0)
                            }
                        }
                    }
                };
            }
            out
        };

        let mut diags = std::mem::take(&mut self.diags);
        let objective = resolve(&objective_terms, &mut diags);
        let rows: Vec<FuzzyRow> = self
            .rows
            .iter()
            .map(|r| FuzzyRow {
                label: r.label.clone(),
                coeffs: resolve(&r.terms, &mut diags),
                relation: r.relation,
                rhs: r.rhs,
            })
            .collect();
        if diags.iter().any(|d| d.severity == Severity::Error) {
            return Err(diags);
        }

        let var_lower = (0..n).map(|j| self.bounds.get(&j).copied().unwrap_or(0.0)).collect();
        match FuzzyLinearProgram::new(sense, objective, rows, var_lower, self.vars, params) {
            Ok(model) => Ok(ParsedModel {
                model,
                warnings: diags,
            }),
            Err(e) => {
                diags.push(ParseDiagnostic {
                    severity: Severity::Error,
                    line: 1,
                    column: 1,
                    message: e.to_string(),
                });
                Err(diags)
            }
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    lineno: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, lineno: usize) -> Self {
        Self {
            text,
            pos: 0,
            lineno,
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn at_end(&self) -> bool {
        self.rest().trim().is_empty()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> LineResult<()> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(LineError(self.column(), "unexpected trailing input".into()))
        }
    }

    fn ident(&mut self) -> Option<String> {
        let rest = self.rest();
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let end = chars
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_' || c == '.'))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += end;
        Some(rest[..end].to_string())
    }

    fn at_relation(&self) -> bool {
        let r = self.rest();
        r.starts_with("<=") || r.starts_with(">=") || r.starts_with('=')
    }

    fn relation(&mut self) -> Option<Relation> {
        self.skip_ws();
        if self.eat("<=") {
            Some(Relation::Le)
        } else if self.eat(">=") {
            Some(Relation::Ge)
        } else if self.eat("=") {
            Some(Relation::Eq)
        } else {
            None
        }
    }

    /// Unsigned decimal literal with optional fraction and exponent.
    fn number(&mut self) -> LineResult<f64> {
        let column = self.column();
        let bytes = self.rest().as_bytes();
        let mut i = 0;
        let mut digits = 0;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
            digits += 1;
        }
        if i < bytes.len() && bytes[i] == b'.' {
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
                digits += 1;
            }
        }
        if digits == 0 {
            return Err(LineError(column, "expected a number".into()));
        }
        if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
            let mut j = i + 1;
            if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                j += 1;
            }
            if j < bytes.len() && bytes[j].is_ascii_digit() {
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                i = j;
            }
        }
        let literal = &self.rest()[..i];
        let value: f64 = literal
            .parse()
            .map_err(|_| LineError(column, format!("invalid number '{literal}'")))?;
        if !value.is_finite() {
            return Err(LineError(column, format!("number '{literal}' is out of range")));
        }
        self.pos += i;
        Ok(value)
    }

    fn signed_number(&mut self) -> LineResult<f64> {
        self.skip_ws();
        let negative = if self.eat("-") {
            true
        } else {
            self.eat("+");
            false
        };
        self.skip_ws();
        let v = self.number()?;
        Ok(if negative { -v } else { v })
    }

    /// `~(lo, hi)` or `~(lo, nominal, hi)`.
    fn fuzzy(&mut self) -> LineResult<RawCoeff> {
        let column = self.column();
        self.eat("~");
        self.skip_ws();
        if !self.eat("(") {
            return Err(LineError(self.column(), "expected '(' after '~'".into()));
        }
        let mut values = vec![self.signed_number()?];
        loop {
            self.skip_ws();
            if self.eat(")") {
                break;
            }
            if !self.eat(",") {
                return Err(LineError(self.column(), "expected ',' or ')' in fuzzy interval".into()));
            }
            values.push(self.signed_number()?);
        }
        let (lower, nominal, upper) = match values[..] {
            [lo, hi] => (lo, None, hi),
            [lo, mid, hi] => (lo, Some(mid), hi),
            _ => {
                return Err(LineError(
                    column,
                    "fuzzy interval takes two or three numbers".into(),
                ))
            }
        };
        if !(lower < upper) {
            return Err(LineError(
                column,
                "fuzzy interval lower bound must be < upper bound".into(),
            ));
        }
        if let Some(m) = nominal {
            if !(lower..=upper).contains(&m) {
                return Err(LineError(column, "nominal value must lie inside the interval".into()));
            }
        }
        Ok(RawCoeff::Fuzzy {
            lower,
            nominal,
            upper,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flp::Coeff;
    use crate::model_io::TEXTILE_MODEL;

    fn parse(text: &str) -> Result<ParsedModel, Vec<ParseDiagnostic>> {
        parse_model(&ModelSource::inline("test", text))
    }

    fn errors(text: &str) -> Vec<ParseDiagnostic> {
        parse(text).expect_err("should fail")
    }

    #[test]
    fn textile_parses_cleanly() {
        let parsed = parse(TEXTILE_MODEL).unwrap();
        assert!(parsed.warnings.is_empty());
        let m = parsed.model;
        assert_eq!(m.num_vars(), 3);
        assert_eq!(m.rows().len(), 7);
        assert_eq!(m.var_names(), ["x1", "x2", "x3"]);
        assert!(m.has_fuzzy_objective());
        assert!(!m.has_fuzzy_rows());
    }

    #[test]
    fn empty_constraint_block() {
        let m = parse("maximize: 1.0 x\nsubject to:\n").unwrap().model;
        assert_eq!(m.num_vars(), 1);
        assert!(m.rows().is_empty());
    }

    #[test]
    fn reversed_interval_located() {
        let d = errors("maximize: ~(2, 1) x\n");
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].message, "fuzzy interval lower bound must be < upper bound");
        assert_eq!((d[0].line, d[0].column), (1, 11));
    }

    #[test]
    fn collects_multiple_errors() {
        let text = "maximize: 1 x + 2 y\nfrobnicate: 3\nsubject to:\n  c1: x + y <= \n  c2: x ~ y <= 3\n";
        let d = errors(text);
        let lines: Vec<usize> = d.iter().map(|d| d.line).collect();
        assert_eq!(lines, vec![2, 4, 5]);
        assert_eq!(d[0].message, "unknown directive 'frobnicate'");
        assert_eq!(d[0].column, 1);
    }

    #[test]
    fn duplicate_labels_warn() {
        let parsed = parse("maximize: x\nsubject to:\n a: x <= 1\n a: x <= 2\n").unwrap();
        assert_eq!(parsed.warnings.len(), 1);
        assert_eq!(parsed.warnings[0].severity, Severity::Warning);
        assert_eq!(parsed.warnings[0].line, 4);
    }

    #[test]
    fn unlabelled_bounds_and_signs() {
        let m = parse("minimize: - 2 x + y - z\nsubject to:\n  x >= -3\n  c: x + 2 * y - 1.5e1 z = 4\n")
            .unwrap()
            .model;
        assert_eq!(m.var_lower(), [-3.0, 0.0, 0.0]);
        assert_eq!(m.objective(), [Coeff::Crisp(-2.0), Coeff::Crisp(1.0), Coeff::Crisp(-1.0)]);
        assert_eq!(
            m.rows()[0].coeffs,
            vec![Coeff::Crisp(1.0), Coeff::Crisp(2.0), Coeff::Crisp(-15.0)]
        );
        assert_eq!(m.rows()[0].relation, Relation::Eq);
    }

    #[test]
    fn scurve_directive() {
        let m = parse("scurve: d=10 B=0.9\nmaximize: ~(1,2) x\n").unwrap().model;
        assert_eq!(m.params(), Logistic::new(0.9, 0.001, 10.0).unwrap());
        let d = errors("scurve: d=-1\nmaximize: x\n");
        assert_eq!(d[0].line, 1);
        let d = errors("scurve: k=1\nmaximize: x\n");
        assert_eq!((d[0].line, d[0].column), (1, 9));
    }

    #[test]
    fn misc_errors() {
        assert_eq!(errors("subject to:\n")[0].message, "missing 'maximize:' or 'minimize:' line");
        assert!(errors("maximize: x\nmaximize: x\n")[0].message.contains("already"));
        assert!(errors("maximize: x\nsubject to:\n x + 1 <= 2\n")[0].message.contains("label"));
        assert!(errors("maximize: x\nsubject to:\n x <= 2\n")[0].message.contains("upper bounds"));
        assert!(errors("maximize: x x\n")[0].message.contains("'+' or '-'"));
        assert!(errors("maximize: x + x\n")[0].message.contains("twice"));
        assert!(errors("maximize: - ~(1,2) x\n")[0].message.contains("negated"));
        assert!(errors("maximize: x\nsubject to:\n r: ~(1,2) x >= 1\n")[0]
            .message
            .contains("only allowed"));
        assert!(errors("maximize: ~(3, 2, 1) x\n")[0].message.contains("lower bound"));
        assert!(errors("maximize: ~(1, 3, 2.5) x\n")[0].message.contains("nominal"));
        assert!(errors("maximize: 1 x\nsubject to:\n r: x <= 1 2\n")[0].message.contains("trailing"));
        assert!(errors("maximize:\n")[0].message.contains("at least one term"));
        assert!(errors("x + y\n")[0].message.contains("expected a directive"));
    }

    #[test]
    fn comments_and_unicode_columns() {
        let text = "# héllo\nmaximize: x # trailing\nsubject to:\n  é: x <= 1\n";
        let d = errors(text);
        assert_eq!((d[0].line, d[0].column), (4, 3));
    }
}
