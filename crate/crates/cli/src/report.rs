//! Report assembly: the versioned JSON envelope shared by every subcommand,
//! plus the plain-text and CSV renderings.
//!
//! JSON reports always carry the same top-level shape — `schema`, `config`,
//! `results`, `checks` — so downstream tooling can dispatch on `schema` and
//! ignore empty sections. Scalar results carry a `tolerance` field that is
//! `null` for plain evaluations and numeric for checked quantities.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use qctrap_core::bounds::{BoundsReport, ScanRow};
use qctrap_core::qcmap::MapEvaluation;
use qctrap_core::{Parallelogram, Trapezoid};
use serde::Serialize;
use serde_json::{json, Value};

/// Schema tag carried by every JSON report; bump on breaking layout changes.
pub const SCHEMA: &str = "qctrap-report/1";

/// One named result value. `tolerance` is the numeric tolerance the value
/// was checked against, or `null` for a plain evaluation.
#[derive(Serialize)]
pub struct ResultEntry {
    pub name: &'static str,
    pub value: Value,
    pub tolerance: Option<f64>,
}

/// One verification check with its observed margin.
#[derive(Serialize, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub observed: f64,
    pub tolerance: f64,
    pub samples: usize,
    pub detail: String,
}

/// Top-level report envelope, serialized as pretty JSON.
#[derive(Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub config: BTreeMap<&'static str, Value>,
    pub results: Vec<ResultEntry>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(config: BTreeMap<&'static str, Value>) -> Self {
        Self {
            schema: SCHEMA,
            config,
            results: Vec::new(),
            checks: Vec::new(),
        }
    }

    /// Adds a plain (un-toleranced) result value.
    pub fn push(&mut self, name: &'static str, value: Value) {
        self.results.push(ResultEntry {
            name,
            value,
            tolerance: None,
        });
    }

    /// Pretty JSON with a trailing newline; key order is deterministic
    /// (struct fields in declaration order, config keys sorted).
    pub fn to_json(&self) -> String {
        let mut s =
            serde_json::to_string_pretty(self).expect("report has no non-serializable values");
        s.push('\n');
        s
    }
}

/// Builds a config map from a command name and its parameters.
pub fn config(command: &'static str, entries: &[(&'static str, Value)]) -> BTreeMap<&'static str, Value> {
    let mut map = BTreeMap::new();
    map.insert("command", Value::from(command));
    for (key, value) in entries {
        map.insert(*key, value.clone());
    }
    map
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

/// `name = value` lines for the trapezoid bounds report. Values print with
/// shortest round-trip precision.
pub fn bounds_text(r: &BoundsReport) -> String {
    let t = &r.trapezoid;
    let mut out = String::new();
    let _ = writeln!(out, "alpha = {}", t.alpha());
    let _ = writeln!(out, "d = {}", t.d());
    let _ = writeln!(out, "c = {}", t.c());
    let _ = writeln!(out, "ell = {}", t.ell());
    let _ = writeln!(out, "lower = {}", r.lower);
    let _ = writeln!(out, "lower_branch = {}", r.lower_branch);
    let _ = writeln!(out, "tau = {}", r.tau);
    let _ = writeln!(out, "upper_tau = {}", r.upper_tau);
    let _ = writeln!(out, "upper_new = {}", r.upper_new);
    let _ = writeln!(out, "k_tilde = {}", r.k_tilde);
    out
}

/// JSON envelope for the trapezoid bounds report.
pub fn bounds_report(r: &BoundsReport) -> Report {
    let t = &r.trapezoid;
    let mut report = Report::new(config(
        "bounds",
        &[("alpha", t.alpha().into()), ("d", t.d().into())],
    ));
    report.push("c", t.c().into());
    report.push("ell", t.ell().into());
    report.push("lower", r.lower.into());
    report.push("lower_branch", r.lower_branch.to_string().into());
    report.push("tau", r.tau.into());
    report.push("upper_tau", r.upper_tau.into());
    report.push("upper_new", r.upper_new.into());
    report.push("k_tilde", r.k_tilde.into());
    report
}

/// `name = value` lines for the parallelogram bound.
pub fn parallelogram_text(pg: &Parallelogram, upper_new: f64) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "alpha = {}", pg.alpha());
    let _ = writeln!(out, "a = {}", pg.a());
    let _ = writeln!(out, "half_c = {}", pg.half_c());
    let _ = writeln!(out, "half_d = {}", pg.half_d());
    let _ = writeln!(out, "upper_new = {upper_new}");
    out
}

/// JSON envelope for the parallelogram bound.
pub fn parallelogram_report(pg: &Parallelogram, upper_new: f64) -> Report {
    let mut report = Report::new(config(
        "bounds",
        &[
            ("alpha", pg.alpha().into()),
            ("a", pg.a().into()),
            ("parallelogram", true.into()),
        ],
    ));
    report.push("half_c", pg.half_c().into());
    report.push("half_d", pg.half_d().into());
    report.push("upper_new", upper_new.into());
    report
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

/// Two-line rendering of one map evaluation.
pub fn map_text(eval: &MapEvaluation, inverse: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "({}, {}) -> ({}, {})",
        eval.input.x, eval.input.y, eval.output.x, eval.output.y
    );
    let _ = writeln!(
        out,
        "direction = {}",
        if inverse { "inverse" } else { "forward" }
    );
    let _ = writeln!(out, "region = {}", eval.region);
    out
}

/// JSON envelope for one map evaluation.
pub fn map_report(t: &Trapezoid, eval: &MapEvaluation, inverse: bool) -> Report {
    let mut report = Report::new(config(
        "map",
        &[
            ("alpha", t.alpha().into()),
            ("d", t.d().into()),
            ("x", eval.input.x.into()),
            ("y", eval.input.y.into()),
            ("inverse", inverse.into()),
        ],
    ));
    report.push("input", json!({ "x": eval.input.x, "y": eval.input.y }));
    report.push("output", json!({ "x": eval.output.x, "y": eval.output.y }));
    report.push("region", eval.region.to_string().into());
    report
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

/// One line per check plus a summary line.
pub fn verify_text(t: &Trapezoid, checks: &[CheckResult]) -> String {
    let mut out = String::new();
    for c in checks {
        let _ = writeln!(
            out,
            "check {}: {} — observed {:.3e} vs tolerance {:e} ({} samples; {})",
            c.name,
            if c.pass { "PASS" } else { "FAIL" },
            c.observed,
            c.tolerance,
            c.samples,
            c.detail
        );
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let _ = writeln!(
        out,
        "verify: {}/{} checks passed for alpha = {}, d = {}",
        passed,
        checks.len(),
        t.alpha(),
        t.d()
    );
    out
}

/// JSON envelope for a verification run.
pub fn verify_report(
    t: &Trapezoid,
    resolution: usize,
    tol: f64,
    checks: Vec<CheckResult>,
) -> Report {
    let mut report = Report::new(config(
        "verify",
        &[
            ("alpha", t.alpha().into()),
            ("d", t.d().into()),
            ("resolution", resolution.into()),
            ("tol", tol.into()),
        ],
    ));
    report.checks = checks;
    report
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

/// CSV table of a bound-comparison scan: header plus one row per shape,
/// 17 significant digits, LF line endings.
pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("c,d,lower,upper_tau,upper_new\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            r.c, r.d, r.lower, r.upper_tau, r.upper_new
        );
    }
    out
}

#[derive(Serialize)]
struct JsonScanRow {
    c: f64,
    d: f64,
    lower: f64,
    upper_tau: f64,
    upper_new: f64,
}

/// JSON envelope for a bound-comparison scan; the rows land in a single
/// result entry named `scan`.
pub fn scan_report(
    alpha: f64,
    c_min: f64,
    c_max: f64,
    n: usize,
    log_spacing: bool,
    rows: &[ScanRow],
) -> Report {
    let mut report = Report::new(config(
        "scan",
        &[
            ("alpha", alpha.into()),
            ("c_min", c_min.into()),
            ("c_max", c_max.into()),
            ("n", n.into()),
            (
                "spacing",
                if log_spacing { "log" } else { "uniform" }.into(),
            ),
        ],
    ));
    let rows: Vec<JsonScanRow> = rows
        .iter()
        .map(|r| JsonScanRow {
            c: r.c,
            d: r.d,
            lower: r.lower,
            upper_tau: r.upper_tau,
            upper_new: r.upper_new,
        })
        .collect();
    report.push(
        "scan",
        serde_json::to_value(rows).expect("rows are plain numbers"),
    );
    report
}
