//! Run reports and their JSON / CSV renderings.
//!
//! Reports contain nothing run-dependent (no timestamps, worker counts or
//! output paths), so repeating a run reproduces the same bytes. Reals are
//! rounded to 12 significant digits before rendering.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::verify::{
    BoundsOutcome, BoundsRecord, EqualityClasses, LemmaSweepReport, Stratum, TreeFinding,
    ViolationReport,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Rounds to 12 significant digits. Non-finite values pass through.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Shortest decimal rendering of `round12(x)`.
pub fn fmt12(x: f64) -> String {
    let r = round12(x);
    if r.is_finite() {
        // serde_json prints the shortest round-trip form.
        serde_json::to_string(&r).expect("finite floats serialize")
    } else {
        r.to_string()
    }
}

pub fn sig12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round12(*x))
}

pub fn sig12_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|&x| round12(x)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Records {
    Bounds(Vec<BoundsRecord>),
    Lemmas(Vec<LemmaSweepReport>),
    Strata(Vec<Stratum>),
}

impl Records {
    pub fn len(&self) -> usize {
        match self {
            Records::Bounds(r) => r.len(),
            Records::Lemmas(r) => r.len(),
            Records::Strata(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Pass/fail summary of the bound theorems over a verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremChecks {
    pub lower_bound_holds: bool,
    pub upper_bound_holds: bool,
    pub path_in_every_lower_set: bool,
    pub star_in_every_upper_set: bool,
    /// Orders at which some non-path class also attains the lower bound.
    pub lower_set_not_path_only: Vec<usize>,
    /// Orders at which some non-star class also attains the upper bound.
    pub upper_set_not_star_only: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsFindings {
    pub checks: TheoremChecks,
    pub violations: ViolationReport,
    pub equality: Vec<EqualityClasses>,
    pub gamma_out_of_range: Vec<TreeFinding>,
}

impl BoundsFindings {
    pub fn from_outcome(outcome: &BoundsOutcome) -> Self {
        let eq = &outcome.equality;
        BoundsFindings {
            checks: TheoremChecks {
                lower_bound_holds: outcome.violations.lower.is_empty(),
                upper_bound_holds: outcome.violations.upper.is_empty(),
                path_in_every_lower_set: eq.iter().all(|e| e.path_in_lower),
                star_in_every_upper_set: eq.iter().all(|e| e.star_in_upper),
                lower_set_not_path_only: eq
                    .iter()
                    .filter(|e| !e.lower_is_path_only)
                    .map(|e| e.n)
                    .collect(),
                upper_set_not_star_only: eq
                    .iter()
                    .filter(|e| !e.upper_is_star_only)
                    .map(|e| e.n)
                    .collect(),
            },
            violations: outcome.violations.clone(),
            equality: outcome.equality.clone(),
            gamma_out_of_range: outcome.gamma_out_of_range.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaFindings {
    pub all_pass: bool,
    /// `lemma/check` names of failing checks.
    pub failing: Vec<String>,
}

impl LemmaFindings {
    pub fn from_reports(reports: &[LemmaSweepReport]) -> Self {
        let failing: Vec<String> = reports
            .iter()
            .flat_map(|r| {
                r.checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(move |c| format!("{}/{}", r.lemma.as_str(), c.name))
            })
            .collect();
        LemmaFindings {
            all_pass: failing.is_empty(),
            failing,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyFindings {
    pub bounds_hold: bool,
    pub out_of_range_strata: Vec<usize>,
}

impl SurveyFindings {
    pub fn from_strata(strata: &[Stratum]) -> Self {
        SurveyFindings {
            bounds_hold: strata.iter().all(|s| s.lower_holds && s.upper_holds),
            out_of_range_strata: strata
                .iter()
                .filter(|s| s.out_of_range)
                .map(|s| s.gamma_r)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Findings {
    Bounds(BoundsFindings),
    Lemmas(LemmaFindings),
    Survey(SurveyFindings),
}

impl Findings {
    /// Whether every expectation in the findings held.
    pub fn expectations_hold(&self) -> bool {
        match self {
            Findings::Bounds(b) => {
                b.checks.lower_bound_holds
                    && b.checks.upper_bound_holds
                    && b.checks.path_in_every_lower_set
                    && b.checks.star_in_every_upper_set
            }
            Findings::Lemmas(l) => l.all_pass,
            Findings::Survey(s) => s.bounds_hold,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

/// A complete, schema-versioned result document. Field order is fixed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub records: Records,
    pub findings: Findings,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl RunReport {
    pub fn new(command: &str, records: Records, findings: Findings) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            command: command.to_string(),
            parameters: BTreeMap::new(),
            records,
            findings,
            timing: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }
}

pub fn write_report(r: &RunReport, format: Format) -> String {
    match format {
        Format::Json => render_json(r),
        Format::Csv => render_csv(&r.records),
    }
}

pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

const BOUNDS_HEADER: [&str; 12] = [
    "n",
    "canonical",
    "gamma_r",
    "abc",
    "f_min",
    "f_max",
    "lower_gap",
    "upper_gap",
    "attains_lower",
    "attains_upper",
    "is_path",
    "is_star",
];

const STRATA_HEADER: [&str; 10] = [
    "n",
    "gamma_r",
    "count",
    "min_abc",
    "max_abc",
    "f_min",
    "f_max",
    "lower_holds",
    "upper_holds",
    "out_of_range",
];

const LEMMA_HEADER: [&str; 7] = [
    "lemma",
    "check",
    "grid",
    "worst_point",
    "min_slack",
    "tolerance",
    "pass",
];

/// Flattens the records table; findings are not part of the CSV.
pub fn render_csv(records: &Records) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let res: Result<(), csv::Error> = (|| {
        match records {
            Records::Bounds(rows) => {
                w.write_record(BOUNDS_HEADER)?;
                for r in rows {
                    w.write_record([
                        r.n.to_string(),
                        r.canonical.to_string(),
                        r.gamma_r.to_string(),
                        fmt12(r.abc),
                        fmt12(r.f_min),
                        fmt12(r.f_max),
                        fmt12(r.lower_gap),
                        fmt12(r.upper_gap),
                        r.attains_lower.to_string(),
                        r.attains_upper.to_string(),
                        r.is_path.to_string(),
                        r.is_star.to_string(),
                    ])?;
                }
            }
            Records::Strata(rows) => {
                w.write_record(STRATA_HEADER)?;
                for s in rows {
                    w.write_record([
                        s.n.to_string(),
                        s.gamma_r.to_string(),
                        s.count.to_string(),
                        fmt12(s.min_abc),
                        fmt12(s.max_abc),
                        fmt12(s.f_min),
                        fmt12(s.f_max),
                        s.lower_holds.to_string(),
                        s.upper_holds.to_string(),
                        s.out_of_range.to_string(),
                    ])?;
                }
            }
            Records::Lemmas(rows) => {
                w.write_record(LEMMA_HEADER)?;
                for r in rows {
                    for c in &r.checks {
                        let point: Vec<String> = c.worst_point.iter().map(|&x| fmt12(x)).collect();
                        w.write_record([
                            r.lemma.as_str().to_string(),
                            c.name.to_string(),
                            r.grid.clone(),
                            point.join(";"),
                            fmt12(c.min_slack),
                            fmt12(c.tolerance),
                            c.pass.to_string(),
                        ])?;
                    }
                }
            }
        }
        Ok(())
    })();
    res.expect("writing CSV to memory cannot fail");
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
}
