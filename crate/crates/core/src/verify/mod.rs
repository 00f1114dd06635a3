//! Exhaustive checks of the ABC bounds over every tree of each order, plus
//! grid sweeps of the supporting scalar inequalities.
//!
//! Nothing here panics on a failed expectation. Violations and equality sets
//! are returned as data so callers decide what counts as failure.

mod lemmas;

pub use lemmas::{sweep_lemmas, LemmaId, LemmaSweepReport, SweepCheck, SweepConfig, SweepError};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::abc::abc_index;
use crate::bounds::{f_max, f_min, BoundsError};
use crate::enumerate::{check_order, enumerate_trees_capped, EnumError, DEFAULT_MAX_ORDER};
use crate::graph::{CanonicalCode, Tree, Vertex};
use crate::report::sig12;
use crate::roman::{roman_bruteforce, roman_tree_dp, RomanError, BRUTE_FORCE_MAX_ORDER};

/// Gap below which a bound counts as attained.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Smallest order the bound theorems speak about.
pub const MIN_VERIFY_ORDER: usize = 4;

const CHUNK: usize = 4096;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Roman(#[from] RomanError),
    #[error("invalid order range [{n_min}, {n_max}]; need {MIN_VERIFY_ORDER} <= n_min <= n_max")]
    BadRange { n_min: usize, n_max: usize },
    #[error("tolerance must be finite and non-negative, got {0}")]
    BadTolerance(f64),
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("could not build worker pool: {0}")]
    Pool(String),
    #[error("dynamic program gave {dp} but brute force gave {brute} on {code}")]
    RomanMismatch {
        code: CanonicalCode,
        dp: usize,
        brute: usize,
    },
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub tol: f64,
    pub workers: usize,
    pub cap: usize,
    /// Recompute the Roman domination number by exhaustive search wherever
    /// that is feasible and fail on any disagreement with the DP.
    pub cross_check: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_min: MIN_VERIFY_ORDER,
            n_max: 10,
            tol: DEFAULT_TOLERANCE,
            workers: 1,
            cap: DEFAULT_MAX_ORDER,
            cross_check: false,
        }
    }
}

impl VerifyConfig {
    pub fn range(n_min: usize, n_max: usize) -> Self {
        VerifyConfig {
            n_min,
            n_max,
            ..Default::default()
        }
    }
}

/// One isomorphism class of trees, scored against both bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsRecord {
    pub n: usize,
    pub canonical: CanonicalCode,
    pub gamma_r: usize,
    #[serde(serialize_with = "sig12")]
    pub abc: f64,
    #[serde(serialize_with = "sig12")]
    pub f_min: f64,
    #[serde(serialize_with = "sig12")]
    pub f_max: f64,
    #[serde(serialize_with = "sig12")]
    pub lower_gap: f64,
    #[serde(serialize_with = "sig12")]
    pub upper_gap: f64,
    pub attains_lower: bool,
    pub attains_upper: bool,
    pub is_path: bool,
    pub is_star: bool,
}

impl BoundsRecord {
    pub fn compute(t: &Tree, gamma_r: usize, tol: f64) -> Result<Self, BoundsError> {
        let n = t.n();
        let abc = abc_index(t).value();
        let f_min = f_min(n, gamma_r)?;
        let f_max = f_max(n, gamma_r)?;
        let lower_gap = abc - f_min;
        let upper_gap = f_max - abc;
        Ok(BoundsRecord {
            n,
            canonical: t.canonical_code(),
            gamma_r,
            abc,
            f_min,
            f_max,
            lower_gap,
            upper_gap,
            attains_lower: lower_gap.abs() < tol,
            attains_upper: upper_gap.abs() < tol,
            is_path: t.is_path(),
            is_star: t.is_star(),
        })
    }

    pub fn violates_lower(&self, tol: f64) -> bool {
        self.lower_gap < -tol
    }

    pub fn violates_upper(&self, tol: f64) -> bool {
        self.upper_gap < -tol
    }

    /// Whether `gamma_r` lies in `[2, ceil(2n/3)]`.
    pub fn gamma_in_expected_range(&self) -> bool {
        gamma_in_expected_range(self.n, self.gamma_r)
    }
}

fn gamma_in_expected_range(n: usize, gamma_r: usize) -> bool {
    (2..=(2 * n).div_ceil(3)).contains(&gamma_r)
}

/// A tree together with its record, for findings that need the edge list.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TreeFinding {
    pub record: BoundsRecord,
    pub edges: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ViolationReport {
    pub lower: Vec<TreeFinding>,
    pub upper: Vec<TreeFinding>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.lower.is_empty() && self.upper.is_empty()
    }

    pub fn len(&self) -> usize {
        self.lower.len() + self.upper.len()
    }
}

/// The classes of one order that hit each bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityClasses {
    pub n: usize,
    pub lower_set: Vec<CanonicalCode>,
    pub upper_set: Vec<CanonicalCode>,
    pub path_in_lower: bool,
    pub star_in_upper: bool,
    /// The path is the only class attaining the lower bound.
    pub lower_is_path_only: bool,
    /// The star is the only class attaining the upper bound.
    pub upper_is_star_only: bool,
}

impl EqualityClasses {
    /// Builds from the records of a single order.
    pub fn from_records(n: usize, records: &[BoundsRecord]) -> Self {
        let of_order = || records.iter().filter(move |r| r.n == n);
        let lower: Vec<&BoundsRecord> = of_order().filter(|r| r.attains_lower).collect();
        let upper: Vec<&BoundsRecord> = of_order().filter(|r| r.attains_upper).collect();
        EqualityClasses {
            n,
            path_in_lower: lower.iter().any(|r| r.is_path),
            star_in_upper: upper.iter().any(|r| r.is_star),
            lower_is_path_only: lower.len() == 1 && lower[0].is_path,
            upper_is_star_only: upper.len() == 1 && upper[0].is_star,
            lower_set: lower.iter().map(|r| r.canonical.clone()).collect(),
            upper_set: upper.iter().map(|r| r.canonical.clone()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsOutcome {
    /// Sorted by `(n, canonical)`.
    pub records: Vec<BoundsRecord>,
    pub violations: ViolationReport,
    pub equality: Vec<EqualityClasses>,
    /// Trees whose Roman domination number falls outside `[2, ceil(2n/3)]`.
    pub gamma_out_of_range: Vec<TreeFinding>,
}

/// Scores every tree with `n_min <= n <= n_max` against both bounds.
pub fn verify_bounds(config: &VerifyConfig) -> Result<BoundsOutcome, VerifyError> {
    let VerifyConfig {
        n_min,
        n_max,
        tol,
        ..
    } = *config;
    if n_min < MIN_VERIFY_ORDER || n_min > n_max {
        return Err(VerifyError::BadRange { n_min, n_max });
    }
    check_tol(tol)?;
    check_order(n_max, config.cap)?;

    let mut scored = Vec::new();
    for n in n_min..=n_max {
        scored.extend(score_order(n, config)?);
    }
    scored.sort_by(|a, b| (a.0.n, &a.0.canonical).cmp(&(b.0.n, &b.0.canonical)));

    let mut violations = ViolationReport::default();
    let mut gamma_out_of_range = Vec::new();
    for (record, tree) in &scored {
        let finding = || TreeFinding {
            record: record.clone(),
            edges: tree.edges().to_vec(),
        };
        if record.violates_lower(tol) {
            violations.lower.push(finding());
        }
        if record.violates_upper(tol) {
            violations.upper.push(finding());
        }
        if !record.gamma_in_expected_range() {
            gamma_out_of_range.push(finding());
        }
    }
    let records: Vec<BoundsRecord> = scored.into_iter().map(|(r, _)| r).collect();
    let equality = (n_min..=n_max)
        .map(|n| EqualityClasses::from_records(n, &records))
        .collect();
    Ok(BoundsOutcome {
        records,
        violations,
        equality,
        gamma_out_of_range,
    })
}

/// Equality sets for a single order.
pub fn equality_classes(n: usize, tol: f64, cap: usize) -> Result<EqualityClasses, VerifyError> {
    check_tol(tol)?;
    let config = VerifyConfig {
        n_min: n,
        n_max: n,
        tol,
        cap,
        ..Default::default()
    };
    let records: Vec<BoundsRecord> = score_order(n, &config)?.into_iter().map(|(r, _)| r).collect();
    Ok(EqualityClasses::from_records(n, &records))
}

/// Trees of one order grouped by Roman domination number.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stratum {
    pub n: usize,
    pub gamma_r: usize,
    pub count: usize,
    #[serde(serialize_with = "sig12")]
    pub min_abc: f64,
    #[serde(serialize_with = "sig12")]
    pub max_abc: f64,
    #[serde(serialize_with = "sig12")]
    pub f_min: f64,
    #[serde(serialize_with = "sig12")]
    pub f_max: f64,
    pub lower_holds: bool,
    pub upper_holds: bool,
    /// Set when `gamma_r` is outside `[2, ceil(2n/3)]`.
    pub out_of_range: bool,
}

/// Strata ordered by `gamma_r`; empty strata are omitted.
pub fn survey(n: usize, tol: f64, cap: usize) -> Result<Vec<Stratum>, VerifyError> {
    check_tol(tol)?;
    let config = VerifyConfig {
        n_min: n,
        n_max: n,
        tol,
        cap,
        ..Default::default()
    };
    let mut strata: BTreeMap<usize, Stratum> = BTreeMap::new();
    for (r, _) in score_order(n, &config)? {
        let s = strata.entry(r.gamma_r).or_insert_with(|| Stratum {
            n,
            gamma_r: r.gamma_r,
            count: 0,
            min_abc: f64::INFINITY,
            max_abc: f64::NEG_INFINITY,
            f_min: r.f_min,
            f_max: r.f_max,
            lower_holds: true,
            upper_holds: true,
            out_of_range: !gamma_in_expected_range(n, r.gamma_r),
        });
        s.count += 1;
        s.min_abc = s.min_abc.min(r.abc);
        s.max_abc = s.max_abc.max(r.abc);
    }
    Ok(strata
        .into_values()
        .map(|mut s| {
            s.lower_holds = s.min_abc >= s.f_min - tol;
            s.upper_holds = s.max_abc <= s.f_max + tol;
            s
        })
        .collect())
}

fn check_tol(tol: f64) -> Result<(), VerifyError> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(())
    } else {
        Err(VerifyError::BadTolerance(tol))
    }
}

fn score_order(n: usize, config: &VerifyConfig) -> Result<Vec<(BoundsRecord, Tree)>, VerifyError> {
    if config.workers == 0 {
        return Err(VerifyError::NoWorkers);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    let brute = config.cross_check && n <= BRUTE_FORCE_MAX_ORDER;
    let mut stream = enumerate_trees_capped(n, config.cap)?;
    let mut out = Vec::new();
    loop {
        let chunk: Vec<Tree> = stream.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let scored: Result<Vec<_>, VerifyError> = pool.install(|| {
            chunk
                .into_par_iter()
                .map(|t| {
                    let gamma_r = roman_tree_dp(&t).gamma_r;
                    let record = BoundsRecord::compute(&t, gamma_r, config.tol)?;
                    if brute {
                        let exact = roman_bruteforce(&t)?.gamma_r;
                        if exact != gamma_r {
                            return Err(VerifyError::RomanMismatch {
                                code: record.canonical,
                                dp: gamma_r,
                                brute: exact,
                            });
                        }
                    }
                    Ok((record, t))
                })
                .collect()
        });
        out.extend(scored?);
    }
    Ok(out)
}
