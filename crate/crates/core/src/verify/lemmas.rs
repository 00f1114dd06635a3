use std::f64::consts::SQRT_2;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{lemma1_m, lemma2_q, lemma3_xi, lemma5_p, lemma6_m2};
use crate::report::{sig12, sig12_vec};

/// Slack allowed when a monotonicity claim is checked between grid points.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Slack allowed on inequality claims.
pub const INEQUALITY_TOL: f64 = 1e-9;
/// Agreement required with constants printed to four decimals.
pub const PRINTED_TOL: f64 = 1e-4;

const XI_PRINTED_MIN: f64 = 0.7962;
const F1_AT_3_PRINTED: f64 = 0.9258;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SweepError {
    #[error("grid maximum must be at least 10, got {0}")]
    GridTooSmall(f64),
    #[error("grid step must be positive and below the grid span, got {0}")]
    BadStep(f64),
    #[error("tail sample needs t_max >= 10 and at least 2 samples")]
    BadTail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaId {
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma5,
    Lemma6,
}

impl LemmaId {
    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::Lemma1 => "lemma1",
            LemmaId::Lemma2 => "lemma2",
            LemmaId::Lemma3 => "lemma3",
            LemmaId::Lemma5 => "lemma5",
            LemmaId::Lemma6 => "lemma6",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Upper end of the `a` and `b` grids.
    pub grid_max: f64,
    pub step: f64,
    /// Upper end of the log-spaced `t` grid for the one-variable lemmas.
    pub t_max: f64,
    pub t_samples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            grid_max: 200.0,
            step: 0.25,
            t_max: 1e6,
            t_samples: 2001,
        }
    }
}

/// One claim evaluated over a grid. `pass` iff `min_slack >= -tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepCheck {
    pub name: &'static str,
    #[serde(serialize_with = "sig12_vec")]
    pub worst_point: Vec<f64>,
    #[serde(serialize_with = "sig12")]
    pub min_slack: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaSweepReport {
    pub lemma: LemmaId,
    pub grid: String,
    /// Worst point, slack and tolerance of the check with the least margin.
    #[serde(serialize_with = "sig12_vec")]
    pub worst_point: Vec<f64>,
    #[serde(serialize_with = "sig12")]
    pub min_slack: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub checks: Vec<SweepCheck>,
}

impl LemmaSweepReport {
    fn new(lemma: LemmaId, grid: String, checks: Vec<SweepCheck>) -> Self {
        let tightest = checks
            .iter()
            .min_by(|x, y| (x.min_slack + x.tolerance).total_cmp(&(y.min_slack + y.tolerance)))
            .expect("every lemma has at least one check");
        LemmaSweepReport {
            lemma,
            grid,
            worst_point: tightest.worst_point.clone(),
            min_slack: tightest.min_slack,
            tolerance: tightest.tolerance,
            pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }

    pub fn check(&self, name: &str) -> Option<&SweepCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Tracks the first point of least slack, in visiting order.
struct Tracker {
    name: &'static str,
    tolerance: f64,
    min: f64,
    at: Vec<f64>,
}

impl Tracker {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Tracker {
            name,
            tolerance,
            min: f64::INFINITY,
            at: Vec::new(),
        }
    }

    fn observe(&mut self, slack: f64, point: &[f64]) {
        // NaN slack always counts as the worst seen.
        if slack < self.min || (slack.is_nan() && !self.min.is_nan()) {
            self.min = slack;
            self.at = point.to_vec();
        }
    }

    fn finish(self) -> SweepCheck {
        SweepCheck {
            name: self.name,
            pass: self.min >= -self.tolerance,
            worst_point: self.at,
            min_slack: self.min,
            tolerance: self.tolerance,
        }
    }
}

fn linear_grid(start: f64, end: f64, step: f64) -> Vec<f64> {
    let count = ((end - start) / step + 1e-9).floor() as usize;
    (0..=count).map(|i| start + i as f64 * step).collect()
}

/// `samples` log-spaced points from `start` to `end`, both ends exact.
fn log_grid(start: f64, end: f64, samples: usize) -> Vec<f64> {
    let ratio = (end / start).ln();
    (0..samples)
        .map(|i| match i {
            0 => start,
            i if i == samples - 1 => end,
            i => start * (ratio * i as f64 / (samples - 1) as f64).exp(),
        })
        .collect()
}

fn eval(v: Result<f64, crate::bounds::BoundsError>) -> f64 {
    v.expect("sweep grids stay inside the function domains")
}

pub fn sweep_lemmas(config: &SweepConfig) -> Result<Vec<LemmaSweepReport>, SweepError> {
    let SweepConfig {
        grid_max,
        step,
        t_max,
        t_samples,
    } = *config;
    if !(grid_max >= 10.0) || !grid_max.is_finite() {
        return Err(SweepError::GridTooSmall(grid_max));
    }
    if !(step > 0.0) || !(step < grid_max - 3.0) {
        return Err(SweepError::BadStep(step));
    }
    if !(t_max >= 10.0) || !t_max.is_finite() || t_samples < 2 {
        return Err(SweepError::BadTail);
    }
    let a_grid = linear_grid(3.0, grid_max, step);
    let b_grid = linear_grid(2.0, grid_max, step);
    let ab_desc = format!(
        "a in [3, {grid_max}] and b in [2, {grid_max}], step {step}, a-major"
    );
    Ok(vec![
        sweep_lemma1(&a_grid, t_max, &format!("a in [3, {grid_max}], step {step}; tail a = {t_max}")),
        sweep_lemma2(&a_grid, &b_grid, ab_desc.clone()),
        sweep_lemma3(&a_grid, &b_grid, ab_desc),
        sweep_lemma5(&log_grid(1.0, t_max, t_samples), t_samples, t_max),
        sweep_lemma6(&log_grid(2.0, t_max, t_samples), t_samples, t_max),
    ])
}

fn sweep_lemma1(a_grid: &[f64], t_max: f64, grid: &str) -> LemmaSweepReport {
    let mut increasing = Tracker::new("increasing", IDENTITY_TOL);
    for w in a_grid.windows(2) {
        increasing.observe(eval(lemma1_m(w[1])) - eval(lemma1_m(w[0])), &[w[0]]);
    }
    let mut tail = Tracker::new("tail below 1", INEQUALITY_TOL);
    tail.observe(1.0 - eval(lemma1_m(t_max)), &[t_max]);
    LemmaSweepReport::new(LemmaId::Lemma1, grid.to_string(), vec![increasing.finish(), tail.finish()])
}

fn sweep_lemma2(a_grid: &[f64], b_grid: &[f64], grid: String) -> LemmaSweepReport {
    let mut decreasing = Tracker::new("decreasing in a", IDENTITY_TOL);
    for w in a_grid.windows(2) {
        for &b in b_grid {
            let slack = eval(lemma2_q(w[0], b)) - eval(lemma2_q(w[1], b));
            decreasing.observe(slack, &[w[0], b]);
        }
    }
    let mut row = Tracker::new("zero on b = 2", 0.0);
    for &a in a_grid {
        row.observe(0.0 - eval(lemma2_q(a, 2.0)).abs(), &[a, 2.0]);
    }
    LemmaSweepReport::new(LemmaId::Lemma2, grid, vec![decreasing.finish(), row.finish()])
}

fn sweep_lemma3(a_grid: &[f64], b_grid: &[f64], grid: String) -> LemmaSweepReport {
    let threshold = 5f64.sqrt() / (2.0 * SQRT_2);
    let mut above = Tracker::new("above sqrt(5)/(2 sqrt(2))", 0.0);
    let mut printed = Tracker::new("minimum vs 0.7962", 0.0);
    for &a in a_grid {
        for &b in b_grid {
            let xi = eval(lemma3_xi(a, b));
            above.observe(xi - threshold, &[a, b]);
            printed.observe(xi - (XI_PRINTED_MIN - PRINTED_TOL), &[a, b]);
        }
    }
    let mut f1 = Tracker::new("f1(3) = 0.9258", 0.0);
    f1.observe(PRINTED_TOL - (eval(lemma1_m(3.0)) - F1_AT_3_PRINTED).abs(), &[3.0]);
    LemmaSweepReport::new(
        LemmaId::Lemma3,
        grid,
        vec![above.finish(), printed.finish(), f1.finish()],
    )
}

struct RangeLemma {
    id: LemmaId,
    f: fn(f64) -> Result<f64, crate::bounds::BoundsError>,
    start: f64,
    lower: f64,
    upper: f64,
    endpoint_tol: f64,
}

fn sweep_range(lemma: RangeLemma, grid: &[f64], desc: String) -> LemmaSweepReport {
    let mut lower = Tracker::new("lower bound", INEQUALITY_TOL);
    let mut upper = Tracker::new("upper bound", INEQUALITY_TOL);
    let mut monotone = Tracker::new("non-decreasing", INEQUALITY_TOL);
    let values: Vec<f64> = grid.iter().map(|&t| eval((lemma.f)(t))).collect();
    for (&t, &v) in grid.iter().zip(&values) {
        lower.observe(v - lemma.lower, &[t]);
        upper.observe(lemma.upper - v, &[t]);
    }
    for (w, v) in grid.windows(2).zip(values.windows(2)) {
        monotone.observe(v[1] - v[0], &[w[0]]);
    }
    let mut endpoint = Tracker::new("endpoint value", lemma.endpoint_tol);
    endpoint.observe(0.0 - (values[0] - lemma.lower).abs(), &[lemma.start]);
    LemmaSweepReport::new(
        lemma.id,
        desc,
        vec![lower.finish(), upper.finish(), monotone.finish(), endpoint.finish()],
    )
}

fn sweep_lemma5(grid: &[f64], samples: usize, t_max: f64) -> LemmaSweepReport {
    sweep_range(
        RangeLemma {
            id: LemmaId::Lemma5,
            f: lemma5_p,
            start: 1.0,
            lower: -SQRT_2,
            upper: -1.0,
            endpoint_tol: 0.0,
        },
        grid,
        format!("t = a - b in [1, {t_max}], {samples} log-spaced points"),
    )
}

fn sweep_lemma6(grid: &[f64], samples: usize, t_max: f64) -> LemmaSweepReport {
    sweep_range(
        RangeLemma {
            id: LemmaId::Lemma6,
            f: lemma6_m2,
            start: 2.0,
            lower: -(6f64.sqrt()),
            upper: -2.0,
            endpoint_tol: 0.0,
        },
        grid,
        format!("t = a - b in [2, {t_max}], {samples} log-spaced points"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        let g = linear_grid(3.0, 4.0, 0.25);
        assert_eq!(g, vec![3.0, 3.25, 3.5, 3.75, 4.0]);
        let l = log_grid(1.0, 1e6, 7);
        assert_eq!(l[0], 1.0);
        assert_eq!(l[6], 1e6);
        assert!((l[3] - 1e3).abs() < 1e-9);
    }

    #[test]
    fn rejects_degenerate_configs() {
        let bad = |grid_max, step| SweepConfig {
            grid_max,
            step,
            ..Default::default()
        };
        assert_eq!(sweep_lemmas(&bad(9.0, 0.25)), Err(SweepError::GridTooSmall(9.0)));
        assert_eq!(sweep_lemmas(&bad(50.0, 0.0)), Err(SweepError::BadStep(0.0)));
        assert_eq!(sweep_lemmas(&bad(50.0, -1.0)), Err(SweepError::BadStep(-1.0)));
        assert_eq!(sweep_lemmas(&bad(50.0, 47.0)), Err(SweepError::BadStep(47.0)));
        assert!(matches!(sweep_lemmas(&bad(f64::NAN, 1.0)), Err(SweepError::GridTooSmall(_))));
    }

    #[test]
    fn tracker_keeps_first_minimum() {
        let mut t = Tracker::new("x", 0.0);
        t.observe(1.0, &[0.0]);
        t.observe(0.5, &[1.0]);
        t.observe(0.5, &[2.0]);
        let c = t.finish();
        assert_eq!(c.worst_point, vec![1.0]);
        assert!(c.pass);
    }
}
