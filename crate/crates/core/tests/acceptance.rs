//! Exit criteria. Prints one line per criterion and exits non-zero if any
//! of them fails.

mod common;

use std::collections::BTreeSet;
use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::fs;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use abc_roman::bounds::{lemma5_p, lemma6_m2};
use abc_roman::verify::{sweep_lemmas, verify_bounds, BoundsOutcome, SweepConfig, VerifyConfig};
use abc_roman::{
    abc_index, count_trees, enumerate_trees, f_min, make_path, make_star, roman_bruteforce,
    roman_path_closed_form, roman_tree_dp,
};

const EXACT_TOL: f64 = 1e-12;
const PRINTED_TOL: f64 = 5e-3;
const GAP_TOL: f64 = 1e-9;

/// Free trees on 1..=12 vertices, as counted by the Prüfer oracle.
const ORACLE_COUNTS: [usize; 12] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn within_budget(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed <= budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, budget {budget:?}"))
    }
}

fn index_laws() -> Verdict {
    let start = Instant::now();
    let mut worst = 0f64;
    for n in 3..=60 {
        let nf = n as f64;
        let path = abc_index(&make_path(n).unwrap()).value();
        let star = abc_index(&make_star(n).unwrap()).value();
        worst = worst
            .max((path - (nf - 1.0) / SQRT_2).abs())
            .max((star - ((nf - 1.0) * (nf - 2.0)).sqrt()).abs());
    }
    let time = within_budget(start.elapsed(), Duration::from_secs(1));
    verdict(
        worst <= EXACT_TOL && time.is_ok(),
        format!("max deviation {worst:.3e} over n in [3, 60] {}", time.err().unwrap_or_default()),
    )
}

fn base_case_numbers() -> Verdict {
    let p4 = abc_index(&make_path(4).unwrap()).value();
    let s4 = abc_index(&make_star(4).unwrap()).value();
    let checks = [
        ("ABC(P4) vs 2.1213", (p4 - 2.1213).abs(), PRINTED_TOL),
        ("ABC(S4) vs 2.44", (s4 - 2.44).abs(), PRINTED_TOL),
        ("ABC(P4) vs 3/sqrt(2)", (p4 - 3.0 * FRAC_1_SQRT_2).abs(), EXACT_TOL),
        ("ABC(S4) vs sqrt(6)", (s4 - 6f64.sqrt()).abs(), EXACT_TOL),
    ];
    let failing: Vec<String> = checks
        .iter()
        .filter(|(_, d, tol)| d > tol)
        .map(|(name, d, tol)| format!("{name}: |diff| {d:.4e} > {tol:e}"))
        .collect();
    let ordering = s4 > f_min(4, 3).unwrap();
    let mut detail = format!("ABC(P4) = {p4:.12}, ABC(S4) = {s4:.12}, ABC(S4) > f_min(4, 3): {ordering}");
    if !failing.is_empty() {
        detail.push_str(&format!("; {}", failing.join("; ")));
    }
    verdict(failing.is_empty() && ordering, detail)
}

fn roman_oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let mut trees = 0;
    let mut mismatches = Vec::new();
    for n in 1..=10 {
        for t in enumerate_trees(n).unwrap() {
            trees += 1;
            let dp = roman_tree_dp(&t).gamma_r;
            let brute = roman_bruteforce(&t).unwrap().gamma_r;
            if dp != brute {
                mismatches.push(format!("{:?}: dp {dp}, brute {brute}", t.edges()));
            }
        }
    }
    let time = within_budget(start.elapsed(), Duration::from_secs(60));
    let expected: usize = ORACLE_COUNTS[..10].iter().sum();
    verdict(
        trees == expected && mismatches.is_empty() && time.is_ok(),
        format!(
            "{trees} trees (expected {expected}), {} mismatches {}{}",
            mismatches.len(),
            mismatches.first().cloned().unwrap_or_default(),
            time.err().unwrap_or_default()
        ),
    )
}

fn path_and_star_laws() -> Verdict {
    let bad_paths: Vec<usize> = (1..=60)
        .filter(|&n| roman_tree_dp(&make_path(n).unwrap()).gamma_r != roman_path_closed_form(n).unwrap())
        .collect();
    let bad_stars: Vec<usize> = (3..=60)
        .filter(|&n| roman_tree_dp(&make_star(n).unwrap()).gamma_r != 2)
        .collect();
    verdict(
        bad_paths.is_empty() && bad_stars.is_empty(),
        format!("path mismatches at {bad_paths:?}, star mismatches at {bad_stars:?}"),
    )
}

fn lemma_sweeps() -> Verdict {
    let start = Instant::now();
    let reports = sweep_lemmas(&SweepConfig::default()).unwrap();
    let elapsed = start.elapsed();
    let mut failing: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().filter(|c| !c.pass).map(move |c| {
                format!(
                    "{}/{} slack {:.6e} at {:?}",
                    r.lemma.as_str(),
                    c.name,
                    c.min_slack,
                    c.worst_point
                )
            })
        })
        .collect();
    if reports.len() != 5 {
        failing.push(format!("{} reports", reports.len()));
    }
    if lemma5_p(1.0).unwrap() != -SQRT_2 {
        failing.push("p(1) != -sqrt(2)".into());
    }
    if lemma6_m2(2.0).unwrap() != -(6f64.sqrt()) {
        failing.push("m2(2) != -sqrt(6)".into());
    }
    if let Err(e) = within_budget(elapsed, Duration::from_secs(10)) {
        failing.push(e);
    }
    let passing = reports.iter().filter(|r| r.pass).count();
    verdict(
        failing.is_empty(),
        format!("{passing}/{} reports pass; failing: {failing:?}", reports.len()),
    )
}

fn bound_sweep(outcome: &BoundsOutcome, elapsed: Duration) -> Verdict {
    let v = &outcome.violations;
    let time = within_budget(elapsed, Duration::from_secs(300));
    let first = v
        .lower
        .iter()
        .chain(&v.upper)
        .next()
        .map(|f| {
            format!(
                "; first: n = {}, gamma_r = {}, abc = {:.10}, f_min = {:.10}, lower_gap = {:.4e}, edges {:?}",
                f.record.n, f.record.gamma_r, f.record.abc, f.record.f_min, f.record.lower_gap, f.edges
            )
        })
        .unwrap_or_default();
    verdict(
        v.is_empty() && time.is_ok(),
        format!(
            "{} classes for n in [4, 16], {} lower and {} upper violations{first}{}",
            outcome.records.len(),
            v.lower.len(),
            v.upper.len(),
            time.err().unwrap_or_default()
        ),
    )
}

fn equality_classes(outcome: &BoundsOutcome) -> Verdict {
    let orders: Vec<usize> = outcome.equality.iter().map(|e| e.n).collect();
    let missing_path: Vec<usize> = outcome.equality.iter().filter(|e| !e.path_in_lower).map(|e| e.n).collect();
    let missing_star: Vec<usize> = outcome.equality.iter().filter(|e| !e.star_in_upper).map(|e| e.n).collect();
    let not_path_only: Vec<usize> = outcome
        .equality
        .iter()
        .filter(|e| !e.lower_is_path_only)
        .map(|e| e.n)
        .collect();
    verdict(
        orders == (4..=16).collect::<Vec<_>>() && missing_path.is_empty() && missing_star.is_empty(),
        format!(
            "path missing at {missing_path:?}, star missing at {missing_star:?}; recorded: lower set is more than the path at {not_path_only:?}"
        ),
    )
}

fn enumeration_correctness() -> Verdict {
    let mut problems = Vec::new();
    for (i, &count) in ORACLE_COUNTS.iter().enumerate() {
        let n = i + 1;
        let oracle = common::prufer_classes(n);
        let enumerated = count_trees(n).unwrap();
        if oracle.len() != count || enumerated != oracle.len() {
            problems.push(format!("n = {n}: oracle {}, enumeration {enumerated}", oracle.len()));
        }
        if n <= 10 {
            let codes: BTreeSet<String> = enumerate_trees(n)
                .unwrap()
                .map(|t| common::ahu_code(n, t.edges()))
                .collect();
            if codes != oracle {
                problems.push(format!("n = {n}: class sets differ"));
            }
        }
    }
    verdict(problems.is_empty(), format!("n in [1, 12] {problems:?}"))
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let mut runs = Vec::new();
    for (i, workers) in ["1", "1", "4"].iter().enumerate() {
        let json = dir.path().join(format!("run{i}.json"));
        let csv = dir.path().join(format!("run{i}.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_abc-roman"))
            .args(["verify", "--n-max", "12", "--workers", workers, "--json"])
            .arg(&json)
            .arg("--csv")
            .arg(&csv)
            .output()
            .unwrap()
            .status;
        let read = |p| fs::read(p).unwrap_or_default();
        runs.push((status.code(), read(&json), read(&csv)));
    }
    let same = runs.windows(2).all(|w| w[0] == w[1]);
    let nonempty = runs.iter().all(|r| !r.1.is_empty() && !r.2.is_empty());
    verdict(
        same && nonempty,
        format!(
            "workers 1, 1, 4: exit {:?}, JSON {} bytes, CSV {} bytes, identical: {same}",
            runs.iter().map(|r| r.0).collect::<Vec<_>>(),
            runs[0].1.len(),
            runs[0].2.len()
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let outcome = verify_bounds(&VerifyConfig {
        workers: 4,
        tol: GAP_TOL,
        ..VerifyConfig::range(4, 16)
    })
    .unwrap();
    let sweep_time = start.elapsed();

    let results = [
        ("closed-form index laws", index_laws()),
        ("base-case numbers", base_case_numbers()),
        ("roman oracle equivalence", roman_oracle_equivalence()),
        ("path and star roman laws", path_and_star_laws()),
        ("lemma sweeps", lemma_sweeps()),
        ("bound sweep over n in [4, 16]", bound_sweep(&outcome, sweep_time)),
        ("equality classes", equality_classes(&outcome)),
        ("enumeration vs prufer oracle", enumeration_correctness()),
        ("determinism across worker counts", determinism()),
    ];
    let mut failed = 0;
    for (i, (name, v)) in results.iter().enumerate() {
        println!(
            "criterion {}: {} {name}: {}",
            i + 1,
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
        failed += usize::from(!v.pass);
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
