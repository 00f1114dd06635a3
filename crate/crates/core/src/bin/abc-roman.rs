use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use abc_roman::edgelist::{parse_edgelist, parse_graph, write_edgelists};
use abc_roman::enumerate::{enumerate_trees_capped, DEFAULT_MAX_ORDER};
use abc_roman::report::{
    fmt12, render_json, write_report, BoundsFindings, Findings, Format, LemmaFindings, Records,
    RunReport, SurveyFindings,
};
use abc_roman::verify::{
    survey, sweep_lemmas, verify_bounds, SweepConfig, VerifyConfig, DEFAULT_TOLERANCE,
    MIN_VERIFY_ORDER,
};
use abc_roman::{abc_index, roman_bruteforce, roman_tree_dp, BoundPair};

const EXIT_USAGE: u8 = 1;
const EXIT_EXPECTATION_FAILED: u8 = 2;

/// ABC index, Roman domination and extremal bound verification for trees.
#[derive(Debug, Parser)]
#[command(name = "abc-roman", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ABC index of the tree in an edge-list file.
    Abc { file: PathBuf },
    /// Roman domination number and an optimal labeling.
    Roman {
        file: PathBuf,
        /// Exhaustive search; accepts any simple graph up to 14 vertices.
        #[arg(long)]
        brute: bool,
    },
    /// Evaluate the lower and upper bound functions.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gamma: usize,
    },
    /// Write every non-isomorphic tree of order N as edge lists.
    GenTrees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check both bounds on every tree with n_min <= n <= n_max.
    Verify {
        #[arg(long, default_value_t = MIN_VERIFY_ORDER)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Findings go to FILE.findings.json next to it.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Grid sweeps of the scalar lemmas.
    Lemmas {
        #[arg(long, default_value_t = 200.0)]
        grid_max: f64,
        #[arg(long, default_value_t = 0.25)]
        step: f64,
    },
    /// Per Roman-domination-number summary of all trees of order N.
    Survey {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Usage(String),
    Expectation,
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let start = Instant::now();
    let result = run(cli.command);
    eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Expectation) => ExitCode::from(EXIT_EXPECTATION_FAILED),
    }
}

fn enum_cap() -> Result<usize, Failure> {
    match std::env::var("TREE_ENUM_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("TREE_ENUM_CAP must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Abc { file } => {
            let tree = parse_edgelist(&read(&file)?)?;
            println!("{}", fmt12(abc_index(&tree).value()));
        }
        Command::Roman { file, brute } => {
            let text = read(&file)?;
            let (result, method) = if brute {
                (roman_bruteforce(&parse_graph(&text)?)?, "brute-force")
            } else {
                (roman_tree_dp(&parse_edgelist(&text)?), "tree-dp")
            };
            let out = json!({
                "gamma_r": result.gamma_r,
                "witness": result.witness,
                "method": method,
            });
            print!("{}", render_json(&out));
        }
        Command::Bounds { n, gamma } => {
            let pair = BoundPair::new(n, gamma)?;
            let out = json!({
                "n": n,
                "gamma_r": gamma,
                "f_min": abc_roman::report::round12(pair.f_min),
                "f_max": abc_roman::report::round12(pair.f_max),
            });
            print!("{}", render_json(&out));
        }
        Command::GenTrees { n, out } => {
            let trees: Vec<_> = enumerate_trees_capped(n, enum_cap()?)?.collect();
            let text = write_edgelists(&trees);
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            eprintln!("{} trees of order {n}", trees.len());
        }
        Command::Verify {
            n_min,
            n_max,
            tol,
            workers,
            json,
            csv,
        } => {
            let config = VerifyConfig {
                n_min,
                n_max,
                tol,
                workers,
                cap: enum_cap()?,
                cross_check: false,
            };
            let outcome = verify_bounds(&config)?;
            let findings = BoundsFindings::from_outcome(&outcome);
            eprintln!(
                "{} classes, {} violations (lower {}, upper {}), {} with Roman number out of range",
                outcome.records.len(),
                outcome.violations.len(),
                outcome.violations.lower.len(),
                outcome.violations.upper.len(),
                outcome.gamma_out_of_range.len(),
            );
            let report = RunReport::new(
                "verify",
                Records::Bounds(outcome.records),
                Findings::Bounds(findings),
            )
            .param("n_min", n_min)
            .param("n_max", n_max)
            .param("tol", tol);
            emit(&report, json.as_deref(), csv.as_deref())?;
        }
        Command::Lemmas { grid_max, step } => {
            let config = SweepConfig {
                grid_max,
                step,
                ..Default::default()
            };
            let reports = sweep_lemmas(&config)?;
            for r in &reports {
                eprintln!("{}: {}", r.lemma.as_str(), if r.pass { "pass" } else { "FAIL" });
            }
            let findings = LemmaFindings::from_reports(&reports);
            let report = RunReport::new("lemmas", Records::Lemmas(reports), Findings::Lemmas(findings))
                .param("grid_max", grid_max)
                .param("step", step)
                .param("t_max", config.t_max)
                .param("t_samples", config.t_samples);
            emit(&report, None, None)?;
        }
        Command::Survey { n } => {
            let strata = survey(n, DEFAULT_TOLERANCE, enum_cap()?)?;
            let findings = SurveyFindings::from_strata(&strata);
            let report = RunReport::new("survey", Records::Strata(strata), Findings::Survey(findings))
                .param("n", n)
                .param("tol", DEFAULT_TOLERANCE);
            emit(&report, None, None)?;
        }
    }
    Ok(())
}

/// Writes the report and turns failed expectations into exit status 2.
fn emit(report: &RunReport, json: Option<&Path>, csv: Option<&Path>) -> Result<(), Failure> {
    if let Some(path) = json {
        write(path, &write_report(report, Format::Json))?;
    }
    if let Some(path) = csv {
        write(path, &write_report(report, Format::Csv))?;
        let mut sidecar = path.as_os_str().to_owned();
        sidecar.push(".findings.json");
        write(Path::new(&sidecar), &render_json(&report.findings))?;
    }
    if json.is_none() && csv.is_none() {
        print!("{}", write_report(report, Format::Json));
    }
    if report.findings.expectations_hold() {
        Ok(())
    } else {
        Err(Failure::Expectation)
    }
}
