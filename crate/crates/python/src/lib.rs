//! Python bindings. Trees are exposed as an immutable `Tree` class, reports
//! as the same JSON documents the command line tool writes, decoded to dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use abc_roman::bounds;
use abc_roman::edgelist;
use abc_roman::report::{
    render_json, BoundsFindings, Findings, LemmaFindings, Records, RunReport, SurveyFindings,
};
use abc_roman::verify::{self, SweepConfig, VerifyConfig};
use abc_roman::{Graph, RomanAssignment, RomanResult};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(module = "abc_roman_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Tree {
    inner: abc_roman::Tree,
}

impl From<abc_roman::Tree> for Tree {
    fn from(inner: abc_roman::Tree) -> Self {
        Tree { inner }
    }
}

#[pymethods]
impl Tree {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        abc_roman::Tree::new(n, edges).map(Tree::from).map_err(value_error)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        abc_roman::make_path(n).map(Tree::from).map_err(value_error)
    }

    #[staticmethod]
    fn star(n: usize) -> PyResult<Self> {
        abc_roman::make_star(n).map(Tree::from).map_err(value_error)
    }

    #[staticmethod]
    fn spider(legs: Vec<usize>) -> PyResult<Self> {
        abc_roman::make_spider(&legs).map(Tree::from).map_err(value_error)
    }

    #[staticmethod]
    fn from_edgelist(text: &str) -> PyResult<Self> {
        edgelist::parse_edgelist(text).map(Tree::from).map_err(value_error)
    }

    fn to_edgelist(&self) -> String {
        edgelist::write_edgelist(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees().as_slice().to_vec()
    }

    fn is_path(&self) -> bool {
        self.inner.is_path()
    }

    fn is_star(&self) -> bool {
        self.inner.is_star()
    }

    fn diameter(&self) -> usize {
        self.inner.diameter()
    }

    fn center(&self) -> Vec<usize> {
        self.inner.center()
    }

    fn canonical_code(&self) -> String {
        self.inner.canonical_code().to_string()
    }

    fn isomorphic(&self, other: &Tree) -> bool {
        self.inner.canonical_code() == other.inner.canonical_code()
    }

    fn relabel(&self, perm: Vec<usize>) -> PyResult<Self> {
        self.inner.relabel(&perm).map(Tree::from).map_err(value_error)
    }

    fn abc_index(&self) -> f64 {
        abc_roman::abc_index(&self.inner).value()
    }

    /// `(gamma_r, witness)` from the tree DP.
    fn roman(&self) -> (usize, Vec<u8>) {
        unpack(abc_roman::roman_tree_dp(&self.inner))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.inner.n().hash(&mut h);
        self.inner.edges().hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("Tree(n={}, edges={:?})", self.inner.n(), self.inner.edges())
    }
}

fn unpack(r: RomanResult) -> (usize, Vec<u8>) {
    (r.gamma_r, r.witness.labels().to_vec())
}

#[pyfunction]
fn abc_index(tree: &Tree) -> f64 {
    tree.abc_index()
}

#[pyfunction]
fn edge_contribution(du: usize, dv: usize) -> PyResult<f64> {
    abc_roman::edge_contribution(du, dv).map_err(value_error)
}

#[pyfunction]
fn roman_tree_dp(tree: &Tree) -> (usize, Vec<u8>) {
    tree.roman()
}

/// Exhaustive search on any simple graph with at most 14 vertices.
#[pyfunction]
fn roman_bruteforce(n: usize, edges: Vec<(usize, usize)>) -> PyResult<(usize, Vec<u8>)> {
    let g = Graph::new(n, edges).map_err(value_error)?;
    abc_roman::roman_bruteforce(&g).map(unpack).map_err(value_error)
}

#[pyfunction]
fn is_valid_rdf(n: usize, edges: Vec<(usize, usize)>, labels: Vec<u8>) -> PyResult<bool> {
    let g = Graph::new(n, edges).map_err(value_error)?;
    let a = RomanAssignment::new(labels).map_err(value_error)?;
    abc_roman::is_valid_rdf(&g, &a).map_err(value_error)
}

#[pyfunction]
fn roman_path_closed_form(n: usize) -> PyResult<usize> {
    abc_roman::roman_path_closed_form(n).map_err(value_error)
}

#[pyfunction]
fn f_min(n: usize, gamma_r: usize) -> PyResult<f64> {
    bounds::f_min(n, gamma_r).map_err(value_error)
}

#[pyfunction]
fn f_max(n: usize, gamma_r: usize) -> PyResult<f64> {
    bounds::f_max(n, gamma_r).map_err(value_error)
}

#[pyfunction]
fn lemma1_m(a: f64) -> PyResult<f64> {
    bounds::lemma1_m(a).map_err(value_error)
}

#[pyfunction]
fn lemma2_q(a: f64, b: f64) -> PyResult<f64> {
    bounds::lemma2_q(a, b).map_err(value_error)
}

#[pyfunction]
fn lemma3_xi(a: f64, b: f64) -> PyResult<f64> {
    bounds::lemma3_xi(a, b).map_err(value_error)
}

#[pyfunction]
fn lemma5_p(t: f64) -> PyResult<f64> {
    bounds::lemma5_p(t).map_err(value_error)
}

#[pyfunction]
fn lemma6_m2(t: f64) -> PyResult<f64> {
    bounds::lemma6_m2(t).map_err(value_error)
}

#[pyfunction]
fn enumerate_trees(n: usize) -> PyResult<Vec<Tree>> {
    abc_roman::enumerate_trees(n)
        .map(|s| s.map(Tree::from).collect())
        .map_err(value_error)
}

#[pyfunction]
fn count_trees(n: usize) -> PyResult<usize> {
    abc_roman::count_trees(n).map_err(value_error)
}

#[pyfunction]
fn parse_edgelists(text: &str) -> PyResult<Vec<Tree>> {
    edgelist::parse_edgelists(text)
        .map(|ts| ts.into_iter().map(Tree::from).collect())
        .map_err(value_error)
}

/// Same document as `abc-roman verify --json`.
#[pyfunction]
#[pyo3(signature = (n_max, n_min = verify::MIN_VERIFY_ORDER, tol = verify::DEFAULT_TOLERANCE, workers = 1))]
fn verify_bounds<'py>(
    py: Python<'py>,
    n_max: usize,
    n_min: usize,
    tol: f64,
    workers: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let config = VerifyConfig {
        n_min,
        n_max,
        tol,
        workers,
        ..VerifyConfig::default()
    };
    let outcome = py
        .detach(|| verify::verify_bounds(&config))
        .map_err(value_error)?;
    let findings = BoundsFindings::from_outcome(&outcome);
    let report = RunReport::new("verify", Records::Bounds(outcome.records), Findings::Bounds(findings))
        .param("n_min", n_min)
        .param("n_max", n_max)
        .param("tol", tol);
    json_to_py(py, &render_json(&report))
}

#[pyfunction]
#[pyo3(signature = (grid_max = 200.0, step = 0.25))]
fn sweep_lemmas<'py>(py: Python<'py>, grid_max: f64, step: f64) -> PyResult<Bound<'py, PyAny>> {
    let config = SweepConfig {
        grid_max,
        step,
        ..SweepConfig::default()
    };
    let reports = verify::sweep_lemmas(&config).map_err(value_error)?;
    let findings = LemmaFindings::from_reports(&reports);
    let report = RunReport::new("lemmas", Records::Lemmas(reports), Findings::Lemmas(findings))
        .param("grid_max", grid_max)
        .param("step", step)
        .param("t_max", config.t_max)
        .param("t_samples", config.t_samples);
    json_to_py(py, &render_json(&report))
}

#[pyfunction]
fn survey<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let strata = verify::survey(n, verify::DEFAULT_TOLERANCE, abc_roman::enumerate::DEFAULT_MAX_ORDER)
        .map_err(value_error)?;
    let findings = SurveyFindings::from_strata(&strata);
    let report = RunReport::new("survey", Records::Strata(strata), Findings::Survey(findings))
        .param("n", n)
        .param("tol", verify::DEFAULT_TOLERANCE);
    json_to_py(py, &render_json(&report))
}

#[pyfunction]
fn bound_pair<'py>(py: Python<'py>, n: usize, gamma_r: usize) -> PyResult<Bound<'py, PyDict>> {
    let pair = bounds::BoundPair::new(n, gamma_r).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("n", pair.n)?;
    d.set_item("gamma_r", pair.gamma_r)?;
    d.set_item("f_min", pair.f_min)?;
    d.set_item("f_max", pair.f_max)?;
    Ok(d)
}

#[pymodule]
fn abc_roman_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Tree>()?;
    m.add_function(wrap_pyfunction!(abc_index, m)?)?;
    m.add_function(wrap_pyfunction!(edge_contribution, m)?)?;
    m.add_function(wrap_pyfunction!(roman_tree_dp, m)?)?;
    m.add_function(wrap_pyfunction!(roman_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(is_valid_rdf, m)?)?;
    m.add_function(wrap_pyfunction!(roman_path_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(f_min, m)?)?;
    m.add_function(wrap_pyfunction!(f_max, m)?)?;
    m.add_function(wrap_pyfunction!(bound_pair, m)?)?;
    m.add_function(wrap_pyfunction!(lemma1_m, m)?)?;
    m.add_function(wrap_pyfunction!(lemma2_q, m)?)?;
    m.add_function(wrap_pyfunction!(lemma3_xi, m)?)?;
    m.add_function(wrap_pyfunction!(lemma5_p, m)?)?;
    m.add_function(wrap_pyfunction!(lemma6_m2, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_trees, m)?)?;
    m.add_function(wrap_pyfunction!(count_trees, m)?)?;
    m.add_function(wrap_pyfunction!(parse_edgelists, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_lemmas, m)?)?;
    m.add_function(wrap_pyfunction!(survey, m)?)?;
    Ok(())
}
