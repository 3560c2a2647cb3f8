//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! witnesses, reports and evidence are plain dicts.

use std::time::Duration;

use fatchroma_core::fat::{Conflict, Violation};
use fatchroma_core::generators::FamilySpec;
use fatchroma_core::reproduce::{default_theorems, CaseResult, CaseStatus, Theorem};
use fatchroma_core::solver::{
    self, Bounds, Outcome, ProperColoring, SearchStats, SolveOptions, SolveReport, Witness,
};
use fatchroma_core::{graph, FatWitness, InferenceOutcome, Partition, Rational, Verdict};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyString};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "fatchroma", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: fatchroma_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = fatchroma_core::Graph::from_edges(n, edges).map_err(value_error)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = graph::parse_graph6(text).map_err(value_error)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_dimacs(text: &str) -> PyResult<Self> {
        let inner = graph::parse_dimacs(text).map_err(value_error)?;
        Ok(Self { inner })
    }

    fn to_graph6(&self) -> String {
        graph::emit_graph6(&self.inner)
    }

    fn to_dimacs(&self) -> String {
        graph::emit_dimacs(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.inner.degree(v))
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.inner.has_edge(u, v)
    }

    /// `{"degrees", "min_degree", "min_positive_degree", "degree_gcd"}`.
    fn degree_stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = fatchroma_core::degree_stats(&self.inner);
        let d = PyDict::new(py);
        d.set_item("degrees", s.degrees)?;
        d.set_item("min_degree", s.min_degree)?;
        d.set_item("min_positive_degree", s.min_positive_degree)?;
        d.set_item("degree_gcd", s.degree_gcd)?;
        Ok(d)
    }

    fn components(&self) -> Vec<Vec<usize>> {
        fatchroma_core::connected_components(&self.inner).components
    }

    fn __len__(&self) -> usize {
        self.n()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={}, graph6={:?})",
            self.n(),
            self.m(),
            self.to_graph6()
        )
    }
}

impl PyGraph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(value_error(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n()
            )))
        }
    }
}

fn fraction<'py>(py: Python<'py>, r: Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer(), r.denom()))
}

/// Accepts `Fraction`, `int` or a `"p/q"` string; floats are refused.
fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(s) = obj.cast::<PyString>() {
        return s.to_str()?.parse().map_err(value_error);
    }
    if obj.is_instance_of::<pyo3::types::PyFloat>() {
        return Err(PyTypeError::new_err(
            "parameters must be exact: pass a Fraction, int or \"p/q\"",
        ));
    }
    let part = |name| -> PyResult<u64> {
        obj.getattr(name)
            .map_err(|_| PyTypeError::new_err("expected a Fraction, int or \"p/q\" string"))?
            .extract()
            .map_err(|_| value_error("parameters must be non-negative"))
    };
    let (n, d) = (part("numerator")?, part("denominator")?);
    if d == 0 {
        return Err(value_error("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

fn witness_dict<'py>(py: Python<'py>, w: &FatWitness) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("k", w.k())?;
    d.set_item("blocks", w.blocks().to_vec())?;
    d.set_item("alpha", fraction(py, w.alpha())?)?;
    d.set_item("beta", fraction(py, w.beta())?)?;
    Ok(d)
}

fn coloring_dict<'py>(py: Python<'py>, c: &ProperColoring) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("k", c.k)?;
    d.set_item("colors", c.colors.clone())?;
    Ok(d)
}

fn violation_dict<'py>(py: Python<'py>, v: &Violation) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("vertex", v.vertex)?;
    d.set_item("block", v.block)?;
    d.set_item("parameter", v.parameter.to_string())?;
    d.set_item("value", fraction(py, v.value)?)?;
    d.set_item("observed", v.observed)?;
    d.set_item("degree", v.degree)?;
    d.set_item("message", v.to_string())?;
    Ok(d)
}

fn conflict_dict<'py>(py: Python<'py>, c: &Conflict) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("parameter", c.parameter.to_string())?;
    d.set_item("vertex", c.vertex)?;
    d.set_item("block", c.block)?;
    d.set_item("observed", c.observed)?;
    d.set_item("degree", c.degree)?;
    d.set_item("ratio", fraction(py, c.ratio)?)?;
    let pinned = PyDict::new(py);
    pinned.set_item("vertex", c.pinned.vertex)?;
    pinned.set_item("block", c.pinned.block)?;
    pinned.set_item("value", fraction(py, c.pinned.value)?)?;
    d.set_item("pinned", pinned)?;
    d.set_item("message", c.to_string())?;
    Ok(d)
}

fn bounds_dict<'py>(py: Python<'py>, b: &Bounds) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("lower", b.lower)?;
    d.set_item("upper", b.upper)?;
    d.set_item("lower_reason", b.lower_reason.to_string())?;
    d.set_item("upper_reason", b.upper_reason.to_string())?;
    Ok(d)
}

fn stats_dict<'py>(py: Python<'py>, s: &SearchStats) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("nodes", s.nodes)?;
    d.set_item("branches_closed", s.branches_closed)?;
    d.set_item("wall_time", s.wall_time.as_secs_f64())?;
    Ok(d)
}

fn report_dict<'py>(py: Python<'py>, r: &SolveReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    match &r.outcome {
        Outcome::Solved { value, witness } => {
            d.set_item("status", "solved")?;
            d.set_item("value", value)?;
            match witness {
                Witness::Fat(w) => d.set_item("witness", witness_dict(py, w)?)?,
                Witness::Proper(c) => d.set_item("witness", coloring_dict(py, c)?)?,
            }
        }
        Outcome::TimedOut => {
            d.set_item("status", "timeout")?;
            d.set_item("value", py.None())?;
            d.set_item("witness", py.None())?;
        }
    }
    d.set_item("bounds", bounds_dict(py, &r.bounds)?)?;
    d.set_item("stats", stats_dict(py, &r.stats)?)?;
    Ok(d)
}

fn options(
    timeout: Option<f64>,
    threads: Option<usize>,
    deterministic: bool,
) -> PyResult<SolveOptions> {
    let timeout = timeout
        .map(|t| Duration::try_from_secs_f64(t).map_err(|e| value_error(format!("timeout: {e}"))))
        .transpose()?;
    if threads == Some(0) {
        return Err(value_error("threads must be at least 1"));
    }
    Ok(SolveOptions {
        timeout,
        threads,
        deterministic,
        ..SolveOptions::default()
    })
}

fn partition(g: &PyGraph, blocks: Vec<Vec<usize>>) -> PyResult<Partition> {
    Partition::new(g.n(), blocks).map_err(value_error)
}

/// Builds a family instance, e.g. `generate("crown", n=5)`.
#[pyfunction]
#[pyo3(signature = (family, **params))]
fn generate(family: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<PyGraph> {
    let mut pairs = Vec::new();
    if let Some(params) = params {
        for (k, v) in params.iter() {
            pairs.push(format!(
                "{}={}",
                k.extract::<String>()?,
                v.extract::<usize>()?
            ));
        }
    }
    let spec = FamilySpec::parse(family, &pairs.join(",")).map_err(value_error)?;
    Ok(PyGraph {
        inner: spec.build().map_err(value_error)?,
    })
}

/// Checks a partition against fixed parameters. Returns
/// `{"accepted": True, "witness": ...}` or `{"accepted": False, "violation": ...}`.
#[pyfunction]
fn verify_fat<'py>(
    py: Python<'py>,
    g: &PyGraph,
    blocks: Vec<Vec<usize>>,
    alpha: &Bound<'py, PyAny>,
    beta: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyDict>> {
    let p = partition(g, blocks)?;
    let verdict = fatchroma_core::verify_fat(&g.inner, &p, rational(alpha)?, rational(beta)?)
        .map_err(value_error)?;
    let d = PyDict::new(py);
    match verdict {
        Verdict::Accepted(w) => {
            d.set_item("accepted", true)?;
            d.set_item("witness", witness_dict(py, &w)?)?;
        }
        Verdict::Rejected(v) => {
            d.set_item("accepted", false)?;
            d.set_item("violation", violation_dict(py, &v)?)?;
        }
    }
    Ok(d)
}

/// Derives the unique `(alpha, beta)` a partition could use. Returns
/// `{"accepted": True, "witness": ...}` or `{"accepted": False, "conflict": ...}`.
#[pyfunction]
fn infer_fat_parameters<'py>(
    py: Python<'py>,
    g: &PyGraph,
    blocks: Vec<Vec<usize>>,
) -> PyResult<Bound<'py, PyDict>> {
    let p = partition(g, blocks)?;
    let d = PyDict::new(py);
    match fatchroma_core::infer_fat_parameters(&g.inner, &p).map_err(value_error)? {
        InferenceOutcome::Witness(w) => {
            d.set_item("accepted", true)?;
            d.set_item("witness", witness_dict(py, &w)?)?;
        }
        InferenceOutcome::Conflict(c) => {
            d.set_item("accepted", false)?;
            d.set_item("conflict", conflict_dict(py, &c)?)?;
        }
    }
    Ok(d)
}

/// One block per connected component.
#[pyfunction]
fn component_coloring<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    witness_dict(py, &fatchroma_core::component_coloring(&g.inner))
}

/// `{"lower", "upper", "lower_reason", "upper_reason"}` for the FAT chromatic number.
#[pyfunction]
fn bounds<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    bounds_dict(py, &solver::chi_fat_upper_bound(&g.inner))
}

#[pyfunction]
#[pyo3(signature = (g, timeout = None, threads = None, deterministic = true))]
fn chi_fat<'py>(
    py: Python<'py>,
    g: &PyGraph,
    timeout: Option<f64>,
    threads: Option<usize>,
    deterministic: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let opts = options(timeout, threads, deterministic)?;
    let report = py
        .detach(|| solver::chi_fat(&g.inner, &opts))
        .map_err(value_error)?;
    report_dict(py, &report)
}

#[pyfunction]
#[pyo3(signature = (g, timeout = None))]
fn chromatic_number<'py>(
    py: Python<'py>,
    g: &PyGraph,
    timeout: Option<f64>,
) -> PyResult<Bound<'py, PyDict>> {
    let opts = options(timeout, None, true)?;
    let report = py
        .detach(|| solver::chromatic_number(&g.inner, &opts))
        .map_err(value_error)?;
    report_dict(py, &report)
}

/// Decides every k. Returns `{"feasible": {k: witness}, "infeasible",
/// "undecided", "chi_fat", "stats"}`.
#[pyfunction]
#[pyo3(signature = (g, timeout = None, threads = None, deterministic = true, cap = solver::DEFAULT_SPECTRUM_CAP))]
fn fat_spectrum<'py>(
    py: Python<'py>,
    g: &PyGraph,
    timeout: Option<f64>,
    threads: Option<usize>,
    deterministic: bool,
    cap: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let opts = SolveOptions {
        spectrum_cap: cap,
        ..options(timeout, threads, deterministic)?
    };
    let report = py
        .detach(|| solver::fat_spectrum(&g.inner, &opts))
        .map_err(value_error)?;
    let feasible = PyDict::new(py);
    for (k, w) in &report.feasible {
        feasible.set_item(k, witness_dict(py, w)?)?;
    }
    let d = PyDict::new(py);
    d.set_item("feasible", feasible)?;
    d.set_item(
        "infeasible",
        report.infeasible.iter().copied().collect::<Vec<_>>(),
    )?;
    d.set_item(
        "undecided",
        report.undecided.iter().copied().collect::<Vec<_>>(),
    )?;
    d.set_item("chi_fat", report.chi_fat())?;
    d.set_item("stats", stats_dict(py, &report.stats)?)?;
    Ok(d)
}

fn case_dict<'py>(py: Python<'py>, r: &CaseResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("theorem", r.case.theorem.to_string())?;
    d.set_item("family", r.case.family.to_string())?;
    d.set_item("expected", (r.case.expected_chi, r.case.expected_chi_fat))?;
    d.set_item("computed", (r.chi, r.chi_fat))?;
    d.set_item(
        "status",
        match r.status {
            CaseStatus::Pass => "PASS",
            CaseStatus::Mismatch => "MISMATCH",
            CaseStatus::Timeout => "TIMEOUT",
        },
    )?;
    d.set_item("elapsed", r.elapsed.as_secs_f64())?;
    Ok(d)
}

/// Runs the theorem reproduction. `theorem` is one of `"disconnected1"`,
/// `"disconnected2"`, `"connected"`, `"general"`; with no theorem every
/// default range runs.
#[pyfunction]
#[pyo3(signature = (theorem = None, l1 = None, l2 = None, n = None, large = false, timeout = None, threads = None))]
#[allow(clippy::too_many_arguments)]
fn reproduce<'py>(
    py: Python<'py>,
    theorem: Option<&str>,
    l1: Option<usize>,
    l2: Option<usize>,
    n: Option<usize>,
    large: bool,
    timeout: Option<f64>,
    threads: Option<usize>,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let theorems: Vec<Theorem> = match theorem.map(str::to_ascii_lowercase).as_deref() {
        None => default_theorems(large),
        Some(id) => {
            let need = |v: Option<usize>, name: &str| {
                v.ok_or_else(|| value_error(format!("theorem {id} needs {name}")))
            };
            vec![match id {
                "disconnected1" => Theorem::Disconnected1 {
                    l1: need(l1, "l1")?,
                    l2: need(l2, "l2")?,
                },
                "disconnected2" => Theorem::Disconnected2 {
                    l1: need(l1, "l1")?,
                    l2: need(l2, "l2")?,
                },
                "connected" => Theorem::Connected { n: need(n, "n")? },
                "general" => Theorem::General { n: need(n, "n")? },
                other => return Err(value_error(format!("unknown theorem `{other}`"))),
            }]
        }
    };
    let opts = options(timeout, threads, true)?;
    let results = py
        .detach(|| fatchroma_core::reproduce::reproduce(&theorems, &opts))
        .map_err(value_error)?;
    results.iter().map(|r| case_dict(py, r)).collect()
}

#[pymodule]
fn fatchroma(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_fat, m)?)?;
    m.add_function(wrap_pyfunction!(infer_fat_parameters, m)?)?;
    m.add_function(wrap_pyfunction!(component_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(chi_fat, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(fat_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    m.add("FAMILIES", FamilySpec::NAMES.to_vec())?;
    Ok(())
}
