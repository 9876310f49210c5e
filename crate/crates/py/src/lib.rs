//! Python bindings. Graphs are passed as text (JSON or edge list) and
//! certificates as JSON strings; results come back as plain dicts carrying
//! the same `code` the command-line tool exits with.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use leafpower_cli::{self as cli, Outcome};
use leafpower_core::cert::Certificate;
use leafpower_core::dot::{certificate_to_dot, graph_to_dot};
use leafpower_core::io::parse_graph;
use leafpower_core::Graph;

fn graph(text: &str) -> PyResult<Graph> {
    parse_graph(text).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn certificate(text: &str) -> PyResult<Certificate> {
    Certificate::from_json_str(text).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn to_python<'py>(py: Python<'py>, outcome: Outcome) -> PyResult<Bound<'py, PyAny>> {
    if outcome.code == cli::INPUT_ERROR {
        return Err(PyValueError::new_err(outcome.summary));
    }
    let mut report = outcome.report;
    if let Some(obj) = report.as_object_mut() {
        obj.insert("code".into(), outcome.code.into());
    }
    py.import("json")?.call_method1("loads", (report.to_string(),))
}

#[pyfunction]
fn is_chordal(graph_text: &str) -> PyResult<bool> {
    Ok(leafpower_core::chordal::is_chordal(&graph(graph_text)?))
}

/// Star NeS recognition; accepted graphs carry good-partition and star-nes certificates.
#[pyfunction]
fn recognize_star<'py>(py: Python<'py>, graph_text: &str) -> PyResult<Bound<'py, PyAny>> {
    let g = graph(graph_text)?;
    to_python(py, cli::recognize_star(&g, "graph"))
}

#[pyfunction]
#[pyo3(signature = (graph_text, max_oracle_n = 8, model = None))]
fn recognize_linear<'py>(py: Python<'py>, graph_text: &str, max_oracle_n: usize, model: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let g = graph(graph_text)?;
    let model = model.map(certificate).transpose()?;
    to_python(py, cli::recognize_linear(&g, "graph", max_oracle_n, model.as_ref()))
}

#[pyfunction]
#[pyo3(signature = (graph_text, certificate_json, kind = None))]
fn verify<'py>(py: Python<'py>, graph_text: &str, certificate_json: &str, kind: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let g = graph(graph_text)?;
    let c = certificate(certificate_json)?;
    to_python(py, cli::verify(&g, &c, kind))
}

/// The converted certificate as a dict; raises `ValueError` when the pair is unsupported or fails.
#[pyfunction]
#[pyo3(signature = (certificate_json, to, graph_text = None))]
fn convert<'py>(py: Python<'py>, certificate_json: &str, to: &str, graph_text: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let c = certificate(certificate_json)?;
    let g = graph_text.map(graph).transpose()?;
    let outcome = cli::convert(&c, to, g.as_ref());
    if outcome.code != cli::ACCEPT {
        return Err(PyValueError::new_err(outcome.summary));
    }
    // The report is the converted certificate itself.
    py.import("json")?.call_method1("loads", (outcome.report.to_string(),))
}

/// A random graph with a certificate of the given kind: `{"graph", "certificate"}`.
#[pyfunction]
#[pyo3(signature = (kind, seed = 0, size = 10, rays = 3))]
fn generate<'py>(py: Python<'py>, kind: &str, seed: u64, size: usize, rays: usize) -> PyResult<Bound<'py, PyAny>> {
    to_python(py, cli::generate(kind, seed, size, rays))
}

/// DOT for a certificate (JSON with a `kind` field) or a graph.
#[pyfunction]
fn to_dot(text: &str) -> PyResult<String> {
    match Certificate::from_json_str(text) {
        Ok(c) => Ok(certificate_to_dot(&c)),
        Err(_) => Ok(graph_to_dot(&graph(text)?)),
    }
}

#[pymodule]
fn leafpower(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(is_chordal, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_star, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_linear, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(convert, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(to_dot, m)?)?;
    Ok(())
}
