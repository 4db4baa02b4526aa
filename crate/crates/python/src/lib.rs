//! Python bindings. The module is importable as `hrhlab`.
//!
//! Exact rationals cross the boundary as `"p/q"` strings and `+∞` as `None`
//! in level accessors (the JSON forms keep the string `"inf"`).

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hrhlab::bsato::{alpha_tilde_int, bp_reduced_roots, roots_from_spectrum, tuple_ts_roots, RootSet};
use hrhlab::cli::{self, Config, Format};
use hrhlab::determinantal::{det_report, DetCase, DetReport, DetSpec};
use hrhlab::exactnum::{Extended, Rational};
use hrhlab::families::{cone_hrh, cone_lcdef, secant_hrh, toric_hrh, HodgeDiamond, ToricCone};
use hrhlab::hrh::Level;
use hrhlab::spectrum::{
    bp_spectrum_capped, hrh_isolated_hypersurface, milnor_s, sp_min_int, BpSpec, SpectrumData, DEFAULT_MAX_MU,
};
use hrhlab::{HrhError, HrhValue};

create_exception!(hrhlab, DomainError, PyValueError, "Input outside an operation's domain.");
create_exception!(hrhlab, ConsistencyError, PyRuntimeError, "Two routes to one invariant disagree.");

fn py_err(e: HrhError) -> PyErr {
    match e {
        HrhError::Domain(m) => DomainError::new_err(m),
        HrhError::Consistency(m) => ConsistencyError::new_err(m),
    }
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn py_to_json(py: Python<'_>, obj: &Bound<'_, PyAny>) -> PyResult<serde_json::Value> {
    let text: String = py.import("json")?.call_method1("dumps", (obj,))?.extract()?;
    serde_json::from_str(&text).map_err(|e| DomainError::new_err(e.to_string()))
}

fn level_py(l: &Level) -> Option<i64> {
    l.finite().copied()
}

fn ext_str(v: &Extended<Rational>) -> String {
    v.to_string()
}

/// An HRH level with its precision: `kind` is `exact`, `lower_bound` or `interval`.
#[pyclass(name = "Hrh", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyHrh(HrhValue);

#[pymethods]
impl PyHrh {
    #[getter]
    fn kind(&self) -> &'static str {
        self.0.kind()
    }

    /// Smallest compatible level; `None` means `+∞`.
    #[getter]
    fn lo(&self) -> Option<i64> {
        level_py(&self.0.lower())
    }

    /// Largest compatible level; `None` means `+∞`.
    #[getter]
    fn hi(&self) -> Option<i64> {
        level_py(&self.0.upper())
    }

    fn is_rhm(&self) -> bool {
        self.0.is_rhm()
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &serde_json::to_value(&self.0).expect("hrh serializes"))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Hrh({})", self.0)
    }
}

/// Spectrum of an isolated hypersurface singularity.
#[pyclass(name = "Spectrum", frozen)]
struct PySpectrum(SpectrumData);

#[pymethods]
impl PySpectrum {
    /// Spectrum of `x_1^a_1 + ... + x_n^a_n`. `max_mu` caps the Milnor number.
    #[staticmethod]
    #[pyo3(signature = (exponents, max_mu = None))]
    fn bp(exponents: Vec<u32>, max_mu: Option<u64>) -> PyResult<Self> {
        let spec = BpSpec::new(exponents).map_err(py_err)?;
        let cap = max_mu.unwrap_or(DEFAULT_MAX_MU);
        Ok(PySpectrum(bp_spectrum_capped(&spec, cap).map_err(py_err)?))
    }

    #[staticmethod]
    fn from_json(py: Python<'_>, obj: &Bound<'_, PyAny>) -> PyResult<Self> {
        let v = py_to_json(py, obj)?;
        Ok(PySpectrum(SpectrumData::from_json(&v).map_err(py_err)?))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.ambient_vars()
    }

    #[getter]
    fn milnor_number(&self) -> u64 {
        self.0.values().total()
    }

    /// `(value, multiplicity)` pairs in ascending order.
    #[getter]
    fn values(&self) -> Vec<(String, u64)> {
        self.0.values().iter().map(|(v, m)| (v.to_string(), m)).collect()
    }

    fn sp_min_z(&self) -> String {
        ext_str(&sp_min_int(&self.0))
    }

    fn milnor_s(&self) -> Vec<u64> {
        milnor_s(&self.0).s().to_vec()
    }

    fn hrh(&self) -> PyHrh {
        PyHrh(hrh_isolated_hypersurface(&self.0))
    }

    fn thom_sebastiani(&self, other: &PySpectrum) -> PySpectrum {
        PySpectrum(self.0.thom_sebastiani(&other.0))
    }

    fn roots(&self) -> PyRootSet {
        PyRootSet(roots_from_spectrum(&self.0))
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.0.to_json())
    }

    fn __repr__(&self) -> String {
        format!("Spectrum(n={}, mu={})", self.0.ambient_vars(), self.0.values().total())
    }
}

/// Roots of a Bernstein–Sato polynomial: reduced roots plus the mandatory root `r`.
#[pyclass(name = "RootSet", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRootSet(RootSet);

#[pymethods]
impl PyRootSet {
    #[new]
    fn new(reduced: Vec<String>, r: u32) -> PyResult<Self> {
        let roots = reduced
            .iter()
            .map(|s| s.parse::<Rational>().map_err(py_err))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyRootSet(RootSet::new(roots, r).map_err(py_err)?))
    }

    #[staticmethod]
    fn bp(exponents: Vec<u32>) -> PyResult<Self> {
        let spec = BpSpec::new(exponents).map_err(py_err)?;
        Ok(PyRootSet(bp_reduced_roots(&spec).map_err(py_err)?))
    }

    #[staticmethod]
    fn from_json(py: Python<'_>, obj: &Bound<'_, PyAny>) -> PyResult<Self> {
        let v = py_to_json(py, obj)?;
        Ok(PyRootSet(RootSet::from_json(&v).map_err(py_err)?))
    }

    #[getter]
    fn r(&self) -> u32 {
        self.0.r()
    }

    #[getter]
    fn reduced(&self) -> Vec<String> {
        self.0.reduced().iter().map(|v| v.to_string()).collect()
    }

    fn alpha_tilde_z(&self) -> String {
        ext_str(&alpha_tilde_int(&self.0))
    }

    /// Roots for the tuple `(f, g)` in disjoint variables.
    fn tuple_with(&self, other: &PyRootSet) -> PyRootSet {
        PyRootSet(tuple_ts_roots(&self.0, &other.0))
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.0.to_json())
    }

    fn __repr__(&self) -> String {
        format!("RootSet(reduced={:?}, r={})", self.reduced(), self.0.r())
    }
}

fn det_spec(case: &str, p: i64, m: Option<i64>, n: Option<i64>) -> PyResult<DetSpec> {
    let need = |v: Option<i64>, key: &str| {
        v.ok_or_else(|| DomainError::new_err(format!("case {case} needs {key}=")))
    };
    let case = match case {
        "generic" => DetCase::Generic { m: need(m, "m")?, n: need(n, "n")? },
        "skew-odd" => DetCase::SkewOdd { m: need(m, "m")? },
        "skew-even" => DetCase::SkewEven { m: need(m, "m")? },
        "symmetric" => DetCase::Symmetric { n: need(n, "n")? },
        other => return Err(DomainError::new_err(format!("unknown case {other:?}"))),
    };
    DetSpec::new(case, p).map_err(py_err)
}

/// Invariants of a determinantal variety.
#[pyclass(name = "DetReport", frozen)]
struct PyDetReport(DetReport);

#[pymethods]
impl PyDetReport {
    #[getter]
    fn codim(&self) -> i64 {
        self.0.codim
    }

    #[getter]
    fn dim(&self) -> i64 {
        self.0.dim
    }

    #[getter]
    fn lcdef_gen(&self) -> i64 {
        self.0.lcdef_gen
    }

    #[getter]
    fn lcd(&self) -> i64 {
        self.0.lcd
    }

    #[getter]
    fn lcdef(&self) -> i64 {
        self.0.lcdef
    }

    #[getter]
    fn nrs_codim(&self) -> Option<i64> {
        self.0.nrs_codim
    }

    #[getter]
    fn ic_equals_h(&self) -> bool {
        self.0.ic_equals_h
    }

    #[getter]
    fn hrh(&self) -> PyHrh {
        PyHrh(self.0.hrh.clone())
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.0.to_json())
    }

    fn __repr__(&self) -> String {
        format!("DetReport({}, hrh={})", self.0.spec, self.0.hrh)
    }
}

/// `case` is one of `generic`, `skew-odd`, `skew-even`, `symmetric`.
#[pyfunction]
#[pyo3(signature = (case, p, m = None, n = None))]
fn det(case: &str, p: i64, m: Option<i64>, n: Option<i64>) -> PyResult<PyDetReport> {
    let spec = det_spec(case, p, m, n)?;
    Ok(PyDetReport(det_report(&spec).map_err(py_err)?))
}

/// Hodge diamond of a smooth projective variety; `entries` are `(p, q, h)`
/// triples, completed by Hodge and Serre symmetry.
#[pyclass(name = "HodgeDiamond", frozen)]
struct PyHodgeDiamond(HodgeDiamond);

#[pymethods]
impl PyHodgeDiamond {
    #[new]
    fn new(n: usize, entries: Vec<(i64, i64, i64)>) -> PyResult<Self> {
        Ok(PyHodgeDiamond(HodgeDiamond::from_entries(n, &entries).map_err(py_err)?))
    }

    #[staticmethod]
    fn projective_space(n: usize) -> Self {
        PyHodgeDiamond(HodgeDiamond::projective_space(n))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn get(&self, p: i64, q: i64) -> u64 {
        self.0.get(p, q)
    }

    fn betti(&self, k: i64) -> u64 {
        self.0.betti(k)
    }

    /// HRH of the affine cone over the variety.
    fn cone_hrh(&self) -> PyResult<PyHrh> {
        Ok(PyHrh(cone_hrh(&self.0).map_err(py_err)?))
    }

    fn cone_lcdef(&self) -> i64 {
        cone_lcdef(&self.0)
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.0.to_json())
    }
}

/// A rational polyhedral cone given by integer ray generators.
#[pyclass(name = "ToricCone", frozen)]
struct PyToricCone(ToricCone);

#[pymethods]
impl PyToricCone {
    #[new]
    fn new(rays: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(PyToricCone(ToricCone::new(rays).map_err(py_err)?))
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn extremal_rays(&self) -> Vec<Vec<i64>> {
        self.0.extremal_rays()
    }

    fn is_simplicial(&self) -> bool {
        self.0.is_simplicial()
    }

    fn hrh(&self) -> PyHrh {
        PyHrh(toric_hrh(&self.0))
    }
}

/// HRH of a secant variety.
#[pyfunction]
fn secant(is_p1: bool, vanishing: bool) -> PyHrh {
    PyHrh(secant_hrh(is_p1, vanishing))
}

/// Runs one command line as the CLI would and returns `(output, exit_code)`.
#[pyfunction]
#[pyo3(signature = (line, format = "json", max_mu = None))]
fn evaluate(py: Python<'_>, line: &str, format: &str, max_mu: Option<u64>) -> PyResult<(String, i32)> {
    let format = match format {
        "json" => Format::Json,
        "text" => Format::Text,
        other => return Err(DomainError::new_err(format!("unknown format {other:?}"))),
    };
    let cfg = Config { max_mu: max_mu.unwrap_or(DEFAULT_MAX_MU) };
    let out = py.detach(|| cli::evaluate(line, format, &cfg));
    Ok((out.output, out.exit_code))
}

/// Runs one command line and returns the report as a dict. Errors raise.
#[pyfunction]
#[pyo3(signature = (line, max_mu = None))]
fn run<'py>(py: Python<'py>, line: &str, max_mu: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let cmd = cli::parse(line).map_err(|e| DomainError::new_err(format!("{}: {e}", e.code.as_str())))?;
    let cfg = Config { max_mu: max_mu.unwrap_or(DEFAULT_MAX_MU) };
    let report = py.detach(|| cli::run(&cmd, &cfg)).map_err(py_err)?;
    json_to_py(py, &report.to_json())
}

#[pymodule]
#[pyo3(name = "hrhlab")]
fn hrhlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("DomainError", py.get_type::<DomainError>())?;
    m.add("ConsistencyError", py.get_type::<ConsistencyError>())?;
    m.add_class::<PyHrh>()?;
    m.add_class::<PySpectrum>()?;
    m.add_class::<PyRootSet>()?;
    m.add_class::<PyDetReport>()?;
    m.add_class::<PyHodgeDiamond>()?;
    m.add_class::<PyToricCone>()?;
    m.add_function(wrap_pyfunction!(det, m)?)?;
    m.add_function(wrap_pyfunction!(secant, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
