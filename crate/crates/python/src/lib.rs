//! Python bindings. Reports cross the boundary as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use moufang_core::acceptance::selftest as run_selftest;
use moufang_core::birep::{lie_cartan_residual as lc_residual, tangent_structure_constants, Algebra};
use moufang_core::charge::identity_ledger as ledger;
use moufang_core::commands::check_table as table_report;
use moufang_core::config::{RunConfig, DEFAULT_LEDGER_SAMPLES, DEFAULT_SEED};
use moufang_core::numdiff::DiffConfig;
use moufang_core::report::Report;
use moufang_core::{ChartPoint, Error, MulTable, Octonion};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn algebra(name: &str) -> PyResult<Algebra> {
    match name {
        "octonion" => Ok(Algebra::Octonion),
        "quaternion" => Ok(Algebra::Quaternion),
        other => Err(PyValueError::new_err(format!("unknown algebra {other:?}"))),
    }
}

#[pyclass(name = "Octonion", frozen, from_py_object)]
#[derive(Clone, Copy)]
struct PyOctonion(Octonion);

#[pymethods]
impl PyOctonion {
    #[new]
    fn new(coeff: [f64; 8]) -> Self {
        PyOctonion(Octonion::new(coeff))
    }

    #[staticmethod]
    fn unit(i: usize) -> PyResult<Self> {
        if i >= 8 {
            return Err(PyValueError::new_err(format!("basis index {i} out of range")));
        }
        Ok(PyOctonion(Octonion::unit(i)))
    }

    #[getter]
    fn coeff(&self) -> [f64; 8] {
        self.0.coeff
    }

    fn conj(&self) -> Self {
        PyOctonion(self.0.conj())
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(PyOctonion).map_err(py_err)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyOctonion(self.0 * other.0)
    }

    fn __add__(&self, other: &Self) -> Self {
        PyOctonion(self.0 + other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyOctonion(self.0 - other.0)
    }

    fn __repr__(&self) -> String {
        format!("Octonion({:?})", self.0.coeff)
    }
}

#[pyfunction]
fn associator(a: &PyOctonion, b: &PyOctonion, c: &PyOctonion) -> PyOctonion {
    PyOctonion(moufang_core::octonion::associator(&a.0, &b.0, &c.0))
}

#[pyfunction]
fn moufang_residual(a: &PyOctonion, g: &PyOctonion, h: &PyOctonion) -> f64 {
    MulTable::STANDARD.moufang_residual(&a.0, &g.0, &h.0)
}

/// Classification and birepresentation defect of a Cayley table, as JSON.
#[pyfunction]
fn check_table(text: &str) -> PyResult<String> {
    table_report(text).map(|r| r.to_json()).map_err(py_err)
}

/// `c[j][k][i]` for the tangent algebra.
#[pyfunction]
#[pyo3(signature = (algebra_name = "octonion"))]
fn structure_constants(algebra_name: &str) -> PyResult<Vec<Vec<Vec<f64>>>> {
    let tc = tangent_structure_constants(algebra(algebra_name)?).map_err(py_err)?;
    let r = tc.tensor.dim();
    Ok((0..r)
        .map(|j| (0..r).map(|k| (0..r).map(|i| tc.tensor.get(j, k, i)).collect()).collect())
        .collect())
}

#[pyfunction]
#[pyo3(signature = (point, algebra_name = "octonion"))]
fn lie_cartan_residual(point: Vec<f64>, algebra_name: &str) -> PyResult<(f64, f64)> {
    let g = ChartPoint::new(point).map_err(py_err)?;
    lc_residual(algebra(algebra_name)?, &g, &DiffConfig::default()).map_err(py_err)
}

/// The charge-algebra identity ledger at `point`, as a JSON report.
#[pyfunction]
#[pyo3(signature = (point, algebra_name = "octonion", samples = DEFAULT_LEDGER_SAMPLES, seed = DEFAULT_SEED))]
fn identity_ledger(point: Vec<f64>, algebra_name: &str, samples: usize, seed: u64) -> PyResult<String> {
    let alg = algebra(algebra_name)?;
    let g = ChartPoint::new(point).map_err(py_err)?;
    let cfg = RunConfig {
        command: "charge-ledger".into(),
        seed,
        samples,
        algebra: alg,
        point: Some(g.coords().to_vec()),
        ..RunConfig::default()
    };
    let report = ledger(alg, &g, samples, seed, &cfg.diff(), &|_, d| d).map_err(py_err)?;
    let mut out = Report::new(cfg, report.entries);
    out.conventions = report.conventions;
    Ok(out.to_json())
}

/// Runs the acceptance suite; returns `(passed, json_report)`.
#[pyfunction]
#[pyo3(signature = (seed = DEFAULT_SEED))]
fn selftest(seed: u64) -> PyResult<(bool, String)> {
    let cfg = RunConfig {
        command: "selftest".into(),
        seed,
        ..RunConfig::default()
    };
    let (report, _) = run_selftest(&cfg, MulTable::STANDARD).map_err(py_err)?;
    Ok((report.pass(), report.to_json()))
}

#[pymodule]
fn moufang(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyOctonion>()?;
    m.add_function(wrap_pyfunction!(associator, m)?)?;
    m.add_function(wrap_pyfunction!(moufang_residual, m)?)?;
    m.add_function(wrap_pyfunction!(check_table, m)?)?;
    m.add_function(wrap_pyfunction!(structure_constants, m)?)?;
    m.add_function(wrap_pyfunction!(lie_cartan_residual, m)?)?;
    m.add_function(wrap_pyfunction!(identity_ledger, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
