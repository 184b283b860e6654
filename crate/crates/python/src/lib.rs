//! Python bindings. Every report is returned as the same JSON data the
//! command-line tool prints, decoded into Python objects, or as text.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use inertia::cli::{parse_config, parse_config_str, run_command, Command, StackConfig, Theory};
use inertia::{ActionSpec, Error};

fn to_py_err(e: Error) -> PyErr {
    if e.is_internal() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn theory(name: &str) -> PyResult<Theory> {
    match name.to_ascii_lowercase().as_str() {
        "k" => Ok(Theory::K),
        "chow" => Ok(Theory::Chow),
        other => Err(PyValueError::new_err(format!("unknown theory `{other}` (expected k or chow)"))),
    }
}

/// A quotient stack together with its named bundles and classes.
#[pyclass(name = "Stack", module = "inertia_py", frozen)]
struct PyStack {
    config: StackConfig,
}

impl PyStack {
    fn from_action(action: ActionSpec) -> PyResult<Self> {
        action.validate().map_err(to_py_err)?;
        Ok(PyStack {
            config: StackConfig {
                action,
                bundles: BTreeMap::new(),
                classes: BTreeMap::new(),
            },
        })
    }

    fn run(&self, py: Python<'_>, command: Command, text: bool) -> PyResult<Py<PyAny>> {
        let out = run_command(&self.config, &command).map_err(to_py_err)?;
        if text {
            return Ok(out.text.into_pyobject(py)?.into_any().unbind());
        }
        let json = py.import("json")?;
        Ok(json.call_method1("loads", (out.json.to_string(),))?.unbind())
    }
}

#[pymethods]
impl PyStack {
    /// Parses a JSON stack description.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyStack {
            config: parse_config_str(text).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn from_file(path: std::path::PathBuf) -> PyResult<Self> {
        Ok(PyStack {
            config: parse_config(&path).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn weighted_projective(weights: Vec<i64>) -> PyResult<Self> {
        Self::from_action(ActionSpec::weighted_projective(&weights))
    }

    #[staticmethod]
    fn classifying(n: u32) -> PyResult<Self> {
        Self::from_action(ActionSpec::classifying(n))
    }

    /// `mu_n` acting on affine space minus the origin with the given exponents.
    #[staticmethod]
    fn cyclic_on_affine(n: u32, exponents: Vec<i64>) -> PyResult<Self> {
        Self::from_action(ActionSpec::cyclic_on_affine(n, &exponents))
    }

    #[pyo3(signature = (text = false))]
    fn sectors(&self, py: Python<'_>, text: bool) -> PyResult<Py<PyAny>> {
        self.run(py, Command::Sectors, text)
    }

    #[pyo3(signature = (product = "orbifold", theory = "k", text = false))]
    fn table(&self, py: Python<'_>, product: &str, theory: &str, text: bool) -> PyResult<Py<PyAny>> {
        let command = Command::Table {
            product: product.to_string(),
            theory: self::theory(theory)?,
        };
        self.run(py, command, text)
    }

    #[pyo3(signature = (product = None, text = false))]
    fn check(&self, py: Python<'_>, product: Option<String>, text: bool) -> PyResult<Py<PyAny>> {
        self.run(py, Command::Check { product }, text)
    }

    #[pyo3(signature = (product = "orbifold", text = false))]
    fn chern(&self, py: Python<'_>, product: &str, text: bool) -> PyResult<Py<PyAny>> {
        let command = Command::Chern {
            product: product.to_string(),
        };
        self.run(py, command, text)
    }

    #[pyo3(signature = (text = false))]
    fn localize(&self, py: Python<'_>, text: bool) -> PyResult<Py<PyAny>> {
        self.run(py, Command::Localize, text)
    }

    fn __repr__(&self) -> String {
        let a = &self.config.action;
        format!(
            "Stack(finite_orders={:?}, torus_rank={}, weights=[{}], space={:?})",
            a.group.finite_orders,
            a.group.torus_rank,
            a.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", "),
            a.space
        )
    }
}

#[pymodule]
fn inertia_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStack>()?;
    Ok(())
}
