//! Python bindings. Polynomials come back as coefficient lists (constant term
//! first) of Python ints; reports come back as plain dicts.

use lpm_toric::{hook, verify, Caps, Error, HookShape, IntPolynomial};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn coeffs(p: &IntPolynomial) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

fn caps(max_vertices: Option<usize>, max_faces: Option<usize>) -> Caps {
    let d = Caps::default();
    Caps {
        max_vertices: max_vertices.unwrap_or(d.max_vertices),
        max_faces: max_faces.unwrap_or(d.max_faces),
        ..d
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_pyobject(py)?.into_any(),
            (None, Some(u)) => u.into_pyobject(py)?.into_any(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

/// A validated pair of noncrossing lattice paths given as 'N'/'E' strings.
#[pyclass(name = "PathPair", module = "lpm_toric", frozen)]
struct PyPathPair {
    inner: lpm_toric::PathPair,
}

#[pymethods]
impl PyPathPair {
    #[new]
    fn new(upper: &str, lower: &str) -> PyResult<Self> {
        lpm_toric::PathPair::parse(upper, lower)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    /// Canonical pair for the hook with arm lengths `alpha`, `beta`.
    #[staticmethod]
    fn hook(alpha: usize, beta: usize) -> PyResult<Self> {
        let shape = HookShape::new(alpha, beta).map_err(err)?;
        Ok(Self {
            inner: shape.path_pair(),
        })
    }

    #[staticmethod]
    fn border_strip(a: usize, b: usize, c: usize) -> PyResult<Self> {
        lpm_toric::PathPair::border_strip(a, b, c)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[getter]
    fn upper(&self) -> String {
        self.inner.upper().to_string()
    }

    #[getter]
    fn lower(&self) -> String {
        self.inner.lower().to_string()
    }

    #[getter]
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn count_bases(&self) -> BigInt {
        lpm_toric::count_bases(&self.inner).into()
    }

    /// Bases as sorted lists of 1-based positions, in lexicographic order.
    #[pyo3(signature = (cap = 10_000))]
    fn bases(&self, cap: usize) -> PyResult<Vec<Vec<usize>>> {
        let m = lpm_toric::enumerate_bases(&self.inner, cap).map_err(err)?;
        Ok(m.bases.iter().map(|b| b.elements().to_vec()).collect())
    }

    /// Whether the enumerated bases satisfy the exchange axiom.
    #[pyo3(signature = (cap = 10_000))]
    fn check_exchange(&self, cap: usize) -> PyResult<bool> {
        let m = lpm_toric::enumerate_bases(&self.inner, cap).map_err(err)?;
        Ok(lpm_toric::check_exchange_axiom(&m).is_ok())
    }

    /// Full polytope and toric pipeline as a dict.
    #[pyo3(signature = (max_vertices = None, max_faces = None))]
    fn toric<'py>(
        &self,
        py: Python<'py>,
        max_vertices: Option<usize>,
        max_faces: Option<usize>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let (v, _) = verify::cmd_toric(
            &self.inner.upper().to_string(),
            &self.inner.lower().to_string(),
            &caps(max_vertices, max_faces),
        )
        .map_err(err)?;
        to_py(py, &v)
    }

    fn __repr__(&self) -> String {
        format!("PathPair({:?}, {:?})", self.upper(), self.lower())
    }
}

#[pyfunction]
fn binomial(n: i64, k: i64) -> BigInt {
    hook::binomial(n, k)
}

#[pyfunction]
fn f_vector_hook(alpha: usize, beta: usize) -> PyResult<Vec<u64>> {
    hook::f_vector_hook(alpha, beta).map(|f| f.0).map_err(err)
}

#[pyfunction]
fn g_hook(alpha: usize, beta: usize) -> Vec<BigInt> {
    coeffs(&hook::g_hook(alpha, beta))
}

#[pyfunction]
fn f_hook(alpha: usize, beta: usize) -> Vec<BigInt> {
    coeffs(&hook::f_hook(alpha, beta))
}

/// Both sides of the Vandermonde-type identity at `(m, n, q)`.
#[pyfunction]
fn vandermonde_extension(m: i64, n: i64, q: i64) -> (BigInt, BigInt) {
    let s = hook::vandermonde_extension(m, n, q);
    (s.lhs, s.rhs)
}

#[pyfunction]
#[pyo3(signature = (a, b, c, max_vertices = None, max_faces = None))]
fn border_strip<'py>(
    py: Python<'py>,
    a: usize,
    b: usize,
    c: usize,
    max_vertices: Option<usize>,
    max_faces: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let (v, _) = verify::border_strip(a, b, c, &caps(max_vertices, max_faces)).map_err(err)?;
    to_py(py, &v)
}

#[pyfunction]
#[pyo3(signature = (alpha_max = 4))]
fn verify_hooks<'py>(py: Python<'py>, alpha_max: usize) -> PyResult<Bound<'py, PyAny>> {
    let config = verify::SweepConfig {
        alpha_max,
        beta_max: alpha_max,
        ..Default::default()
    };
    let report = py.detach(|| verify::verify_hooks(&config)).map_err(err)?;
    to_py(py, &report.to_json(false))
}

#[pyfunction]
#[pyo3(signature = (m_max = 8, n_max = 8))]
fn verify_identities<'py>(
    py: Python<'py>,
    m_max: usize,
    n_max: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let config = verify::SweepConfig {
        m_max,
        n_max,
        ..Default::default()
    };
    let report = py
        .detach(|| verify::verify_identities(&config))
        .map_err(err)?;
    to_py(py, &report.to_json(false))
}

#[pymodule(name = "lpm_toric")]
fn lpm_toric_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPathPair>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(f_vector_hook, m)?)?;
    m.add_function(wrap_pyfunction!(g_hook, m)?)?;
    m.add_function(wrap_pyfunction!(f_hook, m)?)?;
    m.add_function(wrap_pyfunction!(vandermonde_extension, m)?)?;
    m.add_function(wrap_pyfunction!(border_strip, m)?)?;
    m.add_function(wrap_pyfunction!(verify_hooks, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identities, m)?)?;
    Ok(())
}
