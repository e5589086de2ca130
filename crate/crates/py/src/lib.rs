//! Python bindings. Rationals cross the boundary as `fractions.Fraction`; structured
//! reports (certificates, gate reports) come back as plain dicts with rational
//! values kept as `"p/q"` strings, exactly as the JSON output.

use std::collections::BTreeMap;

use genus_forge::surgery::{
    self, build_blueprint, ConstructionInput, NormalInvariantBlueprint,
};
use genus_forge::{
    fixtures, genus_of_manifold, parse_rational, ErrorKind, Genus, ManifoldData, Partition,
    Rational,
};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

create_exception!(
    genus_forge,
    PreconditionError,
    PyValueError,
    "A mathematical precondition of the requested computation fails."
);

fn to_py_err(e: genus_forge::Error) -> PyErr {
    match e.kind() {
        ErrorKind::Validation => PyValueError::new_err(e.to_string()),
        ErrorKind::Precondition => PreconditionError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.to_string(),))
}

/// Accepts `int`, `Fraction` or a `"p/q"` string.
fn rational_arg(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = obj.str()?.to_string();
    parse_rational(&text).map_err(PyValueError::new_err)
}

fn genus_kind(kind: &str) -> PyResult<Genus> {
    kind.parse().map_err(|e: String| PyValueError::new_err(e))
}

fn partition_dict<'py>(
    py: Python<'py>,
    map: &BTreeMap<Partition, Rational>,
) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for (p, v) in map {
        out.set_item(PyTuple::new(py, p.parts())?, fraction(py, v)?)?;
    }
    Ok(out)
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

#[pyfunction]
fn bernoulli(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &genus_forge::bernoulli(n))
}

/// Coefficients of the characteristic series in `z`, up to `z^order`.
#[pyfunction]
fn char_series<'py>(py: Python<'py>, kind: &str, order: usize) -> PyResult<Vec<Bound<'py, PyAny>>> {
    genus_forge::char_series(genus_kind(kind)?, order)
        .coefficients()
        .iter()
        .map(|c| fraction(py, c))
        .collect()
}

/// `{partition tuple: coefficient}` in canonical partition order.
#[pyfunction]
fn genus_polynomial<'py>(py: Python<'py>, kind: &str, degree: u32) -> PyResult<Bound<'py, PyDict>> {
    let table = genus_forge::genus_polynomial(genus_kind(kind)?, degree);
    partition_dict(py, &table.coefficients)
}

#[pyfunction]
fn render_genus(kind: &str, degree: u32) -> PyResult<String> {
    Ok(genus_forge::genus_polynomial(genus_kind(kind)?, degree).render())
}

#[pyfunction]
fn coefficients_all_nonzero(kind: &str, up_to: u32) -> PyResult<bool> {
    Ok(genus_forge::coefficients_all_nonzero(genus_kind(kind)?, up_to).holds())
}

/// A validated manifold descriptor.
#[pyclass(name = "Manifold", module = "genus_forge", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyManifold {
    inner: ManifoldData,
}

#[pymethods]
impl PyManifold {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        genus_forge::parse_manifold(text)
            .map(|inner| PyManifold { inner })
            .map_err(to_py_err)
    }

    /// One of the shipped fixtures: `cp2`, `hp2`, `k3`.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        fixtures::by_name(name)
            .map(|inner| PyManifold { inner })
            .ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn dimension(&self) -> u32 {
        self.inner.dimension()
    }

    #[getter]
    fn spin(&self) -> bool {
        self.inner.spin
    }

    #[getter]
    fn simply_connected(&self) -> bool {
        self.inner.simply_connected
    }

    /// Basis ids in ring order.
    fn basis(&self) -> Vec<(String, u32)> {
        self.inner
            .ring()
            .basis()
            .iter()
            .map(|b| (b.id.clone(), b.degree))
            .collect()
    }

    fn signature<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        self.genus(py, "L")
    }

    fn ahat<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        self.genus(py, "Ahat")
    }

    fn genus<'py>(&self, py: Python<'py>, kind: &str) -> PyResult<Bound<'py, PyAny>> {
        let value = genus_of_manifold(genus_kind(kind)?, &self.inner).map_err(to_py_err)?;
        fraction(py, &value)
    }

    fn pontryagin_number<'py>(
        &self,
        py: Python<'py>,
        parts: Vec<u32>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let value = self
            .inner
            .pontryagin_number(&Partition::new(parts))
            .map_err(to_py_err)?;
        fraction(py, &value)
    }

    fn minimal_pontryagin_index(&self) -> Option<u32> {
        surgery::minimal_pontryagin_index(&self.inner)
    }

    fn product_with_sphere(&self, n: u32) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("n must be at least 1"));
        }
        Ok(PyManifold {
            inner: genus_forge::product_with_sphere(&self.inner, n),
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Manifold({:?}, dimension={}, basis={})",
            self.inner.name,
            self.inner.dimension(),
            self.inner.ring().len()
        )
    }
}

/// The scalar data of the bundle construction for `(M, k, λ)`.
#[pyclass(name = "Blueprint", module = "genus_forge", frozen)]
struct PyBlueprint {
    inner: NormalInvariantBlueprint,
}

#[pymethods]
impl PyBlueprint {
    #[new]
    #[pyo3(signature = (manifold, k, lambda_=1))]
    fn new(manifold: &PyManifold, k: u32, lambda_: i64) -> PyResult<Self> {
        let input = ConstructionInput::new(manifold.inner.clone(), k).with_lambda(lambda_);
        build_blueprint(&input)
            .map(|inner| PyBlueprint { inner })
            .map_err(to_py_err)
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m
    }

    #[getter]
    fn j(&self) -> u32 {
        self.inner.j
    }

    #[getter]
    fn b<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.b)
    }

    #[getter]
    fn c<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.c)
    }

    fn solve_a<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let solved = self.inner.solve_a().map_err(to_py_err)?;
        fraction(py, &solved.value)
    }

    fn surgery_obstruction<'py>(
        &self,
        py: Python<'py>,
        a: &Bound<'py, PyAny>,
    ) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.surgery_obstruction(&rational_arg(a)?))
    }

    fn pontryagin_numbers<'py>(
        &self,
        py: Python<'py>,
        a: &Bound<'py, PyAny>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let numbers = self
            .inner
            .pontryagin_numbers(&rational_arg(a)?)
            .map_err(to_py_err)?;
        partition_dict(py, &numbers)
    }

    fn ahat_total_space<'py>(
        &self,
        py: Python<'py>,
        a: &Bound<'py, PyAny>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let value = self
            .inner
            .ahat_total_space(&rational_arg(a)?)
            .map_err(to_py_err)?;
        fraction(py, &value)
    }
}

/// Full certificate as a dict; `A=None` solves for the obstruction-killing value.
#[pyfunction]
#[pyo3(signature = (manifold, k, lambda_=1, a=None))]
fn construct<'py>(
    py: Python<'py>,
    manifold: &PyManifold,
    k: u32,
    lambda_: i64,
    a: Option<&Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyAny>> {
    let a = a.map(rational_arg).transpose()?;
    let input = ConstructionInput::new(manifold.inner.clone(), k).with_lambda(lambda_);
    let cert = surgery::construct(&input, a).map_err(to_py_err)?;
    json_to_py(py, &cert.to_json())
}

#[pyfunction]
#[pyo3(signature = (manifold, k, conn=None))]
fn theorem_gate<'py>(
    py: Python<'py>,
    manifold: &PyManifold,
    k: u32,
    conn: Option<u32>,
) -> PyResult<Bound<'py, PyAny>> {
    let report = surgery::theorem_gate(&manifold.inner, k, conn);
    let text = serde_json::to_string(&report).expect("gate report serializes");
    json_to_py(py, &text)
}

#[pyfunction]
fn l_group(n: i64) -> String {
    surgery::l_group(n).to_string()
}

#[pyfunction]
fn ko_group(k: i64) -> String {
    surgery::ko_group(k).to_string()
}

#[pyfunction]
fn bl_bound(d: u32) -> i64 {
    surgery::bl_bound(d)
}

#[pyfunction]
fn morlet_bound(d: u32, conn: u32) -> PyResult<i64> {
    surgery::morlet_bound(d, conn).map_err(to_py_err)
}

#[pymodule]
#[pyo3(name = "genus_forge")]
pub fn genus_forge_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    m.add_class::<PyManifold>()?;
    m.add_class::<PyBlueprint>()?;
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(char_series, m)?)?;
    m.add_function(wrap_pyfunction!(genus_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(render_genus, m)?)?;
    m.add_function(wrap_pyfunction!(coefficients_all_nonzero, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_gate, m)?)?;
    m.add_function(wrap_pyfunction!(l_group, m)?)?;
    m.add_function(wrap_pyfunction!(ko_group, m)?)?;
    m.add_function(wrap_pyfunction!(bl_bound, m)?)?;
    m.add_function(wrap_pyfunction!(morlet_bound, m)?)?;
    Ok(())
}
