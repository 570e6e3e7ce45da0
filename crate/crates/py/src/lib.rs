//! Python bindings: the exact coefficient field, truncated q-series, the
//! expression evaluator, and the identity catalog.
//!
//! Everything arrives in Python as exact data: coefficients are `CycNum`
//! values (a + b*zeta3 with rational a, b), never floats.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use qappell::cyclotomic::{rational, CycNum};
use qappell::identity::{self, VerifyOutcome};
use qappell::mock::MockName;
use qappell::props::{self, PropConfig};
use qappell::qseries::{ps_eq, PsEq, QSeries};

fn value_error(msg: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(msg.to_string())
}

/// An exact element a + b*zeta3 of Q(zeta3).
#[pyclass(name = "CycNum", frozen, from_py_object)]
#[derive(Clone)]
struct PyCycNum {
    inner: CycNum,
}

#[pymethods]
impl PyCycNum {
    #[staticmethod]
    fn integer(n: i64) -> Self {
        PyCycNum {
            inner: CycNum::from_int(n),
        }
    }

    #[staticmethod]
    fn rational(numerator: i64, denominator: i64) -> PyResult<Self> {
        if denominator == 0 {
            return Err(value_error("denominator must be nonzero"));
        }
        Ok(PyCycNum {
            inner: CycNum::from_rational(rational(numerator, denominator)),
        })
    }

    #[staticmethod]
    fn zeta3() -> Self {
        PyCycNum {
            inner: CycNum::zeta3(),
        }
    }

    fn inv(&self) -> PyResult<Self> {
        self.inner
            .inv()
            .map(|inner| PyCycNum { inner })
            .map_err(value_error)
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_rational(&self) -> bool {
        self.inner.is_rational()
    }

    fn is_integer(&self) -> bool {
        self.inner.is_integer()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyCycNum {
            inner: &self.inner + &other.inner,
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyCycNum {
            inner: &self.inner - &other.inner,
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyCycNum {
            inner: &self.inner * &other.inner,
        }
    }

    fn __neg__(&self) -> Self {
        PyCycNum {
            inner: -&self.inner,
        }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CycNum({})", self.inner)
    }
}

/// A truncated sparse Laurent series in q over Q(zeta3), carrying the
/// validity order through all arithmetic.
#[pyclass(name = "QSeries", frozen, from_py_object)]
#[derive(Clone)]
struct PyQSeries {
    inner: QSeries,
}

#[pymethods]
impl PyQSeries {
    /// Largest exponent whose coefficient is guaranteed exact.
    fn order(&self) -> i64 {
        self.inner.order()
    }

    /// Lowest exponent with a nonzero coefficient, or None when the series
    /// is zero through its validity order.
    fn valuation(&self) -> Option<i64> {
        self.inner.valuation()
    }

    fn coeff(&self, exponent: i64) -> PyCycNum {
        PyCycNum {
            inner: self.inner.coeff(exponent),
        }
    }

    fn terms(&self) -> Vec<(i64, PyCycNum)> {
        self.inner
            .terms()
            .map(|(e, c)| (e, PyCycNum { inner: c.clone() }))
            .collect()
    }

    fn truncate(&self, order: i64) -> Self {
        PyQSeries {
            inner: self.inner.truncate(order),
        }
    }

    /// Exact comparison of all coefficients through `through`; returns
    /// None on agreement, else (exponent, lhs, rhs) of the first mismatch.
    fn first_mismatch(
        &self,
        other: &Self,
        through: i64,
    ) -> PyResult<Option<(i64, PyCycNum, PyCycNum)>> {
        match ps_eq(&self.inner, &other.inner, through).map_err(value_error)? {
            PsEq::Equal => Ok(None),
            PsEq::Mismatch { exponent, lhs, rhs } => Ok(Some((
                exponent,
                PyCycNum { inner: lhs },
                PyCycNum { inner: rhs },
            ))),
        }
    }

    fn __add__(&self, other: &Self) -> Self {
        PyQSeries {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyQSeries {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyQSeries {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QSeries({})", self.inner)
    }
}

/// Parse and evaluate an expression to a series exact through `order`.
#[pyfunction]
fn eval(expr: &str, order: i64) -> PyResult<PyQSeries> {
    let tree = identity::parse(expr).map_err(value_error)?;
    identity::eval(&tree, order)
        .map(|inner| PyQSeries { inner })
        .map_err(value_error)
}

/// Parse an expression and return its printed normal form.
#[pyfunction]
fn normalize(expr: &str) -> PyResult<String> {
    identity::parse(expr)
        .map(|t| t.to_string())
        .map_err(value_error)
}

/// The per-leaf order demands implied by evaluating `expr` to `order`.
#[pyfunction]
fn required_order(expr: &str, order: i64) -> PyResult<Vec<(String, i64)>> {
    let tree = identity::parse(expr).map_err(value_error)?;
    identity::required_order(&tree, order)
        .map(|demands| demands.into_iter().map(|d| (d.leaf, d.order)).collect())
        .map_err(value_error)
}

/// The Eulerian series of a named mock theta function at plain q.
#[pyfunction]
fn mock_series(name: &str, order: i64) -> PyResult<PyQSeries> {
    let mock = MockName::parse(name)
        .ok_or_else(|| value_error(format!("unknown mock theta name {:?}", name)))?;
    Ok(PyQSeries {
        inner: qappell::mock::mock_series(mock, order),
    })
}

/// All catalog entries as (id, status, default_order) triples.
#[pyfunction]
fn catalog_ids() -> Vec<(String, String, i64)> {
    identity::catalog()
        .iter()
        .map(|rec| {
            let status = if rec.is_active() { "active" } else { "gap" };
            (rec.id.to_string(), status.to_string(), rec.default_order)
        })
        .collect()
}

fn outcome_to_dict<'py>(py: Python<'py>, out: VerifyOutcome) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("id", out.id)?;
    d.set_item("status", out.status.as_str())?;
    d.set_item("order", out.order)?;
    d.set_item("elapsed_ms", out.elapsed_ms)?;
    if let Some(m) = out.mismatch {
        let md = PyDict::new(py);
        md.set_item("exponent", m.exponent)?;
        md.set_item("lhs", m.lhs)?;
        md.set_item("rhs", m.rhs)?;
        d.set_item("mismatch", md)?;
    }
    if let Some(e) = out.error_kind {
        d.set_item("error_kind", e)?;
    }
    Ok(d)
}

/// Verify one catalog identity by exact coefficient comparison.
#[pyfunction]
fn verify<'py>(py: Python<'py>, id: &str, order: i64) -> PyResult<Bound<'py, PyDict>> {
    let rec = identity::find_record(id)
        .ok_or_else(|| value_error(format!("unknown catalog id {:?}", id)))?;
    outcome_to_dict(py, identity::verify(rec, order))
}

/// Verify the whole catalog at one order.
#[pyfunction]
fn verify_all<'py>(py: Python<'py>, order: i64) -> PyResult<Bound<'py, PyList>> {
    let out = PyList::empty(py);
    for rec in identity::catalog() {
        out.append(outcome_to_dict(py, identity::verify(rec, order))?)?;
    }
    Ok(out)
}

/// Names of the randomized property suites.
#[pyfunction]
fn property_names() -> Vec<&'static str> {
    props::all_property_names()
}

/// Run the seeded randomized property suites; same seed, same report.
#[pyfunction]
#[pyo3(signature = (cases = 50, order = 60, seed = 0))]
fn run_props<'py>(
    py: Python<'py>,
    cases: u32,
    order: i64,
    seed: u64,
) -> PyResult<Bound<'py, PyList>> {
    let config = PropConfig { cases, order, seed };
    let out = PyList::empty(py);
    for report in props::run_all(&config) {
        let d = PyDict::new(py);
        d.set_item("name", report.name)?;
        d.set_item("cases", report.cases)?;
        d.set_item("passed", report.passed())?;
        d.set_item("failures", report.failures.clone())?;
        d.set_item("exhausted", report.exhausted)?;
        d.set_item("elapsed_ms", report.elapsed_ms)?;
        out.append(d)?;
    }
    Ok(out)
}

#[pymodule]
fn qappell_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCycNum>()?;
    m.add_class::<PyQSeries>()?;
    m.add_function(wrap_pyfunction!(eval, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(required_order, m)?)?;
    m.add_function(wrap_pyfunction!(mock_series, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_ids, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add_function(wrap_pyfunction!(property_names, m)?)?;
    m.add_function(wrap_pyfunction!(run_props, m)?)?;
    Ok(())
}
