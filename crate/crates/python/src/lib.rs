//! Python bindings: the table types, the verifier, word evaluation,
//! reduction and lifting, the deformation search, the example generators and
//! the axiom checker, exposed over the canonical JSON format plus a couple of
//! typed wrapper classes.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use multimult::cardinal::{Cardinal, CardinalBound, CardinalValue};
use multimult::catalog;
use multimult::deformation::{
    self, DeformationOutcome, DeformationProblem, DEFAULT_CARRIER_CAP,
};
use multimult::json;
use multimult::mms::AssocVerdict;
use multimult::semiring::{check_semiring_axioms, SamplingBudget, SemiringInstance};

fn value_err(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn cardinal_to_py(py: Python<'_>, v: CardinalValue) -> Py<PyAny> {
    match v {
        CardinalValue::Nat(m) => m.into_pyobject(py).unwrap().into_any().unbind(),
        CardinalValue::Omega => "omega".into_pyobject(py).unwrap().into_any().unbind(),
    }
}

fn function_to_dict<'py>(
    py: Python<'py>,
    f: &multimult::MultiplicityFunction,
) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    for (name, v) in f.to_named_values() {
        dict.set_item(name, cardinal_to_py(py, v))?;
    }
    Ok(dict)
}

/// A multisemigroup with multiplicities: carrier, bound, and the full
/// multiplicity table.
#[pyclass(name = "MultiMultisemigroup")]
struct PyMms {
    inner: multimult::MultiMultisemigroup,
}

#[pymethods]
impl PyMms {
    /// Parse the canonical JSON table format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyMms {
            inner: json::parse_mms(text).map_err(value_err)?,
        })
    }

    fn to_json(&self) -> String {
        json::serialize_mms(&self.inner)
    }

    fn carrier(&self) -> Vec<String> {
        self.inner.carrier().names().to_vec()
    }

    fn bound(&self) -> String {
        self.inner.bound().to_string()
    }

    /// `None` when the associativity law holds; otherwise a dict describing
    /// the first failing triple.
    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyDict>>> {
        match self.inner.verify_associativity() {
            AssocVerdict::Valid => Ok(None),
            AssocVerdict::Counterexample(cx) => {
                let dict = PyDict::new(py);
                dict.set_item("triple", (cx.r, cx.s, cx.t))?;
                dict.set_item("element", cx.element)?;
                dict.set_item("lhs", cardinal_to_py(py, cx.lhs.value()))?;
                dict.set_item("rhs", cardinal_to_py(py, cx.rhs.value()))?;
                Ok(Some(dict))
            }
        }
    }

    /// The multiplicity function of the pair `(s, t)` as a dict of nonzero
    /// values.
    fn mu<'py>(&self, py: Python<'py>, s: &str, t: &str) -> PyResult<Bound<'py, PyDict>> {
        let f = self.inner.mu(s, t).map_err(value_err)?;
        function_to_dict(py, f)
    }

    /// Evaluate a word (a list of at least two element names); `from_end`
    /// peels the last letter instead of the first.
    #[pyo3(signature = (word, from_end = false))]
    fn evaluate_word<'py>(
        &self,
        py: Python<'py>,
        word: Vec<String>,
        from_end: bool,
    ) -> PyResult<Bound<'py, PyDict>> {
        let letters: Vec<&str> = word.iter().map(String::as_str).collect();
        let f = if from_end {
            self.inner.evaluate_word_suffix(&letters)
        } else {
            self.inner.evaluate_word_prefix(&letters)
        }
        .map_err(value_err)?;
        function_to_dict(py, &f)
    }

    fn reduce(&self, bound: &str) -> PyResult<Self> {
        let target = CardinalBound::parse(bound).map_err(value_err)?;
        Ok(PyMms {
            inner: self.inner.reduce(target).map_err(value_err)?,
        })
    }

    fn underlying_multisemigroup(&self) -> PyMultisemigroup {
        PyMultisemigroup {
            inner: self.inner.underlying_multisemigroup(),
        }
    }

    fn is_finitary(&self) -> (bool, Vec<String>) {
        let report = self.inner.is_finitary();
        (report.finitary, report.reasons)
    }

    /// The integer structure constants as JSON (requires a finitary table).
    fn structure_constants_json(&self) -> PyResult<String> {
        let algebra = self.inner.structure_constants().map_err(value_err)?;
        Ok(json::serialize_structure_constants(&algebra))
    }

    fn __eq__(&self, other: &PyMms) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "MultiMultisemigroup(carrier={:?}, bound={})",
            self.inner.carrier().names(),
            self.inner.bound()
        )
    }
}

/// A plain multisemigroup: a multivalued operation without multiplicities.
#[pyclass(name = "Multisemigroup")]
struct PyMultisemigroup {
    inner: multimult::Multisemigroup,
}

#[pymethods]
impl PyMultisemigroup {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyMultisemigroup {
            inner: json::parse_multisemigroup(text).map_err(value_err)?,
        })
    }

    fn to_json(&self) -> String {
        json::serialize_multisemigroup(&self.inner)
    }

    fn carrier(&self) -> Vec<String> {
        self.inner.carrier().names().to_vec()
    }

    fn product(&self, s: &str, t: &str) -> PyResult<Vec<String>> {
        self.inner.product(s, t).map_err(value_err)
    }

    fn is_associative(&self) -> bool {
        self.inner.is_associative()
    }

    /// Lift membership to the top of the target bound.
    fn lift(&self, bound: &str) -> PyResult<PyMms> {
        let target = CardinalBound::parse(bound).map_err(value_err)?;
        Ok(PyMms {
            inner: multimult::MultiMultisemigroup::lift(&self.inner, target)
                .map_err(value_err)?,
        })
    }

    /// The obstruction pair `(a, b)` proving non-deformability, if one exists.
    fn find_obstruction(&self) -> Option<(String, String)> {
        deformation::find_obstruction(&self.inner)
    }

    fn __eq__(&self, other: &PyMultisemigroup) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Multisemigroup(carrier={:?})", self.inner.carrier().names())
    }
}

/// Kazhdan-Lusztig structure constants of the dihedral group D_n.
#[pyfunction]
fn dihedral_kl(n: u64) -> PyResult<PyMms> {
    Ok(PyMms {
        inner: catalog::kl_multisemigroup(n).map_err(value_err)?,
    })
}

/// The Catalan monoid on a chain of m elements.
#[pyfunction]
fn catalan_monoid(m: u64) -> PyResult<PyMms> {
    Ok(PyMms {
        inner: catalog::catalan_monoid_mms(m).map_err(value_err)?,
    })
}

/// Projective-functor composition for a dimension matrix.
#[pyfunction]
fn projective_functors(dims: Vec<Vec<u64>>) -> PyResult<PyMms> {
    let d = catalog::DimensionMatrix::new(dims).map_err(value_err)?;
    Ok(PyMms {
        inner: catalog::projective_functor_mms(&d).map_err(value_err)?,
    })
}

/// The one-element table with multiplicity `lam` under the given bound.
#[pyfunction]
fn singleton(lam: &str, bound: &str) -> PyResult<PyMms> {
    let bound = CardinalBound::parse(bound).map_err(value_err)?;
    let value = CardinalValue::parse(lam).map_err(value_err)?;
    let lambda = Cardinal::new(value, bound).map_err(value_err)?;
    Ok(PyMms {
        inner: catalog::singleton(lambda).map_err(value_err)?,
    })
}

/// The smallest multisemigroup with no finitary deformation.
#[pyfunction]
fn obstructed() -> PyMultisemigroup {
    PyMultisemigroup {
        inner: catalog::obstructed_fixture(),
    }
}

/// Search for a deformation of `base` with multiplicities at most
/// `max_multiplicity`. Returns a dict with the outcome, node count, and the
/// witness (a table or an obstruction pair).
#[pyfunction]
#[pyo3(signature = (base, max_multiplicity, obstruction_check = true, parallel = 1, carrier_cap = DEFAULT_CARRIER_CAP))]
fn search_deformation<'py>(
    py: Python<'py>,
    base: &PyMultisemigroup,
    max_multiplicity: u64,
    obstruction_check: bool,
    parallel: usize,
    carrier_cap: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let mut problem = DeformationProblem::new(base.inner.clone(), max_multiplicity)
        .with_parallelism(parallel)
        .with_carrier_cap(carrier_cap);
    if !obstruction_check {
        problem = problem.without_obstruction_check();
    }
    let result = deformation::search_deformation(&problem).map_err(value_err)?;
    let dict = PyDict::new(py);
    dict.set_item("nodes", result.nodes)?;
    dict.set_item("max_multiplicity", result.max_multiplicity)?;
    match result.outcome {
        DeformationOutcome::Found(mms) => {
            dict.set_item("outcome", "found")?;
            dict.set_item("witness", PyMms { inner: mms }.into_pyobject(py)?)?;
        }
        DeformationOutcome::NoneWithinBound => {
            dict.set_item("outcome", "none_within_bound")?;
        }
        DeformationOutcome::Obstructed { a, b } => {
            dict.set_item("outcome", "obstructed")?;
            dict.set_item("witness", (a, b))?;
        }
    }
    Ok(dict)
}

/// Run the semiring axiom checker on a named instance (`boolean`,
/// `dual-boolean`, `card:<n>`, `card:omega`, `tropical-min`,
/// `tropical-max-plus`).
#[pyfunction]
fn check_axioms<'py>(py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyDict>> {
    let instance = SemiringInstance::parse(name).map_err(value_err)?;
    let report = check_semiring_axioms(&instance, &SamplingBudget::default());
    let dict = PyDict::new(py);
    dict.set_item("instance", report.instance)?;
    dict.set_item("exhaustive", report.exhaustive)?;
    dict.set_item("checks", report.checks)?;
    let failures = PyList::empty(py);
    for f in &report.failures {
        let item = PyDict::new(py);
        item.set_item("axiom", f.axiom.name())?;
        item.set_item(
            "witness",
            f.witness.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        )?;
        failures.append(item)?;
    }
    dict.set_item("failures", failures)?;
    Ok(dict)
}

#[pymodule]
fn multimult_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMms>()?;
    m.add_class::<PyMultisemigroup>()?;
    m.add_function(wrap_pyfunction!(dihedral_kl, m)?)?;
    m.add_function(wrap_pyfunction!(catalan_monoid, m)?)?;
    m.add_function(wrap_pyfunction!(projective_functors, m)?)?;
    m.add_function(wrap_pyfunction!(singleton, m)?)?;
    m.add_function(wrap_pyfunction!(obstructed, m)?)?;
    m.add_function(wrap_pyfunction!(search_deformation, m)?)?;
    m.add_function(wrap_pyfunction!(check_axioms, m)?)?;
    Ok(())
}
