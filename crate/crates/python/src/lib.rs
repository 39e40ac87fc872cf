//! Python module `ordsemi`: structures, deciders, enumeration and theorem checks.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use ordsemi::decomposition::{all_complete_semilattice_congruences, least_complete_semilattice_congruence};
use ordsemi::enumeration::{self, Dedup};
use ordsemi::ideals::{self, IdealKind, Simplicity};
use ordsemi::regularity::{self, RvReading};
use ordsemi::relations::{self, Archimedean, Green};
use ordsemi::{expr, theorems, ElementSubset};

fn err(e: ordsemi::Error) -> PyErr {
    match e {
        ordsemi::Error::UnknownTheorem(_) => PyKeyError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn bad(what: &str, got: &str) -> PyErr {
    PyValueError::new_err(format!("unknown {what} `{got}`"))
}

fn elems(set: &ElementSubset) -> Vec<usize> {
    set.to_vec()
}

fn reading(vacuous: bool) -> RvReading {
    if vacuous {
        RvReading::Vacuous
    } else {
        RvReading::Nonempty
    }
}

/// A validated finite ordered semigroup on `0..order`.
#[pyclass(name = "OrderedSemigroup", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyOrderedSemigroup {
    inner: ordsemi::OrderedSemigroup,
}

#[pymethods]
impl PyOrderedSemigroup {
    /// `table[a][b] = ab`; `leq` lists pairs `(a, b)` with `a ≤ b` (reflexive pairs optional).
    #[new]
    #[pyo3(signature = (table, leq = Vec::new()))]
    fn new(table: Vec<Vec<usize>>, leq: Vec<(usize, usize)>) -> PyResult<Self> {
        let n = table.len();
        let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        pairs.extend(leq);
        let inner = ordsemi::OrderedSemigroup::from_pairs(table, &pairs).map_err(err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: ordsemi::OrderedSemigroup::from_json(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.table_rows()
    }

    fn leq_pairs(&self) -> Vec<(usize, usize)> {
        self.inner.leq_pairs()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.mul(a, b)
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.inner.leq(a, b)
    }

    fn downset(&self, elements: Vec<usize>) -> Vec<usize> {
        elems(&self.inner.downset(&self.inner.subset(elements)))
    }

    fn __repr__(&self) -> String {
        format!("OrderedSemigroup({})", self.inner.to_json())
    }
}

/// The named fixtures `T1`, `LZ2`, `RZ2`, `N2`, `SL2`.
#[pyfunction]
fn fixtures() -> Vec<(String, PyOrderedSemigroup)> {
    ordsemi::fixtures::all()
        .into_iter()
        .map(|(n, s)| (n.to_string(), PyOrderedSemigroup { inner: s }))
        .collect()
}

/// `kind` is one of `left`, `right`, `two-sided`, `bi`.
#[pyfunction]
fn principal_ideal(s: &PyOrderedSemigroup, a: usize, kind: &str) -> PyResult<Vec<usize>> {
    let kind = match kind {
        "left" => IdealKind::Left,
        "right" => IdealKind::Right,
        "two-sided" => IdealKind::TwoSided,
        "bi" => IdealKind::Bi,
        other => return Err(bad("ideal kind", other)),
    };
    Ok(elems(&ideals::principal_ideal(&s.inner, a, kind)))
}

#[pyfunction]
fn kernel(s: &PyOrderedSemigroup) -> Vec<usize> {
    elems(&ideals::kernel(&s.inner))
}

/// `kind` is one of `left`, `right`, `two-sided`, `t`.
#[pyfunction]
#[pyo3(signature = (s, kind = "two-sided"))]
fn is_simple(s: &PyOrderedSemigroup, kind: &str) -> PyResult<bool> {
    let kind = match kind {
        "left" => Simplicity::Left,
        "right" => Simplicity::Right,
        "two-sided" => Simplicity::TwoSided,
        "t" => Simplicity::T,
        other => return Err(bad("simplicity", other)),
    };
    Ok(ideals::is_simple(&s.inner, kind))
}

#[pyfunction]
fn regular_set(s: &PyOrderedSemigroup) -> Vec<usize> {
    elems(&regularity::regular_set(&s.inner))
}

#[pyfunction]
fn ordered_idempotents(s: &PyOrderedSemigroup) -> Vec<usize> {
    elems(&regularity::ordered_idempotents(&s.inner))
}

#[pyfunction]
fn inverses(s: &PyOrderedSemigroup, a: usize) -> Vec<usize> {
    elems(&regularity::inverses(&s.inner, a))
}

#[pyfunction]
#[pyo3(signature = (s, vacuous = false))]
fn rv_set(s: &PyOrderedSemigroup, vacuous: bool) -> Vec<usize> {
    elems(&regularity::rv_set_with(&s.inner, reading(vacuous)))
}

#[pyfunction]
#[pyo3(signature = (s, vacuous = false))]
fn pi_rv_set(s: &PyOrderedSemigroup, vacuous: bool) -> Vec<usize> {
    elems(&regularity::pi_rv_set_with(&s.inner, reading(vacuous)))
}

fn green_kind(which: &str) -> PyResult<Green> {
    match which {
        "L" => Ok(Green::L),
        "R" => Ok(Green::R),
        "J" => Ok(Green::J),
        "H" => Ok(Green::H),
        other => Err(bad("relation", other)),
    }
}

/// Classes of `L`, `R`, `J` or `H`; `star=True` gives the starred relation.
#[pyfunction]
#[pyo3(signature = (s, which, star = false))]
fn green_classes(s: &PyOrderedSemigroup, which: &str, star: bool) -> PyResult<Vec<Vec<usize>>> {
    let g = green_kind(which)?;
    let rel = if star {
        relations::green_star(&s.inner, g).map_err(err)?
    } else {
        relations::green(&s.inner, g)
    };
    Ok(rel.classes().iter().map(elems).collect())
}

/// `flavor` is one of `two-sided`, `l`, `r`, `t`.
#[pyfunction]
#[pyo3(signature = (s, flavor = "two-sided"))]
fn is_archimedean(s: &PyOrderedSemigroup, flavor: &str) -> PyResult<bool> {
    let f = match flavor {
        "two-sided" => Archimedean::TwoSided,
        "l" => Archimedean::L,
        "r" => Archimedean::R,
        "t" => Archimedean::T,
        other => return Err(bad("archimedean flavor", other)),
    };
    Ok(relations::is_archimedean(&s.inner, f))
}

#[pyfunction]
fn least_semilattice_congruence(s: &PyOrderedSemigroup) -> Vec<Vec<usize>> {
    least_complete_semilattice_congruence(&s.inner)
        .classes()
        .iter()
        .map(elems)
        .collect()
}

#[pyfunction]
fn semilattice_congruences(s: &PyOrderedSemigroup) -> PyResult<Vec<Vec<Vec<usize>>>> {
    let all = all_complete_semilattice_congruences(&s.inner).map_err(err)?;
    Ok(all.iter().map(|c| c.classes().iter().map(elems).collect()).collect())
}

/// Evaluates a property expression such as `"right-pi-inverse & !pi-inverse"`.
#[pyfunction]
fn evaluate(s: &PyOrderedSemigroup, expression: &str) -> PyResult<bool> {
    let e: expr::PropertyExpr = expression
        .parse()
        .map_err(|e: expr::ParseError| PyValueError::new_err(e.to_string()))?;
    expr::evaluate(&s.inner, &e).map_err(err)
}

/// One theorem report as JSON.
#[pyfunction]
#[pyo3(signature = (s, theorem_id, vacuous = false))]
fn check(s: &PyOrderedSemigroup, theorem_id: &str, vacuous: bool) -> PyResult<String> {
    let opts = theorems::CheckOptions {
        rv_reading: reading(vacuous),
    };
    let report = theorems::check_with(&s.inner, theorem_id, &opts).map_err(err)?;
    Ok(serde_json::to_string(&report).expect("report json"))
}

/// Every applicable catalog report as a JSON array.
#[pyfunction]
#[pyo3(signature = (s, vacuous = false))]
fn check_all(s: &PyOrderedSemigroup, vacuous: bool) -> String {
    let opts = theorems::CheckOptions {
        rv_reading: reading(vacuous),
    };
    serde_json::to_string(&theorems::check_all_with(&s.inner, &opts)).expect("report json")
}

#[pyfunction]
fn theorem_ids() -> Vec<&'static str> {
    theorems::CATALOG.iter().map(|t| t.id).collect()
}

/// All structures of an order; `dedup` is `raw` or `iso`.
#[pyfunction]
#[pyo3(signature = (order, dedup = "raw"))]
fn enumerate(py: Python<'_>, order: usize, dedup: &str) -> PyResult<Vec<PyOrderedSemigroup>> {
    let d = match dedup {
        "raw" => Dedup::Raw,
        "iso" => Dedup::Iso,
        other => return Err(bad("dedup mode", other)),
    };
    let it = enumeration::enumerate_ordered_semigroups(order, d).map_err(err)?;
    Ok(py.detach(|| it.map(|inner| PyOrderedSemigroup { inner }).collect()))
}

#[pyfunction]
fn canonical_form(s: &PyOrderedSemigroup) -> PyOrderedSemigroup {
    PyOrderedSemigroup {
        inner: enumeration::canonical_form(&s.inner),
    }
}

/// The full `analyze --json` report.
#[pyfunction]
#[pyo3(signature = (s, vacuous = false))]
fn analyze(s: &PyOrderedSemigroup, vacuous: bool) -> String {
    serde_json::to_string(&ordsemi::analysis::analyze(&s.inner, reading(vacuous))).expect("json")
}

#[pymodule]
#[pyo3(name = "ordsemi")]
fn ordsemi_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyOrderedSemigroup>()?;
    m.add_function(wrap_pyfunction!(fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(principal_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(kernel, m)?)?;
    m.add_function(wrap_pyfunction!(is_simple, m)?)?;
    m.add_function(wrap_pyfunction!(regular_set, m)?)?;
    m.add_function(wrap_pyfunction!(ordered_idempotents, m)?)?;
    m.add_function(wrap_pyfunction!(inverses, m)?)?;
    m.add_function(wrap_pyfunction!(rv_set, m)?)?;
    m.add_function(wrap_pyfunction!(pi_rv_set, m)?)?;
    m.add_function(wrap_pyfunction!(green_classes, m)?)?;
    m.add_function(wrap_pyfunction!(is_archimedean, m)?)?;
    m.add_function(wrap_pyfunction!(least_semilattice_congruence, m)?)?;
    m.add_function(wrap_pyfunction!(semilattice_congruences, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(check_all, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_ids, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    Ok(())
}
