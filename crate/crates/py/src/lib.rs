//! Python bindings: `Matroid`, `Representation` and the union, packing and
//! demo entry points. Reports come back as plain dicts.

use matroid_union::axioms::{check_matroid, CheckOptions};
use matroid_union::infinitary::demos::{demo_growth_chain, Demo};
use matroid_union::infinitary::{finitarize as finitarize_family, ladder_demo, nearly_finitary_gap, SymbolicFamily};
use matroid_union::packing::{cover_independent, pack_bases as pack, tree_pack as trees, Graph};
use matroid_union::union::{union_base as base, union_membership as membership};
use matroid_union::{Descriptor, Subset};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Hands a JSON value to Python through `json.loads`.
fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    let json = py.import("json")?;
    Ok(json.call_method1("loads", (v.to_string(),))?.unbind())
}

/// A finite matroid given by an independence oracle.
#[pyclass(name = "Matroid", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyMatroid {
    pub inner: matroid_union::Matroid,
}

impl PyMatroid {
    fn subset(&self, ids: Vec<String>) -> PyResult<Subset> {
        self.inner.ground().subset(ids).map_err(value_error)
    }

    fn names(&self, s: Subset) -> Vec<String> {
        self.inner.ground().names(s)
    }
}

#[pymethods]
impl PyMatroid {
    /// Loads a descriptor such as `{"type": "uniform", "k": 2, "ground": ["a", "b", "c"]}`.
    #[staticmethod]
    pub fn from_json(text: &str) -> PyResult<Self> {
        let d: Descriptor = serde_json::from_str(text).map_err(value_error)?;
        let inner = matroid_union::Matroid::from_descriptor(&d).map_err(value_error)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    pub fn uniform(k: usize, ground: Vec<String>) -> PyResult<Self> {
        Self::from_descriptor(Descriptor::Uniform { k, ground })
    }

    #[staticmethod]
    pub fn circuit(ground: Vec<String>) -> PyResult<Self> {
        Self::from_descriptor(Descriptor::Circuit { ground })
    }

    /// Cycle matroid of a multigraph; `edges` are `(id, u, v)` triples.
    #[staticmethod]
    pub fn graphic(vertices: Vec<String>, edges: Vec<(String, String, String)>) -> PyResult<Self> {
        Self::from_descriptor(Descriptor::Graphic { vertices, edges })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self.inner.descriptor()).expect("descriptors serialize")
    }

    pub fn ground(&self) -> Vec<String> {
        self.inner.ground().ids().to_vec()
    }

    pub fn is_independent(&self, ids: Vec<String>) -> PyResult<bool> {
        Ok(self.inner.is_independent(self.subset(ids)?))
    }

    #[pyo3(signature = (ids=None))]
    pub fn rank(&self, ids: Option<Vec<String>>) -> PyResult<usize> {
        match ids {
            Some(ids) => Ok(self.inner.rank(self.subset(ids)?)),
            None => Ok(self.inner.full_rank()),
        }
    }

    pub fn bases(&self) -> PyResult<Vec<Vec<String>>> {
        let bs = self.inner.bases().map_err(value_error)?;
        Ok(bs.into_iter().map(|b| self.names(b)).collect())
    }

    pub fn circuits(&self) -> PyResult<Vec<Vec<String>>> {
        let cs = self.inner.circuits().map_err(value_error)?;
        Ok(cs.into_iter().map(|c| self.names(c)).collect())
    }

    pub fn dual(&self) -> Self {
        Self {
            inner: self.inner.dual(),
        }
    }

    /// `M[k]`: independent sets that still extend by `k` elements.
    pub fn mk(&self, k: usize) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.mk(k).map_err(value_error)?,
        })
    }

    /// Axiom verdicts as a dict keyed `I1`, `I2`, `I3`, `I3'`, `IM`, `C`, plus `witness`.
    pub fn check_axioms(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let r = check_matroid(&self.inner, &CheckOptions::default()).map_err(value_error)?;
        to_py(py, &r.to_json(self.inner.ground()))
    }

    pub fn __len__(&self) -> usize {
        self.inner.len()
    }

    pub fn __repr__(&self) -> String {
        format!("Matroid(n={}, rank={})", self.inner.len(), self.inner.full_rank())
    }
}

impl PyMatroid {
    fn from_descriptor(d: Descriptor) -> PyResult<Self> {
        let inner = matroid_union::Matroid::from_descriptor(&d).map_err(value_error)?;
        Ok(Self { inner })
    }
}

/// A split `I1 ∪ I2` of a set in the union.
#[pyclass(name = "Representation", frozen, get_all, skip_from_py_object)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyRepresentation {
    pub i1: Vec<String>,
    pub i2: Vec<String>,
}

#[pymethods]
impl PyRepresentation {
    pub fn set(&self) -> Vec<String> {
        let mut all: Vec<String> = self.i1.iter().chain(&self.i2).cloned().collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn __repr__(&self) -> String {
        format!("Representation(i1={:?}, i2={:?})", self.i1, self.i2)
    }
}

fn same_ground(a: &PyMatroid, b: &PyMatroid) -> PyResult<()> {
    if a.inner.ground() != b.inner.ground() {
        return Err(PyValueError::new_err("matroids must share a ground set"));
    }
    Ok(())
}

/// A representation of `ids` in the union of `a` and `b`, or `None`.
#[pyfunction]
pub fn union_membership(a: &PyMatroid, b: &PyMatroid, ids: Vec<String>) -> PyResult<Option<PyRepresentation>> {
    same_ground(a, b)?;
    let x = a.subset(ids)?;
    let rep = membership(&a.inner, &b.inner, x).map_err(value_error)?;
    Ok(rep.map(|r| PyRepresentation {
        i1: a.names(r.first),
        i2: a.names(r.second),
    }))
}

/// A maximal set of the union of `a` and `b`.
#[pyfunction]
pub fn union_base(a: &PyMatroid, b: &PyMatroid) -> PyResult<PyRepresentation> {
    same_ground(a, b)?;
    let r = base(&a.inner, &b.inner, a.inner.all()).map_err(value_error)?;
    Ok(PyRepresentation {
        i1: a.names(r.first),
        i2: a.names(r.second),
    })
}

#[pyfunction]
pub fn pack_bases(py: Python<'_>, m: &PyMatroid, k: usize) -> PyResult<Py<PyAny>> {
    let r = pack(&m.inner, k).map_err(value_error)?;
    to_py(py, &r.to_json(m.inner.ground()))
}

#[pyfunction]
pub fn cover(py: Python<'_>, m: &PyMatroid, k: usize) -> PyResult<Py<PyAny>> {
    let r = cover_independent(&m.inner, k).map_err(value_error)?;
    to_py(py, &r.to_json(m.inner.ground()))
}

#[pyfunction]
pub fn tree_pack(
    py: Python<'_>,
    vertices: Vec<String>,
    edges: Vec<(String, String, String)>,
    k: usize,
) -> PyResult<Py<PyAny>> {
    let g = Graph { vertices, edges };
    let m = g.matroid().map_err(value_error)?;
    let r = trees(&g, k).map_err(value_error)?;
    to_py(py, &r.to_json(m.ground()))
}

/// A certified growth chain; `ladder` returns the ladder report instead.
#[pyfunction]
#[pyo3(signature = (name, window=2, steps=5, countable_analog=false))]
pub fn demo(py: Python<'_>, name: &str, window: usize, steps: usize, countable_analog: bool) -> PyResult<Py<PyAny>> {
    if name == "ladder" {
        let r = ladder_demo(window).map_err(value_error)?;
        return to_py(py, &r.to_json());
    }
    let d = Demo::parse(name, countable_analog).map_err(value_error)?;
    let chain = demo_growth_chain(&d, window, steps).map_err(value_error)?;
    let mut v = chain.to_json();
    v["certified"] = Value::Bool(chain.certify().map_err(value_error)?);
    to_py(py, &v)
}

fn family(text: &str) -> PyResult<SymbolicFamily> {
    let f: SymbolicFamily = serde_json::from_str(text).map_err(value_error)?;
    f.validate().map_err(value_error)?;
    Ok(f)
}

#[pyfunction]
#[pyo3(signature = (family_json, first=2, last=8))]
pub fn gap(py: Python<'_>, family_json: &str, first: usize, last: usize) -> PyResult<Py<PyAny>> {
    let r = nearly_finitary_gap(&family(family_json)?, first..=last).map_err(value_error)?;
    to_py(py, &r.to_json())
}

/// The finitarized family, as JSON text.
#[pyfunction]
pub fn finitarize(family_json: &str) -> PyResult<String> {
    let f = finitarize_family(&family(family_json)?);
    serde_json::to_string(&f).map_err(value_error)
}

#[pymodule]
fn pymatroid(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatroid>()?;
    m.add_class::<PyRepresentation>()?;
    m.add_function(wrap_pyfunction!(union_membership, m)?)?;
    m.add_function(wrap_pyfunction!(union_base, m)?)?;
    m.add_function(wrap_pyfunction!(pack_bases, m)?)?;
    m.add_function(wrap_pyfunction!(cover, m)?)?;
    m.add_function(wrap_pyfunction!(tree_pack, m)?)?;
    m.add_function(wrap_pyfunction!(demo, m)?)?;
    m.add_function(wrap_pyfunction!(gap, m)?)?;
    m.add_function(wrap_pyfunction!(finitarize, m)?)?;
    Ok(())
}
