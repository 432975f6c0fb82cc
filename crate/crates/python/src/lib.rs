//! Python bindings: permutations, groups, decorations and the classification.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use mobius_tsg_core::decoration::{self, Evaluation};
use mobius_tsg_core::graph::{self, Graph};
use mobius_tsg_core::perm::{self, are_isomorphic, recognize};
use mobius_tsg_core::{realizability, verify, Error};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Permutation", module = "mobius_tsg", frozen, from_py_object)]
#[derive(Clone)]
struct PyPermutation(perm::Permutation);

#[pymethods]
impl PyPermutation {
    /// From a 1-based image list: `images[i - 1]` is the image of `i`.
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        perm::Permutation::from_images(&images)
            .map(Self)
            .map_err(value_err)
    }

    #[staticmethod]
    fn parse(text: &str, degree: usize) -> PyResult<Self> {
        perm::Permutation::parse(text, degree)
            .map(Self)
            .map_err(value_err)
    }

    #[staticmethod]
    fn from_cycles(cycles: Vec<Vec<usize>>, degree: usize) -> PyResult<Self> {
        perm::Permutation::from_cycles(&cycles, degree)
            .map(Self)
            .map_err(value_err)
    }

    #[staticmethod]
    fn identity(degree: usize) -> PyResult<Self> {
        perm::Permutation::identity(degree)
            .map(Self)
            .map_err(value_err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn images(&self) -> Vec<usize> {
        self.0.images()
    }

    fn apply(&self, point: usize) -> PyResult<usize> {
        if point == 0 || point > self.0.degree() {
            return Err(value_err(Error::PointOutOfRange {
                point,
                degree: self.0.degree(),
            }));
        }
        Ok(self.0.apply(point))
    }

    /// `self.compose(other)` applies `other` first.
    fn compose(&self, other: &PyPermutation) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(value_err)
    }

    fn __mul__(&self, other: &PyPermutation) -> PyResult<Self> {
        self.compose(other)
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        self.0.cycles()
    }

    fn cycle_type(&self) -> Vec<usize> {
        self.0.cycle_type()
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn __eq__(&self, other: &PyPermutation) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.images().hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation.parse('{}', {})", self.0, self.0.degree())
    }
}

#[pyclass(name = "PermGroup", module = "mobius_tsg", frozen, from_py_object)]
#[derive(Clone)]
struct PyPermGroup(perm::PermGroup);

#[pymethods]
impl PyPermGroup {
    #[new]
    fn new(generators: Vec<PyPermutation>) -> PyResult<Self> {
        let gens: Vec<perm::Permutation> = generators.into_iter().map(|p| p.0).collect();
        perm::PermGroup::generate(&gens)
            .map(Self)
            .map_err(value_err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn elements(&self) -> Vec<PyPermutation> {
        self.0
            .elements()
            .iter()
            .cloned()
            .map(PyPermutation)
            .collect()
    }

    fn generators(&self) -> Vec<PyPermutation> {
        self.0
            .generators()
            .iter()
            .cloned()
            .map(PyPermutation)
            .collect()
    }

    fn __contains__(&self, p: &PyPermutation) -> bool {
        self.0.contains(&p.0)
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn is_abelian(&self) -> bool {
        self.0.is_abelian()
    }

    fn is_subgroup_of(&self, other: &PyPermGroup) -> bool {
        self.0.is_subgroup_of(&other.0)
    }

    /// Short code of the recognized isomorphism type, e.g. `"D3xD3"`.
    fn name(&self) -> String {
        recognize(&self.0).code()
    }

    /// Readable isomorphism type, e.g. `"D_3 x D_3"`.
    fn display_name(&self) -> String {
        recognize(&self.0).to_string()
    }

    fn is_isomorphic(&self, other: &PyPermGroup) -> PyResult<bool> {
        Ok(are_isomorphic(&self.0, &other.0)
            .map_err(value_err)?
            .is_some())
    }

    fn subgroups(&self) -> PyResult<Vec<PyPermGroup>> {
        Ok(perm::all_subgroups(&self.0)
            .map_err(value_err)?
            .into_iter()
            .map(PyPermGroup)
            .collect())
    }

    fn __eq__(&self, other: &PyPermGroup) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!(
            "<PermGroup order {} ({})>",
            self.0.order(),
            recognize(&self.0)
        )
    }
}

#[pyclass(
    name = "RealizedGroup",
    module = "mobius_tsg",
    frozen,
    get_all,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyRealizedGroup {
    name: String,
    display_name: String,
    order: usize,
    witness: Option<String>,
}

#[pymethods]
impl PyRealizedGroup {
    fn __repr__(&self) -> String {
        format!("<RealizedGroup {} order {}>", self.name, self.order)
    }
}

#[pyclass(
    name = "CatalogEntry",
    module = "mobius_tsg",
    frozen,
    get_all,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyCatalogEntry {
    name: String,
    expected: String,
    order: usize,
    refined: bool,
    family: String,
    description: String,
    decoration_json: String,
}

#[pymethods]
impl PyCatalogEntry {
    /// The stabilizer, or the refined bound for entries evaluated that way.
    fn evaluate(&self) -> PyResult<PyPermGroup> {
        let entry = decoration::catalog_entry(&self.name)
            .ok_or_else(|| PyValueError::new_err(format!("no catalog entry {:?}", self.name)))?;
        entry.evaluate().map(PyPermGroup).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!("<CatalogEntry {} ({})>", self.name, self.expected)
    }
}

fn load_graph(spec: &str) -> PyResult<Graph> {
    match Graph::builtin(spec) {
        Some(g) => g.map_err(value_err),
        None => Graph::parse_text(spec).map_err(value_err),
    }
}

/// Automorphism group of `k33`, `mobius:<n>`, or a graph in the text format.
#[pyfunction]
fn automorphisms(graph: &str) -> PyResult<PyPermGroup> {
    graph::automorphisms(&load_graph(graph)?)
        .map(PyPermGroup)
        .map_err(value_err)
}

/// Stabilizer of a decoration given as JSON text.
#[pyfunction]
#[pyo3(signature = (decoration_json, refined = false))]
fn stabilizer(decoration_json: &str, refined: bool) -> PyResult<PyPermGroup> {
    let d = decoration::decoration_from_json(decoration_json).map_err(value_err)?;
    let g = if refined {
        decoration::refined_upper_bound(&d)
    } else {
        decoration::stabilizer(&d)
    };
    g.map(PyPermGroup).map_err(value_err)
}

#[pyfunction]
fn classify(n: usize) -> PyResult<Vec<PyRealizedGroup>> {
    let report = realizability::classify(n).map_err(value_err)?;
    Ok(report
        .groups
        .into_iter()
        .map(|g| PyRealizedGroup {
            name: g.name.code(),
            display_name: g.name.to_string(),
            order: g.order,
            witness: g.witness,
        })
        .collect())
}

#[pyfunction]
fn classify_json(n: usize) -> PyResult<String> {
    realizability::classify(n)
        .map(|r| r.to_json())
        .map_err(value_err)
}

#[pyfunction]
fn catalog() -> PyResult<Vec<PyCatalogEntry>> {
    decoration::catalog()
        .into_iter()
        .map(|e| {
            Ok(PyCatalogEntry {
                name: e.name.to_string(),
                expected: e.expected.code(),
                order: e.expected.order(),
                refined: e.evaluation == Evaluation::RefinedBound,
                family: e.family.to_string(),
                description: e.description.to_string(),
                decoration_json: decoration::decoration_to_json(&e.decoration)
                    .map_err(value_err)?,
            })
        })
        .collect()
}

#[pyfunction]
fn admissible_subgroup() -> PyResult<PyPermGroup> {
    realizability::admissible_subgroup()
        .map(PyPermGroup)
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pyfunction]
fn is_admissible(p: &PyPermutation) -> PyResult<bool> {
    realizability::is_admissible(&p.0).map_err(value_err)
}

/// `(subgroups_found, all_contain_transposition, vacuous)`.
#[pyfunction]
fn lemma_z2cubed() -> PyResult<(usize, bool, bool)> {
    let r = realizability::lemma_z2cubed().map_err(value_err)?;
    Ok((r.subgroups_found, r.all_contain_transposition, r.vacuous))
}

/// Runs the golden checks as `(name, passed, detail)` triples.
#[pyfunction]
#[pyo3(signature = (deep = false))]
fn verify_all(py: Python<'_>, deep: bool) -> Vec<(String, bool, String)> {
    py.detach(|| {
        verify::run_checks(deep, |_| {})
            .into_iter()
            .map(|c| (c.name.to_string(), c.passed, c.detail))
            .collect()
    })
}

#[pymodule]
fn mobius_tsg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyPermGroup>()?;
    m.add_class::<PyRealizedGroup>()?;
    m.add_class::<PyCatalogEntry>()?;
    m.add_function(wrap_pyfunction!(automorphisms, m)?)?;
    m.add_function(wrap_pyfunction!(stabilizer, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(classify_json, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_subgroup, m)?)?;
    m.add_function(wrap_pyfunction!(is_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_z2cubed, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
