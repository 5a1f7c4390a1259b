//! Python bindings. Thin wrappers over the core types; every fallible core
//! call surfaces as a ValueError carrying the core error message.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use orbitcover_core as core;

fn val_err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct PitchClassSet {
    inner: core::PitchClassSet,
}

#[pymethods]
impl PitchClassSet {
    #[new]
    fn new(universe: usize, elements: Vec<usize>) -> PyResult<Self> {
        Ok(Self {
            inner: core::PitchClassSet::new(universe, elements).map_err(val_err)?,
        })
    }

    #[getter]
    fn universe(&self) -> usize {
        self.inner.universe()
    }

    #[getter]
    fn elements(&self) -> Vec<usize> {
        self.inner.elements().to_vec()
    }

    fn normal_order(&self) -> Vec<usize> {
        self.inner.normal_order()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __contains__(&self, element: usize) -> bool {
        self.inner.contains(element)
    }

    fn __repr__(&self) -> String {
        format!("PitchClassSet(\"{}\")", self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Scale {
    inner: core::Scale,
}

#[pymethods]
impl Scale {
    #[new]
    fn new(universe: usize, elements: Vec<usize>) -> PyResult<Self> {
        let base = core::PitchClassSet::new(universe, elements).map_err(val_err)?;
        Ok(Self {
            inner: core::Scale::new(base),
        })
    }

    #[getter]
    fn universe(&self) -> usize {
        self.inner.universe()
    }

    /// Elements in degree order (the normal order of the underlying set).
    #[getter]
    fn order(&self) -> Vec<usize> {
        self.inner.order().to_vec()
    }

    fn degree_of(&self, element: usize) -> PyResult<usize> {
        self.inner.degree_of(element).map_err(val_err)
    }

    fn at_degree(&self, degree: usize) -> usize {
        self.inner.at_degree(degree)
    }

    fn translate(&self, g: usize, x: usize) -> PyResult<usize> {
        self.inner.translate(g, x).map_err(val_err)
    }

    fn interval(&self, x: usize, y: usize) -> PyResult<usize> {
        self.inner.interval(x, y).map_err(val_err)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __contains__(&self, element: usize) -> bool {
        self.inner.contains(element)
    }

    fn __repr__(&self) -> String {
        format!("Scale(\"{}\")", self.inner.base())
    }
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Mode {
    inner: core::Mode,
}

#[pymethods]
impl Mode {
    #[new]
    fn new(universe: usize, elements: Vec<usize>, index: usize) -> PyResult<Self> {
        let base = core::PitchClassSet::new(universe, elements).map_err(val_err)?;
        Ok(Self {
            inner: core::Mode::new(base, index).map_err(val_err)?,
        })
    }

    #[getter]
    fn index(&self) -> usize {
        self.inner.index()
    }

    #[getter]
    fn tonic(&self) -> usize {
        self.inner.tonic()
    }

    fn degree_of(&self, element: usize) -> PyResult<usize> {
        self.inner.degree_of(element).map_err(val_err)
    }

    fn at_degree(&self, degree: usize) -> usize {
        self.inner.at_degree(degree)
    }

    /// Group sum of two elements in this mode's structure.
    fn add(&self, x: usize, y: usize) -> PyResult<usize> {
        self.inner.add(x, y).map_err(val_err)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Mode(index={}, tonic={})",
            self.inner.index(),
            self.inner.tonic()
        )
    }
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct IntervalComposition {
    inner: core::IntervalComposition,
}

#[pymethods]
impl IntervalComposition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        Ok(Self {
            inner: core::IntervalComposition::new(parts).map_err(val_err)?,
        })
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    #[getter]
    fn total(&self) -> usize {
        self.inner.total()
    }

    fn rotations(&self) -> Vec<Self> {
        self.inner
            .rotations()
            .into_iter()
            .map(|inner| Self { inner })
            .collect()
    }

    fn canonical_rotation(&self) -> Self {
        Self {
            inner: self.inner.canonical_rotation(),
        }
    }

    fn u_transform(&self, u: usize) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.u_transform(u).map_err(val_err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut hasher = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut hasher);
        hasher.finish()
    }

    fn __repr__(&self) -> String {
        format!("IntervalComposition({:?})", self.inner.parts())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct RotationClass {
    inner: core::RotationClass,
}

#[pymethods]
impl RotationClass {
    #[getter]
    fn representative(&self) -> IntervalComposition {
        IntervalComposition {
            inner: self.inner.representative().clone(),
        }
    }

    #[getter]
    fn members(&self) -> Vec<IntervalComposition> {
        self.inner
            .members()
            .iter()
            .map(|m| IntervalComposition { inner: m.clone() })
            .collect()
    }

    fn __contains__(&self, sigma: &IntervalComposition) -> bool {
        self.inner.contains(&sigma.inner)
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct AffineOrbit {
    inner: core::AffineOrbit,
}

#[pymethods]
impl AffineOrbit {
    #[getter]
    fn classes(&self) -> Vec<RotationClass> {
        self.inner
            .classes()
            .iter()
            .map(|c| RotationClass { inner: c.clone() })
            .collect()
    }

    /// Smallest unit carrying class `from_index` onto class `to_index`,
    /// or None when the indices are out of range.
    fn witness_between(&self, from_index: usize, to_index: usize) -> Option<usize> {
        self.inner.witness_between(from_index, to_index)
    }

    fn __len__(&self) -> usize {
        self.inner.classes().len()
    }

    fn __repr__(&self) -> String {
        let reps: Vec<String> = self.inner.classes().iter().map(|c| c.to_string()).collect();
        format!("AffineOrbit({})", reps.join(", "))
    }
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct OrbitCover {
    inner: core::OrbitCover,
}

#[pymethods]
impl OrbitCover {
    #[getter]
    fn scale(&self) -> Scale {
        Scale {
            inner: self.inner.scale().clone(),
        }
    }

    #[getter]
    fn sigma(&self) -> IntervalComposition {
        IntervalComposition {
            inner: self.inner.sigma().clone(),
        }
    }

    #[getter]
    fn root(&self) -> usize {
        self.inner.root()
    }

    /// Indexed members as sorted element lists.
    #[getter]
    fn members(&self) -> Vec<Vec<usize>> {
        self.inner
            .members()
            .iter()
            .map(|c| c.elements().to_vec())
            .collect()
    }

    #[getter]
    fn distinct_members(&self) -> Vec<Vec<usize>> {
        self.inner
            .distinct_members()
            .iter()
            .map(|c| c.elements().to_vec())
            .collect()
    }

    /// Member `i` in stacking order (successive steps of sigma).
    fn member_stacked(&self, i: usize) -> Vec<usize> {
        self.inner.member_stacked(i)
    }

    fn is_primitive(&self) -> bool {
        self.inner.is_primitive()
    }

    fn __len__(&self) -> usize {
        self.inner.members().len()
    }

    fn __repr__(&self) -> String {
        format!(
            "OrbitCover(sigma={}, root={}, members={})",
            self.inner.sigma(),
            self.inner.root(),
            self.inner.members().len()
        )
    }
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct CoverTransport {
    inner: core::CoverTransport,
}

#[pymethods]
impl CoverTransport {
    #[getter]
    fn unit(&self) -> usize {
        self.inner.unit()
    }

    #[getter]
    fn offset(&self) -> usize {
        self.inner.offset()
    }

    #[getter]
    fn image(&self) -> OrbitCover {
        OrbitCover {
            inner: self.inner.image().clone(),
        }
    }

    /// `(x, f(x))` pairs in scale order from the root.
    #[getter]
    fn pairs(&self) -> Vec<(usize, usize)> {
        self.inner.pairs().to_vec()
    }

    fn apply(&self, x: usize) -> PyResult<usize> {
        self.inner.apply(x).map_err(val_err)
    }

    fn index_image(&self, i: usize) -> usize {
        self.inner.index_image(i)
    }

    fn __repr__(&self) -> String {
        format!(
            "CoverTransport(unit={}, offset={})",
            self.inner.unit(),
            self.inner.offset()
        )
    }
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct SimplicialComplex {
    inner: core::SimplicialComplex,
}

#[pymethods]
impl SimplicialComplex {
    /// Build the closure of a family of simplices given by vertex index
    /// lists over `labels`.
    #[staticmethod]
    fn from_maximal(labels: Vec<String>, simplices: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(Self {
            inner: core::SimplicialComplex::from_maximal(labels, &simplices).map_err(val_err)?,
        })
    }

    #[getter]
    fn vertex_labels(&self) -> Vec<String> {
        self.inner.vertex_labels().to_vec()
    }

    #[getter]
    fn f_vector(&self) -> Vec<usize> {
        self.inner.f_vector()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn simplices_of_dim(&self, p: usize) -> Vec<Vec<usize>> {
        self.inner.simplices_of_dim(p).to_vec()
    }

    fn euler_characteristic(&self) -> i64 {
        self.inner.euler_characteristic()
    }

    fn __contains__(&self, simplex: Vec<usize>) -> bool {
        self.inner.contains(&simplex)
    }

    fn __repr__(&self) -> String {
        format!("SimplicialComplex(f_vector={:?})", self.inner.f_vector())
    }
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct HomologyProfile {
    inner: core::HomologyProfile,
}

#[pymethods]
impl HomologyProfile {
    #[getter]
    fn betti(&self) -> Vec<usize> {
        self.inner.betti().to_vec()
    }

    #[getter]
    fn torsion(&self) -> Vec<Vec<u64>> {
        self.inner.torsion().to_vec()
    }

    #[getter]
    fn euler(&self) -> i64 {
        self.inner.euler()
    }

    fn __repr__(&self) -> String {
        format!(
            "HomologyProfile(betti={:?}, torsion={:?}, euler={})",
            self.inner.betti(),
            self.inner.torsion(),
            self.inner.euler()
        )
    }
}

#[pyfunction]
fn enumerate_compositions(n: usize, k: usize) -> PyResult<Vec<IntervalComposition>> {
    Ok(core::enumerate_compositions(n, k)
        .map_err(val_err)?
        .into_iter()
        .map(|inner| IntervalComposition { inner })
        .collect())
}

#[pyfunction]
fn rotation_classes(n: usize, k: usize) -> PyResult<Vec<RotationClass>> {
    Ok(core::rotation_classes(n, k)
        .map_err(val_err)?
        .into_iter()
        .map(|inner| RotationClass { inner })
        .collect())
}

#[pyfunction]
fn affine_orbits(n: usize, k: usize) -> PyResult<Vec<AffineOrbit>> {
    Ok(core::affine_orbits(n, k)
        .map_err(val_err)?
        .into_iter()
        .map(|inner| AffineOrbit { inner })
        .collect())
}

#[pyfunction]
fn unit_group(n: usize) -> Vec<usize> {
    core::unit_group(n)
}

/// Chord realized by stacking `sigma` above `x`, in stacking order.
#[pyfunction]
fn realize(sigma: &IntervalComposition, scale: &Scale, x: usize) -> PyResult<Vec<usize>> {
    let chord = core::realize(&sigma.inner, &scale.inner, x).map_err(val_err)?;
    let mut stacked = Vec::with_capacity(chord.len());
    let mut current = x;
    stacked.push(current);
    for &step in &sigma.inner.parts()[..sigma.inner.len() - 1] {
        current = scale.inner.translate(step, current).map_err(val_err)?;
        stacked.push(current);
    }
    Ok(stacked)
}

#[pyfunction]
fn orbit_cover(scale: &Scale, sigma: &IntervalComposition, root: usize) -> PyResult<OrbitCover> {
    Ok(OrbitCover {
        inner: core::orbit_cover(&scale.inner, &sigma.inner, root).map_err(val_err)?,
    })
}

#[pyfunction]
fn transport_cover(
    cover: &OrbitCover,
    u: usize,
    v: usize,
    target: &Scale,
) -> PyResult<CoverTransport> {
    Ok(CoverTransport {
        inner: core::transport_cover(&cover.inner, u, v, &target.inner).map_err(val_err)?,
    })
}

#[pyfunction]
fn build_nerve(cover: &OrbitCover) -> SimplicialComplex {
    SimplicialComplex {
        inner: core::build_nerve(&cover.inner),
    }
}

/// `(element, member indices)` pairs in ascending element order.
#[pyfunction]
fn harmonic_regions(cover: &OrbitCover) -> PyResult<Vec<(usize, Vec<usize>)>> {
    Ok(core::harmonic_regions(&cover.inner)
        .map_err(val_err)?
        .iter()
        .map(|(x, d)| (x, d.to_vec()))
        .collect())
}

#[pyfunction]
fn homology(complex: &SimplicialComplex) -> HomologyProfile {
    HomologyProfile {
        inner: core::homology(&complex.inner),
    }
}

/// Vertex bijection witnessing an isomorphism, or None.
#[pyfunction]
fn nerve_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Vec<usize>> {
    core::nerve_isomorphic(&a.inner, &b.inner)
}

#[pymodule]
fn orbitcover(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PitchClassSet>()?;
    m.add_class::<Scale>()?;
    m.add_class::<Mode>()?;
    m.add_class::<IntervalComposition>()?;
    m.add_class::<RotationClass>()?;
    m.add_class::<AffineOrbit>()?;
    m.add_class::<OrbitCover>()?;
    m.add_class::<CoverTransport>()?;
    m.add_class::<SimplicialComplex>()?;
    m.add_class::<HomologyProfile>()?;
    m.add_function(wrap_pyfunction!(enumerate_compositions, m)?)?;
    m.add_function(wrap_pyfunction!(rotation_classes, m)?)?;
    m.add_function(wrap_pyfunction!(affine_orbits, m)?)?;
    m.add_function(wrap_pyfunction!(unit_group, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_cover, m)?)?;
    m.add_function(wrap_pyfunction!(transport_cover, m)?)?;
    m.add_function(wrap_pyfunction!(build_nerve, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic_regions, m)?)?;
    m.add_function(wrap_pyfunction!(homology, m)?)?;
    m.add_function(wrap_pyfunction!(nerve_isomorphic, m)?)?;
    Ok(())
}
