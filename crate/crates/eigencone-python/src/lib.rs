//! Python bindings: thin wrappers over the eigencone library. Rationals
//! cross the boundary as exact "p/q" strings, weights as lists of ints.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use eigencone::cone::{self, FacetDescriptor, DEFAULT_BUDGET};
use eigencone::rays::{self, ProductPoint, Provenance, Ray};
use eigencone::schubert::{self, BoxPartition, SchubertIndex};
use eigencone::weights::{self, DominantWeight, KappaTuple};

fn value_err(e: eigencone::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn index(n: u32, elements: Vec<u32>) -> PyResult<SchubertIndex> {
    SchubertIndex::new(n, elements).map_err(value_err)
}

fn indices(n: u32, sets: Vec<Vec<u32>>) -> PyResult<Vec<SchubertIndex>> {
    sets.into_iter().map(|e| index(n, e)).collect()
}

fn weight(entries: &[i64]) -> PyResult<DominantWeight> {
    DominantWeight::new(entries).map_err(value_err)
}

fn weight_tuple(rows: &[Vec<i64>]) -> PyResult<Vec<DominantWeight>> {
    rows.iter().map(|r| weight(r)).collect()
}

fn kappa_strings(tuple: &KappaTuple) -> Vec<Vec<String>> {
    tuple
        .points()
        .iter()
        .map(|p| p.entries().iter().map(ToString::to_string).collect())
        .collect()
}

fn weight_lists(weights: &[DominantWeight]) -> Vec<Vec<u32>> {
    weights.iter().map(|w| w.entries().to_vec()).collect()
}

/// One regular facet of the eigencone.
#[pyclass(frozen, get_all)]
struct Facet {
    n: u32,
    r: u32,
    q: usize,
    indices: Vec<Vec<u32>>,
    descriptor: String,
}

impl From<&FacetDescriptor> for Facet {
    fn from(f: &FacetDescriptor) -> Self {
        Facet {
            n: f.n(),
            r: f.r(),
            q: f.q(),
            indices: f.indices().iter().map(|i| i.elements().to_vec()).collect(),
            descriptor: f.to_string(),
        }
    }
}

#[pymethods]
impl Facet {
    fn __repr__(&self) -> String {
        format!("Facet({})", self.descriptor)
    }
}

/// An extremal-ray representative: primitive weight tuple plus exact
/// trace-zero coordinates.
#[pyclass(frozen, get_all, name = "Ray")]
struct PyRay {
    weights: Vec<Vec<u32>>,
    kappa: Vec<Vec<String>>,
    provenance: String,
}

impl From<&Ray> for PyRay {
    fn from(ray: &Ray) -> Self {
        let provenance = match ray.provenance() {
            Provenance::Basic { facet, j0, a0 } => {
                format!("basic[{facet}; j0={j0}, a0={a0}]")
            }
            Provenance::Induced { facet, .. } => format!("induced[{facet}]"),
            Provenance::Imported => "imported".to_string(),
        };
        PyRay {
            weights: weight_lists(ray.weight_tuple()),
            kappa: kappa_strings(ray.direction()),
            provenance,
        }
    }
}

#[pymethods]
impl PyRay {
    fn __repr__(&self) -> String {
        format!("Ray(weights={:?})", self.weights)
    }
}

/// Codimension of the Schubert class named by an index set.
#[pyfunction]
fn codim(n: u32, elements: Vec<u32>) -> PyResult<u32> {
    Ok(index(n, elements)?.codim())
}

/// The box partition of a Schubert index.
#[pyfunction]
fn partition_of(n: u32, elements: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(index(n, elements)?.partition().parts().to_vec())
}

/// Images of 1..=n under the permutation attached to an index set.
#[pyfunction]
fn permutation_w(n: u32, elements: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(index(n, elements)?.permutation())
}

/// The Grassmann-dual index set in Gr(n-r, n).
#[pyfunction]
fn dual_index(n: u32, elements: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(index(n, elements)?.dual().elements().to_vec())
}

/// Littlewood-Richardson product of two partitions in an r x c box, as a
/// list of (partition, coefficient) pairs.
#[pyfunction]
fn lr_multiply(
    rows: u32,
    cols: u32,
    p: Vec<u32>,
    q: Vec<u32>,
) -> PyResult<Vec<(Vec<u32>, u64)>> {
    let p = BoxPartition::new(rows, cols, &p).map_err(value_err)?;
    let q = BoxPartition::new(rows, cols, &q).map_err(value_err)?;
    let product = schubert::lr_multiply(&p, &q).map_err(value_err)?;
    Ok(product
        .terms()
        .iter()
        .map(|(nu, c)| (nu.parts().to_vec(), *c))
        .collect())
}

/// Coefficient of the point class in the product of the named Schubert
/// classes.
#[pyfunction]
fn intersection_number(n: u32, sets: Vec<Vec<u32>>) -> PyResult<u64> {
    schubert::intersection_number(&indices(n, sets)?).map_err(value_err)
}

/// Trace-zero coordinates of a dominant weight, as exact "p/q" strings.
#[pyfunction]
fn kappa(weight_entries: Vec<i64>) -> PyResult<Vec<String>> {
    let w = weight(&weight_entries)?;
    Ok(weights::kappa(&w)
        .entries()
        .iter()
        .map(ToString::to_string)
        .collect())
}

/// The dual representation label.
#[pyfunction]
fn dual_weight(weight_entries: Vec<i64>) -> PyResult<Vec<u32>> {
    Ok(weights::dual_weight(&weight(&weight_entries)?)
        .entries()
        .to_vec())
}

/// Coefficients of the fundamental-weight decomposition, as a dict.
#[pyfunction]
fn fundamental_decomposition(
    weight_entries: Vec<i64>,
) -> PyResult<std::collections::BTreeMap<u32, u32>> {
    Ok(weights::fundamental_decomposition(&weight(&weight_entries)?))
}

/// Dimension of the invariant subspace of the tensor product of the
/// irreducibles labeled by the given weights.
#[pyfunction]
fn invariant_dimension(weight_rows: Vec<Vec<i64>>) -> PyResult<u64> {
    weights::invariant_dimension(&weight_tuple(&weight_rows)?).map_err(value_err)
}

/// Exact eigencone membership of the weight tuple's coordinates.
#[pyfunction]
#[pyo3(signature = (weight_rows, budget=None))]
fn is_member(weight_rows: Vec<Vec<i64>>, budget: Option<u64>) -> PyResult<bool> {
    let tuple = KappaTuple::from_weights(&weight_tuple(&weight_rows)?).map_err(value_err)?;
    cone::is_member(&tuple, budget.unwrap_or(DEFAULT_BUDGET)).map_err(value_err)
}

/// All regular facets of Gamma_n(s).
#[pyfunction]
#[pyo3(signature = (n, s, budget=None))]
fn enumerate_facets(n: u32, s: u32, budget: Option<u64>) -> PyResult<Vec<Facet>> {
    let facets =
        cone::enumerate_facets(n, s, budget.unwrap_or(DEFAULT_BUDGET)).map_err(value_err)?;
    Ok(facets.iter().map(Facet::from).collect())
}

/// The basic extremal ray of a facet at a removable pair (j0, a0).
#[pyfunction]
fn basic_ray(n: u32, sets: Vec<Vec<u32>>, j0: usize, a0: u32) -> PyResult<PyRay> {
    let facet = FacetDescriptor::new(indices(n, sets)?).map_err(value_err)?;
    let ray = rays::basic_ray(&facet, j0, a0).map_err(value_err)?;
    Ok(PyRay::from(&ray))
}

/// Exact coordinates of an induction image, with the primitive weight
/// tuple when the image is nonzero.
type InductImage = (Vec<Vec<String>>, Option<Vec<Vec<u32>>>);

/// Induction of a product-cone point (given by weight tuples for the two
/// factors) through a facet. Returns (kappa strings, primitive weights or
/// None when the image is zero).
#[pyfunction]
fn induct(
    n: u32,
    sets: Vec<Vec<u32>>,
    left: Vec<Vec<i64>>,
    right: Vec<Vec<i64>>,
) -> PyResult<InductImage> {
    let facet = FacetDescriptor::new(indices(n, sets)?).map_err(value_err)?;
    let left = KappaTuple::from_weights(&weight_tuple(&left)?).map_err(value_err)?;
    let right = KappaTuple::from_weights(&weight_tuple(&right)?).map_err(value_err)?;
    let point = ProductPoint::new(left, right).map_err(value_err)?;
    let image = rays::induct(&facet, &point).map_err(value_err)?;
    let weights = if image.is_zero() {
        None
    } else {
        let ray = Ray::from_direction(&image, Provenance::Imported).map_err(value_err)?;
        Some(weight_lists(ray.weight_tuple()))
    };
    Ok((kappa_strings(&image), weights))
}

/// Whether the nonzero member spans an extremal ray.
#[pyfunction]
#[pyo3(signature = (weight_rows, budget=None))]
fn is_extremal(weight_rows: Vec<Vec<i64>>, budget: Option<u64>) -> PyResult<bool> {
    let tuple = KappaTuple::from_weights(&weight_tuple(&weight_rows)?).map_err(value_err)?;
    rays::is_extremal(&tuple, budget.unwrap_or(DEFAULT_BUDGET)).map_err(value_err)
}

/// Whether the invariant space on the ray of the given weight tuple stays
/// one-dimensional for all scalings up to `n_max`.
#[pyfunction]
#[pyo3(signature = (weight_rows, n_max=rays::DEFAULT_F_RAY_SCALINGS))]
fn is_f_ray(weight_rows: Vec<Vec<i64>>, n_max: u32) -> PyResult<bool> {
    let tuple = KappaTuple::from_weights(&weight_tuple(&weight_rows)?).map_err(value_err)?;
    let ray = Ray::from_direction(&tuple, Provenance::Imported).map_err(value_err)?;
    rays::is_f_ray(&ray, n_max).map_err(value_err)
}

/// The full extremal-ray list of Gamma_n(s), deterministically ordered.
#[pyfunction]
#[pyo3(signature = (n, s, budget=None))]
fn all_extremal_rays(n: u32, s: u32, budget: Option<u64>) -> PyResult<Vec<PyRay>> {
    let rays =
        rays::all_extremal_rays(n, s, budget.unwrap_or(DEFAULT_BUDGET)).map_err(value_err)?;
    Ok(rays.iter().map(PyRay::from).collect())
}

#[pymodule]
fn eigencone_python(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Facet>()?;
    m.add_class::<PyRay>()?;
    m.add_function(wrap_pyfunction!(codim, m)?)?;
    m.add_function(wrap_pyfunction!(partition_of, m)?)?;
    m.add_function(wrap_pyfunction!(permutation_w, m)?)?;
    m.add_function(wrap_pyfunction!(dual_index, m)?)?;
    m.add_function(wrap_pyfunction!(lr_multiply, m)?)?;
    m.add_function(wrap_pyfunction!(intersection_number, m)?)?;
    m.add_function(wrap_pyfunction!(kappa, m)?)?;
    m.add_function(wrap_pyfunction!(dual_weight, m)?)?;
    m.add_function(wrap_pyfunction!(fundamental_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(invariant_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(is_member, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_facets, m)?)?;
    m.add_function(wrap_pyfunction!(basic_ray, m)?)?;
    m.add_function(wrap_pyfunction!(induct, m)?)?;
    m.add_function(wrap_pyfunction!(is_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(is_f_ray, m)?)?;
    m.add_function(wrap_pyfunction!(all_extremal_rays, m)?)?;
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    Ok(())
}
