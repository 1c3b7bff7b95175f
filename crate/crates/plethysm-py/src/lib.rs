//! Python extension module exposing the plethysm engine.
//!
//! Mirrors the Rust API: `Partition` (immutable, hashable, constructible
//! from a literal string or a list of parts), `Engine` (expansion,
//! coefficient, and comparison queries plus the verification sweeps), and
//! module-level functions for the closed-form extreme constituents. Big
//! coefficients cross the boundary as Python ints; every library error
//! surfaces as `ValueError`.

use std::path::PathBuf;
use std::sync::Mutex;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use plethysm::verify::ProductKey;

fn verr(e: plethysm::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Partition", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition {
    inner: plethysm::Partition,
}

#[pymethods]
impl PyPartition {
    /// Accepts a literal like "3^3,2,1" or a weakly decreasing list of parts.
    #[new]
    fn new(spec: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = if let Ok(literal) = spec.extract::<String>() {
            literal.parse().map_err(verr)?
        } else {
            let parts: Vec<u64> = spec.extract()?;
            plethysm::Partition::new(parts).map_err(verr)?
        };
        Ok(PyPartition { inner })
    }

    fn parts(&self) -> Vec<u64> {
        self.inner.parts().to_vec()
    }

    fn size(&self) -> u64 {
        self.inner.size()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn conjugate(&self) -> Self {
        PyPartition {
            inner: self.inner.conjugate(),
        }
    }

    /// Dominance comparison; both partitions must have the same size.
    fn dominates(&self, other: &Self) -> PyResult<bool> {
        self.inner.dominates(&other.inner).map_err(verr)
    }

    /// Row-wise sum of parts.
    fn add(&self, other: &Self) -> Self {
        PyPartition {
            inner: self.inner.add(&other.inner),
        }
    }

    /// Multiset union of parts.
    fn union(&self, other: &Self) -> Self {
        PyPartition {
            inner: self.inner.union(&other.inner),
        }
    }

    /// Identity for even m, conjugation for odd m.
    fn m_twist(&self, m: u64) -> PyResult<Self> {
        Ok(PyPartition {
            inner: self.inner.m_twist(m).map_err(verr)?,
        })
    }

    /// The doubled shape 2[α]; parts must be pairwise distinct.
    fn double_bracket(&self) -> PyResult<Self> {
        Ok(PyPartition {
            inner: self.inner.double_bracket().map_err(verr)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition(\"{}\")", self.inner)
    }
}

#[pyclass(name = "Engine")]
struct PyEngine {
    inner: Mutex<plethysm::Engine>,
}

impl PyEngine {
    fn with<T>(&self, f: impl FnOnce(&mut plethysm::Engine) -> Result<T, plethysm::Error>) -> PyResult<T> {
        let mut engine = self.inner.lock().expect("engine lock");
        f(&mut engine).map_err(verr)
    }
}

#[pymethods]
impl PyEngine {
    #[new]
    #[pyo3(signature = (cache=None))]
    fn new(cache: Option<PathBuf>) -> PyResult<Self> {
        let inner = match cache {
            Some(path) => plethysm::Engine::with_cache_file(path).map_err(verr)?,
            None => plethysm::Engine::new(),
        };
        Ok(PyEngine {
            inner: Mutex::new(inner),
        })
    }

    /// Full Schur expansion of s_ν∘s_μ as (partition, coefficient) pairs,
    /// leading term first.
    fn plethysm(&self, nu: PyPartition, mu: PyPartition) -> PyResult<Vec<(PyPartition, BigInt)>> {
        let expansion = self.with(|e| e.plethysm(&nu.inner, &mu.inner))?;
        Ok(expansion
            .terms()
            .iter()
            .rev()
            .map(|(key, coeff)| (PyPartition { inner: key.clone() }, coeff.clone()))
            .collect())
    }

    /// Single coefficient of s_α in s_ν∘s_μ.
    fn coefficient(
        &self,
        nu: PyPartition,
        mu: PyPartition,
        alpha: PyPartition,
    ) -> PyResult<BigInt> {
        self.with(|e| e.coefficient(&nu.inner, &mu.inner, &alpha.inner))
    }

    fn is_homogeneous(&self, nu: PyPartition, mu: PyPartition) -> PyResult<bool> {
        self.with(|e| plethysm::is_homogeneous(e, &nu.inner, &mu.inner))
    }

    fn is_indecomposable(&self, nu: PyPartition, mu: PyPartition) -> PyResult<bool> {
        self.with(|e| plethysm::is_indecomposable(e, &nu.inner, &mu.inner))
    }

    /// Whether s_ν1∘s_μ1 = s_ν2∘s_μ2, decided through the staged comparison.
    fn products_equal(
        &self,
        nu1: PyPartition,
        mu1: PyPartition,
        nu2: PyPartition,
        mu2: PyPartition,
    ) -> PyResult<bool> {
        let a = ProductKey::new(nu1.inner, mu1.inner).map_err(verr)?;
        let b = ProductKey::new(nu2.inner, mu2.inner).map_err(verr)?;
        self.with(|e| plethysm::products_equal(e, &a, &b))
    }

    fn cached_products(&self) -> usize {
        self.inner.lock().expect("engine lock").cached_products()
    }

    /// Double-hook sweep for n ≤ max_n; returns the number of products checked.
    fn verify_square(&self, max_n: u64) -> PyResult<u64> {
        self.with(|e| plethysm::verify_square_formula(e, max_n).map(|r| r.products_checked))
    }

    /// Homogeneity sweep up to max_degree; returns the number of products checked.
    fn verify_homogeneity(&self, max_degree: u64) -> PyResult<usize> {
        self.with(|e| plethysm::verify_homogeneity_classification(e, max_degree).map(|r| r.records.len()))
    }

    /// Coincidence sweep up to max_degree; returns the number of classes found.
    fn verify_coincidences(&self, max_degree: u64) -> PyResult<usize> {
        self.with(|e| plethysm::verify_unique_factorization(e, max_degree).map(|r| r.classes.len()))
    }

    /// Two-algorithm agreement up to max_degree; returns the number of products checked.
    fn cross_check(&self, max_degree: u64) -> PyResult<u64> {
        self.with(|e| plethysm::cross_check_expansions(e, max_degree).map(|r| r.products_checked))
    }
}

/// Lexicographically greatest constituent of s_ν∘s_μ, in closed form.
#[pyfunction]
fn max_lex(nu: PyPartition, mu: PyPartition) -> PyResult<PyPartition> {
    Ok(PyPartition {
        inner: plethysm::max_lex(&nu.inner, &mu.inner).map_err(verr)?,
    })
}

/// Transpose-lexicographically greatest constituent of s_ν∘s_μ.
#[pyfunction]
fn max_translex(nu: PyPartition, mu: PyPartition) -> PyResult<PyPartition> {
    Ok(PyPartition {
        inner: plethysm::max_translex(&nu.inner, &mu.inner).map_err(verr)?,
    })
}

/// Dominance-maximal constituents of s_ν∘s_μ with multiplicities, largest
/// key first. Note the inner shape comes first, matching the Rust API.
#[pyfunction]
fn maximal_pleth_weights(
    mu: PyPartition,
    nu: PyPartition,
) -> PyResult<Vec<(PyPartition, BigInt)>> {
    Ok(plethysm::maximal_pleth_weights(&mu.inner, &nu.inner)
        .map_err(verr)?
        .into_iter()
        .rev()
        .map(|(key, mult)| (PyPartition { inner: key }, mult))
        .collect())
}

/// All partitions of n in the sweep order (greatest first).
#[pyfunction]
#[pyo3(signature = (n, distinct=false))]
fn partitions(n: u64, distinct: bool) -> Vec<PyPartition> {
    plethysm::enumerate_partitions(n, distinct)
        .into_iter()
        .map(|inner| PyPartition { inner })
        .collect()
}

/// Number of semistandard tableaux of the shape with entries ≤ max_entry.
#[pyfunction]
fn count_ssyt(shape: PyPartition, max_entry: u64) -> usize {
    plethysm::tableau::enumerate_ssyt(&shape.inner, max_entry).len()
}

/// Number of plethystic tableaux of shape μ^ν with entries ≤ max_entry.
#[pyfunction]
fn count_plethystic(mu: PyPartition, nu: PyPartition, max_entry: u64) -> usize {
    plethysm::plethystic::enumerate_plethystic(&mu.inner, &nu.inner, max_entry).len()
}

#[pymodule]
fn plethysm_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyEngine>()?;
    m.add_function(wrap_pyfunction!(max_lex, m)?)?;
    m.add_function(wrap_pyfunction!(max_translex, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_pleth_weights, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(count_ssyt, m)?)?;
    m.add_function(wrap_pyfunction!(count_plethystic, m)?)?;
    Ok(())
}
