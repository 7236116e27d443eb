//! Python bindings for the core types and operations.

// the pyfunction macros expand to identity error conversions
#![allow(clippy::useless_conversion)]

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ivgamma_core::balanced_ffk;
use ivgamma_core::bounds::Bounds;
use ivgamma_core::eulerian::{BPlusTable, Family};
use ivgamma_core::gamma_main::{self, SymmetricH};
use ivgamma_core::interval::IntervalSubdivision;
use ivgamma_core::local_h as local_h_mod;
use ivgamma_core::polynomials::{gamma_expand as expand, GammaVector};
use ivgamma_core::signed_perms::{Interpretation, SignedPerm, StatTables};
use ivgamma_core::simplicial::SimplicialComplex;

fn err(e: ivgamma_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn gamma_pair(g: &GammaVector) -> (usize, Vec<BigInt>) {
    (g.ref_degree, g.entries.clone())
}

/// A simplicial complex given by its facets (lists of vertex indices).
#[pyclass(name = "Complex")]
struct PyComplex {
    inner: SimplicialComplex,
}

#[pymethods]
impl PyComplex {
    #[new]
    fn new(facets: Vec<Vec<usize>>) -> PyResult<Self> {
        let n = facets.iter().flatten().copied().max().map_or(0, |m| m + 1);
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let inner = SimplicialComplex::from_index_facets(labels, facets).map_err(err)?;
        Ok(PyComplex { inner })
    }

    #[staticmethod]
    fn simplex(n: usize) -> PyResult<Self> {
        Ok(PyComplex { inner: ivgamma_core::simplicial::generators::simplex(n).map_err(err)? })
    }

    #[staticmethod]
    fn simplex_boundary(n: usize) -> PyResult<Self> {
        Ok(PyComplex {
            inner: ivgamma_core::simplicial::generators::simplex_boundary(n).map_err(err)?,
        })
    }

    #[staticmethod]
    fn cross_polytope_boundary(n: usize) -> PyResult<Self> {
        Ok(PyComplex {
            inner: ivgamma_core::simplicial::generators::cross_polytope_boundary(n)
                .map_err(err)?,
        })
    }

    fn dim(&self) -> i32 {
        self.inner.dim()
    }

    fn f_vector(&self) -> Vec<u64> {
        self.inner.f_vector().0
    }

    fn h_vector(&self) -> Vec<BigInt> {
        self.inner.h_polynomial().coeffs().to_vec()
    }

    /// (ref_degree, entries); raises when the h-polynomial is asymmetric.
    fn gamma(&self) -> PyResult<(usize, Vec<BigInt>)> {
        Ok(gamma_pair(&self.inner.gamma().map_err(err)?))
    }

    fn boundary(&self) -> PyResult<PyComplex> {
        Ok(PyComplex { inner: self.inner.boundary_of_ball().map_err(err)? })
    }

    /// The interval subdivision as a new complex.
    fn interval_subdivision(&self) -> PyResult<PyComplex> {
        let s = IntervalSubdivision::build(&self.inner).map_err(err)?;
        Ok(PyComplex { inner: s.complex().clone() })
    }

    fn is_balanced_coloring(&self, colors: Vec<u32>) -> bool {
        self.inner.is_balanced_coloring(&colors)
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }
}

/// Gamma coordinates of a palindromic polynomial about `ref_degree`.
#[pyfunction]
fn gamma_expand(coeffs: Vec<BigInt>, ref_degree: usize) -> PyResult<Vec<BigInt>> {
    let p = ivgamma_core::polynomials::IntPolynomial::from_coeffs(coeffs);
    Ok(expand(&p, ref_degree).map_err(err)?.entries)
}

/// Reassemble the polynomial from gamma coordinates.
#[pyfunction]
fn gamma_contract(entries: Vec<BigInt>, ref_degree: usize) -> Vec<BigInt> {
    GammaVector::new(ref_degree, entries).contract().coeffs().to_vec()
}

/// Descent polynomial of the order-n hyperoctahedral group.
#[pyfunction]
fn type_b_eulerian(n: usize) -> Vec<BigInt> {
    ivgamma_core::eulerian::classical_type_b_eulerian(n).coeffs().to_vec()
}

/// First-letter descent polynomial (positive last letter), by recurrence.
#[pyfunction]
fn b_plus_poly(n: usize, j: i32) -> PyResult<Vec<BigInt>> {
    Ok(BPlusTable::up_to(n).b_plus(n, j).map_err(err)?.coeffs().to_vec())
}

/// Symmetric or tilde family polynomial with its reference degree.
#[pyfunction]
fn family_poly(n: usize, j: i32, family: &str) -> PyResult<(Vec<BigInt>, usize)> {
    let table = BPlusTable::up_to(n);
    let (p, r) = match family {
        "symmetric" => table.symmetric(n, j).map_err(err)?,
        "tilde" => table.tilde(n, j).map_err(err)?,
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    };
    Ok((p.coeffs().to_vec(), r))
}

/// Gamma vector of a family polynomial.
#[pyfunction]
fn family_gamma(n: usize, j: i32, family: &str) -> PyResult<(usize, Vec<BigInt>)> {
    let fam = match family {
        "symmetric" => Family::Symmetric,
        "tilde" => Family::Tilde,
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    };
    Ok(gamma_pair(&BPlusTable::up_to(n).gamma(n, j, fam).map_err(err)?))
}

/// h-vector of the interval subdivision from a symmetric h-vector.
#[pyfunction]
fn h_int_from_h(h: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
    let sym = SymmetricH::new(h).map_err(err)?;
    Ok(gamma_main::h_int_from_h(&sym).map_err(err)?.coeffs().to_vec())
}

/// Gamma vector of the interval subdivision from a symmetric h-vector.
#[pyfunction]
fn gamma_int(h: Vec<BigInt>) -> PyResult<(usize, Vec<BigInt>)> {
    let sym = SymmetricH::new(h).map_err(err)?;
    Ok(gamma_pair(&gamma_main::gamma_int(&sym).map_err(err)?))
}

/// Local h-polynomial of the subdivided n-simplex.
/// route: "definition", "derangement" or "excedance".
#[pyfunction]
#[pyo3(signature = (n, route = "derangement"))]
fn local_h(n: usize, route: &str) -> PyResult<Vec<BigInt>> {
    let p = match route {
        "definition" => {
            local_h_mod::local_h_definition(n, local_h_mod::DEFAULT_CONSTRUCTION_BOUND).map_err(err)?
        }
        "derangement" => local_h_mod::local_h_derangement(n).map_err(err)?,
        "excedance" => {
            local_h_mod::local_h_excedance(n, &Interpretation::CALIBRATED, &Bounds::default())
                .map_err(err)?
        }
        other => return Err(PyValueError::new_err(format!("unknown route {other:?}"))),
    };
    Ok(p.coeffs().to_vec())
}

/// Local gamma vector of the subdivided n-simplex.
#[pyfunction]
fn local_gamma(n: usize) -> PyResult<(usize, Vec<BigInt>)> {
    Ok(gamma_pair(
        &local_h_mod::local_gamma(n, local_h_mod::DEFAULT_CONSTRUCTION_BOUND).map_err(err)?,
    ))
}

/// Descent statistics of one signed permutation window.
#[pyfunction]
fn descents(window: Vec<i32>) -> PyResult<(usize, Vec<usize>)> {
    Ok(SignedPerm::new(window).map_err(err)?.des_b())
}

/// Slide segments of one window (the sentinel prints as -(n+1)).
#[pyfunction]
fn slides(window: Vec<i32>) -> PyResult<Vec<Vec<i32>>> {
    Ok(SignedPerm::new(window).map_err(err)?.slides().slides)
}

/// Descent-by-first-letter table; rows ordered -n..-1, 1..n.
#[pyfunction]
fn b_plus_table(n: usize) -> PyResult<Vec<Vec<u64>>> {
    Ok(StatTables::compute(n, &Bounds::default()).map_err(err)?.b_plus_jk)
}

/// Diagonal slide counts (s descents, s+1 slides) for the two first-sign
/// classes.
#[pyfunction]
fn slide_diagonals(n: usize) -> PyResult<(Vec<u64>, Vec<u64>)> {
    let t = StatTables::compute(n, &Bounds::default()).map_err(err)?;
    Ok((t.b_pp_diag(), t.b_mp_diag()))
}

/// Is `f` the face vector of a k-colorable complex?
#[pyfunction]
fn is_k_ffk(f: Vec<BigInt>, k: usize) -> bool {
    balanced_ffk::is_k_ffk(&f, k)
}

/// f-vector of the decorated-permutation complex (equals the type-B gamma
/// vector).
#[pyfunction]
#[pyo3(signature = (n, validate = false))]
fn dec_f_vector(n: usize, validate: bool) -> PyResult<Vec<u64>> {
    let (complex, _) = balanced_ffk::dec_complex(n, validate).map_err(err)?;
    Ok(complex.f_vector().0)
}

#[pymodule]
fn ivgamma(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(gamma_expand, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_contract, m)?)?;
    m.add_function(wrap_pyfunction!(type_b_eulerian, m)?)?;
    m.add_function(wrap_pyfunction!(b_plus_poly, m)?)?;
    m.add_function(wrap_pyfunction!(family_poly, m)?)?;
    m.add_function(wrap_pyfunction!(family_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(h_int_from_h, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_int, m)?)?;
    m.add_function(wrap_pyfunction!(local_h, m)?)?;
    m.add_function(wrap_pyfunction!(local_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(descents, m)?)?;
    m.add_function(wrap_pyfunction!(slides, m)?)?;
    m.add_function(wrap_pyfunction!(b_plus_table, m)?)?;
    m.add_function(wrap_pyfunction!(slide_diagonals, m)?)?;
    m.add_function(wrap_pyfunction!(is_k_ffk, m)?)?;
    m.add_function(wrap_pyfunction!(dec_f_vector, m)?)?;
    Ok(())
}
