//! h- and gamma-vectors of the interval subdivision straight from a
//! symmetric h-vector, via the symmetric-family decomposition
//! h(Int, t) = sum_j h_j * (symmetric family at (n+1, j+1)), cross-checked
//! against the matrix transform and the explicit construction.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::eulerian::BPlusTable;
use crate::interval::{apply_matrix, h_transform_matrix, IntervalSubdivision};
use crate::polynomials::{gamma_expand, GammaVector, IntPolynomial};
use crate::simplicial::SimplicialComplex;
use crate::{Error, Result};

/// A symmetric h-vector (h_0, ..., h_n) with h_0 = 1. Negative entries are
/// legal for the linear decomposition; `is_nonnegative` records whether the
/// gamma-nonnegativity conclusions apply.
#[derive(Clone, Debug)]
pub struct SymmetricH {
    entries: Vec<BigInt>,
}

impl SymmetricH {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() || entries[0] != BigInt::from(1) {
            return Err(Error::InvalidInput(format!(
                "an h-vector starts with 1: {entries:?}"
            )));
        }
        let n = entries.len() - 1;
        for j in 0..=n / 2 {
            if entries[j] != entries[n - j] {
                return Err(Error::NotSymmetric {
                    reference: n,
                    index: j,
                    co_index: n - j,
                    left: entries[j].clone(),
                    right: entries[n - j].clone(),
                });
            }
        }
        Ok(SymmetricH { entries })
    }

    pub fn from_complex(c: &SimplicialComplex) -> Result<Self> {
        let d = (c.dim() + 1) as usize;
        let h = c.h_polynomial();
        Self::new((0..=d).map(|k| h.coeff(k)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Degree parameter n (the h-vector has n+1 entries).
    pub fn order(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|h| !h.is_negative())
    }
}

/// h-polynomial of the interval subdivision from the symmetric h-vector:
/// sum over j <= n/2 of h_j times the symmetric family polynomial at
/// (n+1, j+1). Agreement with the matrix transform is asserted.
pub fn h_int_from_h(h: &SymmetricH) -> Result<IntPolynomial> {
    let n = h.order();
    let table = BPlusTable::up_to(n + 1);
    let mut acc = IntPolynomial::zero();
    for j in 0..=n / 2 {
        if h.entries[j] == BigInt::from(0) {
            continue;
        }
        let (poly, reference) = table.symmetric(n + 1, j as i32 + 1)?;
        debug_assert_eq!(reference, n);
        acc = acc.add(&poly.scale(&h.entries[j]));
    }
    let by_matrix = apply_matrix(&h_transform_matrix(n)?, &h.entries);
    let acc_vec: Vec<BigInt> = (0..=n).map(|k| acc.coeff(k)).collect();
    assert_eq!(acc_vec, by_matrix, "decomposition and matrix transform disagree");
    Ok(acc)
}

/// Gamma vector of the interval subdivision: the expansion of
/// `h_int_from_h` at reference degree n, which equals the entrywise sum
/// of h_j times the family gamma vectors (asserted).
pub fn gamma_int(h: &SymmetricH) -> Result<GammaVector> {
    let n = h.order();
    let poly = h_int_from_h(h)?;
    let gamma = gamma_expand(&poly, n)?;
    let table = BPlusTable::up_to(n + 1);
    let mut acc = GammaVector::new(n, vec![]);
    for j in 0..=n / 2 {
        if h.entries[j] == BigInt::from(0) {
            continue;
        }
        let g = table.gamma(n + 1, j as i32 + 1, crate::eulerian::Family::Symmetric)?;
        let scaled = GammaVector {
            ref_degree: g.ref_degree,
            entries: g.entries.iter().map(|e| e * &h.entries[j]).collect(),
        };
        acc = acc.add(&scaled)?;
    }
    assert_eq!(gamma, acc, "expansion and family sum disagree");
    Ok(gamma)
}

/// End-to-end oracle: construct Int(Δ) and expand its h-polynomial; equals
/// `gamma_int` of the h-vector of Δ (asserted).
pub fn gamma_int_geometric(base: &SimplicialComplex) -> Result<GammaVector> {
    let subdivision = IntervalSubdivision::build(base)?;
    let geometric = subdivision.complex().gamma()?;
    let h = SymmetricH::from_complex(base)?;
    let formulaic = gamma_int(&h)?;
    assert_eq!(geometric, formulaic, "geometry and decomposition disagree");
    Ok(geometric)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::generators;

    fn h(v: &[i64]) -> SymmetricH {
        SymmetricH::new(v.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn sphere_one_dimensional() {
        let s = h(&[1, 1, 1]);
        assert_eq!(h_int_from_h(&s).unwrap(), IntPolynomial::from(vec![1, 10, 1]));
        assert_eq!(
            gamma_int(&s).unwrap().entries,
            vec![BigInt::from(1), BigInt::from(8)]
        );
    }

    #[test]
    fn point_is_fixed() {
        let s = h(&[1]);
        assert_eq!(h_int_from_h(&s).unwrap(), IntPolynomial::one());
        assert_eq!(gamma_int(&s).unwrap().entries, vec![BigInt::from(1)]);
    }

    #[test]
    fn worked_degree_five_row() {
        // coefficient of t in h(Int) for h = (1, h1, h2, h2, h1, 1)
        for (h1, h2) in [(0i64, 0i64), (1, 1), (2, 5), (7, 3)] {
            let s = h(&[1, h1, h2, h2, h1, 1]);
            let p = h_int_from_h(&s).unwrap();
            assert_eq!(p.coeff(1), BigInt::from(237 + 192 * h1 + 168 * h2));
            assert_eq!(p.coeff(2), BigInt::from(1682 + 1728 * h1 + 1752 * h2));
            assert!(p.is_symmetric(5).unwrap());
        }
    }

    #[test]
    fn octahedron_table_sum() {
        let s = h(&[1, 3, 3, 1]);
        let g = gamma_int(&s).unwrap();
        // (1,20) + 3*(0,24)
        assert_eq!(g.entries, vec![BigInt::from(1), BigInt::from(92)]);
    }

    #[test]
    fn large_symmetric_example() {
        let s = h(&[1, 5, 10, 10, 5, 1]);
        let g = gamma_int(&s).unwrap();
        assert_eq!(
            g.entries,
            vec![BigInt::from(1), BigInt::from(2872), BigInt::from(19216)]
        );
    }

    #[test]
    fn rejects_asymmetric_and_headless() {
        assert!(SymmetricH::new(vec![BigInt::from(1), BigInt::from(2)]).is_err());
        assert!(SymmetricH::new(vec![BigInt::from(2)]).is_err());
        // negative but symmetric entries are allowed, flagged non-nonnegative
        let s = SymmetricH::new(vec![
            BigInt::from(1),
            BigInt::from(-1),
            BigInt::from(1),
        ])
        .unwrap();
        assert!(!s.is_nonnegative());
    }

    #[test]
    fn geometry_matches_formula() {
        for base in [
            generators::simplex_boundary(3).unwrap(),
            generators::simplex_boundary(4).unwrap(),
            generators::cross_polytope_boundary(2).unwrap(),
            generators::cross_polytope_boundary(3).unwrap(),
        ] {
            let g = gamma_int_geometric(&base).unwrap();
            assert!(g.is_nonnegative());
        }
        // two points: h = (1,1), subdivision is again two points
        let two = generators::simplex_boundary(2).unwrap();
        let g = gamma_int_geometric(&two).unwrap();
        assert_eq!(g.entries, vec![BigInt::from(1)]);
        assert_eq!(g.ref_degree, 1);
    }
}
