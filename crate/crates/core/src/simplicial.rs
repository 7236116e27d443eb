//! Finite simplicial complexes with exact face enumeration.
//!
//! Faces are sorted vertex-index sets. The empty complex `{∅}` is valid and
//! has f-vector `(1)`; its h-polynomial is the constant 1.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::polynomials::{gamma_expand, GammaVector, IntPolynomial};
use crate::{Error, Result};

/// A face: strictly increasing vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<u16>);

impl Face {
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn from_sorted(v: Vec<u16>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Face(v)
    }

    pub fn from_unsorted(mut v: Vec<u16>) -> Self {
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[u16] {
        &self.0
    }

    pub fn contains(&self, v: u16) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Face(out)
    }

    pub fn without(&self, v: u16) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    pub fn with(&self, v: u16) -> Face {
        let mut out = self.0.clone();
        match out.binary_search(&v) {
            Ok(_) => {}
            Err(pos) => out.insert(pos, v),
        }
        Face(out)
    }

    /// All subfaces with one vertex removed.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Face(v)
        })
    }

    /// Every subset, the empty face included.
    pub fn subsets(&self) -> Vec<Face> {
        let n = self.0.len();
        assert!(n < 32, "face too large to expand");
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u32..(1 << n) {
            let mut v = Vec::with_capacity(mask.count_ones() as usize);
            for (i, &x) in self.0.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    v.push(x);
                }
            }
            out.push(Face(v));
        }
        out
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// f-vector: `counts[i]` is the number of faces of dimension `i - 1`, so
/// `counts[0] = 1` for the empty face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.0.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.0.iter().map(|c| c.to_string()).collect()
    }
}

#[derive(Clone)]
pub struct SimplicialComplex {
    vertex_labels: Vec<String>,
    facets: Vec<Face>,
}

#[derive(Serialize, Deserialize)]
struct ComplexWire {
    vertices: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplicialComplex({} vertices, {} facets, dim {})",
            self.vertex_labels.len(),
            self.facets.len(),
            self.dim()
        )
    }
}

impl SimplicialComplex {
    /// Build from facets given as label sets. Duplicates are merged and
    /// non-maximal inputs dropped; the facet list must be nonempty.
    pub fn from_labeled_facets(facets: &[Vec<String>]) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let mut labels: Vec<String> = facets.iter().flatten().cloned().collect();
        labels.sort();
        labels.dedup();
        if labels.len() > u16::MAX as usize {
            return Err(Error::ResourceLimit {
                what: "vertex count",
                requested: labels.len(),
                limit: u16::MAX as usize,
            });
        }
        let index: HashMap<&str, u16> = labels
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i as u16))
            .collect();
        let faces: Vec<Face> = facets
            .iter()
            .map(|f| Face::from_unsorted(f.iter().map(|v| index[v.as_str()]).collect()))
            .collect();
        Ok(Self::from_faces_keep_maximal(labels, faces))
    }

    /// Build from facets given as vertex indices into `labels`.
    pub fn from_index_facets(labels: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let n = labels.len();
        let mut faces = Vec::with_capacity(facets.len());
        for f in &facets {
            for &v in f {
                if v >= n {
                    return Err(Error::InvalidInput(format!(
                        "facet vertex index {v} out of range (have {n} vertices)"
                    )));
                }
            }
            faces.push(Face::from_unsorted(f.iter().map(|&v| v as u16).collect()));
        }
        Ok(Self::from_faces_keep_maximal(labels, faces))
    }

    fn from_faces_keep_maximal(labels: Vec<String>, mut faces: Vec<Face>) -> Self {
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut maximal: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !maximal.iter().any(|m| f.is_subset_of(m)) {
                maximal.push(f);
            }
        }
        maximal.sort();
        SimplicialComplex { vertex_labels: labels, facets: maximal }
    }

    /// Construct from faces already known to be pairwise incomparable.
    pub(crate) fn from_maximal_faces_unchecked(labels: Vec<String>, mut facets: Vec<Face>) -> Self {
        facets.sort();
        facets.dedup();
        SimplicialComplex { vertex_labels: labels, facets }
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Dimension; `-1` for the empty complex `{∅}`.
    pub fn dim(&self) -> i32 {
        self.facets
            .iter()
            .map(|f| f.len() as i32 - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.len() as i32 - 1 == d)
    }

    /// Every face exactly once, sorted by (size, vertex list).
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        for facet in &self.facets {
            for sub in facet.subsets() {
                seen.insert(sub);
            }
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn f_vector(&self) -> FVector {
        let d = (self.dim() + 1) as usize;
        let mut counts = vec![0u64; d + 1];
        for face in self.faces() {
            counts[face.len()] += 1;
        }
        FVector(counts)
    }

    /// `h(t) = (1-t)^d f(t/(1-t))` with `d = dim + 1`, computed exactly as
    /// `sum_i f_i t^i (1-t)^(d-i)`.
    pub fn h_polynomial(&self) -> IntPolynomial {
        h_from_f(&self.f_vector())
    }

    pub fn gamma(&self) -> Result<GammaVector> {
        let d = (self.dim() + 1) as usize;
        gamma_expand(&self.h_polynomial(), d)
    }

    /// Reduced Euler characteristic `-1 + f_1 - f_2 + ...` (the empty face
    /// counts with sign -1).
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let f = self.f_vector();
        let mut acc: i64 = 0;
        for (i, &c) in f.0.iter().enumerate() {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            acc += sign * c as i64;
        }
        acc
    }

    /// The subcomplex generated by the ridges lying in exactly one facet.
    ///
    /// Requires a pure complex in which every ridge lies in one or two
    /// facets. A complex without boundary ridges yields `{∅}`.
    pub fn boundary_of_ball(&self) -> Result<SimplicialComplex> {
        if !self.is_pure() {
            let smallest = self.facets.iter().map(|f| f.len()).min().unwrap_or(0);
            let largest = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
            return Err(Error::NotPure { smallest, largest });
        }
        let mut ridge_count: HashMap<Face, usize> = HashMap::new();
        for facet in &self.facets {
            for ridge in facet.boundary_faces() {
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        let mut boundary: Vec<Face> = Vec::new();
        for (ridge, count) in ridge_count {
            if count > 2 {
                return Err(Error::NotManifoldLike {
                    ridge: self.face_label(&ridge),
                    count,
                });
            }
            if count == 1 {
                boundary.push(ridge);
            }
        }
        if boundary.is_empty() {
            // No boundary: the empty complex {∅}.
            return Ok(SimplicialComplex::from_maximal_faces_unchecked(
                self.vertex_labels.clone(),
                vec![Face::empty()],
            ));
        }
        // Ridges all have the same cardinality, so they are incomparable.
        Ok(SimplicialComplex::from_maximal_faces_unchecked(
            self.vertex_labels.clone(),
            boundary,
        ))
    }

    /// True iff every facet has pairwise distinctly colored vertices.
    pub fn is_balanced_coloring(&self, colors: &[u32]) -> bool {
        if colors.len() != self.vertex_labels.len() {
            return false;
        }
        self.facets.iter().all(|facet| {
            let mut seen: Vec<u32> = facet.vertices().iter().map(|&v| colors[v as usize]).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn face_label(&self, face: &Face) -> String {
        if face.is_empty() {
            return "{}".into();
        }
        let names: Vec<&str> = face
            .vertices()
            .iter()
            .map(|&v| {
                self.vertex_labels
                    .get(v as usize)
                    .map_or("?", |s| s.as_str())
            })
            .collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(f))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertex_labels,
            "facets": self
                .facets
                .iter()
                .map(|f| f.vertices().iter().map(|&v| v as usize).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let wire: ComplexWire = serde_json::from_value(value.clone())?;
        Self::from_index_facets(wire.vertices, wire.facets)
    }
}

/// The standard binomial transform from face counts to the h-polynomial.
pub fn h_from_f(f: &FVector) -> IntPolynomial {
    let d = f.0.len() - 1;
    let one_minus_t = IntPolynomial::from(vec![1, -1]);
    let mut acc = IntPolynomial::zero();
    for (i, &fi) in f.0.iter().enumerate() {
        if fi == 0 {
            continue;
        }
        let term = one_minus_t.pow(d - i).scale(&BigInt::from(fi)).shift(i);
        acc = acc.add(&term);
    }
    acc
}

/// Re-expand an h-polynomial to face counts (inverse of `h_from_f`).
pub fn f_from_h(h: &IntPolynomial, d: usize) -> Vec<BigInt> {
    // f_i = sum_k h_k * C(d - k, i - k)
    let mut out = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut acc = BigInt::from(0);
        for k in 0..=i.min(h.degree()) {
            acc += h.coeff(k) * crate::polynomials::binomial(d - k, i - k);
        }
        out.push(acc);
    }
    out
}

/// Named generators for the test corpus.
pub mod generators {
    use super::*;

    fn number_labels(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    /// The full simplex `2^[n]`.
    pub fn simplex(n: usize) -> Result<SimplicialComplex> {
        if n == 0 {
            return Err(Error::InvalidInput("generators need n >= 1".into()));
        }
        let labels = number_labels("", n);
        let facet = Face::from_sorted((0..n as u16).collect());
        Ok(SimplicialComplex::from_maximal_faces_unchecked(labels, vec![facet]))
    }

    /// The boundary `∂2^[n]`; for n = 1 this is the empty complex `{∅}`.
    pub fn simplex_boundary(n: usize) -> Result<SimplicialComplex> {
        if n == 0 {
            return Err(Error::InvalidInput("generators need n >= 1".into()));
        }
        let labels = number_labels("", n);
        let full = Face::from_sorted((0..n as u16).collect());
        let facets: Vec<Face> = if n == 1 {
            vec![Face::empty()]
        } else {
            full.boundary_faces().collect()
        };
        Ok(SimplicialComplex::from_maximal_faces_unchecked(labels, facets))
    }

    /// Boundary of the n-dimensional cross-polytope: vertices `±1..±n`,
    /// facets all sign selections. Its h-vector is the binomial row `C(n, ·)`.
    pub fn cross_polytope_boundary(n: usize) -> Result<SimplicialComplex> {
        if n == 0 {
            return Err(Error::InvalidInput("generators need n >= 1".into()));
        }
        // Vertex 2i is "+(i+1)", vertex 2i + 1 is "-(i+1)".
        let mut labels = Vec::with_capacity(2 * n);
        for i in 1..=n {
            labels.push(format!("+{i}"));
            labels.push(format!("-{i}"));
        }
        let mut facets = Vec::with_capacity(1 << n);
        for mask in 0u32..(1 << n) {
            let mut v = Vec::with_capacity(n);
            for i in 0..n {
                let sign = (mask >> i) & 1;
                v.push((2 * i) as u16 + sign as u16);
            }
            facets.push(Face::from_sorted(v));
        }
        Ok(SimplicialComplex::from_maximal_faces_unchecked(labels, facets))
    }
}
