//! The interval subdivision Int(Δ): the chain complex of the poset of
//! intervals [A, B] with ∅ ≠ A ⊆ B ∈ Δ, ordered by [A,B] ≤ [A',B'] iff
//! A' ⊆ A ⊆ B ⊆ B'. Also the two closed-form transforms carrying f(Δ) and
//! h(Δ) to f(Int Δ) and h(Int Δ).

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::eulerian::BPlusTable;
use crate::polynomials::{binomial, IntPolynomial};
use crate::report::IdentityRecord;
use crate::simplicial::{Face, SimplicialComplex};
use crate::{Error, Result};

/// One vertex of the subdivision: a pair of base faces with ∅ ≠ A ⊆ B.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    pub lower: Face,
    pub upper: Face,
}

pub struct IntervalSubdivision {
    base: SimplicialComplex,
    /// Interval per subdivision vertex, in canonical order
    /// (|A|, A lexicographic, B lexicographic).
    intervals: Vec<Interval>,
    complex: SimplicialComplex,
}

impl IntervalSubdivision {
    pub fn build(base: &SimplicialComplex) -> Result<Self> {
        let base_faces = base.faces();
        if base_faces.iter().all(|f| f.is_empty()) {
            return Err(Error::NoIntervals);
        }

        // All intervals in canonical order.
        let mut intervals: Vec<Interval> = Vec::new();
        for upper in base_faces.iter().filter(|f| !f.is_empty()) {
            for lower in upper.subsets() {
                if lower.is_empty() {
                    continue;
                }
                intervals.push(Interval { lower, upper: upper.clone() });
            }
        }
        intervals.sort_by(|a, b| {
            a.lower
                .len()
                .cmp(&b.lower.len())
                .then_with(|| a.lower.cmp(&b.lower))
                .then_with(|| a.upper.cmp(&b.upper))
        });
        let index: HashMap<Interval, u16> = intervals
            .iter()
            .enumerate()
            .map(|(i, iv)| (iv.clone(), i as u16))
            .collect();

        // Facets are the maximal chains: saturated ascents from some [A, A]
        // to a [v, F] with F a base facet, stepping by shrinking A or
        // growing B inside the base.
        let mut facets: Vec<Face> = Vec::new();
        let mut chain: Vec<u16> = Vec::new();
        for seed in base_faces.iter().filter(|f| !f.is_empty()) {
            let iv = Interval { lower: seed.clone(), upper: seed.clone() };
            chain.push(index[&iv]);
            extend_chain(base, &index, seed.clone(), seed.clone(), &mut chain, &mut facets);
            chain.pop();
        }

        let labels: Vec<String> = intervals
            .iter()
            .map(|iv| format!("{}|{}", joined(base, &iv.lower), joined(base, &iv.upper)))
            .collect();
        let complex = SimplicialComplex::from_maximal_faces_unchecked(labels, facets);
        Ok(IntervalSubdivision { base: base.clone(), intervals, complex })
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Carrier of a subdivision face: the union (= maximum) of the upper
    /// parts of its intervals; the empty face carries the empty base face.
    pub fn carrier(&self, face: &Face) -> Face {
        let mut acc = Face::empty();
        for &v in face.vertices() {
            acc = acc.union(&self.intervals[v as usize].upper);
        }
        acc
    }

    /// The subcomplex of chains whose carrier lies inside the base face F:
    /// the interval subdivision of 2^F embedded in the subdivision.
    pub fn restriction(&self, face: &Face) -> Result<SimplicialComplex> {
        if !self.base.contains_face(face) {
            return Err(Error::NotAFace { face: self.base.face_label(face) });
        }
        if face.is_empty() {
            return Ok(SimplicialComplex::from_maximal_faces_unchecked(
                vec![],
                vec![Face::empty()],
            ));
        }
        let index: HashMap<Interval, u16> = self
            .intervals
            .iter()
            .enumerate()
            .filter(|(_, iv)| iv.upper.is_subset_of(face))
            .map(|(i, iv)| (iv.clone(), i as u16))
            .collect();
        let sub_base = SimplicialComplex::from_maximal_faces_unchecked(
            self.base.vertex_labels().to_vec(),
            vec![face.clone()],
        );
        let mut facets: Vec<Face> = Vec::new();
        let mut chain: Vec<u16> = Vec::new();
        for seed in face.subsets().into_iter().filter(|f| !f.is_empty()) {
            let iv = Interval { lower: seed.clone(), upper: seed.clone() };
            chain.push(index[&iv]);
            extend_chain(&sub_base, &index, seed.clone(), seed, &mut chain, &mut facets);
            chain.pop();
        }
        // Reuse the ambient vertex labels so faces stay comparable.
        Ok(SimplicialComplex::from_maximal_faces_unchecked(
            self.complex.vertex_labels().to_vec(),
            facets,
        ))
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct VertexWire {
            #[serde(rename = "A")]
            lower: Vec<usize>,
            #[serde(rename = "B")]
            upper: Vec<usize>,
        }
        let vertices: Vec<VertexWire> = self
            .intervals
            .iter()
            .map(|iv| VertexWire {
                lower: iv.lower.vertices().iter().map(|&v| v as usize).collect(),
                upper: iv.upper.vertices().iter().map(|&v| v as usize).collect(),
            })
            .collect();
        let facets: Vec<Vec<usize>> = self
            .complex
            .facets()
            .iter()
            .map(|f| f.vertices().iter().map(|&v| v as usize).collect())
            .collect();
        let carriers: Vec<Vec<usize>> = self
            .complex
            .facets()
            .iter()
            .map(|f| {
                self.carrier(f)
                    .vertices()
                    .iter()
                    .map(|&v| v as usize)
                    .collect()
            })
            .collect();
        serde_json::json!({
            "base_vertices": self.base.vertex_labels(),
            "vertices": vertices,
            "facets": facets,
            "facet_carriers": carriers,
        })
    }
}

fn joined(base: &SimplicialComplex, face: &Face) -> String {
    face.vertices()
        .iter()
        .map(|&v| base.vertex_labels()[v as usize].clone())
        .collect::<Vec<_>>()
        .join("+")
}

/// Depth-first saturated extension: from [lower, upper], either remove one
/// vertex of `lower` (when it has at least two) or add to `upper` a vertex
/// keeping it a base face. Chains that cannot move are maximal.
fn extend_chain(
    base: &SimplicialComplex,
    index: &HashMap<Interval, u16>,
    lower: Face,
    upper: Face,
    chain: &mut Vec<u16>,
    facets: &mut Vec<Face>,
) {
    let mut moved = false;
    if lower.len() >= 2 {
        for &v in lower.vertices() {
            let next = Interval { lower: lower.without(v), upper: upper.clone() };
            let id = index[&next];
            chain.push(id);
            extend_chain(base, index, next.lower, next.upper, chain, facets);
            chain.pop();
            moved = true;
        }
    }
    for v in 0..base.vertex_labels().len() as u16 {
        if upper.contains(v) {
            continue;
        }
        let bigger = upper.with(v);
        if !base.contains_face(&bigger) {
            continue;
        }
        let next = Interval { lower: lower.clone(), upper: bigger };
        let id = index[&next];
        chain.push(id);
        extend_chain(base, index, next.lower, next.upper, chain, facets);
        chain.pop();
        moved = true;
    }
    if !moved {
        facets.push(Face::from_unsorted(chain.clone()));
    }
}

/// Face-count transform of dimension parameter d: the (d+1) x (d+1) integer
/// matrix with row 0 = (1, 0, ..., 0) and, for 1 <= k <= d,
/// entry (k, l) = sum_j (-1)^j C(k-1, j) [(2k-2j)^l - (2k-2j-1)^l].
#[allow(clippy::needless_range_loop)]
pub fn f_transform_matrix(d: usize) -> Vec<Vec<BigInt>> {
    let mut m = vec![vec![BigInt::from(0); d + 1]; d + 1];
    m[0][0] = BigInt::from(1);
    for k in 1..=d {
        for l in 0..=d {
            let mut acc = BigInt::from(0);
            for j in 0..k {
                let a = BigInt::from((2 * k - 2 * j) as u64).pow(l as u32);
                let b = BigInt::from((2 * k - 2 * j - 1) as u64).pow(l as u32);
                let term = binomial(k - 1, j) * (a - b);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            m[k][l] = acc;
        }
    }
    m
}

/// h-vector transform of dimension parameter d: entry (r, s) counts signed
/// permutations of order d+1 with first letter s+1, positive last letter
/// and r descents.
#[allow(clippy::needless_range_loop)]
pub fn h_transform_matrix(d: usize) -> Result<Vec<Vec<BigInt>>> {
    let table = BPlusTable::up_to(d + 1);
    let mut m = vec![vec![BigInt::from(0); d + 1]; d + 1];
    for s in 0..=d {
        let p = table.b_plus(d + 1, s as i32 + 1)?;
        for r in 0..=d {
            m[r][s] = p.coeff(r);
        }
    }
    Ok(m)
}

pub fn apply_matrix(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Cross-check of the two closed-form transforms against the explicit
/// construction, as report records.
pub fn verify_subdivision_transforms(
    base: &SimplicialComplex,
    name: &str,
) -> Result<Vec<IdentityRecord>> {
    let d = (base.dim() + 1) as usize;
    let subdivision = IntervalSubdivision::build(base)?;
    let constructed = subdivision.complex();

    let f_base: Vec<BigInt> = base.f_vector().0.iter().map(|&x| BigInt::from(x)).collect();
    let f_built: Vec<BigInt> = constructed
        .f_vector()
        .0
        .iter()
        .map(|&x| BigInt::from(x))
        .collect();
    let f_matrix = apply_matrix(&f_transform_matrix(d), &f_base);

    let h_base = base.h_polynomial();
    let h_vec: Vec<BigInt> = (0..=d).map(|k| h_base.coeff(k)).collect();
    let h_built = constructed.h_polynomial();
    let h_matrix = apply_matrix(&h_transform_matrix(d)?, &h_vec);
    let h_built_vec: Vec<BigInt> = (0..=d).map(|k| h_built.coeff(k)).collect();

    let mut records = Vec::new();
    records.push(IdentityRecord::check(
        "thm-3.1",
        "f-transform-matches-construction",
        "thm-3.1 eq (1)",
        format!("complex={name}"),
        f_built == f_matrix,
        || format!("constructed {f_built:?} vs matrix {f_matrix:?}"),
    ));
    records.push(IdentityRecord::check(
        "thm-3.1",
        "h-transform-matches-construction",
        "thm-3.1 eq (2)",
        format!("complex={name}"),
        h_built_vec == h_matrix,
        || format!("constructed {h_built_vec:?} vs matrix {h_matrix:?}"),
    ));
    Ok(records)
}

/// Face counts of the subdivision of a k-simplex, straight from the
/// transform; restrictions are checked against this fingerprint.
pub fn simplex_subdivision_f(k: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::from(0); k + 1];
    for (i, item) in f.iter_mut().enumerate() {
        *item = binomial(k, i);
    }
    apply_matrix(&f_transform_matrix(k), &f)
}

/// h-polynomial of Int(2^[n]) through the transform; it equals the descent
/// polynomial of the positive-last-letter class of order n.
pub fn simplex_subdivision_h(n: usize) -> Result<IntPolynomial> {
    let table = BPlusTable::up_to(n.max(1));
    table.b_plus_total(n)
}

/// f-vector of Int(Δ) through the transform.
pub fn f_of_subdivision_by_matrix(base: &SimplicialComplex) -> Vec<BigInt> {
    let d = (base.dim() + 1) as usize;
    let f: Vec<BigInt> = base.f_vector().0.iter().map(|&x| BigInt::from(x)).collect();
    apply_matrix(&f_transform_matrix(d), &f)
}

/// h-vector of Int(Δ) through the transform.
pub fn h_of_subdivision_by_matrix(base: &SimplicialComplex) -> Result<IntPolynomial> {
    let d = (base.dim() + 1) as usize;
    let h = base.h_polynomial();
    let v: Vec<BigInt> = (0..=d).map(|k| h.coeff(k)).collect();
    Ok(IntPolynomial::from_coeffs(apply_matrix(&h_transform_matrix(d)?, &v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{generators, FVector};

    #[test]
    fn subdivision_of_an_edge_is_a_path() {
        let edge = generators::simplex(2).unwrap();
        let s = IntervalSubdivision::build(&edge).unwrap();
        assert_eq!(s.intervals().len(), 5);
        assert_eq!(s.complex().f_vector(), FVector(vec![1, 5, 4]));
        let b = s.complex().boundary_of_ball().unwrap();
        assert_eq!(b.f_vector(), FVector(vec![1, 2]));
    }

    #[test]
    fn subdivision_of_triangle_boundary_is_a_twelve_cycle() {
        let tri = generators::simplex_boundary(3).unwrap();
        let s = IntervalSubdivision::build(&tri).unwrap();
        assert_eq!(s.complex().f_vector(), FVector(vec![1, 12, 12]));
        assert_eq!(
            s.complex().h_polynomial(),
            IntPolynomial::from(vec![1, 10, 1])
        );
    }

    #[test]
    fn subdivision_of_a_point_is_a_point() {
        let pt = generators::simplex(1).unwrap();
        let s = IntervalSubdivision::build(&pt).unwrap();
        assert_eq!(s.complex().f_vector(), FVector(vec![1, 1]));
    }

    #[test]
    fn empty_complex_has_no_intervals() {
        let empty = generators::simplex_boundary(1).unwrap();
        assert!(matches!(
            IntervalSubdivision::build(&empty),
            Err(Error::NoIntervals)
        ));
    }

    #[test]
    fn restriction_recovers_smaller_subdivisions() {
        let tri = generators::simplex(3).unwrap();
        let s = IntervalSubdivision::build(&tri).unwrap();
        let f = Face::from_sorted(vec![0, 1]);
        let r = s.restriction(&f).unwrap();
        assert_eq!(r.f_vector(), FVector(vec![1, 5, 4]));
        let v = Face::from_sorted(vec![0]);
        assert_eq!(s.restriction(&v).unwrap().f_vector(), FVector(vec![1, 1]));
        let full = Face::from_sorted(vec![0, 1, 2]);
        assert_eq!(
            s.restriction(&full).unwrap().f_vector(),
            s.complex().f_vector()
        );
        let missing = Face::from_sorted(vec![0, 3]);
        assert!(s.restriction(&missing).is_err());
    }

    #[test]
    fn restrictions_match_simplex_subdivision_counts() {
        // every base face restricts to the subdivision of a simplex of the
        // same size
        for base in [
            generators::simplex(3).unwrap(),
            generators::simplex(4).unwrap(),
            generators::simplex_boundary(4).unwrap(),
            generators::simplex_boundary(5).unwrap(),
            generators::cross_polytope_boundary(2).unwrap(),
            generators::cross_polytope_boundary(3).unwrap(),
        ] {
            let s = IntervalSubdivision::build(&base).unwrap();
            for face in base.faces() {
                if face.is_empty() {
                    continue;
                }
                let r = s.restriction(&face).unwrap();
                let expected = simplex_subdivision_f(face.len());
                let got: Vec<BigInt> =
                    r.f_vector().0.iter().map(|&x| BigInt::from(x)).collect();
                assert_eq!(got, expected, "face {face:?}");
            }
        }
    }

    #[test]
    fn carrier_is_monotone() {
        let tri = generators::simplex(3).unwrap();
        let s = IntervalSubdivision::build(&tri).unwrap();
        let faces = s.complex().faces();
        for a in &faces {
            for b in &faces {
                if a.is_subset_of(b) {
                    assert!(s.carrier(a).is_subset_of(&s.carrier(b)));
                }
            }
        }
    }

    #[test]
    fn transform_matrix_rows() {
        let m = f_transform_matrix(2);
        let row = |k: usize| -> Vec<i64> {
            m[k].iter().map(|x| i64::try_from(x).unwrap()).collect()
        };
        assert_eq!(row(0), vec![1, 0, 0]);
        assert_eq!(row(1), vec![0, 1, 3]);
        assert_eq!(row(2), vec![0, 0, 4]);
    }

    #[test]
    fn h_matrix_columns() {
        let m = h_transform_matrix(2).unwrap();
        let col = |s: usize| -> Vec<i64> {
            (0..3).map(|r| i64::try_from(&m[r][s]).unwrap()).collect()
        };
        assert_eq!(col(0), vec![1, 3, 0]);
        assert_eq!(col(1), vec![0, 4, 0]);
        assert_eq!(col(2), vec![0, 3, 1]);
    }

    #[test]
    fn triple_agreement_on_small_corpus() {
        use crate::report::Status;
        for (name, base) in [
            ("edge", generators::simplex(2).unwrap()),
            ("triangle", generators::simplex(3).unwrap()),
            ("triangle-boundary", generators::simplex_boundary(3).unwrap()),
            ("octahedron", generators::cross_polytope_boundary(3).unwrap()),
        ] {
            for r in verify_subdivision_transforms(&base, name).unwrap() {
                assert_eq!(r.status, Status::Pass, "{r:?}");
            }
        }
    }

    #[test]
    fn subdivision_preserves_dimension_and_euler_characteristic() {
        for base in [
            generators::simplex(3).unwrap(),
            generators::simplex_boundary(3).unwrap(),
            generators::simplex_boundary(4).unwrap(),
            generators::cross_polytope_boundary(2).unwrap(),
        ] {
            let s = IntervalSubdivision::build(&base).unwrap();
            assert_eq!(s.complex().dim(), base.dim());
            assert_eq!(
                s.complex().reduced_euler_characteristic(),
                base.reduced_euler_characteristic()
            );
        }
    }

    #[test]
    fn top_face_count_matches_positive_class_size() {
        // h(Int 2^[n]) evaluated at 1 equals 2^(n-1) n!
        for n in 1..=5usize {
            let h = simplex_subdivision_h(n).unwrap();
            let expected = (1u64 << (n - 1)) * (1..=n as u64).product::<u64>();
            assert_eq!(h.coeff_sum(), BigInt::from(expected));
        }
        // and geometrically for a small case
        let s = IntervalSubdivision::build(&generators::simplex(3).unwrap()).unwrap();
        assert_eq!(s.complex().f_vector().0[3], 24);
    }

    #[test]
    fn json_shape() {
        let s = IntervalSubdivision::build(&generators::simplex(2).unwrap()).unwrap();
        let j = s.to_json();
        assert!(j["vertices"][0]["A"].is_array());
        assert!(j["vertices"][0]["B"].is_array());
        assert_eq!(j["facets"].as_array().unwrap().len(), 4);
    }
}
