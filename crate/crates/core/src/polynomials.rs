//! Exact integer polynomials and gamma-vectors.
//!
//! An [`IntPolynomial`] stores arbitrary-precision coefficients by degree.
//! A [`GammaVector`] is the coordinate vector of a palindromic polynomial in
//! the basis `t^k (1+t)^(D-2k)` for an explicit reference degree `D`; the
//! reference degree travels with the vector because vectors with different
//! references may not be added without an explicit shift.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Polynomial with exact integer coefficients, index `k` holding the
/// coefficient of `t^k`. The stored sequence is normalized: either the last
/// coefficient is nonzero, or the sequence is the single value `0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![BigInt::zero()] }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// `1 + t`.
    pub fn one_plus_t() -> Self {
        IntPolynomial::from(vec![1, 1])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn monomial(coefficient: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coefficient;
        IntPolynomial::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(BigInt::zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree of the zero polynomial is reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        IntPolynomial::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = IntPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `t^d * p(1/t)` for `d >= deg(p)`: the coefficient sequence reversed
    /// within a window of length `d + 1`.
    pub fn reversed(&self, d: usize) -> Result<Self> {
        if d < self.degree() {
            return Err(Error::InvalidReferenceDegree { reference: d, degree: self.degree() });
        }
        let mut out = vec![BigInt::zero(); d + 1];
        for k in 0..=d {
            out[d - k] = self.coeff(k);
        }
        Ok(IntPolynomial::from_coeffs(out))
    }

    /// True iff `coeff_k = coeff_(D-k)` for all `0 <= k <= D`.
    pub fn is_symmetric(&self, reference: usize) -> Result<bool> {
        if !self.is_zero() && reference < self.degree() {
            return Err(Error::InvalidReferenceDegree {
                reference,
                degree: self.degree(),
            });
        }
        for k in 0..=reference / 2 {
            if self.coeff(k) != self.coeff(reference - k) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All coefficients nonnegative and rising then falling (ties allowed).
    pub fn is_unimodal_nonneg(&self) -> bool {
        if self.coeffs.iter().any(|c| c.is_negative()) {
            return false;
        }
        let mut falling = false;
        for w in self.coeffs.windows(2) {
            if w[1] > w[0] {
                if falling {
                    return false;
                }
            } else if w[1] < w[0] {
                falling = true;
            }
        }
        true
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings(items: &[String]) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(items.len());
        for s in items {
            let v = s
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidInput(format!("not an integer: {s:?}")))?;
            coeffs.push(v);
        }
        if coeffs.is_empty() {
            return Ok(IntPolynomial::zero());
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(v: Vec<i64>) -> Self {
        IntPolynomial::from_coeffs(v.into_iter().map(BigInt::from).collect())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly{:?}", self.to_decimal_strings())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if c.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        IntPolynomial::from_decimal_strings(&items).map_err(serde::de::Error::custom)
    }
}

/// Gamma coordinates `(gamma_0, ..., gamma_(D/2))` of a `D`-palindromic
/// polynomial, together with the reference degree `D`.
#[derive(Clone, PartialEq, Eq)]
pub struct GammaVector {
    pub ref_degree: usize,
    pub entries: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct GammaVectorWire {
    ref_degree: usize,
    entries: Vec<String>,
}

impl Serialize for GammaVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GammaVectorWire {
            ref_degree: self.ref_degree,
            entries: self.to_decimal_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GammaVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = GammaVectorWire::deserialize(d)?;
        let mut entries = Vec::with_capacity(wire.entries.len());
        for s in &wire.entries {
            entries.push(
                s.parse::<BigInt>()
                    .map_err(|_| serde::de::Error::custom(format!("not an integer: {s:?}")))?,
            );
        }
        Ok(GammaVector { ref_degree: wire.ref_degree, entries })
    }
}

impl GammaVector {
    pub fn new(ref_degree: usize, mut entries: Vec<BigInt>) -> Self {
        entries.resize(ref_degree / 2 + 1, BigInt::zero());
        GammaVector { ref_degree, entries }
    }

    /// Reassemble the polynomial `sum gamma_k t^k (1+t)^(D-2k)`.
    pub fn contract(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::zero();
        for (k, g) in self.entries.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let term = IntPolynomial::one_plus_t()
                .pow(self.ref_degree - 2 * k)
                .scale(g)
                .shift(k);
            acc = acc.add(&term);
        }
        acc
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|g| !g.is_negative())
    }

    /// Entrywise sum; both vectors must carry the same reference degree.
    pub fn add(&self, other: &GammaVector) -> Result<GammaVector> {
        if self.ref_degree != other.ref_degree {
            return Err(Error::InvalidInput(format!(
                "cannot add gamma vectors with reference degrees {} and {}",
                self.ref_degree, other.ref_degree
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a + b)
            .collect();
        Ok(GammaVector { ref_degree: self.ref_degree, entries })
    }

    /// View these coordinates at a higher reference degree.
    ///
    /// Multiplying the polynomial by `(1+t)` raises the reference by one and
    /// keeps the entries; multiplying by `t` raises it by two and prepends a
    /// zero. Any target `D + a + 2b` is reachable by `a` ones and `b` zeros.
    pub fn shifted_to(&self, target: usize) -> Result<GammaVector> {
        if target < self.ref_degree {
            return Err(Error::InvalidInput(format!(
                "cannot lower reference degree {} to {}",
                self.ref_degree, target
            )));
        }
        let diff = target - self.ref_degree;
        let zeros = diff / 2;
        let mut entries = vec![BigInt::zero(); zeros];
        entries.extend(self.entries.iter().cloned());
        Ok(GammaVector::new(target, entries))
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.entries.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Debug for GammaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gamma[ref {}]{:?}", self.ref_degree, self.to_decimal_strings())
    }
}

/// Expand a `D`-palindromic polynomial in the basis `t^k (1+t)^(D-2k)`.
///
/// Entries are obtained by triangular elimination: `gamma_k` is the
/// coefficient of `t^k` in what is left after removing the previous basis
/// terms. The residual is asserted to vanish.
pub fn gamma_expand(p: &IntPolynomial, reference: usize) -> Result<GammaVector> {
    check_symmetry(p, reference)?;
    let mut residual = p.clone();
    let mut entries = Vec::with_capacity(reference / 2 + 1);
    for k in 0..=reference / 2 {
        let g = residual.coeff(k);
        if !g.is_zero() {
            let term = IntPolynomial::one_plus_t()
                .pow(reference - 2 * k)
                .scale(&g)
                .shift(k);
            residual = residual.sub(&term);
        }
        entries.push(g);
    }
    assert!(residual.is_zero(), "gamma expansion left a nonzero residual: {residual:?}");
    Ok(GammaVector { ref_degree: reference, entries })
}

fn check_symmetry(p: &IntPolynomial, reference: usize) -> Result<()> {
    if !p.is_zero() && reference < p.degree() {
        return Err(Error::InvalidReferenceDegree {
            reference,
            degree: p.degree(),
        });
    }
    for k in 0..=reference / 2 {
        let left = p.coeff(k);
        let right = p.coeff(reference - k);
        if left != right {
            return Err(Error::NotSymmetric {
                reference,
                index: k,
                co_index: reference - k,
                left,
                right,
            });
        }
    }
    Ok(())
}

/// Binomial coefficient as an exact integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: Vec<i64>) -> IntPolynomial {
        IntPolynomial::from(v)
    }

    #[test]
    fn ring_ops() {
        let one_plus_t = poly(vec![1, 1]);
        assert_eq!(one_plus_t.mul(&one_plus_t), poly(vec![1, 2, 1]));
        let p = poly(vec![1, 6, 1]);
        assert!(p.sub(&p).is_zero());
        assert_eq!(poly(vec![1, 3]).shift(1), poly(vec![0, 1, 3]));
        assert_eq!(poly(vec![1, 3]).scale(&BigInt::from(-2)), poly(vec![-2, -6]));
    }

    #[test]
    fn eval_at_one_is_coefficient_sum() {
        let p = poly(vec![3, -1, 7, 2]);
        assert_eq!(p.eval(&BigInt::one()), p.coeff_sum());
    }

    #[test]
    fn symmetry_checks() {
        assert!(poly(vec![1, 6, 1]).is_symmetric(2).unwrap());
        assert!(!poly(vec![1, 3]).is_symmetric(1).unwrap());
        // t + 23t^2 + 23t^3 + t^4 about degree 5
        assert!(poly(vec![0, 1, 23, 23, 1]).is_symmetric(5).unwrap());
        assert!(poly(vec![1, 2, 3]).is_symmetric(1).is_err());
    }

    #[test]
    fn gamma_expand_known_values() {
        let g = gamma_expand(&poly(vec![1, 6, 1]), 2).unwrap();
        assert_eq!(g.entries, vec![BigInt::from(1), BigInt::from(4)]);

        let g = gamma_expand(&poly(vec![1, 237, 1682, 1682, 237, 1]), 5).unwrap();
        assert_eq!(
            g.entries,
            vec![BigInt::from(1), BigInt::from(232), BigInt::from(976)]
        );

        let g = gamma_expand(&poly(vec![0, 7, 7]), 3).unwrap();
        assert_eq!(g.entries, vec![BigInt::from(0), BigInt::from(7)]);
    }

    #[test]
    fn gamma_expand_rejects_asymmetric() {
        let err = gamma_expand(&poly(vec![1, 3]), 1).unwrap_err();
        match err {
            Error::NotSymmetric { index, co_index, .. } => {
                assert_eq!((index, co_index), (0, 1));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unimodality() {
        assert!(poly(vec![0, 7, 7]).is_unimodal_nonneg());
        assert!(!poly(vec![1, -1]).is_unimodal_nonneg());
        assert!(!poly(vec![1, 3, 2, 5]).is_unimodal_nonneg());
        assert!(poly(vec![1, 1, 1]).is_unimodal_nonneg());
        assert!(IntPolynomial::zero().is_unimodal_nonneg());
    }

    #[test]
    fn shift_semantics() {
        let p = poly(vec![1, 6, 1]);
        let g = gamma_expand(&p, 2).unwrap();
        // (1+t) * p keeps the entries one reference higher.
        let q = p.mul(&IntPolynomial::one_plus_t());
        let gq = gamma_expand(&q, 3).unwrap();
        assert_eq!(gq, g.shifted_to(3).unwrap());
        // t * p prepends a zero two references higher.
        let r = p.shift(1);
        let gr = gamma_expand(&r, 4).unwrap();
        let mut expected = vec![BigInt::zero()];
        expected.extend(g.entries.clone());
        assert_eq!(gr.entries, expected);
    }

    #[test]
    fn serde_round_trip() {
        let p = poly(vec![0, 192, 1152]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["0","192","1152"]"#);
        let q: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
