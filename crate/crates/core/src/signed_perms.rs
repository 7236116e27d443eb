//! The hyperoctahedral group B_n and its statistics.
//!
//! A signed permutation is stored by its window (σ_1, ..., σ_n) of values
//! ±1..±n with distinct absolute values; the group law σ(-i) = -σ(i) is
//! implicit. Descents use the padded word with σ_0 = 0; slides use the word
//! padded on both sides with σ_0 = 0 and a sentinel strictly below -n.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::polynomials::IntPolynomial;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(Error::InvalidInput(format!(
                    "not a signed permutation window: {window:?}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { window })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Apply the permutation to a value in ±1..±n using σ(-i) = -σ(i).
    pub fn apply(&self, i: i32) -> i32 {
        if i > 0 {
            self.window[(i - 1) as usize]
        } else {
            -self.window[(-i - 1) as usize]
        }
    }

    /// Descent count and descent set over positions {0, ..., n-1}, with
    /// σ_0 = 0 prepended and natural integer comparisons.
    pub fn des_b(&self) -> (usize, Vec<usize>) {
        let mut set = Vec::new();
        let mut prev = 0i32;
        for (i, &x) in self.window.iter().enumerate() {
            if prev > x {
                set.push(i);
            }
            prev = x;
        }
        (set.len(), set)
    }

    /// Slide decomposition of the padded word `0 σ_1 ... σ_n sentinel`.
    ///
    /// Asterisks sit at both ends and between each ascent; a slide is any
    /// maximal inter-asterisk segment of length at least 2. The sentinel is
    /// `-(n+1)`, strictly below every window value.
    pub fn slides(&self) -> SlideDecomposition {
        let n = self.window.len() as i32;
        let sentinel = -(n + 1);
        let mut word = Vec::with_capacity(self.window.len() + 2);
        word.push(0);
        word.extend_from_slice(&self.window);
        word.push(sentinel);

        let mut segments: Vec<Vec<i32>> = Vec::new();
        let mut current = vec![word[0]];
        for w in word.windows(2) {
            if w[0] < w[1] {
                segments.push(std::mem::take(&mut current));
            }
            current.push(w[1]);
        }
        segments.push(current);
        let slides: Vec<Vec<i32>> = segments.into_iter().filter(|s| s.len() >= 2).collect();
        SlideDecomposition { sentinel, slides }
    }
}

#[derive(Clone, Debug)]
pub struct SlideDecomposition {
    pub sentinel: i32,
    pub slides: Vec<Vec<i32>>,
}

impl SlideDecomposition {
    pub fn count(&self) -> usize {
        self.slides.len()
    }

    pub fn all_len2(&self) -> bool {
        self.slides.iter().all(|s| s.len() == 2)
    }
}

/// Enumeration classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Class {
    /// All of B_n.
    B,
    /// σ_n > 0.
    BPlus,
    /// σ_n < 0.
    BMinus,
    /// σ_1 > 0 and σ_n > 0.
    BPlusPlus,
    /// σ_1 < 0 and σ_n > 0.
    BMinusPlus,
    /// σ_1 = j within B_n^+ (j may be negative).
    FirstLetter(i32),
}

impl Class {
    fn accepts(&self, window: &[i32]) -> bool {
        let first = window[0];
        let last = *window.last().unwrap();
        match *self {
            Class::B => true,
            Class::BPlus => last > 0,
            Class::BMinus => last < 0,
            Class::BPlusPlus => first > 0 && last > 0,
            Class::BMinusPlus => first < 0 && last > 0,
            Class::FirstLetter(j) => first == j && last > 0,
        }
    }
}

/// Enumerate a class in a fixed reproducible order: sign patterns ascending
/// (bit p of the mask negates position p+1), underlying permutations of [n]
/// in lexicographic order within each pattern.
pub fn enumerate_class(n: usize, class: Class, bounds: &Bounds) -> Result<Vec<SignedPerm>> {
    bounds.check_order(n)?;
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, order: 0 });
    }
    if let Class::FirstLetter(j) = class {
        if j == 0 || j.unsigned_abs() as usize > n {
            return Err(Error::IndexOutOfRange { index: j as i64, order: n });
        }
    }
    let mut out = Vec::new();
    let mut perm: Vec<i32> = (1..=n as i32).collect();
    for mask in 0u32..(1 << n) {
        loop {
            let window: Vec<i32> = perm
                .iter()
                .enumerate()
                .map(|(p, &v)| if mask >> p & 1 == 1 { -v } else { v })
                .collect();
            if class.accepts(&window) {
                out.push(SignedPerm { window });
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        // restore lexicographically smallest arrangement
        perm.sort_unstable();
    }
    Ok(out)
}

fn next_permutation(a: &mut [i32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Left peak count of an ordinary permutation: positions 1 <= i <= n-1 with
/// σ_(i-1) < σ_i > σ_(i+1), taking σ_0 = 0.
pub fn lpk(perm: &[usize]) -> usize {
    left_peak_positions(perm).len()
}

/// The left peak positions themselves (1-based).
pub fn left_peak_positions(perm: &[usize]) -> Vec<usize> {
    let n = perm.len();
    let mut out = Vec::new();
    for i in 1..n {
        let prev = if i == 1 { 0 } else { perm[i - 2] };
        if prev < perm[i - 1] && perm[i - 1] > perm[i] {
            out.push(i);
        }
    }
    out
}

/// Excedance-graded derangement polynomial of the symmetric group:
/// sum over fixed-point-free π ∈ S_n of x^(#{i : π_i > i}); 1 for n = 0.
pub fn derangement_poly_a(n: usize) -> IntPolynomial {
    let mut counts = vec![BigInt::from(0); n.max(1)];
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, perm: &mut Vec<usize>, used: &mut [bool], exc: usize, counts: &mut [BigInt]) {
        if perm.len() == n {
            counts[exc] += 1;
            return;
        }
        let pos = perm.len() + 1;
        for v in 1..=n {
            if used[v] || v == pos {
                continue;
            }
            used[v] = true;
            perm.push(v);
            rec(n, perm, used, exc + usize::from(v > pos), counts);
            perm.pop();
            used[v] = false;
        }
    }
    if n == 0 {
        return IntPolynomial::one();
    }
    rec(n, &mut perm, &mut used, 0, &mut counts);
    IntPolynomial::from_coeffs(counts)
}

/// Exact statistic tables for order n, gathered in one enumeration pass.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StatTables {
    pub n: usize,
    /// First letters in row order -n..-1, 1..n; counts by descent number,
    /// restricted to σ_n > 0.
    pub b_plus_jk: Vec<Vec<u64>>,
    /// Descent counts over σ_1 > 0, σ_n > 0.
    pub b_pp: Vec<u64>,
    /// Descent counts over σ_1 < 0, σ_n > 0.
    pub b_mp: Vec<u64>,
    /// [k][s]: k descents and s+1 slides, σ_1 > 0, σ_n > 0.
    pub w_pp: Vec<Vec<u64>>,
    /// [k][s]: k descents and s+1 slides, σ_1 < 0, σ_n > 0.
    pub w_mp: Vec<Vec<u64>>,
    /// Descent counts over all of B_n.
    pub b_all: Vec<u64>,
    /// Descent counts over σ_n < 0.
    pub b_minus: Vec<u64>,
    /// Every member counted on the diagonal (k descents, k+1 slides) had all
    /// slides of length exactly 2.
    pub diag_slides_all_len2: bool,
    pub total: u64,
}

impl StatTables {
    pub fn row_index(n: usize, j: i32) -> usize {
        if j < 0 {
            (j + n as i32) as usize
        } else {
            (j - 1) as usize + n
        }
    }

    pub fn first_letters(n: usize) -> Vec<i32> {
        let mut v: Vec<i32> = (-(n as i32)..=-1).collect();
        v.extend(1..=n as i32);
        v
    }

    pub fn b_plus_poly(&self, j: i32) -> IntPolynomial {
        let row = &self.b_plus_jk[Self::row_index(self.n, j)];
        IntPolynomial::from_coeffs(row.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn b_pp_poly(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.b_pp.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn b_mp_poly(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.b_mp.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn b_poly(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.b_all.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn b_minus_poly(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.b_minus.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn b_plus_all_poly(&self) -> IntPolynomial {
        self.b_pp_poly().add(&self.b_mp_poly())
    }

    /// b(n, s) slices: members with s descents and s+1 slides.
    pub fn b_pp_diag(&self) -> Vec<u64> {
        (0..self.w_pp[0].len()).map(|s| self.w_pp.get(s).map_or(0, |row| row[s])).collect()
    }

    pub fn b_mp_diag(&self) -> Vec<u64> {
        (0..self.w_mp[0].len()).map(|s| self.w_mp.get(s).map_or(0, |row| row[s])).collect()
    }

    /// Serial computation.
    pub fn compute(n: usize, bounds: &Bounds) -> Result<Self> {
        bounds.check_order(n)?;
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, order: 0 });
        }
        let mut acc = Accumulator::new(n);
        for first in Self::first_letters(n) {
            acc.merge(&count_with_first(n, first));
        }
        Ok(acc.finish(n))
    }

    /// Parallel over first letters; merge is entrywise addition, so the
    /// result is identical to the serial tables.
    pub fn compute_parallel(n: usize, bounds: &Bounds) -> Result<Self> {
        bounds.check_order(n)?;
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, order: 0 });
        }
        let parts: Vec<Accumulator> = Self::first_letters(n)
            .into_par_iter()
            .map(|first| count_with_first(n, first))
            .collect();
        let mut acc = Accumulator::new(n);
        for p in &parts {
            acc.merge(p);
        }
        Ok(acc.finish(n))
    }
}

struct Accumulator {
    b_plus_jk: Vec<Vec<u64>>,
    b_pp: Vec<u64>,
    b_mp: Vec<u64>,
    w_pp: Vec<Vec<u64>>,
    w_mp: Vec<Vec<u64>>,
    b_all: Vec<u64>,
    b_minus: Vec<u64>,
    diag_ok: bool,
    total: u64,
}

impl Accumulator {
    fn new(n: usize) -> Self {
        let smax = n / 2 + 1;
        Accumulator {
            b_plus_jk: vec![vec![0; n + 1]; 2 * n],
            b_pp: vec![0; n + 1],
            b_mp: vec![0; n + 1],
            w_pp: vec![vec![0; smax + 1]; n + 1],
            w_mp: vec![vec![0; smax + 1]; n + 1],
            b_all: vec![0; n + 1],
            b_minus: vec![0; n + 1],
            diag_ok: true,
            total: 0,
        }
    }

    fn merge(&mut self, other: &Accumulator) {
        for (a, b) in self.b_plus_jk.iter_mut().zip(&other.b_plus_jk) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += *y;
            }
        }
        for (x, y) in self.b_pp.iter_mut().zip(&other.b_pp) {
            *x += *y;
        }
        for (x, y) in self.b_mp.iter_mut().zip(&other.b_mp) {
            *x += *y;
        }
        for (a, b) in self.w_pp.iter_mut().zip(&other.w_pp) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += *y;
            }
        }
        for (a, b) in self.w_mp.iter_mut().zip(&other.w_mp) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += *y;
            }
        }
        for (x, y) in self.b_all.iter_mut().zip(&other.b_all) {
            *x += *y;
        }
        for (x, y) in self.b_minus.iter_mut().zip(&other.b_minus) {
            *x += *y;
        }
        self.diag_ok &= other.diag_ok;
        self.total += other.total;
    }

    fn finish(self, n: usize) -> StatTables {
        StatTables {
            n,
            b_plus_jk: self.b_plus_jk,
            b_pp: self.b_pp,
            b_mp: self.b_mp,
            w_pp: self.w_pp,
            w_mp: self.w_mp,
            b_all: self.b_all,
            b_minus: self.b_minus,
            diag_slides_all_len2: self.diag_ok,
            total: self.total,
        }
    }
}

/// Count statistics over all windows starting with `first`. Descents and
/// slides are maintained incrementally along the prefix, so each node costs
/// O(1).
fn count_with_first(n: usize, first: i32) -> Accumulator {
    let mut acc = Accumulator::new(n);
    // slide state on the padded word: run_len is the length of the current
    // decreasing run, closed_slides counts finished runs of length >= 2,
    // long_slide remembers a finished run of length >= 3.
    // After the leading 0: a descent keeps the run alive as [0, first]; an
    // ascent closes the length-1 segment [0], which is never a slide.
    let first_state = State {
        prev: first,
        des: u8::from(0 > first),
        run_len: if 0 > first { 2 } else { 1 },
        closed: 0,
        long: false,
    };
    let used = 1u16 << (first.unsigned_abs() - 1);
    extend(n, 1, used, first_state, first, &mut acc);
    acc
}

#[derive(Clone, Copy)]
struct State {
    prev: i32,
    des: u8,
    run_len: u8,
    closed: u8,
    long: bool,
}

fn extend(n: usize, depth: usize, used: u16, st: State, first: i32, acc: &mut Accumulator) {
    if depth == n {
        // Sentinel extends the current run by one: always a final slide.
        let slides = st.closed as usize + 1;
        let long = st.long || st.run_len >= 2;
        record(n, first, st.prev, st.des as usize, slides, long, acc);
        return;
    }
    for a in 1..=n as i32 {
        let bit = 1u16 << (a - 1);
        if used & bit != 0 {
            continue;
        }
        for x in [-a, a] {
            let mut next = st;
            next.prev = x;
            if st.prev > x {
                next.des += 1;
                next.run_len += 1;
            } else {
                // ascent: the finished segment is a slide iff it has >= 2
                // letters
                if st.run_len >= 2 {
                    next.closed += 1;
                    if st.run_len >= 3 {
                        next.long = true;
                    }
                }
                next.run_len = 1;
            }
            extend(n, depth + 1, used | bit, next, first, acc);
        }
    }
}

fn record(n: usize, first: i32, last: i32, des: usize, slides: usize, long: bool, acc: &mut Accumulator) {
    acc.total += 1;
    acc.b_all[des] += 1;
    if last < 0 {
        acc.b_minus[des] += 1;
        return;
    }
    acc.b_plus_jk[StatTables::row_index(n, first)][des] += 1;
    let s = slides - 1;
    if first > 0 {
        acc.b_pp[des] += 1;
        acc.w_pp[des][s] += 1;
    } else {
        acc.b_mp[des] += 1;
        acc.w_mp[des][s] += 1;
    }
    if des == s && long {
        acc.diag_ok = false;
    }
}

/// How to read the under-specified pieces of the excedance description:
/// which element of the window is "minimal", and what counts as a type-B
/// excedance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum MinRule {
    /// σ applied to the minimum in the natural integer order.
    NaturalMin,
    /// σ applied to the element of smallest absolute value (±1).
    AbsMin,
    /// σ applied to the absolute value of the natural minimum.
    NaturalMinAbs,
    /// σ applied to the negated absolute value of the natural minimum.
    NaturalMinNegAbs,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ExcRule {
    /// #{i in [n] : σ(i) > i}.
    Natural,
    /// Natural plus the count of positions with σ(i) = -i.
    NaturalPlusNegFix,
    /// Natural plus one when the last letter is negative.
    NaturalPlusLastNeg,
    /// Natural plus one when the first letter is negative.
    NaturalPlusFirstNeg,
    /// #{i in [n] : |σ(i)| > i}.
    Abs,
    /// Natural plus ceil(#negatives / 2).
    FlagHalfCeil,
    /// Natural plus floor(#negatives / 2).
    FlagHalfFloor,
    /// #{i in [n] : σ(i) = -i or σ(|σ(i)|) > σ(i)}.
    TypeB,
}

pub const ALL_MIN_RULES: [MinRule; 4] = [
    MinRule::NaturalMin,
    MinRule::AbsMin,
    MinRule::NaturalMinAbs,
    MinRule::NaturalMinNegAbs,
];
pub const ALL_EXC_RULES: [ExcRule; 8] = [
    ExcRule::Natural,
    ExcRule::NaturalPlusNegFix,
    ExcRule::NaturalPlusLastNeg,
    ExcRule::NaturalPlusFirstNeg,
    ExcRule::Abs,
    ExcRule::FlagHalfCeil,
    ExcRule::FlagHalfFloor,
    ExcRule::TypeB,
];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Interpretation {
    pub min_rule: MinRule,
    pub exc_rule: ExcRule,
}

impl Interpretation {
    /// The interpretation singled out by calibration against the local-h
    /// oracles: test the letter at the absolute value of the window
    /// minimum, and count type-B excedances.
    pub const CALIBRATED: Interpretation = Interpretation {
        min_rule: MinRule::NaturalMinAbs,
        exc_rule: ExcRule::TypeB,
    };

    pub fn name(&self) -> String {
        format!("{:?}/{:?}", self.min_rule, self.exc_rule)
    }

    pub fn excedance(&self, sp: &SignedPerm) -> usize {
        let n = sp.n() as i32;
        let w = sp.window();
        let natural = (1..=n).filter(|&i| sp.apply(i) > i).count();
        let negs = w.iter().filter(|&&x| x < 0).count();
        match self.exc_rule {
            ExcRule::Natural => natural,
            ExcRule::NaturalPlusNegFix => {
                natural + (1..=n).filter(|&i| sp.apply(i) == -i).count()
            }
            ExcRule::NaturalPlusLastNeg => natural + usize::from(w[w.len() - 1] < 0),
            ExcRule::NaturalPlusFirstNeg => natural + usize::from(w[0] < 0),
            ExcRule::Abs => (1..=n).filter(|&i| sp.apply(i).abs() > i).count(),
            ExcRule::FlagHalfCeil => natural + negs.div_ceil(2),
            ExcRule::FlagHalfFloor => natural + negs / 2,
            ExcRule::TypeB => (1..=n)
                .filter(|&i| {
                    let wi = sp.apply(i);
                    wi == -i || sp.apply(wi.abs()) > wi
                })
                .count(),
        }
    }

    pub fn in_b_star(&self, sp: &SignedPerm) -> bool {
        let min = *sp.window().iter().min().unwrap();
        let m = match self.min_rule {
            MinRule::NaturalMin => min,
            MinRule::AbsMin => {
                if sp.window().contains(&1) {
                    1
                } else {
                    -1
                }
            }
            MinRule::NaturalMinAbs => min.abs(),
            MinRule::NaturalMinNegAbs => -min.abs(),
        };
        sp.apply(m) > 0
    }
}

/// True iff σ(i) ≠ i for every i (σ(i) = -i is not a fixed point).
pub fn is_derangement(sp: &SignedPerm) -> bool {
    sp.window().iter().enumerate().all(|(p, &x)| x != p as i32 + 1)
}

/// Filtered derangement stream under an interpretation, each member with its
/// excedance statistic.
pub fn derangements_b_star(
    d: usize,
    interp: &Interpretation,
    bounds: &Bounds,
) -> Result<Vec<(SignedPerm, usize)>> {
    let all = enumerate_class(d, Class::B, bounds)?;
    Ok(all
        .into_iter()
        .filter(is_derangement)
        .filter(|sp| interp.in_b_star(sp))
        .map(|sp| {
            let e = interp.excedance(&sp);
            (sp, e)
        })
        .collect())
}

/// Generating function of the filtered derangement set.
pub fn b_star_derangement_poly(
    d: usize,
    interp: &Interpretation,
    bounds: &Bounds,
) -> Result<IntPolynomial> {
    let members = derangements_b_star(d, interp, bounds)?;
    let mut counts = vec![BigInt::from(0); d + 2];
    for (_, e) in members {
        if e >= counts.len() {
            counts.resize(e + 1, BigInt::from(0));
        }
        counts[e] += 1;
    }
    Ok(IntPolynomial::from_coeffs(counts))
}
