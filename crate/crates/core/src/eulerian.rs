//! First-letter refined Eulerian polynomials of type B+ and their
//! symmetrizations, gamma vectors, recurrences and expansions.
//!
//! `b_plus(n, j)` is the descent generating function over signed
//! permutations with first letter j and positive last letter. The
//! symmetrized families pair j with n-j+1; the tilde families weight one
//! side by t. Reference degrees are fixed per family: n-1 for the positive
//! symmetric family, n for the barred symmetric and positive tilde
//! families, n+1 for the barred tilde family.

use num_bigint::BigInt;

use crate::bounds::Bounds;
use crate::polynomials::{binomial, gamma_expand, GammaVector, IntPolynomial};
use crate::report::IdentityRecord;
use crate::signed_perms::{enumerate_class, Class, StatTables};
use crate::{Error, Result};

/// Memoized first-letter polynomials, built bottom-up by the recurrences
/// with initial conditions B+(1,1) = 1 and B+(1,-1) = 0.
pub struct BPlusTable {
    max_n: usize,
    /// polys[n-1][row] with the same row convention as `StatTables`.
    polys: Vec<Vec<IntPolynomial>>,
}

impl BPlusTable {
    pub fn up_to(max_n: usize) -> Self {
        let mut polys: Vec<Vec<IntPolynomial>> = Vec::with_capacity(max_n);
        polys.push(vec![IntPolynomial::zero(), IntPolynomial::one()]);
        for n in 2..=max_n {
            let prev = &polys[n - 2];
            let prev_at = |j: i32| &prev[StatTables::row_index(n - 1, j)];
            let mut rows = vec![IntPolynomial::zero(); 2 * n];
            for s in 1..=n as i32 {
                // positive first letter s
                let mut acc = IntPolynomial::zero();
                for j in 1..s.min(n as i32) {
                    acc = acc.add(&prev_at(j).shift(1));
                }
                for j in s..n as i32 {
                    acc = acc.add(prev_at(j));
                }
                for j in 1..n as i32 {
                    acc = acc.add(prev_at(-j));
                }
                rows[StatTables::row_index(n, s)] = acc;

                // negative first letter -s
                let mut acc = IntPolynomial::zero();
                for j in 1..n as i32 {
                    acc = acc.add(&prev_at(j).shift(1));
                }
                for j in s..n as i32 {
                    acc = acc.add(&prev_at(-j).shift(1));
                }
                for j in 1..s.min(n as i32) {
                    acc = acc.add(prev_at(-j));
                }
                rows[StatTables::row_index(n, -s)] = acc;
            }
            polys.push(rows);
        }
        BPlusTable { max_n, polys }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn check_index(&self, n: usize, j: i32) -> Result<()> {
        if n == 0 || n > self.max_n {
            return Err(Error::IndexOutOfRange { index: n as i64, order: self.max_n });
        }
        if j == 0 || j.unsigned_abs() as usize > n {
            return Err(Error::IndexOutOfRange { index: j as i64, order: n });
        }
        Ok(())
    }

    /// B+(n, j)(t) by the recurrence.
    pub fn b_plus(&self, n: usize, j: i32) -> Result<IntPolynomial> {
        self.check_index(n, j)?;
        Ok(self.polys[n - 1][StatTables::row_index(n, j)].clone())
    }

    /// Descent generating function of all of B_n^+.
    pub fn b_plus_total(&self, n: usize) -> Result<IntPolynomial> {
        self.check_index(n, 1)?;
        let mut acc = IntPolynomial::zero();
        for row in &self.polys[n - 1] {
            acc = acc.add(row);
        }
        Ok(acc)
    }

    /// Symmetric family: B+(n,j) + B+(n,n-j+1), or the single middle term
    /// when 2j = n+1. Returns the polynomial and its reference degree.
    pub fn symmetric(&self, n: usize, j: i32) -> Result<(IntPolynomial, usize)> {
        self.check_index(n, j)?;
        let m = j.unsigned_abs() as usize;
        if 2 * m > n + 1 {
            return Err(Error::IndexOutOfRange { index: j as i64, order: n });
        }
        let partner = (n - m + 1) as i32;
        let (a, b) = if j > 0 {
            (m as i32, partner)
        } else {
            (-(m as i32), -partner)
        };
        let poly = if 2 * m == n + 1 {
            self.b_plus(n, a)?
        } else {
            self.b_plus(n, a)?.add(&self.b_plus(n, b)?)
        };
        let reference = if j > 0 { n - 1 } else { n };
        Ok((poly, reference))
    }

    /// Tilde family: t*B+(n,j) + B+(n,n-j+1) for positive j, and
    /// t*B+(n,-(n-j+1)) + B+(n,-j) for barred j; defined for 2|j| <= n.
    pub fn tilde(&self, n: usize, j: i32) -> Result<(IntPolynomial, usize)> {
        self.check_index(n, j)?;
        let m = j.unsigned_abs() as usize;
        if 2 * m > n {
            return Err(Error::IndexOutOfRange { index: j as i64, order: n });
        }
        let partner = (n - m + 1) as i32;
        let (poly, reference) = if j > 0 {
            (
                self.b_plus(n, m as i32)?.shift(1).add(&self.b_plus(n, partner)?),
                n,
            )
        } else {
            (
                self.b_plus(n, -partner)?.shift(1).add(&self.b_plus(n, -(m as i32))?),
                n + 1,
            )
        };
        Ok((poly, reference))
    }

    /// The middle-index tilde polynomial (odd n only) has no printed value;
    /// it degenerates to (1+t) * B+(n,(n+1)/2) and is reported, not asserted.
    pub fn tilde_degenerate_middle(&self, n: usize) -> Result<(IntPolynomial, usize)> {
        if n.is_multiple_of(2) {
            return Err(Error::IndexOutOfRange { index: (n as i64 + 1) / 2, order: n });
        }
        let mid = n.div_ceil(2) as i32;
        let p = self.b_plus(n, mid)?;
        Ok((p.mul(&IntPolynomial::one_plus_t()), n))
    }

    pub fn gamma(&self, n: usize, j: i32, family: Family) -> Result<GammaVector> {
        let (poly, reference) = match family {
            Family::Symmetric => self.symmetric(n, j)?,
            Family::Tilde => self.tilde(n, j)?,
        };
        gamma_expand(&poly, reference)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Symmetric,
    Tilde,
}

/// How to obtain a first-letter polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Enumerate,
    Recurrence,
}

/// First-letter polynomial by direct enumeration or by the recurrence.
pub fn b_plus_poly(n: usize, j: i32, method: Method, bounds: &Bounds) -> Result<IntPolynomial> {
    if j == 0 || j.unsigned_abs() as usize > n {
        return Err(Error::IndexOutOfRange { index: j as i64, order: n });
    }
    match method {
        Method::Recurrence => BPlusTable::up_to(n).b_plus(n, j),
        Method::Enumerate => {
            let members = enumerate_class(n, Class::FirstLetter(j), bounds)?;
            let mut counts = vec![BigInt::from(0); n];
            for m in members {
                counts[m.des_b().0] += 1;
            }
            Ok(IntPolynomial::from_coeffs(counts))
        }
    }
}

/// Descent generating functions of the five standard classes.
pub struct ClassPolys {
    pub b: IntPolynomial,
    pub b_plus: IntPolynomial,
    pub b_minus: IntPolynomial,
    pub b_pp: IntPolynomial,
    pub b_mp: IntPolynomial,
}

pub fn class_polys(n: usize, bounds: &Bounds) -> Result<ClassPolys> {
    let t = StatTables::compute(n, bounds)?;
    Ok(ClassPolys {
        b: t.b_poly(),
        b_plus: t.b_plus_all_poly(),
        b_minus: t.b_minus_poly(),
        b_pp: t.b_pp_poly(),
        b_mp: t.b_mp_poly(),
    })
}

/// Classical type-B Eulerian triangle by its two-term recurrence; this is
/// the independent anchor the enumerated descent polynomials are checked
/// against.
pub fn classical_type_b_eulerian(n: usize) -> IntPolynomial {
    let mut row = vec![BigInt::from(1)];
    for m in 1..=n {
        let mut next = vec![BigInt::from(0); m + 1];
        for (k, item) in next.iter_mut().enumerate() {
            let stay = if k < row.len() {
                &row[k] * BigInt::from(2 * k as u64 + 1)
            } else {
                BigInt::from(0)
            };
            let carry = if k >= 1 && k - 1 < row.len() {
                &row[k - 1] * BigInt::from(2 * (m - k) as u64 + 1)
            } else {
                BigInt::from(0)
            };
            *item = stay + carry;
        }
        row = next;
    }
    IntPolynomial::from_coeffs(row)
}

const SUITE_LEMMA34: &str = "lemma-3.4";
const SUITE_OBS: &str = "observation";
const SUITE_RE: &str = "lemma-re";
const SUITE_52: &str = "thm-5.2";

/// First-letter reversal symmetries and recurrences, printed and corrected
/// forms, for 2 <= n <= max_n.
pub fn verify_lemma_34(max_n: usize, bounds: &Bounds) -> Result<Vec<IdentityRecord>> {
    let table = BPlusTable::up_to(max_n);
    let mut records = Vec::new();

    // item (1): B+(n,s,r) = B+(n,n-s+1,n-1-r)
    let mut ok1 = true;
    let mut witness1 = String::new();
    // item (2) printed: B+(n,-s,r) = B+(n,-(n-s+1)),n-1-r); corrected: n-r
    let mut printed2_witness: Option<String> = None;
    let mut ok2 = true;
    let mut witness2 = String::new();
    for n in 2..=max_n {
        for s in 1..=n as i32 {
            let partner = (n as i32) - s + 1;
            let lhs = table.b_plus(n, s)?;
            let rhs = table.b_plus(n, partner)?.reversed(n - 1)?;
            if lhs != rhs && ok1 {
                ok1 = false;
                witness1 = format!("n={n}, s={s}: {lhs} vs reversed {rhs}");
            }
            let lhs_bar = table.b_plus(n, -s)?;
            let printed = table.b_plus(n, -partner)?.reversed(n - 1);
            let printed_holds = matches!(&printed, Ok(p) if *p == lhs_bar);
            if !printed_holds && printed2_witness.is_none() {
                // minimal failing coefficient within the stated range
                // 1 <= r <= n-1
                let rhs_p = table.b_plus(n, -partner)?;
                for r in 1..n {
                    let printed_val = rhs_p.coeff(n - 1 - r);
                    if lhs_bar.coeff(r) != printed_val {
                        printed2_witness = Some(format!(
                            "n={n}, s={s}, r={r}: count {} vs printed-form value {printed_val}",
                            lhs_bar.coeff(r)
                        ));
                        break;
                    }
                }
            }
            let corrected = table.b_plus(n, -partner)?.reversed(n)?;
            if lhs_bar != corrected && ok2 {
                ok2 = false;
                witness2 = format!("n={n}, s={s}: {lhs_bar} vs {corrected}");
            }
        }
    }
    records.push(IdentityRecord::check(
        SUITE_LEMMA34,
        "first-letter-reversal-positive",
        "lemma-3.4(1)",
        format!("n<={max_n}"),
        ok1,
        || witness1,
    ));
    match (printed2_witness, ok2) {
        (Some(w), true) => records.push(IdentityRecord::corrected(
            SUITE_LEMMA34,
            "first-letter-reversal-barred",
            "lemma-3.4(2)",
            format!("n<={max_n}"),
            w,
            "printed exponent n-r-1 fails; the degree-n reversal (exponent n-r) holds".into(),
        )),
        (None, true) => records.push(IdentityRecord::pass(
            SUITE_LEMMA34,
            "first-letter-reversal-barred",
            "lemma-3.4(2)",
            format!("n<={max_n}"),
        )),
        (_, false) => records.push(IdentityRecord::fail(
            SUITE_LEMMA34,
            "first-letter-reversal-barred",
            "lemma-3.4(2)",
            format!("n<={max_n}"),
            witness2,
        )),
    }

    // items (3), (4): the recurrence equals direct enumeration
    let enum_max = max_n.min(bounds.max_n);
    let mut ok34 = true;
    let mut witness34 = String::new();
    'outer: for n in 1..=enum_max {
        let stats = StatTables::compute(n, bounds)?;
        for j in StatTables::first_letters(n) {
            let rec = table.b_plus(n, j)?;
            let en = stats.b_plus_poly(j);
            if rec != en {
                ok34 = false;
                witness34 = format!("n={n}, j={j}: recurrence {rec} vs enumeration {en}");
                break 'outer;
            }
        }
    }
    records.push(IdentityRecord::check(
        SUITE_LEMMA34,
        "first-letter-recurrences",
        "lemma-3.4(3),(4)",
        format!("n<={enum_max}"),
        ok34,
        || witness34,
    ));
    Ok(records)
}

/// B+(n,1) = B+ of order n-1; B+(n,n) = its reversal (= B- of order n-1);
/// and the printed claim that the two add up to the full order-n descent
/// polynomial, which actually holds one order lower.
pub fn verify_observation(max_n: usize, bounds: &Bounds) -> Result<Vec<IdentityRecord>> {
    let table = BPlusTable::up_to(max_n);
    let mut records = Vec::new();
    let mut ok_first = true;
    let mut ok_last = true;
    let mut printed_witness: Option<String> = None;
    let mut ok_corrected = true;
    let mut w_first = String::new();
    let mut w_last = String::new();
    let mut w_corr = String::new();
    for n in 2..=max_n {
        let first = table.b_plus(n, 1)?;
        let b_plus_prev = table.b_plus_total(n - 1)?;
        if first != b_plus_prev && ok_first {
            ok_first = false;
            w_first = format!("n={n}: {first} vs {b_plus_prev}");
        }
        let last = table.b_plus(n, n as i32)?;
        let reversed = b_plus_prev.reversed(n - 1)?;
        if last != reversed && ok_last {
            ok_last = false;
            w_last = format!("n={n}: {last} vs {reversed}");
        }
        let sum = first.add(&last);
        let b_prev = class_polys(n - 1, bounds)?.b;
        let b_here = class_polys(n, bounds)?.b;
        if sum == b_prev {
            if sum != b_here && printed_witness.is_none() {
                printed_witness = Some(format!(
                    "n={n}: sum {sum} equals the order-{} polynomial, not the order-{n} one",
                    n - 1
                ));
            }
        } else if ok_corrected {
            ok_corrected = false;
            w_corr = format!("n={n}: {sum} vs {b_prev}");
        }
    }
    let params = format!("2<=n<={max_n}");
    records.push(IdentityRecord::check(
        SUITE_OBS,
        "first-column-drops-order",
        "observation",
        params.clone(),
        ok_first,
        || w_first,
    ));
    records.push(IdentityRecord::check(
        SUITE_OBS,
        "last-column-is-reversal",
        "observation",
        params.clone(),
        ok_last,
        || w_last,
    ));
    match (printed_witness, ok_corrected) {
        (Some(w), true) => records.push(IdentityRecord::corrected(
            SUITE_OBS,
            "extreme-columns-sum",
            "observation",
            params,
            w,
            "printed right side names order n; the sum equals the order n-1 descent polynomial"
                .into(),
        )),
        (None, true) => records.push(IdentityRecord::pass(
            SUITE_OBS,
            "extreme-columns-sum",
            "observation",
            params,
        )),
        (_, false) => records.push(IdentityRecord::fail(
            SUITE_OBS,
            "extreme-columns-sum",
            "observation",
            params,
            w_corr,
        )),
    }
    Ok(records)
}

/// The six recurrences for the symmetric and tilde families, checked both
/// as polynomial identities and at gamma level with explicit reference
/// shifts, for 3 <= n <= max_n.
pub fn verify_lemma_re(max_n: usize) -> Result<Vec<IdentityRecord>> {
    let table = BPlusTable::up_to(max_n);
    let mut records = Vec::new();
    for item in 1..=6 {
        let mut ok_poly = true;
        let mut ok_gamma = true;
        let mut witness = String::new();
        for n in 3..=max_n {
            for (lhs, rhs_terms, j) in lemma_re_sides(&table, item, n)? {
                let rhs = rhs_terms
                    .iter()
                    .fold(IntPolynomial::zero(), |acc, (c, p, _)| {
                        acc.add(&p.scale(&BigInt::from(*c)))
                    });
                if lhs.0 != rhs {
                    if ok_poly {
                        witness = format!("item {item}, n={n}, j={j}: {} vs {rhs}", lhs.0);
                    }
                    ok_poly = false;
                    continue;
                }
                // gamma level with shift semantics
                let lhs_gamma = gamma_expand(&lhs.0, lhs.1)?;
                let mut acc = GammaVector::new(lhs.1, vec![]);
                for (c, p, reference) in &rhs_terms {
                    let g = gamma_expand(p, *reference)?.shifted_to(lhs.1)?;
                    let scaled = GammaVector {
                        ref_degree: g.ref_degree,
                        entries: g.entries.iter().map(|e| e * BigInt::from(*c)).collect(),
                    };
                    acc = acc.add(&scaled)?;
                }
                if lhs_gamma != acc {
                    if ok_gamma {
                        witness = format!(
                            "item {item}, n={n}, j={j}: gamma {:?} vs {:?}",
                            lhs_gamma, acc
                        );
                    }
                    ok_gamma = false;
                }
            }
        }
        records.push(IdentityRecord::check(
            SUITE_RE,
            &format!("family-recurrence-{item}-polynomial"),
            &format!("lemma-re({item})"),
            format!("3<=n<={max_n}"),
            ok_poly,
            || witness.clone(),
        ));
        records.push(IdentityRecord::check(
            SUITE_RE,
            &format!("family-recurrence-{item}-gamma"),
            &format!("lemma-re({item})"),
            format!("3<=n<={max_n}"),
            ok_gamma,
            || witness.clone(),
        ));
    }
    Ok(records)
}

type ReSide = ((IntPolynomial, usize), Vec<(i64, IntPolynomial, usize)>, i32);

/// Left side (polynomial, reference) and right-side terms
/// (multiplier, polynomial, reference) of one recurrence instance.
fn lemma_re_sides(table: &BPlusTable, item: usize, n: usize) -> Result<Vec<ReSide>> {
    let mut out = Vec::new();
    let half = n / 2; // index bound for the order n-1 families
    let one_plus_t = IntPolynomial::one_plus_t();
    match item {
        1 | 2 if n % 2 == 1 => {
            let mid = n.div_ceil(2) as i32;
            let mut terms = Vec::new();
            for k in 1..=(n - 1) / 2 {
                let k = k as i32;
                if item == 1 {
                    let (tk, tr) = table.tilde(n - 1, k)?;
                    terms.push((1, tk, tr));
                    let (bk, br) = table.symmetric(n - 1, -k)?;
                    terms.push((1, bk, br));
                } else {
                    let (bk, br) = table.symmetric(n - 1, k)?;
                    terms.push((1, bk.shift(1), br + 2));
                    let (tk, tr) = table.tilde(n - 1, -k)?;
                    terms.push((1, tk, tr));
                }
            }
            let lhs = table.symmetric(n, if item == 1 { mid } else { -mid })?;
            out.push((lhs, terms, if item == 1 { mid } else { -mid }));
        }
        1 | 2 => {}
        3..=6 => {
            for j in 1..n.div_ceil(2) as i32 {
                let mut terms: Vec<(i64, IntPolynomial, usize)> = Vec::new();
                match item {
                    3 => {
                        for k in 1..j {
                            let (p, r) = table.tilde(n - 1, k)?;
                            terms.push((2, p, r));
                        }
                        for k in j..=half as i32 {
                            let (p, r) = table.symmetric(n - 1, k)?;
                            terms.push((1, p.mul(&one_plus_t), r + 1));
                        }
                        for k in 1..=half as i32 {
                            let (p, r) = table.symmetric(n - 1, -k)?;
                            terms.push((2, p, r));
                        }
                    }
                    4 => {
                        for k in 1..=half as i32 {
                            let (p, r) = table.symmetric(n - 1, k)?;
                            terms.push((2, p.shift(1), r + 2));
                        }
                        for k in 1..j {
                            let (p, r) = table.tilde(n - 1, -k)?;
                            terms.push((2, p, r));
                        }
                        for k in j..=half as i32 {
                            let (p, r) = table.symmetric(n - 1, -k)?;
                            terms.push((1, p.mul(&one_plus_t), r + 1));
                        }
                    }
                    5 => {
                        for k in 1..j {
                            let (p, r) = table.tilde(n - 1, k)?;
                            terms.push((1, p.mul(&one_plus_t), r + 1));
                        }
                        for k in j..=half as i32 {
                            let (p, r) = table.symmetric(n - 1, k)?;
                            terms.push((2, p.shift(1), r + 2));
                        }
                        for k in 1..=half as i32 {
                            let (p, r) = table.symmetric(n - 1, -k)?;
                            terms.push((1, p.mul(&one_plus_t), r + 1));
                        }
                    }
                    6 => {
                        for k in 1..=half as i32 {
                            let (p, r) = table.symmetric(n - 1, k)?;
                            terms.push((1, p.shift(1).mul(&one_plus_t), r + 3));
                        }
                        for k in j..=half as i32 {
                            let (p, r) = table.symmetric(n - 1, -k)?;
                            terms.push((2, p.shift(1), r + 2));
                        }
                        for k in 1..j {
                            let (p, r) = table.tilde(n - 1, -k)?;
                            terms.push((1, p.mul(&one_plus_t), r + 1));
                        }
                    }
                    _ => unreachable!(),
                }
                let (lhs, signed_j) = match item {
                    3 => (table.symmetric(n, j)?, j),
                    4 => (table.symmetric(n, -j)?, -j),
                    5 => (table.tilde(n, j)?, j),
                    6 => (table.tilde(n, -j)?, -j),
                    _ => unreachable!(),
                };
                out.push((lhs, terms, signed_j));
            }
        }
        _ => {
            return Err(Error::InvalidInput(format!("no recurrence item {item}")));
        }
    }
    Ok(out)
}

/// Slide expansions of the two symmetric class polynomials, the binomial
/// relations behind them, and the coefficient symmetries; printed and
/// corrected exponents both evaluated.
pub fn verify_theorem_52(max_n: usize, bounds: &Bounds) -> Result<Vec<IdentityRecord>> {
    let mut records = Vec::new();
    let mut ok_pp_exp = true;
    let mut w_pp_exp = String::new();
    let mut printed_mp_exp_witness: Option<String> = None;
    let mut ok_mp_exp = true;
    let mut w_mp_exp = String::new();
    let mut ok_pp_binom = true;
    let mut w_pp_binom = String::new();
    let mut printed_mp_binom_witness: Option<String> = None;
    let mut ok_mp_binom = true;
    let mut w_mp_binom = String::new();
    let mut ok_pp_sym = true;
    let mut w_pp_sym = String::new();
    let mut printed_mp_sym_witness: Option<String> = None;
    let mut ok_mp_sym = true;
    let mut w_mp_sym = String::new();
    let mut ok_diag = true;
    let mut w_diag = String::new();

    for n in 2..=max_n.min(bounds.max_n) {
        let t = StatTables::compute(n, bounds)?;
        let b_pp = t.b_pp_poly();
        let b_mp = t.b_mp_poly();
        let diag_pp = t.b_pp_diag();
        let diag_mp = t.b_mp_diag();

        // expansion with exponent n-1-2s for the all-positive class
        let mut acc = IntPolynomial::zero();
        for (s, &c) in diag_pp.iter().enumerate() {
            if c == 0 {
                continue;
            }
            acc = acc.add(
                &IntPolynomial::one_plus_t()
                    .pow(n - 1 - 2 * s)
                    .scale(&BigInt::from(c))
                    .shift(s),
            );
        }
        if acc != b_pp && ok_pp_exp {
            ok_pp_exp = false;
            w_pp_exp = format!("n={n}: {acc} vs {b_pp}");
        }

        // barred class: printed exponent n-1-2s, corrected n-2s
        let expand_mp = |extra: usize| {
            let mut acc = IntPolynomial::zero();
            for (s, &c) in diag_mp.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let e = n + extra;
                if e < 1 + 2 * s {
                    return None;
                }
                acc = acc.add(
                    &IntPolynomial::one_plus_t()
                        .pow(e - 1 - 2 * s)
                        .scale(&BigInt::from(c))
                        .shift(s),
                );
            }
            Some(acc)
        };
        let printed = expand_mp(0);
        if printed.as_ref() != Some(&b_mp) && printed_mp_exp_witness.is_none() && !b_mp.is_zero()
        {
            printed_mp_exp_witness = Some(format!(
                "n={n}: printed exponent gives {}, census gives {b_mp}",
                printed.map_or("no expansion".into(), |p| p.to_string())
            ));
        }
        let corrected = expand_mp(1).expect("corrected exponent is nonnegative");
        if corrected != b_mp && ok_mp_exp {
            ok_mp_exp = false;
            w_mp_exp = format!("n={n}: {corrected} vs {b_mp}");
        }

        // binomial refinements of the full (k, s) tables
        for k in 0..=n {
            for (s, row_ok) in [(true, &t.w_pp), (false, &t.w_mp)] {
                let _ = (s, row_ok);
            }
            for s in 0..t.w_pp[k].len() {
                let expected = if n > 2 * s {
                    binomial(n - 1 - 2 * s, k.wrapping_sub(s)) * BigInt::from(diag_pp[s])
                } else {
                    BigInt::from(0)
                };
                let expected = if k >= s { expected } else { BigInt::from(0) };
                if BigInt::from(t.w_pp[k][s]) != expected && ok_pp_binom {
                    ok_pp_binom = false;
                    w_pp_binom =
                        format!("n={n}, k={k}, s={s}: {} vs {expected}", t.w_pp[k][s]);
                }
                let actual_mp = BigInt::from(t.w_mp[k][s]);
                let printed_mp = if k >= s && n > 2 * s {
                    binomial(n - 1 - 2 * s, k - s) * BigInt::from(diag_mp[s])
                } else {
                    BigInt::from(0)
                };
                if actual_mp != printed_mp && printed_mp_binom_witness.is_none() {
                    printed_mp_binom_witness = Some(format!(
                        "n={n}, k={k}, s={s}: count {actual_mp} vs printed-form value {printed_mp}"
                    ));
                }
                let corrected_mp = if k >= s && n >= 2 * s {
                    binomial(n - 2 * s, k - s) * BigInt::from(diag_mp[s])
                } else {
                    BigInt::from(0)
                };
                if actual_mp != corrected_mp && ok_mp_binom {
                    ok_mp_binom = false;
                    w_mp_binom = format!("n={n}, k={k}, s={s}: {actual_mp} vs {corrected_mp}");
                }
            }
        }

        // coefficient symmetries
        if !b_pp.is_symmetric(n - 1)? && ok_pp_sym {
            ok_pp_sym = false;
            w_pp_sym = format!("n={n}: {b_pp} not symmetric at {}", n - 1);
        }
        if !b_mp.is_symmetric(n - 1).unwrap_or(false) && printed_mp_sym_witness.is_none() {
            printed_mp_sym_witness = Some(format!(
                "n={n}: {b_mp} is not symmetric about degree {}; it is symmetric about degree {n}",
                n - 1
            ));
        }
        if !b_mp.is_symmetric(n)? && ok_mp_sym {
            ok_mp_sym = false;
            w_mp_sym = format!("n={n}: {b_mp} not symmetric at {n}");
        }

        if !t.diag_slides_all_len2 && ok_diag {
            ok_diag = false;
            w_diag = format!("n={n}: a member with k descents and k+1 slides has a long slide");
        }
    }

    let params = format!("n<={}", max_n.min(bounds.max_n));
    records.push(IdentityRecord::check(
        SUITE_52,
        "slide-expansion-all-positive",
        "thm-5.2",
        params.clone(),
        ok_pp_exp,
        || w_pp_exp,
    ));
    match (printed_mp_exp_witness, ok_mp_exp) {
        (Some(w), true) => records.push(IdentityRecord::corrected(
            SUITE_52,
            "slide-expansion-barred",
            "thm-5.2",
            params.clone(),
            w,
            "printed exponent n-1-2s fails; n-2s holds because the leading 0 joins a slide when \
             the first letter is negative"
                .into(),
        )),
        (None, true) => records.push(IdentityRecord::pass(
            SUITE_52,
            "slide-expansion-barred",
            "thm-5.2",
            params.clone(),
        )),
        (_, false) => records.push(IdentityRecord::fail(
            SUITE_52,
            "slide-expansion-barred",
            "thm-5.2",
            params.clone(),
            w_mp_exp,
        )),
    }
    records.push(IdentityRecord::check(
        SUITE_52,
        "slide-binomial-all-positive",
        "prop-slide",
        params.clone(),
        ok_pp_binom,
        || w_pp_binom,
    ));
    match (printed_mp_binom_witness, ok_mp_binom) {
        (Some(w), true) => records.push(IdentityRecord::corrected(
            SUITE_52,
            "slide-binomial-barred",
            "prop-slide",
            params.clone(),
            w,
            "printed binomial C(n-1-2s, k-s) fails; C(n-2s, k-s) holds".into(),
        )),
        (None, true) => records.push(IdentityRecord::pass(
            SUITE_52,
            "slide-binomial-barred",
            "prop-slide",
            params.clone(),
        )),
        (_, false) => records.push(IdentityRecord::fail(
            SUITE_52,
            "slide-binomial-barred",
            "prop-slide",
            params.clone(),
            w_mp_binom,
        )),
    }
    records.push(IdentityRecord::check(
        SUITE_52,
        "descent-symmetry-all-positive",
        "eq-sym",
        params.clone(),
        ok_pp_sym,
        || w_pp_sym,
    ));
    match (printed_mp_sym_witness, ok_mp_sym) {
        (Some(w), true) => records.push(IdentityRecord::corrected(
            SUITE_52,
            "descent-symmetry-barred",
            "eq-sym",
            params.clone(),
            w,
            "printed index n-k-1 fails; the barred class is symmetric under k -> n-k".into(),
        )),
        (None, true) => records.push(IdentityRecord::pass(
            SUITE_52,
            "descent-symmetry-barred",
            "eq-sym",
            params.clone(),
        )),
        (_, false) => records.push(IdentityRecord::fail(
            SUITE_52,
            "descent-symmetry-barred",
            "eq-sym",
            params.clone(),
            w_mp_sym,
        )),
    }
    records.push(IdentityRecord::check(
        SUITE_52,
        "diagonal-slides-have-length-two",
        "w-diagonal",
        params,
        ok_diag,
        || w_diag,
    ));
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_matches_enumeration() {
        let b = Bounds::default();
        let table = BPlusTable::up_to(6);
        for n in 1..=6usize {
            let stats = StatTables::compute(n, &b).unwrap();
            for j in StatTables::first_letters(n) {
                assert_eq!(
                    table.b_plus(n, j).unwrap(),
                    stats.b_plus_poly(j),
                    "n={n}, j={j}"
                );
            }
        }
    }

    #[test]
    fn b_plus_poly_both_methods() {
        let b = Bounds::default();
        assert_eq!(
            b_plus_poly(3, 1, Method::Enumerate, &b).unwrap(),
            IntPolynomial::from(vec![1, 3])
        );
        assert_eq!(
            b_plus_poly(3, -3, Method::Recurrence, &b).unwrap(),
            IntPolynomial::from(vec![0, 3, 1])
        );
        assert!(b_plus_poly(3, 4, Method::Recurrence, &b).is_err());
        assert!(b_plus_poly(3, 0, Method::Recurrence, &b).is_err());
    }

    #[test]
    fn first_letter_one_drops_the_order() {
        let table = BPlusTable::up_to(7);
        for n in 2..=7 {
            assert_eq!(
                table.b_plus(n, 1).unwrap(),
                table.b_plus_total(n - 1).unwrap()
            );
        }
    }

    #[test]
    fn first_letter_class_sizes() {
        // each first-letter class of order n >= 2 holds 2^(n-2) (n-1)!
        // members with positive last letter
        let table = BPlusTable::up_to(7);
        for n in 2..=7usize {
            let expected =
                BigInt::from((1u64 << (n - 2)) * (1..=(n - 1) as u64).product::<u64>());
            for j in StatTables::first_letters(n) {
                assert_eq!(table.b_plus(n, j).unwrap().coeff_sum(), expected, "n={n}, j={j}");
            }
        }
    }

    #[test]
    fn symmetric_family_values() {
        let table = BPlusTable::up_to(6);
        let (p, r) = table.symmetric(3, 1).unwrap();
        assert_eq!((p, r), (IntPolynomial::from(vec![1, 6, 1]), 2));
        let (p, r) = table.symmetric(3, -1).unwrap();
        assert_eq!((p, r), (IntPolynomial::from(vec![0, 4, 4]), 3));
        let (p, r) = table.symmetric(3, 2).unwrap();
        assert_eq!((p, r), (IntPolynomial::from(vec![0, 4]), 2));
        // t-coefficient 168 in the middle symmetric family at order 6
        let (p, _) = table.symmetric(6, 3).unwrap();
        assert_eq!(p.coeff(1), BigInt::from(168));
        assert!(table.symmetric(4, 3).is_err());
    }

    #[test]
    fn tilde_family_values() {
        let table = BPlusTable::up_to(5);
        let (p, r) = table.tilde(3, 1).unwrap();
        assert_eq!((p, r), (IntPolynomial::from(vec![0, 4, 4]), 3));
        let (p, r) = table.tilde(4, 1).unwrap();
        assert_eq!((p, r), (IntPolynomial::from(vec![0, 8, 32, 8]), 4));
        let (p, r) = table.tilde(4, -1).unwrap();
        assert_eq!((p, r), (IntPolynomial::from(vec![0, 1, 23, 23, 1]), 5));
        assert!(table.tilde(3, 2).is_err());
        let (p, r) = table.tilde_degenerate_middle(3).unwrap();
        assert_eq!((p.clone(), r), (IntPolynomial::from(vec![0, 4, 4]), 3));
        assert_eq!(
            gamma_expand(&p, r).unwrap().entries,
            vec![BigInt::from(0), BigInt::from(4)]
        );
    }

    #[test]
    fn gamma_table_anchors() {
        let table = BPlusTable::up_to(6);
        let g = |n, j, f| table.gamma(n, j, f).unwrap().entries;
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();

        assert_eq!(g(2, 1, Family::Symmetric), ints(&[1]));
        assert_eq!(g(2, -1, Family::Symmetric), ints(&[0, 2]));
        assert_eq!(g(2, 1, Family::Tilde), ints(&[0, 2]));
        assert_eq!(g(2, -1, Family::Tilde), ints(&[0, 1]));

        assert_eq!(g(3, 1, Family::Symmetric), ints(&[1, 4]));
        assert_eq!(g(3, 2, Family::Symmetric), ints(&[0, 4]));
        assert_eq!(g(3, -1, Family::Symmetric), ints(&[0, 4]));
        assert_eq!(g(3, -2, Family::Symmetric), ints(&[0, 2]));
        assert_eq!(g(3, 1, Family::Tilde), ints(&[0, 4]));
        assert_eq!(g(3, -1, Family::Tilde), ints(&[0, 1, 4]));

        assert_eq!(g(4, 1, Family::Symmetric), ints(&[1, 20]));
        assert_eq!(g(4, 2, Family::Symmetric), ints(&[0, 24]));
        assert_eq!(g(4, -1, Family::Symmetric), ints(&[0, 8, 16]));
        assert_eq!(g(4, -2, Family::Symmetric), ints(&[0, 6, 24]));
        assert_eq!(g(4, 1, Family::Tilde), ints(&[0, 8, 16]));
        assert_eq!(g(4, 2, Family::Tilde), ints(&[0, 10, 8]));
        assert_eq!(g(4, -1, Family::Tilde), ints(&[0, 1, 20]));
        assert_eq!(g(4, -2, Family::Tilde), ints(&[0, 2, 16]));

        assert_eq!(g(6, 1, Family::Symmetric), ints(&[1, 232, 976]));
        assert_eq!(g(6, 2, Family::Symmetric), ints(&[0, 192, 1152]));
        assert_eq!(g(6, 3, Family::Symmetric), ints(&[0, 168, 1248]));
    }

    #[test]
    fn classical_triangle() {
        assert_eq!(classical_type_b_eulerian(2), IntPolynomial::from(vec![1, 6, 1]));
        assert_eq!(
            classical_type_b_eulerian(3),
            IntPolynomial::from(vec![1, 23, 23, 1])
        );
        assert_eq!(
            classical_type_b_eulerian(5),
            IntPolynomial::from(vec![1, 237, 1682, 1682, 237, 1])
        );
    }

    #[test]
    fn class_polynomials() {
        let b = Bounds::default();
        let c = class_polys(3, &b).unwrap();
        assert_eq!(c.b, IntPolynomial::from(vec![1, 23, 23, 1]));
        assert_eq!(c.b_pp, IntPolynomial::from(vec![1, 10, 1]));
        assert_eq!(c.b_mp, IntPolynomial::from(vec![0, 6, 6]));
        assert_eq!(c.b_plus, c.b_pp.add(&c.b_mp));
        assert_eq!(c.b.coeff_sum(), BigInt::from(48));
        assert_eq!(c.b_plus.add(&c.b_minus), c.b);
    }

    #[test]
    fn lemma_re_small_instance() {
        // item 3 at n=3, j=1: the symmetric family at (3,1) decomposes as
        // (1+t) * symmetric(2,1) + 2 * symmetric(2,-1).
        let table = BPlusTable::up_to(3);
        let (lhs, _) = table.symmetric(3, 1).unwrap();
        let (a, _) = table.symmetric(2, 1).unwrap();
        let (b, _) = table.symmetric(2, -1).unwrap();
        let rhs = a
            .mul(&IntPolynomial::one_plus_t())
            .add(&b.scale(&BigInt::from(2)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn verification_suites_pass() {
        use crate::report::Status;
        let b = Bounds::default();
        for r in verify_lemma_34(6, &b).unwrap() {
            if r.identity == "first-letter-reversal-barred" {
                assert_eq!(r.status, Status::CorrectedFormPasses, "{r:?}");
                assert!(r.witness.as_deref().unwrap().contains("n=2, s=1, r=1"));
            } else {
                assert_eq!(r.status, Status::Pass, "{r:?}");
            }
        }
        for r in verify_observation(5, &b).unwrap() {
            if r.identity == "extreme-columns-sum" {
                assert_eq!(r.status, Status::CorrectedFormPasses, "{r:?}");
            } else {
                assert_eq!(r.status, Status::Pass, "{r:?}");
            }
        }
        for r in verify_lemma_re(6).unwrap() {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
        for r in verify_theorem_52(5, &b).unwrap() {
            match r.identity.as_str() {
                "slide-expansion-barred" | "slide-binomial-barred" | "descent-symmetry-barred" => {
                    assert_eq!(r.status, Status::CorrectedFormPasses, "{r:?}")
                }
                _ => assert_eq!(r.status, Status::Pass, "{r:?}"),
            }
        }
    }
}
