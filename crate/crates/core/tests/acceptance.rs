//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. All comparisons are exact; the only tolerances are the
//! stated wall-clock budgets.

use std::time::Instant;

use num_bigint::BigInt;

use ivgamma_core::balanced_ffk::{
    dec_complex, gamma_of_type_b, is_k_ffk, search_good_certificate, verify_lemma_ineq, GoodMode,
    SearchOutcome,
};
use ivgamma_core::bounds::Bounds;
use ivgamma_core::eulerian::{
    classical_type_b_eulerian, verify_lemma_34, verify_lemma_re, verify_theorem_52, BPlusTable,
    Family,
};
use ivgamma_core::gamma_main::{gamma_int_geometric, SymmetricH};
use ivgamma_core::interval::{h_transform_matrix, verify_subdivision_transforms};
use ivgamma_core::local_h::{
    b_plus_plus_poly, boundary_h_check, local_h_definition, local_h_derangement,
    local_h_excedance, local_gamma, question_4_9_report,
};
use ivgamma_core::polynomials::{gamma_expand, IntPolynomial};
use ivgamma_core::report::{IdentityRecord, Status};
use ivgamma_core::signed_perms::{Interpretation, SignedPerm, StatTables};
use ivgamma_core::simplicial::generators;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn all_pass(records: &[IdentityRecord]) -> bool {
    records.iter().all(|r| r.status == Status::Pass)
}

fn conclude(criterion: &str, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} -- {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_01_worked_transform_columns() {
    let started = Instant::now();
    let m = h_transform_matrix(5).unwrap();
    let pair = |r: usize, s: usize| m[r][s].clone() + &m[r][5 - s];
    let ok = pair(1, 0) == BigInt::from(237)
        && pair(1, 1) == BigInt::from(192)
        && pair(1, 2) == BigInt::from(168)
        && pair(2, 0) == BigInt::from(1682)
        && pair(2, 1) == BigInt::from(1728)
        && pair(2, 2) == BigInt::from(1752);
    let elapsed = started.elapsed();
    conclude(
        "1",
        ok && elapsed.as_secs_f64() < 5.0,
        &format!("degree-5 transform columns (237,192,168)/(1682,1728,1752) in {elapsed:.2?}"),
    );
}

#[test]
fn criterion_02_gamma_tables() {
    let table = BPlusTable::up_to(6);
    let g = |n, j, f| table.gamma(n, j, f).unwrap().entries;
    let ok = g(6, 1, Family::Symmetric) == ints(&[1, 232, 976])
        && g(6, 3, Family::Symmetric) == ints(&[0, 168, 1248])
        && g(4, 1, Family::Symmetric) == ints(&[1, 20])
        && g(3, 1, Family::Symmetric) == ints(&[1, 4])
        && g(3, 2, Family::Symmetric) == ints(&[0, 4])
        && g(2, -1, Family::Symmetric) == ints(&[0, 2])
        && g(4, 1, Family::Tilde) == ints(&[0, 8, 16])
        && g(4, -1, Family::Tilde) == ints(&[0, 1, 20]);
    // the misprinted entry must compute to (0,192,1152) and be flagged
    let corrected = g(6, 2, Family::Symmetric) == ints(&[0, 192, 1152]);
    let opts = ivgamma_core::suites::SuiteOptions { max_n: 6, max_dim: 2, seed: 0 };
    let records = ivgamma_core::suites::run_suite("gamma-tables", &opts).unwrap();
    let flagged = records.iter().any(|r| {
        r.identity == "gamma-6-2"
            && r.status == Status::CorrectedFormPasses
            && r.witness.as_deref().is_some_and(|w| w.contains("152"))
    });
    conclude(
        "2",
        ok && corrected && flagged,
        "printed gamma tables reproduced; (6,2) computes to (0,192,1152) and the report flags \
         the printed 152",
    );
}

#[test]
fn criterion_03_type_b_eulerian_anchor() {
    let bounds = Bounds::default();
    let mut ok = true;
    for n in 1..=7 {
        let census = ivgamma_core::eulerian::class_polys(n, &bounds).unwrap().b;
        if census != classical_type_b_eulerian(n) {
            ok = false;
        }
    }
    ok = ok
        && classical_type_b_eulerian(2) == IntPolynomial::from(vec![1, 6, 1])
        && classical_type_b_eulerian(3) == IntPolynomial::from(vec![1, 23, 23, 1])
        && classical_type_b_eulerian(5)
            == IntPolynomial::from(vec![1, 237, 1682, 1682, 237, 1]);
    conclude("3", ok, "descent census equals the classical triangle for n <= 7");
}

#[test]
fn criterion_04_geometric_triple_agreement() {
    let started = Instant::now();
    let mut records = Vec::new();
    for k in 1..=4 {
        records
            .extend(verify_subdivision_transforms(&generators::simplex(k).unwrap(), "s").unwrap());
    }
    for k in 2..=5 {
        records.extend(
            verify_subdivision_transforms(&generators::simplex_boundary(k).unwrap(), "b").unwrap(),
        );
    }
    for n in 2..=4 {
        records.extend(
            verify_subdivision_transforms(&generators::cross_polytope_boundary(n).unwrap(), "c")
                .unwrap(),
        );
    }
    let elapsed = started.elapsed();
    conclude(
        "4",
        all_pass(&records) && elapsed.as_secs() < 60,
        &format!(
            "{} transform agreements, zero tolerance, in {elapsed:.2?}",
            records.len()
        ),
    );
}

#[test]
fn criterion_05_recurrence_suites() {
    let bounds = Bounds::default();
    let l34 = verify_lemma_34(7, &bounds).unwrap();
    let mut ok = true;
    for r in &l34 {
        match r.identity.as_str() {
            "first-letter-reversal-barred" => {
                ok &= r.status == Status::CorrectedFormPasses
                    && r.witness.as_deref().is_some_and(|w| w.contains("n=2, s=1, r=1"));
            }
            _ => ok &= r.status == Status::Pass,
        }
    }
    let re = verify_lemma_re(8).unwrap();
    ok &= all_pass(&re);
    conclude(
        "5",
        ok,
        "items (1),(3),(4) verbatim for n <= 7; item (2) corrected with witness (n=2,s=1,r=1); \
         all six family recurrences pass for n <= 8",
    );
}

#[test]
fn criterion_06_slides() {
    let bounds = Bounds::default();
    let records = verify_theorem_52(7, &bounds).unwrap();
    let mut ok = true;
    for r in &records {
        match r.identity.as_str() {
            "slide-expansion-barred" | "slide-binomial-barred" | "descent-symmetry-barred" => {
                ok &= r.status == Status::CorrectedFormPasses;
            }
            _ => ok &= r.status == Status::Pass,
        }
    }
    let t3 = StatTables::compute(3, &bounds).unwrap();
    let t2 = StatTables::compute(2, &bounds).unwrap();
    ok &= t3.b_pp_diag()[..2] == [1, 8] && t3.b_mp_diag()[1] == 6 && t2.b_mp_diag()[1] == 2;
    let a = SignedPerm::new(vec![3, -5, 7, 1, -6, 8, -9, -4, 2]).unwrap();
    let b = SignedPerm::new(vec![5, 6, -8, -1, 2, -9, -7, 3, 4]).unwrap();
    ok &= a.slides().count() == 4 && b.slides().count() == 3 && b.des_b().0 == 2;
    conclude(
        "6",
        ok,
        "expansions hold with exponents n-1-2s and n-2s for n <= 7; anchors and the two \
         displayed slide decompositions agree",
    );
}

#[test]
fn criterion_07_boundary_proposition() {
    let mut ok = true;
    for n in 2..=5 {
        ok &= all_pass(&boundary_h_check(n, 5).unwrap());
    }
    ok &= b_plus_plus_poly(2).unwrap() == IntPolynomial::from(vec![1, 1]);
    ok &= b_plus_plus_poly(3).unwrap() == IntPolynomial::from(vec![1, 10, 1]);
    conclude(
        "7",
        ok,
        "h of the subdivision boundary equals the all-positive class polynomial for n <= 5",
    );
}

#[test]
fn criterion_08_local_h() {
    let bounds = Bounds::default();
    let mut ok = true;
    for n in 1..=5 {
        ok &= local_h_definition(n, 5).unwrap() == local_h_derangement(n).unwrap();
    }
    ok &= local_h_definition(1, 5).unwrap().is_zero();
    ok &= local_h_definition(2, 5).unwrap() == IntPolynomial::from(vec![0, 3]);
    ok &= local_h_definition(3, 5).unwrap() == IntPolynomial::from(vec![0, 7, 7]);
    for n in 1..=6 {
        let ell = local_h_derangement(n).unwrap();
        ok &= ell.is_unimodal_nonneg();
        ok &= ell.is_zero() || ell.is_symmetric(n).unwrap();
        ok &= local_gamma(n, 5).unwrap().is_nonnegative();
    }
    // the excedance route resolved by calibration; it must match
    for n in 2..=5 {
        ok &= local_h_excedance(n, &Interpretation::CALIBRATED, &bounds).unwrap()
            == local_h_derangement(n).unwrap();
    }
    conclude(
        "8",
        ok,
        "defining and derangement routes agree for n <= 5 with the stated anchors; shape and \
         local gamma nonnegativity hold to n = 6; the calibrated excedance route matches",
    );
}

#[test]
fn criterion_09_question_4_9() {
    let bounds = Bounds::default();
    let records = question_4_9_report(5, &bounds).unwrap();
    conclude(
        "9",
        all_pass(&records),
        "restriction boundary differences equal the negative-first class polynomials with \
         slide-diagonal gamma entries for |F| <= 5",
    );
}

#[test]
fn criterion_10_balanced_ffk() {
    let mut ok = true;
    // face counts match the type-B gamma vector up to order 7
    for n in 2..=7 {
        let (complex, colors) = dec_complex(n, n <= 6).unwrap();
        let f: Vec<BigInt> = complex.f_vector().0.iter().map(|&x| BigInt::from(x)).collect();
        let mut g = gamma_of_type_b(n).unwrap().entries;
        while g.last().is_some_and(|x| x == &BigInt::from(0)) {
            g.pop();
        }
        ok &= f == g;
        if n <= 6 {
            ok &= complex.is_balanced_coloring(&colors);
        }
    }
    ok &= all_pass(&verify_lemma_ineq(8).unwrap());
    // gamma of the subdivision over the corpus is a balanced f-vector
    for base in [
        generators::simplex_boundary(3).unwrap(),
        generators::simplex_boundary(4).unwrap(),
        generators::simplex_boundary(5).unwrap(),
        generators::cross_polytope_boundary(2).unwrap(),
        generators::cross_polytope_boundary(3).unwrap(),
        generators::cross_polytope_boundary(4).unwrap(),
        generators::simplex(3).unwrap(),
        generators::simplex(4).unwrap(),
    ] {
        if SymmetricH::from_complex(&base).is_err() {
            continue;
        }
        let gamma = gamma_int_geometric(&base).unwrap();
        let mut entries = gamma.entries.clone();
        while entries.last().is_some_and(|x| x == &BigInt::from(0)) {
            entries.pop();
        }
        let k = entries.len().saturating_sub(1).max(1);
        ok &= is_k_ffk(&entries, k);
    }
    // certificate searches at small order
    let table = BPlusTable::up_to(4);
    let f = table.gamma(4, 1, Family::Symmetric).unwrap().entries;
    let lower = table.gamma(4, 2, Family::Symmetric).unwrap().entries;
    ok &= matches!(
        search_good_certificate(&f, &lower, GoodMode::DGood, 500_000).unwrap(),
        SearchOutcome::Found(_)
    );
    let upper = table.gamma(4, -2, Family::Symmetric).unwrap().entries;
    ok &= matches!(
        search_good_certificate(&f, &upper, GoodMode::DPlusOneGood, 500_000).unwrap(),
        SearchOutcome::Found(_)
    );
    conclude(
        "10",
        ok,
        "decorated face counts equal the type-B gamma vectors to n = 7 (balanced to 6), the \
         growth inequality holds to n = 8, corpus gammas are balanced f-vectors, and the \
         goodness searches succeed",
    );
}

#[test]
fn criterion_11_performance() {
    let bounds = Bounds::default();
    let started = Instant::now();
    let serial = StatTables::compute(8, &bounds).unwrap();
    let elapsed = started.elapsed();
    let parallel = StatTables::compute_parallel(8, &bounds).unwrap();
    conclude(
        "11",
        serial.total == 10_321_920 && elapsed.as_secs() < 60 && parallel == serial,
        &format!(
            "full order-8 tables ({} members) single-threaded in {elapsed:.2?}; parallel fold \
             bit-identical",
            serial.total
        ),
    );
}

#[test]
fn full_default_verification_run_has_no_failures() {
    // end-to-end: the default suite set as the CLI runs it
    let opts = ivgamma_core::suites::SuiteOptions { max_n: 6, max_dim: 3, seed: 0 };
    let report = ivgamma_core::suites::run_suites(&[], &opts).unwrap();
    let ok = report.fail_count() == 0;
    conclude(
        "suites",
        ok,
        &format!(
            "{} identities, {} corrected-form-passes, {} unresolved",
            report.records.len(),
            report.count(Status::CorrectedFormPasses),
            report.count(Status::Unresolved)
        ),
    );
}

#[test]
fn gamma_expansion_oracle_values() {
    // frozen expansions computed by the reassembly oracle
    let cases: [(&[i64], usize, &[i64]); 4] = [
        (&[1, 6, 1], 2, &[1, 4]),
        (&[1, 237, 1682, 1682, 237, 1], 5, &[1, 232, 976]),
        (&[0, 7, 7], 3, &[0, 7]),
        (&[0, 2], 2, &[0, 2]),
    ];
    for (poly, reference, expected) in cases {
        let g = gamma_expand(&IntPolynomial::from_coeffs(ints(poly)), reference).unwrap();
        assert_eq!(g.entries, ints(expected));
        assert_eq!(g.contract(), IntPolynomial::from_coeffs(ints(poly)));
    }
}
