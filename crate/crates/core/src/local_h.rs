//! Local h- and gamma-vectors of the interval subdivision of a simplex by
//! three routes: the defining alternating sum over constructed
//! restrictions, the derangement-weighted boundary-difference formula, and
//! the excedance generating function over filtered signed derangements
//! (calibrated against the other two).

use num_bigint::BigInt;

use crate::bounds::Bounds;
use crate::eulerian::BPlusTable;
use crate::interval::IntervalSubdivision;
use crate::polynomials::{binomial, gamma_expand, GammaVector, IntPolynomial};
use crate::report::{IdentityRecord, Status};
use crate::signed_perms::{
    b_star_derangement_poly, derangement_poly_a, Interpretation, StatTables, ALL_EXC_RULES,
    ALL_MIN_RULES,
};
use crate::{Error, Result};

/// Default construction bound for the defining route; the derangement
/// route scales past it.
pub const DEFAULT_CONSTRUCTION_BOUND: usize = 5;

/// Descent polynomial of the negative-first positive-last class of order k,
/// from the recurrence table (no enumeration).
pub fn b_minus_plus_poly(k: usize) -> Result<IntPolynomial> {
    let table = BPlusTable::up_to(k.max(1));
    let mut acc = IntPolynomial::zero();
    for j in 1..=k as i32 {
        acc = acc.add(&table.b_plus(k, -j)?);
    }
    Ok(acc)
}

/// Descent polynomial of the all-positive-ends class of order k.
pub fn b_plus_plus_poly(k: usize) -> Result<IntPolynomial> {
    let table = BPlusTable::up_to(k.max(1));
    let mut acc = IntPolynomial::zero();
    for j in 1..=k as i32 {
        acc = acc.add(&table.b_plus(k, j)?);
    }
    Ok(acc)
}

/// The boundary difference h(Int 2^[k]) - h(∂ Int 2^[k]) with the
/// degenerate conventions: 1 at k = 0 and 0 at k = 1.
pub fn boundary_difference(k: usize) -> Result<IntPolynomial> {
    match k {
        0 => Ok(IntPolynomial::one()),
        1 => Ok(IntPolynomial::zero()),
        _ => b_minus_plus_poly(k),
    }
}

/// Defining route: the alternating sum of restriction h-polynomials over
/// the 2^n faces of the simplex, each restriction built explicitly.
pub fn local_h_definition(n: usize, construction_bound: usize) -> Result<IntPolynomial> {
    if n > construction_bound {
        return Err(Error::ResourceLimit {
            what: "simplex size for explicit local h",
            requested: n,
            limit: construction_bound,
        });
    }
    if n == 0 {
        return Err(Error::InvalidInput("the simplex needs a vertex".into()));
    }
    let base = crate::simplicial::generators::simplex(n)?;
    let subdivision = IntervalSubdivision::build(&base)?;
    let full = base.facets()[0].clone();
    let mut acc = IntPolynomial::zero();
    for face in full.subsets() {
        let h = if face.is_empty() {
            IntPolynomial::one()
        } else {
            subdivision.restriction(&face)?.h_polynomial()
        };
        if (n - face.len()).is_multiple_of(2) {
            acc = acc.add(&h);
        } else {
            acc = acc.sub(&h);
        }
    }
    Ok(acc)
}

/// Derangement route: sum over k of C(n, k) times the boundary difference
/// at k times the excedance derangement polynomial at n - k.
pub fn local_h_derangement(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidInput("the simplex needs a vertex".into()));
    }
    let mut acc = IntPolynomial::zero();
    for k in 0..=n {
        let diff = boundary_difference(k)?;
        if diff.is_zero() {
            continue;
        }
        let der = derangement_poly_a(n - k);
        if der.is_zero() {
            continue;
        }
        acc = acc.add(&diff.mul(&der).scale(&binomial(n, k)));
    }
    Ok(acc)
}

/// Excedance route under a chosen interpretation of the filtered
/// derangement statistic.
pub fn local_h_excedance(
    n: usize,
    interp: &Interpretation,
    bounds: &Bounds,
) -> Result<IntPolynomial> {
    b_star_derangement_poly(n, interp, bounds)
}

/// Local gamma vector at reference degree n.
pub fn local_gamma(n: usize, construction_bound: usize) -> Result<GammaVector> {
    let ell = if n <= construction_bound {
        local_h_definition(n, construction_bound)?
    } else {
        local_h_derangement(n)?
    };
    gamma_expand(&ell, n)
}

pub struct CalibrationOutcome {
    /// Interpretations whose generating function matches the derangement
    /// route for every order in 2..=max_n.
    pub matching: Vec<Interpretation>,
    pub max_n: usize,
}

/// Try every interpretation in the candidate grid against the scalable
/// route.
pub fn calibrate_excedance(max_n: usize, bounds: &Bounds) -> Result<CalibrationOutcome> {
    let mut matching = Vec::new();
    for min_rule in ALL_MIN_RULES {
        for exc_rule in ALL_EXC_RULES {
            let interp = Interpretation { min_rule, exc_rule };
            let mut ok = true;
            for n in 2..=max_n {
                let expected = local_h_derangement(n)?;
                if local_h_excedance(n, &interp, bounds)? != expected {
                    ok = false;
                    break;
                }
            }
            if ok {
                matching.push(interp);
            }
        }
    }
    Ok(CalibrationOutcome { matching, max_n })
}

/// h-polynomial of the boundary of Int(2^[n]) by construction, compared
/// with the all-positive-ends class polynomial; also checks that the
/// boundary of the subdivision is the subdivision of the boundary.
pub fn boundary_h_check(n: usize, construction_bound: usize) -> Result<Vec<IdentityRecord>> {
    if n > construction_bound || n == 0 {
        return Err(Error::ResourceLimit {
            what: "simplex size for boundary check",
            requested: n,
            limit: construction_bound,
        });
    }
    let mut records = Vec::new();
    let base = crate::simplicial::generators::simplex(n)?;
    let subdivision = IntervalSubdivision::build(&base)?;
    let boundary = subdivision.complex().boundary_of_ball()?;
    let h = boundary.h_polynomial();
    let expected = b_plus_plus_poly(n)?;
    records.push(IdentityRecord::check(
        "boundary",
        "subdivision-boundary-h",
        "prop-boundary",
        format!("n={n}"),
        h == expected,
        || format!("constructed {h} vs class polynomial {expected}"),
    ));
    if n >= 2 {
        let boundary_base = crate::simplicial::generators::simplex_boundary(n)?;
        let of_boundary = IntervalSubdivision::build(&boundary_base)?;
        records.push(IdentityRecord::check(
            "boundary",
            "boundary-commutes-with-subdivision",
            "prop-boundary",
            format!("n={n}"),
            of_boundary.complex().f_vector() == boundary.f_vector(),
            || {
                format!(
                    "f of subdivided boundary {:?} vs boundary of subdivision {:?}",
                    of_boundary.complex().f_vector(),
                    boundary.f_vector()
                )
            },
        ));
    }
    Ok(records)
}

/// For every face F of the n-simplex: the difference h(Γ_F) - h(∂Γ_F)
/// equals the negative-first class polynomial of order |F|, and is
/// nonnegative, symmetric about |F|, unimodal, and gamma-nonnegative with
/// gamma entries given by the diagonal slide counts.
pub fn question_4_9_report(n: usize, bounds: &Bounds) -> Result<Vec<IdentityRecord>> {
    let base = crate::simplicial::generators::simplex(n)?;
    let subdivision = IntervalSubdivision::build(&base)?;
    let full = base.facets()[0].clone();
    let mut records = Vec::new();

    let mut ok_diff = true;
    let mut ok_shape = true;
    let mut ok_gamma = true;
    let mut witness = String::new();
    for face in full.subsets() {
        let k = face.len();
        let diff = if face.is_empty() {
            IntPolynomial::one()
        } else {
            let restriction = subdivision.restriction(&face)?;
            let h = restriction.h_polynomial();
            let hb = restriction.boundary_of_ball()?.h_polynomial();
            h.sub(&hb)
        };
        let expected = boundary_difference(k)?;
        if diff != expected {
            if ok_diff {
                witness = format!("|F|={k}: {diff} vs {expected}");
            }
            ok_diff = false;
            continue;
        }
        let symmetric = diff.is_zero() || diff.is_symmetric(k)?;
        if !(diff.is_unimodal_nonneg() && symmetric) {
            if ok_shape {
                witness = format!("|F|={k}: {diff} fails shape checks");
            }
            ok_shape = false;
        }
        if !diff.is_zero() && k >= 2 {
            let gamma = gamma_expand(&diff, k)?;
            let stats = StatTables::compute(k, bounds)?;
            let diag: Vec<BigInt> = stats.b_mp_diag().iter().map(|&c| BigInt::from(c)).collect();
            let expected_gamma: Vec<BigInt> = (0..gamma.entries.len())
                .map(|s| diag.get(s).cloned().unwrap_or_else(|| BigInt::from(0)))
                .collect();
            if !gamma.is_nonnegative() || gamma.entries != expected_gamma {
                if ok_gamma {
                    witness = format!(
                        "|F|={k}: gamma {:?} vs slide diagonal {:?}",
                        gamma.entries, expected_gamma
                    );
                }
                ok_gamma = false;
            }
        }
    }
    records.push(IdentityRecord::check(
        "question-4.9",
        "restriction-boundary-difference",
        "question-4.9",
        format!("|F|<={n}"),
        ok_diff,
        || witness.clone(),
    ));
    records.push(IdentityRecord::check(
        "question-4.9",
        "difference-nonneg-symmetric-unimodal",
        "question-4.9",
        format!("|F|<={n}"),
        ok_shape,
        || witness.clone(),
    ));
    records.push(IdentityRecord::check(
        "question-4.9",
        "difference-gamma-is-slide-diagonal",
        "question-4.9",
        format!("|F|<={n}"),
        ok_gamma,
        || witness.clone(),
    ));
    Ok(records)
}

/// Route agreement, shape properties and the excedance calibration as
/// records; `construction_max` bounds the defining route, `derangement_max`
/// the scalable checks.
pub fn verify_local_h(
    construction_max: usize,
    derangement_max: usize,
    bounds: &Bounds,
) -> Result<Vec<IdentityRecord>> {
    let mut records = Vec::new();
    let mut ok_routes = true;
    let mut w_routes = String::new();
    for n in 1..=construction_max {
        let by_def = local_h_definition(n, construction_max)?;
        let by_der = local_h_derangement(n)?;
        if by_def != by_der {
            if ok_routes {
                w_routes = format!("n={n}: defining {by_def} vs derangement {by_der}");
            }
            ok_routes = false;
        }
    }
    records.push(IdentityRecord::check(
        "local-h",
        "defining-equals-derangement-route",
        "thm-4.4",
        format!("n<={construction_max}"),
        ok_routes,
        || w_routes,
    ));

    let mut ok_shape = true;
    let mut w_shape = String::new();
    for n in 1..=derangement_max {
        let ell = local_h_derangement(n)?;
        let symmetric = ell.is_zero() || ell.is_symmetric(n)?;
        let gamma_ok = if ell.is_zero() {
            true
        } else {
            gamma_expand(&ell, n)?.is_nonnegative()
        };
        if !(ell.is_unimodal_nonneg() && symmetric && gamma_ok) {
            if ok_shape {
                w_shape = format!("n={n}: {ell}");
            }
            ok_shape = false;
        }
        // internal consistency: the coefficient sum matches the alternating
        // face-count sum at t = 1
        let mut alt = BigInt::from(0);
        for k in 0..=n {
            let h_one = if k == 0 {
                BigInt::from(1)
            } else {
                // h(Int 2^[k]) at 1 is the positive-class size
                BigInt::from((1u64 << (k - 1)) * (1..=k as u64).product::<u64>())
            };
            let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
            alt += BigInt::from(sign) * binomial(n, k) * h_one;
        }
        if ell.coeff_sum() != alt {
            if ok_shape {
                w_shape = format!("n={n}: sum {} vs alternating count {alt}", ell.coeff_sum());
            }
            ok_shape = false;
        }
    }
    records.push(IdentityRecord::check(
        "local-h",
        "nonneg-symmetric-unimodal-gamma-nonneg",
        "thm-local-gamma",
        format!("n<={derangement_max}"),
        ok_shape,
        || w_shape,
    ));

    let calibration = calibrate_excedance(construction_max, bounds)?;
    let params = format!("n<={construction_max}");
    if calibration.matching.is_empty() {
        records.push(IdentityRecord {
            suite: "local-h".into(),
            identity: "excedance-route-calibration".into(),
            locus: "eq-local-h".into(),
            params,
            status: Status::Unresolved,
            witness: None,
            detail: Some(
                "no candidate excedance/minimum interpretation reproduces the local h \
                 polynomials; the excedance route stays experimental"
                    .into(),
            ),
        });
    } else {
        let names: Vec<String> = calibration.matching.iter().map(|i| i.name()).collect();
        records.push(
            IdentityRecord::pass("local-h", "excedance-route-calibration", "eq-local-h", params)
                .with_detail(format!("matching interpretations: {}", names.join(", "))),
        );
    }
    Ok(records)
}
