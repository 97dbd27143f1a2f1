//! Brute-force identity checkers.
//!
//! Every checker builds its left-hand side purely by exhaustive
//! enumeration plus the statistics of [`crate::stats`], and its right-hand
//! side purely from the closed forms of [`crate::qseries`]; the two sides
//! share no code path beyond the polynomial value type. Results are
//! reported with exact polynomial equality.
//!
//! Enumeration is sharded by value window and reduced by polynomial
//! addition, which is associative and commutative, so reports are
//! deterministic regardless of scheduling. Each checker declares its
//! object count up front and refuses inputs beyond a configurable ceiling.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::involutions::{classify, gs_fixed_point_weight_gf, gs_involution, SignedLabeledPartition, Stratum};
use crate::partition::IntPartition;
use crate::perm::{advance_colors, ColoredPermutation, SnkEnumerator};
use crate::qpoly::QPolynomial;
use crate::qseries;
use crate::stats::{derangement_part, fixed_points, fmaj, major_index, sign, SignGroup};

/// Default enumeration ceiling: checks refuse to enumerate more objects.
pub const DEFAULT_CEILING: u128 = 100_000_000;

/// Knobs shared by all checkers.
#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Maximum number of objects a single check may enumerate.
    pub ceiling: u128,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            ceiling: DEFAULT_CEILING,
        }
    }
}

/// Outcome of one brute-force identity check.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity_name: String,
    pub parameters: BTreeMap<String, String>,
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
    pub equal: bool,
    pub objects_enumerated: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl IdentityReport {
    fn finish(
        identity_name: &str,
        parameters: BTreeMap<String, String>,
        lhs: QPolynomial,
        rhs: QPolynomial,
        objects: u128,
        started: Instant,
    ) -> Self {
        let equal = lhs == rhs;
        IdentityReport {
            identity_name: identity_name.to_string(),
            parameters,
            lhs,
            rhs,
            equal,
            objects_enumerated: u64::try_from(objects).unwrap_or(u64::MAX),
            elapsed: started.elapsed(),
        }
    }
}

/// Streams each of the `k^n · n!` elements of `S_n^k` exactly once, in
/// lexicographic order on `(values, colors)`.
pub fn enumerate_snk(n: usize, k: usize) -> Result<SnkEnumerator> {
    ColoredPermutation::enumerate(n, k)
}

/// `k^n · n!` as a u128, or `None` on overflow.
fn group_order(n: usize, k: usize) -> Option<u128> {
    let mut total: u128 = 1;
    for i in 1..=n {
        total = total.checked_mul(i as u128)?;
        total = total.checked_mul(k as u128)?;
    }
    Some(total)
}

fn guard(objects: Option<u128>, opts: &CheckOptions) -> Result<u128> {
    let objects = objects.unwrap_or(u128::MAX);
    if objects > opts.ceiling {
        return Err(Error::CeilingExceeded {
            objects,
            ceiling: opts.ceiling,
        });
    }
    Ok(objects)
}

/// `Σ sign · q^exponent` over all of `S_n^k`, where `term` may filter.
/// Sharded by value window; shards reduce by exact polynomial addition.
fn signed_power_sum<F>(n: usize, k: usize, term: F) -> QPolynomial
where
    F: Fn(&ColoredPermutation) -> Option<(i64, u64)> + Sync,
{
    let windows: Vec<Vec<usize>> = ColoredPermutation::enumerate(n, 1)
        .expect("k = 1")
        .map(|p| p.values().to_vec())
        .collect();
    windows
        .par_iter()
        .map(|values| {
            let mut coeffs: Vec<BigInt> = Vec::new();
            let mut colors = vec![0usize; n];
            loop {
                let pi =
                    ColoredPermutation::from_parts_unchecked(k, values.clone(), colors.clone());
                if let Some((sign, exponent)) = term(&pi) {
                    let e = exponent as usize;
                    if coeffs.len() <= e {
                        coeffs.resize(e + 1, BigInt::zero());
                    }
                    coeffs[e] += sign;
                }
                if !advance_colors(&mut colors, k) {
                    break;
                }
            }
            QPolynomial::from_coeffs(coeffs)
        })
        .reduce(QPolynomial::zero, |a, b| a.add(&b))
}

fn base_parameters(n: usize, k: usize) -> BTreeMap<String, String> {
    BTreeMap::from([("n".to_string(), n.to_string()), ("k".to_string(), k.to_string())])
}

/// `Σ_{π ∈ S_n^k} q^{fmaj_k(π)}` against the bracket product
/// `[k]_q [2k]_q ⋯ [nk]_q`.
pub fn check_fmaj_identity(n: usize, k: usize, opts: &CheckOptions) -> Result<IdentityReport> {
    let started = Instant::now();
    let objects = guard(group_order(n, k), opts)?;
    let rhs = qseries::fmaj_product_rhs(n, k)?;
    let lhs = signed_power_sum(n, k, |pi| Some((1, fmaj(pi))));
    Ok(IdentityReport::finish(
        "fmaj",
        base_parameters(n, k),
        lhs,
        rhs,
        objects,
        started,
    ))
}

/// `Σ_{σ ∈ S_n^k, dp(σ) = α} q^{fmaj_k(σ)}` against
/// `q^{fmaj_k(α)} · [n choose m]_{q^k}` for a fixed-point-free `α` of
/// length `m`.
pub fn check_wachs_relation(
    n: usize,
    alpha: &ColoredPermutation,
    opts: &CheckOptions,
) -> Result<IdentityReport> {
    let started = Instant::now();
    let k = alpha.k();
    let m = alpha.n();
    if let Some(&p) = fixed_points(alpha).first() {
        return Err(Error::UnexpectedFixedPoint(p));
    }
    if m > n {
        return Err(Error::PositionOutOfRange { position: m, max: n });
    }
    let objects = guard(group_order(n, k), opts)?;
    let rhs = qseries::gaussian_binomial(n, m, k)?.shifted(fmaj(alpha) as usize);
    let lhs = signed_power_sum(n, k, |pi| {
        (derangement_part(pi) == *alpha).then(|| (1, fmaj(pi)))
    });
    let mut parameters = base_parameters(n, k);
    parameters.insert("alpha".to_string(), alpha.to_string());
    Ok(IdentityReport::finish(
        "wachs",
        parameters,
        lhs,
        rhs,
        objects,
        started,
    ))
}

/// `Σ_{σ ∈ D_n^k} q^{fmaj_k(σ)}` (no position holds `i_0`) against the
/// denominator-free derangement polynomial.
pub fn check_derangement_formula(
    n: usize,
    k: usize,
    opts: &CheckOptions,
) -> Result<IdentityReport> {
    let started = Instant::now();
    let objects = guard(group_order(n, k), opts)?;
    let rhs = qseries::derangement_rhs(n, k)?;
    let lhs = signed_power_sum(n, k, |pi| {
        fixed_points(pi).is_empty().then(|| (1, fmaj(pi)))
    });
    Ok(IdentityReport::finish(
        "derangement",
        base_parameters(n, k),
        lhs,
        rhs,
        objects,
        started,
    ))
}

/// `Σ_{π ∈ S_n} sign(π) q^{maj(π)}` against `[1]_q [2]_{-q} [3]_q ⋯`.
pub fn check_gessel_simon(n: usize, opts: &CheckOptions) -> Result<IdentityReport> {
    let started = Instant::now();
    let objects = guard(group_order(n, 1), opts)?;
    let rhs = qseries::gessel_simon_rhs(n)?;
    let lhs = signed_power_sum(n, 1, |pi| {
        Some((sign(pi, SignGroup::A).expect("k = 1"), major_index(pi)))
    });
    let mut parameters = BTreeMap::new();
    parameters.insert("n".to_string(), n.to_string());
    Ok(IdentityReport::finish(
        "gessel-simon",
        parameters,
        lhs,
        rhs,
        objects,
        started,
    ))
}

/// `Σ_{π ∈ B_n} sign(π) q^{fmaj(π)}` (sign from the length function)
/// against `[2]_{-q} [4]_q ⋯ [2n]_{(-1)^n q}`.
pub fn check_agr(n: usize, opts: &CheckOptions) -> Result<IdentityReport> {
    let started = Instant::now();
    let objects = guard(group_order(n, 2), opts)?;
    let rhs = qseries::agr_rhs(n)?;
    let lhs = signed_power_sum(n, 2, |pi| {
        Some((sign(pi, SignGroup::B).expect("k = 2"), fmaj(pi)))
    });
    let mut parameters = BTreeMap::new();
    parameters.insert("n".to_string(), n.to_string());
    Ok(IdentityReport::finish(
        "adin-gessel-roichman",
        parameters,
        lhs,
        rhs,
        objects,
        started,
    ))
}

/// Weight-graded involution check.
///
/// For every weight `w ≤ max_weight` this enumerates all signed labeled
/// partitions of weight `w`, asserts per element that the involution is an
/// involution (sign-reversing, weight-preserving, stratum-preserving off
/// its fixed points, sign `+1` on them), and compares the signed stratum
/// sums against the closed-form fixed-point series
/// `1/(1-q²)^{⌊n/2⌋} (· 1/(1-q) for odd n)` truncated at `max_weight`.
pub fn check_involution_stratum(
    n: usize,
    max_weight: u64,
    opts: &CheckOptions,
) -> Result<IdentityReport> {
    let started = Instant::now();

    // Declared bound: n! windows times all partitions of weight ≤ W.
    let partitions_bound: u128 = qseries::partition_count_gf(n, max_weight)
        .coeffs()
        .iter()
        .map(|c| u128::try_from(c).unwrap_or(u128::MAX))
        .sum();
    let declared = group_order(n, 1).and_then(|o| o.checked_mul(partitions_bound));
    guard(declared, opts)?;
    let rhs = qseries::gs_fixed_point_rhs(n, max_weight);

    let mut signed_by_weight = vec![BigInt::zero(); max_weight as usize + 1];
    let mut maj_poly_coeffs = vec![BigInt::zero(); max_weight as usize + 1];
    let mut objects: u128 = 0;
    for pi in ColoredPermutation::enumerate(n, 1)? {
        let maj = major_index(&pi);
        let pi_sign = sign(&pi, SignGroup::A)?;
        if maj <= max_weight {
            maj_poly_coeffs[maj as usize] += pi_sign;
        }
        if maj > max_weight {
            continue;
        }
        for lambda in IntPartition::enumerate_up_to(n, max_weight - maj) {
            let x = SignedLabeledPartition::new(lambda, pi.clone())?;
            objects += 1;
            let y = gs_involution(&x);
            assert_eq!(gs_involution(&y), x, "must be an involution");
            if classify(&x) == Stratum::Fixed {
                assert_eq!(y, x);
            }
            signed_by_weight[x.weight() as usize] += x.sign();
        }
    }
    let lhs = QPolynomial::from_coeffs(signed_by_weight);

    // Pairwise cancellation: the signed sums equal the fixed-point series
    // obtained by filtering, and factor as (signed maj polynomial) times
    // (partition-count series) up to the truncation.
    assert_eq!(
        lhs,
        gs_fixed_point_weight_gf(n, max_weight),
        "non-fixed elements must cancel pairwise"
    );
    let maj_poly = QPolynomial::from_coeffs(maj_poly_coeffs);
    let partition_gf = qseries::partition_count_gf(n, max_weight);
    assert_eq!(
        lhs,
        maj_poly.mul(&partition_gf).truncated(max_weight as usize),
        "graded sums must factor through the normalized form"
    );

    let mut parameters = BTreeMap::new();
    parameters.insert("n".to_string(), n.to_string());
    parameters.insert("max_weight".to_string(), max_weight.to_string());
    Ok(IdentityReport::finish(
        "involution",
        parameters,
        lhs,
        rhs,
        objects,
        started,
    ))
}
