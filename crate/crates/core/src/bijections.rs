//! Constructive bijections between partitions, labeled partitions, and
//! nonnegative sequences.
//!
//! Three mutually inverse pairs live here:
//!
//! - [`g_pi`] / [`g_pi_inverse`]: for a fixed `π ∈ S_n^k`, a bijection
//!   between `P_n^k` (partitions with every part divisible by `k`) and
//!   `Q_π` (standard labeled partitions with `λ_i ≡ c(π(i)) (mod k)`),
//!   adding `k·a_i + c(π(i))` to the `i`-th part, where `a_i` counts the
//!   descents in the suffix `π(i)…π(n)`;
//! - [`phi`] / [`phi_inverse`]: the induced bijection between
//!   `P_n^k × S_n^k` and plain sequences of `n` nonnegative integers;
//! - [`theta`] / [`eta`]: the derangement decomposition, splitting
//!   `(λ, σ)` into the derangement part `α = dp(σ)` together with a pair
//!   of smaller partitions `(β, γ)`.
//!
//! Every map checks its weight law on each call:
//! `|λ| + fmaj_k(π) = |μ| = |s|` for the first two pairs and
//! `|λ| + fmaj_k(σ) = |β| + |γ| + fmaj_k(α)` for the third.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labeled::LabeledPartition;
use crate::partition::IntPartition;
use crate::perm::ColoredPermutation;
use crate::stats::{
    derangement_part, fixed_points, flag_cmp, fmaj, insert_fixed_point, suffix_descent_counts,
};

/// A sequence of `n` nonnegative integers (positional, not sorted).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceW {
    entries: Vec<u64>,
}

impl SequenceW {
    pub fn new(entries: Vec<u64>) -> Self {
        SequenceW { entries }
    }

    /// Parses whitespace-separated nonnegative integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for token in text.split_whitespace() {
            entries.push(
                token
                    .parse()
                    .map_err(|_| Error::MalformedToken(token.to_string()))?,
            );
        }
        Ok(SequenceW { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `|s|`, the sum of the entries.
    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }
}

impl fmt::Display for SequenceW {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Output of [`theta`]: the derangement part `α` of `σ` together with the
/// two partitions carrying the remaining weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionResult {
    pub beta: IntPartition,
    pub gamma: IntPartition,
    pub alpha: ColoredPermutation,
}

/// The labeling map `g_π: P_n^k → Q_π`, `μ_i = λ_i + k·a_i + c(π(i))`.
pub fn g_pi(lambda: &IntPartition, pi: &ColoredPermutation) -> Result<LabeledPartition> {
    let n = pi.n();
    let k = pi.k();
    if lambda.capacity() != n {
        return Err(Error::LengthMismatch(lambda.capacity(), n));
    }
    lambda.ensure_divisible_by(k)?;
    let suffix = suffix_descent_counts(pi);
    let mu: Vec<u64> = (0..n)
        .map(|i| lambda.parts()[i] + k as u64 * suffix[i] + pi.colors()[i] as u64)
        .collect();
    let result = LabeledPartition::new(IntPartition::new(mu, n)?, pi.clone())?;
    assert!(result.is_in_q_pi(), "image of g_pi must lie in Q_pi");
    assert_eq!(
        lambda.weight() + fmaj(pi),
        result.lambda().weight(),
        "weight law of g_pi violated"
    );
    Ok(result)
}

/// The inverse labeling map: `λ_i = μ_i − k·a_i − c(π(i))`.
pub fn g_pi_inverse(mu_pi: &LabeledPartition) -> Result<IntPartition> {
    if !mu_pi.is_in_q_pi() {
        return Err(Error::NotInQPi);
    }
    let pi = mu_pi.pi();
    let k = pi.k() as u64;
    let suffix = suffix_descent_counts(pi);
    let mut parts = Vec::with_capacity(pi.n());
    for ((&mu, &a), &color) in mu_pi.lambda().parts().iter().zip(&suffix).zip(pi.colors()) {
        let part = mu.checked_sub(k * a + color as u64).ok_or(Error::NotInQPi)?;
        parts.push(part);
    }
    let lambda = IntPartition::new(parts, pi.n())?;
    lambda.ensure_divisible_by(pi.k())?;
    assert_eq!(
        lambda.weight() + fmaj(pi),
        mu_pi.lambda().weight(),
        "weight law of g_pi_inverse violated"
    );
    Ok(lambda)
}

/// The sequence map `φ: P_n^k × S_n^k → W_n`: label with `g_π`, then read
/// the parts off in value order, `s(d(π(i))) = μ_i`.
pub fn phi(lambda: &IntPartition, pi: &ColoredPermutation) -> Result<SequenceW> {
    let labeled = g_pi(lambda, pi)?;
    let mut entries = vec![0u64; pi.n()];
    for (i, &value) in pi.values().iter().enumerate() {
        entries[value - 1] = labeled.lambda().parts()[i];
    }
    let s = SequenceW::new(entries);
    assert_eq!(
        lambda.weight() + fmaj(pi),
        s.total(),
        "weight law of phi violated"
    );
    Ok(s)
}

/// The inverse sequence map. Every nonnegative sequence is a valid input:
///
/// 1. attach the value `i` to entry `s(i)`;
/// 2. read colors off the residues, `c_i = s(i) mod k`, and subtract them;
/// 3. sort the columns by part, descending, breaking ties by increasing
///    colored element in the flag order (this makes the intermediate
///    labeled partition standard);
/// 4. subtract `k·a_i` as in [`g_pi_inverse`].
pub fn phi_inverse(s: &SequenceW, k: usize) -> Result<(IntPartition, ColoredPermutation)> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    let n = s.len();
    let mut columns: Vec<(u64, usize, usize)> = s
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &entry)| {
            let color = (entry % k as u64) as usize;
            (entry - color as u64, i + 1, color)
        })
        .collect();
    columns.sort_by(|a, b| {
        b.0.cmp(&a.0).then_with(|| {
            flag_cmp(
                crate::perm::ColoredElement::new(a.1, a.2),
                crate::perm::ColoredElement::new(b.1, b.2),
            )
        })
    });
    let sorted_parts: Vec<u64> = columns.iter().map(|c| c.0).collect();
    let values: Vec<usize> = columns.iter().map(|c| c.1).collect();
    let colors: Vec<usize> = columns.iter().map(|c| c.2).collect();
    let delta = ColoredPermutation::new(k, values, colors)?;
    let sorted = LabeledPartition::new(IntPartition::new(sorted_parts.clone(), n)?, delta)?;
    assert!(
        sorted.is_standard(),
        "intermediate labeled partition must be standard"
    );
    let (_, delta) = sorted.into_parts();
    let suffix = suffix_descent_counts(&delta);
    let parts: Vec<u64> = sorted_parts
        .iter()
        .zip(&suffix)
        .map(|(&part, &a)| {
            part.checked_sub(k as u64 * a)
                .expect("sorted parts dominate the descent correction")
        })
        .collect();
    let lambda = IntPartition::new(parts, n)?;
    lambda.ensure_divisible_by(k)?;
    assert_eq!(
        lambda.weight() + fmaj(&delta),
        s.total(),
        "weight law of phi_inverse violated"
    );
    Ok((lambda, delta))
}

/// The derangement decomposition `θ: (λ, σ) ↦ (β, γ, α)`:
/// label with `g_σ`, split `λ*` at the fixed-point positions of `σ`
/// (the fixed part becomes `γ`), and unlabel the rest with `g_α^{-1}`.
pub fn theta(lambda: &IntPartition, sigma: &ColoredPermutation) -> Result<DecompositionResult> {
    let n = sigma.n();
    let star = g_pi(lambda, sigma)?;
    let fixed = fixed_points(sigma);
    let alpha = derangement_part(sigma);
    let m = alpha.n();

    let mut is_fixed = vec![false; n];
    for &i in &fixed {
        is_fixed[i - 1] = true;
    }
    let mut beta_star = Vec::with_capacity(m);
    let mut gamma_parts = Vec::with_capacity(n - m);
    for (&fixed, &part) in is_fixed.iter().zip(star.lambda().parts()) {
        if fixed {
            gamma_parts.push(part);
        } else {
            beta_star.push(part);
        }
    }
    let gamma = IntPartition::new(gamma_parts, n - m)?;
    let beta = g_pi_inverse(&LabeledPartition::new(
        IntPartition::new(beta_star, m)?,
        alpha.clone(),
    )?)?;
    assert_eq!(
        lambda.weight() + fmaj(sigma),
        beta.weight() + gamma.weight() + fmaj(&alpha),
        "weight law of theta violated"
    );
    Ok(DecompositionResult { beta, gamma, alpha })
}

/// The inverse decomposition `η: (β, γ, α) ↦ (λ, σ)`.
///
/// Labels `β` with `g_α`, then inserts the parts of `γ` one at a time:
/// each part enters the leftmost position `r` that keeps a partition, and
/// the matching fixed point enters the unique slot of the equal-part run
/// `[r, t]` that keeps the run's window increasing in the flag order.
pub fn eta(
    beta: &IntPartition,
    gamma: &IntPartition,
    alpha: &ColoredPermutation,
) -> Result<(IntPartition, ColoredPermutation)> {
    let k = alpha.k();
    let m = alpha.n();
    if let Some(&p) = fixed_points(alpha).first() {
        return Err(Error::UnexpectedFixedPoint(p));
    }
    if beta.capacity() != m {
        return Err(Error::LengthMismatch(beta.capacity(), m));
    }
    beta.ensure_divisible_by(k)?;
    gamma.ensure_divisible_by(k)?;

    let labeled = g_pi(beta, alpha)?;
    let mut parts: Vec<u64> = labeled.lambda().parts().to_vec();
    let mut perm = alpha.clone();

    for i in 1..=gamma.capacity() {
        let part = gamma.part(i);
        // Leftmost insertion position that keeps the parts weakly
        // decreasing (1-based); everything before it is strictly larger.
        let r = parts.iter().take_while(|&&p| p > part).count() + 1;
        parts.insert(r - 1, part);
        let mut t = r;
        while t < parts.len() && parts[t] == part {
            t += 1;
        }
        // Try each slot of the run; keep the insertions whose run window
        // is increasing. Distinct admissible slots can only arise next to
        // previously inserted fixed points with consecutive values, and
        // then they all produce the same window.
        let mut image: Option<ColoredPermutation> = None;
        for s in r..=t {
            let candidate = insert_fixed_point(&perm, s)?;
            let increasing = (r..t).all(|p| {
                flag_cmp(candidate.element(p - 1), candidate.element(p))
                    == std::cmp::Ordering::Less
            });
            if increasing {
                match &image {
                    None => image = Some(candidate),
                    Some(first) => assert_eq!(
                        *first, candidate,
                        "insertion slot must be unique up to the resulting window"
                    ),
                }
            }
        }
        perm = image.expect("a standard insertion slot always exists");
        let intermediate = LabeledPartition::new(
            IntPartition::new(parts.clone(), parts.len())?,
            perm.clone(),
        )?;
        assert!(
            intermediate.is_in_q_pi(),
            "intermediate labeled partition must stay in Q_pi"
        );
    }

    let n = m + gamma.capacity();
    let full = LabeledPartition::new(IntPartition::new(parts, n)?, perm.clone())?;
    let lambda = g_pi_inverse(&full)?;
    assert_eq!(
        beta.weight() + gamma.weight() + fmaj(alpha),
        lambda.weight() + fmaj(&perm),
        "weight law of eta violated"
    );
    Ok((lambda, perm))
}
