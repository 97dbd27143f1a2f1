//! The sign-reversing involution on signed labeled partitions behind the
//! signed `maj` product formula, and the pair-swap rule for signed
//! permutations behind its `fmaj` analogue.
//!
//! A *signed labeled partition* is a pair `(λ, π)` with `π ∈ S_n` (one
//! color) and `λ` an arbitrary partition with at most `n` parts; it
//! carries the sign of `π` and the weight `|λ| + maj(π)`. The involution
//! scans the value pairs `{1,2}, {3,4}, …, {2⌊n/2⌋-1, 2⌊n/2⌋}` (for odd
//! `n` the element `n` is ignored) and cancels, within each weight
//! stratum:
//!
//! 1. pairs whose two values are not adjacent in the window, by swapping
//!    the two values (preserves `maj`, flips the sign);
//! 2. adjacent pairs that are out of order or sit on unequal parts, by
//!    swapping the values and transferring one unit per affected column
//!    between `λ` and `maj`.
//!
//! What survives — every pair adjacent, in order, on equal parts — is
//! fixed, carries a positive sign, and is counted by
//! `1/(1-q²)^{⌊n/2⌋}` (times `1/(1-q)` for odd `n`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::IntPartition;
use crate::perm::ColoredPermutation;
use crate::qpoly::QPolynomial;
use crate::stats::{fmaj, major_index, sign, SignGroup};

/// Where a signed labeled partition falls in the cancellation scan.
///
/// Exactly one tag applies: the first pair index `i` whose values are not
/// adjacent gives `NotAdjacent(i)`; otherwise the first pair that is not
/// (in order and on equal parts) gives `UnequalPair(i)`; otherwise the
/// element is `Fixed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stratum {
    NotAdjacent(usize),
    UnequalPair(usize),
    Fixed,
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stratum::NotAdjacent(i) => write!(f, "NotAdjacent({i})"),
            Stratum::UnequalPair(i) => write!(f, "UnequalPair({i})"),
            Stratum::Fixed => write!(f, "Fixed"),
        }
    }
}

/// A labeled partition over plain `S_n` carrying the sign of its
/// permutation; no standardness or divisibility is required.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSignedLabeledPartition", into = "RawSignedLabeledPartition")]
pub struct SignedLabeledPartition {
    lambda: IntPartition,
    pi: ColoredPermutation,
}

#[derive(Serialize, Deserialize)]
struct RawSignedLabeledPartition {
    lambda: IntPartition,
    pi: ColoredPermutation,
}

impl TryFrom<RawSignedLabeledPartition> for SignedLabeledPartition {
    type Error = Error;
    fn try_from(raw: RawSignedLabeledPartition) -> Result<Self> {
        SignedLabeledPartition::new(raw.lambda, raw.pi)
    }
}

impl From<SignedLabeledPartition> for RawSignedLabeledPartition {
    fn from(x: SignedLabeledPartition) -> Self {
        RawSignedLabeledPartition {
            lambda: x.lambda,
            pi: x.pi,
        }
    }
}

impl SignedLabeledPartition {
    pub fn new(lambda: IntPartition, pi: ColoredPermutation) -> Result<Self> {
        if pi.k() != 1 {
            return Err(Error::WrongGroup {
                expected: 1,
                got: pi.k(),
            });
        }
        if lambda.capacity() != pi.n() {
            return Err(Error::LengthMismatch(lambda.capacity(), pi.n()));
        }
        Ok(SignedLabeledPartition { lambda, pi })
    }

    pub fn lambda(&self) -> &IntPartition {
        &self.lambda
    }

    pub fn pi(&self) -> &ColoredPermutation {
        &self.pi
    }

    pub fn n(&self) -> usize {
        self.pi.n()
    }

    /// `|λ| + maj(π)`.
    pub fn weight(&self) -> u64 {
        self.lambda.weight() + major_index(&self.pi)
    }

    /// The sign of the underlying permutation, `±1`.
    pub fn sign(&self) -> i64 {
        sign(&self.pi, SignGroup::A).expect("k = 1 by construction")
    }
}

impl fmt::Display for SignedLabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.lambda, self.pi)
    }
}

fn positions_of_values(pi: &ColoredPermutation) -> Vec<usize> {
    let mut pos = vec![0usize; pi.n() + 1];
    for (i, &v) in pi.values().iter().enumerate() {
        pos[v] = i + 1;
    }
    pos
}

/// Assigns the unique stratum tag, scanning pairs `{2i-1, 2i}` in order.
pub fn classify(x: &SignedLabeledPartition) -> Stratum {
    let pos = positions_of_values(x.pi());
    let pairs = x.n() / 2;
    for i in 1..=pairs {
        let p1 = pos[2 * i - 1];
        let p2 = pos[2 * i];
        if p1.abs_diff(p2) != 1 {
            return Stratum::NotAdjacent(i);
        }
    }
    for i in 1..=pairs {
        let p1 = pos[2 * i - 1];
        let p2 = pos[2 * i];
        if !(p2 == p1 + 1 && x.lambda().part(p1) == x.lambda().part(p2)) {
            return Stratum::UnequalPair(i);
        }
    }
    Stratum::Fixed
}

/// The sign-reversing involution. Off its fixed points it flips the sign,
/// preserves the weight, and stays in the same stratum; on the `Fixed`
/// stratum it is the identity.
pub fn gs_involution(x: &SignedLabeledPartition) -> SignedLabeledPartition {
    let stratum = classify(x);
    let pos = positions_of_values(x.pi());

    let image = match stratum {
        Stratum::Fixed => x.clone(),
        Stratum::NotAdjacent(i) => {
            let swapped = swap_values(x.pi(), 2 * i - 1, 2 * i);
            assert_eq!(
                major_index(&swapped),
                major_index(x.pi()),
                "non-adjacent value swap must preserve maj"
            );
            SignedLabeledPartition {
                lambda: x.lambda().clone(),
                pi: swapped,
            }
        }
        Stratum::UnequalPair(i) => {
            let p1 = pos[2 * i - 1];
            let p2 = pos[2 * i];
            let swapped = swap_values(x.pi(), 2 * i - 1, 2 * i);
            let mut parts = x.lambda().parts().to_vec();
            if p2 + 1 == p1 {
                // 2i sits immediately before 2i-1: add one to every part
                // above and including its column, then swap the values.
                for part in parts.iter_mut().take(p2) {
                    *part += 1;
                }
            } else {
                // In order but on strictly unequal parts: the inverse
                // branch, subtracting instead.
                assert!(
                    x.lambda().part(p1) > x.lambda().part(p2),
                    "adjacent in-order pair with equal parts is Fixed"
                );
                for part in parts.iter_mut().take(p1) {
                    *part -= 1;
                }
            }
            let lambda = IntPartition::new(parts, x.n()).expect("unit transfer keeps a partition");
            SignedLabeledPartition { lambda, pi: swapped }
        }
    };

    if stratum != Stratum::Fixed {
        assert_eq!(image.sign(), -x.sign(), "involution must reverse the sign");
        assert_eq!(image.weight(), x.weight(), "involution must preserve the weight");
        assert_eq!(classify(&image), stratum, "involution must pair within a stratum");
    }
    image
}

fn swap_values(pi: &ColoredPermutation, a: usize, b: usize) -> ColoredPermutation {
    let values = pi
        .values()
        .iter()
        .map(|&v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        })
        .collect();
    ColoredPermutation::from_parts_unchecked(pi.k(), values, pi.colors().to_vec())
}

/// The generating function `Σ sign · q^weight` over the `Fixed` stratum,
/// truncated to `max_weight`, by direct enumeration. Every fixed point has
/// sign `+1`, so this matches the truncation of
/// `1/(1-q²)^{⌊n/2⌋} · (1/(1-q) if n is odd)`.
pub fn gs_fixed_point_weight_gf(n: usize, max_weight: u64) -> QPolynomial {
    let mut coeffs = vec![num_bigint::BigInt::from(0); max_weight as usize + 1];
    for pi in ColoredPermutation::enumerate(n, 1).expect("k = 1") {
        let maj = major_index(&pi);
        if maj > max_weight {
            continue;
        }
        for lambda in IntPartition::enumerate_up_to(n, max_weight - maj) {
            let x = SignedLabeledPartition::new(lambda, pi.clone()).expect("valid by construction");
            if classify(&x) == Stratum::Fixed {
                assert_eq!(x.sign(), 1, "fixed points carry positive sign");
                coeffs[x.weight() as usize] += 1;
            }
        }
    }
    QPolynomial::from_coeffs(coeffs)
}

/// The sign-change rule on `B_n` (`k = 2`): exchanges the values `2i-1`
/// and `2i` while the colors stay with their positions.
///
/// Applicable when the two values carry different signs, or the same sign
/// but non-adjacent positions; then the swap flips the sign while
/// preserving `fmaj`, and applying it twice is the identity. Returns
/// `None` when not applicable (same sign, adjacent positions).
pub fn bn_pair_swap(
    sigma: &ColoredPermutation,
    pair_index: usize,
) -> Result<Option<ColoredPermutation>> {
    if sigma.k() != 2 {
        return Err(Error::WrongGroup {
            expected: 2,
            got: sigma.k(),
        });
    }
    if pair_index < 1 || 2 * pair_index > sigma.n() {
        return Err(Error::PositionOutOfRange {
            position: pair_index,
            max: sigma.n() / 2,
        });
    }
    let pos = positions_of_values(sigma);
    let p1 = pos[2 * pair_index - 1];
    let p2 = pos[2 * pair_index];
    let c1 = sigma.colors()[p1 - 1];
    let c2 = sigma.colors()[p2 - 1];
    if c1 == c2 && p1.abs_diff(p2) == 1 {
        return Ok(None);
    }
    let swapped = swap_values(sigma, 2 * pair_index - 1, 2 * pair_index);
    assert_eq!(fmaj(&swapped), fmaj(sigma), "pair swap must preserve fmaj");
    assert_eq!(
        sign(&swapped, SignGroup::B).expect("k = 2"),
        -sign(sigma, SignGroup::B).expect("k = 2"),
        "pair swap must reverse the sign"
    );
    Ok(Some(swapped))
}
