//! Labeled partitions: a partition paired with a colored permutation of
//! the same length.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::IntPartition;
use crate::perm::ColoredPermutation;
use crate::stats::flag_cmp;

/// A pair `(λ, π)` with `λ` a partition of capacity `n` and `π ∈ S_n^k`.
///
/// Construction only requires equal lengths; standardness and the
/// divisibility condition are predicates, not invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLabeledPartition", into = "RawLabeledPartition")]
pub struct LabeledPartition {
    lambda: IntPartition,
    pi: ColoredPermutation,
}

#[derive(Serialize, Deserialize)]
struct RawLabeledPartition {
    lambda: IntPartition,
    pi: ColoredPermutation,
}

impl TryFrom<RawLabeledPartition> for LabeledPartition {
    type Error = Error;

    fn try_from(raw: RawLabeledPartition) -> Result<Self> {
        LabeledPartition::new(raw.lambda, raw.pi)
    }
}

impl From<LabeledPartition> for RawLabeledPartition {
    fn from(lp: LabeledPartition) -> Self {
        RawLabeledPartition {
            lambda: lp.lambda,
            pi: lp.pi,
        }
    }
}

impl LabeledPartition {
    pub fn new(lambda: IntPartition, pi: ColoredPermutation) -> Result<Self> {
        if lambda.capacity() != pi.n() {
            return Err(Error::LengthMismatch(lambda.capacity(), pi.n()));
        }
        Ok(LabeledPartition { lambda, pi })
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

    pub fn into_parts(self) -> (IntPartition, ColoredPermutation) {
        (self.lambda, self.pi)
    }

    /// Standardness: every descent of `π` (in the flag order) forces a
    /// strict drop in `λ`.
    pub fn is_standard(&self) -> bool {
        (1..self.n()).all(|i| {
            flag_cmp(self.pi.element(i - 1), self.pi.element(i)) != Ordering::Greater
                || self.lambda.part(i) > self.lambda.part(i + 1)
        })
    }

    /// Membership in `Q_π`: standard, and `λ_i − c(π(i)) ≡ 0 (mod k)` at
    /// every position.
    pub fn is_in_q_pi(&self) -> bool {
        let k = self.pi.k() as u64;
        self.is_standard()
            && (1..=self.n())
                .all(|i| self.lambda.part(i) % k == self.pi.colors()[i - 1] as u64 % k)
    }
}

impl fmt::Display for LabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.lambda, self.pi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labeled(parts: &[u64], text: &str, k: usize) -> LabeledPartition {
        let pi = ColoredPermutation::parse(text, k).unwrap();
        let lambda = IntPartition::new(parts.to_vec(), pi.n()).unwrap();
        LabeledPartition::new(lambda, pi).unwrap()
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let pi = ColoredPermutation::parse("1_0 2_0", 1).unwrap();
        let lambda = IntPartition::new(vec![1], 1).unwrap();
        assert_eq!(
            LabeledPartition::new(lambda, pi),
            Err(Error::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn the_worked_labeled_partition_is_standard() {
        let lp = labeled(&[29, 29, 27, 16, 14, 10, 5], "3_2 4_2 6_0 5_1 7_2 2_1 1_2", 3);
        assert!(lp.is_standard());
        assert!(lp.is_in_q_pi());

        // Breaking the strict drop at the descent in position 3 breaks
        // standardness.
        let lp = labeled(&[29, 29, 16, 16, 14, 10, 5], "3_2 4_2 6_0 5_1 7_2 2_1 1_2", 3);
        assert!(!lp.is_standard());

        // Standard but the residues disagree with the colors.
        let lp = labeled(&[30, 29, 27, 16, 14, 10, 5], "3_2 4_2 6_0 5_1 7_2 2_1 1_2", 3);
        assert!(lp.is_standard());
        assert!(!lp.is_in_q_pi());
    }

    #[test]
    fn predicates_agree_with_quantifier_scan() {
        // Oracle: evaluate the defining quantifiers with a naive loop.
        for pi in ColoredPermutation::enumerate(3, 2).unwrap() {
            for lambda in IntPartition::enumerate_up_to(3, 4) {
                let lp = LabeledPartition::new(lambda.clone(), pi.clone()).unwrap();
                let naive_standard = (1..3).all(|i| {
                    let descent =
                        flag_cmp(pi.element(i - 1), pi.element(i)) == Ordering::Greater;
                    !descent || lambda.part(i) > lambda.part(i + 1)
                });
                let naive_q = naive_standard
                    && (1..=3).all(|i| {
                        (lambda.part(i) as i64 - pi.colors()[i - 1] as i64).rem_euclid(2) == 0
                    });
                assert_eq!(lp.is_standard(), naive_standard);
                assert_eq!(lp.is_in_q_pi(), naive_q);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let lp = labeled(&[3, 1], "2_1 1_0", 2);
        let json = serde_json::to_string(&lp).unwrap();
        let back: LabeledPartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, lp);
    }
}
