//! Integer partitions with bounded part count.
//!
//! A partition is stored zero-padded to its capacity `n`, so the positional
//! part `λ_i` is defined for every `i ∈ {1..n}`. Two partitions with the
//! same nonzero parts but different capacities are distinct values.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers with at most `n`
/// parts, stored as exactly `n` entries (trailing zeros canonical).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawIntPartition", into = "RawIntPartition")]
pub struct IntPartition {
    parts: Vec<u64>,
}

/// Wire form: `{"parts":[…]}`; the stored (padded) length is the capacity.
#[derive(Serialize, Deserialize)]
struct RawIntPartition {
    parts: Vec<u64>,
}

impl TryFrom<RawIntPartition> for IntPartition {
    type Error = Error;

    fn try_from(raw: RawIntPartition) -> Result<Self> {
        let capacity = raw.parts.len();
        IntPartition::new(raw.parts, capacity)
    }
}

impl From<IntPartition> for RawIntPartition {
    fn from(lambda: IntPartition) -> Self {
        RawIntPartition {
            parts: lambda.parts,
        }
    }
}

impl IntPartition {
    /// Builds a partition from the given parts, zero-padded to `capacity`.
    ///
    /// Fails if the parts are not weakly decreasing or if more than
    /// `capacity` of them are nonzero.
    pub fn new(mut parts: Vec<u64>, capacity: usize) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::NotWeaklyDecreasing(w[0], w[1]));
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > capacity {
            return Err(Error::TooManyParts {
                parts: parts.len(),
                capacity,
            });
        }
        parts.resize(capacity, 0);
        Ok(IntPartition { parts })
    }

    /// The empty partition with the given capacity (all parts zero).
    pub fn zeros(capacity: usize) -> Self {
        IntPartition {
            parts: vec![0; capacity],
        }
    }

    /// Parses whitespace-separated parts; the token count is the capacity.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in text.split_whitespace() {
            let part: u64 = token
                .parse()
                .map_err(|_| Error::MalformedToken(token.to_string()))?;
            parts.push(part);
        }
        let capacity = parts.len();
        Self::new(parts, capacity)
    }

    /// All stored parts, including trailing zeros.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The capacity `n` (= stored length).
    pub fn capacity(&self) -> usize {
        self.parts.len()
    }

    /// The part `λ_i`, 1-based; total for `i ∈ {1..n}`.
    pub fn part(&self, i: usize) -> u64 {
        self.parts[i - 1]
    }

    /// `|λ|`, the sum of all parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn nonzero_parts(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// Whether every part is divisible by `k` (membership in `P_n^k`).
    pub fn is_divisible_by(&self, k: usize) -> bool {
        let k = k as u64;
        k > 0 && self.parts.iter().all(|&p| p % k == 0)
    }

    /// Errors with the offending part unless `self ∈ P_n^k`.
    pub fn ensure_divisible_by(&self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::ZeroColors);
        }
        match self.parts.iter().find(|&&p| p % k as u64 != 0) {
            Some(&part) => Err(Error::PartNotDivisible { part, k }),
            None => Ok(()),
        }
    }

    /// All partitions with at most `capacity` parts and weight at most
    /// `max_weight`, in a deterministic order.
    pub fn enumerate_up_to(capacity: usize, max_weight: u64) -> Vec<IntPartition> {
        let mut out = Vec::new();
        let mut parts = Vec::new();
        collect_partitions(capacity, max_weight, u64::MAX, &mut parts, &mut out);
        out.iter()
            .map(|p| IntPartition::new(p.clone(), capacity).expect("generated partition is valid"))
            .collect()
    }
}

fn collect_partitions(
    slots: usize,
    budget: u64,
    bound: u64,
    parts: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    out.push(parts.clone());
    if slots == 0 {
        return;
    }
    let top = bound.min(budget);
    for p in (1..=top).rev() {
        parts.push(p);
        collect_partitions(slots - 1, budget - p, p, parts, out);
        parts.pop();
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pads_to_capacity() {
        let lambda = IntPartition::new(vec![18, 18, 18, 9, 9, 6, 3], 7).unwrap();
        assert_eq!(lambda.capacity(), 7);
        assert_eq!(lambda.weight(), 81);
        assert_eq!(lambda.part(1), 18);
        assert_eq!(lambda.part(7), 3);

        let padded = IntPartition::new(vec![5, 2], 4).unwrap();
        assert_eq!(padded.parts(), &[5, 2, 0, 0]);
        assert_eq!(padded.nonzero_parts(), 2);
    }

    #[test]
    fn rejects_bad_sequences() {
        assert_eq!(
            IntPartition::new(vec![1, 2], 2),
            Err(Error::NotWeaklyDecreasing(1, 2))
        );
        assert_eq!(
            IntPartition::new(vec![3, 2, 1], 2),
            Err(Error::TooManyParts {
                parts: 3,
                capacity: 2
            })
        );
        // Trailing zeros do not count against the capacity.
        assert!(IntPartition::new(vec![3, 2, 0, 0], 2).is_ok());
    }

    #[test]
    fn divisibility_predicate() {
        let lambda = IntPartition::new(vec![18, 12, 9], 3).unwrap();
        assert!(lambda.is_divisible_by(3));
        assert!(!lambda.is_divisible_by(2));
        assert!(lambda.ensure_divisible_by(3).is_ok());
        assert_eq!(
            lambda.ensure_divisible_by(4),
            Err(Error::PartNotDivisible { part: 18, k: 4 })
        );
    }

    #[test]
    fn parse_and_display_round_trip() {
        let lambda = IntPartition::parse("18 18 18 9 9 6 3").unwrap();
        assert_eq!(lambda.to_string(), "18 18 18 9 9 6 3");
        assert_eq!(IntPartition::parse("").unwrap(), IntPartition::zeros(0));
    }

    #[test]
    fn json_round_trip_keeps_capacity() {
        let lambda = IntPartition::new(vec![5, 2], 4).unwrap();
        let json = serde_json::to_string(&lambda).unwrap();
        assert_eq!(json, r#"{"parts":[5,2,0,0]}"#);
        let back: IntPartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, lambda);
        assert!(serde_json::from_str::<IntPartition>(r#"{"parts":[1,2]}"#).is_err());
    }

    #[test]
    fn enumeration_counts_match_partition_numbers() {
        // Number of partitions of w into at most 2 parts is floor(w/2)+1.
        let all = IntPartition::enumerate_up_to(2, 6);
        for w in 0..=6u64 {
            let count = all.iter().filter(|p| p.weight() == w).count() as u64;
            assert_eq!(count, w / 2 + 1, "weight {w}");
        }
        // Capacity 0 admits only the empty partition.
        assert_eq!(IntPartition::enumerate_up_to(0, 5).len(), 1);
    }
}
