//! Statistics on colored permutations.
//!
//! Two distinct total orders on colored elements coexist here and are never
//! interchanged:
//!
//! - the *flag order* used by descents, `maj`, and `fmaj`:
//!   `1_{k-1} < … < n_{k-1} < 1_{k-2} < … < n_0`
//!   (higher color first, natural value order within a color), exposed as
//!   [`order_less`] / [`flag_cmp`];
//! - the *length order* `n̄ < … < 1̄ < 1 < … < n` used only by the
//!   hyperoctahedral length function [`bn_length`], where color 1 is read
//!   as a minus sign.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{ColoredElement, ColoredPermutation};

/// Descents, major index, color counts, and flag major index of one
/// colored permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatSummary {
    /// Descent positions, a subset of `{1..n-1}`.
    pub descent_set: Vec<usize>,
    /// Sum of the descent positions.
    pub maj: u64,
    /// `N_j` for `j = 0..k-1`; only `N_1..N_{k-1}` carry weight.
    pub color_counts: Vec<u64>,
    /// `k·maj + Σ_{j≥1} j·N_j`.
    pub fmaj: u64,
}

/// Compares two colored elements in the flag order: an element is smaller
/// when its color is larger, or when colors tie and its value is smaller.
pub fn flag_cmp(a: ColoredElement, b: ColoredElement) -> Ordering {
    b.color.cmp(&a.color).then(a.value.cmp(&b.value))
}

/// `a < b` in the flag order, validating both colors against `k`.
pub fn order_less(a: ColoredElement, b: ColoredElement, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    for e in [a, b] {
        if e.color >= k {
            return Err(Error::ColorOutOfRange { color: e.color, k });
        }
    }
    Ok(flag_cmp(a, b) == Ordering::Less)
}

/// Descent positions `{i ∈ [n-1] : π(i) > π(i+1)}` in the flag order,
/// 1-based and sorted.
pub fn descent_set(pi: &ColoredPermutation) -> Vec<usize> {
    (1..pi.n())
        .filter(|&i| flag_cmp(pi.element(i - 1), pi.element(i)) == Ordering::Greater)
        .collect()
}

/// The major index: the sum of the descent positions.
pub fn major_index(pi: &ColoredPermutation) -> u64 {
    descent_set(pi).iter().map(|&i| i as u64).sum()
}

/// `a_i` = number of descents within the suffix `π(i)…π(n)`, for each `i`.
pub(crate) fn suffix_descent_counts(pi: &ColoredPermutation) -> Vec<u64> {
    let n = pi.n();
    let mut counts = vec![0u64; n];
    for i in (0..n.saturating_sub(1)).rev() {
        let here = (flag_cmp(pi.element(i), pi.element(i + 1)) == Ordering::Greater) as u64;
        counts[i] = counts[i + 1] + here;
    }
    counts
}

/// `N_j` = number of entries with color `j`, for `j = 0..k-1`.
pub fn color_counts(pi: &ColoredPermutation) -> Vec<u64> {
    let mut counts = vec![0u64; pi.k()];
    for &c in pi.colors() {
        counts[c] += 1;
    }
    counts
}

/// The flag major index `fmaj_k = k·maj + Σ_{j=1}^{k-1} j·N_j`.
///
/// For `k = 1` this is `maj`; for `k = 2` it is `2·maj + N`, with `N` the
/// number of negative entries.
pub fn fmaj(pi: &ColoredPermutation) -> u64 {
    let weighted: u64 = pi.colors().iter().map(|&c| c as u64).sum();
    pi.k() as u64 * major_index(pi) + weighted
}

/// All statistics at once.
pub fn stat_summary(pi: &ColoredPermutation) -> StatSummary {
    let descent_set = descent_set(pi);
    let maj = descent_set.iter().map(|&i| i as u64).sum();
    let color_counts = color_counts(pi);
    let weighted: u64 = color_counts
        .iter()
        .enumerate()
        .map(|(j, &n)| j as u64 * n)
        .sum();
    StatSummary {
        descent_set,
        maj,
        color_counts,
        fmaj: pi.k() as u64 * maj + weighted,
    }
}

/// Positions `i` with `π(i) = i_0` (value `i` with color 0), 1-based.
pub fn fixed_points(pi: &ColoredPermutation) -> Vec<usize> {
    (1..=pi.n())
        .filter(|&i| pi.values()[i - 1] == i && pi.colors()[i - 1] == 0)
        .collect()
}

/// Rank-reduces a sequence of colored elements with distinct values:
/// the `i`-th smallest value becomes `i`, colors are kept.
pub fn reduce(elements: &[ColoredElement], k: usize) -> Result<ColoredPermutation> {
    let mut sorted: Vec<usize> = elements.iter().map(|e| e.value).collect();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateValue(w[0]));
        }
    }
    let values = elements
        .iter()
        .map(|e| sorted.binary_search(&e.value).expect("value present") + 1)
        .collect();
    let colors = elements.iter().map(|e| e.color).collect();
    ColoredPermutation::new(k, values, colors)
}

/// The derangement part `dp(σ)`: delete the fixed points, then rank-reduce.
/// The result has no fixed point and length `n - #fixed_points(σ)`.
pub fn derangement_part(pi: &ColoredPermutation) -> ColoredPermutation {
    let kept: Vec<ColoredElement> = (1..=pi.n())
        .filter(|&i| !(pi.values()[i - 1] == i && pi.colors()[i - 1] == 0))
        .map(|i| pi.element(i - 1))
        .collect();
    let dp = reduce(&kept, pi.k()).expect("window values are distinct");
    debug_assert!(fixed_points(&dp).is_empty());
    dp
}

/// Inserts `j` as a fixed point into a permutation of length `m`,
/// `1 ≤ j ≤ m+1`: values `≥ j` are relabeled to `value + 1` and the entry
/// `j_0` is placed at position `j`. Deleting position `j` of the result
/// and rank-reducing recovers the input.
pub fn insert_fixed_point(pi: &ColoredPermutation, j: usize) -> Result<ColoredPermutation> {
    let m = pi.n();
    if j < 1 || j > m + 1 {
        return Err(Error::PositionOutOfRange {
            position: j,
            max: m + 1,
        });
    }
    let mut values = Vec::with_capacity(m + 1);
    let mut colors = Vec::with_capacity(m + 1);
    for e in pi.elements() {
        values.push(if e.value >= j { e.value + 1 } else { e.value });
        colors.push(e.color);
    }
    values.insert(j - 1, j);
    colors.insert(j - 1, 0);
    Ok(ColoredPermutation::from_parts_unchecked(
        pi.k(),
        values,
        colors,
    ))
}

/// The length of a signed permutation (`k = 2`, color 1 read as negative):
/// inversions with respect to the order `n̄ < … < 1̄ < 1 < … < n` plus the
/// sum of the absolute values of the negative entries.
pub fn bn_length(pi: &ColoredPermutation) -> Result<u64> {
    if pi.k() != 2 {
        return Err(Error::WrongGroup {
            expected: 2,
            got: pi.k(),
        });
    }
    let signed: Vec<i64> = pi
        .elements()
        .map(|e| {
            let v = e.value as i64;
            if e.color == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    let mut inv = 0u64;
    for i in 0..signed.len() {
        for j in i + 1..signed.len() {
            if signed[i] > signed[j] {
                inv += 1;
            }
        }
    }
    let neg_sum: u64 = signed.iter().filter(|&&v| v < 0).map(|&v| (-v) as u64).sum();
    Ok(inv + neg_sum)
}

/// Which sign character to use in [`sign`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignGroup {
    /// Symmetric group `S_n` (`k = 1`): parity of the inversion count.
    A,
    /// Hyperoctahedral group `B_n` (`k = 2`): parity of [`bn_length`].
    B,
}

/// The sign `±1` of a permutation under the given group's convention.
pub fn sign(pi: &ColoredPermutation, group: SignGroup) -> Result<i64> {
    let length = match group {
        SignGroup::A => {
            if pi.k() != 1 {
                return Err(Error::WrongGroup {
                    expected: 1,
                    got: pi.k(),
                });
            }
            let values = pi.values();
            let mut inv = 0u64;
            for i in 0..values.len() {
                for j in i + 1..values.len() {
                    if values[i] > values[j] {
                        inv += 1;
                    }
                }
            }
            inv
        }
        SignGroup::B => bn_length(pi)?,
    };
    Ok(if length % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str, k: usize) -> ColoredPermutation {
        ColoredPermutation::parse(text, k).unwrap()
    }

    #[test]
    fn flag_order_examples() {
        // 5_2 < 1_0 because color 2 precedes color 0.
        assert!(order_less(ColoredElement::new(5, 2), ColoredElement::new(1, 0), 3).unwrap());
        // Same color: natural value order.
        assert!(order_less(ColoredElement::new(1, 1), ColoredElement::new(2, 1), 3).unwrap());
        // 6_0 > 7_1 since color 1 precedes color 0.
        assert!(!order_less(ColoredElement::new(6, 0), ColoredElement::new(7, 1), 3).unwrap());
        assert!(order_less(ColoredElement::new(7, 1), ColoredElement::new(6, 0), 3).unwrap());

        assert_eq!(
            order_less(ColoredElement::new(1, 3), ColoredElement::new(1, 0), 3),
            Err(Error::ColorOutOfRange { color: 3, k: 3 })
        );
    }

    #[test]
    fn flag_order_is_a_strict_total_order() {
        // Trichotomy and transitivity over all k·n elements, n,k ≤ 6.
        for k in 1..=6usize {
            for n in 1..=6usize {
                let mut all = Vec::new();
                for v in 1..=n {
                    for c in 0..k {
                        all.push(ColoredElement::new(v, c));
                    }
                }
                for &a in &all {
                    assert_eq!(flag_cmp(a, a), Ordering::Equal);
                    for &b in &all {
                        let ab = order_less(a, b, k).unwrap();
                        let ba = order_less(b, a, k).unwrap();
                        assert!(!(ab && ba));
                        assert_eq!(!ab && !ba, a == b, "{a} vs {b}");
                        for &c in &all {
                            if ab && order_less(b, c, k).unwrap() {
                                assert!(order_less(a, c, k).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn descents_of_worked_windows() {
        assert_eq!(descent_set(&perm("3_2 4_2 6_0 5_1 7_2 2_1 1_2", 3)), [3, 4, 6]);
        assert_eq!(
            descent_set(&perm("5_2 1_0 2_0 4_0 8_1 6_0 7_1 3_2", 3)),
            [4, 6, 7]
        );
        assert!(descent_set(&ColoredPermutation::identity(5, 3).unwrap()).is_empty());
    }

    #[test]
    fn fmaj_of_worked_windows() {
        let pi = perm("3_2 4_2 6_0 5_1 7_2 2_1 1_2", 3);
        let s = stat_summary(&pi);
        assert_eq!(s.maj, 13);
        assert_eq!(s.color_counts, [1, 2, 4]);
        assert_eq!(s.fmaj, 49);
        assert_eq!(fmaj(&pi), 49);

        assert_eq!(fmaj(&ColoredPermutation::identity(6, 4).unwrap()), 0);
        // The one-bar window in B_1: maj 0, one negative entry.
        assert_eq!(fmaj(&perm("1_1", 2)), 1);
    }

    #[test]
    fn summary_satisfies_the_defining_relation() {
        for pi in ColoredPermutation::enumerate(4, 3).unwrap() {
            let s = stat_summary(&pi);
            let weighted: u64 = s
                .color_counts
                .iter()
                .enumerate()
                .map(|(j, &c)| j as u64 * c)
                .sum();
            assert_eq!(s.fmaj, 3 * s.maj + weighted);
            assert_eq!(s.color_counts.iter().sum::<u64>(), 4);
            assert_eq!(s.maj, s.descent_set.iter().map(|&i| i as u64).sum::<u64>());
        }
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(fixed_points(&perm("8_0 1_2 5_1 4_0 3_1 6_0 7_1 2_2", 3)), [4, 6]);
        assert_eq!(
            fixed_points(&ColoredPermutation::identity(4, 2).unwrap()),
            [1, 2, 3, 4]
        );
        // Right value, wrong color.
        assert!(fixed_points(&perm("1_1", 3)).is_empty());
    }

    #[test]
    fn reduction_keeps_colors() {
        let elements = [
            ColoredElement::new(8, 0),
            ColoredElement::new(1, 2),
            ColoredElement::new(5, 1),
            ColoredElement::new(3, 1),
            ColoredElement::new(7, 1),
            ColoredElement::new(2, 2),
        ];
        assert_eq!(reduce(&elements, 3).unwrap(), perm("6_0 1_2 4_1 3_1 5_1 2_2", 3));

        let already = perm("2_1 1_0 3_2", 3);
        let elements: Vec<_> = already.elements().collect();
        assert_eq!(reduce(&elements, 3).unwrap(), already);

        assert_eq!(
            reduce(&[ColoredElement::new(9, 2)], 3).unwrap(),
            perm("1_2", 3)
        );
        assert_eq!(
            reduce(&[ColoredElement::new(4, 0), ColoredElement::new(4, 1)], 2),
            Err(Error::DuplicateValue(4))
        );
    }

    #[test]
    fn derangement_part_examples() {
        assert_eq!(
            derangement_part(&perm("8_0 1_2 5_1 4_0 3_1 6_0 7_1 2_2", 3)),
            perm("6_0 1_2 4_1 3_1 5_1 2_2", 3)
        );
        assert_eq!(
            derangement_part(&perm("5_2 1_0 2_0 4_0 8_1 6_0 7_1 3_2", 3)),
            perm("4_2 1_0 2_0 6_1 5_1 3_2", 3)
        );
        assert_eq!(
            derangement_part(&ColoredPermutation::identity(5, 3).unwrap()),
            ColoredPermutation::empty(3).unwrap()
        );
    }

    #[test]
    fn fixed_point_insertion_examples() {
        assert_eq!(
            insert_fixed_point(&perm("4_2 1_0 2_0 6_1 5_1 3_2", 3), 3).unwrap(),
            perm("5_2 1_0 3_0 2_0 7_1 6_1 4_2", 3)
        );
        assert_eq!(
            insert_fixed_point(&ColoredPermutation::empty(3).unwrap(), 1).unwrap(),
            perm("1_0", 3)
        );
        assert_eq!(
            insert_fixed_point(&perm("1_0", 3), 3),
            Err(Error::PositionOutOfRange { position: 3, max: 2 })
        );
    }

    #[test]
    fn insertion_and_derangement_part_are_inverse() {
        for delta in ColoredPermutation::enumerate(3, 2).unwrap() {
            if !fixed_points(&delta).is_empty() {
                continue;
            }
            for j in 1..=4 {
                let extended = insert_fixed_point(&delta, j).unwrap();
                assert_eq!(fixed_points(&extended), [j]);
                assert_eq!(derangement_part(&extended), delta);
            }
        }
    }

    #[test]
    fn derangement_part_strips_all_fixed_points() {
        for pi in ColoredPermutation::enumerate(4, 2).unwrap() {
            let dp = derangement_part(&pi);
            assert!(fixed_points(&dp).is_empty());
            assert_eq!(dp.n() + fixed_points(&pi).len(), 4);
        }
    }

    #[test]
    fn bn_length_examples() {
        assert_eq!(bn_length(&ColoredPermutation::identity(4, 2).unwrap()).unwrap(), 0);
        assert_eq!(bn_length(&perm("1_1", 2)).unwrap(), 1);
        // 2̄ 1̄ = [-2,-1]: no inversion under n̄<…<1̄<1<…<n, negative sum 3.
        assert_eq!(bn_length(&perm("-2 -1", 2)).unwrap(), 3);
        // The longest element -id has length n².
        assert_eq!(bn_length(&perm("-1 -2", 2)).unwrap(), 4);
        assert_eq!(
            bn_length(&perm("1_0", 3)),
            Err(Error::WrongGroup { expected: 2, got: 3 })
        );
    }

    #[test]
    fn sign_examples() {
        assert_eq!(
            sign(&ColoredPermutation::identity(3, 1).unwrap(), SignGroup::A).unwrap(),
            1
        );
        assert_eq!(sign(&perm("2 1", 1), SignGroup::A).unwrap(), -1);
        assert_eq!(sign(&perm("1_1", 2), SignGroup::B).unwrap(), -1);
        assert_eq!(
            sign(&perm("1_1", 2), SignGroup::A),
            Err(Error::WrongGroup { expected: 1, got: 2 })
        );
        assert_eq!(
            sign(&perm("1_0", 1), SignGroup::B),
            Err(Error::WrongGroup { expected: 2, got: 1 })
        );
    }

    /// Breadth-first search over the Coxeter generators of B_n: s_0 negates
    /// the first entry, s_i swaps positions i, i+1. Returns the word length
    /// of every element.
    fn bn_lengths_by_bfs(n: usize) -> std::collections::HashMap<Vec<i64>, u64> {
        use std::collections::{HashMap, VecDeque};
        let identity: Vec<i64> = (1..=n as i64).collect();
        let mut dist = HashMap::new();
        dist.insert(identity.clone(), 0u64);
        let mut queue = VecDeque::from([identity]);
        while let Some(cur) = queue.pop_front() {
            let d = dist[&cur];
            let mut neighbors = Vec::new();
            if n >= 1 {
                let mut s0 = cur.clone();
                s0[0] = -s0[0];
                neighbors.push(s0);
            }
            for i in 0..n.saturating_sub(1) {
                let mut si = cur.clone();
                si.swap(i, i + 1);
                neighbors.push(si);
            }
            for next in neighbors {
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        dist
    }

    #[test]
    fn bn_length_matches_generator_word_length() {
        for n in 1..=3usize {
            let oracle = bn_lengths_by_bfs(n);
            assert_eq!(oracle.len(), (1usize << n) * (1..=n).product::<usize>());
            for pi in ColoredPermutation::enumerate(n, 2).unwrap() {
                let signed: Vec<i64> = pi
                    .elements()
                    .map(|e| if e.color == 1 { -(e.value as i64) } else { e.value as i64 })
                    .collect();
                assert_eq!(bn_length(&pi).unwrap(), oracle[&signed], "window {pi}");
            }
        }
    }
}
