//! Closed-form `q`-series: brackets, products, Gaussian binomials, and the
//! derangement / signed-counting formulas, all as exact integer
//! polynomials.
//!
//! Formulas that are usually written with denominators are built
//! denominator-free here: factors are cleared symbolically before any
//! arithmetic, so the whole module stays inside exact integer polynomial
//! arithmetic. Empty products are 1, empty sums are 0.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qpoly::QPolynomial;

/// The `q`-bracket `[m]_q = 1 + q + … + q^{m-1}` (degree `m-1`, all
/// coefficients 1).
pub fn q_bracket(m: usize) -> Result<QPolynomial> {
    if m < 1 {
        return Err(Error::BracketOrderZero);
    }
    Ok(QPolynomial::from_coeffs(vec![BigInt::one(); m]))
}

/// `[m]_{±q}`: the bracket in base `q` or, when `negate` is set, with
/// `q ↦ -q` substituted.
fn q_bracket_signed(m: usize, negate: bool) -> Result<QPolynomial> {
    let b = q_bracket(m)?;
    Ok(if negate { b.substitute_neg_q() } else { b })
}

/// `Π_{i=1}^{n} [ik]_q`, the generating function of `fmaj_k` over `S_n^k`.
/// Its value at `q = 1` is `k^n · n!`.
pub fn fmaj_product_rhs(n: usize, k: usize) -> Result<QPolynomial> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    let mut product = QPolynomial::one();
    for i in 1..=n {
        product = product.mul_checked(&q_bracket(i * k)?)?;
    }
    Ok(product)
}

/// The Gaussian binomial `[n choose m]` in the variable `q^k`, computed by
/// the q-Pascal recurrence (exact and division-free).
///
/// Satisfies the symmetry `result(n, m) = result(n, n-m)`.
pub fn gaussian_binomial(n: usize, m: usize, k: usize) -> Result<QPolynomial> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    if m > n {
        return Err(Error::PositionOutOfRange { position: m, max: n });
    }
    // row[j] = [i choose j]_{q^k}; recurrence
    // [i, j] = [i-1, j-1] + q^{k·j} · [i-1, j].
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for _i in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(QPolynomial::one());
        for j in 1..row.len() {
            next.push(row[j - 1].add(&row[j].shifted(k * j)));
        }
        next.push(QPolynomial::one());
        row = next;
    }
    Ok(row[m].clone())
}

/// The `q`-derangement polynomial `d_n^k(q)`, built denominator-free as
/// `Σ_{j=0}^{n} (-1)^j q^{k·C(j,2)} Π_{i=j+1}^{n} [ik]_q`.
///
/// `k = 1` gives the classical `q`-derangement numbers and `k = 2` the
/// signed-permutation ones.
pub fn derangement_rhs(n: usize, k: usize) -> Result<QPolynomial> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    // suffix[j] = Π_{i=j+1}^{n} [ik]_q, computed right to left.
    let mut suffix = vec![QPolynomial::one(); n + 1];
    for j in (0..n).rev() {
        suffix[j] = suffix[j + 1].mul_checked(&q_bracket((j + 1) * k)?)?;
    }
    let mut total = QPolynomial::zero();
    for (j, tail) in suffix.iter().enumerate() {
        let exponent = k * j * j.saturating_sub(1) / 2;
        let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        total = total.add(&tail.mul_checked(&QPolynomial::monomial(sign, exponent))?);
    }
    Ok(total)
}

/// `Π_{i=1}^{n} [i]_{(-1)^{i-1} q} = [1]_q [2]_{-q} [3]_q …`, the signed
/// `maj` generating function over `S_n`.
pub fn gessel_simon_rhs(n: usize) -> Result<QPolynomial> {
    let mut product = QPolynomial::one();
    for i in 1..=n {
        product = product.mul_checked(&q_bracket_signed(i, i % 2 == 0)?)?;
    }
    Ok(product)
}

/// `Π_{i=1}^{n} [2i]_{(-1)^i q} = [2]_{-q} [4]_q …`, the signed `fmaj`
/// generating function over `B_n`.
pub fn agr_rhs(n: usize) -> Result<QPolynomial> {
    let mut product = QPolynomial::one();
    for i in 1..=n {
        product = product.mul_checked(&q_bracket_signed(2 * i, i % 2 == 1)?)?;
    }
    Ok(product)
}

/// Truncation of `1/(1-q^step)` up to `max_degree`: `1 + q^step + q^{2·step} + …`.
fn truncated_geometric(step: usize, max_degree: u64) -> QPolynomial {
    let max = max_degree as usize;
    let mut coeffs = vec![BigInt::zero(); max + 1];
    let mut d = 0;
    while d <= max {
        coeffs[d] = BigInt::one();
        d += step;
    }
    QPolynomial::from_coeffs(coeffs)
}

/// Truncation to `max_weight` of `1/(1-q²)^{⌊n/2⌋}` times `1/(1-q)` when
/// `n` is odd: the closed-form generating function of the involution's
/// fixed points by weight.
pub fn gs_fixed_point_rhs(n: usize, max_weight: u64) -> QPolynomial {
    let mut product = QPolynomial::one();
    for _ in 0..n / 2 {
        product = product
            .mul(&truncated_geometric(2, max_weight))
            .truncated(max_weight as usize);
    }
    if n % 2 == 1 {
        product = product
            .mul(&truncated_geometric(1, max_weight))
            .truncated(max_weight as usize);
    }
    product
}

/// Truncation to `max_weight` of the generating function of partitions
/// with at most `max_parts` parts, `1/((1-q)(1-q²)…(1-q^{max_parts}))`.
pub fn partition_count_gf(max_parts: usize, max_weight: u64) -> QPolynomial {
    let max = max_weight as usize;
    let mut ways = vec![BigInt::zero(); max + 1];
    ways[0] = BigInt::one();
    // Partitions into at most m parts = partitions with parts of size ≤ m
    // (conjugation), counted by an unbounded coin DP.
    for size in 1..=max_parts.min(max) {
        for w in size..=max {
            let prev = ways[w - size].clone();
            ways[w] += prev;
        }
    }
    QPolynomial::from_coeffs(ways)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets() {
        assert_eq!(q_bracket(1).unwrap(), QPolynomial::one());
        assert_eq!(q_bracket(3).unwrap(), QPolynomial::from_i64_coeffs(&[1, 1, 1]));
        assert_eq!(
            q_bracket(6).unwrap(),
            QPolynomial::from_i64_coeffs(&[1, 1, 1, 1, 1, 1])
        );
        assert!(q_bracket(0).is_err());
    }

    #[test]
    fn fmaj_products() {
        assert_eq!(fmaj_product_rhs(0, 3).unwrap(), QPolynomial::one());
        assert_eq!(
            fmaj_product_rhs(1, 3).unwrap(),
            QPolynomial::from_i64_coeffs(&[1, 1, 1])
        );
        // Coefficient sum is the group order k^n · n!.
        for k in 1..=4usize {
            for n in 0..=6usize {
                let order: u64 =
                    (k as u64).pow(n as u32) * (1..=n as u64).product::<u64>().max(1);
                assert_eq!(
                    fmaj_product_rhs(n, k).unwrap().evaluate_at_one(),
                    BigInt::from(order),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(5, 0, 2).unwrap(), QPolynomial::one());
        assert_eq!(
            gaussian_binomial(2, 1, 3).unwrap(),
            QPolynomial::from_i64_coeffs(&[1, 0, 0, 1])
        );
        assert_eq!(
            gaussian_binomial(4, 2, 1).unwrap(),
            QPolynomial::from_i64_coeffs(&[1, 1, 2, 1, 1])
        );
        assert!(gaussian_binomial(2, 3, 1).is_err());
    }

    #[test]
    fn gaussian_binomial_counts_partitions_in_a_box() {
        // Independent route: [n choose m]_q is the generating function of
        // partitions inside an m × (n-m) box.
        let n = 4;
        let m = 2;
        let mut counts = vec![0i64; 5];
        for a in 0..=2u64 {
            for b in 0..=a.min(2) {
                counts[(a + b) as usize] += 1;
            }
        }
        assert_eq!(
            gaussian_binomial(n, m, 1).unwrap(),
            QPolynomial::from_i64_coeffs(&counts)
        );
    }

    #[test]
    fn gaussian_binomial_satisfies_both_recurrences_and_symmetry() {
        for n in 1..=6usize {
            for m in 0..=n {
                for k in 1..=3usize {
                    let here = gaussian_binomial(n, m, k).unwrap();
                    assert_eq!(here, gaussian_binomial(n, n - m, k).unwrap());
                    let minus_top = |mm: usize| gaussian_binomial(n - 1, mm, k).unwrap();
                    if m >= 1 && m < n {
                        let first = minus_top(m - 1).add(&minus_top(m).shifted(k * m));
                        let second = minus_top(m - 1).shifted(k * (n - m)).add(&minus_top(m));
                        assert_eq!(here, first);
                        assert_eq!(here, second);
                    }
                }
            }
        }
    }

    #[test]
    fn derangement_polynomials() {
        assert_eq!(derangement_rhs(0, 3).unwrap(), QPolynomial::one());
        assert_eq!(
            derangement_rhs(1, 3).unwrap(),
            QPolynomial::from_i64_coeffs(&[0, 1, 1])
        );
        assert_eq!(
            derangement_rhs(2, 3).unwrap(),
            QPolynomial::from_i64_coeffs(&[0, 1, 2, 3, 2, 2, 2, 1])
        );
        assert_eq!(
            derangement_rhs(2, 3).unwrap().evaluate_at_one(),
            BigInt::from(13)
        );
        // k = 1, n = 2: the single derangement 2 1 has maj 1.
        assert_eq!(
            derangement_rhs(2, 1).unwrap(),
            QPolynomial::from_i64_coeffs(&[0, 1])
        );
    }

    #[test]
    fn signed_counting_products() {
        assert_eq!(gessel_simon_rhs(1).unwrap(), QPolynomial::one());
        assert_eq!(
            gessel_simon_rhs(2).unwrap(),
            QPolynomial::from_i64_coeffs(&[1, -1])
        );
        assert_eq!(
            gessel_simon_rhs(3).unwrap(),
            QPolynomial::from_i64_coeffs(&[1, 0, 0, -1])
        );
        assert_eq!(agr_rhs(1).unwrap(), QPolynomial::from_i64_coeffs(&[1, -1]));
        assert_eq!(
            agr_rhs(2).unwrap(),
            QPolynomial::from_i64_coeffs(&[1, 0, 0, 0, -1])
        );
        assert!(agr_rhs(2).unwrap().evaluate_at_one().is_zero());
    }

    #[test]
    fn fixed_point_series() {
        assert_eq!(
            gs_fixed_point_rhs(2, 4),
            QPolynomial::from_i64_coeffs(&[1, 0, 1, 0, 1])
        );
        assert_eq!(
            gs_fixed_point_rhs(1, 2),
            QPolynomial::from_i64_coeffs(&[1, 1, 1])
        );
        assert_eq!(
            gs_fixed_point_rhs(3, 4),
            QPolynomial::from_i64_coeffs(&[1, 1, 2, 2, 3])
        );
    }

    #[test]
    fn partition_series_matches_direct_enumeration() {
        use crate::partition::IntPartition;
        for parts in 0..=4usize {
            let gf = partition_count_gf(parts, 8);
            let all = IntPartition::enumerate_up_to(parts, 8);
            for w in 0..=8u64 {
                let count = all.iter().filter(|p| p.weight() == w).count();
                assert_eq!(gf.coeff(w as usize), BigInt::from(count), "parts {parts} w {w}");
            }
        }
    }
}
