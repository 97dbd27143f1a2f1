//! Exact integer-coefficient polynomials in one formal variable `q`.
//!
//! Coefficients are arbitrary-precision integers; addition, subtraction,
//! and multiplication are exact. The canonical form has no trailing zero
//! coefficient, and the zero polynomial is the empty coefficient list.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial `Σ coeffs[d] · q^d` in canonical (trimmed) form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawQPolynomial", into = "RawQPolynomial")]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        QPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `coeff · q^degree`.
    pub fn monomial(coeff: BigInt, degree: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        QPolynomial { coeffs }
    }

    /// Builds a polynomial from coefficients (index = degree), trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `q^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    /// All coefficients in canonical form.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact product. The only failure mode is a result degree that does
    /// not fit in the address space, which surfaces as a distinct error
    /// rather than wrapping.
    pub fn mul_checked(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let len = (self.coeffs.len() - 1)
            .checked_add(other.coeffs.len())
            .ok_or(Error::DegreeOverflow)?;
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Exact product (panics on address-space overflow; see
    /// [`mul_checked`](Self::mul_checked)).
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_checked(other)
            .expect("polynomial degree overflow")
    }

    /// The substitution `q ↦ -q`: negates the coefficient of every odd
    /// power. Applying it twice is the identity.
    pub fn substitute_neg_q(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| if d % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Drops every term of degree greater than `max_degree`.
    pub fn truncated(&self, max_degree: usize) -> Self {
        if self.coeffs.len() <= max_degree + 1 {
            return self.clone();
        }
        Self::from_coeffs(self.coeffs[..=max_degree].to_vec())
    }

    /// The shift `q^d · self`.
    pub fn shifted(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// The coefficient sum, i.e. the evaluation at `q = 1`.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, other: &QPolynomial) -> QPolynomial {
        QPolynomial::add(self, other)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, other: &QPolynomial) -> QPolynomial {
        QPolynomial::sub(self, other)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, other: &QPolynomial) -> QPolynomial {
        QPolynomial::mul(self, other)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if d == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", power(d))?;
            } else {
                write!(f, "{abs}{}", power(d))?;
            }
        }
        Ok(())
    }
}

fn power(d: usize) -> String {
    if d == 1 {
        "q".to_string()
    } else {
        format!("q^{d}")
    }
}

/// Wire form: `{"var":"q","coeffs":[…]}`. Coefficients that fit in an
/// `i64` are emitted as JSON numbers, anything larger as a decimal string;
/// both forms are accepted on input.
#[derive(Serialize, Deserialize)]
struct RawQPolynomial {
    var: String,
    coeffs: Vec<CoeffRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

impl TryFrom<RawQPolynomial> for QPolynomial {
    type Error = Error;

    fn try_from(raw: RawQPolynomial) -> Result<Self> {
        if raw.var != "q" {
            return Err(Error::MalformedToken(raw.var));
        }
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for c in raw.coeffs {
            coeffs.push(match c {
                CoeffRepr::Small(v) => BigInt::from(v),
                CoeffRepr::Big(s) => s
                    .parse::<BigInt>()
                    .map_err(|_| Error::MalformedToken(s.clone()))?,
            });
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }
}

impl From<QPolynomial> for RawQPolynomial {
    fn from(p: QPolynomial) -> Self {
        let coeffs = p
            .coeffs
            .into_iter()
            .map(|c| match i64::try_from(&c) {
                Ok(v) => CoeffRepr::Small(v),
                Err(_) => CoeffRepr::Big(c.to_string()),
            })
            .collect();
        RawQPolynomial {
            var: "q".to_string(),
            coeffs,
        }
    }
}
