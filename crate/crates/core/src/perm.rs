//! Colored permutations: elements of the wreath product `C_k ≀ S_n`.
//!
//! A colored permutation of length `n` with `k` colors is a permutation
//! `d(1) … d(n)` of `{1..n}` together with a color `c(i) ∈ {0..k-1}`
//! attached to each window position. The canonical textual form writes each
//! entry as `d_c`, e.g. `4_2 3_0 1_2 5_0 2_1`. For `k = 1` this is the
//! symmetric group `S_n`; for `k = 2` it is the group of signed permutations
//! `B_n`, where color 1 plays the role of the minus sign.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One window entry of a colored permutation: a value with a color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredElement {
    pub value: usize,
    pub color: usize,
}

impl ColoredElement {
    pub fn new(value: usize, color: usize) -> Self {
        ColoredElement { value, color }
    }
}

impl fmt::Display for ColoredElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.color)
    }
}

/// A colored permutation in window notation.
///
/// Invariants (enforced by every constructor, including deserialization):
/// the values form a bijection on `{1..n}`, every color lies in
/// `{0..k-1}`, and `k ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoredPermutation", into = "RawColoredPermutation")]
pub struct ColoredPermutation {
    k: usize,
    values: Vec<usize>,
    colors: Vec<usize>,
}

/// Wire form: `{"n":…, "k":…, "values":[…], "colors":[…]}`.
#[derive(Serialize, Deserialize)]
struct RawColoredPermutation {
    n: usize,
    k: usize,
    values: Vec<usize>,
    colors: Vec<usize>,
}

impl TryFrom<RawColoredPermutation> for ColoredPermutation {
    type Error = Error;

    fn try_from(raw: RawColoredPermutation) -> Result<Self> {
        if raw.values.len() != raw.n {
            return Err(Error::LengthMismatch(raw.n, raw.values.len()));
        }
        ColoredPermutation::new(raw.k, raw.values, raw.colors)
    }
}

impl From<ColoredPermutation> for RawColoredPermutation {
    fn from(pi: ColoredPermutation) -> Self {
        RawColoredPermutation {
            n: pi.n(),
            k: pi.k,
            values: pi.values,
            colors: pi.colors,
        }
    }
}

impl ColoredPermutation {
    /// Builds a colored permutation, validating all invariants.
    pub fn new(k: usize, values: Vec<usize>, colors: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroColors);
        }
        if values.len() != colors.len() {
            return Err(Error::LengthMismatch(values.len(), colors.len()));
        }
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v < 1 || v > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if seen[v - 1] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v - 1] = true;
        }
        for &c in &colors {
            if c >= k {
                return Err(Error::ColorOutOfRange { color: c, k });
            }
        }
        Ok(ColoredPermutation { k, values, colors })
    }

    /// Constructor for internal callers that have already established the
    /// invariants (used on the hot enumeration path).
    pub(crate) fn from_parts_unchecked(k: usize, values: Vec<usize>, colors: Vec<usize>) -> Self {
        debug_assert!(ColoredPermutation::new(k, values.clone(), colors.clone()).is_ok());
        ColoredPermutation { k, values, colors }
    }

    /// The identity `1_0 2_0 … n_0`.
    pub fn identity(n: usize, k: usize) -> Result<Self> {
        Self::new(k, (1..=n).collect(), vec![0; n])
    }

    /// The unique (empty) element of `S_0^k`.
    pub fn empty(k: usize) -> Result<Self> {
        Self::new(k, Vec::new(), Vec::new())
    }

    /// Parses whitespace-separated `d_c` tokens.
    ///
    /// For `k = 2`, `-v` is accepted as an alias for `v_1` and a bare `v`
    /// for `v_0` (signed-permutation notation); a bare `v` is also accepted
    /// for `k = 1`. The canonical output of [`Display`] is always `d_c`.
    pub fn parse(text: &str, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroColors);
        }
        let mut values = Vec::new();
        let mut colors = Vec::new();
        for token in text.split_whitespace() {
            let (value, color) = parse_token(token, k)?;
            values.push(value);
            colors.push(color);
        }
        Self::new(k, values, colors)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The entry at 0-based window index `i`.
    pub fn element(&self, i: usize) -> ColoredElement {
        ColoredElement::new(self.values[i], self.colors[i])
    }

    /// Iterates the window entries left to right.
    pub fn elements(&self) -> impl Iterator<Item = ColoredElement> + '_ {
        self.values
            .iter()
            .zip(&self.colors)
            .map(|(&value, &color)| ColoredElement { value, color })
    }

    /// The 1-based window position holding `value`.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.values.iter().position(|&v| v == value).map(|i| i + 1)
    }

    /// Enumerates all `k^n · n!` elements of `S_n^k` exactly once, in
    /// lexicographic order on `(values, colors)`.
    pub fn enumerate(n: usize, k: usize) -> Result<SnkEnumerator> {
        if k == 0 {
            return Err(Error::ZeroColors);
        }
        Ok(SnkEnumerator {
            k,
            values: (1..=n).collect(),
            colors: vec![0; n],
            done: false,
        })
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

fn parse_token(token: &str, k: usize) -> Result<(usize, usize)> {
    let malformed = || Error::MalformedToken(token.to_string());
    if let Some((v, c)) = token.split_once('_') {
        let value: usize = v.parse().map_err(|_| malformed())?;
        let color: usize = c.parse().map_err(|_| malformed())?;
        if color >= k {
            return Err(Error::ColorOutOfRange { color, k });
        }
        return Ok((value, color));
    }
    if k == 2 {
        if let Some(v) = token.strip_prefix('-') {
            let value: usize = v.parse().map_err(|_| malformed())?;
            return Ok((value, 1));
        }
    }
    if k <= 2 {
        let value: usize = token.parse().map_err(|_| malformed())?;
        return Ok((value, 0));
    }
    Err(malformed())
}

/// Deterministic exhaustive enumerator over `S_n^k`.
///
/// Value windows advance through `S_n` in lexicographic order; for each
/// window, color vectors run through all `k^n` tuples in lexicographic
/// order (rightmost position fastest).
pub struct SnkEnumerator {
    k: usize,
    values: Vec<usize>,
    colors: Vec<usize>,
    done: bool,
}

impl Iterator for SnkEnumerator {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<ColoredPermutation> {
        if self.done {
            return None;
        }
        let item = ColoredPermutation::from_parts_unchecked(
            self.k,
            self.values.clone(),
            self.colors.clone(),
        );
        if !advance_colors(&mut self.colors, self.k) && !next_permutation(&mut self.values) {
            self.done = true;
        }
        Some(item)
    }
}

/// Lexicographic odometer step; returns false (and resets) on wrap-around.
pub(crate) fn advance_colors(colors: &mut [usize], k: usize) -> bool {
    for c in colors.iter_mut().rev() {
        if *c + 1 < k {
            *c += 1;
            return true;
        }
        *c = 0;
    }
    false
}

/// In-place lexicographic successor; returns false (and resets to the
/// identity) after the last permutation.
fn next_permutation(values: &mut [usize]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        values.reverse();
        return false;
    }
    let mut j = n - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}
