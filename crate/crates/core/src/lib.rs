//! Exact-arithmetic toolkit for colored permutations.
//!
//! The crate provides:
//!
//! - value types for colored permutations (the wreath product `C_k ≀ S_n`),
//!   integer partitions, labeled partitions, and integer-coefficient
//!   polynomials in one formal variable `q` ([`perm`], [`partition`],
//!   [`labeled`], [`qpoly`]);
//! - the classical statistics on them: descents, major index, flag major
//!   index, fixed points, derangement parts, and the hyperoctahedral length
//!   function ([`stats`]);
//! - closed-form `q`-series: `q`-brackets, Gaussian binomials, and the
//!   flag-major / derangement / signed-counting product formulas
//!   ([`qseries`]);
//! - constructive bijections between partitions, labeled partitions, and
//!   nonnegative sequences, including the derangement decomposition
//!   ([`bijections`]);
//! - a sign-reversing involution on signed labeled partitions and the
//!   pair-swap rule for signed permutations ([`involutions`]);
//! - exhaustive brute-force checkers that compare enumerated statistics
//!   against the closed forms with exact polynomial equality ([`verify`]).
//!
//! Everything is exact: polynomial coefficients are arbitrary-precision
//! integers and no identity is ever tested numerically.

pub mod bijections;
pub mod error;
pub mod involutions;
pub mod labeled;
pub mod partition;
pub mod perm;
pub mod qpoly;
pub mod qseries;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use labeled::LabeledPartition;
pub use partition::IntPartition;
pub use perm::{ColoredElement, ColoredPermutation};
pub use qpoly::QPolynomial;
