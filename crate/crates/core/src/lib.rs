//! Exact hook-length machinery for integer partitions.
//!
//! The crate is organised bottom-up:
//!
//! - [`partitions`]: the [`Partition`] type, enumeration, hook multisets,
//!   t-core tests and standard Young tableaux counts.
//! - [`abacus`]: H-sets, U/V/N-codings of odd t-cores and the bijections
//!   between them, with the weight and hook-product formulas.
//! - [`quotient`]: bi-infinite 0/1 words and the t-core / t-quotient
//!   decomposition.
//! - [`series`]: exact multivariate polynomials over the rationals and
//!   truncated power series in `x` with polynomial coefficients.
//! - [`identities`]: verifiers that build both sides of each hook-length
//!   identity independently and compare them coefficient by coefficient.
//! - [`cli`]: the command-line front end.
//!
//! No floating point is used anywhere; every comparison is exact.

pub mod abacus;
pub mod cli;
mod error;
pub mod identities;
pub mod partitions;
pub mod quotient;
pub mod series;

pub use error::{Error, Result};
pub use partitions::{HookMultiset, Partition};
pub use series::{Polynomial, TruncatedSeries, Var};

/// Exact rational numbers used throughout the crate.
pub type Rational = num_rational::BigRational;
