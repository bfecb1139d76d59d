//! Exact b-ary binomial coefficients for arbitrary integer entries.
//!
//! The coefficient `binom(n, k)_b` is the coefficient of `x^k` in
//! `f_{n,b}(x) = prod_l (1 + x^(b^l))^(n_l)`, where `n_l` are the base-`b`
//! digits of `n` (all nonpositive when `n` is negative). For negative `n`
//! the product is expanded at zero for `k >= 0` and at infinity for `k < 0`.
//!
//! Two independent evaluators are provided: a truncated Laurent-series
//! expansion ([`series`]) and a sum over restricted partitions
//! ([`partitions`]). The [`identities`] module sweeps both through the
//! known identities (symmetry, Pascal-like recurrences, Chu-Vandermonde,
//! Lucas congruence) and reports any counterexample it finds.

pub mod altdefs;
pub mod bary;
pub mod classic;
pub mod digits;
mod error;
pub mod exec;
pub mod identities;
pub mod partitions;
pub mod series;

pub use altdefs::{dstar_binom, star_binom, AltVariant};
pub use bary::{bary_binom, bary_binom_partition, bary_binom_series, binom, BaryQuery, Method};
pub use classic::classic_binom;
pub use digits::{digit_sum, pair_length, to_digits, DigitVector};
pub use error::{Error, Result};
pub use exec::Exec;
pub use series::{gf_expand, LaurentSeries, Point};
