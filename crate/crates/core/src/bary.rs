//! `binom(n, k)_b` for all integers `n`, `k`, with two independent
//! evaluators for negative `n`:
//!
//! * [`bary_binom_series`] expands `f_{n,b}` at zero (`k >= 0`) or at
//!   infinity (`k < 0`) and reads off the coefficient.
//! * [`bary_binom_partition`] sums digit-wise products of
//!   [`classic_binom`] over restricted partitions of `|k|`.
//!
//! For nonnegative `n` both reduce to the digit product
//! `prod_l C(n_l, k_l)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::classic::{classic_binom, classic_row};
use crate::digits::{check_base, pair_length, to_digits};
use crate::partitions::{sum_product, weights, FactorTable};
use crate::series::{gf_expand, Point};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    /// Digit product for `n >= 0`, partition sum for `n < 0`.
    #[default]
    Auto,
    Series,
    Partition,
    DigitProduct,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Series => "series",
            Method::Partition => "partition",
            Method::DigitProduct => "digit-product",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BaryQuery {
    pub n: i64,
    pub k: i64,
    pub base: u32,
    pub method: Method,
}

impl BaryQuery {
    pub fn new(n: i64, k: i64, base: u32) -> Self {
        Self {
            n,
            k,
            base,
            method: Method::Auto,
        }
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }
}

pub fn bary_binom(q: &BaryQuery) -> Result<BigInt> {
    check_base(q.base)?;
    match q.method {
        Method::Auto if q.n >= 0 => digit_product(q.n, q.k, q.base),
        Method::Auto => {
            if q.n < q.k && q.k < 0 {
                return Ok(BigInt::zero());
            }
            bary_binom_partition(q.n, q.k, q.base)
        }
        Method::Series => bary_binom_series(q.n, q.k, q.base),
        Method::Partition => bary_binom_partition(q.n, q.k, q.base),
        Method::DigitProduct if q.n >= 0 => digit_product(q.n, q.k, q.base),
        Method::DigitProduct => Err(Error::MethodDomain {
            method: Method::DigitProduct.name(),
            n: q.n,
        }),
    }
}

/// Shorthand for [`bary_binom`] with [`Method::Auto`].
pub fn binom(n: i64, k: i64, base: u32) -> Result<BigInt> {
    bary_binom(&BaryQuery::new(n, k, base))
}

/// `prod_l C(n_l, k_l)` over the shared digit length; zero unless
/// `0 <= k <= n`.
fn digit_product(n: i64, k: i64, base: u32) -> Result<BigInt> {
    debug_assert!(n >= 0);
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let len = pair_length(n, k, base)?;
    let nd = to_digits(n, base, len)?;
    let kd = to_digits(k, base, len)?;
    let mut acc = BigInt::one();
    for (&a, &c) in nd.digits().iter().zip(kd.digits()) {
        if c > a {
            return Ok(BigInt::zero());
        }
        acc *= classic_binom(a, c);
    }
    Ok(acc)
}

/// Partition-sum evaluation for negative `n`.
///
/// With `m = |n| = (m_{N-1} ... m_0)_b`:
/// for `k >= 0`, the sum over `j` with `sum j_l b^l = k` of
/// `prod_l classic_binom(-m_l, j_l)`; for `k < 0`, the sum over `j` with
/// `sum j_l b^l = -k` and `j_l >= m_l` of `prod_l classic_binom(-m_l, -j_l)`.
pub fn bary_binom_partition(n: i64, k: i64, base: u32) -> Result<BigInt> {
    check_base(base)?;
    if n >= 0 {
        return Err(Error::NonNegativeEntry {
            op: "partition evaluation",
            n,
        });
    }
    let len = pair_length(n, k, base)?;
    let digits = to_digits(n, base, len)?;
    let w = weights(base, len)?;
    let target = k.unsigned_abs();
    let factors: Vec<FactorTable> = digits
        .digits()
        .iter()
        .zip(&w)
        .map(|(&d, &weight)| {
            let max = i64::try_from(target / weight).unwrap_or(i64::MAX);
            if k >= 0 {
                FactorTable {
                    lo: 0,
                    values: classic_row(d, 0, max),
                }
            } else {
                // j_l >= |d|, factor classic_binom(d, -j_l)
                let lo = d.unsigned_abs();
                let values = if (lo as i64) > max {
                    Vec::new()
                } else {
                    classic_row(d, -max, d).into_iter().rev().collect()
                };
                FactorTable { lo, values }
            }
        })
        .collect();
    Ok(sum_product(target, &w, &factors))
}

/// Number of retained terms that reaches the coefficient of `x^k`, plus
/// one term of margin.
fn sufficient_order(n: i64, k: i64, point: Point) -> Result<usize> {
    let index = match point {
        Point::Zero => i128::from(k),
        // lead exponent of 1/x is -n; x^k sits at 1/x-exponent -k
        Point::Infinity => i128::from(n) - i128::from(k),
    };
    usize::try_from(index.max(0) + 2).map_err(|_| Error::Overflow("series order"))
}

/// Coefficient extraction from the truncated expansion of `f_{n,b}`.
pub fn bary_binom_series(n: i64, k: i64, base: u32) -> Result<BigInt> {
    check_base(base)?;
    let point = Point::for_exponent(k);
    let order = sufficient_order(n, k, point)?;
    gf_expand(n, base, point, order)?.coefficient(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn worked_values() {
        assert_eq!(binom(-6, 7, 4).unwrap(), big(-4));
        assert_eq!(binom(-6, -8, 4).unwrap(), big(3));
        assert_eq!(binom(-6, -7, 4).unwrap(), big(-2));
        assert_eq!(binom(6, 3, 4).unwrap(), big(0));
        assert_eq!(binom(-6, -3, 4).unwrap(), big(0));
        for n in -20..=20 {
            for b in 2..=7 {
                assert_eq!(binom(n, 0, b).unwrap(), big(1));
            }
        }
    }

    #[test]
    fn partition_route() {
        // (-1)(-4) + 1(-8)
        assert_eq!(bary_binom_partition(-6, 7, 4).unwrap(), big(-4));
        // 1 * 3
        assert_eq!(bary_binom_partition(-6, -8, 4).unwrap(), big(3));
        assert_eq!(bary_binom_partition(-6, -3, 4).unwrap(), big(0));
        assert_eq!(
            bary_binom_partition(6, 3, 4),
            Err(Error::NonNegativeEntry {
                op: "partition evaluation",
                n: 6
            })
        );
    }

    #[test]
    fn series_route() {
        assert_eq!(bary_binom_series(-6, 7, 4).unwrap(), big(-4));
        assert_eq!(bary_binom_series(-6, -13, 4).unwrap(), big(-4));
        assert_eq!(bary_binom_series(6, 5, 4).unwrap(), big(2));
        assert_eq!(bary_binom_series(6, -2, 4).unwrap(), big(0));
        assert_eq!(bary_binom_series(6, 9, 4).unwrap(), big(0));
        assert_eq!(bary_binom_series(-6, -3, 4).unwrap(), big(0));
    }

    #[test]
    fn method_dispatch() {
        let q = BaryQuery::new(-6, 7, 4);
        for m in [Method::Auto, Method::Series, Method::Partition] {
            assert_eq!(bary_binom(&q.with_method(m)).unwrap(), big(-4));
        }
        assert!(matches!(
            bary_binom(&q.with_method(Method::DigitProduct)),
            Err(Error::MethodDomain { .. })
        ));
        assert_eq!(
            bary_binom(&BaryQuery::new(6, 5, 4).with_method(Method::DigitProduct)).unwrap(),
            big(2)
        );
        assert_eq!(binom(3, 1, 1), Err(Error::InvalidBase(1)));
        assert_eq!(bary_binom_series(3, 1, 0), Err(Error::InvalidBase(0)));
    }

    #[test]
    fn nonnegative_routes_agree() {
        for b in 2..=6 {
            for n in 0..=80 {
                for k in -5..=90 {
                    assert_eq!(
                        binom(n, k, b).unwrap(),
                        bary_binom_series(n, k, b).unwrap(),
                        "n={n} k={k} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn series_agrees_with_partitions_small() {
        for b in 2..=5 {
            for n in -30..=-1 {
                for k in -60..=60 {
                    assert_eq!(
                        bary_binom_series(n, k, b).unwrap(),
                        bary_binom_partition(n, k, b).unwrap(),
                        "n={n} k={k} b={b}"
                    );
                }
            }
        }
    }
}
