//! One-digit binomial coefficients with arbitrary integer entries:
//! `classic_binom(n, k) = [x^k] (1 + x)^n`, reading `(1 + x)^n` at zero
//! when `k >= 0` and at infinity when `k < 0`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

/// `C(a, r)` for `0 <= r <= a`, exact.
pub(crate) fn choose(a: u128, r: u128) -> BigUint {
    debug_assert!(r <= a);
    let r = r.min(a - r);
    let mut small: u128 = 1;
    let mut i: u128 = 1;
    // exact at every step: small * (a - r + i) / i == C(a - r + i, i)
    while i <= r {
        match small.checked_mul(a - r + i) {
            Some(p) => small = p / i,
            None => break,
        }
        i += 1;
    }
    if i > r {
        return BigUint::from(small);
    }
    let mut acc = BigUint::from(small);
    while i <= r {
        acc *= a - r + i;
        acc /= i;
        i += 1;
    }
    acc
}

fn signed(magnitude: BigUint, negative: bool) -> BigInt {
    let v = BigInt::from(magnitude);
    if negative {
        -v
    } else {
        v
    }
}

/// Generalized binomial coefficient over all of `Z x Z`.
///
/// * `n >= 0`: `C(n, k)` for `0 <= k <= n`, else 0.
/// * `n < 0, k >= 0`: `(-1)^k C(-n + k - 1, k)`.
/// * `n < 0, k <= n`: `(-1)^(n - k) C(-k - 1, n - k)`.
/// * `n < 0, n < k < 0`: 0.
pub fn classic_binom(n: i64, k: i64) -> BigInt {
    let (n, k) = (i128::from(n), i128::from(k));
    if n >= 0 {
        if (0..=n).contains(&k) {
            BigInt::from(choose(n as u128, k as u128))
        } else {
            BigInt::zero()
        }
    } else if k >= 0 {
        signed(choose((-n + k - 1) as u128, k as u128), k % 2 == 1)
    } else if k <= n {
        signed(choose((-k - 1) as u128, (n - k) as u128), (n - k) % 2 == 1)
    } else {
        BigInt::zero()
    }
}

/// `classic_binom(n, j)` for `j` in `lo..=hi`, as a dense table.
pub(crate) fn classic_row(n: i64, lo: i64, hi: i64) -> Vec<BigInt> {
    (lo..=hi).map(|j| classic_binom(n, j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn worked_values() {
        assert_eq!(classic_binom(5, 2), big(10));
        assert_eq!(classic_binom(-3, 2), big(6));
        assert_eq!(classic_binom(-2, -5), big(-4));
        assert_eq!(classic_binom(-1, -3), big(1));
        assert_eq!(classic_binom(3, -2), big(0));
        assert_eq!(classic_binom(0, -1), big(0));
        assert_eq!(classic_binom(0, 0), big(1));
    }

    #[test]
    fn low_order_closed_forms() {
        for j in 0..40i64 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            assert_eq!(classic_binom(-1, j), big(sign));
            assert_eq!(classic_binom(-2, j), big(sign * (j + 1)));
            assert_eq!(classic_binom(-3, j), big(sign * (j + 1) * (j + 2) / 2));
        }
        for j in 1..40i64 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            assert_eq!(classic_binom(-1, -j), big(-sign));
            if j >= 2 {
                assert_eq!(classic_binom(-2, -j), big(sign * (j - 1)));
            }
            if j >= 3 {
                assert_eq!(classic_binom(-3, -j), big(-sign * (j - 1) * (j - 2) / 2));
            }
        }
    }

    #[test]
    fn big_values_leave_u128() {
        let v = classic_binom(200, 100);
        assert_eq!(
            v.to_string(),
            "90548514656103281165404177077484163874504589675413336841320"
        );
        assert_eq!(classic_binom(-101, 100), v);
    }

    #[test]
    fn row_matches_pointwise() {
        let row = classic_row(-4, -10, 10);
        for (i, j) in (-10..=10).enumerate() {
            assert_eq!(row[i], classic_binom(-4, j));
        }
    }

    proptest! {
        #[test]
        fn pascal_rule(n in -40i64..40, k in -80i64..80) {
            prop_assert_eq!(
                classic_binom(n, k) + classic_binom(n, k - 1),
                classic_binom(n + 1, k)
            );
        }

        #[test]
        fn symmetry(n in -40i64..40, k in -80i64..80) {
            prop_assert_eq!(classic_binom(n, k), classic_binom(n, n - k));
        }
    }
}
