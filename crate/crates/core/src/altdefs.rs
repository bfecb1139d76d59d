//! Two alternative extensions to a negative first entry, both of which
//! disagree with the generating-function definition in general:
//!
//! * star: the digit-wise product `prod_l classic_binom(n_l, k_l)`;
//! * double-star: a sum over tuples whose entries add up to the digit sum
//!   of `|k|`, with no positional weights.

use num_bigint::BigInt;
use num_traits::One;

use crate::bary::binom;
use crate::classic::{classic_binom, classic_row};
use crate::digits::{check_base, digit_sum, pair_length, to_digits};
use crate::partitions::{sum_product, FactorTable};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AltVariant {
    Star,
    DoubleStar,
}

impl AltVariant {
    pub fn name(self) -> &'static str {
        match self {
            AltVariant::Star => "star",
            AltVariant::DoubleStar => "dstar",
        }
    }

    pub fn eval(self, n: i64, k: i64, base: u32) -> Result<BigInt> {
        match self {
            AltVariant::Star => star_binom(n, k, base),
            AltVariant::DoubleStar => dstar_binom(n, k, base),
        }
    }

    /// The variant for `n < 0`, and the standard coefficient otherwise.
    /// Both variants collapse to `prod_l C(n_l, k_l)` at `n = 0`, which is
    /// where Pascal-type sweeps step onto nonnegative entries.
    pub fn eval_extended(self, n: i64, k: i64, base: u32) -> Result<BigInt> {
        if n < 0 {
            self.eval(n, k, base)
        } else {
            binom(n, k, base)
        }
    }
}

fn require_negative(op: &'static str, n: i64) -> Result<()> {
    if n >= 0 {
        return Err(Error::NonNegativeEntry { op, n });
    }
    Ok(())
}

/// `prod_l classic_binom(n_l, k_l)` over sign-consistent digits padded to
/// the shared length.
pub fn star_binom(n: i64, k: i64, base: u32) -> Result<BigInt> {
    check_base(base)?;
    require_negative("star coefficient", n)?;
    let len = pair_length(n, k, base)?;
    let nd = to_digits(n, base, len)?;
    let kd = to_digits(k, base, len)?;
    let mut acc = BigInt::one();
    for (&a, &c) in nd.digits().iter().zip(kd.digits()) {
        acc *= classic_binom(a, c);
        if acc == BigInt::default() {
            break;
        }
    }
    Ok(acc)
}

/// For `k >= 0`: the sum over `j_l >= 0` with `sum j_l = S_b(k)` of
/// `prod_l classic_binom(n_l, j_l)`. For `k < 0`: the sum over
/// `j_l >= |n_l|` with `sum j_l = S_b(|k|)` of
/// `prod_l classic_binom(n_l, -j_l)`.
pub fn dstar_binom(n: i64, k: i64, base: u32) -> Result<BigInt> {
    check_base(base)?;
    require_negative("double-star coefficient", n)?;
    let len = pair_length(n, k, base)?;
    let nd = to_digits(n, base, len)?;
    let total = digit_sum(k, base)?.unsigned_abs();
    let max = i64::try_from(total).map_err(|_| Error::Overflow("digit sum"))?;
    let factors: Vec<FactorTable> = nd
        .digits()
        .iter()
        .map(|&d| {
            if k >= 0 {
                FactorTable {
                    lo: 0,
                    values: classic_row(d, 0, max),
                }
            } else {
                let lo = d.unsigned_abs();
                let values = if lo > total {
                    Vec::new()
                } else {
                    classic_row(d, -max, d).into_iter().rev().collect()
                };
                FactorTable { lo, values }
            }
        })
        .collect();
    Ok(sum_product(total, &vec![1; len], &factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_compositions;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn star_values() {
        assert_eq!(star_binom(-6, 7, 4).unwrap(), big(4));
        assert_eq!(star_binom(-6, -8, 4).unwrap(), big(-1));
        assert_eq!(star_binom(-1, -4, 4).unwrap(), big(0));
        assert!(matches!(star_binom(6, 7, 4), Err(Error::NonNegativeEntry { .. })));
        assert_eq!(star_binom(-6, 7, 1), Err(Error::InvalidBase(1)));
    }

    #[test]
    fn dstar_values() {
        assert_eq!(dstar_binom(-6, 7, 4).unwrap(), big(15));
        assert_eq!(dstar_binom(-6, -8, 4).unwrap(), big(0));
        assert_eq!(dstar_binom(-6, 1, 4).unwrap(), big(-3));
        assert!(matches!(dstar_binom(0, 1, 4), Err(Error::NonNegativeEntry { .. })));
    }

    fn dstar_by_enumeration(n: i64, k: i64, b: u32) -> BigInt {
        let len = pair_length(n, k, b).unwrap();
        let nd = to_digits(n, b, len).unwrap();
        let total = digit_sum(k, b).unwrap().unsigned_abs();
        let lower: Vec<u64> = if k >= 0 {
            vec![0; len]
        } else {
            nd.magnitudes()
        };
        enumerate_compositions(total, &lower)
            .unwrap()
            .iter()
            .map(|t| {
                (0..len)
                    .map(|l| {
                        let j = t.part(l) as i64;
                        classic_binom(nd.digit(l), if k >= 0 { j } else { -j })
                    })
                    .product::<BigInt>()
            })
            .sum()
    }

    #[test]
    fn dstar_matches_composition_enumeration() {
        for b in 2..=6 {
            for n in -40..=-1 {
                for k in -80..=80 {
                    assert_eq!(dstar_binom(n, k, b).unwrap(), dstar_by_enumeration(n, k, b), "n={n} k={k} b={b}");
                }
            }
        }
    }

    #[test]
    fn variants_differ_from_standard() {
        assert_ne!(star_binom(-6, 7, 4).unwrap(), binom(-6, 7, 4).unwrap());
        assert_ne!(star_binom(-6, -8, 4).unwrap(), binom(-6, -8, 4).unwrap());
    }

    #[test]
    fn dstar_depends_only_on_digit_sum() {
        for b in 2..=5u32 {
            for n in 1..=30i64 {
                for k in 1..=60i64 {
                    for k2 in (k + 1)..=60 {
                        if digit_sum(k, b).unwrap() == digit_sum(k2, b).unwrap() {
                            assert_eq!(
                                dstar_binom(-n, k, b).unwrap(),
                                dstar_binom(-n, k2, b).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn extended_eval_at_zero_entry() {
        for v in [AltVariant::Star, AltVariant::DoubleStar] {
            assert_eq!(v.eval_extended(0, 0, 4).unwrap(), big(1));
            assert_eq!(v.eval_extended(0, -3, 4).unwrap(), big(0));
            assert_eq!(v.eval_extended(-6, 7, 4).unwrap(), v.eval(-6, 7, 4).unwrap());
        }
    }
}
