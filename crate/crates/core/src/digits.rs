//! Base-`b` expansions under the sign convention that every digit of a
//! negative integer is nonpositive, e.g. `-6 = ((-1)(-2))_4`.

use std::fmt;

use crate::{Error, Result};

pub(crate) fn check_base(base: u32) -> Result<()> {
    if base < 2 {
        return Err(Error::InvalidBase(base));
    }
    Ok(())
}

/// `base^l`, or `None` once it leaves the `u64` range.
pub fn place_value(base: u32, l: usize) -> Option<u64> {
    let l = u32::try_from(l).ok()?;
    u64::from(base).checked_pow(l)
}

/// Sign-consistent digit expansion, least-significant digit first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitVector {
    base: u32,
    digits: Vec<i64>,
    value: i64,
}

impl DigitVector {
    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    /// Digits, least-significant first.
    pub fn digits(&self) -> &[i64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at position `l`; zero past the stored length.
    pub fn digit(&self, l: usize) -> i64 {
        self.digits.get(l).copied().unwrap_or(0)
    }

    /// Magnitudes of the digits, least-significant first.
    pub fn magnitudes(&self) -> Vec<u64> {
        self.digits.iter().map(|d| d.unsigned_abs()).collect()
    }

    pub fn digit_sum(&self) -> i64 {
        self.digits.iter().sum()
    }

    /// `sum digits[l] * base^l`, widened so that it cannot overflow for any
    /// expansion produced by [`to_digits`].
    pub fn reconstruct(&self) -> i128 {
        let b = i128::from(self.base);
        self.digits
            .iter()
            .rev()
            .fold(0i128, |acc, &d| acc * b + i128::from(d))
    }

    /// Zero-pads on the most-significant side up to `len` digits.
    pub fn padded(mut self, len: usize) -> Self {
        if self.digits.len() < len {
            self.digits.resize(len, 0);
        }
        self
    }
}

impl fmt::Display for DigitVector {
    /// Most-significant digit first; digits that need more than one
    /// character are parenthesized, as in `((-1)(-2))_4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for d in self.digits.iter().rev() {
            if (0..10).contains(d) {
                write!(f, "{d}")?;
            } else {
                write!(f, "({d})")?;
            }
        }
        write!(f, ")_{}", self.base)
    }
}

/// Expands `n` in base `base`, zero-padded to at least `min_len` digits.
/// Zero has the single digit `0`.
pub fn to_digits(n: i64, base: u32, min_len: usize) -> Result<DigitVector> {
    check_base(base)?;
    let b = u64::from(base);
    let sign = if n < 0 { -1 } else { 1 };
    let mut rest = n.unsigned_abs();
    let mut digits = Vec::new();
    while rest > 0 {
        // digit < base <= u32::MAX, so the cast is lossless
        digits.push(sign * (rest % b) as i64);
        rest /= b;
    }
    if digits.is_empty() {
        digits.push(0);
    }
    Ok(DigitVector {
        base,
        digits,
        value: n,
    }
    .padded(min_len))
}

/// Number of base-`base` digits of `|n|`; zero counts as one digit.
pub fn digit_count(n: i64, base: u32) -> Result<usize> {
    check_base(base)?;
    let b = u64::from(base);
    let mut rest = n.unsigned_abs();
    let mut count = 1;
    while rest >= b {
        rest /= b;
        count += 1;
    }
    Ok(count)
}

/// The shared digit length `N` used for every digit-wise product over a
/// pair of entries.
pub fn pair_length(n: i64, k: i64, base: u32) -> Result<usize> {
    Ok(digit_count(n, base)?.max(digit_count(k, base)?))
}

/// `S_b(n)`, the (signed) digit sum.
pub fn digit_sum(n: i64, base: u32) -> Result<i64> {
    Ok(to_digits(n, base, 0)?.digit_sum())
}

/// True when adding `n` and `m` in base `base` produces no carry.
/// Both entries must be nonnegative.
pub fn carry_free(n: u64, m: u64, base: u32) -> Result<bool> {
    check_base(base)?;
    let b = u64::from(base);
    let (mut n, mut m) = (n, m);
    while n > 0 || m > 0 {
        if n % b + m % b >= b {
            return Ok(false);
        }
        n /= b;
        m /= b;
    }
    Ok(true)
}
