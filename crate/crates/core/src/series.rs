//! Truncated formal Laurent series over big integers.
//!
//! A series is stored in ascending powers of its local variable `t`, which
//! is `x` for an expansion at zero and `1/x` for an expansion at infinity,
//! so both expansion points share the same convolution kernel.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::digits::{check_base, place_value, to_digits};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Zero,
    Infinity,
}

impl Point {
    /// Expansion point used for the coefficient of `x^k`.
    pub fn for_exponent(k: i64) -> Self {
        if k >= 0 {
            Point::Zero
        } else {
            Point::Infinity
        }
    }
}

/// `sum_i coeffs[i] * t^(lead + i) + O(t^(lead + order))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    point: Point,
    lead: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentSeries {
    pub fn new(point: Point, lead: i64, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidOrder);
        }
        Ok(Self {
            point,
            lead,
            coeffs,
        })
    }

    pub fn from_i64s(point: Point, lead: i64, coeffs: &[i64]) -> Result<Self> {
        Self::new(point, lead, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The constant series `1`.
    pub fn one(point: Point, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder);
        }
        let mut coeffs = vec![BigInt::zero(); order];
        coeffs[0] = BigInt::one();
        Ok(Self {
            point,
            lead: 0,
            coeffs,
        })
    }

    /// The binomial `1 + x^shift` expanded at `point`; at infinity this is
    /// `t^(-shift) (1 + t^shift)`.
    pub fn binomial(point: Point, shift: u64, order: usize) -> Result<Self> {
        let mut s = Self::one(point, order)?;
        s.mul_binomial_in_place(shift);
        if point == Point::Infinity {
            s.lead = -i64::try_from(shift).map_err(|_| Error::Overflow("binomial shift"))?;
        }
        Ok(s)
    }

    pub fn point(&self) -> Point {
        self.point
    }

    /// Exponent of `t` carried by `coeffs[0]`.
    pub fn lead_exponent(&self) -> i64 {
        self.lead
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exponent of `x` for stored index `i`.
    pub fn x_exponent(&self, i: usize) -> i64 {
        let t = self.lead + i as i64;
        match self.point {
            Point::Zero => t,
            Point::Infinity => -t,
        }
    }

    /// `(x exponent, coefficient)` for every retained term.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.x_exponent(i), c))
    }

    /// Coefficient of `x^e`. Exponents before the lead term are zero;
    /// exponents past the truncation window are an error, never a silent 0.
    pub fn coefficient(&self, e: i64) -> Result<BigInt> {
        let t = match self.point {
            Point::Zero => e,
            Point::Infinity => e.checked_neg().ok_or(Error::Overflow("exponent"))?,
        };
        let offset = i128::from(t) - i128::from(self.lead);
        if offset < 0 {
            return Ok(BigInt::zero());
        }
        match usize::try_from(offset).ok().and_then(|i| self.coeffs.get(i)) {
            Some(c) => Ok(c.clone()),
            None => Err(Error::OutOfWindow {
                exponent: e,
                last_known: self.x_exponent(self.order() - 1),
            }),
        }
    }

    /// Truncated product; the order is the smaller of the two.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.point != other.point {
            return Err(Error::MismatchedPoints);
        }
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self {
            point: self.point,
            lead: self.lead + other.lead,
            coeffs,
        })
    }

    /// Multiplicative inverse. Requires a leading coefficient of `+1` or `-1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitLead(c0.to_string()));
        }
        let order = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(order);
        inv.push(c0.clone());
        for i in 1..order {
            let mut acc = BigInt::zero();
            for j in 1..=i {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &inv[i - j];
                }
            }
            // c0 is its own inverse
            inv.push(-(acc * c0));
        }
        Ok(Self {
            point: self.point,
            lead: -self.lead,
            coeffs: inv,
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            let c0 = &self.coeffs[0];
            if c0.abs() != BigInt::one() {
                return Err(Error::NonUnitLead(c0.to_string()));
            }
            return self.pow_unsigned(e.unsigned_abs())?.inverse();
        }
        self.pow_unsigned(e.unsigned_abs())
    }

    fn pow_unsigned(&self, mut e: u64) -> Result<Self> {
        let mut result = Self::one(self.point, self.order())?;
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Multiplies by `1 + t^shift` without changing the lead exponent.
    pub(crate) fn mul_binomial_in_place(&mut self, shift: u64) {
        let Ok(shift) = usize::try_from(shift) else {
            return;
        };
        if shift == 0 {
            for c in &mut self.coeffs {
                *c *= 2;
            }
            return;
        }
        for i in (shift..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - shift];
        }
    }

    /// Divides by `1 + t^shift` (`shift >= 1`) without changing the lead.
    pub(crate) fn div_binomial_in_place(&mut self, shift: u64) {
        let Ok(shift) = usize::try_from(shift) else {
            return;
        };
        debug_assert!(shift >= 1);
        for i in shift..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - shift];
        }
    }
}

/// Truncated expansion of `f_{n,b}(x) = prod_l (1 + x^(b^l))^(n_l)` at
/// `point`, keeping `order` terms from the lead exponent.
///
/// At infinity each factor is `x^(b^l) (1 + x^(-b^l))`, so the product
/// starts at `x^n`: for negative `n` the first term is `x^(-|n|)` with
/// coefficient 1.
pub fn gf_expand(n: i64, base: u32, point: Point, order: usize) -> Result<LaurentSeries> {
    check_base(base)?;
    let mut s = LaurentSeries::one(point, order)?;
    let digits = to_digits(n, base, 0)?;
    for (l, &d) in digits.digits().iter().enumerate() {
        if d == 0 {
            continue;
        }
        let weight = place_value(base, l).ok_or(Error::Overflow("place value"))?;
        for _ in 0..d.unsigned_abs() {
            if d > 0 {
                s.mul_binomial_in_place(weight);
            } else {
                s.div_binomial_in_place(weight);
            }
        }
    }
    if point == Point::Infinity {
        s.lead = n.checked_neg().ok_or(Error::Overflow("lead exponent"))?;
    }
    Ok(s)
}
