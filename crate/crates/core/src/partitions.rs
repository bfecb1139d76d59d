//! Restricted partitions of `k` into parts `{1, b, ..., b^(N-1)}`, and the
//! sum-product evaluator that the partition formula runs on.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::digits::{check_base, place_value, DigitVector};
use crate::{Error, Result};

/// `(j_{N-1}, ..., j_0)`, most-significant part first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionTuple {
    parts: Vec<u64>,
}

impl PartitionTuple {
    pub fn new(parts: Vec<u64>) -> Self {
        Self { parts }
    }

    /// Most-significant first.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The part multiplying `b^l`.
    pub fn part(&self, l: usize) -> u64 {
        self.parts[self.parts.len() - 1 - l]
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `sum_l j_l * weight_l` for weights given least-significant first.
    pub fn weighted_sum(&self, weights: &[u64]) -> u128 {
        (0..self.len())
            .map(|l| u128::from(self.part(l)) * u128::from(weights[l]))
            .sum()
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn weights(base: u32, len: usize) -> Result<Vec<u64>> {
    (0..len)
        .map(|l| place_value(base, l).ok_or(Error::Overflow("place value")))
        .collect()
}

/// Visits every tuple with `sum j_l * weights[l] == target` and
/// `j_l >= lower[l]`, most-significant part descending first.
fn visit<F: FnMut(&[u64])>(target: u64, weights: &[u64], lower: &[u64], visit_fn: &mut F) {
    let len = weights.len();
    // floor[l] = minimum weight that positions 0..l must absorb
    let mut floor = vec![0u128; len + 1];
    for l in 0..len {
        floor[l + 1] = floor[l] + u128::from(lower[l]) * u128::from(weights[l]);
    }
    let mut parts = vec![0u64; len];

    fn rec<F: FnMut(&[u64])>(
        l: usize,
        remaining: u64,
        weights: &[u64],
        lower: &[u64],
        floor: &[u128],
        parts: &mut [u64],
        visit_fn: &mut F,
    ) {
        let idx = parts.len() - 1 - l;
        if l == 0 {
            if remaining.is_multiple_of(weights[0]) && remaining / weights[0] >= lower[0] {
                parts[idx] = remaining / weights[0];
                visit_fn(parts);
            }
            return;
        }
        let max = (u128::from(remaining).saturating_sub(floor[l]) / u128::from(weights[l])) as u64;
        if max < lower[l] {
            return;
        }
        for j in (lower[l]..=max).rev() {
            parts[idx] = j;
            rec(l - 1, remaining - j * weights[l], weights, lower, floor, parts, visit_fn);
        }
    }

    if u128::from(target) < floor[len] {
        return;
    }
    rec(len - 1, target, weights, lower, &floor, &mut parts, visit_fn);
}

/// All `N`-tuples of nonnegative integers with `sum j_l b^l = k`.
pub fn enumerate_partitions(k: u64, base: u32, len: usize) -> Result<Vec<PartitionTuple>> {
    check_base(base)?;
    if len == 0 {
        return Err(Error::InvalidLength);
    }
    let w = weights(base, len)?;
    let mut out = Vec::new();
    visit(k, &w, &vec![0; len], &mut |p| out.push(PartitionTuple::new(p.to_vec())));
    Ok(out)
}

/// The partitions of `k` with the extra restriction `j_l >= n_l`, where
/// `n_l` are the digits of a nonnegative `n`. The digit vector fixes both
/// the base and `N`.
pub fn enumerate_restricted(k: u64, n_digits: &DigitVector) -> Result<Vec<PartitionTuple>> {
    if n_digits.value() < 0 {
        return Err(Error::NegativeDigits(n_digits.value()));
    }
    let w = weights(n_digits.base(), n_digits.len())?;
    let lower = n_digits.magnitudes();
    let mut out = Vec::new();
    visit(k, &w, &lower, &mut |p| out.push(PartitionTuple::new(p.to_vec())));
    Ok(out)
}

/// Tuples of length `len` with `j_l >= lower[l]` summing to `total`.
pub fn enumerate_compositions(total: u64, lower: &[u64]) -> Result<Vec<PartitionTuple>> {
    if lower.is_empty() {
        return Err(Error::InvalidLength);
    }
    let w = vec![1; lower.len()];
    let mut out = Vec::new();
    visit(total, &w, lower, &mut |p| out.push(PartitionTuple::new(p.to_vec())));
    Ok(out)
}

/// Factor values `f(j)` for `j` in `lo..lo + values.len()`; zero elsewhere.
#[derive(Clone, Debug, Default)]
pub(crate) struct FactorTable {
    pub lo: u64,
    pub values: Vec<BigInt>,
}

impl FactorTable {
    fn get(&self, j: u64) -> Option<&BigInt> {
        let i = usize::try_from(j.checked_sub(self.lo)?).ok()?;
        self.values.get(i)
    }
}

/// `sum over tuples (j_l) with sum_l j_l * weights[l] == target of
/// prod_l factors[l](j_l)`.
///
/// The sum is grouped by the distributive law on `(position, remaining
/// target)`, so each distinct subtree of the enumeration is summed once.
/// With place-value weights the remaining target at position `l` is
/// congruent to `target` modulo `weights[l + 1]`, so the memo is dense in
/// `remaining / weights[l + 1]`.
pub(crate) fn sum_product(target: u64, weights: &[u64], factors: &[FactorTable]) -> BigInt {
    debug_assert_eq!(weights.len(), factors.len());
    if weights.is_empty() {
        return BigInt::zero();
    }
    let dense = weights.windows(2).all(|w| w[0] > 0 && w[1] % w[0] == 0);
    let mut memo: Vec<Memo> = (0..weights.len())
        .map(|l| match weights.get(l + 1) {
            Some(&step) if dense => Memo::Dense {
                step,
                slots: vec![None; (target / step) as usize + 1],
            },
            _ => Memo::Sparse(HashMap::new()),
        })
        .collect();
    rec(weights.len() - 1, target, weights, factors, &mut memo)
}

enum Memo {
    Dense { step: u64, slots: Vec<Option<BigInt>> },
    Sparse(HashMap<u64, BigInt>),
}

impl Memo {
    fn get(&self, remaining: u64) -> Option<&BigInt> {
        match self {
            Memo::Dense { step, slots } => slots.get((remaining / step) as usize)?.as_ref(),
            Memo::Sparse(map) => map.get(&remaining),
        }
    }

    fn put(&mut self, remaining: u64, value: BigInt) {
        match self {
            Memo::Dense { step, slots } => slots[(remaining / *step) as usize] = Some(value),
            Memo::Sparse(map) => {
                map.insert(remaining, value);
            }
        }
    }
}

fn rec(l: usize, remaining: u64, weights: &[u64], factors: &[FactorTable], memo: &mut [Memo]) -> BigInt {
    if l == 0 {
        if !remaining.is_multiple_of(weights[0]) {
            return BigInt::zero();
        }
        return factors[0].get(remaining / weights[0]).cloned().unwrap_or_default();
    }
    if let Some(v) = memo[l].get(remaining) {
        return v.clone();
    }
    let mut acc = BigInt::zero();
    let table = &factors[l];
    for (i, f) in table.values.iter().enumerate() {
        let j = table.lo + i as u64;
        let used = match j.checked_mul(weights[l]) {
            Some(u) if u <= remaining => u,
            _ => break,
        };
        if f.is_zero() {
            continue;
        }
        let sub = rec(l - 1, remaining - used, weights, factors, memo);
        if !sub.is_zero() {
            acc += f * sub;
        }
    }
    memo[l].put(remaining, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::to_digits;

    fn tuples(v: &[PartitionTuple]) -> Vec<Vec<u64>> {
        v.iter().map(|t| t.parts().to_vec()).collect()
    }

    #[test]
    fn worked_partitions() {
        assert_eq!(
            tuples(&enumerate_partitions(7, 4, 2).unwrap()),
            vec![vec![1, 3], vec![0, 7]]
        );
        assert_eq!(tuples(&enumerate_partitions(0, 3, 3).unwrap()), vec![vec![0, 0, 0]]);
        assert_eq!(
            tuples(&enumerate_partitions(5, 2, 3).unwrap()),
            vec![vec![1, 0, 1], vec![0, 2, 1], vec![0, 1, 3], vec![0, 0, 5]]
        );
    }

    #[test]
    fn worked_restricted() {
        let six = to_digits(6, 4, 0).unwrap();
        assert_eq!(tuples(&enumerate_restricted(8, &six).unwrap()), vec![vec![1, 4]]);
        assert_eq!(tuples(&enumerate_restricted(6, &six).unwrap()), vec![vec![1, 2]]);
        for k in 0..6 {
            assert!(enumerate_restricted(k, &six).unwrap().is_empty());
        }
        let neg = to_digits(-6, 4, 0).unwrap();
        assert_eq!(enumerate_restricted(8, &neg), Err(Error::NegativeDigits(-6)));
    }

    #[test]
    fn invalid_shapes() {
        assert_eq!(enumerate_partitions(3, 1, 2), Err(Error::InvalidBase(1)));
        assert_eq!(enumerate_partitions(3, 2, 0), Err(Error::InvalidLength));
        assert_eq!(enumerate_compositions(3, &[]), Err(Error::InvalidLength));
    }

    #[test]
    fn compositions() {
        assert_eq!(
            tuples(&enumerate_compositions(2, &[0, 0]).unwrap()),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(
            tuples(&enumerate_compositions(3, &[1, 1]).unwrap()),
            vec![vec![2, 1], vec![1, 2]]
        );
        assert!(enumerate_compositions(1, &[1, 1]).unwrap().is_empty());
    }

    /// Nested loops over 0 <= j_l <= k, filtered by the weighted sum.
    fn brute(k: u64, b: u64, len: usize, lower: &[u64]) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut cur = vec![0u64; len];
        loop {
            let sum: u64 = (0..len).map(|l| cur[l] * b.pow(l as u32)).sum();
            if sum == k && (0..len).all(|l| cur[l] >= lower[l]) {
                out.push(cur.iter().rev().copied().collect());
            }
            let mut l = 0;
            loop {
                if l == len {
                    out.sort_unstable_by(|a: &Vec<u64>, b| b.cmp(a));
                    return out;
                }
                cur[l] += 1;
                if cur[l] <= k {
                    break;
                }
                cur[l] = 0;
                l += 1;
            }
        }
    }

    #[test]
    fn matches_brute_force() {
        for b in 2..=5u32 {
            for len in 1..=3usize {
                for k in 0..=24u64 {
                    let got = tuples(&enumerate_partitions(k, b, len).unwrap());
                    assert_eq!(got, brute(k, u64::from(b), len, &vec![0; len]), "b={b} N={len} k={k}");
                    for t in enumerate_partitions(k, b, len).unwrap() {
                        assert_eq!(t.weighted_sum(&weights(b, len).unwrap()), u128::from(k));
                    }
                }
            }
        }
        let digits = to_digits(7, 3, 0).unwrap();
        for k in 0..=30u64 {
            let got = tuples(&enumerate_restricted(k, &digits).unwrap());
            assert_eq!(got, brute(k, 3, 2, &digits.magnitudes()), "k={k}");
        }
    }

    #[test]
    fn sum_product_matches_enumeration() {
        let w = weights(3, 3).unwrap();
        let factors: Vec<FactorTable> = (0..3)
            .map(|l| FactorTable {
                lo: 0,
                values: (0..40i64).map(|j| BigInt::from(j * 2 - l + 1)).collect(),
            })
            .collect();
        for k in 0..40u64 {
            let direct: BigInt = enumerate_partitions(k, 3, 3)
                .unwrap()
                .iter()
                .map(|t| {
                    (0..3)
                        .map(|l| BigInt::from(t.part(l) as i64 * 2 - l as i64 + 1))
                        .product::<BigInt>()
                })
                .sum();
            assert_eq!(sum_product(k, &w, &factors), direct, "k={k}");
        }
    }
}
