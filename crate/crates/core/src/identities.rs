//! Exhaustive sweeps of the identities satisfied (or claimed) by b-ary
//! binomial coefficients. Every check returns an [`IdentityReport`] with the
//! number of cases checked and a witness for each failure.
//!
//! Each sweep splits its domain into independent work items that run under
//! the requested [`Exec`] mode and are merged back in input order.

use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::altdefs::AltVariant;
use crate::bary::{bary_binom, binom, BaryQuery, Method};
use crate::classic::{choose, classic_binom};
use crate::digits::{carry_free, check_base, digit_sum, place_value, to_digits};
use crate::exec::Exec;
use crate::{Error, Result};

/// One counterexample: the inputs and the two sides that disagreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub inputs: Vec<(&'static str, i64)>,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, v)) in self.inputs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{name}={v}")?;
        }
        write!(f, ": lhs={} rhs={}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Tally {
    checked: u64,
    skipped: u64,
    failures: Vec<Witness>,
}

impl Tally {
    fn compare(&mut self, inputs: &[(&'static str, i64)], lhs: BigInt, rhs: BigInt) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Witness {
                inputs: inputs.to_vec(),
                lhs,
                rhs,
            });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub domain: String,
    pub checked: u64,
    /// Cases excluded by a precondition (e.g. a carry in `n + m`).
    pub skipped: u64,
    pub failures: Vec<Witness>,
}

impl IdentityReport {
    fn from_tallies(id: &str, domain: String, parts: Vec<Result<Tally>>) -> Result<Self> {
        let mut report = IdentityReport {
            identity_id: id.to_string(),
            domain,
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
        };
        for part in parts {
            let part = part?;
            report.checked += part.checked;
            report.skipped += part.skipped;
            report.failures.extend(part.failures);
        }
        Ok(report)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} checked, {} skipped, {} failures over {}",
            self.identity_id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.skipped,
            self.failures.len(),
            self.domain
        )
    }
}

/// Sweep bounds. Each check reads `n_max` and `k_max` against its own
/// domain; see [`Suite::default_sweep`] for the stock ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub bases: Vec<u32>,
    pub n_max: i64,
    pub k_max: i64,
    pub exec: Exec,
}

impl Sweep {
    pub fn new(bases: impl IntoIterator<Item = u32>, n_max: i64, k_max: i64) -> Self {
        Self {
            bases: bases.into_iter().collect(),
            n_max,
            k_max,
            exec: Exec::default(),
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    fn checked_bases(&self) -> Result<&[u32]> {
        for &b in &self.bases {
            check_base(b)?;
        }
        Ok(&self.bases)
    }

    fn describe(&self, n: &str, k: &str) -> String {
        format!("b in {:?}, {n}, {k}", self.bases)
    }
}

/// Precomputed `binom(n, k)_b` for fixed `b`, a set of first entries and a
/// window of `k`. Lookups outside the window are computed on demand.
struct Rows {
    base: u32,
    k_lo: i64,
    k_hi: i64,
    rows: HashMap<i64, Vec<BigInt>>,
}

impl Rows {
    fn build(base: u32, ns: Vec<i64>, k_lo: i64, k_hi: i64, exec: Exec) -> Result<Self> {
        let computed = exec.map(ns, |n| {
            (k_lo..=k_hi)
                .map(|k| binom(n, k, base))
                .collect::<Result<Vec<_>>>()
                .map(|row| (n, row))
        });
        let rows = computed.into_iter().collect::<Result<HashMap<_, _>>>()?;
        Ok(Self {
            base,
            k_lo,
            k_hi,
            rows,
        })
    }

    fn get(&self, n: i64, k: i64) -> Result<Cow<'_, BigInt>> {
        if (self.k_lo..=self.k_hi).contains(&k) {
            if let Some(row) = self.rows.get(&n) {
                return Ok(Cow::Borrowed(&row[(k - self.k_lo) as usize]));
            }
        }
        binom(n, k, self.base).map(Cow::Owned)
    }
}

fn pow(base: u32, l: usize) -> Result<i64> {
    place_value(base, l)
        .and_then(|v| i64::try_from(v).ok())
        .ok_or(Error::Overflow("place value"))
}

/// `binom(n, k)_b == binom(n, n - k)_b` for `|n| <= n_max`, `|k| <= k_max`.
pub fn check_symmetry(sweep: &Sweep) -> Result<IdentityReport> {
    let bases = sweep.checked_bases()?;
    let (n_max, k_max) = (sweep.n_max, sweep.k_max);
    let items: Vec<(u32, i64)> = bases
        .iter()
        .flat_map(|&b| (-n_max..=n_max).map(move |n| (b, n)))
        .collect();
    let parts = sweep.exec.map(items, |(b, n)| {
        let lo = (-k_max).min(n - k_max);
        let hi = k_max.max(n + k_max);
        let row: Vec<BigInt> = (lo..=hi).map(|k| binom(n, k, b)).collect::<Result<_>>()?;
        let at = |k: i64| row[(k - lo) as usize].clone();
        let mut t = Tally::default();
        for k in -k_max..=k_max {
            t.compare(&[("b", b.into()), ("n", n), ("k", k)], at(k), at(n - k));
        }
        Ok(t)
    });
    IdentityReport::from_tallies(
        "symmetry",
        sweep.describe(&format!("|n| <= {n_max}"), &format!("|k| <= {k_max}")),
        parts,
    )
}

/// `binom(-n, k) + binom(-n, k - 1) == binom(-n + 1, k)` whenever `b` does
/// not divide `n`, for `1 <= n <= n_max`, `|k| <= k_max`.
pub fn check_pascal(sweep: &Sweep) -> Result<IdentityReport> {
    let (n_max, k_max) = (sweep.n_max, sweep.k_max);
    let mut parts = Vec::new();
    for &b in sweep.checked_bases()? {
        let rows = Rows::build(b, (0..=n_max).map(|n| -n).collect(), -k_max - 1, k_max, sweep.exec)?;
        let items: Vec<i64> = (1..=n_max).filter(|n| n % i64::from(b) != 0).collect();
        parts.extend(sweep.exec.map(items, |n| {
            let mut t = Tally::default();
            for k in -k_max..=k_max {
                let lhs = rows.get(-n, k)?.into_owned() + rows.get(-n, k - 1)?.as_ref();
                let rhs = rows.get(-n + 1, k)?.into_owned();
                t.compare(&[("b", b.into()), ("n", n), ("k", k)], lhs, rhs);
            }
            Ok(t)
        }));
    }
    IdentityReport::from_tallies(
        "pascal",
        sweep.describe(&format!("1 <= n <= {n_max}, b !| n"), &format!("|k| <= {k_max}")),
        parts,
    )
}

/// `binom(-n, k) + binom(-n, k - b^s) == binom(-n + b^s, k)` for every
/// position `s` with a nonzero digit of `n`.
pub fn check_pascal_power(sweep: &Sweep) -> Result<IdentityReport> {
    let (n_max, k_max) = (sweep.n_max, sweep.k_max);
    let mut parts = Vec::new();
    for &b in sweep.checked_bases()? {
        let rows = Rows::build(b, (0..=n_max).map(|n| -n).collect(), -k_max - n_max, k_max, sweep.exec)?;
        let items: Vec<i64> = (1..=n_max).collect();
        parts.extend(sweep.exec.map(items, |n| {
            let mut t = Tally::default();
            let digits = to_digits(n, b, 0)?;
            for (s, _) in digits.digits().iter().enumerate().filter(|(_, &d)| d != 0) {
                let step = pow(b, s)?;
                for k in -k_max..=k_max {
                    let lhs = rows.get(-n, k)?.into_owned() + rows.get(-n, k - step)?.as_ref();
                    let rhs = rows.get(-n + step, k)?.into_owned();
                    t.compare(
                        &[("b", b.into()), ("n", n), ("s", s as i64), ("k", k)],
                        lhs,
                        rhs,
                    );
                }
            }
            Ok(t)
        }));
    }
    IdentityReport::from_tallies(
        "pascal-power",
        sweep.describe(&format!("1 <= n <= {n_max}, n_s != 0"), &format!("|k| <= {k_max}")),
        parts,
    )
}

/// Which multiples of `b^m` the convolution in [`check_prop33`] runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prop33Range {
    /// `b^m <= j <= b^s`.
    FromPower,
    /// `0 <= j <= b^s`, which keeps the constant term of
    /// `prod_{l=m}^{s-1} (1 + x^(b^l))^(b-1)`.
    FromZero,
}

/// For `n` whose lowest nonzero digit sits at position `s >= 1`, every
/// `m < s`, and `k >= b^s` or `k <= -n + b^m`:
/// `binom(-n + b^s, k) == sum_j binom(b^s - b^m, j) binom(-n + b^m, k - j)`
/// over multiples `j` of `b^m` in the given range. `n` runs over multiples
/// of `b` up to `n_max`, `|k| <= k_max`.
pub fn check_prop33(sweep: &Sweep, range: Prop33Range) -> Result<IdentityReport> {
    let (n_max, k_max) = (sweep.n_max, sweep.k_max);
    let mut parts = Vec::new();
    for &b in sweep.checked_bases()? {
        let rows = Rows::build(b, (0..=n_max).map(|n| -n).collect(), -k_max - n_max, k_max, sweep.exec)?;
        let items: Vec<i64> = (1..=n_max).filter(|n| n % i64::from(b) == 0).collect();
        parts.extend(sweep.exec.map(items, |n| {
            let mut t = Tally::default();
            let digits = to_digits(n, b, 0)?;
            let s = digits.digits().iter().position(|&d| d != 0).unwrap_or(0);
            let bs = pow(b, s)?;
            for m in 0..s {
                let bm = pow(b, m)?;
                let start = match range {
                    Prop33Range::FromPower => bm,
                    Prop33Range::FromZero => 0,
                };
                let poly: Vec<(i64, BigInt)> = (start..=bs)
                    .step_by(bm as usize)
                    .map(|j| binom(bs - bm, j, b).map(|c| (j, c)))
                    .collect::<Result<_>>()?;
                for k in (-k_max..=k_max).filter(|&k| k >= bs || k <= -n + bm) {
                    let lhs = rows.get(-n + bs, k)?.into_owned();
                    let mut rhs = BigInt::zero();
                    for (j, c) in &poly {
                        if !c.is_zero() {
                            rhs += c * rows.get(-n + bm, k - j)?.as_ref();
                        }
                    }
                    t.compare(
                        &[("b", b.into()), ("n", n), ("s", s as i64), ("m", m as i64), ("k", k)],
                        lhs,
                        rhs,
                    );
                }
            }
            Ok(t)
        }));
    }
    let id = match range {
        Prop33Range::FromPower => "prop33",
        Prop33Range::FromZero => "prop33-from-zero",
    };
    IdentityReport::from_tallies(
        id,
        sweep.describe(&format!("b | n <= {n_max}, all m < s"), &format!("|k| <= {k_max}")),
        parts,
    )
}

/// Chu-Vandermonde for two negative entries: for carry-free `n + m`,
/// `binom(-n-m, k) == sum_{j=0}^{k} binom(-n, k-j) binom(-m, j)` for
/// `m <= k <= k_max`, and
/// `binom(-n-m, -k) == sum_{j=1}^{k-1} binom(-n, -k+j) binom(-m, -j)` for
/// `n + m <= k <= k_max`. Pairs run over `n, m >= 1`, `n + m <= n_max`.
pub fn check_chu_negative(sweep: &Sweep) -> Result<IdentityReport> {
    let (n_max, k_max) = (sweep.n_max, sweep.k_max);
    let mut parts = Vec::new();
    for &b in sweep.checked_bases()? {
        let rows = Rows::build(b, (1..=n_max).map(|n| -n).collect(), -k_max, k_max, sweep.exec)?;
        let items: Vec<i64> = (1..n_max).collect();
        parts.extend(sweep.exec.map(items, |n| {
            let mut t = Tally::default();
            for m in 1..=(n_max - n) {
                if !carry_free(n as u64, m as u64, b)? {
                    t.skipped += 1;
                    continue;
                }
                for k in m..=k_max {
                    let lhs = rows.get(-n - m, k)?.into_owned();
                    let mut rhs = BigInt::zero();
                    for j in 0..=k {
                        rhs += rows.get(-n, k - j)?.as_ref() * rows.get(-m, j)?.as_ref();
                    }
                    t.compare(&[("b", b.into()), ("n", n), ("m", m), ("k", k)], lhs, rhs);
                }
                for k in (n + m)..=k_max {
                    let lhs = rows.get(-n - m, -k)?.into_owned();
                    let mut rhs = BigInt::zero();
                    for j in 1..k {
                        rhs += rows.get(-n, -k + j)?.as_ref() * rows.get(-m, -j)?.as_ref();
                    }
                    t.compare(&[("b", b.into()), ("n", n), ("m", m), ("k", -k)], lhs, rhs);
                }
            }
            Ok(t)
        }));
    }
    IdentityReport::from_tallies(
        "chu-neg",
        sweep.describe(&format!("n + m <= {n_max} carry-free"), &format!("k <= {k_max}")),
        parts,
    )
}

/// Upper limit of the infinity-branch convolution in [`check_chu_mixed`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChuMixedRange {
    /// `0 <= j <= k`.
    UpToK,
    /// `0 <= j <= m`, the full support of the polynomial `f_{m,b}`.
    UpToM,
}

/// Mixed-sign Chu-Vandermonde for `n > m >= 1` with `m + (n - m)`
/// carry-free, `2 <= n <= n_max`:
///
/// 1. for `0 <= k <= n - m`,
///    `binom(n-m, k) == sum_{j=0}^{k} binom(n, k-j) binom(-m, j)
///                   == sum_{s=k+1}^{n} binom(n, s) binom(-m, k-s)`;
/// 2. for `0 <= k <= k_max`,
///    `binom(-n+m, k) == sum_{j=0}^{k} binom(-n, k-j) binom(m, j)`;
/// 3. for `n - m <= k <= k_max`,
///    `binom(-n+m, -k) == sum_j binom(-n, -k-j) binom(m, j)` over the
///    range selected by `range`.
pub fn check_chu_mixed(sweep: &Sweep, range: ChuMixedRange) -> Result<IdentityReport> {
    let (n_max, k_max) = (sweep.n_max, sweep.k_max);
    let mut parts = Vec::new();
    for &b in sweep.checked_bases()? {
        let rows = Rows::build(
            b,
            (-n_max..=n_max).collect(),
            -k_max - n_max,
            k_max.max(n_max),
            sweep.exec,
        )?;
        let items: Vec<i64> = (2..=n_max).collect();
        parts.extend(sweep.exec.map(items, |n| {
            let mut t = Tally::default();
            for m in 1..n {
                if !carry_free(m as u64, (n - m) as u64, b)? {
                    t.skipped += 1;
                    continue;
                }
                let r = |a: i64, c: i64| rows.get(a, c);
                for k in 0..=(n - m) {
                    let lhs = r(n - m, k)?.into_owned();
                    let mut by_j = BigInt::zero();
                    for j in 0..=k {
                        by_j += r(n, k - j)?.as_ref() * r(-m, j)?.as_ref();
                    }
                    let mut by_s = BigInt::zero();
                    for s in (k + 1)..=n {
                        by_s += r(n, s)?.as_ref() * r(-m, k - s)?.as_ref();
                    }
                    let inputs = [("b", b.into()), ("n", n), ("m", m), ("k", k), ("part", 1)];
                    t.compare(&inputs, lhs.clone(), by_j);
                    t.compare(&inputs, lhs, by_s);
                }
                for k in 0..=k_max {
                    let lhs = r(-n + m, k)?.into_owned();
                    let mut rhs = BigInt::zero();
                    for j in 0..=k.min(m) {
                        rhs += r(-n, k - j)?.as_ref() * r(m, j)?.as_ref();
                    }
                    t.compare(&[("b", b.into()), ("n", n), ("m", m), ("k", k), ("part", 2)], lhs, rhs);
                }
                for k in (n - m)..=k_max {
                    let lhs = r(-n + m, -k)?.into_owned();
                    // binom(m, j) vanishes past j = m
                    let top = match range {
                        ChuMixedRange::UpToK => k.min(m),
                        ChuMixedRange::UpToM => m,
                    };
                    let mut rhs = BigInt::zero();
                    for j in 0..=top {
                        rhs += r(-n, -k - j)?.as_ref() * r(m, j)?.as_ref();
                    }
                    t.compare(&[("b", b.into()), ("n", n), ("m", m), ("k", -k), ("part", 3)], lhs, rhs);
                }
            }
            Ok(t)
        }));
    }
    let id = match range {
        ChuMixedRange::UpToK => "chu-mixed",
        ChuMixedRange::UpToM => "chu-mixed-full-support",
    };
    IdentityReport::from_tallies(
        id,
        sweep.describe(&format!("m < n <= {n_max} carry-free"), &format!("k <= {k_max}")),
        parts,
    )
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `classic_binom(n, k) == binom(n, k)_p (mod p)` for every prime `p` in
/// `sweep.bases`, `|n| <= n_max`, `|k| <= k_max`. Both residues are taken
/// in `[0, p)`.
pub fn check_lucas(sweep: &Sweep) -> Result<IdentityReport> {
    let primes = sweep.checked_bases()?;
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    let (n_max, k_max) = (sweep.n_max, sweep.k_max);
    let items: Vec<(u32, i64)> = primes
        .iter()
        .flat_map(|&p| (-n_max..=n_max).map(move |n| (p, n)))
        .collect();
    let parts = sweep.exec.map(items, |(p, n)| {
        let modulus = BigInt::from(p);
        let mut t = Tally::default();
        for k in -k_max..=k_max {
            let lhs = classic_binom(n, k).mod_floor(&modulus);
            let rhs = binom(n, k, p)?.mod_floor(&modulus);
            t.compare(&[("p", p.into()), ("n", n), ("k", k)], lhs, rhs);
        }
        Ok(t)
    });
    IdentityReport::from_tallies(
        "lucas",
        format!("p in {primes:?}, |n| <= {n_max}, |k| <= {k_max}"),
        parts,
    )
}

/// `C(S_b(n), j) == sum_{0 <= k <= n, S_b(k) = j} binom(n, k)_b` for
/// `1 <= n <= n_max` and every `j`.
pub fn check_digit_sum_aggregation(sweep: &Sweep) -> Result<IdentityReport> {
    let n_max = sweep.n_max;
    let items: Vec<(u32, i64)> = sweep
        .checked_bases()?
        .iter()
        .flat_map(|&b| (1..=n_max).map(move |n| (b, n)))
        .collect();
    let parts = sweep.exec.map(items, |(b, n)| {
        let total = digit_sum(n, b)?;
        let mut sums = vec![BigInt::zero(); total as usize + 1];
        let mut t = Tally::default();
        for k in 0..=n {
            let v = binom(n, k, b)?;
            let j = digit_sum(k, b)?;
            match sums.get_mut(j as usize) {
                Some(slot) => *slot += v,
                // a digit of k exceeds the matching digit of n
                None => t.compare(&[("b", b.into()), ("n", n), ("k", k)], v, BigInt::zero()),
            }
        }
        for (j, sum) in sums.into_iter().enumerate() {
            let expected = BigInt::from(choose(total as u128, j as u128));
            t.compare(&[("b", b.into()), ("n", n), ("j", j as i64)], expected, sum);
        }
        Ok(t)
    });
    IdentityReport::from_tallies(
        "aggregation",
        sweep.describe(&format!("1 <= n <= {n_max}"), "all j"),
        parts,
    )
}

/// `V(-n, k) + V(-n, k - 1) == V(-n + 1, k)` for a star variant `V`, over
/// `1 <= n <= n_max`, `1 <= k <= k_max` with `b` dividing neither.
pub fn check_alt_pascal(sweep: &Sweep, variant: AltVariant) -> Result<IdentityReport> {
    let (n_max, k_max) = (sweep.n_max, sweep.k_max);
    let items: Vec<(u32, i64)> = sweep
        .checked_bases()?
        .iter()
        .flat_map(|&b| (1..=n_max).map(move |n| (b, n)))
        .filter(|&(b, n)| n % i64::from(b) != 0)
        .collect();
    let parts = sweep.exec.map(items, |(b, n)| {
        let mut t = Tally::default();
        for k in (1..=k_max).filter(|k| k % i64::from(b) != 0) {
            let lhs = variant.eval(-n, k, b)? + variant.eval(-n, k - 1, b)?;
            let rhs = variant.eval_extended(-n + 1, k, b)?;
            t.compare(&[("b", b.into()), ("n", n), ("k", k)], lhs, rhs);
        }
        Ok(t)
    });
    let id = match variant {
        AltVariant::Star => "star-pascal",
        AltVariant::DoubleStar => "dstar-pascal",
    };
    IdentityReport::from_tallies(
        id,
        sweep.describe(&format!("1 <= n <= {n_max}, b !| n"), &format!("1 <= k <= {k_max}, b !| k")),
        parts,
    )
}

/// The same recurrence at negative second entry,
/// `V(-n, -k) + V(-n, -k - 1) == V(-n + 1, -k)` for `1 <= n <= n_max`,
/// `1 <= k <= k_max` with no divisibility filter. Failures here are
/// expected; they are the nonzero cells of [`defect_matrix`].
pub fn check_alt_pascal_negative(sweep: &Sweep, variant: AltVariant) -> Result<IdentityReport> {
    let (n_max, k_max) = (sweep.n_max, sweep.k_max);
    let items: Vec<(u32, i64)> = sweep
        .checked_bases()?
        .iter()
        .flat_map(|&b| (1..=n_max).map(move |n| (b, n)))
        .collect();
    let parts = sweep.exec.map(items, |(b, n)| {
        let mut t = Tally::default();
        for k in 1..=k_max {
            let lhs = variant.eval(-n, -k, b)? + variant.eval(-n, -k - 1, b)?;
            let rhs = variant.eval_extended(-n + 1, -k, b)?;
            t.compare(&[("b", b.into()), ("n", n), ("k", -k)], lhs, rhs);
        }
        Ok(t)
    });
    IdentityReport::from_tallies(
        &format!("{}-pascal-negative", variant.name()),
        sweep.describe(&format!("1 <= n <= {n_max}"), &format!("-{k_max} <= k <= -1")),
        parts,
    )
}

/// Series extraction against the partition sum for `-n_max <= n <= -1`,
/// `|k| <= k_max`.
pub fn check_cross_oracle(sweep: &Sweep) -> Result<IdentityReport> {
    let (n_max, k_max) = (sweep.n_max, sweep.k_max);
    let items: Vec<(u32, i64)> = sweep
        .checked_bases()?
        .iter()
        .flat_map(|&b| (1..=n_max).map(move |n| (b, -n)))
        .collect();
    let parts = sweep.exec.map(items, |(b, n)| {
        let mut t = Tally::default();
        for k in -k_max..=k_max {
            let q = BaryQuery::new(n, k, b);
            let lhs = bary_binom(&q.with_method(Method::Series))?;
            let rhs = bary_binom(&q.with_method(Method::Partition))?;
            t.compare(&[("b", b.into()), ("n", n), ("k", k)], lhs, rhs);
        }
        Ok(t)
    });
    IdentityReport::from_tallies(
        "cross-oracle",
        sweep.describe(&format!("-{n_max} <= n <= -1"), &format!("|k| <= {k_max}")),
        parts,
    )
}

/// `binom(-n, -k) == 0` for `1 <= k < n <= n_max`, evaluated by both the
/// series and the partition route (the dispatcher short-circuits this band).
pub fn check_vanishing_band(sweep: &Sweep) -> Result<IdentityReport> {
    let n_max = sweep.n_max;
    let items: Vec<(u32, i64)> = sweep
        .checked_bases()?
        .iter()
        .flat_map(|&b| (2..=n_max).map(move |n| (b, n)))
        .collect();
    let parts = sweep.exec.map(items, |(b, n)| {
        let mut t = Tally::default();
        for k in 1..n {
            let q = BaryQuery::new(-n, -k, b);
            for method in [Method::Series, Method::Partition] {
                let v = bary_binom(&q.with_method(method))?;
                t.compare(&[("b", b.into()), ("n", -n), ("k", -k)], v, BigInt::zero());
            }
        }
        Ok(t)
    });
    IdentityReport::from_tallies(
        "vanishing",
        sweep.describe(&format!("1 <= n <= {n_max}"), "-n < k < 0"),
        parts,
    )
}

/// `binom(n, k)_b == classic_binom(n, k)` for `|n|, |k| <= n_max` and every
/// base in the sweep exceeding `max(|n|, |k|)`.
pub fn check_one_digit(sweep: &Sweep) -> Result<IdentityReport> {
    let n_max = sweep.n_max;
    let items: Vec<(u32, i64)> = sweep
        .checked_bases()?
        .iter()
        .flat_map(|&b| (-n_max..=n_max).map(move |n| (b, n)))
        .filter(|&(b, n)| i64::from(b) > n.abs())
        .collect();
    let parts = sweep.exec.map(items, |(b, n)| {
        let mut t = Tally::default();
        let reach = n_max.min(i64::from(b) - 1);
        for k in -reach..=reach {
            t.compare(&[("b", b.into()), ("n", n), ("k", k)], binom(n, k, b)?, classic_binom(n, k));
        }
        Ok(t)
    });
    IdentityReport::from_tallies(
        "one-digit",
        sweep.describe(&format!("|n|, |k| <= {n_max}"), "b > max(|n|, |k|)"),
        parts,
    )
}

/// Matrix of Pascal defects
/// `V(-n, -k) + V(-n, -k - 1) - V(-n + 1, -k)` for `n` in `1..=n_max`
/// (rows) and `k` in `1..=k_max` (columns). `None` selects the standard
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectMatrix {
    pub base: u32,
    pub variant: Option<AltVariant>,
    pub entries: Vec<Vec<BigInt>>,
}

impl DefectMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    /// Entry for `n`, `k` (both 1-based).
    pub fn entry(&self, n: usize, k: usize) -> &BigInt {
        &self.entries[n - 1][k - 1]
    }

    /// Cells whose value is nonzero, as 1-based `(n, k)`.
    pub fn nonzero_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    cells.push((i + 1, j + 1));
                }
            }
        }
        cells
    }
}

fn eval_variant(variant: Option<AltVariant>, n: i64, k: i64, b: u32) -> Result<BigInt> {
    match variant {
        None => binom(n, k, b),
        Some(v) => v.eval_extended(n, k, b),
    }
}

pub fn defect_matrix(base: u32, variant: Option<AltVariant>, n_max: usize, k_max: usize) -> Result<DefectMatrix> {
    check_base(base)?;
    let entries = (1..=n_max as i64)
        .map(|n| {
            (1..=k_max as i64)
                .map(|k| {
                    Ok(eval_variant(variant, -n, -k, base)? + eval_variant(variant, -n, -k - 1, base)?
                        - eval_variant(variant, -n + 1, -k, base)?)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DefectMatrix {
        base,
        variant,
        entries,
    })
}

/// The 10 x 19 star-coefficient defect matrix in base 4.
pub fn table1_matrix() -> DefectMatrix {
    defect_matrix(4, Some(AltVariant::Star), 10, 19).expect("base 4 is valid")
}

/// Named sweeps, as exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Symmetry,
    Pascal,
    PascalPower,
    Prop33,
    Prop33FromZero,
    ChuNegative,
    ChuMixed,
    ChuMixedFullSupport,
    Lucas,
    Aggregation,
    StarPascal,
    DstarPascal,
    CrossOracle,
    Vanishing,
    OneDigit,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::Symmetry,
        Suite::Pascal,
        Suite::PascalPower,
        Suite::Prop33,
        Suite::Prop33FromZero,
        Suite::ChuNegative,
        Suite::ChuMixed,
        Suite::ChuMixedFullSupport,
        Suite::Lucas,
        Suite::Aggregation,
        Suite::StarPascal,
        Suite::DstarPascal,
        Suite::CrossOracle,
        Suite::Vanishing,
        Suite::OneDigit,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Symmetry => "symmetry",
            Suite::Pascal => "pascal",
            Suite::PascalPower => "pascal-power",
            Suite::Prop33 => "prop33",
            Suite::Prop33FromZero => "prop33-from-zero",
            Suite::ChuNegative => "chu-neg",
            Suite::ChuMixed => "chu-mixed",
            Suite::ChuMixedFullSupport => "chu-mixed-full-support",
            Suite::Lucas => "lucas",
            Suite::Aggregation => "aggregation",
            Suite::StarPascal => "star-pascal",
            Suite::DstarPascal => "dstar-pascal",
            Suite::CrossOracle => "cross-oracle",
            Suite::Vanishing => "vanishing",
            Suite::OneDigit => "one-digit",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.id() == id)
    }

    pub fn default_sweep(self) -> Sweep {
        match self {
            Suite::Symmetry | Suite::CrossOracle => Sweep::new(2..=6, 60, 120),
            Suite::Pascal => Sweep::new(2..=6, 100, 200),
            Suite::PascalPower => Sweep::new(2..=5, 80, 160),
            Suite::Prop33 | Suite::Prop33FromZero => Sweep::new(2..=4, 64, 128),
            Suite::ChuNegative | Suite::ChuMixed | Suite::ChuMixedFullSupport => Sweep::new(2..=6, 60, 120),
            Suite::Lucas => Sweep::new([2, 3, 5, 7], 60, 120),
            Suite::Aggregation => Sweep::new(2..=6, 200, 0),
            Suite::StarPascal | Suite::DstarPascal => Sweep::new(2..=6, 200, 200),
            Suite::Vanishing => Sweep::new(2..=6, 60, 0),
            Suite::OneDigit => Sweep::new(2..=64, 30, 0),
        }
    }

    pub fn run(self, sweep: &Sweep) -> Result<IdentityReport> {
        match self {
            Suite::Symmetry => check_symmetry(sweep),
            Suite::Pascal => check_pascal(sweep),
            Suite::PascalPower => check_pascal_power(sweep),
            Suite::Prop33 => check_prop33(sweep, Prop33Range::FromPower),
            Suite::Prop33FromZero => check_prop33(sweep, Prop33Range::FromZero),
            Suite::ChuNegative => check_chu_negative(sweep),
            Suite::ChuMixed => check_chu_mixed(sweep, ChuMixedRange::UpToK),
            Suite::ChuMixedFullSupport => check_chu_mixed(sweep, ChuMixedRange::UpToM),
            Suite::Lucas => check_lucas(sweep),
            Suite::Aggregation => check_digit_sum_aggregation(sweep),
            Suite::StarPascal => check_alt_pascal(sweep, AltVariant::Star),
            Suite::DstarPascal => check_alt_pascal(sweep, AltVariant::DoubleStar),
            Suite::CrossOracle => check_cross_oracle(sweep),
            Suite::Vanishing => check_vanishing_band(sweep),
            Suite::OneDigit => check_one_digit(sweep),
        }
    }
}
