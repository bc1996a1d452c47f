//! Partitions, weak compositions and the statistics built on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::guard;

/// A partition, parts weakly decreasing and strictly positive.
///
/// The derived order is lexicographic on parts; reverse-lexicographic
/// listings iterate it backwards.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidParams(format!(
                "{parts:?} is not a weakly decreasing sequence"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(a^b)`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if a == 0 {
            Partition::empty()
        } else {
            Partition(vec![a; b])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().take_while(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Whether the diagram of `self` contains the diagram of `inner`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `n(mu) = sum (i-1) mu_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Cells as (row, column), 0-based, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Coordinatewise sum, missing parts read as zero.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Accepts "3,2,1,1", "(3,2,1,1)", "()" and the empty string.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {p:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Weak composition of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sort(&self) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `alpha_i >= lambda_i` for every `i`.
    pub fn contains(&self, lam: &Partition) -> bool {
        lam.len() <= self.len() && lam.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Number of pairs `i < j` with `alpha_i < alpha_j`.
    pub fn coinv(&self) -> usize {
        let a = &self.0;
        (0..a.len())
            .flat_map(|i| (i + 1..a.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i] < a[j])
            .count()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The parameters `(n, lambda, s)` with `k = |lambda|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeltaParams {
    pub n: usize,
    pub lambda: Partition,
    pub s: usize,
}

impl DeltaParams {
    pub fn new(n: usize, lambda: Partition, s: usize) -> Result<Self> {
        if n == 0 || s == 0 {
            return Err(Error::InvalidParams("n and s must be positive".into()));
        }
        if lambda.size() > n {
            return Err(Error::InvalidParams(format!("|{lambda}| exceeds n = {n}")));
        }
        if lambda.len() > s {
            return Err(Error::InvalidParams(format!("{lambda} has more than s = {s} parts")));
        }
        Ok(DeltaParams { n, lambda, s })
    }

    /// `lambda = (1^k)`, `s = k`.
    pub fn rnk(n: usize, k: usize) -> Result<Self> {
        DeltaParams::new(n, Partition::rectangle(1, k), k)
    }

    pub fn k(&self) -> usize {
        self.lambda.size()
    }

    /// `n - k`.
    pub fn width(&self) -> usize {
        self.n - self.k()
    }

    /// `Lambda = ((n-k)^s) + lambda`.
    pub fn lambda_rect(&self) -> Partition {
        Partition::rectangle(self.width(), self.s).add(&self.lambda)
    }

    /// The battery shape `((n-k)^(s-1))`.
    pub fn battery_shape(&self) -> Partition {
        Partition::rectangle(self.width(), self.s - 1)
    }

    /// Exponent of the normalizing power of `q`: `C(s-1,2)(n-k)`.
    pub fn normalization(&self) -> usize {
        let s1 = self.s - 1;
        s1 * s1.saturating_sub(1) / 2 * self.width()
    }

    /// `n(lambda) + (s-1)(n-k)`: degree used when reversing the module's series.
    pub fn top_degree(&self) -> usize {
        self.lambda.n_stat() + (self.s - 1) * self.width()
    }
}

impl fmt::Display for DeltaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} lambda={} s={}", self.n, self.lambda, self.s)
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// `mu <= nu` in dominance order.
pub fn dominates_leq(mu: &Partition, nu: &Partition) -> Result<bool> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            expected: mu.size(),
            found: nu.size(),
        });
    }
    let (mut a, mut b) = (0, 0);
    for i in 0..mu.len().max(nu.len()) {
        a += mu.part(i);
        b += nu.part(i);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn n_stat(p: &Partition) -> usize {
    p.n_stat()
}

pub fn lambda_rect(params: &DeltaParams) -> Partition {
    params.lambda_rect()
}

fn require_contains(outer: &Partition, inner: &Partition) -> Result<()> {
    if outer.contains(inner) {
        Ok(())
    } else {
        Err(Error::ContainmentViolation {
            inner: inner.to_string(),
            outer: outer.to_string(),
        })
    }
}

pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> Result<bool> {
    require_contains(outer, inner)?;
    Ok((0..outer.len()).all(|i| outer.part(i + 1) <= inner.part(i)))
}

/// Like [`is_horizontal_strip`] but false instead of an error when the
/// containment fails.
pub(crate) fn horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| outer.part(i + 1) <= inner.part(i))
}

pub fn coinv(a: &Composition) -> usize {
    a.coinv()
}

/// `n(mu/lambda) = sum_i C(mu'_i - lambda'_i, 2)` with `mu = sort(a)`.
pub fn skew_n_stat(a: &Composition, lam: &Partition) -> Result<usize> {
    let mu = a.sort();
    skew_n_stat_partition(&mu, lam)
}

pub fn skew_n_stat_partition(mu: &Partition, lam: &Partition) -> Result<usize> {
    require_contains(mu, lam)?;
    let (mc, lc) = (mu.conjugate(), lam.conjugate());
    Ok((0..mc.len())
        .map(|i| {
            let d = mc.part(i) - lc.part(i);
            d * d.saturating_sub(1) / 2
        })
        .sum())
}

/// Weak compositions of `n` with `s` parts containing `lam`, in
/// reverse-lexicographic order.
pub fn compositions_over(n: usize, lam: &Partition, s: usize) -> Result<Vec<Composition>> {
    guard::check(guard::PARTITION_N, "composition size", n)?;
    if lam.size() > n || lam.len() > s {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    let tail: Vec<usize> = (0..=s).map(|i| (i..s).map(|j| lam.part(j)).sum()).collect();
    fn rec(
        i: usize,
        left: usize,
        s: usize,
        lam: &Partition,
        tail: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Composition>,
    ) {
        if i == s {
            if left == 0 {
                out.push(Composition(cur.clone()));
            }
            return;
        }
        let lo = lam.part(i);
        let Some(hi) = left.checked_sub(tail[i + 1]) else {
            return;
        };
        if hi < lo {
            return;
        }
        for v in (lo..=hi).rev() {
            if i + 1 == s && v != left {
                continue;
            }
            cur.push(v);
            rec(i + 1, left - v, s, lam, tail, cur, out);
            cur.pop();
        }
    }
    rec(0, n, s, lam, &tail, &mut cur, &mut out);
    Ok(out)
}

/// Partitions of `n` with at most `max_len` parts, reverse-lexicographic.
pub fn enumerate_partitions(n: usize, max_len: Option<usize>) -> Result<Vec<Partition>> {
    guard::check(guard::PARTITION_N, "partition size", n)?;
    let max_len = max_len.unwrap_or(n);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=max_part.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    rec(n, n, max_len, &mut cur, &mut out);
    Ok(out)
}

/// Partitions contained in the `rows x cols` box, any size.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rows: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if cur.len() == rows {
            return;
        }
        for p in 1..=max_part {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    rec(rows, cols, &mut cur, &mut out);
    out
}
