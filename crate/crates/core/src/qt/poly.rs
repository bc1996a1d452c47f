use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent pair `q^q t^t`. The derived order is lexicographic in `(q, t)`,
/// which is the canonical term order used everywhere.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q: u32,
    pub t: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, t: 0 };

    pub fn new(q: u32, t: u32) -> Self {
        Monomial { q, t }
    }
}

/// Sparse polynomial in `q` and `t` with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept sorted by [`Monomial`] and no stored coefficient is zero,
/// so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QTPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, q: u32, t: u32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        QTPoly {
            terms: vec![(Monomial::new(q, t), c)],
        }
    }

    /// `q^e`.
    pub fn q_pow(e: u32) -> Self {
        Self::monomial(1, e, 0)
    }

    /// `t^e`.
    pub fn t_pow(e: u32) -> Self {
        Self::monomial(1, 0, e)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn t() -> Self {
        Self::t_pow(1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), C)>,
        C: Into<BigInt>,
    {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for ((q, t), c) in terms {
            *acc.entry(Monomial::new(q, t)).or_default() += c.into();
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        QTPoly { terms }
    }

    /// Univariate polynomial in `q` from ascending coefficients.
    pub fn from_q_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| ((i as u32, 0), c.clone().into()));
        Self::from_terms(terms)
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    /// Constant value if the polynomial has no `q` or `t` dependence.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, q: u32, t: u32) -> BigInt {
        let key = Monomial::new(q, t);
        self.terms
            .binary_search_by(|probe| probe.0.cmp(&key))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.q).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.t).max()
    }

    pub fn min_q_exponent(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.q).min()
    }

    pub fn min_t_exponent(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.t).min()
    }

    /// Largest monomial in the canonical order together with its coefficient.
    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.last().map(|(m, c)| (*m, c))
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> QTPoly {
        if c.is_zero() {
            return QTPoly::zero();
        }
        QTPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`; `None` unless all divisions are exact.
    pub fn div_scalar(&self, c: &BigInt) -> Option<QTPoly> {
        if c.is_zero() {
            return None;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, x) in &self.terms {
            let (quo, rem) = x.div_rem(c);
            if !rem.is_zero() {
                return None;
            }
            terms.push((*m, quo));
        }
        Some(QTPoly { terms })
    }

    /// Multiplication by `q^dq t^dt`.
    pub fn shift(&self, dq: u32, dt: u32) -> QTPoly {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.q + dq, m.t + dt), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> QTPoly {
        let mut base = self.clone();
        let mut acc = QTPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `q^d f(1/q, t)`. With `d = None` the attained `q`-degree is used.
    pub fn rev_q(&self, d: Option<u32>) -> Result<QTPoly> {
        let deg = self.q_degree().unwrap_or(0);
        let d = d.unwrap_or(deg);
        if d < deg {
            return Err(Error::ReversalDegree {
                degree: deg,
                requested: d,
            });
        }
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial::new(d - m.q, m.t), c.clone()))
            .collect();
        terms.sort_unstable_by_key(|a| a.0);
        Ok(QTPoly { terms })
    }

    /// `f / q^m`, failing if some term has `q`-exponent below `m`.
    pub fn exact_div_q_power(&self, m: u32) -> Result<QTPoly> {
        if let Some(low) = self.min_q_exponent() {
            if low < m {
                return Err(Error::NonDivisible {
                    min_exponent: low,
                    required: m,
                });
            }
        }
        Ok(QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (Monomial::new(mono.q - m, mono.t), c.clone()))
                .collect(),
        })
    }

    /// Coefficient of `t^j`, as a polynomial in `q` alone.
    pub fn t_coefficient(&self, j: u32) -> QTPoly {
        QTPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.t == j)
                .map(|(m, c)| (Monomial::new(m.q, 0), c.clone()))
                .collect(),
        }
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> QTPoly {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial::new(m.t, m.q), c.clone()))
            .collect();
        terms.sort_unstable_by_key(|a| a.0);
        QTPoly { terms }
    }

    pub fn eval(&self, q: &BigInt, t: &BigInt) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, (m, c)| {
            acc + c * num_traits::pow(q.clone(), m.q as usize) * num_traits::pow(t.clone(), m.t as usize)
        })
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// Exact quotient `self / divisor` in `Z[q,t]`, or `None` when the
    /// division leaves a remainder.
    pub fn exact_div(&self, divisor: &QTPoly) -> Option<QTPoly> {
        let (lead_m, lead_c) = divisor.leading()?;
        if self.is_zero() {
            return Some(QTPoly::zero());
        }
        if divisor.len() == 1 {
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                if m.q < lead_m.q || m.t < lead_m.t {
                    return None;
                }
                let (quo, rem) = c.div_rem(lead_c);
                if !rem.is_zero() {
                    return None;
                }
                terms.push((Monomial::new(m.q - lead_m.q, m.t - lead_m.t), quo));
            }
            return Some(QTPoly { terms });
        }
        let mut rem: std::collections::BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            if m.q < lead_m.q || m.t < lead_m.t {
                return None;
            }
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            let qm = Monomial::new(m.q - lead_m.q, m.t - lead_m.t);
            for (dm, dc) in &divisor.terms {
                let key = Monomial::new(dm.q + qm.q, dm.t + qm.t);
                let entry = rem.entry(key).or_default();
                *entry -= dc * &qc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        quot.sort_unstable_by_key(|a| a.0);
        Some(QTPoly { terms: quot })
    }

    fn merge(&self, other: &QTPoly, negate: bool) -> QTPoly {
        let mut terms = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let take_left = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_right = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_left {
                terms.push(a[i].clone());
                i += 1;
            } else if take_right {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                terms.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    terms.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        QTPoly { terms }
    }

    fn product(&self, other: &QTPoly) -> QTPoly {
        if self.is_zero() || other.is_zero() {
            return QTPoly::zero();
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            let mut out = other.shift(m.q, m.t);
            if !c.is_one() {
                out = out.scale(c);
            }
            return out;
        }
        if other.len() == 1 {
            return other.product(self);
        }
        let dq = (self.q_degree().unwrap() + other.q_degree().unwrap()) as usize + 1;
        let dt = (self.t_degree().unwrap() + other.t_degree().unwrap()) as usize + 1;
        let pairs = self.len() * other.len();
        if dq * dt <= 4 * pairs + 64 {
            let mut dense = vec![BigInt::zero(); dq * dt];
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    let idx = (ma.q + mb.q) as usize * dt + (ma.t + mb.t) as usize;
                    dense[idx] += ca * cb;
                }
            }
            let terms = dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Monomial::new((i / dt) as u32, (i % dt) as u32), c))
                .collect();
            QTPoly { terms }
        } else {
            let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(pairs);
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    *acc.entry(Monomial::new(ma.q + mb.q, ma.t + mb.t)).or_default() += ca * cb;
                }
            }
            Self::from_map(acc)
        }
    }
}

impl<'a> Add<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        self.merge(rhs, false)
    }
}

impl Add for QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: QTPoly) -> QTPoly {
        self.merge(&rhs, false)
    }
}

impl AddAssign<&QTPoly> for QTPoly {
    fn add_assign(&mut self, rhs: &QTPoly) {
        *self = self.merge(rhs, false);
    }
}

impl<'a> Sub<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        self.merge(rhs, true)
    }
}

impl Sub for QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: QTPoly) -> QTPoly {
        self.merge(&rhs, true)
    }
}

impl SubAssign<&QTPoly> for QTPoly {
    fn sub_assign(&mut self, rhs: &QTPoly) {
        *self = self.merge(rhs, true);
    }
}

impl<'a> Mul<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        self.product(rhs)
    }
}

impl Mul for QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: QTPoly) -> QTPoly {
        self.product(&rhs)
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        -&self
    }
}

impl std::iter::Sum for QTPoly {
    fn sum<I: Iterator<Item = QTPoly>>(iter: I) -> QTPoly {
        iter.fold(QTPoly::zero(), |acc, p| acc + p)
    }
}

impl From<i64> for QTPoly {
    fn from(c: i64) -> Self {
        QTPoly::constant(c)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for QTPoly {
    /// Canonical text form: terms in ascending monomial order, e.g.
    /// `1+q-2*q^2*t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let abs = c.abs();
            let has_vars = m.q > 0 || m.t > 0;
            if !abs.is_one() || !has_vars {
                write!(f, "{abs}")?;
                if has_vars {
                    write!(f, "*")?;
                }
            }
            write_power(f, 'q', m.q)?;
            if m.q > 0 && m.t > 0 {
                write!(f, "*")?;
            }
            write_power(f, 't', m.t)?;
        }
        Ok(())
    }
}

/// Serialized as a list of `[q_exp, t_exp, "coeff"]` triples in canonical
/// order.
impl Serialize for QTPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&(m.q, m.t, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QTPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TermsVisitor;
        impl<'de> Visitor<'de> for TermsVisitor {
            type Value = QTPoly;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a list of [q_exp, t_exp, \"coeff\"] triples")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<QTPoly, A::Error> {
                let mut terms = Vec::new();
                while let Some((q, t, c)) = seq.next_element::<(u32, u32, String)>()? {
                    let c: BigInt = c.parse().map_err(de::Error::custom)?;
                    terms.push(((q, t), c));
                }
                Ok(QTPoly::from_terms(terms))
            }
        }
        deserializer.deserialize_seq(TermsVisitor)
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: u32) -> QTPoly {
    QTPoly::from_terms((0..n).map(|j| ((j, 0), 1)))
}

/// Gaussian binomial coefficient; zero when `m > n`.
pub fn q_binomial(n: u32, m: u32) -> QTPoly {
    if m > n {
        return QTPoly::zero();
    }
    // Pascal recurrence [n, j] = [n-1, j-1] + q^j [n-1, j], one row at a time.
    let mut row: Vec<QTPoly> = vec![QTPoly::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i as usize + 1);
        for j in 0..=i {
            let left = if j >= 1 {
                row[(j - 1) as usize].clone()
            } else {
                QTPoly::zero()
            };
            let right = if j < i {
                row[j as usize].shift(j, 0)
            } else {
                QTPoly::zero()
            };
            next.push(left + right);
        }
        row = next;
    }
    row.swap_remove(m as usize)
}

/// `[p]_{q,t} = sum_{j<p} q^j t^(p-1-j)`.
pub fn p_qt(p: u32) -> QTPoly {
    QTPoly::from_terms((0..p).map(|j| ((j, p - 1 - j), 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QTPoly {
        QTPoly::from_q_coeffs(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(
            &QTPoly::q() + &QTPoly::t(),
            QTPoly::from_terms([((1, 0), 1), ((0, 1), 1)])
        );
        assert!((qp(&[1, 1]) + qp(&[-1, -1])).is_zero());
        let qt = &QTPoly::q() + &QTPoly::t();
        assert_eq!(&qt + &qt, qt.scale(&BigInt::from(2)));
    }

    #[test]
    fn mul_examples() {
        let a = qp(&[1, 1]);
        let b = &QTPoly::one() + &QTPoly::t();
        let expect = QTPoly::from_terms([((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), 1)]);
        assert_eq!(&a * &b, expect);
        assert!((&a * &QTPoly::zero()).is_zero());
        assert_eq!(&q_integer(2) * &q_integer(2), qp(&[1, 2, 1]));
    }

    #[test]
    fn rev_q_examples() {
        assert_eq!(qp(&[1, 2, 0, 1]).rev_q(Some(3)).unwrap(), qp(&[1, 0, 2, 1]));
        assert_eq!(QTPoly::constant(7).rev_q(Some(0)).unwrap(), QTPoly::constant(7));
        assert_eq!(QTPoly::q().rev_q(Some(1)).unwrap(), QTPoly::one());
        assert_eq!(QTPoly::q().rev_q(None).unwrap(), QTPoly::one());
        assert!(matches!(
            qp(&[0, 0, 1]).rev_q(Some(1)),
            Err(Error::ReversalDegree {
                degree: 2,
                requested: 1
            })
        ));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 1), qp(&[1, 1]));
        assert_eq!(q_binomial(4, 2), qp(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(3, 5).is_zero());
        assert!(q_binomial(0, 2).is_zero());
        assert!(q_binomial(1, 2).is_zero());
    }

    #[test]
    fn q_binomial_counts_subsets_by_inversions() {
        // [n choose m]_q = sum over 0/1 words with m ones of q^{inv}.
        for n in 0..=7u32 {
            for m in 0..=n {
                let mut terms = Vec::new();
                for mask in 0u32..(1 << n) {
                    if mask.count_ones() != m {
                        continue;
                    }
                    let mut inv = 0;
                    for i in 0..n {
                        for j in i + 1..n {
                            if mask >> i & 1 == 1 && mask >> j & 1 == 0 {
                                inv += 1;
                            }
                        }
                    }
                    terms.push(((inv, 0), 1));
                }
                assert_eq!(q_binomial(n, m), QTPoly::from_terms(terms), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn p_qt_examples() {
        assert!(p_qt(0).is_zero());
        assert_eq!(p_qt(1), QTPoly::one());
        assert_eq!(p_qt(2), &QTPoly::q() + &QTPoly::t());
    }

    #[test]
    fn exact_div_q_power_examples() {
        assert_eq!(qp(&[0, 0, 1, 1]).exact_div_q_power(2).unwrap(), qp(&[1, 1]));
        assert!(QTPoly::zero().exact_div_q_power(5).unwrap().is_zero());
        assert!(matches!(
            qp(&[1, 1]).exact_div_q_power(1),
            Err(Error::NonDivisible {
                min_exponent: 0,
                required: 1
            })
        ));
    }

    #[test]
    fn exact_div_multivariate() {
        let a = QTPoly::from_terms([((1, 0), 1), ((0, 1), -1)]);
        let b = QTPoly::from_terms([((2, 0), 3), ((0, 0), 1), ((1, 3), -2)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(b.exact_div(&a).is_none());
    }

    #[test]
    fn display_and_json() {
        let p = QTPoly::from_terms([((0, 0), 1), ((1, 0), 1), ((2, 1), -2)]);
        assert_eq!(p.to_string(), "1+q-2*q^2*t");
        assert_eq!(QTPoly::q_pow(15).to_string(), "q^15");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[[0,0,"1"],[1,0,"1"],[2,1,"-2"]]"#);
        let back: QTPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
