//! Polynomial gcd in `Z[q,t]`, computed recursively as `Z[q][t]` with
//! primitive pseudo-remainder sequences at each level.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::QTPoly;

pub(crate) trait GcdDomain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn exact_div(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    /// Sign of the leading coefficient, recursively.
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    /// Rough size, used to order gcd work cheapest first.
    fn weight(&self) -> usize;

    fn normalized(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl GcdDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn weight(&self) -> usize {
        self.bits() as usize
    }
}

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Dense<R>(pub Vec<R>);

impl<R: GcdDomain> Dense<R> {
    fn trimmed(mut v: Vec<R>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        Dense(v)
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &R {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn scale(&self, c: &R) -> Self {
        Self::trimmed(self.0.iter().map(|x| x.mul(c)).collect())
    }

    fn content(&self) -> R {
        let mut coeffs: Vec<&R> = self.0.iter().filter(|c| !c.is_zero()).collect();
        coeffs.sort_by_key(|c| c.weight());
        let mut g = R::zero();
        for c in coeffs {
            g = g.gcd(c);
            if g == R::one() {
                break;
            }
        }
        g.normalized()
    }

    fn primitive_part(&self) -> Self {
        if self.0.is_empty() {
            return self.clone();
        }
        let c = self.content();
        let pp = Dense(
            self.0
                .iter()
                .map(|x| x.exact_div(&c).expect("content divides every coefficient"))
                .collect(),
        );
        pp.normalized()
    }

    /// `lc(b)^(deg a - deg b + 1) * a  mod  b`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero");
        let lb = b.lead().clone();
        let mut r = self.clone();
        let mut e = match r.degree() {
            Some(da) if da >= db => da - db + 1,
            _ => return r,
        };
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().clone();
            let shift = dr - db;
            let mut next: Vec<R> = r.0.iter().map(|c| c.mul(&lb)).collect();
            for (i, bc) in b.0.iter().enumerate() {
                next[i + shift] = next[i + shift].sub(&bc.mul(&lr));
            }
            r = Self::trimmed(next);
            e -= 1;
        }
        let mut factor = R::one();
        for _ in 0..e {
            factor = factor.mul(&lb);
        }
        r.scale(&factor)
    }
}

impl<R: GcdDomain> GcdDomain for Dense<R> {
    fn zero() -> Self {
        Dense(Vec::new())
    }
    fn one() -> Self {
        Dense(vec![R::one()])
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let v = (0..n)
            .map(|i| match (self.0.get(i), other.0.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::trimmed(v)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Self::trimmed(v)
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        let db = other.degree()?;
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let mut quot = vec![R::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lead().exact_div(other.lead())?;
            let shift = dr - db;
            let mut next = r.0.clone();
            for (i, bc) in other.0.iter().enumerate() {
                next[i + shift] = next[i + shift].sub(&bc.mul(&c));
            }
            quot[shift] = c;
            let before = r.0.len();
            r = Self::trimmed(next);
            if r.0.len() >= before {
                return None;
            }
        }
        Some(Self::trimmed(quot))
    }
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        if self.0.len() == 1 || other.0.len() == 1 {
            let (constant, poly) = if self.0.len() == 1 {
                (self, other)
            } else {
                (other, self)
            };
            let mut g = constant.0[0].clone();
            let mut coeffs: Vec<&R> = poly.0.iter().filter(|c| !c.is_zero()).collect();
            coeffs.sort_by_key(|c| c.weight());
            for c in coeffs {
                if g == R::one() {
                    break;
                }
                g = g.gcd(c);
            }
            return Dense(vec![g.normalized()]);
        }
        let c = self.content().gcd(&other.content()).normalized();
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                a = Self::one();
                break;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c).normalized()
    }
    fn is_negative(&self) -> bool {
        self.0.last().is_some_and(|c| c.is_negative())
    }
    fn neg(&self) -> Self {
        Dense(self.0.iter().map(|c| c.neg()).collect())
    }
    fn weight(&self) -> usize {
        self.0.iter().map(|c| c.weight() + 1).sum()
    }
}

type ZqtPoly = Dense<Dense<BigInt>>;

fn to_recursive(p: &QTPoly) -> ZqtPoly {
    let dt = p.t_degree().map_or(0, |d| d as usize + 1);
    let mut outer: Vec<Vec<BigInt>> = vec![Vec::new(); dt];
    for (m, c) in p.terms() {
        let inner = &mut outer[m.t as usize];
        if inner.len() <= m.q as usize {
            inner.resize(m.q as usize + 1, <BigInt as Zero>::zero());
        }
        inner[m.q as usize] = c.clone();
    }
    Dense::trimmed(outer.into_iter().map(Dense::trimmed).collect())
}

fn from_recursive(p: &ZqtPoly) -> QTPoly {
    let terms = p.0.iter().enumerate().flat_map(|(t, inner)| {
        inner
            .0
            .iter()
            .enumerate()
            .map(move |(q, c)| ((q as u32, t as u32), c.clone()))
    });
    QTPoly::from_terms(terms)
}

/// A gcd of `a` and `b` in `Z[q,t]`, including the integer content. The
/// result is determined up to sign; callers normalize.
pub fn qt_gcd(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.len() == 1 || b.len() == 1 {
        let (mono, other) = if a.len() == 1 { (a, b) } else { (b, a) };
        return monomial_gcd(mono, other);
    }
    if a == b || *a == -b {
        return a.clone();
    }
    let content = Integer::gcd(&a.content(), &b.content());
    let pa = a.div_scalar(&a.content()).expect("content divides");
    let pb = b.div_scalar(&b.content()).expect("content divides");
    if let Some(g) = heuristic_gcd(&pa, &pb) {
        return g.scale(&content);
    }
    from_recursive(&to_recursive(a).gcd(&to_recursive(b)))
}

const HEURISTIC_ATTEMPTS: usize = 6;

fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn next_point(xi: &BigInt) -> BigInt {
    xi * 73794 / 27011
}

/// Digits of `x` in base `xi` with symmetric remainders.
fn symmetric_digits(mut x: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi / 2;
    let mut out = Vec::new();
    while !Zero::is_zero(&x) {
        let mut d = x.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        x = (&x - &d) / xi;
        out.push(d);
    }
    out
}

fn eval_dense(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(<BigInt as Zero>::zero(), |acc, c| acc * x + c)
}

/// Gcd in `Z[t]` by evaluation at a large integer (Char, Geddes and
/// Gonnet), with the result confirmed by exact division.
fn heuristic_gcd_univariate(a: &Dense<BigInt>, b: &Dense<BigInt>) -> Dense<BigInt> {
    let content = Integer::gcd(&a.content(), &b.content());
    let (pa, pb) = (a.primitive_part(), b.primitive_part());
    let mut xi = max_norm(&pa.0).min(max_norm(&pb.0)) * 2 + 29;
    for _ in 0..HEURISTIC_ATTEMPTS {
        let gamma = Integer::gcd(&eval_dense(&pa.0, &xi), &eval_dense(&pb.0, &xi));
        let g = Dense::trimmed(symmetric_digits(gamma, &xi)).primitive_part();
        if !g.is_zero() && pa.exact_div(&g).is_some() && pb.exact_div(&g).is_some() {
            return g.scale(&content);
        }
        xi = next_point(&xi);
    }
    a.gcd(b)
}

/// Bivariate version: evaluate `q` at a large integer, take the univariate
/// gcd in `t` and read the `q`-coefficients back off as digits. Inputs must
/// be primitive over `Z`; `None` means the heuristic gave up.
fn heuristic_gcd(a: &QTPoly, b: &QTPoly) -> Option<QTPoly> {
    let norm = |p: &QTPoly| p.terms().iter().map(|(_, c)| c.abs()).max().unwrap_or_default();
    let mut xi = norm(a).min(norm(b)) * 2 + 29;
    let at_q = |p: &QTPoly, xi: &BigInt| -> Dense<BigInt> {
        let mut v = vec![<BigInt as Zero>::zero(); p.t_degree().map_or(0, |d| d as usize + 1)];
        for (m, c) in p.terms() {
            v[m.t as usize] += c * num_traits::pow(xi.clone(), m.q as usize);
        }
        Dense::trimmed(v)
    };
    for _ in 0..HEURISTIC_ATTEMPTS {
        let gamma = heuristic_gcd_univariate(&at_q(a, &xi), &at_q(b, &xi));
        let mut terms = Vec::new();
        for (t, c) in gamma.0.into_iter().enumerate() {
            for (q, d) in symmetric_digits(c, &xi).into_iter().enumerate() {
                terms.push(((q as u32, t as u32), d));
            }
        }
        let g = QTPoly::from_terms(terms);
        if !g.is_zero() {
            let g = g.div_scalar(&g.content()).expect("content divides");
            if a.exact_div(&g).is_some() && b.exact_div(&g).is_some() {
                return Some(g);
            }
        }
        xi = next_point(&xi);
    }
    None
}

fn monomial_gcd(mono: &QTPoly, other: &QTPoly) -> QTPoly {
    let (m, c) = &mono.terms()[0];
    let (mut q, mut t, mut g) = (m.q, m.t, c.abs());
    for (n, d) in other.terms() {
        q = q.min(n.q);
        t = t.min(n.t);
        g = Integer::gcd(&g, d);
    }
    QTPoly::monomial(g, q, t)
}
