//! Symmetric functions in the Schur basis with `Z[q,t]` coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, partitions_in_box, Partition};
use crate::qt::QTPoly;
use crate::tableaux::{for_each_lr_filling, ssyt_shape_weak_content, strip_extensions};

/// A finite sum `sum_lambda c_lambda(q,t) s_lambda`. No zero coefficient is
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurPoly {
    terms: BTreeMap<Partition, QTPoly>,
}

impl SchurPoly {
    pub fn zero() -> Self {
        SchurPoly::default()
    }

    pub fn one() -> Self {
        SchurPoly::s(Partition::empty())
    }

    /// The single Schur function `s_lambda`.
    pub fn s(lambda: Partition) -> Self {
        SchurPoly::term(lambda, QTPoly::one())
    }

    pub fn term(lambda: Partition, coeff: QTPoly) -> Self {
        let mut f = SchurPoly::zero();
        f.add_term(lambda, &coeff);
        f
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, QTPoly)>) -> Self {
        let mut f = SchurPoly::zero();
        for (p, c) in terms {
            f.add_term(p, &c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: &QTPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> QTPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in reverse-lexicographic order of partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &QTPoly)> {
        self.terms.iter().rev()
    }

    pub fn map_coeffs(&self, f: impl Fn(&QTPoly) -> QTPoly) -> SchurPoly {
        SchurPoly::from_terms(self.terms.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    pub fn scale(&self, c: &QTPoly) -> SchurPoly {
        self.map_coeffs(|x| x * c)
    }

    /// Largest `q`-exponent over all coefficients.
    pub fn q_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(|c| c.q_degree()).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(|c| c.t_degree()).max()
    }

    /// Coefficient of `q^e` as a symmetric function.
    pub fn q_coefficient(&self, e: u32) -> SchurPoly {
        self.map_coeffs(|c| {
            QTPoly::from_terms(
                c.terms()
                    .iter()
                    .filter(|(m, _)| m.q == e)
                    .map(|(m, k)| ((0, m.t), k.clone())),
            )
        })
    }

    pub fn swap_qt(&self) -> SchurPoly {
        self.map_coeffs(QTPoly::swap_qt)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(QTPoly::has_nonnegative_coefficients)
    }

    /// Same homogeneous degree for every term, if any.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// `"(1+q)*s[2] + q*s[1,1]"`, or `"0"`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// One line per monomial: `partition;q_exp;t_exp;coeff`, with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("partition;q_exp;t_exp;coeff\n");
        for (p, c) in self.iter() {
            let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
            for (m, k) in c.terms() {
                out.push_str(&format!("{};{};{};{}\n", parts.join(","), m.q, m.t, k));
            }
        }
        out
    }
}

fn bracket(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    format!("s[{}]", parts.join(","))
}

impl fmt::Display for SchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}", bracket(p))?;
            } else if c.len() == 1 {
                write!(f, "{}*{}", c, bracket(p))?;
            } else {
                write!(f, "({})*{}", c, bracket(p))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Partition,
    coeff: QTPoly,
}

#[derive(Serialize, Deserialize)]
struct JsonDoc {
    basis: String,
    terms: Vec<JsonTerm>,
}

impl Serialize for SchurPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonDoc {
            basis: "schur".into(),
            terms: self
                .iter()
                .map(|(p, c)| JsonTerm {
                    partition: p.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = JsonDoc::deserialize(d)?;
        if doc.basis != "schur" {
            return Err(D::Error::custom(format!("unsupported basis {:?}", doc.basis)));
        }
        Ok(SchurPoly::from_terms(
            doc.terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}

impl std::ops::Add for &SchurPoly {
    type Output = SchurPoly;
    fn add(self, rhs: &SchurPoly) -> SchurPoly {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c);
        }
        out
    }
}

impl std::ops::AddAssign<&SchurPoly> for SchurPoly {
    fn add_assign(&mut self, rhs: &SchurPoly) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c);
        }
    }
}

impl std::ops::Neg for &SchurPoly {
    type Output = SchurPoly;
    fn neg(self) -> SchurPoly {
        self.map_coeffs(|c| -c)
    }
}

impl std::ops::Sub for &SchurPoly {
    type Output = SchurPoly;
    fn sub(self, rhs: &SchurPoly) -> SchurPoly {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &SchurPoly {
    type Output = SchurPoly;
    fn mul(self, rhs: &SchurPoly) -> SchurPoly {
        schur_mul(self, rhs)
    }
}

impl std::iter::Sum for SchurPoly {
    fn sum<I: Iterator<Item = SchurPoly>>(iter: I) -> SchurPoly {
        let mut out = SchurPoly::zero();
        for f in iter {
            out += &f;
        }
        out
    }
}

type Expansion = Arc<Vec<(Partition, usize)>>;

fn cached<K, F>(cache: &'static OnceLock<RwLock<HashMap<K, Expansion>>>, key: K, compute: F) -> Expansion
where
    K: std::hash::Hash + Eq + Clone,
    F: FnOnce() -> Vec<(Partition, usize)>,
{
    let lock = cache.get_or_init(Default::default);
    if let Some(v) = lock.read().expect("cache lock").get(&key) {
        return v.clone();
    }
    let v = Arc::new(compute());
    lock.write().expect("cache lock").entry(key).or_insert(v).clone()
}

/// `s_lambda * s_mu = sum_nu c^nu_{lambda,mu} s_nu`, found by adding `mu_1`
/// ones, then `mu_2` twos, ... to `lambda` as horizontal strips and keeping
/// chains whose reverse reading word is Yamanouchi.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> Expansion {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), Expansion>>> = OnceLock::new();
    cached(&CACHE, (lambda.clone(), mu.clone()), || {
        let mut counts: BTreeMap<Partition, usize> = BTreeMap::new();
        let max_rows = lambda.len() + mu.len();
        let mut filling: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
        grow(lambda.parts().to_vec(), 0, mu, max_rows, &mut filling, &mut counts);
        counts.into_iter().collect()
    })
}

fn grow(
    shape: Vec<usize>,
    i: usize,
    mu: &Partition,
    max_rows: usize,
    filling: &mut Vec<Vec<usize>>,
    counts: &mut BTreeMap<Partition, usize>,
) {
    if i == mu.len() {
        *counts.entry(Partition::new(shape).expect("shape")).or_default() += 1;
        return;
    }
    let letter = i + 1;
    for next in strip_extensions(&shape, mu.part(i), max_rows, None) {
        let rows_before = filling.len();
        for (r, &len) in next.iter().enumerate() {
            if r == filling.len() {
                filling.push(Vec::new());
            }
            filling[r].resize(len, letter);
        }
        if letter == 1 || lattice_pair_ok(filling, letter) {
            grow(next.clone(), i + 1, mu, max_rows, filling, counts);
        }
        for (r, &len) in shape.iter().enumerate() {
            filling[r].truncate(len);
        }
        filling.truncate(rows_before);
    }
}

/// In the reverse reading word (bottom row first, right to left), every
/// prefix has at least as many `letter - 1` as `letter`.
fn lattice_pair_ok(filling: &[Vec<usize>], letter: usize) -> bool {
    let (mut below, mut this) = (0usize, 0usize);
    for row in filling {
        for &x in row.iter().rev() {
            if x == letter - 1 {
                below += 1;
            } else if x == letter {
                this += 1;
                if this > below {
                    return false;
                }
            }
        }
    }
    true
}

/// `s_{nu/mu} = sum_eta c^nu_{mu,eta} s_eta`, counted from the
/// Littlewood-Richardson fillings of `nu/mu` with free content.
pub fn lr_skew(nu: &Partition, mu: &Partition) -> Expansion {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), Expansion>>> = OnceLock::new();
    cached(&CACHE, (nu.clone(), mu.clone()), || {
        let mut counts: BTreeMap<Partition, usize> = BTreeMap::new();
        if nu.contains(mu) {
            for_each_lr_filling(nu, mu, None, &mut |_, c| {
                *counts
                    .entry(Partition::new(c.to_vec()).expect("lattice content"))
                    .or_default() += 1;
            });
        }
        counts.into_iter().collect()
    })
}

pub fn schur_mul(f: &SchurPoly, g: &SchurPoly) -> SchurPoly {
    let mut out = SchurPoly::zero();
    for (a, ca) in &f.terms {
        for (b, cb) in &g.terms {
            let c = ca * cb;
            for (nu, mult) in lr_product(a, b).iter() {
                out.add_term(nu.clone(), &c.scale(&BigInt::from(*mult)));
            }
        }
    }
    out
}

/// The skewing operator `s_mu^perp`.
pub fn skew(mu: &Partition, f: &SchurPoly) -> SchurPoly {
    let mut out = SchurPoly::zero();
    for (nu, c) in &f.terms {
        for (eta, mult) in lr_skew(nu, mu).iter() {
            out.add_term(eta.clone(), &c.scale(&BigInt::from(*mult)));
        }
    }
    out
}

pub fn omega(f: &SchurPoly) -> SchurPoly {
    SchurPoly::from_terms(f.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())))
}

/// The plethystic substitution `f -> f[X(1-q)]`, from
/// `s_lam[X - qX] = sum_{mu <= lam} (-q)^{|lam/mu|} s_mu * omega(s_{lam/mu})`.
pub fn plethysm_one_minus_q(f: &SchurPoly) -> SchurPoly {
    static CACHE: OnceLock<RwLock<HashMap<Partition, SchurPoly>>> = OnceLock::new();
    let lock = CACHE.get_or_init(Default::default);
    let mut out = SchurPoly::zero();
    for (lam, c) in &f.terms {
        let cached = lock.read().expect("cache lock").get(lam).cloned();
        let image = cached.unwrap_or_else(|| {
            let mut image = SchurPoly::zero();
            for mu in partitions_in_box(lam.len(), lam.part(0)) {
                if !lam.contains(&mu) {
                    continue;
                }
                let d = lam.size() - mu.size();
                let sign = if d % 2 == 0 { 1 } else { -1 };
                let coeff = QTPoly::monomial(sign, d as u32, 0);
                let skewed = omega(&skew(&mu, &SchurPoly::s(lam.clone())));
                image += &schur_mul(&SchurPoly::s(mu), &skewed).scale(&coeff);
            }
            lock.write().expect("cache lock").insert(lam.clone(), image.clone());
            image
        });
        out += &image.scale(c);
    }
    out
}

pub fn hall_inner(f: &SchurPoly, g: &SchurPoly) -> QTPoly {
    f.terms.iter().filter_map(|(p, c)| g.terms.get(p).map(|d| c * d)).sum()
}

/// `q`-reversal with one global degree: the largest `q`-exponent present.
pub fn rev_q_schur(f: &SchurPoly) -> SchurPoly {
    match f.q_degree() {
        Some(d) => rev_q_schur_at(f, d).expect("degree is the maximum"),
        None => f.clone(),
    }
}

/// `q^d f(1/q)` applied to every coefficient.
pub fn rev_q_schur_at(f: &SchurPoly, d: u32) -> Result<SchurPoly> {
    let mut out = SchurPoly::zero();
    for (p, c) in &f.terms {
        out.add_term(p.clone(), &c.rev_q(Some(d))?);
    }
    Ok(out)
}

pub fn e_n(n: usize) -> SchurPoly {
    SchurPoly::s(Partition::rectangle(1, n))
}

pub fn h_n(n: usize) -> SchurPoly {
    SchurPoly::s(Partition::rectangle(n, 1))
}

/// Kostka number `K_{lambda,mu}`, the number of SSYT of shape `lambda` and
/// content `mu`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> usize {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), usize>>> = OnceLock::new();
    let lock = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = lock.read().expect("cache lock").get(&key) {
        return v;
    }
    let v = ssyt_shape_weak_content(lambda, mu.parts()).len();
    lock.write().expect("cache lock").insert(key, v);
    v
}

/// Converts a symmetric function given by its monomial coefficients into the
/// Schur basis by peeling off dominance-maximal terms:
/// `s_lambda = sum_mu K_{lambda,mu} m_mu` is unitriangular.
pub fn monomial_to_schur(coeffs: &BTreeMap<Partition, QTPoly>) -> Result<SchurPoly> {
    let mut residual: BTreeMap<Partition, QTPoly> = coeffs
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect();
    let mut out = SchurPoly::zero();
    // Lexicographically largest first is a linear extension of dominance.
    while let Some((lambda, c)) = residual.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) {
        let n = lambda.size();
        for mu in enumerate_partitions(n, None)? {
            if mu > lambda {
                continue;
            }
            let k = kostka_number(&lambda, &mu);
            if k == 0 {
                continue;
            }
            let entry = residual.entry(mu.clone()).or_default();
            *entry -= &c.scale(&BigInt::from(k));
            if entry.is_zero() {
                residual.remove(&mu);
            }
        }
        if residual.contains_key(&lambda) {
            return Err(Error::InconsistentSystem);
        }
        out.add_term(lambda, &c);
    }
    Ok(out)
}

/// Monomial coefficients of `f`, via Kostka numbers.
pub fn schur_to_monomial(f: &SchurPoly) -> Result<BTreeMap<Partition, QTPoly>> {
    let mut out: BTreeMap<Partition, QTPoly> = BTreeMap::new();
    for (lambda, c) in &f.terms {
        for mu in enumerate_partitions(lambda.size(), None)? {
            let k = kostka_number(lambda, &mu);
            if k > 0 {
                *out.entry(mu).or_default() += &c.scale(&BigInt::from(k));
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn s(x: &str) -> SchurPoly {
        SchurPoly::s(p(x))
    }

    #[test]
    fn products() {
        assert_eq!(&s("1") * &s("1"), &s("2") + &s("1,1"));
        assert_eq!(&s("2") * &s("1"), &s("3") + &s("2,1"));
        let f = &s("2,1") + &SchurPoly::term(p("3"), QTPoly::q());
        assert_eq!(&f * &SchurPoly::one(), f);
        // s21 * s21 = s42 + s411 + s33 + 2 s321 + s3111 + s222 + s2211
        let sq = &s("2,1") * &s("2,1");
        assert_eq!(sq.coeff(&p("3,2,1")), QTPoly::constant(2));
        assert_eq!(sq.len(), 7);
    }

    #[test]
    fn skewing() {
        assert_eq!(skew(&p("1"), &s("2,1")), &s("2") + &s("1,1"));
        assert_eq!(skew(&p("2,1"), &s("2,1")), SchurPoly::one());
        assert!(skew(&p("3"), &s("2,1")).is_zero());
    }

    #[test]
    fn omega_and_inner() {
        assert_eq!(omega(&s("3")), s("1,1,1"));
        assert_eq!(omega(&s("2,1")), s("2,1"));
        assert_eq!(hall_inner(&s("2"), &s("2")), QTPoly::one());
        assert!(hall_inner(&s("2"), &s("1,1")).is_zero());
    }

    #[test]
    fn reversal() {
        let f = &s("2") + &SchurPoly::term(p("1,1"), QTPoly::q());
        let g = &SchurPoly::term(p("2"), QTPoly::q()) + &s("1,1");
        assert_eq!(rev_q_schur(&f), g);
        let c = &s("2") + &s("1,1");
        assert_eq!(rev_q_schur(&c), c);
        assert!(rev_q_schur_at(&f, 0).is_err());
    }

    #[test]
    fn elementary_and_complete() {
        assert_eq!(e_n(2), s("1,1"));
        assert_eq!(h_n(3), s("3"));
        assert_eq!(e_n(0), SchurPoly::one());
        assert_eq!(h_n(0), SchurPoly::one());
    }

    #[test]
    fn monomial_conversion() {
        let mut m = BTreeMap::new();
        m.insert(p("1,1"), QTPoly::one());
        assert_eq!(monomial_to_schur(&m).unwrap(), s("1,1"));
        m.insert(p("2"), QTPoly::one());
        assert_eq!(monomial_to_schur(&m).unwrap(), s("2"));
        // m_2 alone is s2 - s11.
        let mut only = BTreeMap::new();
        only.insert(p("2"), QTPoly::one());
        assert_eq!(monomial_to_schur(&only).unwrap(), &s("2") - &s("1,1"));
        for n in 0..=6 {
            for lam in enumerate_partitions(n, None).unwrap() {
                let f = s(&lam.to_string());
                assert_eq!(monomial_to_schur(&schur_to_monomial(&f).unwrap()).unwrap(), f);
            }
        }
    }

    #[test]
    fn text_json_csv() {
        let f = &SchurPoly::term(p("2"), QTPoly::from_q_coeffs(&[1, 1])) + &SchurPoly::term(p("1,1"), QTPoly::q());
        assert_eq!(f.to_text(), "(1+q)*s[2] + q*s[1,1]");
        assert_eq!(SchurPoly::zero().to_text(), "0");
        assert_eq!(SchurPoly::one().to_text(), "s[]");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"basis":"schur","terms":[{"partition":[2],"coeff":[[0,0,"1"],[1,0,"1"]]},{"partition":[1,1],"coeff":[[1,0,"1"]]}]}"#
        );
        assert_eq!(serde_json::from_str::<SchurPoly>(&json).unwrap(), f);
        assert_eq!(f.to_csv(), "partition;q_exp;t_exp;coeff\n2;0;0;1\n2;1;0;1\n1,1;1;0;1\n");
    }

    #[test]
    fn plethysm_by_one_minus_q() {
        let two = plethysm_one_minus_q(&SchurPoly::s(p("2")));
        let expect = SchurPoly::from_terms([
            (p("2"), QTPoly::from_terms([((0, 0), 1), ((1, 0), -1)])),
            (p("1,1"), QTPoly::from_terms([((2, 0), 1), ((1, 0), -1)])),
        ]);
        assert_eq!(two, expect);
        assert_eq!(plethysm_one_minus_q(&SchurPoly::one()), SchurPoly::one());
        // At q = 1 the alphabet X(1-q) is empty.
        let f = plethysm_one_minus_q(&SchurPoly::s(p("3,2,1")));
        assert!(f.iter().all(|(_, c)| c.eval(&1.into(), &1.into()) == 0.into()));
    }
}
