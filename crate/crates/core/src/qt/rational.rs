use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;

use super::gcd::qt_gcd;
use super::poly::QTPoly;
use crate::error::{Error, Result};

/// Element of `Q(q,t)` stored as a reduced quotient of `Z[q,t]` polynomials.
///
/// Canonical form: numerator and denominator share no common factor
/// (integer content included), and the denominator's leading coefficient
/// (largest monomial in `(q, t)` lex order) is positive. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QTRational {
    num: QTPoly,
    den: QTPoly,
}

impl QTRational {
    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: QTPoly, den: QTPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = qt_gcd(&num, &den);
            if g.is_one() || (-&g).is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        QTRational { num, den }
    }

    pub fn zero() -> Self {
        QTRational {
            num: QTPoly::zero(),
            den: QTPoly::one(),
        }
    }

    pub fn one() -> Self {
        QTPoly::one().into()
    }

    pub fn numerator(&self) -> &QTPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QTPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a polynomial, if the denominator reduced to 1.
    pub fn to_poly(&self) -> Option<QTPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        QTRational::new(self.den.clone(), self.num.clone())
    }
}

impl From<QTPoly> for QTRational {
    fn from(p: QTPoly) -> Self {
        QTRational {
            num: p,
            den: QTPoly::one(),
        }
    }
}

/// `(a, b) -> (a/g, b/g)` for `g = gcd(a, b)`, skipping the division when
/// the gcd is a unit.
fn cancel(a: &QTPoly, b: &QTPoly) -> (QTPoly, QTPoly, QTPoly) {
    let g = qt_gcd(a, b);
    if g.is_one() || (-&g).is_one() {
        return (a.clone(), b.clone(), QTPoly::one());
    }
    (
        a.exact_div(&g).expect("gcd divides"),
        b.exact_div(&g).expect("gcd divides"),
        g,
    )
}

impl QTRational {
    /// Sign fix only; the caller guarantees `num` and `den` are coprime.
    fn coprime(num: QTPoly, den: QTPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            return QTRational { num: -num, den: -den };
        }
        QTRational { num, den }
    }
}

// Sums and products follow Henrici: only gcds of the smaller pieces are
// taken, and the result is reduced by construction.
impl Add for &QTRational {
    type Output = QTRational;
    fn add(self, rhs: &QTRational) -> QTRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num + &rhs.num).into();
        }
        if self.den.is_one() || rhs.den.is_one() {
            let (p, r) = if self.den.is_one() { (self, rhs) } else { (rhs, self) };
            return QTRational::coprime(&(&p.num * &r.den) + &r.num, r.den.clone());
        }
        let (b1, d1, g) = cancel(&self.den, &rhs.den);
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if g.is_one() {
            return QTRational::coprime(num, &self.den * &rhs.den);
        }
        let (num, g1, _) = cancel(&num, &g);
        QTRational::coprime(num, &(&b1 * &d1) * &g1)
    }
}

impl Sub for &QTRational {
    type Output = QTRational;
    fn sub(self, rhs: &QTRational) -> QTRational {
        self + &(-rhs)
    }
}

impl Mul for &QTRational {
    type Output = QTRational;
    fn mul(self, rhs: &QTRational) -> QTRational {
        if self.is_zero() || rhs.is_zero() {
            return QTRational::zero();
        }
        let (a, d, _) = cancel(&self.num, &rhs.den);
        let (c, b, _) = cancel(&rhs.num, &self.den);
        QTRational::coprime(&a * &c, &b * &d)
    }
}

/// Panics on division by zero, like the integer operators.
impl Div for &QTRational {
    type Output = QTRational;
    fn div(self, rhs: &QTRational) -> QTRational {
        assert!(!rhs.is_zero(), "division by zero in Q(q,t)");
        let inv = QTRational::coprime(rhs.den.clone(), rhs.num.clone());
        self * &inv
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> QTPoly {
        QTPoly::from_terms(terms.iter().cloned())
    }

    #[test]
    fn reduces_common_factor_and_normalizes_sign() {
        let q_minus_t = p(&[((1, 0), 1), ((0, 1), -1)]);
        let f = p(&[((0, 0), 1), ((1, 1), 2)]);
        let r = QTRational::new(&f * &q_minus_t, -&(&q_minus_t * &q_minus_t)).unwrap();
        // f (q-t) / -(q-t)^2 = -f / (q-t); leading monomial of q-t is q with +1.
        assert_eq!(r.numerator(), &-&f);
        assert_eq!(r.denominator(), &q_minus_t);
    }

    #[test]
    fn field_operations() {
        let a = QTRational::new(QTPoly::one(), p(&[((1, 0), 1), ((0, 1), -1)])).unwrap();
        let b = QTRational::new(QTPoly::q(), p(&[((1, 0), 1), ((0, 1), -1)])).unwrap();
        // q/(q-t) - 1/(q-t) = (q-1)/(q-t)
        let diff = &b - &a;
        assert_eq!(diff.numerator(), &p(&[((1, 0), 1), ((0, 0), -1)]));
        let prod = &(&a * &b) / &b;
        assert_eq!(prod, a);
        assert!((&a - &a).is_zero());
        assert_eq!((&a / &a).to_poly(), Some(QTPoly::one()));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            QTRational::new(QTPoly::one(), QTPoly::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn integer_content_reduced() {
        let r = QTRational::new(p(&[((1, 0), 2)]), p(&[((0, 0), 4)])).unwrap();
        assert_eq!(r.numerator(), &QTPoly::q());
        assert_eq!(r.denominator(), &QTPoly::constant(2));
    }
}
