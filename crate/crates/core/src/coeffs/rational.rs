//! Exact elements of ℚ(q) in canonical reduced form.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{poly_div_exact, poly_gcd, QPoly};
use crate::error::{Error, Result};

/// A rational function `numerator / denominator` in `q`.
///
/// Canonical form: the denominator has lowest exponent 0 and a positive
/// leading coefficient, numerator and denominator are coprime as polynomials
/// and their integer contents are jointly coprime. Two values are equal iff
/// their representations are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QRational {
    num: QPoly,
    den: QPoly,
}

impl QRational {
    pub fn zero() -> Self {
        QRational { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        QRational { num: QPoly::one(), den: QPoly::one() }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        QRational { num: QPoly::monomial(c, 0), den: QPoly::one() }
    }

    /// `c q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        QRational { num: QPoly::monomial(c, e), den: QPoly::one() }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRational { num: p, den: QPoly::one() }
    }

    /// Builds `num / den` and reduces it.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial (denominator 1).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // q-powers are units: move the denominator's to the numerator.
        let num = num.shift(-den.low());
        let den = den.shift(-den.low());
        if den.is_monomial() {
            let c = den.coeffs()[0].clone();
            return Self::finish_content(num, QPoly::monomial(c, 0));
        }
        let nlow = num.low();
        let n0 = num.shift(-nlow);
        let g = poly_gcd(n0.coeffs(), den.coeffs());
        let (n0, den) = if g.len() > 1 {
            let nq = poly_div_exact(n0.coeffs(), &g);
            let dq = poly_div_exact(den.coeffs(), &g);
            // Gauss: dividing by a primitive factor keeps integrality
            let to_int = |v: Vec<BigRational>| -> Vec<BigInt> {
                v.into_iter()
                    .map(|c| {
                        debug_assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect()
            };
            (QPoly::from_coeffs(0, to_int(nq)), QPoly::from_coeffs(0, to_int(dq)))
        } else {
            (n0, den)
        };
        let num = n0.shift(nlow);
        let den = den.shift(-den.low());
        Self::finish_content(num, den)
    }

    fn finish_content(num: QPoly, den: QPoly) -> Self {
        let g = num.content().gcd(&den.content());
        let mut num = num.div_integer(&g);
        let mut den = den.div_integer(&g);
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        QRational { num, den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(QRational { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// Substitutes a rational value for `q`; rejects a vanishing denominator.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q).ok_or(Error::DivisionByZero)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.num.eval(q).ok_or(Error::DivisionByZero)?;
        Ok(n / d)
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> Result<BigRational> {
        self.eval(&BigRational::one())
    }

    /// Substitutes `q → q^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::reduce(self.num.substitute_power(k), self.den.substitute_power(k))
    }
}

impl<'a> Add<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRational::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return QRational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        QRational::reduce(n, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return QRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRational::from_poly(&self.num * &rhs.num);
        }
        QRational::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`QRational::checked_div`] otherwise.
impl<'a> Div<&'a QRational> for &'a QRational {
    type Output = QRational;
    fn div(self, rhs: &QRational) -> QRational {
        self.checked_div(rhs).expect("division by zero in QRational")
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

impl Add for QRational {
    type Output = QRational;
    fn add(self, rhs: QRational) -> QRational {
        &self + &rhs
    }
}

impl Sub for QRational {
    type Output = QRational;
    fn sub(self, rhs: QRational) -> QRational {
        &self - &rhs
    }
}

impl Mul for QRational {
    type Output = QRational;
    fn mul(self, rhs: QRational) -> QRational {
        &self * &rhs
    }
}

impl Div for QRational {
    type Output = QRational;
    fn div(self, rhs: QRational) -> QRational {
        &self / &rhs
    }
}

impl AddAssign<&QRational> for QRational {
    fn add_assign(&mut self, rhs: &QRational) {
        *self = &*self + rhs;
    }
}

impl Zero for QRational {
    fn zero() -> Self {
        QRational::zero()
    }
    fn is_zero(&self) -> bool {
        QRational::is_zero(self)
    }
}

impl One for QRational {
    fn one() -> Self {
        QRational::one()
    }
}

impl From<i64> for QRational {
    fn from(c: i64) -> Self {
        QRational::from_int(c)
    }
}

impl From<QPoly> for QRational {
    fn from(p: QPoly) -> Self {
        QRational::from_poly(p)
    }
}

fn fmt_part(p: &QPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.terms().count() > 1 {
        write!(f, "({p})")
    } else {
        write!(f, "{p}")
    }
}

/// Canonical `num/den` text, e.g. `(q^2 - 1)/1`.
impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_part(&self.num, f)?;
        write!(f, "/")?;
        fmt_part(&self.den, f)
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

/// Accepts the canonical form and also a bare polynomial.
impl FromStr for QRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => split = Some(i),
                _ => {}
            }
        }
        let parse = |t: &str| t.parse::<QPoly>().map_err(Error::Parse);
        match split {
            None => Ok(QRational::from_poly(parse(strip_parens(s))?)),
            Some(i) => QRational::new(parse(strip_parens(&s[..i]))?, parse(strip_parens(&s[i + 1..]))?),
        }
    }
}

impl Serialize for QRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> QRational {
        s.parse().unwrap()
    }

    #[test]
    fn self_division_is_one() {
        let a = r("q - q^-1");
        assert!(a.checked_div(&a).unwrap().is_one());
    }

    #[test]
    fn factorization_identity() {
        assert_eq!(&r("q^2 - 1") * &QRational::q_pow(-1), r("q - q^-1"));
    }

    #[test]
    fn reciprocal_sum_is_one() {
        let a = r("1/(1 - q^-2)");
        let b = r("1/(1 - q^2)");
        assert!((&a + &b).is_one());
    }

    #[test]
    fn canonical_form() {
        let x = r("(q^2 - 1)/(q - 1)");
        assert_eq!(x.to_string(), "(q + 1)/1");
        let y = r("2/(-4*q^3 + 2)");
        assert_eq!(y.denominator().low(), 0);
        assert!(y.denominator().leading_coeff().unwrap().is_positive());
        assert_eq!(y.to_string(), "-1/(2*q^3 - 1)");
        assert_eq!(r(&y.to_string()), y);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(QRational::one().checked_div(&QRational::zero()), Err(Error::DivisionByZero));
        assert_eq!(r("1/(q - 1)").at_one(), Err(Error::DivisionByZero));
    }

    #[test]
    fn json_roundtrip() {
        let x = r("(q^2 + 1)/(q^3 - 2)");
        let j = serde_json::to_string(&x).unwrap();
        let back: QRational = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
    }
}
