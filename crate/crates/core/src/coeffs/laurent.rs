//! Integer Laurent polynomials in the deformation parameter `q`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `Σ c_k q^k` with integer coefficients.
///
/// Stored densely from the lowest exponent; the coefficient vector never has
/// zero entries at either end, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_coeffs(e, vec![c.into()])
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(coefficient, exponent)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i64)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(BigInt, i64)> = terms.into_iter().map(|(c, e)| (c.into(), e)).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.1).min().unwrap();
        let high = terms.iter().map(|t| t.1).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (c, e) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_coeffs(low, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low || e > self.high() || self.is_zero() {
            BigInt::zero()
        } else {
            self.coeffs[(e - self.low) as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// gcd of the integer coefficients (nonnegative; 0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn div_integer(&self, c: &BigInt) -> Self {
        QPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Evaluates at a rational value of `q`; `None` if `q = 0` and a negative
    /// power is present.
    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if q.is_zero() && self.low < 0 {
            return None;
        }
        // Horner on the polynomial part, then multiply by q^low.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        let factor = rat_pow(q, self.low);
        Some(acc * factor)
    }

    /// Substitutes `q → q^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0);
        Self::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), (self.low + i as i64) * k)),
        )
    }

    /// Iterates `(exponent, coefficient)` over nonzero terms, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }
}

pub(crate) fn rat_pow(q: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::one();
    let base = if e < 0 { q.recip() } else { q.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        QPoly::from_coeffs(low, coeffs)
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::monomial(c, 0)
    }
}

/// Polynomial division over ℚ of ordinary polynomials given as coefficient
/// vectors from degree 0. Returns `(quotient, remainder)`.
fn rat_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &c * bj;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    while rem.last().is_some_and(|c| c.is_zero()) {
        rem.pop();
    }
    (quot, rem)
}

fn to_rat(p: &[BigInt]) -> Vec<BigRational> {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

/// Clears denominators and content: returns a primitive integer polynomial
/// with positive leading coefficient.
fn primitive_part(p: &[BigRational]) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let mut out: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
    if out.last().is_some_and(|c| c.is_negative()) {
        for c in out.iter_mut() {
            *c = -c.clone();
        }
    }
    out
}

/// Monic-up-to-content gcd of two ordinary integer polynomials (coefficients
/// from degree 0), as a primitive polynomial with positive leading coefficient.
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = to_rat(a);
    let mut y = to_rat(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let (_, r) = rat_divmod(&x, &y);
        x = y;
        y = r;
    }
    primitive_part(&x)
}

/// Exact division of ordinary integer polynomials over ℚ; the caller
/// guarantees divisibility.
pub(crate) fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigRational> {
    let (q, r) = rat_divmod(&to_rat(a), &to_rat(b));
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

impl QPoly {
    /// Orders by exponent-descending coefficient comparison; used only for
    /// deterministic output.
    pub fn cmp_repr(&self, other: &QPoly) -> Ordering {
        (self.low, &self.coeffs).cmp(&(other.low, &other.coeffs))
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, c: &BigInt, e: i64, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let unit = abs.is_one();
    match e {
        0 => write!(f, "{abs}"),
        1 if unit => write!(f, "q"),
        1 => write!(f, "{abs}*q"),
        _ if unit => write!(f, "q^{e}"),
        _ => write!(f, "{abs}*q^{e}"),
    }
}

/// Terms in descending exponent, e.g. `q^2 - 2 + q^-2`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            fmt_monomial(f, c, self.low + i as i64, first)?;
            first = false;
        }
        Ok(())
    }
}

/// Parses the output of `Display`: `±c*q^e` terms separated by `+`/`-`.
impl std::str::FromStr for QPoly {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty polynomial".into());
        }
        let bytes = s.as_bytes();
        let mut terms: Vec<(BigInt, i64)> = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            }
            let start = i;
            // a term ends at the next +/- that is not an exponent sign
            while i < bytes.len() && !((bytes[i] == b'+' || bytes[i] == b'-') && i > start && bytes[i - 1] != b'^') {
                i += 1;
            }
            let term = &s[start..i];
            let (coef, exp) = parse_term(term)?;
            terms.push((coef * sign, exp));
        }
        Ok(QPoly::from_terms(terms))
    }
}

fn parse_term(t: &str) -> Result<(BigInt, i64), String> {
    if t.is_empty() {
        return Err("dangling sign".into());
    }
    let (coef_part, q_part) = match t.find('q') {
        None => (t, None),
        Some(pos) => {
            let c = t[..pos].trim_end_matches('*');
            (c, Some(&t[pos + 1..]))
        }
    };
    let coef = if coef_part.is_empty() {
        BigInt::one()
    } else {
        coef_part.parse::<BigInt>().map_err(|e| format!("bad coefficient {coef_part:?}: {e}"))?
    };
    let exp = match q_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let rest = rest.strip_prefix('^').ok_or_else(|| format!("bad power {rest:?}"))?;
            rest.parse::<i64>().map_err(|e| format!("bad exponent {rest:?}: {e}"))?
        }
    };
    Ok((coef, exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn display_and_parse() {
        let x = QPoly::from_terms([(1, 2), (-2, 0), (3, -1)]);
        assert_eq!(x.to_string(), "q^2 - 2 + 3*q^-1");
        assert_eq!(p("q^2 - 2 + 3*q^-1"), x);
        assert_eq!(p("-q"), QPoly::monomial(-1, 1));
        assert_eq!(p("0"), QPoly::zero());
    }

    #[test]
    fn arithmetic() {
        let a = p("q - q^-1");
        let b = p("q + q^-1");
        assert_eq!(&a * &b, p("q^2 - q^-2"));
        assert_eq!(&a - &a, QPoly::zero());
        assert_eq!(a.pow(2), p("q^2 - 2 + q^-2"));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (q^2 - 1) and (q^3 - 1) share q - 1
        let a: Vec<BigInt> = [-1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let b: Vec<BigInt> = [-1, 0, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let g = poly_gcd(&a, &b);
        assert_eq!(g, vec![BigInt::from(-1), BigInt::from(1)]);
    }

    #[test]
    fn eval_at_one() {
        let x = p("q^2 - 3 + q^-2");
        assert_eq!(x.eval(&BigRational::one()).unwrap(), BigRational::from_integer((-1).into()));
    }
}
