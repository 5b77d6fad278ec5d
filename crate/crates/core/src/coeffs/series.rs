//! Nested Laurent series, stored exactly on a window.
//!
//! Variables are listed in region order `x₁ ≫ x₂ ≫ ⋯`, so rational factors
//! are expanded in the small monomials `x_j/x_i` (i < j) and `x_i⁻¹`. For an
//! exponent `e` the *depth* is the vector `d_k(e) = −(e₁ + ⋯ + e_k)`; the small
//! monomials are exactly those with nonnegative depth. A window records a
//! depth floor (every term has `d ≥ floor`) and an optional depth ceiling
//! (every coefficient with `d ≤ ceiling` is exact). Products shift these
//! bounds additively, which is what makes truncated multiplication exact.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::rational::QRational;
use crate::error::{Error, Result};

/// Coefficient spaces for series: an additive group.
pub trait Coefficient: Clone + PartialEq + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn neg(&self) -> Self;
}

impl Coefficient for QRational {
    fn is_zero(&self) -> bool {
        QRational::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coefficient for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
}

pub fn depth(e: &[i64]) -> Vec<i64> {
    let mut acc = 0;
    e.iter()
        .map(|x| {
            acc -= x;
            acc
        })
        .collect()
}

/// Inverse of [`depth`].
pub fn exponent_from_depth(d: &[i64]) -> Vec<i64> {
    let mut prev = 0;
    d.iter()
        .map(|x| {
            let e = prev - x;
            prev = *x;
            e
        })
        .collect()
}

/// Floor and ceiling in depth coordinates. `ceiling[k] = None` means no
/// truncation in that coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentWindow {
    pub floor: Vec<i64>,
    pub ceiling: Vec<Option<i64>>,
}

impl ExponentWindow {
    /// Window of a polynomial: exact everywhere.
    pub fn exact(floor: Vec<i64>) -> Self {
        let n = floor.len();
        ExponentWindow { floor, ceiling: vec![None; n] }
    }

    pub fn new(floor: Vec<i64>, ceiling: Vec<i64>) -> Self {
        ExponentWindow { floor, ceiling: ceiling.into_iter().map(Some).collect() }
    }

    pub fn len(&self) -> usize {
        self.floor.len()
    }

    pub fn is_empty(&self) -> bool {
        self.floor.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.ceiling.iter().all(Option::is_none)
    }

    pub fn below_floor(&self, d: &[i64]) -> bool {
        d.iter().zip(&self.floor).any(|(x, f)| x < f)
    }

    pub fn within_ceiling(&self, d: &[i64]) -> bool {
        d.iter().zip(&self.ceiling).all(|(x, c)| c.is_none_or(|c| *x <= c))
    }

    /// Window of a product of series with windows `self` and `other`.
    pub fn product(&self, other: &Self) -> Self {
        let floor = self.floor.iter().zip(&other.floor).map(|(a, b)| a + b).collect();
        let ceiling = (0..self.len())
            .map(|k| {
                let x = self.ceiling[k].map(|c| c + other.floor[k]);
                let y = other.ceiling[k].map(|c| c + self.floor[k]);
                min_opt(x, y)
            })
            .collect();
        ExponentWindow { floor, ceiling }
    }

    pub fn sum(&self, other: &Self) -> Self {
        let floor = self.floor.iter().zip(&other.floor).map(|(a, b)| *a.min(b)).collect();
        let ceiling = self.ceiling.iter().zip(&other.ceiling).map(|(a, b)| min_opt(*a, *b)).collect();
        ExponentWindow { floor, ceiling }
    }

    /// Lowers the ceiling to at most `target`.
    pub fn capped(&self, target: &[Option<i64>]) -> Self {
        let ceiling = self.ceiling.iter().zip(target).map(|(a, b)| min_opt(*a, *b)).collect();
        ExponentWindow { floor: self.floor.clone(), ceiling }
    }

    /// True when every coefficient of `bx` is known.
    pub fn covers(&self, bx: &ExponentBox) -> bool {
        let need = bx.required_ceiling();
        need.iter().zip(&self.ceiling).all(|(n, c)| c.is_none_or(|c| *n <= c))
    }
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

/// A box of raw exponents `lo ≤ e ≤ hi`, used to request coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl ExponentBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() || lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::Invalid(format!("bad exponent box {lo:?}..{hi:?}")));
        }
        Ok(ExponentBox { lo, hi })
    }

    pub fn len(&self) -> usize {
        self.lo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lo.is_empty()
    }

    pub fn contains(&self, e: &[i64]) -> bool {
        e.iter().zip(&self.lo).zip(&self.hi).all(|((x, l), h)| l <= x && x <= h)
    }

    /// Depth ceiling needed for all coefficients in the box to be exact.
    pub fn required_ceiling(&self) -> Vec<i64> {
        depth(&self.lo)
    }

    pub fn size(&self) -> usize {
        self.lo.iter().zip(&self.hi).map(|(l, h)| (h - l + 1) as usize).product()
    }

    /// All points in lexicographic order.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::with_capacity(self.len())];
        for (l, h) in self.lo.iter().zip(&self.hi) {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (*l..=*h).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NestedSeries<C> {
    vars: Vec<String>,
    window: ExponentWindow,
    terms: BTreeMap<Vec<i64>, C>,
}

impl<C: Coefficient> NestedSeries<C> {
    /// Zero series, exact everywhere.
    pub fn zero(vars: Vec<String>) -> Self {
        let n = vars.len();
        NestedSeries { vars, window: ExponentWindow::exact(vec![0; n]), terms: BTreeMap::new() }
    }

    pub fn with_window(vars: Vec<String>, window: ExponentWindow) -> Self {
        assert_eq!(vars.len(), window.len());
        NestedSeries { vars, window, terms: BTreeMap::new() }
    }

    /// A finite sum, exact everywhere; the floor is read off the terms.
    pub fn polynomial(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<i64>, C)>) -> Self {
        let mut s = Self::zero(vars);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s.window.floor = s.tight_floor();
        s
    }

    pub fn monomial(vars: Vec<String>, e: Vec<i64>, c: C) -> Self {
        Self::polynomial(vars, [(e, c)])
    }

    fn tight_floor(&self) -> Vec<i64> {
        let n = self.vars.len();
        let mut it = self.terms.keys().map(|e| depth(e));
        match it.next() {
            None => vec![0; n],
            Some(first) => it.fold(first, |acc, d| acc.iter().zip(&d).map(|(a, b)| *a.min(b)).collect()),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn window(&self) -> &ExponentWindow {
        &self.window
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c` at exponent `e`; the caller keeps `e` inside the window.
    pub fn add_term(&mut self, e: Vec<i64>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                x.add_assign(&c);
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Stored coefficient, without window checks.
    pub fn get(&self, e: &[i64]) -> Option<&C> {
        self.terms.get(e)
    }

    /// Exact coefficient query: `Ok(None)` is a known zero, `Err` means the
    /// coefficient is not determined by the window.
    pub fn coefficient(&self, e: &[i64]) -> Result<Option<&C>> {
        let d = depth(e);
        if self.window.below_floor(&d) {
            return Ok(None);
        }
        if !self.window.within_ceiling(&d) {
            return Err(Error::OutsideWindow(e.to_vec()));
        }
        Ok(self.terms.get(e))
    }

    fn check_vars(&self, other_vars: &[String]) -> Result<()> {
        if self.vars != other_vars {
            return Err(Error::IncompatibleVariables(self.vars.clone(), other_vars.to_vec()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(&other.vars)?;
        let mut out = NestedSeries { vars: self.vars.clone(), window: self.window.sum(&other.window), terms: BTreeMap::new() };
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            if out.window.within_ceiling(&depth(e)) {
                out.add_term(e.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        NestedSeries {
            vars: self.vars.clone(),
            window: self.window.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Product under a bilinear map of coefficients. Only pairs landing under
    /// the product ceiling are formed.
    pub fn mul_with<D, E, F>(&self, other: &NestedSeries<D>, f: F) -> Result<NestedSeries<E>>
    where
        D: Coefficient,
        E: Coefficient,
        F: Fn(&C, &D) -> E,
    {
        self.try_mul_with(other, |a, b| Ok(f(a, b)))
    }

    /// Fallible variant of [`mul_with`](Self::mul_with).
    pub fn try_mul_with<D, E, F>(&self, other: &NestedSeries<D>, f: F) -> Result<NestedSeries<E>>
    where
        D: Coefficient,
        E: Coefficient,
        F: Fn(&C, &D) -> Result<E>,
    {
        self.check_vars(&other.vars)?;
        let window = self.window.product(&other.window);
        let mut out = NestedSeries { vars: self.vars.clone(), window, terms: BTreeMap::new() };
        let rhs: Vec<(Vec<i64>, Vec<i64>, &D)> = other.terms.iter().map(|(e, c)| (e.clone(), depth(e), c)).collect();
        for (ea, ca) in &self.terms {
            let da = depth(ea);
            for (eb, db, cb) in &rhs {
                let d: Vec<i64> = da.iter().zip(db).map(|(x, y)| x + y).collect();
                if !out.window.within_ceiling(&d) {
                    continue;
                }
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, f(ca, cb)?);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> NestedSeries<D> {
        let mut out = NestedSeries { vars: self.vars.clone(), window: self.window.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Fallible variant of [`map`](Self::map).
    pub fn try_map<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<NestedSeries<D>> {
        let mut out = NestedSeries { vars: self.vars.clone(), window: self.window.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Lowers the ceiling and drops terms above it.
    pub fn truncate(&self, ceiling: &[Option<i64>]) -> Self {
        let window = self.window.capped(ceiling);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| window.within_ceiling(&depth(e)))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        NestedSeries { vars: self.vars.clone(), window, terms }
    }

    /// Coefficients inside a raw exponent box; errors if any is unknown.
    pub fn restrict(&self, bx: &ExponentBox) -> Result<BTreeMap<Vec<i64>, C>> {
        if !self.window.covers(bx) {
            return Err(Error::WindowTooSmall(format!("box {:?}..{:?} needs depth ceiling {:?}, have {:?}", bx.lo, bx.hi, bx.required_ceiling(), self.window.ceiling)));
        }
        Ok(self.terms.iter().filter(|(e, _)| bx.contains(e)).map(|(e, c)| (e.clone(), c.clone())).collect())
    }

    /// Re-expresses the series in a larger variable list containing the
    /// current variables in the same relative order.
    pub fn embed(&self, new_vars: &[String]) -> Result<Self> {
        let mut pos = Vec::with_capacity(self.vars.len());
        let mut start = 0;
        for v in &self.vars {
            match new_vars[start..].iter().position(|w| w == v) {
                Some(p) => {
                    pos.push(start + p);
                    start += p + 1;
                }
                None => return Err(Error::IncompatibleVariables(self.vars.clone(), new_vars.to_vec())),
            }
        }
        let m = new_vars.len();
        // A new coordinate repeats the depth of the preceding old one on every
        // stored term; any exponent moving it off that value has coefficient
        // zero, so it needs no ceiling.
        let mut floor = vec![0; m];
        let mut ceiling: Vec<Option<i64>> = vec![None; m];
        let mut prev = None;
        for j in 0..m {
            match pos.iter().position(|&p| p == j) {
                Some(k) => {
                    prev = Some(k);
                    floor[j] = self.window.floor[k];
                    ceiling[j] = self.window.ceiling[k];
                }
                None => {
                    if let Some(k) = prev {
                        floor[j] = self.window.floor[k];
                    }
                }
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; m];
                for (k, &p) in pos.iter().enumerate() {
                    ne[p] = e[k];
                }
                (ne, c.clone())
            })
            .collect();
        Ok(NestedSeries { vars: new_vars.to_vec(), window: ExponentWindow { floor, ceiling }, terms })
    }

    /// Coefficientwise equality on the common exact region of both windows;
    /// returns the first differing exponent.
    pub fn first_difference(&self, other: &Self) -> Result<Option<Vec<i64>>> {
        self.check_vars(&other.vars)?;
        let common = self.window.sum(&other.window);
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for e in keys {
            if !common.within_ceiling(&depth(e)) {
                continue;
            }
            if self.terms.get(e) != other.terms.get(e) {
                return Ok(Some(e.clone()));
            }
        }
        Ok(None)
    }
}

impl NestedSeries<QRational> {
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &QRational) -> Self {
        self.map(|x| x * c)
    }

    pub fn one(vars: Vec<String>) -> Self {
        let n = vars.len();
        Self::monomial(vars, vec![0; n], QRational::one())
    }
}

/// Expands `num / den` in the global region, exact up to the depth ceiling
/// `target`. Both inputs must be polynomials (exact everywhere).
///
/// The denominator's leading term is its unique depth-minimal term; every
/// other term must have componentwise larger depth, otherwise the factor has
/// no expansion in the declared region.
pub fn expand_rational(num: &NestedSeries<QRational>, den: &NestedSeries<QRational>, target: &[i64]) -> Result<NestedSeries<QRational>> {
    if num.vars != den.vars {
        return Err(Error::IncompatibleVariables(num.vars.clone(), den.vars.clone()));
    }
    if !num.window.is_exact() || !den.window.is_exact() {
        return Err(Error::Invalid("expand_rational expects polynomial inputs".into()));
    }
    if den.is_empty() {
        return Err(Error::NonExpandable("zero denominator".into()));
    }
    let vars = num.vars.clone();
    let (lead_e, lead_c) = den
        .terms
        .iter()
        .min_by(|a, b| depth(a.0).cmp(&depth(b.0)))
        .map(|(e, c)| (e.clone(), c.clone()))
        .unwrap();
    let lead_d = depth(&lead_e);
    for e in den.terms.keys() {
        if *e == lead_e {
            continue;
        }
        let d = depth(e);
        if d.iter().zip(&lead_d).any(|(x, l)| x < l) {
            return Err(Error::NonExpandable(format!("denominator terms at {lead_e:?} and {e:?} are not ordered by the region")));
        }
    }
    let lead_inv = lead_c.inv()?;
    let neg_lead: Vec<i64> = lead_e.iter().map(|x| -x).collect();
    // den = lead·(1 − r), r built from the remaining terms
    let r = NestedSeries::polynomial(
        vars.clone(),
        den.terms.iter().filter(|(e, _)| **e != lead_e).map(|(e, c)| {
            let shifted: Vec<i64> = e.iter().zip(&neg_lead).map(|(a, b)| a + b).collect();
            (shifted, -(c * &lead_inv))
        }),
    );
    // 1/(1 − r) to relative ceiling target − floor(num) − depth(lead⁻¹)
    let inv_floor = depth(&neg_lead);
    let rel: Vec<Option<i64>> = target
        .iter()
        .zip(&num.window.floor)
        .zip(&inv_floor)
        .map(|((t, f), l)| Some(t - f - l))
        .collect();
    let mut geo = NestedSeries::one(vars.clone()).truncate(&rel);
    let mut power = geo.clone();
    while !power.is_empty() {
        power = power.mul(&r)?.truncate(&rel);
        geo = geo.add(&power)?;
    }
    geo.window = ExponentWindow { floor: vec![0; vars.len()], ceiling: rel };
    let lead_series = NestedSeries::monomial(vars, neg_lead, lead_inv);
    let inv = lead_series.mul(&geo)?;
    let out = num.mul(&inv)?;
    let cap: Vec<Option<i64>> = target.iter().map(|t| Some(*t)).collect();
    Ok(out.truncate(&cap))
}

#[derive(Serialize, Deserialize)]
struct TermRepr<C> {
    exp: Vec<i64>,
    coef: C,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr<C> {
    vars: Vec<String>,
    window: ExponentWindow,
    terms: Vec<TermRepr<C>>,
}

impl<C: Coefficient + Serialize> Serialize for NestedSeries<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Borrowed<'a, C> {
            vars: &'a [String],
            window: &'a ExponentWindow,
            terms: Vec<TermRepr<&'a C>>,
        }
        Borrowed {
            vars: &self.vars,
            window: &self.window,
            terms: self.terms.iter().map(|(e, c)| TermRepr { exp: e.clone(), coef: c }).collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coefficient + DeserializeOwned> Deserialize<'de> for NestedSeries<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SeriesRepr::<C>::deserialize(d)?;
        if r.window.len() != r.vars.len() || r.window.ceiling.len() != r.vars.len() {
            return Err(serde::de::Error::custom("window length does not match variables"));
        }
        let mut s = NestedSeries::with_window(r.vars, r.window);
        for t in r.terms {
            s.add_term(t.exp, t.coef);
        }
        Ok(s)
    }
}

pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QRational {
        s.parse().unwrap()
    }

    #[test]
    fn depth_roundtrip() {
        let e = vec![-3, 1, 2];
        assert_eq!(depth(&e), vec![3, 2, 0]);
        assert_eq!(exponent_from_depth(&depth(&e)), e);
    }

    #[test]
    fn monomial_product() {
        let v = var_names("t", 2);
        let a = NestedSeries::monomial(v.clone(), vec![-1, 0], QRational::one());
        let b = NestedSeries::monomial(v.clone(), vec![0, -1], QRational::one());
        let c = a.mul(&b).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.get(&[-1, -1]).unwrap().is_one());
        let z = NestedSeries::zero(v);
        assert!(a.mul(&z).unwrap().is_empty());
    }

    #[test]
    fn truncated_product_cancels() {
        // (t⁻¹ + t⁻² + t⁻³) known to depth 3, times (1 − t⁻¹)
        let v = var_names("t", 1);
        let mut a = NestedSeries::with_window(v.clone(), ExponentWindow::new(vec![1], vec![3]));
        for k in 1..=3 {
            a.add_term(vec![-k], QRational::one());
        }
        let b = NestedSeries::polynomial(v, [(vec![0], QRational::one()), (vec![-1], QRational::from_int(-1))]);
        let c = a.mul(&b).unwrap();
        assert_eq!(c.window().ceiling, vec![Some(3)]);
        assert_eq!(c.len(), 1);
        assert!(c.coefficient(&[-1]).unwrap().unwrap().is_one());
        assert!(c.coefficient(&[-2]).unwrap().is_none());
        assert!(c.coefficient(&[-4]).is_err());
    }

    #[test]
    fn geometric_expansion() {
        let v = var_names("t", 2);
        let num = NestedSeries::monomial(v.clone(), vec![1, 0], q("q - q^-1"));
        let den = NestedSeries::polynomial(v.clone(), [(vec![1, 0], q("q")), (vec![0, 1], q("-q^-1"))]);
        let s = expand_rational(&num, &den, &[3, 0]).unwrap();
        for k in 0..=3 {
            let c = s.coefficient(&[-k, k]).unwrap().unwrap();
            assert_eq!(*c, &q("1 - q^-2") * &QRational::q_pow(-2 * k));
        }
        assert_eq!(s.len(), 4);
        // multiply back
        let back = s.mul(&den).unwrap();
        assert_eq!(back.first_difference(&num).unwrap(), None);
    }

    #[test]
    fn ratio_expansion() {
        let v = var_names("t", 2);
        let num = NestedSeries::one(v.clone());
        let den = NestedSeries::polynomial(v, [(vec![0, 0], QRational::from_int(-1)), (vec![1, -1], QRational::one())]);
        let s = expand_rational(&num, &den, &[4, 0]).unwrap();
        assert_eq!(s.len(), 4);
        for k in 1..=4 {
            assert!(s.coefficient(&[-k, k]).unwrap().unwrap().is_one());
        }
        assert!(s.coefficient(&[0, 0]).unwrap().is_none());
    }

    #[test]
    fn non_expandable() {
        let v = var_names("t", 2);
        let num = NestedSeries::one(v.clone());
        let den = NestedSeries::polynomial(v, [(vec![-1, 1], QRational::one()), (vec![0, -1], QRational::one())]);
        assert!(matches!(expand_rational(&num, &den, &[2, 2]), Err(Error::NonExpandable(_))));
    }

    #[test]
    fn embed_keeps_coefficients() {
        let s = NestedSeries::monomial(vec!["t2".into()], vec![-2], QRational::one());
        let e = s.embed(&var_names("t", 2)).unwrap();
        assert!(e.coefficient(&[0, -2]).unwrap().unwrap().is_one());
        assert!(s.embed(&["x".to_string()]).is_err());
    }

    #[test]
    fn json_shape() {
        let v = var_names("t", 1);
        let s = NestedSeries::monomial(v, vec![-1], q("q^2 - 1"));
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(j["terms"][0]["coef"], "(q^2 - 1)/1");
        assert_eq!(j["terms"][0]["exp"][0], -1);
        let back: NestedSeries<QRational> = serde_json::from_value(j).unwrap();
        assert_eq!(back, s);
    }
}
