//! The current Borel subalgebra `U_F` of quantum affine sl₂ (central charge 1):
//! words in the modes `f[n]` and `ψ⁺[n]`, their canonical ordering, the
//! projection `P` and the Drinfeld coproduct on f-words.
//!
//! Canonical words list f-modes ascending, then ψ-modes ascending. Ascending
//! f-modes put the nonpositive ones first, so canonical words are already in
//! the separated shape `U_f⁻ · U_F⁺`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeffs::{Coefficient, QRational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    F(i64),
    /// `ψ⁺[n]`, `n ≥ 0`; `ψ⁺[0]` is the Cartan element.
    Psi(i64),
}

impl Gen {
    pub fn mode(self) -> i64 {
        match self {
            Gen::F(n) | Gen::Psi(n) => n,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::F(n) => write!(f, "f[{n}]"),
            Gen::Psi(n) => write!(f, "psi[{n}]"),
        }
    }
}

pub type Word = Vec<Gen>;

pub fn word_to_string(w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(Gen::to_string).collect::<Vec<_>>().join(" ")
}

/// Parses `f[-1] f[2] psi[0]`; `1` or the empty string is the empty word.
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() || s == "1" {
        return Ok(Vec::new());
    }
    s.split_whitespace()
        .map(|tok| {
            let (name, rest) = tok.split_once('[').ok_or_else(|| Error::Parse(format!("bad generator {tok:?}")))?;
            let n: i64 = rest
                .strip_suffix(']')
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad mode in {tok:?}")))?;
            match name {
                "f" => Ok(Gen::F(n)),
                "psi" if n >= 0 => Ok(Gen::Psi(n)),
                "psi" => Err(Error::Parse(format!("negative psi mode in {tok:?}"))),
                _ => Err(Error::Parse(format!("unknown generator {tok:?}"))),
            }
        })
        .collect()
}

pub fn is_canonical(w: &[Gen]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

/// Sum of modes.
pub fn principal_degree(w: &[Gen]) -> i64 {
    w.iter().map(|g| g.mode()).sum()
}

/// A finite combination of words with coefficients in ℚ(q).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, QRational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, QRational::one())
    }

    pub fn term(w: Word, c: QRational) -> Self {
        let mut x = Self::zero();
        x.add_term(w, c);
        x
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::word(parse_word(s)?))
    }

    pub fn add_term(&mut self, w: Word, c: QRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &QRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[Gen]) -> QRational {
        self.terms.get(w).cloned().unwrap_or_else(QRational::zero)
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QRational::from_int(-1)))
    }

    /// Free (concatenation) product, without reordering.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// Algebra product in canonical form.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Engine::global().normal_form(&self.concat(other))
    }

    /// Substitutes `q = 1` in every coefficient.
    pub fn at_q1(&self) -> Result<BTreeMap<Word, num_rational::BigRational>> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            let v = c.at_one()?;
            if !num_traits::Zero::is_zero(&v) {
                out.insert(w.clone(), v);
            }
        }
        Ok(out)
    }

    /// True when every coefficient is a Laurent polynomial in `q`.
    pub fn is_laurent(&self) -> bool {
        self.terms.values().all(QRational::is_laurent)
    }
}

impl Coefficient for AlgebraElement {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
    fn neg(&self) -> Self {
        self.scale(&QRational::from_int(-1))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("[{c}] {}", word_to_string(w))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: String,
    coef: QRational,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self.terms.iter().map(|(w, c)| TermJson { word: word_to_string(w), coef: c.clone() }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermJson>::deserialize(d)?;
        let mut out = AlgebraElement::zero();
        for t in v {
            let w = parse_word(&t.word).map_err(serde::de::Error::custom)?;
            out.add_term(w, t.coef);
        }
        Ok(out)
    }
}

impl FromStr for AlgebraElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AlgebraElement::parse(s)
    }
}

/// Coefficients `c_j` with `f[a] f[b] = Σ_j c_j f[b+j] f[a−j]` for `a > b`,
/// depending only on the gap `a − b`; `j` runs over `0..=gap/2`.
pub fn ff_coefficients(gap: i64) -> Vec<QRational> {
    assert!(gap >= 1);
    let qm2 = QRational::q_pow(-2);
    if gap == 1 {
        return vec![qm2];
    }
    if gap == 2 {
        return vec![qm2.clone(), &qm2 - &QRational::one()];
    }
    // f[a]f[b] = q⁻² f[b]f[a] − f[b+1]f[a−1] + q⁻² f[a−1]f[b+1]
    let inner = ff_coefficients(gap - 2);
    let mut out = vec![qm2.clone(), QRational::from_int(-1)];
    out.resize(inner.len() + 1, QRational::zero());
    for (j, c) in inner.iter().enumerate() {
        out[j + 1] = &out[j + 1] + &(&qm2 * c);
    }
    out
}

/// `f[a] f[b]` in canonical form.
pub fn straighten_ff(a: i64, b: i64) -> AlgebraElement {
    if a <= b {
        return AlgebraElement::word(vec![Gen::F(a), Gen::F(b)]);
    }
    let mut out = AlgebraElement::zero();
    for (j, c) in ff_coefficients(a - b).into_iter().enumerate() {
        let j = j as i64;
        out.add_term(vec![Gen::F(b + j), Gen::F(a - j)], c);
    }
    out
}

/// Coefficient of `f[n+j] ψ⁺[m−j]` in `ψ⁺[m] f[n]`.
pub fn psif_coefficient(j: i64) -> QRational {
    if j == 0 {
        QRational::q_pow(-2)
    } else {
        // (q⁻² − q²) q⁻²ʲ
        &(&QRational::q_pow(-2) - &QRational::q_pow(2)) * &QRational::q_pow(-2 * j)
    }
}

/// `ψ⁺[m] f[n] = Σ_{j=0..m} g_j f[n+j] ψ⁺[m−j]`.
pub fn straighten_psif(m: i64, n: i64) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for j in 0..=m {
        out.add_term(vec![Gen::F(n + j), Gen::Psi(m - j)], psif_coefficient(j));
    }
    out
}

type Expansion = Arc<Vec<(Word, QRational)>>;

/// Straightening engine with a shared cache of `generator · canonical word`
/// products.
pub struct Engine {
    cache: RwLock<HashMap<(Gen, Word), Expansion>>,
    step_cap: usize,
}

/// A cached straightening: `(letter, canonical word)` and the expansion of
/// their product.
pub type CacheEntry = ((Gen, Word), Vec<(Word, QRational)>);

pub const DEFAULT_STEP_CAP: usize = 1_000_000;

/// Bumped whenever the rewriting rules change; persisted caches carry it.
pub const ENGINE_REVISION: u32 = 1;

impl Engine {
    pub fn new(step_cap: usize) -> Self {
        Engine { cache: RwLock::new(HashMap::new()), step_cap }
    }

    pub fn global() -> &'static Engine {
        static ENGINE: OnceLock<Engine> = OnceLock::new();
        ENGINE.get_or_init(|| Engine::new(DEFAULT_STEP_CAP))
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().unwrap().len()
    }

    /// Seeds the cache, e.g. from disk.
    pub fn preload(&self, entries: impl IntoIterator<Item = CacheEntry>) {
        let mut c = self.cache.write().unwrap();
        for (k, v) in entries {
            c.entry(k).or_insert_with(|| Arc::new(v));
        }
    }

    /// Snapshot of the cache.
    pub fn cache_entries(&self) -> Vec<CacheEntry> {
        let c = self.cache.read().unwrap();
        let mut v: Vec<_> = c.iter().map(|(k, e)| (k.clone(), e.as_ref().clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn normal_form(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (w, c) in x.terms() {
            let nf = self.normal_form_word(w)?;
            for (v, d) in nf.terms() {
                out.add_term(v.clone(), c * d);
            }
        }
        Ok(out)
    }

    /// Canonical form of a single word, built right to left.
    pub fn normal_form_word(&self, w: &[Gen]) -> Result<AlgebraElement> {
        if let Some(Gen::Psi(n)) = w.iter().find(|g| matches!(g, Gen::Psi(n) if *n < 0)) {
            return Err(Error::Invalid(format!("psi mode {n} < 0")));
        }
        if is_canonical(w) {
            return Ok(AlgebraElement::word(w.to_vec()));
        }
        let mut steps = 0usize;
        let mut acc: BTreeMap<Word, QRational> = BTreeMap::new();
        acc.insert(Vec::new(), QRational::one());
        for &g in w.iter().rev() {
            let mut next: BTreeMap<Word, QRational> = BTreeMap::new();
            for (v, c) in &acc {
                for (u, d) in self.insert(g, v, &mut steps, w)?.iter() {
                    add_into(&mut next, u.clone(), c * d);
                }
            }
            acc = next;
        }
        Ok(AlgebraElement { terms: acc })
    }

    /// `g · w` for canonical `w`, as canonical words.
    fn insert(&self, g: Gen, w: &[Gen], steps: &mut usize, origin: &[Gen]) -> Result<Expansion> {
        let key = (g, w.to_vec());
        if let Some(e) = self.cache.read().unwrap().get(&key) {
            return Ok(e.clone());
        }
        *steps += 1;
        if *steps > self.step_cap {
            return Err(Error::StepCap { cap: self.step_cap, word: word_to_string(origin) });
        }
        let mut out: BTreeMap<Word, QRational> = BTreeMap::new();
        match (g, w.first()) {
            (_, None) => {
                out.insert(vec![g], QRational::one());
            }
            (Gen::F(a), Some(&Gen::F(b))) if a > b => {
                for (j, c) in ff_coefficients(a - b).into_iter().enumerate() {
                    let j = j as i64;
                    let tail = self.insert(Gen::F(a - j), &w[1..], steps, origin)?;
                    for (u, d) in tail.iter() {
                        let head = self.insert(Gen::F(b + j), u, steps, origin)?;
                        for (v, e) in head.iter() {
                            add_into(&mut out, v.clone(), &(&c * d) * e);
                        }
                    }
                }
            }
            (Gen::Psi(m), Some(&Gen::F(n))) => {
                for j in 0..=m {
                    let c = psif_coefficient(j);
                    let tail = self.insert(Gen::Psi(m - j), &w[1..], steps, origin)?;
                    for (u, d) in tail.iter() {
                        let head = self.insert(Gen::F(n + j), u, steps, origin)?;
                        for (v, e) in head.iter() {
                            add_into(&mut out, v.clone(), &(&c * d) * e);
                        }
                    }
                }
            }
            (Gen::Psi(m), Some(&Gen::Psi(k))) if m > k => {
                let tail = self.insert(g, &w[1..], steps, origin)?;
                for (u, d) in tail.iter() {
                    let mut v = vec![Gen::Psi(k)];
                    v.extend_from_slice(u);
                    add_into(&mut out, v, d.clone());
                }
            }
            _ => {
                // already canonical: f before ψ, or ascending
                let mut v = vec![g];
                v.extend_from_slice(w);
                out.insert(v, QRational::one());
            }
        }
        let e: Expansion = Arc::new(out.into_iter().collect());
        self.cache.write().unwrap().insert(key, e.clone());
        Ok(e)
    }
}

fn add_into(map: &mut BTreeMap<Word, QRational>, w: Word, c: QRational) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&w) {
        Some(x) => {
            *x = &*x + &c;
            if x.is_zero() {
                map.remove(&w);
            }
        }
        None => {
            map.insert(w, c);
        }
    }
}

/// Canonical form; every word has the separated shape.
pub fn separate(x: &AlgebraElement) -> Result<AlgebraElement> {
    Engine::global().normal_form(x)
}

fn has_nonpositive_f(w: &[Gen]) -> bool {
    w.iter().any(|g| matches!(g, Gen::F(n) if *n <= 0))
}

/// `P(f₋ f₊) = ε(f₋) f₊`.
pub fn project(x: &AlgebraElement) -> Result<AlgebraElement> {
    let s = separate(x)?;
    Ok(AlgebraElement { terms: s.terms.into_iter().filter(|(w, _)| !has_nonpositive_f(w)).collect() })
}

/// `P(f[a₁] ⋯ f[a_n])`, returning zero early when a prefix sum
/// `a₁ + ⋯ + a_k` is below `k`.
pub fn project_f_word(modes: &[i64]) -> Result<AlgebraElement> {
    let mut s = 0;
    for (k, a) in modes.iter().enumerate() {
        s += a;
        if s < k as i64 + 1 {
            return Ok(AlgebraElement::zero());
        }
    }
    project(&AlgebraElement::word(modes.iter().map(|&a| Gen::F(a)).collect()))
}

/// The complementary projection `P⁻(f₋ f₊) = f₋ ε(f₊)`.
pub fn project_minus(x: &AlgebraElement) -> Result<AlgebraElement> {
    let s = separate(x)?;
    let mut out = AlgebraElement::zero();
    for (w, c) in s.terms() {
        let mut kept = Vec::new();
        let mut eps = true;
        for g in w {
            match g {
                Gen::F(n) if *n <= 0 => kept.push(*g),
                Gen::Psi(0) => {}
                _ => {
                    eps = false;
                    break;
                }
            }
        }
        if eps {
            out.add_term(kept, c.clone());
        }
    }
    Ok(out)
}

pub fn counit_word(w: &[Gen]) -> bool {
    w.iter().all(|g| *g == Gen::Psi(0))
}

pub fn counit(x: &AlgebraElement) -> QRational {
    let mut out = QRational::zero();
    for (w, c) in x.terms() {
        if counit_word(w) {
            out = &out + c;
        }
    }
    out
}

/// An element of `U_F ⊗ U_F`, words concatenated leg by leg.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoLeg {
    pub terms: BTreeMap<(Word, Word), QRational>,
}

impl TwoLeg {
    pub fn one() -> Self {
        let mut t = TwoLeg::default();
        t.terms.insert((vec![], vec![]), QRational::one());
        t
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TwoLeg::default();
        for ((a1, a2), x) in &self.terms {
            for ((b1, b2), y) in &other.terms {
                let mut l = a1.clone();
                l.extend_from_slice(b1);
                let mut r = a2.clone();
                r.extend_from_slice(b2);
                let c = x * y;
                let e = out.terms.entry((l, r)).or_insert_with(QRational::zero);
                *e = &*e + &c;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}

/// `Δ(f[n]) = 1⊗f[n] + Σ_{k=0..kmax} f[n−k]⊗ψ⁺[k]`, extended multiplicatively
/// to f-words. The truncation `kmax` must come from the caller's window.
pub fn coproduct_drinfeld(w: &[Gen], kmax: Option<usize>) -> Result<TwoLeg> {
    let mut out = TwoLeg::one();
    for g in w {
        let Gen::F(n) = *g else {
            return Err(Error::Invalid("the Drinfeld coproduct is implemented on f-words only".into()));
        };
        let kmax = kmax.ok_or_else(|| Error::WindowTooSmall("no bound on the ψ⁺ mode in the coproduct".into()))?;
        let mut leg = TwoLeg::default();
        leg.terms.insert((vec![], vec![Gen::F(n)]), QRational::one());
        for k in 0..=kmax as i64 {
            leg.terms.insert((vec![Gen::F(n - k)], vec![Gen::Psi(k)]), QRational::one());
        }
        out = out.mul(&leg);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> AlgebraElement {
        AlgebraElement::parse(s).unwrap()
    }

    fn q(s: &str) -> QRational {
        s.parse().unwrap()
    }

    #[test]
    fn ff_examples() {
        assert_eq!(straighten_ff(1, 0), AlgebraElement::term(parse_word("f[0] f[1]").unwrap(), q("q^-2")));
        let x = straighten_ff(2, 0);
        assert_eq!(x.coeff(&parse_word("f[0] f[2]").unwrap()), q("q^-2"));
        assert_eq!(x.coeff(&parse_word("f[1] f[1]").unwrap()), q("q^-2 - 1"));
        assert_eq!(straighten_ff(0, 1), e("f[0] f[1]"));
    }

    #[test]
    fn psif_examples() {
        assert_eq!(straighten_psif(0, 5), AlgebraElement::term(parse_word("f[5] psi[0]").unwrap(), q("q^-2")));
        let x = straighten_psif(1, 0);
        assert_eq!(x.coeff(&parse_word("f[1] psi[0]").unwrap()), q("q^-4 - 1"));
        let y = straighten_psif(2, -1);
        assert_eq!(y.coeff(&parse_word("f[-1] psi[2]").unwrap()), q("q^-2"));
        assert_eq!(y.coeff(&parse_word("f[0] psi[1]").unwrap()), q("q^-4 - 1"));
        assert_eq!(y.coeff(&parse_word("f[1] psi[0]").unwrap()), q("q^-6 - q^-2"));
    }

    #[test]
    fn separate_examples() {
        let x = separate(&e("f[1] f[0] f[1]")).unwrap();
        assert_eq!(x, AlgebraElement::term(parse_word("f[0] f[1] f[1]").unwrap(), q("q^-2")));
        let y = separate(&e("psi[1] f[1]")).unwrap();
        assert_eq!(y, straighten_psif(1, 1));
        assert_eq!(separate(&e("f[-2] f[3] psi[0]")).unwrap(), e("f[-2] f[3] psi[0]"));
    }

    #[test]
    fn projection_examples() {
        assert!(project(&e("f[1] f[0]")).unwrap().is_zero());
        assert_eq!(project(&e("f[2] f[0]")).unwrap(), AlgebraElement::term(parse_word("f[1] f[1]").unwrap(), q("q^-2 - 1")));
        assert_eq!(project(&e("f[1] f[1]")).unwrap(), e("f[1] f[1]"));
        let x = project(&e("f[3] f[-1]")).unwrap();
        assert_eq!(x, AlgebraElement::term(parse_word("f[1] f[1]").unwrap(), q("q^-4 - q^-2")));
    }

    #[test]
    fn counit_examples() {
        assert!(counit(&AlgebraElement::one()).is_one());
        assert!(counit(&e("f[3]")).is_zero());
        assert!(counit(&e("psi[0] psi[0]")).is_one());
    }

    #[test]
    fn degrees() {
        assert_eq!(principal_degree(&parse_word("f[2] f[-1]").unwrap()), 1);
        assert_eq!(principal_degree(&parse_word("psi[3]").unwrap()), 3);
        assert_eq!(principal_degree(&[]), 0);
    }

    #[test]
    fn coproduct_examples() {
        let d = coproduct_drinfeld(&parse_word("f[1]").unwrap(), Some(2)).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.terms.contains_key(&(parse_word("f[-1]").unwrap(), parse_word("psi[2]").unwrap())));
        assert_eq!(coproduct_drinfeld(&[], None).unwrap(), TwoLeg::one());
        assert_eq!(coproduct_drinfeld(&parse_word("f[1] f[1]").unwrap(), Some(1)).unwrap().len(), 9);
        assert!(coproduct_drinfeld(&parse_word("f[1]").unwrap(), None).is_err());
    }

    #[test]
    fn step_cap_reports_word() {
        let eng = Engine::new(3);
        let err = eng.normal_form_word(&parse_word("f[6] f[-6] f[3]").unwrap()).unwrap_err();
        assert!(matches!(err, Error::StepCap { .. }));
    }

    #[test]
    fn word_syntax_roundtrip() {
        let w = parse_word("f[-1] f[2] psi[0]").unwrap();
        assert_eq!(word_to_string(&w), "f[-1] f[2] psi[0]");
        assert!(parse_word("psi[-1]").is_err());
        assert!(parse_word("g[1]").is_err());
    }
}
