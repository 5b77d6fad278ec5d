//! Evaluation modules of quantum affine sl₂ and weight vectors.
//!
//! Modules are given by explicit mode tables: every current mode acts as
//! `zⁿ` times a matrix, `z` being the evaluation parameter. Basis vector
//! `v₀` is the highest one; `f` lowers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{project, project_f_word, AlgebraElement, Gen, Word};
use crate::classical::depth_box;
use crate::coeffs::{depth, expand_rational, exponent_from_depth, Coefficient, ExponentWindow, NestedSeries, QRational};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::weight::{prefactor_a, universal_weight, OrderedMultiset};

fn qp(e: i64) -> QRational {
    QRational::q_pow(e)
}

fn int(c: i64) -> QRational {
    QRational::from_int(c)
}

/// `[2] = q + q⁻¹`.
fn qint2() -> QRational {
    &qp(1) + &qp(-1)
}

/// A vector in a module, in the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModVec(pub Vec<QRational>);

impl ModVec {
    pub fn zero(d: usize) -> Self {
        ModVec(vec![QRational::zero(); d])
    }

    pub fn basis(d: usize, i: usize) -> Self {
        let mut v = Self::zero(d);
        v.0[i] = QRational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, c: &QRational) -> Self {
        ModVec(self.0.iter().map(|x| x * c).collect())
    }

    /// Tensor product; index `i·d₂ + j` holds `v_i ⊗ v_j`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.0 {
            for b in &other.0 {
                out.push(a * b);
            }
        }
        ModVec(out)
    }

    /// Componentwise product.
    pub fn hadamard(&self, other: &Self) -> Self {
        ModVec(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }
}

impl Coefficient for ModVec {
    fn is_zero(&self) -> bool {
        self.0.iter().all(QRational::is_zero)
    }
    fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a = &*a + b;
        }
    }
    fn neg(&self) -> Self {
        ModVec(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("({c})v{i}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Serialize for ModVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

/// Square matrix, row-major; column `j` is the image of `v_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    d: usize,
    m: Vec<QRational>,
}

impl Mat {
    pub fn zero(d: usize) -> Self {
        Mat { d, m: vec![QRational::zero(); d * d] }
    }

    pub fn identity(d: usize) -> Self {
        Self::diag(vec![QRational::one(); d])
    }

    pub fn diag(entries: Vec<QRational>) -> Self {
        let mut out = Self::zero(entries.len());
        for (i, c) in entries.into_iter().enumerate() {
            out.set(i, i, c);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &QRational {
        &self.m[i * self.d + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: QRational) {
        self.m[i * self.d + j] = c;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.d;
        let mut out = Self::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.m[i * d + j] = &out.m[i * d + j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &ModVec) -> ModVec {
        let d = self.d;
        ModVec(
            (0..d)
                .map(|i| {
                    let mut acc = QRational::zero();
                    for j in 0..d {
                        let a = self.get(i, j);
                        if !a.is_zero() && !v.0[j].is_zero() {
                            acc = &acc + &(a * &v.0[j]);
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    pub fn scale(&self, c: &QRational) -> Self {
        Mat { d: self.d, m: self.m.iter().map(|x| x * c).collect() }
    }
}

impl Coefficient for Mat {
    fn is_zero(&self) -> bool {
        self.m.iter().all(QRational::is_zero)
    }
    fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.m.iter_mut().zip(&other.m) {
            *a = &*a + b;
        }
    }
    fn neg(&self) -> Self {
        Mat { d: self.d, m: self.m.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            (0..self.d).map(|i| (0..self.d).map(|j| self.get(i, j).to_string()).collect::<Vec<_>>().join(", ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// `z^power · mat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Op {
    pub power: i64,
    pub mat: Mat,
}

impl Op {
    pub fn mul(&self, other: &Op) -> Op {
        Op { power: self.power + other.power, mat: self.mat.mul(&other.mat) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Spin {
    Trivial,
    Half,
    One,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Current {
    E,
    F,
    PsiPlus,
    PsiMinus,
}

impl fmt::Display for Current {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Current::E => "e",
            Current::F => "f",
            Current::PsiPlus => "psi+",
            Current::PsiMinus => "psi-",
        };
        write!(f, "{s}")
    }
}

/// Evaluation module with parameter `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalModule {
    spin: Spin,
    flips: Vec<(Current, i64)>,
}

impl EvalModule {
    pub fn new(spin: Spin) -> Self {
        EvalModule { spin, flips: Vec::new() }
    }

    pub fn spin_half() -> Self {
        Self::new(Spin::Half)
    }

    pub fn spin_one() -> Self {
        Self::new(Spin::One)
    }

    pub fn trivial() -> Self {
        Self::new(Spin::Trivial)
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    /// Same table with the sign of one mode flipped. Used as a broken table.
    pub fn with_sign_flip(mut self, cur: Current, mode: i64) -> Self {
        self.flips.push((cur, mode));
        self
    }

    pub fn dim(&self) -> usize {
        match self.spin {
            Spin::Trivial => 1,
            Spin::Half => 2,
            Spin::One => 3,
        }
    }

    /// Number of times `f` can act before every vector is killed.
    pub fn lowering_capacity(&self) -> usize {
        self.dim() - 1
    }

    pub fn action(&self, cur: Current, n: i64) -> Op {
        let d = self.dim();
        let mut m = Mat::zero(d);
        let one = QRational::one;
        match (self.spin, cur) {
            (Spin::Trivial, Current::PsiPlus | Current::PsiMinus) if n == 0 => m.set(0, 0, one()),
            (Spin::Trivial, _) => {}
            (Spin::Half, Current::F) => m.set(1, 0, one()),
            (Spin::Half, Current::E) => m.set(0, 1, one()),
            (Spin::Half, Current::PsiPlus | Current::PsiMinus) => {
                let plus = cur == Current::PsiPlus;
                if n == 0 {
                    let s = if plus { 1 } else { -1 };
                    m = Mat::diag(vec![qp(s), qp(-s)]);
                } else if (n > 0) == plus {
                    let c = &qp(1) - &qp(-1);
                    let c = if plus { c } else { -&c };
                    m = Mat::diag(vec![c.clone(), -&c]);
                }
            }
            (Spin::One, Current::F) => {
                m.set(1, 0, one());
                m.set(2, 1, &qint2() * &qp(-2 * n));
            }
            (Spin::One, Current::E) => {
                m.set(0, 1, qint2());
                m.set(1, 2, qp(-2 * n));
            }
            (Spin::One, Current::PsiPlus | Current::PsiMinus) => {
                let plus = cur == Current::PsiPlus;
                if n == 0 {
                    let s = if plus { 2 } else { -2 };
                    m = Mat::diag(vec![qp(s), one(), qp(-s)]);
                } else if (n > 0) == plus {
                    let c = &qp(2) - &qp(-2);
                    let entries = vec![c.clone(), &c * &(&qp(-2 * n) - &one()), -&(&c * &qp(-2 * n))];
                    m = Mat::diag(if plus { entries } else { entries.iter().map(|x| -x).collect() });
                }
            }
        }
        if self.flips.contains(&(cur, n)) {
            m = m.neg();
        }
        Op { power: n, mat: m }
    }

    pub fn gen(&self, g: Gen) -> Op {
        match g {
            Gen::F(n) => self.action(Current::F, n),
            Gen::Psi(k) => self.action(Current::PsiPlus, k),
        }
    }

    /// Acts by a word, rightmost letter first. Returns the power of `z`.
    pub fn act_word(&self, w: &[Gen], v: &ModVec) -> (i64, ModVec) {
        let mut power = 0;
        let mut out = v.clone();
        for g in w.iter().rev() {
            let op = self.gen(*g);
            power += op.power;
            out = op.mat.apply(&out);
        }
        (power, out)
    }

    /// Action of an algebra element, grouped by power of `z`.
    pub fn act(&self, x: &AlgebraElement, v: &ModVec) -> BTreeMap<i64, ModVec> {
        let mut out: BTreeMap<i64, ModVec> = BTreeMap::new();
        for (w, c) in x.terms() {
            let (p, u) = self.act_word(w, v);
            out.entry(p).or_insert_with(|| ModVec::zero(v.dim())).add_assign(&u.scale(c));
        }
        out.retain(|_, u| !u.is_zero());
        out
    }

    /// Operator of a word as a sum over powers of `z`.
    pub fn word_operator(&self, w: &[Gen]) -> Op {
        let mut op = Op { power: 0, mat: Mat::identity(self.dim()) };
        for g in w {
            op = op.mul(&self.gen(*g));
        }
        op
    }

    /// The ratio `κ_j` with `f[n] v_j = (f[0] v_j)·(κ_j z)ⁿ`, read off the
    /// table and checked on `|n| ≤ 3`.
    pub fn lowering_ratios(&self) -> Result<Vec<QRational>> {
        let f0 = self.action(Current::F, 0).mat;
        let f1 = self.action(Current::F, 1).mat;
        let mut out = Vec::new();
        for j in 0..self.lowering_capacity() {
            let k = f1.get(j + 1, j).checked_div(f0.get(j + 1, j))?;
            for n in -3..=3 {
                let fn_ = self.action(Current::F, n).mat;
                if *fn_.get(j + 1, j) != f0.get(j + 1, j) * &k.pow(n)? {
                    return Err(Error::Invalid(format!("f[{n}] on v{j} is not geometric in the mode")));
                }
            }
            out.push(k);
        }
        Ok(out)
    }
}

/// Integer interval of modes for relation checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModeWindow {
    pub lo: i64,
    pub hi: i64,
}

impl ModeWindow {
    pub fn symmetric(r: i64) -> Self {
        ModeWindow { lo: -r, hi: r }
    }

    pub fn size(&self) -> usize {
        (self.hi - self.lo + 1).max(0) as usize
    }
}

type Combination = Vec<(QRational, Op)>;

fn combination_is_zero(c: &Combination) -> Option<String> {
    let mut acc: BTreeMap<i64, Mat> = BTreeMap::new();
    for (k, op) in c {
        let d = op.mat.dim();
        acc.entry(op.power).or_insert_with(|| Mat::zero(d)).add_assign(&op.mat.scale(k));
    }
    acc.into_iter().find(|(_, m)| !m.is_zero()).map(|(p, m)| format!("z^{p}·{m}"))
}

/// Checks the defining relations in mode form on `m, n ∈ window`:
/// `ff`, `ee`, `[e, f]`, `ψ^±f`, `ψ^±e`, `ψψ` and `ψ⁺[0]ψ⁻[0] = 1`.
pub fn validate_relations(module: &EvalModule, window: ModeWindow) -> Report {
    if window.size() == 0 {
        return Report::pass(0).with_note("empty mode window: nothing was checked");
    }
    let a = |c: Current, n: i64| module.action(c, n);
    let p = |x: &Op, y: &Op| x.mul(y);
    let (q1, qm1, q2, qm2) = (qp(1), qp(-1), qp(2), qp(-2));
    let one = QRational::one();
    let cartan = (&q1 - &qm1).inv().expect("q − q⁻¹ is invertible");
    let modes: Vec<(i64, i64)> = (window.lo..=window.hi).flat_map(|m| (window.lo..=window.hi).map(move |n| (m, n))).collect();
    let mut checked = 0;

    type Rel<'a> = (&'a str, Box<dyn Fn(i64, i64) -> Combination + 'a>);
    let mut rels: Vec<Rel> = vec![
        (
            "ff",
            Box::new(|m, n| {
                use Current::F;
                vec![
                    (q1.clone(), p(&a(F, m + 1), &a(F, n))),
                    (-&qm1, p(&a(F, m), &a(F, n + 1))),
                    (-&qm1, p(&a(F, n), &a(F, m + 1))),
                    (q1.clone(), p(&a(F, n + 1), &a(F, m))),
                ]
            }),
        ),
        (
            "ee",
            Box::new(|m, n| {
                use Current::E;
                vec![
                    (qm1.clone(), p(&a(E, m + 1), &a(E, n))),
                    (-&q1, p(&a(E, m), &a(E, n + 1))),
                    (-&q1, p(&a(E, n), &a(E, m + 1))),
                    (qm1.clone(), p(&a(E, n + 1), &a(E, m))),
                ]
            }),
        ),
        (
            "[e,f]",
            Box::new(|m, n| {
                use Current::*;
                vec![
                    (one.clone(), p(&a(E, m), &a(F, n))),
                    (-&one, p(&a(F, n), &a(E, m))),
                    (-&cartan, a(PsiPlus, m + n)),
                    (cartan.clone(), a(PsiMinus, m + n)),
                ]
            }),
        ),
    ];
    for (name, psi) in [("psi+ f", Current::PsiPlus), ("psi- f", Current::PsiMinus)] {
        let (qm2, one) = (qm2.clone(), one.clone());
        rels.push((
            name,
            Box::new(move |m, n| {
                use Current::F;
                vec![
                    (one.clone(), p(&a(psi, m + 1), &a(F, n))),
                    (-&qm2, p(&a(psi, m), &a(F, n + 1))),
                    (-&qm2, p(&a(F, n), &a(psi, m + 1))),
                    (one.clone(), p(&a(F, n + 1), &a(psi, m))),
                ]
            }),
        ));
    }
    for (name, psi) in [("psi+ e", Current::PsiPlus), ("psi- e", Current::PsiMinus)] {
        let (q2, one) = (q2.clone(), one.clone());
        rels.push((
            name,
            Box::new(move |m, n| {
                use Current::E;
                vec![
                    (one.clone(), p(&a(psi, m + 1), &a(E, n))),
                    (-&q2, p(&a(psi, m), &a(E, n + 1))),
                    (-&q2, p(&a(E, n), &a(psi, m + 1))),
                    (one.clone(), p(&a(E, n + 1), &a(psi, m))),
                ]
            }),
        ));
    }
    for (name, x, y) in [
        ("psi+ psi+", Current::PsiPlus, Current::PsiPlus),
        ("psi+ psi-", Current::PsiPlus, Current::PsiMinus),
        ("psi- psi-", Current::PsiMinus, Current::PsiMinus),
    ] {
        let one = one.clone();
        rels.push((name, Box::new(move |m, n| vec![(one.clone(), p(&a(x, m), &a(y, n))), (-&one, p(&a(y, n), &a(x, m)))])));
    }

    for (name, rel) in &rels {
        for &(m, n) in &modes {
            checked += 1;
            if let Some(bad) = combination_is_zero(&rel(m, n)) {
                return Report::fail(checked, format!("relation {name} at m={m}, n={n} leaves {bad}"));
            }
        }
    }
    checked += 1;
    let k = p(&a(Current::PsiPlus, 0), &a(Current::PsiMinus, 0));
    if k.mat != Mat::identity(module.dim()) {
        return Report::fail(checked, format!("psi+[0] psi-[0] = {} is not the identity", k.mat));
    }
    Report::pass(checked)
}

/// A highest weight vector: killed by every `e[n]`, eigenvector of every
/// `ψ^±[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularVector {
    pub vector: ModVec,
}

impl SingularVector {
    /// `v₀`, checked on the modes `|n| ≤ r`.
    pub fn highest(module: &EvalModule, r: i64) -> Result<Self> {
        let v = ModVec::basis(module.dim(), 0);
        let sv = SingularVector { vector: v.clone() };
        for n in -r..=r {
            if !module.action(Current::E, n).mat.apply(&v).is_zero() {
                return Err(Error::Invalid(format!("e[{n}] does not kill v0")));
            }
            sv.eigenvalue(module, Current::PsiPlus, n)?;
            sv.eigenvalue(module, Current::PsiMinus, n)?;
        }
        Ok(sv)
    }

    /// Coefficient of `z^n` in the eigenvalue of the given Cartan current.
    pub fn eigenvalue(&self, module: &EvalModule, cur: Current, n: i64) -> Result<QRational> {
        let image = module.action(cur, n).mat.apply(&self.vector);
        let pivot = self.vector.0.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::Invalid("zero vector".into()))?;
        let lambda = image.0[pivot].checked_div(&self.vector.0[pivot])?;
        if image != self.vector.scale(&lambda) {
            return Err(Error::Invalid(format!("{cur}[{n}] does not act diagonally on the vector")));
        }
        Ok(lambda)
    }
}

/// `Σ_k λ_k (x_z/x_t)^k`, the `ψ⁺(x_t)` eigenvalue of `v` with the module
/// parameter named by `z_idx`, exact up to `target`.
fn eigen_series(module: &EvalModule, v: &SingularVector, vars: &[String], t_idx: usize, z_idx: usize, target: &[i64]) -> Result<NestedSeries<QRational>> {
    let n = vars.len();
    let window = ExponentWindow::new(vec![0; n], target.to_vec());
    let mut out = NestedSeries::with_window(vars.to_vec(), window);
    let cap = target[t_idx..z_idx].iter().copied().min().unwrap_or(0);
    for k in 0..=cap {
        let mut e = vec![0; n];
        e[t_idx] = -k;
        e[z_idx] = k;
        out.add_term(e, v.eigenvalue(module, Current::PsiPlus, k)?);
    }
    Ok(out)
}

/// `P(w)·v` for a single word; all terms share the `z` power `deg w`.
fn projected_action(module: &EvalModule, v: &ModVec, w: &[Gen]) -> Result<ModVec> {
    let fs = w.iter().filter(|g| matches!(g, Gen::F(_))).count();
    if fs > module.lowering_capacity() {
        return Ok(ModVec::zero(v.dim()));
    }
    let p = if fs == w.len() {
        project_f_word(&w.iter().map(|g| g.mode()).collect::<Vec<_>>())?
    } else {
        project(&AlgebraElement::word(w.to_vec()))?
    };
    let mut out = ModVec::zero(v.dim());
    for u in module.act(&p, v).into_values() {
        out.add_assign(&u);
    }
    Ok(out)
}

/// `W(t)·v` in the variables `tvars ++ [z]`, exact for `t`-depths up to
/// `ceiling`. The `z` exponent equals the principal degree, so the last
/// depth coordinate is identically zero.
pub fn weight_vector(module: &EvalModule, v: &SingularVector, tvars: Vec<String>, z: &str, ceiling: &[i64]) -> Result<NestedSeries<ModVec>> {
    let n = tvars.len();
    let ms = OrderedMultiset::uniform(n);
    let mut vars = tvars;
    vars.push(z.to_string());
    let mut floor: Vec<i64> = (1..=n as i64).collect();
    floor.push(0);
    let mut ceil: Vec<Option<i64>> = ceiling.iter().map(|c| Some(*c)).collect();
    ceil.push(None);
    if n == 0 {
        return Ok(NestedSeries::monomial(vars, vec![0], v.vector.clone()));
    }
    let mut out = NestedSeries::with_window(vars, ExponentWindow { floor, ceiling: ceil });
    // P preserves the number of f's, so words longer than the module can
    // absorb act by zero.
    if n > module.lowering_capacity() {
        return Ok(out);
    }
    let w = universal_weight(&ms, ceiling)?;
    let terms: Vec<(&Vec<i64>, &AlgebraElement)> = w.terms().collect();
    let images: Vec<(Vec<i64>, ModVec)> = terms
        .into_par_iter()
        .map(|(e, x)| {
            let mut u = ModVec::zero(v.vector.dim());
            for (p, img) in module.act(x, &v.vector) {
                if p != -e.iter().sum::<i64>() {
                    return Err(Error::Invalid(format!("z power {p} does not match the degree at {e:?}")));
                }
                u.add_assign(&img);
            }
            let mut full = e.clone();
            full.push(-e.iter().sum::<i64>());
            Ok((full, u))
        })
        .collect::<Result<_>>()?;
    for (e, u) in images {
        out.add_term(e, u);
    }
    Ok(out)
}

fn t_names(ids: &[usize]) -> Vec<String> {
    ids.iter().map(|i| format!("t{i}")).collect()
}

/// Variables `t₁…t_n, z₁, z₂` of a two-factor tensor product.
pub fn tensor_vars(n: usize) -> Vec<String> {
    let mut v = t_names(&(1..=n).collect::<Vec<_>>());
    v.push("z1".into());
    v.push("z2".into());
    v
}

/// Depth target for the tensor variables: the `t` ceilings, then `C_n` for
/// `z₁` and `0` for `z₂` (every term has total degree zero).
fn tensor_target(ceiling: &[i64]) -> Vec<i64> {
    let mut t = ceiling.to_vec();
    t.push(*ceiling.last().unwrap_or(&0));
    t.push(0);
    t
}

type Memo = RwLock<HashMap<Word, ModVec>>;

fn memo_action(memo: &Memo, module: &EvalModule, v: &ModVec, w: &[Gen]) -> Result<ModVec> {
    if let Some(u) = memo.read().expect("memo lock").get(w) {
        return Ok(u.clone());
    }
    let u = projected_action(module, v, w)?;
    memo.write().expect("memo lock").insert(w.to_vec(), u.clone());
    Ok(u)
}

/// One term of `(P⊗P)Δ(f[m₁]⋯f[m_n])`: the two leg words.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LegPair {
    pub left: Word,
    pub right: Word,
}

/// Terms of `Δ(f[m₁]⋯f[m_n])` that can survive `P⊗P`, with `Δ(f[m]) =
/// 1⊗f[m] + Σ_k f[m−k]⊗ψ⁺[k]`. Since `P(xy) = P(P(x)y)` and `P` of a word with
/// `j` f's vanishes unless its degree is at least `j`, a leg whose prefix
/// fails this bound contributes nothing; this also bounds `k`.
pub fn surviving_coproduct_terms(modes: &[i64]) -> Vec<LegPair> {
    // `ld`, `rd`: degrees of the legs so far; `rf`: f's in the right leg.
    fn go(modes: &[i64], i: usize, left: &mut Word, right: &mut Word, (ld, rd, rf): (i64, i64, i64), out: &mut Vec<LegPair>) {
        if i == modes.len() {
            out.push(LegPair { left: left.clone(), right: right.clone() });
            return;
        }
        let m = modes[i];
        if rd + m > rf {
            right.push(Gen::F(m));
            go(modes, i + 1, left, right, (ld, rd + m, rf + 1), out);
            right.pop();
        }
        let lf = left.len() as i64 + 1;
        for k in 0..=(ld + m - lf) {
            left.push(Gen::F(m - k));
            right.push(Gen::Psi(k));
            go(modes, i + 1, left, right, (ld + m - k, rd + k, rf), out);
            left.pop();
            right.pop();
        }
    }
    let mut out = Vec::new();
    go(modes, 0, &mut Vec::new(), &mut Vec::new(), (0, 0, 0), &mut out);
    out
}

/// `(P⊗P)Δ(W(t₁,…,t_n))(v₁⊗v₂)` in the variables of [`tensor_vars`].
pub fn tensor_weight_vector(
    m1: &EvalModule,
    v1: &SingularVector,
    m2: &EvalModule,
    v2: &SingularVector,
    n: usize,
    ceiling: &[i64],
) -> Result<NestedSeries<ModVec>> {
    if ceiling.len() != n {
        return Err(Error::Invalid(format!("ceiling has {} entries for {n} variables", ceiling.len())));
    }
    let target = tensor_target(ceiling);
    let mut floor: Vec<i64> = (1..=n as i64).collect();
    floor.extend([0, 0]);
    let mut out = NestedSeries::with_window(tensor_vars(n), ExponentWindow::new(floor.clone(), target));
    if n == 0 {
        out.add_term(vec![0, 0], v1.vector.kron(&v2.vector));
        return Ok(out);
    }
    let (memo1, memo2) = (Memo::default(), Memo::default());
    let points = depth_box(&floor[..n], ceiling);
    let terms: Vec<Vec<(Vec<i64>, ModVec)>> = points
        .into_par_iter()
        .map(|d| {
            let e = exponent_from_depth(&d);
            let modes: Vec<i64> = e.iter().map(|x| -x).collect();
            let mut acc: BTreeMap<Vec<i64>, ModVec> = BTreeMap::new();
            for pair in surviving_coproduct_terms(&modes) {
                let a = memo_action(&memo1, m1, &v1.vector, &pair.left)?;
                if a.is_zero() {
                    continue;
                }
                let b = memo_action(&memo2, m2, &v2.vector, &pair.right)?;
                if b.is_zero() {
                    continue;
                }
                let mut full = e.clone();
                full.push(pair.left.iter().map(|g| g.mode()).sum());
                full.push(pair.right.iter().map(|g| g.mode()).sum());
                acc.entry(full).or_insert_with(|| ModVec::zero(a.dim() * b.dim())).add_assign(&a.kron(&b));
            }
            Ok(acc.into_iter().collect())
        })
        .collect::<Result<_>>()?;
    for (e, u) in terms.into_iter().flatten() {
        out.add_term(e, u);
    }
    Ok(out)
}

fn linear(vars: &[String], terms: &[(QRational, usize)]) -> NestedSeries<QRational> {
    let n = vars.len();
    NestedSeries::polynomial(
        vars.to_vec(),
        terms.iter().map(|(c, i)| {
            let mut e = vec![0; n];
            e[*i] = 1;
            (e, c.clone())
        }),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factorization {
    Full,
    /// Omits the exchange factors between the two legs.
    WithoutExchange,
}

/// `Σ_{I₁⊔I₂} w₁(t_{I₁}) ⊗ w₂(t_{I₂}) · ∏_{i∈I₁} λ₂(t_i) ·
/// ∏_{k<l, k∈I₁, l∈I₂} (q⁻²t_k − t_l)/(t_k − q⁻²t_l)`.
pub fn factorized_tensor_weight(
    m1: &EvalModule,
    v1: &SingularVector,
    m2: &EvalModule,
    v2: &SingularVector,
    n: usize,
    ceiling: &[i64],
    variant: Factorization,
) -> Result<NestedSeries<ModVec>> {
    let vars = tensor_vars(n);
    let target = tensor_target(ceiling);
    let cap: Vec<Option<i64>> = target.iter().map(|c| Some(*c)).collect();
    let mut total: Option<NestedSeries<ModVec>> = None;
    for mask in 0..(1usize << n) {
        let left: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let right: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let sub = |idx: &[usize]| -> (Vec<String>, Vec<i64>) { (idx.iter().map(|i| vars[*i].clone()).collect(), idx.iter().map(|i| ceiling[*i]).collect()) };
        let (lv, lc) = sub(&left);
        let (rv, rc) = sub(&right);
        let a = weight_vector(m1, v1, lv, "z1", &lc)?.embed(&vars)?;
        let b = weight_vector(m2, v2, rv, "z2", &rc)?.embed(&vars)?;
        let mut term = a.mul_with(&b, |x, y| x.kron(y))?.truncate(&cap);
        for &i in &left {
            let lambda = eigen_series(m2, v2, &vars, i, n + 1, &target)?;
            term = lambda.mul_with(&term, |c, u| u.scale(c))?.truncate(&cap);
        }
        if variant == Factorization::Full {
            for &k in &left {
                for &l in right.iter().filter(|l| **l > k) {
                    let num = linear(&vars, &[(qp(-2), k), (int(-1), l)]);
                    let den = linear(&vars, &[(int(1), k), (-&qp(-2), l)]);
                    let g = expand_rational(&num, &den, &target)?;
                    term = g.mul_with(&term, |c, u| u.scale(c))?.truncate(&cap);
                }
            }
        }
        total = Some(match total {
            None => term,
            Some(t) => t.add(&term)?,
        });
    }
    Ok(total.expect("at least one subset"))
}

/// Tensor factorization of the weight vector for `V₁⊗V₂`, compared
/// coefficientwise on the exact window.
pub fn check_factorization(m1: &EvalModule, m2: &EvalModule, n: usize, ceiling: &[i64], variant: Factorization) -> Result<Report> {
    let v1 = SingularVector::highest(m1, 4)?;
    let v2 = SingularVector::highest(m2, 4)?;
    let lhs = tensor_weight_vector(m1, &v1, m2, &v2, n, ceiling)?;
    let rhs = factorized_tensor_weight(m1, &v1, m2, &v2, n, ceiling, variant)?;
    let common = lhs.window().sum(rhs.window());
    for (k, c) in ceiling.iter().enumerate() {
        if common.ceiling[k].is_some_and(|x| x < *c) {
            return Err(Error::WindowTooSmall(format!("comparison window {:?} is below the requested ceiling {ceiling:?}", common.ceiling)));
        }
    }
    let mut keys: Vec<&Vec<i64>> = lhs.terms().map(|(e, _)| e).chain(rhs.terms().map(|(e, _)| e)).collect();
    keys.sort();
    keys.dedup();
    let checked = keys.iter().filter(|e| common.within_ceiling(&depth(e))).count();
    match lhs.first_difference(&rhs)? {
        None => Ok(Report::pass(checked)),
        Some(e) => {
            let show = |s: &NestedSeries<ModVec>| s.get(&e).map(|u| u.to_string()).unwrap_or_else(|| "0".into());
            Ok(Report::fail(checked, format!("exponent {e:?}: {} vs {}", show(&lhs), show(&rhs))))
        }
    }
}

/// `h(x) = q(1 − q⁻²x)/(1 − x)` with `x = κ·x_a/x_u`.
fn h_series(vars: &[String], u: usize, a: usize, kappa: &QRational, target: &[i64]) -> Result<NestedSeries<QRational>> {
    let n = vars.len();
    let mono = |cu: i64, ca: i64, c: QRational| {
        let mut e = vec![0; n];
        e[u] = cu;
        e[a] = ca;
        (e, c)
    };
    let num = NestedSeries::polynomial(vars.to_vec(), [mono(0, 0, qp(1)), mono(-1, 1, -&(&qp(-1) * kappa))]);
    let den = NestedSeries::polynomial(vars.to_vec(), [mono(0, 0, int(1)), mono(-1, 1, -kappa)]);
    expand_rational(&num, &den, target)
}

/// Diagonal of the normalized Gauss coordinate `k̃⁺(x_u)`: `ρ₀ = 1`,
/// `ρ_{j+1} = ρ_j · h(κ_j x_a/x_u)`.
fn kplus_series(module: &EvalModule, vars: &[String], u: usize, a: usize, target: &[i64]) -> Result<NestedSeries<ModVec>> {
    let kappas = module.lowering_ratios()?;
    let d = module.dim();
    let cap: Vec<Option<i64>> = target.iter().map(|c| Some(*c)).collect();
    let mut rho = vec![NestedSeries::one(vars.to_vec())];
    for k in &kappas {
        let next = rho.last().expect("nonempty").mul(&h_series(vars, u, a, k, target)?)?.truncate(&cap);
        rho.push(next);
    }
    let mut out: Option<NestedSeries<ModVec>> = None;
    for (j, r) in rho.iter().enumerate() {
        let s = r.map(|c| ModVec::basis(d, j).scale(c));
        out = Some(match out {
            None => s,
            Some(o) => o.add(&s)?,
        });
    }
    Ok(out.expect("dimension is positive").truncate(&cap))
}

/// Checks that `ψ⁺(u) = (k⁺(uq⁻²)k⁺(u))⁻¹` holds for the normalized
/// diagonal: `φ_{j+1}(x)·h(q²κ_j x)·h(κ_j x) = φ_j(x)` with `φ_j` read off
/// the `ψ⁺` table.
pub fn check_gauss_normalization(module: &EvalModule, ceiling: i64) -> Result<Report> {
    let vars = vec!["u".to_string(), "z".to_string()];
    let target = [ceiling, 0];
    let cap = [Some(ceiling), Some(0)];
    let kappas = module.lowering_ratios()?;
    let phi = |j: usize| -> Result<NestedSeries<QRational>> {
        let mut s = NestedSeries::with_window(vars.clone(), ExponentWindow::new(vec![0, 0], target.to_vec()));
        for k in 0..=ceiling {
            s.add_term(vec![-k, k], module.action(Current::PsiPlus, k).mat.get(j, j).clone());
        }
        Ok(s)
    };
    let mut checked = 0;
    for (j, kappa) in kappas.iter().enumerate() {
        let lhs = phi(j + 1)?
            .mul(&h_series(&vars, 0, 1, &(&qp(2) * kappa), &target)?)?
            .mul(&h_series(&vars, 0, 1, kappa, &target)?)?
            .truncate(&cap);
        let rhs = phi(j)?;
        checked += ceiling as usize + 1;
        if let Some(e) = lhs.first_difference(&rhs)? {
            return Ok(Report::fail(checked, format!("v{} at exponent {e:?}", j + 1)));
        }
    }
    Ok(Report::pass(checked))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bethe {
    Full,
    /// Omits the prefactor `∏(qz_i − q⁻¹z_j)/(z_i − z_j)`.
    WithoutPrefactor,
}

fn bethe_vars(n: usize) -> Vec<String> {
    let mut v: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    v.push("a".into());
    v
}

/// `B̃⁺(z₁)⋯B̃⁺(z_n)v₀` with `B̃⁺(u) = f⁺(u)k̃⁺(u)`, the module parameter
/// named `a`.
fn bethe_lhs(module: &EvalModule, n: usize, target: &[i64]) -> Result<NestedSeries<ModVec>> {
    let vars = bethe_vars(n);
    let cap: Vec<Option<i64>> = target.iter().map(|c| Some(*c)).collect();
    let d = module.dim();
    let mut state = NestedSeries::monomial(vars.clone(), vec![0; n + 1], ModVec::basis(d, 0));
    for i in (0..n).rev() {
        let k = kplus_series(module, &vars, i, n, target)?;
        state = k.mul_with(&state, |x, y| x.hadamard(y))?.truncate(&cap);
        let mut fplus = NestedSeries::with_window(vars.clone(), ExponentWindow::new(vec![0; n + 1], target.to_vec()));
        let top = target[i..n].iter().copied().min().unwrap_or(0);
        for m in 1..=top {
            let mut e = vec![0; n + 1];
            e[i] = -m;
            e[n] = m;
            fplus.add_term(e, module.action(Current::F, m).mat);
        }
        state = fplus.mul_with(&state, |x, y| x.apply(y))?.truncate(&cap);
    }
    Ok(state)
}

fn product(vars: &[String], factors: &[NestedSeries<QRational>]) -> Result<NestedSeries<QRational>> {
    let mut out = NestedSeries::one(vars.to_vec());
    for f in factors {
        out = out.mul(f)?;
    }
    Ok(out)
}

/// `∏_{i<j}(z_i − z_j)(qz_i − q⁻¹z_j)`, `∏_{i<j}(qz_i − q⁻¹z_j)²` and the
/// pole factors `∏_i ∏_s (z_i − q^{2s}a)²`.
fn bethe_polynomials(module: &EvalModule, n: usize) -> Result<[NestedSeries<QRational>; 3]> {
    let vars = bethe_vars(n);
    let mut d = Vec::new();
    let mut num = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let diff = linear(&vars, &[(int(1), i), (int(-1), j)]);
            let shifted = linear(&vars, &[(qp(1), i), (-&qp(-1), j)]);
            d.push(diff);
            d.push(shifted.clone());
            num.push(shifted.clone());
            num.push(shifted);
        }
    }
    let r = module.lowering_capacity() as i64 - 1;
    let mut poles = Vec::new();
    for i in 0..n {
        for s in -r..=r {
            let f = linear(&vars, &[(int(1), i), (-&qp(2 * s), n)]);
            poles.push(f.clone());
            poles.push(f);
        }
    }
    Ok([product(&vars, &d)?, product(&vars, &num)?, product(&vars, &poles)?])
}

fn bethe_sides(module: &EvalModule, n: usize, step: i64, variant: Bethe) -> Result<(NestedSeries<ModVec>, NestedSeries<ModVec>)> {
    let v = SingularVector::highest(module, 4)?;
    let mut target: Vec<i64> = (1..=n as i64).map(|k| k * step).collect();
    target.push(0);
    let lhs = bethe_lhs(module, n, &target)?;
    let vars = bethe_vars(n);
    let w = weight_vector(module, &v, vars[..n].to_vec(), "a", &target[..n])?;
    let [d, num, poles] = bethe_polynomials(module, n)?;
    let scale = |p: &NestedSeries<QRational>, s: &NestedSeries<ModVec>| p.mul_with(s, |c, u| u.scale(c));
    let left = scale(&d.mul(&poles)?, &lhs)?;
    let right_factor = match variant {
        Bethe::Full => num,
        Bethe::WithoutPrefactor => d,
    };
    let right = scale(&right_factor.mul(&poles)?, &w)?;
    Ok((left, right))
}

fn stable(small: &NestedSeries<ModVec>, big: &NestedSeries<ModVec>) -> bool {
    big.terms().all(|(e, c)| small.window().within_ceiling(&depth(e)) && small.get(e) == Some(c))
}

/// Bethe vector identity `B̃⁺(z₁)⋯B̃⁺(z_n)v = ∏_{i<j}(qz_i − q⁻¹z_j)/(z_i − z_j)
/// · P(f(z₁)⋯f(z_n))v` for the highest vector, with `k̃⁺(u)v = v`.
///
/// Both sides are multiplied by `∏(z_i − z_j)(qz_i − q⁻¹z_j)` and by the
/// poles in the module parameter; the results are polynomials, which must
/// agree and must not change when the window grows by `4` per variable.
pub fn bethe_check(module: &EvalModule, n: usize, step: i64, variant: Bethe) -> Result<Report> {
    let (l, r) = bethe_sides(module, n, step, variant)?;
    let (lb, rb) = bethe_sides(module, n, step + 4, variant)?;
    if !stable(&l, &lb) {
        return Err(Error::WindowTooSmall(format!("pole-cleared left side does not stabilize at step {step}; try {}", step + 4)));
    }
    let checked = lb.len().max(rb.len());
    if !stable(&r, &rb) {
        return Ok(Report::fail(checked, "pole-cleared right side is not a polynomial on the window"));
    }
    let mut report = match lb.first_difference(&rb)? {
        None => Report::pass(checked),
        Some(e) => return Ok(Report::fail(checked, format!("exponent {e:?}: {} vs {}", show(&lb, &e), show(&rb, &e)))),
    };
    if lb.is_empty() {
        report = report.with_note(format!("both sides vanish: {n} lowerings exceed the module"));
    }
    Ok(report)
}

fn show(s: &NestedSeries<ModVec>, e: &[i64]) -> String {
    s.get(e).map(|u| u.to_string()).unwrap_or_else(|| "0".into())
}

/// A named polynomial denominator factor.
#[derive(Clone, Debug)]
pub struct PoleFactor {
    pub label: String,
    pub poly: NestedSeries<QRational>,
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub report: Report,
    pub numerator: NestedSeries<ModVec>,
    pub surplus: usize,
}

/// Writes `series = N / ∏ factors` with `N` a homogeneous polynomial of the
/// given total degree. `N` is read off `∏ factors · series`; every other
/// coefficient of that product in the exact window must vanish, and the
/// number of such surplus checks must reach `min_surplus`.
pub fn rational_reconstruct(series: &NestedSeries<ModVec>, factors: &[PoleFactor], degree: i64, min_surplus: usize) -> Result<Reconstruction> {
    let vars = series.vars().to_vec();
    let k = vars.len();
    let den = product(&vars, &factors.iter().map(|f| f.poly.clone()).collect::<Vec<_>>())?;
    let prod = den.mul_with(series, |c, u| u.scale(c))?;
    let w = prod.window().clone();
    let mut lo = w.floor[..k - 1].to_vec();
    let mut hi = Vec::new();
    for (j, c) in w.ceiling[..k - 1].iter().enumerate() {
        hi.push(c.ok_or_else(|| Error::WindowTooSmall(format!("coordinate {} has no ceiling", vars[j])))?);
    }
    let last = -degree;
    if w.floor[k - 1] > last || w.ceiling[k - 1].is_some_and(|c| c < last) {
        return Err(Error::WindowTooSmall(format!("degree {degree} is outside the window in {}", vars[k - 1])));
    }
    lo.push(last);
    hi.push(last);
    let mut numerator = NestedSeries::polynomial(vars.clone(), std::iter::empty::<(Vec<i64>, ModVec)>());
    let mut surplus = 0;
    let mut failure = None;
    for d in depth_box(&lo, &hi) {
        let e = exponent_from_depth(&d);
        let c = prod.get(&e);
        if e.iter().all(|x| *x >= 0) {
            if let Some(c) = c {
                numerator.add_term(e, c.clone());
            }
        } else {
            surplus += 1;
            if failure.is_none() {
                if let Some(c) = c {
                    failure = Some(format!("coefficient {c} at {e:?} is not matched by the ansatz"));
                }
            }
        }
    }
    if failure.is_none() {
        if let Some((e, _)) = prod.terms().find(|(e, _)| depth(e)[k - 1] != last) {
            failure = Some(format!("term at {e:?} has the wrong total degree"));
        }
    }
    let report = match failure {
        Some(msg) => Report::fail(surplus, msg),
        None if surplus < min_surplus => Report::fail(surplus, format!("only {surplus} surplus coefficients, need {min_surplus}")),
        None => Report::pass(surplus),
    };
    Ok(Reconstruction { report, numerator, surplus })
}

/// Pole ansatz for two variables: `t_i − z`, `t_i − q^{±2}z` and
/// `qt₁ − q⁻¹t₂`, in the variables `t1, t2, z`.
pub fn pair_pole_factors() -> Vec<PoleFactor> {
    let vars: Vec<String> = ["t1", "t2", "z"].iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    for i in 0..2 {
        for s in [0, 2, -2] {
            let label = if s == 0 { format!("t{} - z", i + 1) } else { format!("t{} - q^{s} z", i + 1) };
            out.push(PoleFactor { label, poly: linear(&vars, &[(int(1), i), (-&qp(s), 2)]) });
        }
    }
    out.push(PoleFactor { label: "q t1 - q^-1 t2".into(), poly: linear(&vars, &[(qp(1), 0), (-&qp(-1), 1)]) });
    out
}

/// Rational form of the spin-one weight vector for `n = 2`, with the
/// factors that cannot be dropped listed as a note.
pub fn reconstruct_spin_one_pair(ceiling: &[i64], min_surplus: usize) -> Result<Reconstruction> {
    let m = EvalModule::spin_one();
    let v = SingularVector::highest(&m, 4)?;
    let w = weight_vector(&m, &v, vec!["t1".into(), "t2".into()], "z", ceiling)?;
    let factors = pair_pole_factors();
    let mut rec = rational_reconstruct(&w, &factors, factors.len() as i64, min_surplus)?;
    if rec.report.passed() {
        let mut needed = Vec::new();
        for i in 0..factors.len() {
            let mut fewer = factors.clone();
            let f = fewer.remove(i);
            let r = rational_reconstruct(&w, &fewer, fewer.len() as i64, 0)?;
            if !r.report.passed() {
                needed.push(f.label);
            }
        }
        rec.report = rec.report.with_note(format!("necessary pole factors: {}", needed.join(", ")));
    }
    Ok(rec)
}

/// Module-level antisymmetry for `n = 2`: `(t₁⁻¹ − q²t₂⁻¹)·W·v` has only
/// negative `t` exponents and changes sign when the two variables swap, on
/// `[−6, −1]²`.
pub fn check_module_antisymmetry(module: &EvalModule, ceiling: &[i64]) -> Result<Report> {
    let v = SingularVector::highest(module, 4)?;
    let wbar = |ids: [usize; 2]| -> Result<NestedSeries<ModVec>> {
        let ms = OrderedMultiset::new(ids.to_vec(), vec![1, 1])?;
        let w = weight_vector(module, &v, ms.vars(), "z", ceiling)?;
        prefactor_a(&ms).embed(w.vars())?.mul_with(&w, |c, u| u.scale(c))
    };
    let (x, y) = (wbar([1, 2])?, wbar([2, 1])?);
    for s in [&x, &y] {
        if let Some((e, _)) = s.terms().find(|(e, _)| e[..2].iter().any(|t| *t >= 0)) {
            return Ok(Report::fail(0, format!("nonzero coefficient at {e:?} in variables {:?}", s.vars())));
        }
    }
    let mut checked = 0;
    for a in -6..=-1 {
        for b in -6..=-1 {
            checked += 1;
            let lhs = x.coefficient(&[a, b, -a - b])?.cloned();
            let rhs = y.coefficient(&[b, a, -a - b])?.map(|u| u.neg());
            if lhs != rhs {
                return Ok(Report::fail(checked, format!("exponent ({a}, {b}) does not change sign")));
            }
        }
    }
    Ok(Report::pass(checked))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_satisfy_relations() {
        for m in [EvalModule::trivial(), EvalModule::spin_half(), EvalModule::spin_one()] {
            let r = validate_relations(&m, ModeWindow::symmetric(3));
            assert!(r.passed(), "{:?}: {:?}", m.spin(), r.first_failure);
        }
    }

    #[test]
    fn flipped_psi_fails_at_ef() {
        let m = EvalModule::spin_one().with_sign_flip(Current::PsiPlus, 1);
        let r = validate_relations(&m, ModeWindow::symmetric(2));
        assert!(!r.passed());
        assert!(r.first_failure.unwrap().contains("[e,f]"));
    }

    #[test]
    fn empty_window_is_vacuous() {
        let r = validate_relations(&EvalModule::spin_half(), ModeWindow { lo: 1, hi: 0 });
        assert!(r.passed());
        assert_eq!(r.checked_coefficients, 0);
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn spin_half_single_variable() {
        let m = EvalModule::spin_half();
        let v = SingularVector::highest(&m, 3).unwrap();
        let w = weight_vector(&m, &v, vec!["t".into()], "z", &[5]).unwrap();
        for k in 1..=5 {
            assert_eq!(w.get(&[-k, k]), Some(&ModVec::basis(2, 1)));
        }
        assert_eq!(w.len(), 5);
    }

    #[test]
    fn coproduct_enumeration_matches_full_coproduct() {
        for modes in [vec![2, 1], vec![3, -1], vec![1, 1, 2], vec![4, 0, 1]] {
            let word: Word = modes.iter().map(|m| Gen::F(*m)).collect();
            let full = crate::algebra::coproduct_drinfeld(&word, Some(8)).unwrap();
            let mut expected: Vec<LegPair> = Vec::new();
            for (l, r) in full.terms.keys() {
                let p1 = crate::algebra::project(&AlgebraElement::word(l.clone())).unwrap();
                let p2 = crate::algebra::project(&AlgebraElement::word(r.clone())).unwrap();
                if !p1.is_zero() && !p2.is_zero() {
                    expected.push(LegPair { left: l.clone(), right: r.clone() });
                }
            }
            let got = surviving_coproduct_terms(&modes);
            for p in &expected {
                assert!(got.contains(p), "{modes:?}: missing {p:?}");
            }
        }
    }

    #[test]
    fn lowering_ratios() {
        assert_eq!(EvalModule::spin_half().lowering_ratios().unwrap(), vec![QRational::one()]);
        assert_eq!(EvalModule::spin_one().lowering_ratios().unwrap(), vec![QRational::one(), qp(-2)]);
    }

    #[test]
    fn gauss_normalization_matches_psi() {
        for m in [EvalModule::spin_half(), EvalModule::spin_one()] {
            assert!(check_gauss_normalization(&m, 8).unwrap().passed());
        }
    }

    #[test]
    fn tensor_with_trivial_is_counit() {
        let m = EvalModule::spin_one();
        let v = SingularVector::highest(&m, 3).unwrap();
        let t = EvalModule::trivial();
        let tv = SingularVector::highest(&t, 3).unwrap();
        let lhs = tensor_weight_vector(&m, &v, &t, &tv, 2, &[4, 8]).unwrap();
        let w = weight_vector(&m, &v, vec!["t1".into(), "t2".into()], "z1", &[4, 8]).unwrap().embed(&tensor_vars(2)).unwrap();
        assert_eq!(lhs.first_difference(&w).unwrap(), None);
        assert!(!lhs.is_empty());
    }
}
