//! The universal weight function `W = P(f(t₁) ⋯ f(t_n))` as a windowed
//! series, its antisymmetric form `A·W`, and the closed and classical
//! formulas it is checked against.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{project_f_word, AlgebraElement, Gen, Word};
use crate::classical::{depth_box, BlockFactor, ClassicalElement, ClassicalEngine};
use crate::coeffs::{expand_rational, exponent_from_depth, ExponentBox, ExponentWindow, NestedSeries, QRational};
use crate::error::{Error, Result};
use crate::report::Report;

pub type WeightSeries = NestedSeries<AlgebraElement>;

/// Identifiers in their total order, each with a simple-root color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedMultiset {
    pub ids: Vec<usize>,
    pub colors: Vec<usize>,
}

impl OrderedMultiset {
    pub fn new(ids: Vec<usize>, colors: Vec<usize>) -> Result<Self> {
        if ids.len() != colors.len() {
            return Err(Error::Invalid("ids and colors differ in length".into()));
        }
        let mut seen = ids.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != ids.len() {
            return Err(Error::Invalid("repeated identifier".into()));
        }
        Ok(OrderedMultiset { ids, colors })
    }

    /// `n` identifiers `1..=n`, all of color 1.
    pub fn uniform(n: usize) -> Self {
        OrderedMultiset { ids: (1..=n).collect(), colors: vec![1; n] }
    }

    pub fn colored(colors: &[usize]) -> Self {
        OrderedMultiset { ids: (1..=colors.len()).collect(), colors: colors.to_vec() }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn vars(&self) -> Vec<String> {
        self.ids.iter().map(|i| format!("t{i}")).collect()
    }

    /// The multiset reordered so that its `k`-th element is the
    /// `perm[k]`-th element of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        OrderedMultiset { ids: perm.iter().map(|&p| self.ids[p]).collect(), colors: perm.iter().map(|&p| self.colors[p]).collect() }
    }

    fn single_color(&self) -> Result<()> {
        if self.colors.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::MultiColor);
        }
        Ok(())
    }
}

/// Depth ceiling `6k` covering `t₁ ∈ [−6,−1]`, `t_j ∈ [−6, j+2]`.
pub fn default_ceiling(n: usize) -> Vec<i64> {
    (1..=n as i64).map(|k| 6 * k).collect()
}

/// The raw box `t₁ ∈ [−6,−1]`, `t_j ∈ [−6, j+2]` for `j ≥ 2`.
pub fn default_box(n: usize) -> ExponentBox {
    let lo = vec![-6; n];
    let hi = (1..=n as i64).map(|j| if j == 1 { -1 } else { j + 2 }).collect();
    ExponentBox::new(lo, hi).expect("default box is well formed")
}

/// The box `[−6,−1]ⁿ`, where the antisymmetric form lives.
pub fn negative_box(n: usize) -> ExponentBox {
    ExponentBox::new(vec![-6; n], vec![-1; n]).expect("box is well formed")
}

/// Theorem-level weight function: the coefficient at `(−a₁,…,−a_n)` is
/// `P(f[a₁] ⋯ f[a_n])`. Coefficients with a depth below `(1, 2, …, n)` vanish.
pub fn universal_weight(ms: &OrderedMultiset, ceiling: &[i64]) -> Result<WeightSeries> {
    ms.single_color()?;
    let n = ms.len();
    if ceiling.len() != n {
        return Err(Error::Invalid(format!("ceiling has {} entries for {} variables", ceiling.len(), n)));
    }
    if n == 0 {
        return Ok(NestedSeries::polynomial(vec![], [(vec![], AlgebraElement::one())]));
    }
    let floor: Vec<i64> = (1..=n as i64).collect();
    let points = depth_box(&floor, ceiling);
    let coeffs: Vec<(Vec<i64>, AlgebraElement)> = points
        .into_par_iter()
        .map(|d| {
            let e = exponent_from_depth(&d);
            let modes: Vec<i64> = e.iter().map(|x| -x).collect();
            project_f_word(&modes).map(|p| (e, p))
        })
        .collect::<Result<_>>()?;
    let mut out = NestedSeries::with_window(ms.vars(), ExponentWindow::new(floor, ceiling.to_vec()));
    for (e, c) in coeffs {
        out.add_term(e, c);
    }
    Ok(out)
}

fn f_word(modes: &[i64]) -> AlgebraElement {
    AlgebraElement::word(modes.iter().map(|&a| Gen::F(a)).collect())
}

/// `f⁺(t₁)f⁺(t₂) − (q−q⁻¹)t₁/(qt₁−q⁻¹t₂)·(f⁺(t₁))²`, expanded in `t₂/t₁`.
pub fn closed_form_sl2_pair(vars: Vec<String>, ceiling: &[i64]) -> Result<WeightSeries> {
    if vars.len() != 2 || ceiling.len() != 2 {
        return Err(Error::Invalid("the closed form has two variables".into()));
    }
    let (c1, c2) = (ceiling[0], ceiling[1]);
    let mut first = NestedSeries::with_window(vars.clone(), ExponentWindow::new(vec![1, 2], ceiling.to_vec()));
    for a in 1..=c1 {
        for b in 1..=c2 - a {
            first.add_term(vec![-a, -b], f_word(&[a, b]).mul(&AlgebraElement::one())?);
        }
    }
    let mut square = NestedSeries::with_window(vars.clone(), ExponentWindow::new(vec![2, 2], ceiling.to_vec()));
    for a in 1..=c1 {
        for b in 1..=c1.min(c2) - a {
            square.add_term(vec![-(a + b), 0], f_word(&[a, b]).mul(&AlgebraElement::one())?);
        }
    }
    let num = NestedSeries::monomial(vars.clone(), vec![1, 0], "q - q^-1".parse::<QRational>()?);
    let den = NestedSeries::polynomial(vars, [(vec![1, 0], QRational::q_pow(1)), (vec![0, 1], -QRational::q_pow(-1))]);
    let factor = expand_rational(&num, &den, ceiling)?;
    let second = factor.mul_with(&square, |c, x| x.scale(c))?;
    first.sub(&second)
}

/// Symmetric form on simple roots of type A: 2 on the diagonal, −1 between
/// neighbours.
pub fn type_a_form(i: usize, j: usize) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// `A = ∏_{k<l} (t_k⁻¹ − q^{(ι_k, ι_l)} t_l⁻¹)`.
pub fn prefactor_a(ms: &OrderedMultiset) -> NestedSeries<QRational> {
    let n = ms.len();
    let vars = ms.vars();
    let mut out = NestedSeries::one(vars.clone());
    for k in 0..n {
        for l in k + 1..n {
            let mut ek = vec![0; n];
            ek[k] = -1;
            let mut el = vec![0; n];
            el[l] = -1;
            let q = QRational::q_pow(type_a_form(ms.colors[k], ms.colors[l]));
            let f = NestedSeries::polynomial(vars.clone(), [(ek, QRational::one()), (el, -q)]);
            out = out.mul(&f).expect("same variables");
        }
    }
    out
}

/// `W̄ = A · W`.
pub fn symmetrized_weight(ms: &OrderedMultiset, ceiling: &[i64]) -> Result<WeightSeries> {
    let w = universal_weight(ms, ceiling)?;
    prefactor_a(ms).mul_with(&w, |a, x| x.scale(a))
}

/// Terms of `W̄` with some nonnegative exponent; the first offending exponent.
pub fn regularity_violation(wbar: &WeightSeries) -> Option<Vec<i64>> {
    wbar.terms().find(|(e, _)| e.iter().any(|x| *x >= 0)).map(|(e, _)| e.clone())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Regularity of `W̄` on its whole window and `W̄_σ = ε(σ) W̄` on `[−6,−1]ⁿ`
/// for every permutation of `1..=n`.
pub fn check_antisymmetry(n: usize, ceiling: &[i64]) -> Result<Report> {
    let ms = OrderedMultiset::uniform(n);
    let wbar = symmetrized_weight(&ms, ceiling)?;
    if let Some(e) = regularity_violation(&wbar) {
        return Ok(Report::fail(wbar.len(), format!("nonzero coefficient of W̄ at {e:?}")));
    }
    let bx = negative_box(n);
    let base = wbar.restrict(&bx)?;
    let mut checked = wbar.len();
    for perm in permutations(n) {
        let pm = ms.permuted(&perm);
        let other = symmetrized_weight(&pm, ceiling)?;
        if let Some(e) = regularity_violation(&other) {
            return Ok(Report::fail(checked, format!("nonzero coefficient of W̄ for order {:?} at {e:?}", pm.ids)));
        }
        let s = QRational::from_int(sign(&perm));
        for e in bx.points() {
            let pe: Vec<i64> = perm.iter().map(|&p| e[p]).collect();
            let lhs = other.coefficient(&pe)?.cloned().unwrap_or_else(AlgebraElement::zero);
            let rhs = base.get(&e).cloned().unwrap_or_else(AlgebraElement::zero).scale(&s);
            checked += 1;
            if lhs != rhs {
                return Ok(Report::fail(checked, format!("order {:?}, exponent {e:?}: {lhs} vs {rhs}", pm.ids)));
            }
        }
    }
    Ok(Report::pass(checked))
}

/// Coefficientwise comparison of two series on a raw box.
pub fn compare_on_box<C: crate::coeffs::Coefficient + std::fmt::Display>(
    a: &NestedSeries<C>,
    b: &NestedSeries<C>,
    bx: &ExponentBox,
) -> Result<Report> {
    let ra = a.restrict(bx)?;
    let rb = b.restrict(bx)?;
    for e in bx.points() {
        if ra.get(&e) != rb.get(&e) {
            let show = |x: Option<&C>| x.map(|c| c.to_string()).unwrap_or_else(|| "0".into());
            return Ok(Report::fail(bx.size(), format!("exponent {e:?}: {} vs {}", show(ra.get(&e)), show(rb.get(&e)))));
        }
    }
    Ok(Report::pass(bx.size()))
}

/// Universal weight for `n = 2` against the closed form on the default box.
pub fn check_closed_form(ceiling: &[i64]) -> Result<Report> {
    let ms = OrderedMultiset::uniform(2);
    let w = universal_weight(&ms, ceiling)?;
    let c = closed_form_sl2_pair(ms.vars(), ceiling)?;
    if let Some(e) = w.first_difference(&c)? {
        return Ok(Report::fail(0, format!("series differ at {e:?}")));
    }
    compare_on_box(&w, &c, &default_box(2))
}

/// The classical formula: sum over set partitions of products of `W^Lie`.
pub fn classical_weight(engine: &ClassicalEngine, ms: &OrderedMultiset, ceiling: &[i64]) -> Result<NestedSeries<ClassicalElement>> {
    if engine.basis.max_depth() < ms.len() {
        return Err(Error::DepthOverflow { depth: ms.len(), max: engine.basis.max_depth() });
    }
    engine.partition_series(&ms.colors, ms.vars(), ceiling, BlockFactor::Chain)
}

/// Partition sum against direct classical projection on the default box.
pub fn check_classical(colors: &[usize], ceiling: &[i64]) -> Result<Report> {
    let n = colors.len();
    let mut palette = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let engine = ClassicalEngine::new(&palette, n.max(1));
    let ms = OrderedMultiset::colored(colors);
    let direct = engine.direct_series(colors, ms.vars(), ceiling)?;
    let parts = classical_weight(&engine, &ms, ceiling)?;
    if let Some(e) = direct.first_difference(&parts)? {
        let show = |s: &NestedSeries<ClassicalElement>| s.get(&e).map(|c| c.display(&engine.basis)).unwrap_or_else(|| "0".into());
        return Ok(Report::fail(0, format!("colors {colors:?}, exponent {e:?}: direct {} vs partitions {}", show(&direct), show(&parts))));
    }
    let bx = default_box(n);
    let ra = direct.restrict(&bx)?;
    let rb = parts.restrict(&bx)?;
    if ra != rb {
        return Ok(Report::fail(bx.size(), format!("colors {colors:?}: restrictions differ")));
    }
    Ok(Report::pass(bx.size()))
}

/// Rank-1 words with their coefficient at `q = 1`.
pub type ClassicalImage = BTreeMap<Word, BigRational>;

/// `q = 1` image of `universal_weight`, compared with the rank-1 classical
/// projection and with `∏ f⁺(t_k)`.
pub fn check_q1_limit(n: usize, ceiling: &[i64]) -> Result<Report> {
    let ms = OrderedMultiset::uniform(n);
    let w = universal_weight(&ms, ceiling)?;
    if !w.terms().all(|(_, c)| c.is_laurent()) {
        return Ok(Report::fail(0, "a coefficient is not a Laurent polynomial in q"));
    }
    let engine = ClassicalEngine::new(&[1], n.max(1));
    let classical = engine.direct_series(&ms.colors, ms.vars(), ceiling)?;
    let letter = engine.basis.letter(1)?;
    let bx = default_box(n);
    let quantum = w.restrict(&bx)?;
    let classical = classical.restrict(&bx)?;
    for e in bx.points() {
        let q1: ClassicalImage = match quantum.get(&e) {
            Some(c) => c.at_q1()?,
            None => BTreeMap::new(),
        };
        let mut cl = ClassicalImage::new();
        if let Some(c) = classical.get(&e) {
            for (lw, v) in c.terms() {
                if lw.iter().any(|g| g.hall != letter) {
                    return Ok(Report::fail(0, format!("composite classical word at {e:?}")));
                }
                cl.insert(lw.iter().map(|g| Gen::F(g.mode)).collect(), v.clone());
            }
        }
        let mut product = ClassicalImage::new();
        if e.iter().all(|x| *x < 0) {
            let mut modes: Vec<i64> = e.iter().map(|x| -x).collect();
            modes.sort_unstable();
            product.insert(modes.into_iter().map(Gen::F).collect(), BigRational::from_integer(1.into()));
        }
        if q1 != cl || q1 != product {
            return Ok(Report::fail(bx.size(), format!("exponent {e:?}: q=1 {q1:?}, classical {cl:?}, product {product:?}")));
        }
    }
    Ok(Report::pass(bx.size()))
}

/// Renaming identifiers leaves the coefficients unchanged.
pub fn check_functoriality(n: usize, ceiling: &[i64]) -> Result<Report> {
    let a = universal_weight(&OrderedMultiset::uniform(n), ceiling)?;
    let ids: Vec<usize> = (0..n).map(|k| 7 * k + 3).collect();
    let b = universal_weight(&OrderedMultiset::new(ids, vec![1; n])?, ceiling)?;
    let ta: Vec<_> = a.terms().collect();
    let tb: Vec<_> = b.terms().collect();
    if ta != tb || a.window() != b.window() {
        return Ok(Report::fail(ta.len(), "renamed multiset changed the series"));
    }
    Ok(Report::pass(ta.len()))
}

/// `W_∅ = 1`.
pub fn check_empty() -> Result<Report> {
    let w = universal_weight(&OrderedMultiset::uniform(0), &[])?;
    let terms: Vec<_> = w.terms().collect();
    if terms.len() == 1 && terms[0].0.is_empty() && *terms[0].1 == AlgebraElement::one() {
        Ok(Report::pass(1))
    } else {
        Ok(Report::fail(1, "W of the empty multiset is not 1"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QRational {
        s.parse().unwrap()
    }

    fn f11() -> Word {
        vec![Gen::F(1), Gen::F(1)]
    }

    #[test]
    fn single_variable() {
        let w = universal_weight(&OrderedMultiset::uniform(1), &[5]).unwrap();
        for k in 1..=5 {
            assert_eq!(w.coefficient(&[-k]).unwrap().unwrap(), &f_word(&[k]));
        }
        assert!(w.coefficient(&[0]).unwrap().is_none());
        assert!(w.coefficient(&[2]).unwrap().is_none());
    }

    #[test]
    fn two_variable_spots() {
        let w = universal_weight(&OrderedMultiset::uniform(2), &default_ceiling(2)).unwrap();
        assert_eq!(w.coefficient(&[-1, -1]).unwrap().unwrap(), &AlgebraElement::word(f11()));
        assert_eq!(w.coefficient(&[-2, 0]).unwrap().unwrap(), &AlgebraElement::term(f11(), q("q^-2 - 1")));
        assert_eq!(w.coefficient(&[-3, 1]).unwrap().unwrap(), &AlgebraElement::term(f11(), q("q^-4 - q^-2")));
    }

    #[test]
    fn closed_form_spots() {
        let c = closed_form_sl2_pair(var_pair(), &default_ceiling(2)).unwrap();
        assert_eq!(c.coefficient(&[-1, -1]).unwrap().unwrap(), &AlgebraElement::word(f11()));
        assert_eq!(c.coefficient(&[-2, 0]).unwrap().unwrap(), &AlgebraElement::term(f11(), q("q^-2 - 1")));
        assert_eq!(c.coefficient(&[-3, 1]).unwrap().unwrap(), &AlgebraElement::term(f11(), q("q^-4 - q^-2")));
    }

    fn var_pair() -> Vec<String> {
        vec!["t1".into(), "t2".into()]
    }

    #[test]
    fn prefactor_shapes() {
        let a = prefactor_a(&OrderedMultiset::uniform(2));
        assert_eq!(a.len(), 2);
        assert_eq!(a.get(&[-1, 0]), Some(&QRational::one()));
        assert_eq!(a.get(&[0, -1]), Some(&-QRational::q_pow(2)));
        assert_eq!(prefactor_a(&OrderedMultiset::uniform(1)).len(), 1);
        assert_eq!(prefactor_a(&OrderedMultiset::uniform(3)).len(), 7);
    }

    #[test]
    fn wbar_spot() {
        let wbar = symmetrized_weight(&OrderedMultiset::uniform(2), &default_ceiling(2)).unwrap();
        assert_eq!(wbar.coefficient(&[-2, -1]).unwrap().unwrap(), &AlgebraElement::term(f11(), QRational::q_pow(2)));
        assert_eq!(regularity_violation(&wbar), None);
    }

    #[test]
    fn multicolor_rejected() {
        let ms = OrderedMultiset::colored(&[1, 2]);
        assert_eq!(universal_weight(&ms, &[3, 6]).unwrap_err(), Error::MultiColor);
    }

    #[test]
    fn empty_and_renaming() {
        assert!(check_empty().unwrap().passed());
        assert!(check_functoriality(2, &[4, 8]).unwrap().passed());
    }

    #[test]
    fn rank_two_classical_spots() {
        let engine = ClassicalEngine::new(&[1, 2], 2);
        let ms = OrderedMultiset::colored(&[1, 2]);
        let w = classical_weight(&engine, &ms, &[4, 8]).unwrap();
        let f12 = engine.basis.find(crate::classical::HallTree::Pair(0, 1)).unwrap();
        assert_eq!(w.coefficient(&[-2, 1]).unwrap().unwrap(), &ClassicalElement::word(vec![crate::classical::LoopGen { hall: f12, mode: 1 }]));
        let f1 = engine.letter(1, 1).unwrap();
        let f2 = engine.letter(2, 1).unwrap();
        assert_eq!(w.coefficient(&[-1, -1]).unwrap().unwrap(), &ClassicalElement::word(vec![f1, f2]));
    }
}
