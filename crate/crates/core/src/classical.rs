//! The `q = 1` oracle: the enveloping algebra of the loop algebra of a
//! depth-truncated free Lie algebra, with its own separation and projection.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeffs::{depth, exponent_from_depth, expand_rational, Coefficient, ExponentWindow, NestedSeries, QRational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HallTree {
    Letter(usize),
    Pair(usize, usize),
}

/// Hall basis of the free Lie algebra on letters `f_c`, up to `max_depth`.
///
/// Order: larger degree first; letters by color; pairs by their left, then
/// right factor. `(x, y)` is a Hall tree iff `x < y` and either `x` is a
/// letter or `x = (u, v)` with `v ≥ y`.
#[derive(Clone, Debug)]
pub struct HallBasis {
    colors: Vec<usize>,
    max_depth: usize,
    nodes: Vec<HallTree>,
    degree: Vec<usize>,
    index: HashMap<HallTree, usize>,
}

pub type LieElement = BTreeMap<usize, BigRational>;

fn lie_add(acc: &mut LieElement, id: usize, c: BigRational) {
    let e = acc.entry(id).or_insert_with(BigRational::zero);
    *e += c;
    if Zero::is_zero(e) {
        acc.remove(&id);
    }
}

impl HallBasis {
    pub fn new(colors: &[usize], max_depth: usize) -> Self {
        let mut colors = colors.to_vec();
        colors.sort_unstable();
        colors.dedup();
        let mut b = HallBasis { colors: colors.clone(), max_depth, nodes: vec![], degree: vec![], index: HashMap::new() };
        for c in colors {
            b.push(HallTree::Letter(c), 1);
        }
        for d in 2..=max_depth {
            let existing = b.nodes.len();
            for x in 0..existing {
                for y in 0..existing {
                    if b.degree[x] + b.degree[y] != d || b.cmp(x, y) != Ordering::Less {
                        continue;
                    }
                    let ok = match b.nodes[x] {
                        HallTree::Letter(_) => true,
                        HallTree::Pair(_, v) => b.cmp(v, y) != Ordering::Less,
                    };
                    if ok {
                        b.push(HallTree::Pair(x, y), d);
                    }
                }
            }
        }
        b
    }

    fn push(&mut self, t: HallTree, d: usize) {
        self.index.insert(t, self.nodes.len());
        self.nodes.push(t);
        self.degree.push(d);
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn node(&self, id: usize) -> HallTree {
        self.nodes[id]
    }

    pub fn degree(&self, id: usize) -> usize {
        self.degree[id]
    }

    pub fn letter(&self, color: usize) -> Result<usize> {
        self.index.get(&HallTree::Letter(color)).copied().ok_or_else(|| Error::Invalid(format!("no letter of color {color}")))
    }

    pub fn find(&self, t: HallTree) -> Option<usize> {
        self.index.get(&t).copied()
    }

    /// The Hall order.
    pub fn cmp(&self, a: usize, b: usize) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        match self.degree[b].cmp(&self.degree[a]) {
            Ordering::Equal => {}
            o => return o,
        }
        match (self.nodes[a], self.nodes[b]) {
            (HallTree::Letter(x), HallTree::Letter(y)) => x.cmp(&y),
            (HallTree::Pair(a1, a2), HallTree::Pair(b1, b2)) => self.cmp(a1, b1).then_with(|| self.cmp(a2, b2)),
            _ => unreachable!("letters only have degree 1"),
        }
    }

    pub fn name(&self, id: usize) -> String {
        match self.nodes[id] {
            HallTree::Letter(c) => format!("f{c}"),
            HallTree::Pair(x, y) => format!("[{},{}]", self.name(x), self.name(y)),
        }
    }

    /// `[h, k]` in the Hall basis.
    pub fn bracket(&self, h: usize, k: usize) -> Result<LieElement> {
        let d = self.degree[h] + self.degree[k];
        if d > self.max_depth {
            return Err(Error::DepthOverflow { depth: d, max: self.max_depth });
        }
        let mut out = LieElement::new();
        match self.cmp(h, k) {
            Ordering::Equal => {}
            Ordering::Greater => {
                for (id, c) in self.bracket(k, h)? {
                    lie_add(&mut out, id, -c);
                }
            }
            Ordering::Less => match self.nodes[h] {
                HallTree::Pair(h1, h2) if self.cmp(h2, k) == Ordering::Less => {
                    // [[h1,h2],k] = [[h1,k],h2] + [h1,[h2,k]]
                    for (id, c) in self.bracket(h1, k)? {
                        for (id2, c2) in self.bracket(id, h2)? {
                            lie_add(&mut out, id2, &c * &c2);
                        }
                    }
                    for (id, c) in self.bracket(h2, k)? {
                        for (id2, c2) in self.bracket(h1, id)? {
                            lie_add(&mut out, id2, &c * &c2);
                        }
                    }
                }
                _ => {
                    let id = self.find(HallTree::Pair(h, k)).expect("Hall tree within depth must be enumerated");
                    lie_add(&mut out, id, BigRational::one());
                }
            },
        }
        Ok(out)
    }

    pub fn bracket_elements(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        let mut out = LieElement::new();
        for (a, c) in x {
            for (b, d) in y {
                for (id, e) in self.bracket(*a, *b)? {
                    lie_add(&mut out, id, c * d * e);
                }
            }
        }
        Ok(out)
    }

    /// Left-normed bracket `[[f_{c₁}, f_{c₂}], …, f_{c_n}]`.
    pub fn left_normed(&self, colors: &[usize]) -> Result<LieElement> {
        let mut acc = LieElement::new();
        acc.insert(self.letter(colors[0])?, BigRational::one());
        for &c in &colors[1..] {
            let mut y = LieElement::new();
            y.insert(self.letter(c)?, BigRational::one());
            acc = self.bracket_elements(&acc, &y)?;
        }
        Ok(acc)
    }

    /// Expansion as an associative polynomial in the letters.
    pub fn expand(&self, id: usize) -> BTreeMap<Vec<usize>, BigInt> {
        match self.nodes[id] {
            HallTree::Letter(c) => BTreeMap::from([(vec![c], BigInt::one())]),
            HallTree::Pair(x, y) => commutator_poly(&self.expand(x), &self.expand(y)),
        }
    }

    pub fn expand_element(&self, x: &LieElement) -> BTreeMap<Vec<usize>, BigRational> {
        let mut out: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
        for (id, c) in x {
            for (w, k) in self.expand(*id) {
                let e = out.entry(w).or_insert_with(BigRational::zero);
                *e += c * BigRational::from_integer(k);
            }
        }
        out.retain(|_, c| !Zero::is_zero(c));
        out
    }
}

pub fn commutator_poly(a: &BTreeMap<Vec<usize>, BigInt>, b: &BTreeMap<Vec<usize>, BigInt>) -> BTreeMap<Vec<usize>, BigInt> {
    let mut out: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for (u, x) in a {
        for (v, y) in b {
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            *out.entry(uv).or_insert_with(BigInt::zero) += x * y;
            let mut vu = v.clone();
            vu.extend_from_slice(u);
            *out.entry(vu).or_insert_with(BigInt::zero) -= x * y;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `x[n]` for a Hall element `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopGen {
    pub hall: usize,
    pub mode: i64,
}

pub type LoopWord = Vec<LoopGen>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassicalElement {
    terms: BTreeMap<LoopWord, BigRational>,
}

impl ClassicalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: LoopWord) -> Self {
        Self::term(w, BigRational::one())
    }

    pub fn term(w: LoopWord, c: BigRational) -> Self {
        let mut x = Self::zero();
        x.add_term(w, c);
        x
    }

    pub fn add_term(&mut self, w: LoopWord, c: BigRational) {
        if Zero::is_zero(&c) {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if Zero::is_zero(e) {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LoopWord, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

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

    pub fn display(&self, basis: &HallBasis) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = w.iter().map(|g| format!("{}[{}]", basis.name(g.hall), g.mode)).collect();
                format!("({c}) {}", word.join(" "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Coefficient for ClassicalElement {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
    fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for LoopGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}[{}]", self.hall, self.mode)
    }
}

/// Form of a connected `W^Lie` block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockFactor {
    /// `Σ_σ [[f_{c₁}, f_{c_σ(2)}], …, f_{c_σ(n)}]⁺(t₁) / ∏_j (1 − t_{σ(j+1)}/t_{σ(j)})`
    /// over orderings `σ` of `2..=n` with `σ(1) = 1`. Agrees with direct
    /// projection.
    Chain,
    /// `[[f_{c₁}, f_{c₂}], …, f_{c_n}]⁺(t₁) / ∏_{k<n} (−1 + t_k/t_n)`. Already
    /// at two variables it misses the terms `[x, y][p] t₁^{−p}` coming from
    /// `x[p] y[0]`.
    Literal,
}

/// Separation and projection in `U(ñ₋ ⊗ ℂ[t, t⁻¹])`.
type Expansion = Vec<(LoopWord, BigRational)>;

pub struct ClassicalEngine {
    pub basis: HallBasis,
    plus_from: i64,
    cache: Mutex<HashMap<(LoopGen, LoopWord), Expansion>>,
}

impl ClassicalEngine {
    pub fn new(colors: &[usize], max_depth: usize) -> Self {
        Self::with_split(colors, max_depth, 1)
    }

    /// Engine whose positive part consists of the modes `≥ plus_from`.
    pub fn with_split(colors: &[usize], max_depth: usize, plus_from: i64) -> Self {
        ClassicalEngine { basis: HallBasis::new(colors, max_depth), plus_from, cache: Mutex::new(HashMap::new()) }
    }

    pub fn plus_from(&self) -> i64 {
        self.plus_from
    }

    /// PBW order: nonpositive modes first, then Hall order, then mode.
    fn key(&self, g: LoopGen) -> (bool, usize, i64) {
        (g.mode >= self.plus_from, self.rank(g.hall), g.mode)
    }

    fn rank(&self, id: usize) -> usize {
        (0..self.basis.len()).filter(|&o| self.basis.cmp(o, id) == Ordering::Less).count()
    }

    pub fn letter(&self, color: usize, mode: i64) -> Result<LoopGen> {
        Ok(LoopGen { hall: self.basis.letter(color)?, mode })
    }

    pub fn separate(&self, x: &ClassicalElement) -> Result<ClassicalElement> {
        let mut out = ClassicalElement::zero();
        for (w, c) in x.terms() {
            let mut acc: Vec<(LoopWord, BigRational)> = vec![(vec![], c.clone())];
            for &g in w.iter().rev() {
                let mut next = ClassicalElement::zero();
                for (v, d) in &acc {
                    for (u, e) in self.insert(g, v)? {
                        next.add_term(u, d * e);
                    }
                }
                acc = next.terms.into_iter().collect();
            }
            for (v, d) in acc {
                out.add_term(v, d);
            }
        }
        Ok(out)
    }

    fn insert(&self, g: LoopGen, w: &[LoopGen]) -> Result<Vec<(LoopWord, BigRational)>> {
        let key = (g, w.to_vec());
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let mut out = ClassicalElement::zero();
        match w.first() {
            Some(&h) if self.key(g) > self.key(h) => {
                // g h rest = h (g rest) + [g, h] rest
                for (u, c) in self.insert(g, &w[1..])? {
                    for (v, d) in self.insert(h, &u)? {
                        out.add_term(v, &c * &d);
                    }
                }
                for (id, c) in self.basis.bracket(g.hall, h.hall)? {
                    let b = LoopGen { hall: id, mode: g.mode + h.mode };
                    for (v, d) in self.insert(b, &w[1..])? {
                        out.add_term(v, &c * &d);
                    }
                }
            }
            _ => {
                let mut v = vec![g];
                v.extend_from_slice(w);
                out.add_term(v, BigRational::one());
            }
        }
        let v: Vec<(LoopWord, BigRational)> = out.terms.into_iter().collect();
        self.cache.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    pub fn project(&self, x: &ClassicalElement) -> Result<ClassicalElement> {
        let s = self.separate(x)?;
        Ok(ClassicalElement { terms: s.terms.into_iter().filter(|(w, _)| w.iter().all(|g| g.mode >= self.plus_from)).collect() })
    }

    /// Product in PBW form.
    pub fn mul(&self, a: &ClassicalElement, b: &ClassicalElement) -> Result<ClassicalElement> {
        self.separate(&a.concat(b))
    }

    /// `P(f_{c₁}(t₁) ⋯ f_{c_n}(t_n))`, exact up to the depth ceiling.
    pub fn direct_series(&self, colors: &[usize], vars: Vec<String>, ceiling: &[i64]) -> Result<NestedSeries<ClassicalElement>> {
        let n = colors.len();
        let floor = vec![self.plus_from; n];
        let window = ExponentWindow::new(floor.clone(), ceiling.to_vec());
        let mut out = NestedSeries::with_window(vars, window);
        if n == 0 {
            out = NestedSeries::polynomial(out.vars().to_vec(), [(vec![], ClassicalElement::word(vec![]))]);
            return Ok(out);
        }
        for d in depth_box(&floor, ceiling) {
            let e = exponent_from_depth(&d);
            let word: LoopWord = colors.iter().zip(&e).map(|(&c, &x)| self.letter(c, -x)).collect::<Result<_>>()?;
            let p = self.project(&ClassicalElement::word(word))?;
            out.add_term(e, p);
        }
        Ok(out)
    }

    /// `x⁺(t₁)` for a Lie element `x`, as a series in `n` variables.
    fn plus_current(&self, lie: &LieElement, vars: Vec<String>, ceiling: &[i64]) -> NestedSeries<ClassicalElement> {
        let n = vars.len();
        let mut cur = NestedSeries::with_window(vars, ExponentWindow::new(vec![self.plus_from; n], ceiling.to_vec()));
        for p in self.plus_from..=ceiling[0] {
            let mut e = vec![0; n];
            e[0] = -p;
            if !cur.window().within_ceiling(&depth(&e)) {
                continue;
            }
            let mut x = ClassicalElement::zero();
            for (id, c) in lie {
                x.add_term(vec![LoopGen { hall: *id, mode: p }], c.clone());
            }
            cur.add_term(e, x);
        }
        cur
    }

    /// `1 / (a·1 + b·t_i/t_j)` expanded in the region.
    fn inverse_binomial(vars: &[String], a: i64, b: i64, i: usize, j: usize, ceiling: &[i64]) -> Result<NestedSeries<QRational>> {
        let n = vars.len();
        let mut ratio = vec![0; n];
        ratio[i] += 1;
        ratio[j] -= 1;
        let den = NestedSeries::polynomial(vars.to_vec(), [(vec![0; n], QRational::from_int(a)), (ratio, QRational::from_int(b))]);
        expand_rational(&NestedSeries::one(vars.to_vec()), &den, ceiling)
    }

    /// One connected block of the partition sum, in its own variables.
    pub fn w_lie(&self, colors: &[usize], vars: Vec<String>, ceiling: &[i64], kind: BlockFactor) -> Result<NestedSeries<ClassicalElement>> {
        let n = colors.len();
        if n == 0 {
            return Err(Error::Invalid("empty block".into()));
        }
        let orders: Vec<Vec<usize>> = match kind {
            BlockFactor::Literal => vec![(0..n).collect()],
            BlockFactor::Chain => tail_orders(n),
        };
        let mut total: Option<NestedSeries<ClassicalElement>> = None;
        for order in orders {
            let ordered: Vec<usize> = order.iter().map(|&k| colors[k]).collect();
            let lie = self.basis.left_normed(&ordered)?;
            let cur = self.plus_current(&lie, vars.clone(), ceiling);
            let mut factor = NestedSeries::<QRational>::one(vars.clone());
            for j in 0..n - 1 {
                let geo = match kind {
                    BlockFactor::Literal => Self::inverse_binomial(&vars, -1, 1, j, n - 1, ceiling)?,
                    BlockFactor::Chain => Self::inverse_binomial(&vars, 1, -1, order[j + 1], order[j], ceiling)?,
                };
                factor = factor.mul(&geo)?;
            }
            let factor = factor.try_map(|c| c.at_one())?;
            let term = cur.mul_with(&factor, |x, c| x.scale(c))?;
            total = Some(match total {
                None => term,
                Some(t) => t.add(&term)?,
            });
        }
        Ok(total.expect("at least one order"))
    }

    /// Partition sum of `W^Lie` products over blocks with increasing minima.
    pub fn partition_series(&self, colors: &[usize], vars: Vec<String>, ceiling: &[i64], factor_kind: BlockFactor) -> Result<NestedSeries<ClassicalElement>> {
        let n = colors.len();
        let mut total: Option<NestedSeries<ClassicalElement>> = None;
        for blocks in set_partitions(n) {
            let mut prod: Option<NestedSeries<ClassicalElement>> = None;
            for block in &blocks {
                let bc: Vec<usize> = block.iter().map(|&i| colors[i]).collect();
                let bv: Vec<String> = block.iter().map(|&i| vars[i].clone()).collect();
                let bceil: Vec<i64> = sub_ceiling(ceiling, block);
                let s = self.w_lie(&bc, bv, &bceil, factor_kind)?.embed(&vars)?;
                let s = s.truncate(&ceiling.iter().map(|c| Some(*c)).collect::<Vec<_>>());
                prod = Some(match prod {
                    None => s,
                    Some(p) => p.try_mul_with(&s, |a, b| self.mul(a, b))?.truncate(&ceiling.iter().map(|c| Some(*c)).collect::<Vec<_>>()),
                });
            }
            let prod = prod.unwrap_or_else(|| NestedSeries::polynomial(vars.clone(), [(vec![0; n], ClassicalElement::word(vec![]))]));
            total = Some(match total {
                None => prod,
                Some(t) => t.add(&prod)?,
            });
        }
        Ok(total.expect("at least one partition"))
    }
}

/// Orderings of `0..n` starting with 0.
fn tail_orders(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0]];
    for _ in 1..n {
        let mut next = Vec::new();
        for o in out {
            for k in 1..n {
                if !o.contains(&k) {
                    let mut p = o.clone();
                    p.push(k);
                    next.push(p);
                }
            }
        }
        out = next;
    }
    out
}

/// Depth ceiling for a sub-list of variables: a monomial in the sub-list has
/// sub-depths equal to full depths at the chosen positions.
fn sub_ceiling(ceiling: &[i64], block: &[usize]) -> Vec<i64> {
    block.iter().map(|&i| ceiling[i]).collect()
}

/// All depth vectors `floor ≤ d ≤ ceiling`.
pub fn depth_box(floor: &[i64], ceiling: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for (f, c) in floor.iter().zip(ceiling) {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (*f..=*c).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Set partitions of `0..n` into blocks listed by increasing minimum.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for i in 0..n {
        let mut next = Vec::new();
        for p in out {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(i);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![i]);
            next.push(q);
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn hall_sizes_match_witt() {
        // Witt's formula on two letters: 2, 1, 2, 3, 6
        let b = HallBasis::new(&[1, 2], 5);
        let mut counts = [0; 6];
        for id in 0..b.len() {
            counts[b.degree(id)] += 1;
        }
        assert_eq!(&counts[1..], &[2, 1, 2, 3, 6]);
    }

    #[test]
    fn bracket_matches_commutator() {
        let b = HallBasis::new(&[1, 2], 4);
        for h in 0..b.len() {
            for k in 0..b.len() {
                if b.degree(h) + b.degree(k) > 4 {
                    assert!(b.bracket(h, k).is_err());
                    continue;
                }
                let lhs = b.expand_element(&b.bracket(h, k).unwrap());
                let rhs: BTreeMap<Vec<usize>, BigRational> = commutator_poly(&b.expand(h), &b.expand(k))
                    .into_iter()
                    .map(|(w, c)| (w, BigRational::from_integer(c)))
                    .collect();
                assert_eq!(lhs, rhs, "[{}, {}]", b.name(h), b.name(k));
            }
        }
    }

    #[test]
    fn separation_examples() {
        let e = ClassicalEngine::new(&[1, 2], 3);
        let f1 = |m| e.letter(1, m).unwrap();
        let f2 = |m| e.letter(2, m).unwrap();
        let f12 = e.basis.find(HallTree::Pair(e.basis.letter(1).unwrap(), e.basis.letter(2).unwrap())).unwrap();
        let s = e.separate(&ClassicalElement::word(vec![f1(2), f2(-1)])).unwrap();
        let mut expect = ClassicalElement::word(vec![f2(-1), f1(2)]);
        expect.add_term(vec![LoopGen { hall: f12, mode: 1 }], r(1));
        assert_eq!(s, expect);
        let p = e.project(&ClassicalElement::word(vec![f1(2), f2(-1)])).unwrap();
        assert_eq!(p, ClassicalElement::word(vec![LoopGen { hall: f12, mode: 1 }]));
        assert_eq!(e.project(&ClassicalElement::word(vec![f1(1), f2(1)])).unwrap(), ClassicalElement::word(vec![f1(1), f2(1)]));
        assert!(e.project(&ClassicalElement::word(vec![f1(0)])).unwrap().is_empty());
        let e1 = ClassicalEngine::new(&[1], 3);
        let g = |m| e1.letter(1, m).unwrap();
        assert_eq!(e1.separate(&ClassicalElement::word(vec![g(1), g(0)])).unwrap(), ClassicalElement::word(vec![g(0), g(1)]));
    }

    #[test]
    fn partitions_count() {
        assert_eq!(set_partitions(3).len(), 5);
        assert_eq!(set_partitions(0).len(), 1);
    }

    #[test]
    fn w_lie_examples() {
        let e = ClassicalEngine::new(&[1, 2], 3);
        let vars = vec!["t1".to_string(), "t2".to_string()];
        let s = e.w_lie(&[1, 2], vars.clone(), &[4, 4], BlockFactor::Chain).unwrap();
        let f12 = e.basis.find(HallTree::Pair(0, 1)).unwrap();
        assert_eq!(s.coefficient(&[-2, 1]).unwrap().unwrap(), &ClassicalElement::word(vec![LoopGen { hall: f12, mode: 1 }]));
        let e1 = ClassicalEngine::new(&[1], 3);
        assert!(e1.w_lie(&[1, 1], vars, &[4, 4], BlockFactor::Chain).unwrap().is_empty());
    }
}
