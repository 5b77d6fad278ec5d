//! Untwisted affine root systems and the normal orderings generated by
//! periodic reduced words.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use crate::report::Report;

/// Generalized Cartan matrix of an untwisted affine type, indices `0..=r`.
///
/// Convention: `a[i][j] = ⟨α_i^∨, α_j⟩`, so `(α_i, α_j) = d_i a[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineCartanData {
    pub name: String,
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub marks: Vec<i64>,
}

/// A root in the basis of simple roots `α₀, …, α_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineRoot(pub Vec<i64>);

impl AffineRoot {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank + 1];
        v[i] = 1;
        AffineRoot(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Self {
        AffineRoot(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        AffineRoot(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, k: i64) -> Self {
        AffineRoot(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{i}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn finite_cartan(kind: char, r: usize) -> Result<(Vec<Vec<i64>>, Vec<i64>)> {
    let bad = || Error::Invalid(format!("unsupported finite type {kind}{r}"));
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let mut d = vec![1i64; r];
    match kind {
        'A' if r >= 1 => (1..r).for_each(|i| link(&mut a, i - 1, i)),
        'B' if r >= 2 => {
            (1..r).for_each(|i| link(&mut a, i - 1, i));
            // last root short
            a[r - 1][r - 2] = -2;
            d = vec![2; r];
            d[r - 1] = 1;
        }
        'C' if r >= 2 => {
            (1..r).for_each(|i| link(&mut a, i - 1, i));
            // last root long
            a[r - 2][r - 1] = -2;
            d[r - 1] = 2;
        }
        'D' if r >= 4 => {
            (1..r - 1).for_each(|i| link(&mut a, i - 1, i));
            link(&mut a, r - 3, r - 1);
        }
        'E' if (6..=8).contains(&r) => {
            // Bourbaki labels 1..r: 1-3-4-5-…, 2 attached to 4
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            (3..r).for_each(|i| link(&mut a, i - 1, i));
        }
        'F' if r == 4 => {
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[2][1] = -2;
            d = vec![2, 2, 1, 1];
        }
        'G' if r == 2 => {
            a[0][1] = -3;
            a[1][0] = -1;
            d = vec![1, 3];
        }
        _ => return Err(bad()),
    }
    Ok((a, d))
}

/// Positive roots of a finite root system by the string algorithm.
fn finite_positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    let pairing = |beta: &[i64], i: usize| -> i64 { (0..r).map(|j| a[i][j] * beta[j]).sum() };
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    all.extend(layer.iter().cloned());
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..r {
                // p = how far we can go down along α_i
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if down.iter().all(|&c| c >= 0) && all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    all.into_iter().collect()
}

impl AffineCartanData {
    /// Validates the axioms of an affine Cartan matrix with the given data.
    pub fn new(name: impl Into<String>, a: Vec<Vec<i64>>, d: Vec<i64>, marks: Vec<i64>) -> Result<Self> {
        let n = a.len();
        let bad = |m: &str| Err(Error::Invalid(format!("Cartan data: {m}")));
        if n < 2 || d.len() != n || marks.len() != n || a.iter().any(|row| row.len() != n) {
            return bad("dimension mismatch");
        }
        for i in 0..n {
            if a[i][i] != 2 || d[i] <= 0 || marks[i] <= 0 {
                return bad("diagonal, symmetrizer or mark");
            }
            for j in 0..n {
                if i != j && a[i][j] > 0 {
                    return bad("positive off-diagonal entry");
                }
                if d[i] * a[i][j] != d[j] * a[j][i] {
                    return bad("symmetrizer does not symmetrize");
                }
            }
        }
        if marks[0] != 1 {
            return bad("n₀ must be 1");
        }
        for (i, row) in a.iter().enumerate() {
            if row.iter().zip(&marks).map(|(x, m)| x * m).sum::<i64>() != 0 {
                return bad(&format!("δ not in the kernel at row {i}"));
            }
        }
        Ok(AffineCartanData { name: name.into(), a, d, marks })
    }

    /// Untwisted affinization of the finite type `kind` of rank `r`.
    pub fn untwisted(kind: char, r: usize) -> Result<Self> {
        let (fa, fd) = finite_cartan(kind, r)?;
        let roots = finite_positive_roots(&fa);
        let theta = roots.iter().max_by_key(|v| v.iter().sum::<i64>()).unwrap().clone();
        // (θ, α_j) = Σ_k θ_k d_k a_kj
        let theta_dot: Vec<i64> = (0..r).map(|j| (0..r).map(|k| theta[k] * fd[k] * fa[k][j]).sum()).collect();
        let theta_sq: i64 = (0..r).map(|j| theta[j] * theta_dot[j]).sum();
        let n = r + 1;
        let mut a = vec![vec![0i64; n]; n];
        a[0][0] = 2;
        for j in 0..r {
            a[0][j + 1] = -2 * theta_dot[j] / theta_sq;
            a[j + 1][0] = -(0..r).map(|k| fa[j][k] * theta[k]).sum::<i64>();
            for k in 0..r {
                a[j + 1][k + 1] = fa[j][k];
            }
        }
        let mut d = vec![theta_sq / 2];
        d.extend(fd);
        let mut marks = vec![1];
        marks.extend(theta);
        Self::new(format!("{kind}{r}~"), a, d, marks)
    }

    /// Parses names like `A1~`, `A2~`, `G2~`.
    pub fn from_name(s: &str) -> Result<Self> {
        let t = s.trim().trim_end_matches('~').trim_end_matches("^(1)");
        let mut chars = t.chars();
        let kind = chars.next().ok_or_else(|| Error::Parse(format!("empty type {s:?}")))?.to_ascii_uppercase();
        let r: usize = chars.as_str().parse().map_err(|_| Error::Parse(format!("bad type {s:?}")))?;
        Self::untwisted(kind, r)
    }

    pub fn rank(&self) -> usize {
        self.a.len() - 1
    }

    pub fn delta(&self) -> AffineRoot {
        AffineRoot(self.marks.clone())
    }

    pub fn simple(&self, i: usize) -> AffineRoot {
        AffineRoot::simple(self.rank(), i)
    }

    /// Symmetrized form `(γ, γ′)`.
    pub fn form(&self, x: &AffineRoot, y: &AffineRoot) -> i64 {
        let n = self.a.len();
        let mut s = 0;
        for i in 0..n {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x.0[i] * y.0[j] * self.d[i] * self.a[i][j];
            }
        }
        s
    }

    /// `⟨γ, α_i^∨⟩`.
    pub fn coroot_pairing(&self, x: &AffineRoot, i: usize) -> i64 {
        self.a[i].iter().zip(&x.0).map(|(a, c)| a * c).sum()
    }

    /// `s_i(γ) = γ − ⟨γ, α_i^∨⟩ α_i`.
    pub fn reflect(&self, i: usize, x: &AffineRoot) -> AffineRoot {
        let mut v = x.0.clone();
        v[i] -= self.coroot_pairing(x, i);
        AffineRoot(v)
    }

    pub fn is_real(&self, x: &AffineRoot) -> bool {
        self.form(x, x) > 0
    }

    pub fn is_imaginary(&self, x: &AffineRoot) -> bool {
        self.form(x, x) == 0 && x.0.iter().any(|&c| c != 0)
    }

    /// `k` when `x = kδ`.
    pub fn imaginary_multiple(&self, x: &AffineRoot) -> Option<i64> {
        let k = x.0[0];
        if k != 0 && x.0.iter().zip(&self.marks).all(|(c, m)| *c == k * m) {
            Some(k)
        } else {
            None
        }
    }

    /// Splits `x = β + mδ` with `β` in the span of `α₁, …, α_r`.
    pub fn split(&self, x: &AffineRoot) -> (Vec<i64>, i64) {
        let m = x.0[0];
        let beta = x.0.iter().zip(&self.marks).skip(1).map(|(c, n)| c - m * n).collect();
        (beta, m)
    }

    pub fn finite_positive_roots(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let fa: Vec<Vec<i64>> = (1..=r).map(|i| self.a[i][1..].to_vec()).collect();
        finite_positive_roots(&fa)
    }

    /// The affine root `β + mδ` for a finite root `β`.
    pub fn lift(&self, beta: &[i64], m: i64) -> AffineRoot {
        let mut v: Vec<i64> = self.marks.iter().map(|n| n * m).collect();
        for (k, b) in beta.iter().enumerate() {
            v[k + 1] += b;
        }
        AffineRoot(v)
    }
}

/// Section of the normal order: forward ladder, imaginary roots, backward ladder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OrderKey(pub u8, pub i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Circular {
    Precedes,
    Follows,
    Incomparable,
}

#[derive(Clone, Debug)]
pub struct NormalOrdering {
    pub cartan: AffineCartanData,
    word: Vec<usize>,
    forward: Vec<AffineRoot>,
    backward: Vec<AffineRoot>,
    keys: HashMap<AffineRoot, OrderKey>,
}

impl NormalOrdering {
    /// Builds the ordering for one period `i₀, …, i_{m−1}` of the word, with
    /// `count` roots on each ladder. Requires `i₀ = 0`.
    pub fn build(cartan: &AffineCartanData, word: &[usize], count: usize) -> Result<Self> {
        if word.first() != Some(&0) {
            return Err(Error::Invalid("the word must start with the affine index 0".into()));
        }
        let ord = Self::build_any(cartan, word, count)?;
        ord.check_translation()?;
        Ok(ord)
    }

    /// As [`build`](Self::build) without the `i₀ = 0` and translation checks;
    /// used for shifted sequences, whose period is a conjugate translation.
    pub fn build_any(cartan: &AffineCartanData, word: &[usize], count: usize) -> Result<Self> {
        if word.is_empty() || word.iter().any(|&i| i > cartan.rank()) {
            return Err(Error::Invalid(format!("bad word {word:?}")));
        }
        let mut ord = NormalOrdering { cartan: cartan.clone(), word: word.to_vec(), forward: vec![], backward: vec![], keys: HashMap::new() };
        for k in 1..=count as i64 {
            let mut g = cartan.simple(ord.index(k));
            for j in (1..k).rev() {
                g = cartan.reflect(ord.index(j), &g);
            }
            ord.insert(g, OrderKey(0, k))?;
        }
        for l in 0..count as i64 {
            let mut g = cartan.simple(ord.index(-l));
            for j in (1 - l)..=0 {
                g = cartan.reflect(ord.index(j), &g);
            }
            ord.insert(g, OrderKey(2, -l))?;
        }
        Ok(ord)
    }

    fn insert(&mut self, g: AffineRoot, key: OrderKey) -> Result<()> {
        if !g.is_positive() || self.keys.contains_key(&g) {
            return Err(Error::NonReduced(g.to_string()));
        }
        if key.0 == 0 {
            self.forward.push(g.clone());
        } else {
            self.backward.push(g.clone());
        }
        self.keys.insert(g, key);
        Ok(())
    }

    fn check_translation(&self) -> Result<()> {
        let c = &self.cartan;
        let delta = c.delta();
        for i in 1..=c.rank() {
            let mut g = c.simple(i);
            for &j in self.word.iter().rev() {
                g = c.reflect(j, &g);
            }
            // p(α_i) = α_i − k δ with k > 0
            let diff = AffineRoot(g.0.iter().zip(&c.simple(i).0).map(|(a, b)| b - a).collect());
            match c.imaginary_multiple(&diff) {
                Some(k) if k > 0 => {}
                _ if diff.0.iter().all(|&x| x == 0) => {
                    return Err(Error::NotTranslation(format!("p fixes a{i}")));
                }
                Some(_) => return Err(Error::NotTranslation(format!("(p, a{i}) ≤ 0"))),
                None => return Err(Error::NotTranslation(format!("p(a{i}) = {g} is not a{i} − kδ (δ = {delta})"))),
            }
        }
        Ok(())
    }

    /// `i_n` of the periodic extension.
    pub fn index(&self, n: i64) -> usize {
        self.word[n.rem_euclid(self.word.len() as i64) as usize]
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `γ₁, γ₂, …`.
    pub fn forward(&self) -> &[AffineRoot] {
        &self.forward
    }

    /// `γ₀, γ₋₁, …`.
    pub fn backward(&self) -> &[AffineRoot] {
        &self.backward
    }

    /// Position of a positive root in the normal order.
    pub fn key(&self, g: &AffineRoot) -> Result<OrderKey> {
        if let Some(k) = self.cartan.imaginary_multiple(g) {
            if k > 0 {
                return Ok(OrderKey(1, k));
            }
        }
        self.keys.get(g).copied().ok_or_else(|| Error::OutOfRange(g.to_string()))
    }

    pub fn compare(&self, x: &AffineRoot, y: &AffineRoot) -> Result<Ordering> {
        Ok(self.key(x)?.cmp(&self.key(y)?))
    }

    /// The circular order `≺_c` on all roots.
    pub fn circular_compare(&self, x: &AffineRoot, y: &AffineRoot) -> Result<Circular> {
        if self.circ_precedes(x, y)? {
            Ok(Circular::Precedes)
        } else if self.circ_precedes(y, x)? {
            Ok(Circular::Follows)
        } else {
            Ok(Circular::Incomparable)
        }
    }

    fn circ_precedes(&self, x: &AffineRoot, y: &AffineRoot) -> Result<bool> {
        let (xp, xa) = if x.is_positive() { (true, x.clone()) } else { (false, x.neg()) };
        let (yp, ya) = if y.is_positive() { (true, y.clone()) } else { (false, y.neg()) };
        let kx = self.key(&xa)?;
        let ky = self.key(&ya)?;
        // same sign: the normal order; opposite signs: reversed
        Ok(if xp == yp { kx < ky } else { ky < kx })
    }

    /// Swaps a forward and a backward root; only useful as a negative control.
    pub fn swap_ladder_entries(&mut self, forward_index: usize, backward_index: usize) {
        let f = self.forward[forward_index].clone();
        let b = self.backward[backward_index].clone();
        let kf = self.keys[&f];
        let kb = self.keys[&b];
        self.keys.insert(f.clone(), kb);
        self.keys.insert(b.clone(), kf);
        self.forward[forward_index] = b;
        self.backward[backward_index] = f;
    }

    /// Checks `lδ+α ≺ (m+1)δ ≺ (n+1)δ−β` for all instances of height ≤ `h`.
    pub fn verify_ord1(&self, h: i64) -> Report {
        let c = &self.cartan;
        let dh = c.delta().height();
        let fin = c.finite_positive_roots();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for beta in &fin {
            let bh: i64 = beta.iter().sum();
            for l in 0.. {
                if l * dh + bh > h {
                    break;
                }
                lower.push(c.lift(beta, l));
            }
            let neg: Vec<i64> = beta.iter().map(|x| -x).collect();
            for n in 1.. {
                if n * dh - bh > h {
                    break;
                }
                upper.push(c.lift(&neg, n));
            }
        }
        let imag: Vec<AffineRoot> = (1..).map(|m| c.delta().scaled(m)).take_while(|d| d.height() <= h).collect();
        let mut checked = 0;
        for d in &imag {
            for x in &lower {
                checked += 1;
                match self.compare(x, d) {
                    Ok(Ordering::Less) => {}
                    Ok(_) => return Report::fail(checked, format!("{x} does not precede {d}")),
                    Err(e) => return Report::fail(checked, e.to_string()),
                }
            }
            for y in &upper {
                checked += 1;
                match self.compare(d, y) {
                    Ok(Ordering::Less) => {}
                    Ok(_) => return Report::fail(checked, format!("{d} does not precede {y}")),
                    Err(e) => return Report::fail(checked, e.to_string()),
                }
            }
        }
        Report::pass(checked)
    }

    /// The element `s_{i₀} s_{i₋₁} ⋯ s_{i_{1−c}}` applied to a root.
    pub fn shift_map(&self, c: usize, x: &AffineRoot) -> AffineRoot {
        let mut g = x.clone();
        for j in (1 - c as i64)..=0 {
            g = self.cartan.reflect(self.index(j), &g);
        }
        g
    }

    /// Compares the order of the sequence `j_n = i_{n−c}` against the
    /// circular order of this one, on ladder indices `|n| ≤ bound` and
    /// imaginary roots of multiple ≤ 2.
    pub fn verify_shift_correspondence(&self, c: usize, bound: usize) -> Result<Report> {
        let m = self.word.len() as i64;
        let jword: Vec<usize> = (0..m).map(|k| self.index(k - c as i64)).collect();
        let shifted = NormalOrdering::build_any(&self.cartan, &jword, bound + 1)?;
        let base = NormalOrdering::build_any(&self.cartan, &self.word, bound + c + 2)?;
        let mut sample: Vec<AffineRoot> = shifted.forward.iter().chain(&shifted.backward).cloned().collect();
        for k in 1..=2 {
            sample.push(self.cartan.delta().scaled(k));
        }
        let images: Vec<AffineRoot> = sample.iter().map(|x| base.shift_map(c, x)).collect();
        let mut checked = 0;
        for (i, x) in sample.iter().enumerate() {
            for (j, y) in sample.iter().enumerate() {
                if i == j {
                    continue;
                }
                checked += 1;
                let lhs = shifted.compare(x, y)? == Ordering::Less;
                let rhs = base.circular_compare(&images[i], &images[j])? == Circular::Precedes;
                if lhs != rhs {
                    return Ok(Report::fail(
                        checked,
                        format!("{x} vs {y}: shifted order says {lhs}, circular order of {} vs {} says {rhs}", images[i], images[j]),
                    ));
                }
            }
        }
        Ok(Report::pass(checked))
    }
}

pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad word entry {t:?}")))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> AffineCartanData {
        AffineCartanData::from_name("A1~").unwrap()
    }

    #[test]
    fn affinization_matrices() {
        assert_eq!(a1().a, vec![vec![2, -2], vec![-2, 2]]);
        let a2 = AffineCartanData::from_name("A2~").unwrap();
        assert_eq!(a2.marks, vec![1, 1, 1]);
        let g2 = AffineCartanData::from_name("G2~").unwrap();
        assert_eq!(g2.marks, vec![1, 3, 2]);
        let c2 = AffineCartanData::from_name("C2~").unwrap();
        assert_eq!(c2.marks, vec![1, 2, 1]);
        let e8 = AffineCartanData::from_name("E8~").unwrap();
        assert_eq!(e8.marks.iter().sum::<i64>(), 30);
        let f4 = AffineCartanData::from_name("F4~").unwrap();
        assert_eq!(f4.marks.iter().sum::<i64>(), 12);
    }

    #[test]
    fn reflections() {
        let c = a1();
        assert_eq!(c.reflect(1, &c.simple(0)), AffineRoot(vec![1, 2]));
        assert_eq!(c.reflect(1, &c.simple(1)), AffineRoot(vec![0, -1]));
        assert_eq!(c.reflect(0, &c.delta()), c.delta());
    }

    #[test]
    fn a1_ladders() {
        let c = a1();
        let ord = NormalOrdering::build(&c, &[0, 1], 4).unwrap();
        let f: Vec<Vec<i64>> = ord.forward().iter().map(|r| r.0.clone()).collect();
        assert_eq!(f, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]);
        assert_eq!(ord.backward()[0], AffineRoot(vec![1, 0]));
        assert_eq!(ord.backward()[1], AffineRoot(vec![2, 1]));
        assert!(NormalOrdering::build(&c, &[0, 1], 0).unwrap().forward().is_empty());
    }

    #[test]
    fn non_translation_rejected() {
        let c = AffineCartanData::from_name("A2~").unwrap();
        assert!(matches!(NormalOrdering::build(&c, &[0, 1, 2], 3), Err(Error::NotTranslation(_))));
        assert!(NormalOrdering::build(&c, &[0, 1, 2, 1], 3).is_ok());
    }

    #[test]
    fn circular_examples() {
        let c = a1();
        let ord = NormalOrdering::build(&c, &[0, 1], 6).unwrap();
        let a = c.simple(1);
        let d = c.delta();
        assert_eq!(ord.circular_compare(&a, &d).unwrap(), Circular::Precedes);
        assert_eq!(ord.circular_compare(&d, &a.neg()).unwrap(), Circular::Precedes);
        assert_eq!(ord.circular_compare(&a, &a).unwrap(), Circular::Incomparable);
        assert_eq!(ord.circular_compare(&a, &a.neg()).unwrap(), Circular::Incomparable);
        assert!(ord.circular_compare(&AffineRoot(vec![40, 41]), &a).is_err());
    }

    #[test]
    fn ord1_and_shift() {
        let c = a1();
        let ord = NormalOrdering::build(&c, &[0, 1], 20).unwrap();
        assert!(ord.verify_ord1(8).passed());
        for k in 0..3 {
            let r = ord.verify_shift_correspondence(k, 6).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let a2 = AffineCartanData::from_name("A2~").unwrap();
        let ord = NormalOrdering::build(&a2, &[0, 1, 2, 1], 40).unwrap();
        let r = ord.verify_ord1(8);
        assert!(r.passed(), "{r:?}");
        for k in 1..3 {
            let r = ord.verify_shift_correspondence(k, 6).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let mut bad = NormalOrdering::build(&c, &[0, 1], 20).unwrap();
        bad.swap_ladder_entries(1, 1);
        assert!(!bad.verify_ord1(8).passed());
    }
}
