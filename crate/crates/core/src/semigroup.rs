//! Finite inverse semigroups held as Cayley and involution tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::partial_bijection::PartialBijection;
use crate::report::{ClauseCheck, ClauseKind, Report};

/// A finite semigroup with an involution, given by tables.
///
/// The constructor only checks table shapes; [`verify_inverse_semigroup`]
/// decides whether the data really is an inverse semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteInverseSemigroup {
    size: usize,
    product: Vec<usize>,
    star: Vec<usize>,
    unit: Option<usize>,
    zero: Option<usize>,
    labels: Option<Vec<String>>,
    words: Option<Vec<Vec<usize>>>,
}

impl FiniteInverseSemigroup {
    /// Builds from a square product table and a star table, detecting a unit
    /// and a zero when present.
    pub fn from_tables(product: Vec<Vec<usize>>, star: Vec<usize>) -> Result<Self> {
        let n = product.len();
        if n == 0 {
            return Err(Error::Input("semigroup must be nonempty".into()));
        }
        if star.len() != n {
            return Err(Error::Input(format!("star table has {} entries, expected {n}", star.len())));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in product.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Input(format!("product row {i} has {} entries, expected {n}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::Input(format!("product entry {x} out of range in row {i}")));
                }
            }
            flat.extend_from_slice(row);
        }
        if let Some(&x) = star.iter().find(|&&x| x >= n) {
            return Err(Error::Input(format!("star entry {x} out of range")));
        }
        Ok(Self::from_flat(n, flat, star))
    }

    fn from_flat(size: usize, product: Vec<usize>, star: Vec<usize>) -> Self {
        let mut s = FiniteInverseSemigroup { size, product, star, unit: None, zero: None, labels: None, words: None };
        s.unit = (0..size).find(|&e| (0..size).all(|x| s.mul(e, x) == x && s.mul(x, e) == x));
        s.zero = (0..size).find(|&z| (0..size).all(|x| s.mul(z, x) == z && s.mul(x, z) == z));
        s
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::Input(format!("{} labels for {} elements", labels.len(), self.size)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.size + b]
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    /// Product of a nonempty sequence.
    pub fn mul_all(&self, xs: &[usize]) -> usize {
        xs[1..].iter().fold(xs[0], |acc, &x| self.mul(acc, x))
    }

    #[inline]
    pub fn star(&self, a: usize) -> usize {
        self.star[a]
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn words(&self) -> Option<&[Vec<usize>]> {
        self.words.as_deref()
    }

    /// Display name: the label when present, else the index.
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn find_label(&self, name: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    pub fn product_table(&self) -> Vec<Vec<usize>> {
        self.product.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    /// `s s*`.
    pub fn range_idem(&self, s: usize) -> usize {
        self.mul(s, self.star(s))
    }

    /// `s* s`.
    pub fn domain_idem(&self, s: usize) -> usize {
        self.mul(self.star(s), s)
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.is_idempotent(a)).collect()
    }

    /// `s ≤ t` iff `s = t s* s`.
    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.mul(t, self.domain_idem(s)) == s
    }

    /// The natural order as a boolean matrix, `order[s][t] = s ≤ t`.
    pub fn natural_order(&self) -> Vec<Vec<bool>> {
        (0..self.size).map(|s| (0..self.size).map(|t| self.leq(s, t)).collect()).collect()
    }

    pub fn is_group(&self) -> bool {
        match self.unit {
            Some(e) => (0..self.size).all(|g| self.range_idem(g) == e && self.domain_idem(g) == e),
            None => false,
        }
    }

    /// The same semigroup with a fresh unit appended, unless one exists.
    pub fn adjoin_unit(&self) -> Self {
        if self.unit.is_some() {
            return self.clone();
        }
        let n = self.size;
        let m = n + 1;
        let mut product = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                product[a * m + b] = match (a == n, b == n) {
                    (true, _) => b,
                    (_, true) => a,
                    _ => self.mul(a, b),
                };
            }
        }
        let mut star = self.star.clone();
        star.push(n);
        let mut s = Self::from_flat(m, product, star);
        if let Some(l) = &self.labels {
            let mut l = l.clone();
            l.push("1".into());
            s.labels = Some(l);
        }
        s
    }

    /// The subsemigroup on `subset`, reindexed in ascending order, with the
    /// embedding into `self`.
    pub fn sub_semigroup(&self, subset: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.is_empty() {
            return Err(Error::Input("empty subset".into()));
        }
        let mut pos = vec![usize::MAX; self.size];
        for (i, &a) in elems.iter().enumerate() {
            if a >= self.size {
                return Err(Error::Input(format!("element {a} out of range")));
            }
            pos[a] = i;
        }
        let k = elems.len();
        let mut product = vec![0; k * k];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                let p = pos[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::NotClosed(format!(
                        "{}·{} = {} leaves the subset",
                        self.label(a),
                        self.label(b),
                        self.label(self.mul(a, b))
                    )));
                }
                product[i * k + j] = p;
            }
        }
        let mut star = Vec::with_capacity(k);
        for &a in &elems {
            let p = pos[self.star(a)];
            if p == usize::MAX {
                return Err(Error::NotClosed(format!("star of {} leaves the subset", self.label(a))));
            }
            star.push(p);
        }
        let mut s = Self::from_flat(k, product, star);
        if let Some(l) = &self.labels {
            s.labels = Some(elems.iter().map(|&a| l[a].clone()).collect());
        }
        Ok((s, elems))
    }

    /// The quotient by a partition given as `class_of`, classes numbered
    /// `0..num_classes`. The caller guarantees compatibility.
    pub(crate) fn quotient_unchecked(&self, class_of: &[usize], num_classes: usize) -> Self {
        let mut rep = vec![usize::MAX; num_classes];
        for (a, &c) in class_of.iter().enumerate() {
            if rep[c] == usize::MAX {
                rep[c] = a;
            }
        }
        let k = num_classes;
        let mut product = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                product[i * k + j] = class_of[self.mul(rep[i], rep[j])];
            }
        }
        let star = (0..k).map(|i| class_of[self.star(rep[i])]).collect();
        let mut q = Self::from_flat(k, product, star);
        q.labels = Some((0..k).map(|i| format!("[{}]", self.label(rep[i]))).collect());
        q
    }

    /// Whether every non-zero element lies under a unique maximal element.
    pub fn is_ftilde(&self) -> FTilde {
        if self.unit.is_none() {
            return FTilde::NotUnital;
        }
        let maximal: Vec<usize> =
            (0..self.size).filter(|&m| (0..self.size).all(|t| t == m || !self.leq(m, t))).collect();
        let mut majorant = vec![None; self.size];
        for t in 0..self.size {
            if Some(t) == self.zero {
                continue;
            }
            let above: Vec<usize> = maximal.iter().copied().filter(|&m| self.leq(t, m)).collect();
            if above.len() != 1 {
                return FTilde::No { witness: t, maximal_above: above };
            }
            majorant[t] = Some(above[0]);
        }
        FTilde::Yes { majorant, zero: self.zero }
    }

    /// The quotient by the minimum group congruence (`s ~ t` iff `es = et`
    /// for some idempotent `e`) and the projection onto it.
    pub fn max_group_image(&self) -> (Group, Vec<usize>) {
        let idem = self.idempotents();
        let mut uf = UnionFind::new(self.size);
        for s in 0..self.size {
            for t in s + 1..self.size {
                if idem.iter().any(|&e| self.mul(e, s) == self.mul(e, t)) {
                    uf.union(s, t);
                }
            }
        }
        let (class_of, k) = uf.canonical_classes();
        let q = self.quotient_unchecked(&class_of, k);
        (Group::new(q).expect("minimum group congruence yields a group"), class_of)
    }
}

/// Result of the F̃ test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FTilde {
    /// `majorant[t]` is the unique maximal element above `t`; the zero, when
    /// one exists, maps to `None`.
    Yes {
        majorant: Vec<Option<usize>>,
        zero: Option<usize>,
    },
    /// `witness` lies under `maximal_above.len() != 1` maximal elements.
    No {
        witness: usize,
        maximal_above: Vec<usize>,
    },
    NotUnital,
}

impl FTilde {
    pub fn holds(&self) -> bool {
        matches!(self, FTilde::Yes { .. })
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Classes numbered by their least element.
    pub(crate) fn canonical_classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut id = vec![usize::MAX; n];
        let mut class_of = vec![0; n];
        let mut k = 0;
        for a in 0..n {
            let r = self.find(a);
            if id[r] == usize::MAX {
                id[r] = k;
                k += 1;
            }
            class_of[a] = id[r];
        }
        (class_of, k)
    }
}

/// A finite group: an inverse semigroup whose idempotents reduce to the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    s: FiniteInverseSemigroup,
}

impl Group {
    pub fn new(s: FiniteInverseSemigroup) -> Result<Self> {
        if !s.is_group() {
            return Err(Error::Input("table is not a group".into()));
        }
        Ok(Group { s })
    }

    pub fn cyclic(n: usize) -> Self {
        Group { s: cyclic_group(n) }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn semigroup(&self) -> &FiniteInverseSemigroup {
        &self.s
    }

    pub fn into_semigroup(self) -> FiniteInverseSemigroup {
        self.s
    }

    pub fn order(&self) -> usize {
        self.s.size()
    }

    pub fn unit(&self) -> usize {
        self.s.unit().expect("groups are unital")
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.s.mul(a, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.s.star(a)
    }

    pub fn label(&self, a: usize) -> String {
        self.s.label(a)
    }
}

/// The cyclic group `Z_n` with elements `0..n` under addition.
pub fn cyclic_group(n: usize) -> FiniteInverseSemigroup {
    assert!(n >= 1, "cyclic group of order 0");
    let product = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    let star = (0..n).map(|a| (n - a) % n).collect();
    let mut s = FiniteInverseSemigroup::from_flat(n, product, star);
    s.labels = Some((0..n).map(|a| a.to_string()).collect());
    s
}

/// A semigroup enumerated from concrete elements, with the element list and
/// a reverse index.
#[derive(Clone, Debug)]
pub struct Generated<T: Ord> {
    pub semigroup: FiniteInverseSemigroup,
    pub elements: Vec<T>,
    index: BTreeMap<T, usize>,
}

impl<T: Ord + Clone> Generated<T> {
    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }
}

/// Closure of `gens` under `mul` and `star`, breadth-first over words in the
/// extended generators (the generators, then their stars). Elements are
/// indexed in shortlex order of their shortest words.
pub fn generate<T, M, S>(gens: &[T], mul: M, star: S, cap: usize) -> Result<Generated<T>>
where
    T: Clone + Ord,
    M: Fn(&T, &T) -> T,
    S: Fn(&T) -> T,
{
    if gens.is_empty() {
        return Err(Error::Input("no generators".into()));
    }
    let cap = cap.max(1);
    let mut ext: Vec<T> = Vec::new();
    for g in gens.iter().cloned().chain(gens.iter().map(&star)) {
        if !ext.contains(&g) {
            ext.push(g);
        }
    }
    let mut elements: Vec<T> = Vec::new();
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut index: BTreeMap<T, usize> = BTreeMap::new();
    for (k, g) in ext.iter().enumerate() {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
            words.push(vec![k]);
        }
    }
    if elements.len() > cap {
        return Err(Error::CapExceeded { cap, found: elements.len() });
    }
    // right[i][k] = elements[i] · ext[k]
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        let mut row = Vec::with_capacity(ext.len());
        for (k, g) in ext.iter().enumerate() {
            let y = mul(&elements[i], g);
            let j = match index.get(&y) {
                Some(&j) => j,
                None => {
                    let j = elements.len();
                    if j + 1 > cap {
                        return Err(Error::CapExceeded { cap, found: j + 1 });
                    }
                    let mut w = words[i].clone();
                    w.push(k);
                    index.insert(y.clone(), j);
                    elements.push(y);
                    words.push(w);
                    j
                }
            };
            row.push(j);
        }
        right.push(row);
        i += 1;
    }
    let n = elements.len();
    let mut product = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            product[a * n + b] = words[b].iter().fold(a, |x, &k| right[x][k]);
        }
    }
    let mut star_t = Vec::with_capacity(n);
    for x in &elements {
        let sx = star(x);
        let j = *index.get(&sx).ok_or_else(|| Error::NotClosed("star of an element left the closure".into()))?;
        star_t.push(j);
    }
    let mut s = FiniteInverseSemigroup::from_flat(n, product, star_t);
    s.words = Some(words);
    Ok(Generated { semigroup: s, elements, index })
}

/// Tables for a set already closed under `mul` and `star`, in the given order.
pub fn from_closed_set<T, M, S>(elements: Vec<T>, mul: M, star: S) -> Result<Generated<T>>
where
    T: Clone + Ord,
    M: Fn(&T, &T) -> T,
    S: Fn(&T) -> T,
{
    let n = elements.len();
    if n == 0 {
        return Err(Error::Input("empty element set".into()));
    }
    let mut index = BTreeMap::new();
    for (i, x) in elements.iter().enumerate() {
        if index.insert(x.clone(), i).is_some() {
            return Err(Error::Input("duplicate element".into()));
        }
    }
    let mut product = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            product[a * n + b] = *index
                .get(&mul(&elements[a], &elements[b]))
                .ok_or_else(|| Error::NotClosed(format!("product of elements {a} and {b}")))?;
        }
    }
    let star_t = elements
        .iter()
        .enumerate()
        .map(|(a, x)| index.get(&star(x)).copied().ok_or_else(|| Error::NotClosed(format!("star of element {a}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Generated { semigroup: FiniteInverseSemigroup::from_flat(n, product, star_t), elements, index })
}

/// The inverse semigroup generated by partial bijections of a common degree,
/// labelled by their tuples.
pub fn from_partial_bijections(gens: &[PartialBijection], cap: usize) -> Result<Generated<PartialBijection>> {
    let Some(first) = gens.first() else {
        return Err(Error::Input("no generators".into()));
    };
    if let Some(g) = gens.iter().find(|g| g.degree() != first.degree()) {
        return Err(Error::DegreeMismatch(first.degree(), g.degree()));
    }
    let mut g = generate(gens, |a, b| a.compose_unchecked(b), |a| a.star(), cap)?;
    g.semigroup.labels = Some(g.elements.iter().map(|x| x.to_string()).collect());
    Ok(g)
}

/// The symmetric inverse monoid on `{1..n}`, elements in lexicographic tuple
/// order.
pub fn symmetric_inverse_monoid(n: usize) -> Generated<PartialBijection> {
    let mut all = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, n: usize, cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<PartialBijection>) {
        if i == n {
            out.push(PartialBijection::new(cur.clone()).expect("injective by construction"));
            return;
        }
        for v in 0..=n as u32 {
            if v != 0 && used[v as usize] {
                continue;
            }
            cur[i] = v;
            if v != 0 {
                used[v as usize] = true;
            }
            rec(i + 1, n, cur, used, out);
            if v != 0 {
                used[v as usize] = false;
            }
        }
    }
    let mut used = vec![false; n + 1];
    rec(0, n, &mut cur, &mut used, &mut all);
    let mut g = from_closed_set(all, |a, b| a.compose_unchecked(b), |a| a.star()).expect("the full monoid is closed");
    g.semigroup.labels = Some(g.elements.iter().map(|x| x.to_string()).collect());
    g
}

/// Options for [`verify_inverse_semigroup`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Associativity is checked on all triples up to this size.
    pub exhaustive_limit: usize,
    /// Random triples checked above the limit.
    pub random_triples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { exhaustive_limit: 64, random_triples: 10_000, seed: 0 }
    }
}

/// Checks the inverse-semigroup axioms on a table.
pub fn verify_inverse_semigroup(s: &FiniteInverseSemigroup, opts: VerifyOptions) -> Report {
    let n = s.size();
    let l = |a: usize| s.label(a);
    let mut rep = Report::new("inverse semigroup");
    rep.value("size", n);

    let mut assoc = ClauseCheck::new("associativity", ClauseKind::Axiom);
    let mut triple = |a: usize, b: usize, c: usize| {
        assoc.check(s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c)), || {
            format!("({}·{})·{} != {}·({}·{})", l(a), l(b), l(c), l(a), l(b), l(c))
        });
    };
    if n <= opts.exhaustive_limit {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    triple(a, b, c);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.random_triples {
            triple(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        }
        rep.note(format!("associativity sampled on {} random triples", opts.random_triples));
    }
    rep.push(assoc.finish());

    let mut inv = ClauseCheck::new("star_involution", ClauseKind::Axiom);
    let mut reg = ClauseCheck::new("regularity", ClauseKind::Axiom);
    let mut uniq = ClauseCheck::new("unique_inverse", ClauseKind::Axiom);
    for a in 0..n {
        let a_s = s.star(a);
        inv.check(s.star(a_s) == a, || format!("star(star({})) != {}", l(a), l(a)));
        reg.check(s.mul3(a, a_s, a) == a && s.mul3(a_s, a, a_s) == a_s, || {
            format!("{} is not regular with respect to its star", l(a))
        });
        let inverses: Vec<usize> = (0..n).filter(|&t| s.mul3(a, t, a) == a && s.mul3(t, a, t) == t).collect();
        uniq.check(inverses.len() == 1, || {
            format!(
                "{} has {} inverses: {}",
                l(a),
                inverses.len(),
                inverses.iter().map(|&t| l(t)).collect::<Vec<_>>().join(", ")
            )
        });
    }
    rep.push(inv.finish());
    rep.push(reg.finish());
    rep.push(uniq.finish());

    let mut anti = ClauseCheck::new("star_reverses_products", ClauseKind::Derived);
    for a in 0..n {
        for b in 0..n {
            anti.check(s.star(s.mul(a, b)) == s.mul(s.star(b), s.star(a)), || {
                format!("star({}·{}) != star({})·star({})", l(a), l(b), l(b), l(a))
            });
        }
    }
    rep.push(anti.finish());

    let idem = s.idempotents();
    let mut comm = ClauseCheck::new("idempotents_commute", ClauseKind::Axiom);
    for (i, &e) in idem.iter().enumerate() {
        for &f in &idem[i + 1..] {
            comm.check(s.mul(e, f) == s.mul(f, e), || format!("{}·{} != {}·{}", l(e), l(f), l(f), l(e)));
        }
    }
    rep.push(comm.finish());
    rep.value("idempotents", idem.len());
    rep
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn pb(s: &str) -> PartialBijection {
        s.parse().unwrap()
    }

    pub(crate) fn example19() -> Generated<PartialBijection> {
        from_partial_bijections(&[pb("(1,4,5,0,0,0)"), pb("(0,5,4,0,0,6)")], 1000).unwrap()
    }

    /// Semilattice of subsets of `{1..k}` under intersection.
    pub(crate) fn subset_semilattice(k: usize) -> FiniteInverseSemigroup {
        let n = 1 << k;
        let product = (0..n * n).map(|x| (x / n) & (x % n)).collect();
        FiniteInverseSemigroup::from_flat(n, product, (0..n).collect())
    }

    #[test]
    fn closure_of_the_two_generators_has_19_elements() {
        let g = example19();
        assert_eq!(g.semigroup.size(), 19);
        assert!(verify_inverse_semigroup(&g.semigroup, VerifyOptions::default()).passed());
        assert_eq!(g.semigroup.unit(), None);
        assert_eq!(g.semigroup.zero(), g.index_of(&PartialBijection::empty(6)));
    }

    #[test]
    fn named_idempotents_of_the_example() {
        let g = example19();
        let r = pb("(1,4,5,0,0,0)");
        let s = pb("(0,5,4,0,0,6)");
        let sr = s.star().compose(&r).unwrap();
        let rs = r.compose(&s.star()).unwrap();
        let srsr = sr.compose(&sr).unwrap();
        let rsrs = rs.compose(&rs).unwrap();
        let sg = &g.semigroup;
        assert!(sg.is_idempotent(g.index_of(&srsr).unwrap()));
        assert!(sg.is_idempotent(g.index_of(&rsrs).unwrap()));
        assert!(!sg.is_idempotent(g.index_of(&sr).unwrap()));
    }

    #[test]
    fn single_idempotent_generates_one_element() {
        let g = from_partial_bijections(&[PartialBijection::identity(3)], 10).unwrap();
        assert_eq!(g.semigroup.size(), 1);
        assert_eq!(g.semigroup.unit(), Some(0));
    }

    #[test]
    fn cap_is_enforced() {
        let r = pb("(1,4,5,0,0,0)");
        let s = pb("(0,5,4,0,0,6)");
        let e = from_partial_bijections(&[r, s], 10).unwrap_err();
        assert!(matches!(e, Error::CapExceeded { cap: 10, .. }));
    }

    #[test]
    fn closure_of_a_group_is_the_group() {
        let perms: Vec<PartialBijection> = ["(2,3,1)", "(3,1,2)", "(1,2,3)"].iter().map(|t| pb(t)).collect();
        let g = from_partial_bijections(&perms, 100).unwrap();
        assert_eq!(g.semigroup.size(), 3);
        assert!(g.semigroup.is_group());
    }

    #[test]
    fn left_zero_semigroup_has_non_unique_inverses() {
        let s = FiniteInverseSemigroup::from_tables(vec![vec![0, 0], vec![1, 1]], vec![0, 1]).unwrap();
        let r = verify_inverse_semigroup(&s, VerifyOptions::default());
        assert!(!r.passed());
        assert!(!r.clause("unique_inverse").unwrap().passed);
        let one = FiniteInverseSemigroup::from_tables(vec![vec![0]], vec![0]).unwrap();
        assert!(verify_inverse_semigroup(&one, VerifyOptions::default()).passed());
    }

    #[test]
    fn table_shape_errors() {
        assert!(FiniteInverseSemigroup::from_tables(vec![vec![0, 1]], vec![0]).is_err());
        assert!(FiniteInverseSemigroup::from_tables(vec![vec![2]], vec![0]).is_err());
        assert!(FiniteInverseSemigroup::from_tables(vec![vec![0]], vec![1]).is_err());
    }

    #[test]
    fn group_idempotents_and_order() {
        let z = cyclic_group(5);
        assert_eq!(z.idempotents(), vec![0]);
        let ord = z.natural_order();
        for s in 0..5 {
            for t in 0..5 {
                assert_eq!(ord[s][t], s == t);
            }
        }
    }

    #[test]
    fn semilattice_order_is_divisibility() {
        let s = subset_semilattice(3);
        for f in 0..8 {
            for g in 0..8 {
                assert_eq!(s.leq(f, g), s.mul(f, g) == f);
            }
        }
    }

    #[test]
    fn ftilde_examples() {
        let z = cyclic_group(4);
        match z.is_ftilde() {
            FTilde::Yes { majorant, .. } => {
                assert_eq!(majorant, (0..4).map(Some).collect::<Vec<_>>())
            }
            other => panic!("{other:?}"),
        }
        let s = subset_semilattice(2);
        match s.is_ftilde() {
            FTilde::Yes { majorant, zero } => {
                assert_eq!(zero, Some(0));
                assert!(majorant[1..].iter().all(|m| *m == Some(3)));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(example19().semigroup.is_ftilde(), FTilde::NotUnital);
    }

    #[test]
    fn symmetric_inverse_monoid_sizes() {
        assert_eq!(symmetric_inverse_monoid(1).semigroup.size(), 2);
        let i2 = symmetric_inverse_monoid(2);
        assert_eq!(i2.semigroup.size(), 7);
        assert_eq!(i2.semigroup.idempotents().len(), 4);
        assert!(verify_inverse_semigroup(&i2.semigroup, VerifyOptions::default()).passed());
        assert_eq!(symmetric_inverse_monoid(3).semigroup.size(), 34);
    }

    #[test]
    fn adjoin_unit_behaviour() {
        let s = subset_semilattice(2);
        assert_eq!(s.adjoin_unit(), s);
        let g = example19();
        let u = g.semigroup.adjoin_unit();
        assert_eq!(u.size(), 20);
        assert_eq!(u.unit(), Some(19));
        assert!(verify_inverse_semigroup(&u, VerifyOptions::default()).passed());
        let z = cyclic_group(3);
        assert_eq!(z.adjoin_unit(), z);
        // A semilattice without a top element.
        let (bottomless, _) = subset_semilattice(2).sub_semigroup(&[0, 1, 2]).unwrap();
        assert_eq!(bottomless.unit(), None);
        assert_eq!(bottomless.adjoin_unit().size(), 4);
    }

    /// All group congruences of a small semigroup by brute force over
    /// partitions; returns the finest one.
    fn finest_group_congruence(s: &FiniteInverseSemigroup) -> Vec<usize> {
        let n = s.size();
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut labels = vec![0usize; n];
        fn rec(
            i: usize,
            max: usize,
            labels: &mut Vec<usize>,
            s: &FiniteInverseSemigroup,
            best: &mut Option<(usize, Vec<usize>)>,
        ) {
            let n = s.size();
            if i == n {
                let k = max;
                for a in 0..n {
                    for b in 0..n {
                        if labels[a] != labels[b] {
                            continue;
                        }
                        for r in 0..n {
                            if labels[s.mul(r, a)] != labels[s.mul(r, b)] || labels[s.mul(a, r)] != labels[s.mul(b, r)]
                            {
                                return;
                            }
                        }
                    }
                }
                let q = s.quotient_unchecked(labels, k);
                if q.is_group() && best.as_ref().is_none_or(|(bk, _)| k > *bk) {
                    *best = Some((k, labels.clone()));
                }
                return;
            }
            for c in 0..=max {
                labels[i] = c;
                rec(i + 1, if c == max { max + 1 } else { max }, labels, s, best);
            }
        }
        rec(0, 0, &mut labels, s, &mut best);
        best.unwrap().1
    }

    #[test]
    fn max_group_image_matches_brute_force() {
        let cases = [cyclic_group(4), subset_semilattice(2), symmetric_inverse_monoid(2).semigroup];
        for s in cases {
            let (g, proj) = s.max_group_image();
            let brute = finest_group_congruence(&s);
            for a in 0..s.size() {
                for b in 0..s.size() {
                    assert_eq!(proj[a] == proj[b], brute[a] == brute[b]);
                }
            }
            for a in 0..s.size() {
                for b in 0..s.size() {
                    assert_eq!(proj[s.mul(a, b)], g.mul(proj[a], proj[b]));
                }
            }
            for e in s.idempotents() {
                assert_eq!(proj[e], g.unit());
            }
        }
        let (g, _) = cyclic_group(4).max_group_image();
        assert_eq!(g.order(), 4);
        assert_eq!(subset_semilattice(3).max_group_image().0.order(), 1);
    }

    #[test]
    fn generate_is_idempotent_on_tables() {
        let g = example19();
        let s = &g.semigroup;
        let again = generate(&(0..s.size()).collect::<Vec<_>>(), |&a, &b| s.mul(a, b), |&a| s.star(a), 100).unwrap();
        assert_eq!(again.semigroup.size(), s.size());
        let map: Vec<usize> = again.elements.clone();
        for a in 0..s.size() {
            for b in 0..s.size() {
                assert_eq!(map[again.semigroup.mul(a, b)], s.mul(map[a], map[b]));
            }
        }
    }

    proptest! {
        #[test]
        fn order_and_star_laws_on_random_closures(
            imgs in proptest::collection::vec(proptest::collection::vec(0u32..5, 4), 1..3)
        ) {
            let gens: Vec<PartialBijection> = imgs
                .into_iter()
                .filter_map(|v| PartialBijection::new(v).ok())
                .collect();
            prop_assume!(!gens.is_empty());
            let g = from_partial_bijections(&gens, 500).unwrap();
            let s = &g.semigroup;
            prop_assert!(verify_inverse_semigroup(s, VerifyOptions::default()).passed());
            for a in 0..s.size() {
                for b in 0..s.size() {
                    prop_assert_eq!(s.star(s.mul(a, b)), s.mul(s.star(b), s.star(a)));
                    let via_tuple = g.elements[a].natural_leq(&g.elements[b]).unwrap();
                    prop_assert_eq!(s.leq(a, b), via_tuple);
                    if s.leq(a, b) {
                        if s.leq(b, a) { prop_assert_eq!(a, b); }
                        for r in 0..s.size() {
                            prop_assert!(s.leq(s.mul(r, a), s.mul(r, b)));
                            prop_assert!(s.leq(s.mul(a, r), s.mul(b, r)));
                        }
                    }
                }
            }
            let (_, proj) = s.max_group_image();
            let e = s.idempotents();
            for &f in &e { prop_assert_eq!(proj[f], proj[e[0]]); }
        }
    }
}
