//! Idempotent-separating congruences and normal Clifford subsemigroups.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::report::{ClauseCheck, ClauseKind, Report};
use crate::semigroup::{FiniteInverseSemigroup, UnionFind};

/// A partition of the elements of a semigroup. Classes are sorted, and
/// numbered by their least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl Congruence {
    /// Validates that `classes` partition `0..size`, then canonicalizes.
    pub fn from_classes(size: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; size];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::Input(format!("class {c} is empty")));
            }
            for &a in class {
                if a >= size {
                    return Err(Error::Input(format!("element {a} out of range")));
                }
                if owner[a] != usize::MAX {
                    return Err(Error::Input(format!("element {a} appears in two classes")));
                }
                owner[a] = c;
            }
        }
        if let Some(a) = owner.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Input(format!("element {a} is in no class")));
        }
        Ok(Self::from_labels(&owner))
    }

    /// Builds from any labelling `element → label`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut uf = UnionFind::new(n);
        let mut first: alloc::collections::BTreeMap<usize, usize> = Default::default();
        for (a, &l) in labels.iter().enumerate() {
            match first.get(&l) {
                Some(&b) => uf.union(a, b),
                None => {
                    first.insert(l, a);
                }
            }
        }
        let (class_of, k) = uf.canonical_classes();
        let mut classes = vec![Vec::new(); k];
        for (a, &c) in class_of.iter().enumerate() {
            classes[c].push(a);
        }
        Congruence { classes, class_of }
    }

    pub fn identity(size: usize) -> Self {
        Congruence { classes: (0..size).map(|a| vec![a]).collect(), class_of: (0..size).collect() }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// The least element of a class.
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

/// Checks left and right compatibility exhaustively.
pub fn is_congruence(s: &FiniteInverseSemigroup, c: &Congruence) -> Report {
    let mut rep = Report::new("congruence");
    let mut shape = ClauseCheck::new("covers_elements", ClauseKind::Check);
    shape.check(c.class_of.len() == s.size(), || {
        format!("partition of {} elements for a semigroup of size {}", c.class_of.len(), s.size())
    });
    let shape_ok = !shape.failed();
    rep.push(shape.finish());
    if !shape_ok {
        return rep;
    }
    let mut left = ClauseCheck::new("left_compatible", ClauseKind::Axiom);
    let mut right = ClauseCheck::new("right_compatible", ClauseKind::Axiom);
    for class in &c.classes {
        let a = class[0];
        for &b in &class[1..] {
            for r in 0..s.size() {
                left.check(c.related(s.mul(r, a), s.mul(r, b)), || {
                    format!(
                        "{} ~ {} but {}·{} and {}·{} are not",
                        s.label(a),
                        s.label(b),
                        s.label(r),
                        s.label(a),
                        s.label(r),
                        s.label(b)
                    )
                });
                right.check(c.related(s.mul(a, r), s.mul(b, r)), || {
                    format!(
                        "{} ~ {} but {}·{} and {}·{} are not",
                        s.label(a),
                        s.label(b),
                        s.label(a),
                        s.label(r),
                        s.label(b),
                        s.label(r)
                    )
                });
            }
        }
    }
    rep.push(left.finish());
    rep.push(right.finish());
    rep.value("classes", c.num_classes());
    rep
}

/// No class contains two idempotents.
pub fn is_idempotent_separating(s: &FiniteInverseSemigroup, c: &Congruence) -> bool {
    c.classes.iter().all(|class| class.iter().filter(|&&a| s.is_idempotent(a)).count() <= 1)
}

/// The classes containing idempotents, in class order.
pub fn kernel_normal_system(s: &FiniteInverseSemigroup, c: &Congruence) -> Vec<Vec<usize>> {
    c.classes.iter().filter(|class| class.iter().any(|&a| s.is_idempotent(a))).cloned().collect()
}

/// Whether a kernel class is a group whose identity is its idempotent `f`:
/// every member `n` has `n n* = n* n = f`.
pub fn kernel_class_is_group(s: &FiniteInverseSemigroup, class: &[usize]) -> bool {
    let idem: Vec<usize> = class.iter().copied().filter(|&a| s.is_idempotent(a)).collect();
    if idem.len() != 1 {
        return false;
    }
    let f = idem[0];
    class.iter().all(|&n| s.range_idem(n) == f && s.domain_idem(n) == f && class.contains(&s.star(n)))
        && class.iter().all(|&a| class.iter().all(|&b| class.contains(&s.mul(a, b))))
}

/// A normal Clifford subsemigroup: contains every idempotent, is closed under
/// product, star and conjugation `n ↦ s n s*`, and satisfies `n n* = n* n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalClifford {
    elements: Vec<usize>,
    member: Vec<bool>,
}

impl NormalClifford {
    /// Validates `subset`, naming the first violated clause on failure.
    pub fn new(s: &FiniteInverseSemigroup, subset: &[usize]) -> Result<Self> {
        let rep = is_normal_clifford(s, subset);
        if let Some(c) = rep.failures().next() {
            return Err(Error::NotNormalClifford {
                clause: c.name.clone(),
                witness: c.witness.clone().unwrap_or_default(),
            });
        }
        Ok(Self::new_unchecked(s.size(), subset))
    }

    fn new_unchecked(size: usize, subset: &[usize]) -> Self {
        let mut member = vec![false; size];
        for &a in subset {
            member[a] = true;
        }
        let elements = (0..size).filter(|&a| member[a]).collect();
        NormalClifford { elements, member }
    }

    /// The idempotent semilattice, the smallest normal Clifford subsemigroup.
    pub fn idempotents(s: &FiniteInverseSemigroup) -> Self {
        Self::new_unchecked(s.size(), &s.idempotents())
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, a: usize) -> bool {
        self.member.get(a).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `[f] = {n ∈ N : n n* = f}`.
    pub fn kernel_class(&self, s: &FiniteInverseSemigroup, f: usize) -> Vec<usize> {
        self.elements.iter().copied().filter(|&n| s.range_idem(n) == f).collect()
    }
}

/// Checks each defining clause of a normal Clifford subsemigroup.
pub fn is_normal_clifford(s: &FiniteInverseSemigroup, subset: &[usize]) -> Report {
    let mut rep = Report::new("normal Clifford subsemigroup");
    let mut member = vec![false; s.size()];
    let mut range = ClauseCheck::new("indices_in_range", ClauseKind::Check);
    for &a in subset {
        if range.check(a < s.size(), || format!("index {a} out of range")) {
            member[a] = true;
        }
    }
    let range_ok = !range.failed();
    rep.push(range.finish());
    if !range_ok {
        return rep;
    }
    let elems: Vec<usize> = (0..s.size()).filter(|&a| member[a]).collect();
    let l = |a: usize| s.label(a);

    let mut idem = ClauseCheck::new("contains_idempotents", ClauseKind::Axiom);
    for f in s.idempotents() {
        idem.check(member[f], || format!("idempotent {} missing", l(f)));
    }
    rep.push(idem.finish());

    let mut prod = ClauseCheck::new("closed_under_product", ClauseKind::Axiom);
    for &a in &elems {
        for &b in &elems {
            prod.check(member[s.mul(a, b)], || format!("{}·{} = {} not in N", l(a), l(b), l(s.mul(a, b))));
        }
    }
    rep.push(prod.finish());

    let mut star = ClauseCheck::new("closed_under_star", ClauseKind::Axiom);
    for &a in &elems {
        star.check(member[s.star(a)], || format!("star({}) not in N", l(a)));
    }
    rep.push(star.finish());

    let mut conj = ClauseCheck::new("conjugation_closed", ClauseKind::Axiom);
    for t in 0..s.size() {
        for &n in &elems {
            let c = s.mul3(t, n, s.star(t));
            conj.check(member[c], || format!("{}·{}·{}* = {} not in N", l(t), l(n), l(t), l(c)));
        }
    }
    rep.push(conj.finish());

    let mut cliff = ClauseCheck::new("clifford", ClauseKind::Axiom);
    for &n in &elems {
        cliff.check(s.range_idem(n) == s.domain_idem(n), || format!("{} n* != n* n for n = {}", l(n), l(n)));
    }
    rep.push(cliff.finish());
    rep.value("size", elems.len());
    rep
}

/// `s ~ t` iff `s s* = t t* = f` and `s t*` lies in the kernel class `[f]`.
pub fn congruence_from_normal_clifford(s: &FiniteInverseSemigroup, n: &NormalClifford) -> Congruence {
    let size = s.size();
    let mut uf = UnionFind::new(size);
    for a in 0..size {
        for b in a + 1..size {
            let f = s.range_idem(a);
            if s.range_idem(b) != f {
                continue;
            }
            let ab = s.mul(a, s.star(b));
            if n.contains(ab) && s.range_idem(ab) == f {
                uf.union(a, b);
            }
        }
    }
    let (class_of, _) = uf.canonical_classes();
    Congruence::from_labels(&class_of)
}

/// The union of the kernel normal system of an idempotent-separating
/// congruence.
pub fn normal_clifford_from_congruence(s: &FiniteInverseSemigroup, c: &Congruence) -> Result<NormalClifford> {
    if !is_idempotent_separating(s, c) {
        return Err(Error::Input("congruence is not idempotent-separating".into()));
    }
    let union: Vec<usize> = kernel_normal_system(s, c).into_iter().flatten().collect();
    NormalClifford::new(s, &union)
}

/// The elements commuting with every idempotent; this is the largest normal
/// Clifford subsemigroup.
pub fn idempotent_centralizer(s: &FiniteInverseSemigroup) -> Vec<usize> {
    let idem = s.idempotents();
    (0..s.size()).filter(|&a| idem.iter().all(|&f| s.mul(a, f) == s.mul(f, a))).collect()
}

/// Default element count above which [`enumerate_normal_clifford`] refuses.
pub const NORMAL_CLIFFORD_GUARD: usize = 30;

/// Every normal Clifford subsemigroup, ordered by size then elements.
///
/// Starts from the idempotents and adjoins one Clifford element at a time,
/// closing under product, star and conjugation.
pub fn enumerate_normal_clifford(s: &FiniteInverseSemigroup, guard: usize) -> Result<Vec<NormalClifford>> {
    if s.size() > guard {
        return Err(Error::SizeGuard { size: s.size(), limit: guard });
    }
    let clifford: Vec<bool> = (0..s.size()).map(|a| s.range_idem(a) == s.domain_idem(a)).collect();
    let base = s.idempotents();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    if let Some(start) = normal_closure(s, &base, &clifford) {
        seen.insert(start.clone());
        queue.push_back(start);
    }
    while let Some(cur) = queue.pop_front() {
        for c in 0..s.size() {
            if !clifford[c] || cur.binary_search(&c).is_ok() {
                continue;
            }
            let mut gen = cur.clone();
            gen.push(c);
            if let Some(next) = normal_closure(s, &gen, &clifford) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let mut all: Vec<Vec<usize>> = seen.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(all.into_iter().map(|v| NormalClifford::new_unchecked(s.size(), &v)).collect())
}

/// Closure under product, star and conjugation; `None` once a non-Clifford
/// element appears.
fn normal_closure(s: &FiniteInverseSemigroup, gens: &[usize], clifford: &[bool]) -> Option<Vec<usize>> {
    let mut member = vec![false; s.size()];
    let mut elems = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let add = |a: usize, member: &mut Vec<bool>, elems: &mut Vec<usize>, stack: &mut Vec<usize>| -> bool {
        if !clifford[a] {
            return false;
        }
        if !member[a] {
            member[a] = true;
            elems.push(a);
            stack.push(a);
        }
        true
    };
    for &g in gens {
        if !add(g, &mut member, &mut elems, &mut stack) {
            return None;
        }
    }
    while let Some(a) = stack.pop() {
        if !add(s.star(a), &mut member, &mut elems, &mut stack) {
            return None;
        }
        for t in 0..s.size() {
            if !add(s.mul3(t, a, s.star(t)), &mut member, &mut elems, &mut stack) {
                return None;
            }
        }
        let snapshot = elems.clone();
        for b in snapshot {
            if !add(s.mul(a, b), &mut member, &mut elems, &mut stack)
                || !add(s.mul(b, a), &mut member, &mut elems, &mut stack)
            {
                return None;
            }
        }
    }
    elems.sort_unstable();
    Some(elems)
}

/// A quotient `S/N` with its congruence and projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub congruence: Congruence,
    pub semigroup: FiniteInverseSemigroup,
}

impl Quotient {
    pub fn project(&self, a: usize) -> usize {
        self.congruence.class_of(a)
    }

    pub fn projection(&self) -> &[usize] {
        self.congruence.class_map()
    }
}

/// The quotient semigroup; classes keep the congruence's numbering.
pub fn quotient(s: &FiniteInverseSemigroup, c: &Congruence) -> Result<Quotient> {
    let rep = is_congruence(s, c);
    if let Some(f) = rep.failures().next() {
        return Err(Error::Input(format!("not a congruence: {} ({})", f.name, f.witness.clone().unwrap_or_default())));
    }
    Ok(Quotient { semigroup: s.quotient_unchecked(c.class_map(), c.num_classes()), congruence: c.clone() })
}

/// `S/N` for a normal Clifford subsemigroup.
pub fn quotient_by(s: &FiniteInverseSemigroup, n: &NormalClifford) -> Quotient {
    let c = congruence_from_normal_clifford(s, n);
    Quotient { semigroup: s.quotient_unchecked(c.class_map(), c.num_classes()), congruence: c }
}

/// Human-readable listing of classes by their labels.
pub fn describe_classes(s: &FiniteInverseSemigroup, classes: &[Vec<usize>]) -> String {
    let parts: Vec<String> = classes
        .iter()
        .map(|c| {
            let names: Vec<String> = c.iter().map(|&a| s.label(a)).collect();
            format!("{{{}}}", names.join(", "))
        })
        .collect();
    parts.join(" ")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::partial_bijection::PartialBijection;
    use crate::semigroup::tests::{example19, pb, subset_semilattice};
    use crate::semigroup::{cyclic_group, symmetric_inverse_monoid, Generated};

    pub(crate) struct Ex19 {
        pub g: Generated<PartialBijection>,
        pub sr: usize,
        pub srsr: usize,
        pub rs: usize,
        pub rsrs: usize,
        pub r: usize,
        pub s: usize,
        pub ssr: usize,
    }

    pub(crate) fn ex19() -> Ex19 {
        let g = example19();
        let r = pb("(1,4,5,0,0,0)");
        let s = pb("(0,5,4,0,0,6)");
        let sr = s.star().compose(&r).unwrap();
        let rs = r.compose(&s.star()).unwrap();
        let ssr = s.compose(&s.star()).unwrap().compose(&r).unwrap();
        let ix = |x: &PartialBijection| g.index_of(x).unwrap();
        Ex19 {
            sr: ix(&sr),
            srsr: ix(&sr.compose(&sr).unwrap()),
            rs: ix(&rs),
            rsrs: ix(&rs.compose(&rs).unwrap()),
            r: ix(&r),
            s: ix(&s),
            ssr: ix(&ssr),
            g,
        }
    }

    /// The two kernel classes with every other element a singleton. Not a
    /// congruence: it splits `[ss*r]`.
    pub(crate) fn ex19_naive_partition(e: &Ex19) -> Congruence {
        let n = e.g.semigroup.size();
        let mut classes = vec![vec![e.sr, e.srsr], vec![e.rs, e.rsrs]];
        for a in 0..n {
            if ![e.sr, e.srsr, e.rs, e.rsrs].contains(&a) {
                classes.push(vec![a]);
            }
        }
        Congruence::from_classes(n, classes).unwrap()
    }

    /// The congruence determined by the kernel normal system.
    pub(crate) fn ex19_congruence(e: &Ex19) -> Congruence {
        congruence_from_normal_clifford(&e.g.semigroup, &ex19_kernel(e))
    }

    fn pb_index(e: &Ex19, t: &str) -> usize {
        e.g.index_of(&pb(t)).unwrap()
    }

    pub(crate) fn ex19_kernel(e: &Ex19) -> NormalClifford {
        let s = &e.g.semigroup;
        let mut k = s.idempotents();
        k.push(e.sr);
        k.push(e.rs);
        NormalClifford::new(s, &k).unwrap()
    }

    #[test]
    fn paper_partition_is_idempotent_separating() {
        let e = ex19();
        let s = &e.g.semigroup;
        assert!(!is_congruence(s, &ex19_naive_partition(&e)).passed());
        let c = ex19_congruence(&e);
        assert!(is_congruence(s, &c).passed());
        let nontrivial: Vec<&Vec<usize>> = c.classes().iter().filter(|k| k.len() > 1).collect();
        assert_eq!(nontrivial.len(), 4);
        assert!(nontrivial.iter().all(|k| k.len() == 2));
        assert_eq!(c.class_of(e.ssr), c.class_of(pb_index(&e, "(0,4,5,0,0,0)")));
        assert_eq!(c.class_of(e.ssr), c.class_of(pb_index(&e, "(0,5,4,0,0,0)")));
        assert!(is_idempotent_separating(s, &c));
        let kns = kernel_normal_system(s, &c);
        assert!(kns.contains(&{
            let mut v = vec![e.sr, e.srsr];
            v.sort();
            v
        }));
        assert!(kns.contains(&{
            let mut v = vec![e.rs, e.rsrs];
            v.sort();
            v
        }));
        let singletons = kns.iter().filter(|k| k.len() == 1).count();
        assert_eq!(singletons, s.idempotents().len() - 2);
        assert!(kns.iter().all(|k| kernel_class_is_group(s, k)));
    }

    #[test]
    fn kernel_union_reproduces_the_partition() {
        let e = ex19();
        let s = &e.g.semigroup;
        let n = ex19_kernel(&e);
        let c = congruence_from_normal_clifford(s, &n);
        assert_eq!(normal_clifford_from_congruence(s, &c).unwrap(), n);
        assert_eq!(kernel_normal_system(s, &c), kernel_normal_system(s, &ex19_naive_partition(&e)));
        let q = quotient_by(s, &n);
        assert_eq!(q.semigroup.size(), 15);
        assert_eq!(q.semigroup.idempotents().len(), s.idempotents().len());
    }

    #[test]
    fn trivial_partitions() {
        let s = subset_semilattice(1);
        let id = Congruence::identity(2);
        assert!(is_congruence(&s, &id).passed());
        assert!(is_idempotent_separating(&s, &id));
        let all = Congruence::from_classes(2, vec![vec![0, 1]]).unwrap();
        assert!(is_congruence(&s, &all).passed());
        assert!(!is_idempotent_separating(&s, &all));
        let kns = kernel_normal_system(&s, &id);
        assert_eq!(kns, vec![vec![0], vec![1]]);
    }

    #[test]
    fn malformed_partitions() {
        assert!(Congruence::from_classes(3, vec![vec![0, 1]]).is_err());
        assert!(Congruence::from_classes(2, vec![vec![0, 1], vec![1]]).is_err());
        assert!(Congruence::from_classes(2, vec![vec![0, 5], vec![1]]).is_err());
    }

    #[test]
    fn non_congruence_is_reported() {
        let z = cyclic_group(4);
        let bad = Congruence::from_classes(4, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        assert!(!is_congruence(&z, &bad).passed());
        assert!(quotient(&z, &bad).is_err());
    }

    #[test]
    fn group_cosets() {
        let z = cyclic_group(4);
        let n = NormalClifford::new(&z, &[0, 2]).unwrap();
        let c = congruence_from_normal_clifford(&z, &n);
        assert_eq!(c.classes(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(kernel_normal_system(&z, &c), vec![vec![0, 2]]);
        let q = quotient(&z, &c).unwrap();
        assert_eq!(q.semigroup.size(), 2);
        assert!(q.semigroup.is_group());
    }

    #[test]
    fn semilattice_kernel_is_trivial() {
        let s = subset_semilattice(2);
        let e = NormalClifford::idempotents(&s);
        assert_eq!(congruence_from_normal_clifford(&s, &e), Congruence::identity(4));
        let all = enumerate_normal_clifford(&s, NORMAL_CLIFFORD_GUARD).unwrap();
        assert_eq!(all, vec![e]);
    }

    #[test]
    fn group_normal_subgroups() {
        let z = cyclic_group(4);
        let all: Vec<Vec<usize>> =
            enumerate_normal_clifford(&z, 30).unwrap().into_iter().map(|n| n.elements().to_vec()).collect();
        assert_eq!(all, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn enumeration_of_the_example() {
        let e = ex19();
        let s = &e.g.semigroup;
        let all = enumerate_normal_clifford(s, 30).unwrap();
        assert_eq!(all[0], NormalClifford::idempotents(s));
        assert!(all.contains(&ex19_kernel(&e)));
        let max = all.last().unwrap();
        assert_eq!(max.elements(), idempotent_centralizer(s).as_slice());
        assert!(enumerate_normal_clifford(s, 10).is_err());
    }

    #[test]
    fn normal_clifford_errors_name_the_clause() {
        let i2 = symmetric_inverse_monoid(2);
        let s = &i2.semigroup;
        let swap = i2.index_of(&pb("(2,1)")).unwrap();
        let mut with_swap = s.idempotents();
        with_swap.push(swap);
        // The swap commutes with nothing but the extreme idempotents.
        match NormalClifford::new(s, &with_swap) {
            Err(Error::NotNormalClifford { clause, .. }) => assert_eq!(clause, "closed_under_product"),
            other => panic!("{other:?}"),
        }
        match NormalClifford::new(s, &[0]) {
            Err(Error::NotNormalClifford { clause, .. }) => assert_eq!(clause, "contains_idempotents"),
            other => panic!("{other:?}"),
        }
    }

    /// Exhaustive search over subsets containing E, for cross-checking the
    /// closure-based enumeration.
    fn brute_force_normal_clifford(s: &FiniteInverseSemigroup) -> Vec<Vec<usize>> {
        let idem = s.idempotents();
        let rest: Vec<usize> = (0..s.size()).filter(|a| !idem.contains(a)).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << rest.len()) {
            let mut sub = idem.clone();
            for (i, &a) in rest.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    sub.push(a);
                }
            }
            sub.sort();
            if is_normal_clifford(s, &sub).passed() {
                out.push(sub);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn enumeration_matches_brute_force_and_correspondence_round_trips() {
        let cases = vec![
            cyclic_group(6),
            symmetric_inverse_monoid(2).semigroup,
            crate::exel::enumerate_sg(&crate::semigroup::Group::cyclic(3)).unwrap().semigroup,
            ex19().g.semigroup,
        ];
        for s in cases {
            let fast: Vec<Vec<usize>> =
                enumerate_normal_clifford(&s, 30).unwrap().into_iter().map(|n| n.elements().to_vec()).collect();
            assert_eq!(fast, brute_force_normal_clifford(&s));
            for n in enumerate_normal_clifford(&s, 30).unwrap() {
                let c = congruence_from_normal_clifford(&s, &n);
                assert!(is_congruence(&s, &c).passed());
                assert!(is_idempotent_separating(&s, &c));
                assert_eq!(normal_clifford_from_congruence(&s, &c).unwrap(), n);
                for class in kernel_normal_system(&s, &c) {
                    assert!(kernel_class_is_group(&s, &class));
                }
                let q = quotient(&s, &c).unwrap();
                for a in 0..s.size() {
                    assert_eq!(q.project(s.star(a)), q.semigroup.star(q.project(a)));
                    for b in 0..s.size() {
                        if s.leq(a, b) {
                            assert!(q.semigroup.leq(q.project(a), q.project(b)));
                        }
                    }
                }
            }
        }
    }
}
