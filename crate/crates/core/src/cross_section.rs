//! Cross-sections `c: S/N → S` that fix idempotent classes and respect the
//! natural order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::congruence::{quotient_by, NormalClifford, Quotient};
use crate::error::{Error, Result};
use crate::report::{ClauseCheck, ClauseKind, Report};
use crate::semigroup::{FTilde, FiniteInverseSemigroup};

/// A choice of one element per class of `S/N`, indexed by class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossSection {
    reps: Vec<usize>,
}

impl CrossSection {
    /// Checks that each representative lies in its class.
    pub fn new(q: &Quotient, reps: Vec<usize>) -> Result<Self> {
        if reps.len() != q.congruence.num_classes() {
            return Err(Error::Input(format!(
                "{} representatives for {} classes",
                reps.len(),
                q.congruence.num_classes()
            )));
        }
        for (class, &a) in reps.iter().enumerate() {
            if a >= q.projection().len() || q.project(a) != class {
                return Err(Error::Input(format!("element {a} is not in class {class}")));
            }
        }
        Ok(CrossSection { reps })
    }

    pub fn get(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// The idempotent in each class, if any.
fn idempotent_of_class(s: &FiniteInverseSemigroup, q: &Quotient) -> Vec<Option<usize>> {
    q.congruence.classes().iter().map(|c| c.iter().copied().find(|&a| s.is_idempotent(a))).collect()
}

/// Verifies both clauses of order preservation; also records whether the
/// section happens to commute with the involution.
pub fn is_order_preserving(s: &FiniteInverseSemigroup, q: &Quotient, c: &CrossSection) -> Report {
    let mut rep = Report::new("order-preserving cross-section");
    let qs = &q.semigroup;
    let l = |a: usize| s.label(a);
    let mut fix = ClauseCheck::new("fixes_idempotent_classes", ClauseKind::Axiom);
    for (class, f) in idempotent_of_class(s, q).into_iter().enumerate() {
        if let Some(f) = f {
            fix.check(c.get(class) == f, || format!("class of idempotent {} is sent to {}", l(f), l(c.get(class))));
        }
    }
    rep.push(fix.finish());
    let mut ord = ClauseCheck::new("respects_order", ClauseKind::Axiom);
    for p in 0..qs.size() {
        for t in 0..qs.size() {
            if p != t && qs.leq(p, t) {
                ord.check(s.leq(c.get(p), c.get(t)), || {
                    format!("{} ≤ {} but {} is not below {}", qs.label(p), qs.label(t), l(c.get(p)), l(c.get(t)))
                });
            }
        }
    }
    rep.push(ord.finish());
    let star_ok = (0..qs.size()).all(|p| c.get(qs.star(p)) == s.star(c.get(p)));
    rep.value("respects_star", star_ok);
    rep
}

/// A class with upper bounds whose representatives admit no common
/// representative below them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub lower: usize,
    pub uppers: Vec<usize>,
}

impl Obstruction {
    pub fn describe(&self, q: &Quotient) -> String {
        let qs = &q.semigroup;
        let ups: Vec<String> =
            self.uppers.iter().map(|&u| format!("{} ≤ {}", qs.label(self.lower), qs.label(u))).collect();
        format!(
            "{}, but no representative of {} lies below representatives of all of them",
            ups.join(" and "),
            qs.label(self.lower)
        )
    }
}

/// Outcome of [`find_order_preserving`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectionSearch {
    Found(CrossSection),
    /// The search was exhausted. `obstructions` lists every local obstruction
    /// on one or two upper bounds.
    Exhausted {
        obstructions: Vec<Obstruction>,
    },
}

impl SectionSearch {
    pub fn section(&self) -> Option<&CrossSection> {
        match self {
            SectionSearch::Found(c) => Some(c),
            SectionSearch::Exhausted { .. } => None,
        }
    }
}

/// Backtracking search for an order-preserving cross-section.
///
/// Classes are visited from the top of the quotient order down; idempotent
/// classes are pinned to their idempotent. Deterministic: candidates are
/// tried in increasing element index.
pub fn find_order_preserving(s: &FiniteInverseSemigroup, n: &NormalClifford) -> (Quotient, SectionSearch) {
    let q = quotient_by(s, n);
    let result = search(s, &q);
    (q, result)
}

fn candidates(s: &FiniteInverseSemigroup, q: &Quotient) -> Vec<Vec<usize>> {
    idempotent_of_class(s, q)
        .into_iter()
        .enumerate()
        .map(|(class, f)| match f {
            Some(f) => vec![f],
            None => q.congruence.classes()[class].clone(),
        })
        .collect()
}

fn search(s: &FiniteInverseSemigroup, q: &Quotient) -> SectionSearch {
    let qs = &q.semigroup;
    let k = qs.size();
    let cand = candidates(s, q);
    let above: Vec<usize> = (0..k).map(|p| (0..k).filter(|&t| t != p && qs.leq(p, t)).count()).collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&p| (above[p], p));
    let mut assigned: Vec<Option<usize>> = vec![None; k];
    if backtrack(s, qs, &cand, &order, 0, &mut assigned) {
        let reps = assigned.into_iter().map(|x| x.expect("all assigned")).collect();
        return SectionSearch::Found(CrossSection { reps });
    }
    SectionSearch::Exhausted { obstructions: local_obstructions(s, qs, &cand) }
}

fn backtrack(
    s: &FiniteInverseSemigroup,
    qs: &FiniteInverseSemigroup,
    cand: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    assigned: &mut Vec<Option<usize>>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for &x in &cand[p] {
        let consistent = (0..qs.size()).all(|t| match assigned[t] {
            None => true,
            Some(y) => (!qs.leq(p, t) || s.leq(x, y)) && (!qs.leq(t, p) || s.leq(y, x)),
        });
        if consistent {
            assigned[p] = Some(x);
            if backtrack(s, qs, cand, order, depth + 1, assigned) {
                return true;
            }
            assigned[p] = None;
        }
    }
    false
}

fn local_obstructions(
    s: &FiniteInverseSemigroup,
    qs: &FiniteInverseSemigroup,
    cand: &[Vec<usize>],
) -> Vec<Obstruction> {
    let k = qs.size();
    let mut out = Vec::new();
    for p in 0..k {
        let ups: Vec<usize> = (0..k).filter(|&t| t != p && qs.leq(p, t)).collect();
        let mut single = Vec::new();
        for &t in &ups {
            let ok = cand[p].iter().any(|&x| cand[t].iter().any(|&y| s.leq(x, y)));
            if !ok {
                single.push(t);
                out.push(Obstruction { lower: p, uppers: vec![t] });
            }
        }
        for (i, &t1) in ups.iter().enumerate() {
            for &t2 in &ups[i + 1..] {
                if single.contains(&t1) || single.contains(&t2) {
                    continue;
                }
                let ok = cand[t1]
                    .iter()
                    .any(|&y1| cand[t2].iter().any(|&y2| cand[p].iter().any(|&x| s.leq(x, y1) && s.leq(x, y2))));
                if !ok {
                    out.push(Obstruction { lower: p, uppers: vec![t1, t2] });
                }
            }
        }
    }
    out
}

/// Extends a choice on the maximal classes of an F̃ quotient to a section:
/// `c(t) = c(m_t)·f` with `f` the idempotent of the class `t* t`, and the
/// zero class sent to its idempotent.
///
/// `choice` maps maximal classes to representatives; missing maximal classes
/// use their least element, and the unit class always uses the unit.
pub fn ftilde_cross_section(
    s: &FiniteInverseSemigroup,
    n: &NormalClifford,
    choice: &BTreeMap<usize, usize>,
) -> Result<(Quotient, CrossSection)> {
    let q = quotient_by(s, n);
    let qs = &q.semigroup;
    let unit = s.unit().ok_or_else(|| Error::NotFTilde("the semigroup has no unit".into()))?;
    let majorant = match qs.is_ftilde() {
        FTilde::Yes { majorant, .. } => majorant,
        FTilde::No { witness, maximal_above } => {
            return Err(Error::NotFTilde(format!(
                "{} lies under {} maximal elements",
                qs.label(witness),
                maximal_above.len()
            )))
        }
        FTilde::NotUnital => return Err(Error::NotFTilde("quotient has no unit".into())),
    };
    let idem = idempotent_of_class(s, &q);
    let unit_class = q.project(unit);
    let mut max_rep: BTreeMap<usize, usize> = BTreeMap::new();
    for t in 0..qs.size() {
        let Some(m) = majorant[t] else { continue };
        if max_rep.contains_key(&m) {
            continue;
        }
        let rep = if m == unit_class {
            if let Some(&x) = choice.get(&m) {
                if x != unit {
                    return Err(Error::Input("the unit class must be represented by the unit".into()));
                }
            }
            unit
        } else {
            match choice.get(&m) {
                Some(&x) => {
                    if q.project(x) != m {
                        return Err(Error::Input(format!("element {x} is not in maximal class {m}")));
                    }
                    x
                }
                None => q.congruence.representative(m),
            }
        };
        max_rep.insert(m, rep);
    }
    let mut reps = Vec::with_capacity(qs.size());
    for t in 0..qs.size() {
        let x = match majorant[t] {
            None => idem[t].ok_or_else(|| Error::NotFTilde("zero class has no idempotent".into()))?,
            Some(m) => {
                let f = idem[qs.domain_idem(t)].expect("idempotent classes contain an idempotent");
                s.mul(max_rep[&m], f)
            }
        };
        reps.push(x);
    }
    let c = CrossSection::new(&q, reps)?;
    let rep = is_order_preserving(s, &q, &c);
    if let Some(f) = rep.failures().next() {
        return Err(Error::NotOrderPreserving(f.witness.clone().unwrap_or_default()));
    }
    Ok((q, c))
}
