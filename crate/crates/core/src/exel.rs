//! The inverse semigroup `S(G)` of a finite group, in pair form `(P, s)`
//! with `{e, s} ⊆ P ⊆ G`.
//!
//! The canonical word `[g_1][g_1^-1]…[g_m][g_m^-1][s]` corresponds to
//! `P = {e, s, g_1, …, g_m}`. Products are `(P,s)(Q,t) = (P ∪ sQ, st)` and
//! the involution is `(P,s)* = (s⁻¹P, s⁻¹)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::semigroup::{from_closed_set, Generated, Group};

/// An element `(P, s)`; `P` is a bitmask over the group's element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExelElement {
    order: usize,
    s: usize,
    p: u64,
}

impl ExelElement {
    pub fn tail(&self) -> usize {
        self.s
    }

    pub fn mask(&self) -> u64 {
        self.p
    }

    pub fn set(&self) -> Vec<usize> {
        (0..self.order).filter(|&g| self.p >> g & 1 == 1).collect()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.p >> g & 1 == 1
    }

    pub fn is_idempotent_form(&self, unit: usize) -> bool {
        self.s == unit
    }
}

/// Largest `|S(G)|` that [`enumerate_sg`] will tabulate.
pub const SG_SIZE_GUARD: usize = 4096;

/// Arithmetic in `S(G)` for a fixed group.
#[derive(Clone, Debug)]
pub struct Exel {
    group: Group,
}

impl Exel {
    pub fn new(group: Group) -> Result<Self> {
        if group.order() > 64 {
            return Err(Error::SizeGuard { size: group.order(), limit: 64 });
        }
        Ok(Exel { group })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    fn e(&self) -> usize {
        self.group.unit()
    }

    /// Builds `(P, s)`, adding `e` and `s` to `P`.
    pub fn element(&self, p: &[usize], s: usize) -> Result<ExelElement> {
        let n = self.group.order();
        if s >= n {
            return Err(Error::Input(format!("group element {s} out of range")));
        }
        let mut mask = 1u64 << self.e() | 1u64 << s;
        for &g in p {
            if g >= n {
                return Err(Error::Input(format!("group element {g} out of range")));
            }
            mask |= 1 << g;
        }
        Ok(ExelElement { order: n, s, p: mask })
    }

    fn check(&self, x: &ExelElement) -> Result<()> {
        if x.order != self.group.order() {
            return Err(Error::CarrierMismatch);
        }
        Ok(())
    }

    pub fn unit(&self) -> ExelElement {
        ExelElement { order: self.group.order(), s: self.e(), p: 1 << self.e() }
    }

    /// The canonical image `({e, g}, g)` of a group element.
    pub fn embed(&self, g: usize) -> ExelElement {
        ExelElement { order: self.group.order(), s: g, p: 1 << self.e() | 1 << g }
    }

    fn translate(&self, g: usize, mask: u64) -> u64 {
        let mut out = 0u64;
        for h in 0..self.group.order() {
            if mask >> h & 1 == 1 {
                out |= 1 << self.group.mul(g, h);
            }
        }
        out
    }

    pub fn multiply(&self, x: &ExelElement, y: &ExelElement) -> Result<ExelElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    fn mul_unchecked(&self, x: &ExelElement, y: &ExelElement) -> ExelElement {
        ExelElement { order: x.order, s: self.group.mul(x.s, y.s), p: x.p | self.translate(x.s, y.p) }
    }

    pub fn star(&self, x: &ExelElement) -> Result<ExelElement> {
        self.check(x)?;
        Ok(self.star_unchecked(x))
    }

    fn star_unchecked(&self, x: &ExelElement) -> ExelElement {
        let si = self.group.inv(x.s);
        ExelElement { order: x.order, s: si, p: self.translate(si, x.p) }
    }

    fn name(&self, g: usize) -> String {
        if g == self.e() {
            "e".into()
        } else {
            self.group.label(g)
        }
    }

    /// `[g1][g1^-1]…[s]`, listing `P ∖ {e, s}` in index order.
    pub fn to_canonical_string(&self, x: &ExelElement) -> String {
        let mut out = String::new();
        for g in x.set() {
            if g == self.e() || g == x.s {
                continue;
            }
            out.push_str(&format!("[{}][{}^-1]", self.name(g), self.name(g)));
        }
        out.push_str(&format!("[{}]", self.name(x.s)));
        out
    }

    /// Product of two canonical words given as bracket lists and tails,
    /// evaluated with the displayed bracket formula rather than pair form.
    pub fn bracket_product(&self, gs: &[usize], s: usize, hs: &[usize], t: usize) -> (Vec<usize>, usize) {
        let mut brackets: Vec<usize> = gs.to_vec();
        brackets.push(s);
        brackets.extend(hs.iter().map(|&h| self.group.mul(s, h)));
        (brackets, self.group.mul(s, t))
    }

    /// Involution of a canonical word by the displayed bracket formula.
    pub fn bracket_star(&self, gs: &[usize], s: usize) -> (Vec<usize>, usize) {
        let si = self.group.inv(s);
        (gs.iter().rev().map(|&g| self.group.mul(si, g)).collect(), si)
    }
}

/// `|S(G)| = 2^{n-1} + (n-1)·2^{n-2}` for `|G| = n ≥ 2`.
pub fn sg_size(n: usize) -> usize {
    match n {
        0 => 0,
        1 => 1,
        _ => (1 << (n - 1)) + (n - 1) * (1 << (n - 2)),
    }
}

/// All of `S(G)`, ordered by tail then by mask, labelled canonically.
pub fn enumerate_sg(group: &Group) -> Result<Generated<ExelElement>> {
    let n = group.order();
    let size = sg_size(n);
    if n > 20 || size > SG_SIZE_GUARD {
        return Err(Error::SizeGuard { size, limit: SG_SIZE_GUARD });
    }
    let ex = Exel::new(group.clone())?;
    let e = group.unit();
    let mut elements = Vec::with_capacity(size);
    for s in 0..n {
        let fixed = 1u64 << e | 1u64 << s;
        for mask in 0u64..(1 << n) {
            if mask & fixed == fixed {
                elements.push(ExelElement { order: n, s, p: mask });
            }
        }
    }
    let mut g = from_closed_set(elements, |x, y| ex.mul_unchecked(x, y), |x| ex.star_unchecked(x))?;
    let labels = g.elements.iter().map(|x| ex.to_canonical_string(x)).collect();
    g.semigroup = g.semigroup.with_labels(labels)?;
    Ok(g)
}
