//! Twisted actions of inverse semigroups and groups on finite-dimensional
//! \*-algebras: Busby-Smith actions `(β, w)`, Green actions `(γ, τ)` and
//! twisted partial group actions `(α, u)`.
//!
//! Every identity is checked on the basis of the relevant ideal; by
//! linearity that is the same as checking it on all elements.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, BasisIdeal, FdStarAlgebra, PartialStarAutomorphism};
use crate::congruence::NormalClifford;
use crate::error::{Error, Result};
use crate::report::{ClauseCheck, ClauseKind, Report};
use crate::scalar::Scalar;
use crate::semigroup::{FiniteInverseSemigroup, Group};

mod construct;
mod equivalence;
mod fell;

pub(crate) use construct::require_busby;
pub use construct::{
    action_from_cross_section, exel_to_partial, green_canonical, green_to_busby, partial_to_exel,
    random_twisted_partial, semigroup_ideal, trivial_partial_action,
};
pub use equivalence::{
    cross_section_equivalence_witness, exterior_transform, green_section_witness, is_conjugacy,
    is_exterior_equivalence, witness_inverse, witness_product,
};
pub use fell::{fell_generated, FellElement, FellGenerated, FellSemigroup};

pub(crate) type Psa<F> = PartialStarAutomorphism<F>;

/// `(A, S, β, w)`; `w` is stored row-major, `w[r * |S| + s] = w_{r,s}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BusbySmithAction<F> {
    pub algebra: FdStarAlgebra<F>,
    pub semigroup: FiniteInverseSemigroup,
    /// `E_s` for every `s`.
    pub ideals: Vec<BasisIdeal>,
    /// `β_s : E_{s*} → E_s`.
    pub beta: Vec<Psa<F>>,
    pub w: Vec<AlgebraElement<F>>,
}

impl<F: Scalar> BusbySmithAction<F> {
    pub fn new(
        algebra: FdStarAlgebra<F>,
        semigroup: FiniteInverseSemigroup,
        ideals: Vec<BasisIdeal>,
        beta: Vec<Psa<F>>,
        w: Vec<AlgebraElement<F>>,
    ) -> Result<Self> {
        let n = semigroup.size();
        if ideals.len() != n || beta.len() != n || w.len() != n * n {
            return Err(Error::Input(format!(
                "action data for {n} elements has {} ideals, {} maps, {} cocycle values",
                ideals.len(),
                beta.len(),
                w.len()
            )));
        }
        if w.iter().any(|x| x.dim() != algebra.dim()) {
            return Err(Error::Input("cocycle value of the wrong dimension".into()));
        }
        Ok(BusbySmithAction { algebra, semigroup, ideals, beta, w })
    }

    /// The same maps with `w_{s,t} = 1_{E_{st}}`.
    pub fn trivially_twisted(
        algebra: FdStarAlgebra<F>,
        semigroup: FiniteInverseSemigroup,
        ideals: Vec<BasisIdeal>,
        beta: Vec<Psa<F>>,
    ) -> Result<Self> {
        let n = semigroup.size();
        if ideals.len() != n {
            return Err(Error::Input("one ideal per element expected".into()));
        }
        let units = ideal_units(&algebra, &ideals)?;
        let w = (0..n * n).map(|k| units[semigroup.mul(k / n, k % n)].clone()).collect();
        Self::new(algebra, semigroup, ideals, beta, w)
    }

    pub fn size(&self) -> usize {
        self.semigroup.size()
    }

    pub fn w(&self, r: usize, s: usize) -> &AlgebraElement<F> {
        &self.w[r * self.size() + s]
    }

    pub fn tol(&self) -> f64 {
        self.algebra.tol()
    }

    /// Field-by-field comparison within tolerance.
    pub fn approx_eq(&self, other: &Self) -> bool {
        let tol = self.tol();
        self.algebra == other.algebra
            && self.semigroup == other.semigroup
            && self.ideals == other.ideals
            && self.beta.iter().zip(&other.beta).all(|(a, b)| a.approx_eq(b, tol))
            && self.w.iter().zip(&other.w).all(|(a, b)| a.approx_eq(b, tol))
    }
}

/// `(A, S, N, γ, τ)`; `tau[n]` is `Some` exactly for `n ∈ N`.
#[derive(Clone, Debug, PartialEq)]
pub struct GreenAction<F> {
    pub algebra: FdStarAlgebra<F>,
    pub semigroup: FiniteInverseSemigroup,
    pub normal: NormalClifford,
    pub ideals: Vec<BasisIdeal>,
    /// `γ_s : E_{s*} → E_s`.
    pub gamma: Vec<Psa<F>>,
    pub tau: Vec<Option<AlgebraElement<F>>>,
}

impl<F: Scalar> GreenAction<F> {
    pub fn size(&self) -> usize {
        self.semigroup.size()
    }

    pub fn tau(&self, n: usize) -> Option<&AlgebraElement<F>> {
        self.tau.get(n).and_then(|t| t.as_ref())
    }
}

/// `(A, G, α, u)`; `u[r * |G| + s] = u_{r,s}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedPartialAction<F> {
    pub algebra: FdStarAlgebra<F>,
    pub group: Group,
    /// `D_g` for every `g`.
    pub ideals: Vec<BasisIdeal>,
    /// `α_g : D_{g⁻¹} → D_g`.
    pub alpha: Vec<Psa<F>>,
    pub u: Vec<AlgebraElement<F>>,
}

impl<F: Scalar> TwistedPartialAction<F> {
    pub fn u(&self, r: usize, s: usize) -> &AlgebraElement<F> {
        &self.u[r * self.group.order() + s]
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        let tol = self.algebra.tol();
        self.algebra == other.algebra
            && self.group == other.group
            && self.ideals == other.ideals
            && self.alpha.iter().zip(&other.alpha).all(|(a, b)| a.approx_eq(b, tol))
            && self.u.iter().zip(&other.u).all(|(a, b)| a.approx_eq(b, tol))
    }
}

pub(crate) fn ideal_units<F: Scalar>(alg: &FdStarAlgebra<F>, ideals: &[BasisIdeal]) -> Result<Vec<AlgebraElement<F>>> {
    ideals.iter().map(|e| alg.ideal_identity(e)).collect()
}

fn same<F: Scalar>(x: &Result<AlgebraElement<F>>, y: &Result<AlgebraElement<F>>, tol: f64) -> bool {
    matches!((x, y), (Ok(a), Ok(b)) if a.approx_eq(b, tol))
}

/// Shape, ideal, partial-automorphism and unitary checks shared by all three
/// kinds of action. `dom_of(s)` names the index whose ideal is the domain of
/// map `s`; `w_ideal(r, s)` the ideal a cocycle value must be unitary in.
struct Shape<'a, F> {
    alg: &'a FdStarAlgebra<F>,
    n: usize,
    ideals: &'a [BasisIdeal],
    maps: &'a [Psa<F>],
    cocycle: Option<&'a [AlgebraElement<F>]>,
    name: &'a dyn Fn(usize) -> String,
}

impl<F: Scalar> Shape<'_, F> {
    fn check(
        &self,
        rep: &mut Report,
        dom_of: impl Fn(usize) -> usize,
        w_ideal: impl Fn(usize, usize) -> BasisIdeal,
    ) -> bool {
        let n = self.n;
        let ok_len = self.ideals.len() == n && self.maps.len() == n && self.cocycle.is_none_or(|w| w.len() == n * n);
        rep.assert("shape", ClauseKind::Check, ok_len, || {
            format!("{} ideals and {} maps for {n} elements", self.ideals.len(), self.maps.len())
        });
        if !ok_len {
            return false;
        }
        let mut ideals = ClauseCheck::new("ideals_two_sided_star_closed", ClauseKind::Check);
        for (s, e) in self.ideals.iter().enumerate() {
            let r = e.verify(self.alg);
            ideals.check(r.passed(), || format!("E_{} is not an ideal", (self.name)(s)));
        }
        rep.push(ideals.finish());
        if !rep.passed() {
            return false;
        }
        let mut maps = ClauseCheck::new("partial_automorphisms", ClauseKind::Check);
        for (s, b) in self.maps.iter().enumerate() {
            let ends = b.domain() == &self.ideals[dom_of(s)] && b.range() == &self.ideals[s];
            maps.check(ends && b.verify(self.alg).passed(), || {
                format!("map at {} is not a *-isomorphism between the right ideals", (self.name)(s))
            });
        }
        rep.push(maps.finish());
        if let Some(w) = self.cocycle {
            let mut unit = ClauseCheck::new("cocycle_unitary", ClauseKind::Check);
            for r in 0..n {
                for s in 0..n {
                    let e = w_ideal(r, s);
                    unit.check(self.alg.is_unitary_multiplier(&w[r * n + s], &e), || {
                        format!("value at ({}, {}) is not a unitary multiplier", (self.name)(r), (self.name)(s))
                    });
                }
            }
            rep.push(unit.finish());
        }
        rep.passed()
    }
}

/// Checks the four defining clauses and the eleven derived identities.
pub fn verify_busby_smith<F: Scalar>(act: &BusbySmithAction<F>) -> Report {
    let mut rep = Report::new("Busby-Smith twisted action");
    let alg = &act.algebra;
    let s = &act.semigroup;
    let n = s.size();
    let tol = alg.tol();
    let l = |x: usize| s.label(x);
    let Some(e) = s.unit() else {
        rep.assert("unital", ClauseKind::Check, false, || "semigroup has no unit".into());
        return rep;
    };
    let shape = Shape { alg, n, ideals: &act.ideals, maps: &act.beta, cocycle: Some(&act.w), name: &l };
    if !shape.check(&mut rep, |x| s.star(x), |r, t| act.ideals[s.mul(r, t)].clone()) {
        return rep;
    }
    let units = ideal_units(alg, &act.ideals).expect("ideals passed the unitary check");
    let inv: Vec<Psa<F>> = act.beta.iter().map(|b| b.inverse(tol).expect("bijective")).collect();
    let w = |r: usize, t: usize| act.w(r, t);
    let ws: Vec<AlgebraElement<F>> = act.w.iter().map(|x| alg.star(x)).collect();
    let wst = |r: usize, t: usize| &ws[r * n + t];
    let beta = |r: usize, x: &AlgebraElement<F>| act.beta[r].apply(x, tol);
    let basis = |i: &BasisIdeal| i.indices().iter().map(|&k| alg.basis(k)).collect::<Vec<_>>();

    rep.assert(
        "def_a_unit_ideal_is_everything",
        ClauseKind::Axiom,
        act.ideals[e] == BasisIdeal::full(alg.dim()),
        || format!("E_{} has {} of {} basis elements", l(e), act.ideals[e].len(), alg.dim()),
    );

    let mut b = ClauseCheck::new("def_b_beta_composition", ClauseKind::Axiom);
    for x in 0..n {
        for y in 0..n {
            let xy = s.mul(x, y);
            let dom_ok =
                matches!(act.beta[x].compose(&act.beta[y], alg), Ok(c) if c.domain() == &act.ideals[s.star(xy)]);
            if !b.check(dom_ok, || format!("dom(β_{}β_{}) ≠ E_{}", l(x), l(y), l(s.star(xy)))) {
                continue;
            }
            for a in basis(&act.ideals[s.star(xy)]) {
                let lhs = beta(y, &a).and_then(|v| beta(x, &v));
                let rhs = beta(xy, &a).map(|v| alg.mul3(w(x, y), &v, wst(x, y)));
                if !b.check(same(&lhs, &rhs, tol), || format!("β_{}β_{} ≠ Ad w∘β_{}", l(x), l(y), l(xy))) {
                    break;
                }
            }
        }
    }
    rep.push(b.finish());

    let mut c = ClauseCheck::new("def_c_trivial_on_idempotents", ClauseKind::Axiom);
    for x in 0..n {
        for y in 0..n {
            if s.is_idempotent(x) || s.is_idempotent(y) {
                c.check(w(x, y).approx_eq(&units[s.mul(x, y)], tol), || format!("w_{{{},{}}} ≠ 1", l(x), l(y)));
            }
        }
    }
    rep.push(c.finish());

    let mut d = ClauseCheck::new("def_d_cocycle", ClauseKind::Axiom);
    let mut f = ClauseCheck::new("lemma_f", ClauseKind::Derived);
    let mut g = ClauseCheck::new("lemma_g", ClauseKind::Derived);
    let mut h = ClauseCheck::new("lemma_h", ClauseKind::Derived);
    for r in 0..n {
        for x in 0..n {
            for y in 0..n {
                let xy = s.mul(x, y);
                let rx = s.mul(r, x);
                let meet = act.ideals[s.star(r)].intersect(&act.ideals[xy]);
                for a in basis(&meet) {
                    let ba = beta(r, &a);
                    let lhs = beta(r, &alg.mul(&a, w(x, y))).map(|v| alg.mul(&v, w(r, xy)));
                    let rhs = ba.clone().map(|v| alg.mul3(&v, w(r, x), w(rx, y)));
                    d.check(same(&lhs, &rhs, tol), || format!("fails at r={}, s={}, t={}", l(r), l(x), l(y)));
                    let lhs = beta(r, &alg.mul(&a, wst(x, y)));
                    let rhs = ba.clone().map(|v| alg.mul(&alg.mul3(&v, w(r, xy), wst(rx, y)), wst(r, x)));
                    f.check(same(&lhs, &rhs, tol), || format!("fails at r={}, s={}, t={}", l(r), l(x), l(y)));
                    let lhs = beta(r, &alg.mul(w(x, y), &a));
                    let rhs = ba.clone().map(|v| alg.mul(&alg.mul3(w(r, x), w(rx, y), wst(r, xy)), &v));
                    g.check(same(&lhs, &rhs, tol), || format!("fails at r={}, s={}, t={}", l(r), l(x), l(y)));
                    let lhs = beta(r, &alg.mul(wst(x, y), &a));
                    let rhs = ba.map(|v| alg.mul(&alg.mul3(w(r, xy), wst(rx, y), wst(r, x)), &v));
                    h.check(same(&lhs, &rhs, tol), || format!("fails at r={}, s={}, t={}", l(r), l(x), l(y)));
                }
            }
        }
    }
    rep.push(d.finish());

    let mut la = ClauseCheck::new("lemma_a", ClauseKind::Derived);
    let mut lb = ClauseCheck::new("lemma_b", ClauseKind::Derived);
    let mut ld = ClauseCheck::new("lemma_d", ClauseKind::Derived);
    let mut lk = ClauseCheck::new("lemma_k", ClauseKind::Derived);
    for x in 0..n {
        let xx = s.range_idem(x);
        la.check(act.ideals[x] == act.ideals[xx], || format!("E_{} ≠ E_{}", l(x), l(xx)));
        lb.check(act.beta[xx].approx_eq(&Psa::identity(&act.ideals[x]), tol), || {
            format!("β_{} is not the identity of E_{}", l(xx), l(x))
        });
        let xs = s.star(x);
        for a in basis(&act.ideals[x]) {
            let lhs = beta(xs, &a);
            let rhs = inv[x].apply(&a, tol).map(|v| alg.mul3(w(xs, x), &v, wst(xs, x)));
            if !ld.check(same(&lhs, &rhs, tol), || format!("β_{}* ≠ Ad w∘β⁻¹ at s={}", l(x), l(x))) {
                break;
            }
        }
        let lhs = beta(x, w(xs, x));
        lk.check(same(&lhs, &Ok(w(x, xs).clone()), tol), || format!("β_s(w_{{s*,s}}) ≠ w_{{s,s*}} at s={}", l(x)));
    }
    rep.push(la.finish());
    rep.push(lb.finish());
    rep.assert("lemma_c", ClauseKind::Derived, act.beta[e].approx_eq(&Psa::identity(&act.ideals[e]), tol), || {
        "β_e is not the identity".into()
    });
    rep.push(ld.finish());

    let mut le = ClauseCheck::new("lemma_e", ClauseKind::Derived);
    let mut li = ClauseCheck::new("lemma_i", ClauseKind::Derived);
    let mut lj = ClauseCheck::new("lemma_j", ClauseKind::Derived);
    for r in 0..n {
        for x in 0..n {
            let meet = act.ideals[s.star(r)].intersect(&act.ideals[x]);
            let img = act.beta[r].image(alg, &meet);
            le.check(matches!(&img, Ok(i) if i == &act.ideals[s.mul(r, x)]), || {
                format!("β_{}(E_{}* E_{}) ≠ E_{}", l(r), l(r), l(x), l(s.mul(r, x)))
            });
            let xs = s.star(x);
            let rs = s.star(r);
            let lhs_i = w(s.mul3(xs, rs, r), x);
            let rhs = w(xs, s.mul3(rs, r, x));
            li.check(lhs_i.approx_eq(rhs, tol), || format!("fails at r={}, s={}", l(r), l(x)));
            let lhs_j = alg.mul(w(xs, x), &units[s.mul(xs, rs)]);
            lj.check(lhs_j.approx_eq(rhs, tol), || format!("fails at r={}, s={}", l(r), l(x)));
        }
    }
    rep.push(le.finish());
    rep.push(f.finish());
    rep.push(g.finish());
    rep.push(h.finish());
    rep.push(li.finish());
    rep.push(lj.finish());
    rep.push(lk.finish());
    rep
}

/// Checks the Green axioms, including that `γ` is a homomorphism.
pub fn verify_green<F: Scalar>(act: &GreenAction<F>) -> Report {
    let mut rep = Report::new("Green twisted action");
    let alg = &act.algebra;
    let s = &act.semigroup;
    let n = s.size();
    let tol = alg.tol();
    let l = |x: usize| s.label(x);
    let Some(e) = s.unit() else {
        rep.assert("unital", ClauseKind::Check, false, || "semigroup has no unit".into());
        return rep;
    };
    let shape = Shape { alg, n, ideals: &act.ideals, maps: &act.gamma, cocycle: None, name: &l };
    if !shape.check(&mut rep, |x| s.star(x), |_, _| BasisIdeal::empty()) {
        return rep;
    }
    let mut twist = ClauseCheck::new("twist_unitary", ClauseKind::Check);
    for x in 0..n {
        let ok = match (act.normal.contains(x), act.tau(x)) {
            (true, Some(t)) => alg.is_unitary_multiplier(t, &act.ideals[x]),
            (false, None) => true,
            _ => false,
        };
        twist.check(ok, || format!("τ_{} is missing, misplaced or not unitary in E_{}", l(x), l(x)));
    }
    rep.push(twist.finish());
    if !rep.passed() {
        return rep;
    }
    let gamma = |x: usize, a: &AlgebraElement<F>| act.gamma[x].apply(a, tol);
    let tau = |x: usize| act.tau(x).expect("in N");
    let basis = |i: &BasisIdeal| i.indices().iter().map(|&k| alg.basis(k)).collect::<Vec<_>>();

    rep.assert("unit_ideal_is_everything", ClauseKind::Axiom, act.ideals[e] == BasisIdeal::full(alg.dim()), || {
        format!("E_{} is proper", l(e))
    });
    let mut hom = ClauseCheck::new("gamma_homomorphism", ClauseKind::Axiom);
    for x in 0..n {
        for y in 0..n {
            let xy = s.mul(x, y);
            let comp = act.gamma[x].compose(&act.gamma[y], alg);
            let ok =
                matches!(&comp, Ok(c) if c.domain() == act.gamma[xy].domain() && c.range() == act.gamma[xy].range());
            if !hom.check(ok, || format!("γ_{}γ_{} and γ_{} have different domains", l(x), l(y), l(xy))) {
                continue;
            }
            for a in basis(&act.ideals[s.star(xy)]) {
                let lhs = gamma(y, &a).and_then(|v| gamma(x, &v));
                if !hom.check(same(&lhs, &gamma(xy, &a), tol), || format!("γ_{}γ_{} ≠ γ_{}", l(x), l(y), l(xy))) {
                    break;
                }
            }
        }
    }
    rep.push(hom.finish());

    let normal = act.normal.elements();
    let mut ca = ClauseCheck::new("green_a_inner_on_n", ClauseKind::Axiom);
    for &x in normal {
        let t = tau(x);
        let ts = alg.star(t);
        let dom_ok = act.gamma[x].domain() == &act.ideals[x];
        if !ca.check(dom_ok, || format!("γ_{} is not defined on E_{}", l(x), l(x))) {
            continue;
        }
        for a in basis(&act.ideals[x]) {
            let rhs = Ok(alg.mul3(t, &a, &ts));
            if !ca.check(same(&gamma(x, &a), &rhs, tol), || format!("γ_{} ≠ Ad τ_{}", l(x), l(x))) {
                break;
            }
        }
    }
    rep.push(ca.finish());

    let mut cb = ClauseCheck::new("green_b_equivariant_twist", ClauseKind::Axiom);
    for x in 0..n {
        let xsx = s.domain_idem(x);
        for &m in normal {
            if !s.leq(s.domain_idem(m), xsx) {
                continue;
            }
            let conj = s.mul3(x, m, s.star(x));
            let lhs = gamma(x, tau(m));
            cb.check(same(&lhs, &Ok(tau(conj).clone()), tol), || format!("γ_{}(τ_{}) ≠ τ_{}", l(x), l(m), l(conj)));
        }
    }
    rep.push(cb.finish());

    let mut cc = ClauseCheck::new("green_c_multiplicative_twist", ClauseKind::Axiom);
    for &m in normal {
        for &k in normal {
            let mk = s.mul(m, k);
            cc.check(alg.mul(tau(m), tau(k)).approx_eq(tau(mk), tol), || format!("τ_{}τ_{} ≠ τ_{}", l(m), l(k), l(mk)));
        }
    }
    rep.push(cc.finish());
    rep
}

/// Checks the five clauses of a twisted partial action.
pub fn verify_twisted_partial<F: Scalar>(act: &TwistedPartialAction<F>) -> Report {
    let mut rep = Report::new("twisted partial action");
    let alg = &act.algebra;
    let g = &act.group;
    let n = g.order();
    let tol = alg.tol();
    let e = g.unit();
    let l = |x: usize| g.label(x);
    let d = |x: usize| &act.ideals[x];
    let shape = Shape { alg, n, ideals: &act.ideals, maps: &act.alpha, cocycle: Some(&act.u), name: &l };
    if !shape.check(&mut rep, |x| g.inv(x), |r, s| d(r).intersect(d(g.mul(r, s)))) {
        return rep;
    }
    let alpha = |x: usize, a: &AlgebraElement<F>| act.alpha[x].apply(a, tol);
    let u = |r: usize, s: usize| act.u(r, s);
    let basis = |i: &BasisIdeal| i.indices().iter().map(|&k| alg.basis(k)).collect::<Vec<_>>();

    let a_ok = *d(e) == BasisIdeal::full(alg.dim()) && act.alpha[e].approx_eq(&Psa::identity(d(e)), tol);
    rep.assert("a_unit_acts_trivially", ClauseKind::Axiom, a_ok, || "D_e ≠ A or α_e ≠ id".into());

    let mut b = ClauseCheck::new("b_domains", ClauseKind::Axiom);
    let mut c = ClauseCheck::new("c_twisted_composition", ClauseKind::Axiom);
    for r in 0..n {
        let ri = g.inv(r);
        for s in 0..n {
            let rs = g.mul(r, s);
            let img = act.alpha[r].image(alg, &d(ri).intersect(d(s)));
            b.check(matches!(&img, Ok(i) if *i == d(r).intersect(d(rs))), || {
                format!("α_{}(D_{}⁻¹ D_{}) ≠ D_{} D_{}", l(r), l(r), l(s), l(r), l(rs))
            });
            let si = g.inv(s);
            let us = alg.star(u(r, s));
            for a in basis(&d(si).intersect(d(g.inv(rs)))) {
                let lhs = alpha(s, &a).and_then(|v| alpha(r, &v));
                let rhs = alpha(rs, &a).map(|v| alg.mul3(u(r, s), &v, &us));
                if !c.check(same(&lhs, &rhs, tol), || format!("fails at r={}, s={}", l(r), l(s))) {
                    break;
                }
            }
        }
    }
    rep.push(b.finish());
    rep.push(c.finish());

    let mut dd = ClauseCheck::new("d_normalized", ClauseKind::Axiom);
    for t in 0..n {
        let one = alg.ideal_identity(d(t));
        dd.check(same(&Ok(u(e, t).clone()), &one, tol) && same(&Ok(u(t, e).clone()), &one, tol), || {
            format!("u_{{e,{}}} or u_{{{},e}} is not 1", l(t), l(t))
        });
    }
    rep.push(dd.finish());

    let mut ee = ClauseCheck::new("e_cocycle", ClauseKind::Axiom);
    for r in 0..n {
        for s in 0..n {
            for t in 0..n {
                let st = g.mul(s, t);
                let rs = g.mul(r, s);
                let meet = d(g.inv(r)).intersect(d(s)).intersect(d(st));
                for a in basis(&meet) {
                    let lhs = alpha(r, &alg.mul(&a, u(s, t))).map(|v| alg.mul(&v, u(r, st)));
                    let rhs = alpha(r, &a).map(|v| alg.mul3(&v, u(r, s), u(rs, t)));
                    if !ee.check(same(&lhs, &rhs, tol), || format!("fails at r={}, s={}, t={}", l(r), l(s), l(t))) {
                        break;
                    }
                }
            }
        }
    }
    rep.push(ee.finish());
    rep
}

#[cfg(test)]
mod tests;
