//! The inverse semigroup `{u∂_t : u ∈ UM(E_t)}` attached to a Busby-Smith
//! action, and the Green action it carries.
//!
//! The full semigroup has continuum unitary groups, so it is only sampled.
//! The sub-semigroup generated by the `1∂_t` is finite when the cocycle
//! values have finite order, and is enumerated exactly.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::construct::require_busby;
use super::{ideal_units, BusbySmithAction, GreenAction, Psa};
use crate::algebra::AlgebraElement;
use crate::congruence::{quotient_by, NormalClifford, Quotient};
use crate::cross_section::CrossSection;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{ClauseCheck, ClauseKind, Report};
use crate::scalar::Scalar;
use crate::semigroup::{generate, Generated};

/// `u∂_t`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FellElement<F> {
    pub t: usize,
    pub u: AlgebraElement<F>,
}

pub struct FellSemigroup<'a, F> {
    act: &'a BusbySmithAction<F>,
    inv: Vec<Psa<F>>,
    units: Vec<AlgebraElement<F>>,
}

impl<'a, F: Scalar> FellSemigroup<'a, F> {
    /// Refuses actions that fail verification.
    pub fn new(act: &'a BusbySmithAction<F>) -> Result<Self> {
        require_busby(act)?;
        let tol = act.tol();
        let inv = act.beta.iter().map(|b| b.inverse(tol)).collect::<Result<_>>()?;
        let units = ideal_units(&act.algebra, &act.ideals)?;
        Ok(FellSemigroup { act, inv, units })
    }

    pub fn action(&self) -> &BusbySmithAction<F> {
        self.act
    }

    /// `1_{E_t}∂_t`.
    pub fn one(&self, t: usize) -> FellElement<F> {
        FellElement { t, u: self.units[t].clone() }
    }

    /// `u_r∂_r * u_t∂_t = β_r(β_r⁻¹(u_r) u_t) w_{r,t} ∂_{rt}`.
    pub fn mul(&self, x: &FellElement<F>, y: &FellElement<F>) -> Result<FellElement<F>> {
        let alg = &self.act.algebra;
        let tol = alg.tol();
        let back = self.inv[x.t].apply(&x.u, tol)?;
        let moved = self.act.beta[x.t].apply(&alg.mul(&back, &y.u), tol)?;
        Ok(FellElement { t: self.act.semigroup.mul(x.t, y.t), u: alg.mul(&moved, self.act.w(x.t, y.t)) })
    }

    /// `(u∂_t)* = β_t⁻¹(u*) w*_{t*,t} ∂_{t*}`.
    pub fn star(&self, x: &FellElement<F>) -> Result<FellElement<F>> {
        let alg = &self.act.algebra;
        let ts = self.act.semigroup.star(x.t);
        let back = self.inv[x.t].apply(&alg.star(&x.u), alg.tol())?;
        Ok(FellElement { t: ts, u: alg.mul(&back, &alg.star(self.act.w(ts, x.t))) })
    }

    /// `γ_{u∂_t} = Ad u ∘ β_t : E_{t*} → E_t`.
    pub fn gamma(&self, x: &FellElement<F>) -> Result<Psa<F>> {
        let alg = &self.act.algebra;
        let tol = alg.tol();
        let b = &self.act.beta[x.t];
        let us = alg.star(&x.u);
        let cols = b
            .domain()
            .indices()
            .iter()
            .map(|&k| {
                let y = b.apply(&alg.basis(k), tol)?;
                b.range().coords(&alg.mul3(&x.u, &y, &us), tol)
            })
            .collect::<Result<Vec<_>>>()?;
        Psa::new(b.domain().clone(), b.range().clone(), Matrix::from_cols(b.range().len(), &cols))
    }

    /// `τ_{u∂_f} = u` for idempotent `f`.
    pub fn tau(&self, x: &FellElement<F>) -> Option<AlgebraElement<F>> {
        self.act.semigroup.is_idempotent(x.t).then(|| x.u.clone())
    }

    pub fn approx_eq(&self, x: &FellElement<F>, y: &FellElement<F>) -> bool {
        x.t == y.t && x.u.approx_eq(&y.u, self.act.tol())
    }

    /// A random `u∂_t` with `u` a random unitary of `E_t`.
    pub fn sample_at<R: Rng + ?Sized>(&self, t: usize, rng: &mut R) -> Result<FellElement<F>> {
        let u = self.act.algebra.random_unitary(&self.act.ideals[t], rng)?;
        Ok(FellElement { t, u })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<FellElement<F>> {
        let t = rng.gen_range(0..self.act.size());
        self.sample_at(t, rng)
    }

    /// Inverse-semigroup laws and Green axioms on `samples` random draws.
    pub fn verify_sampled(&self, samples: usize, seed: u64) -> Report {
        let mut rep = Report::new("sampled Green action of the unitary semigroup");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = &self.act.semigroup;
        let alg = &self.act.algebra;
        let tol = alg.tol();
        let idems = s.idempotents();
        let mut inverse = ClauseCheck::new("inverse_law", ClauseKind::Derived);
        let mut assoc = ClauseCheck::new("associative", ClauseKind::Derived);
        let mut range = ClauseCheck::new("range_idempotent", ClauseKind::Derived);
        let mut idem = ClauseCheck::new("idempotents_are_units", ClauseKind::Derived);
        let mut hom = ClauseCheck::new("gamma_homomorphism", ClauseKind::Axiom);
        let mut ga = ClauseCheck::new("green_a_inner_on_n", ClauseKind::Axiom);
        let mut gb = ClauseCheck::new("green_b_equivariant_twist", ClauseKind::Axiom);
        let mut gc = ClauseCheck::new("green_c_multiplicative_twist", ClauseKind::Axiom);
        for _ in 0..samples {
            let mut draw = || -> Result<_> {
                let x = self.sample(&mut rng)?;
                let y = self.sample(&mut rng)?;
                let z = self.sample(&mut rng)?;
                let f = idems[rng.gen_range(0..idems.len())];
                let n = self.sample_at(f, &mut rng)?;
                let g = s.mul(idems[rng.gen_range(0..idems.len())], s.domain_idem(x.t));
                let m = self.sample_at(g, &mut rng)?;
                let k = self.sample_at(idems[rng.gen_range(0..idems.len())], &mut rng)?;
                Ok((x, y, z, n, m, k))
            };
            let (x, y, z, n, m, k) = match draw() {
                Ok(v) => v,
                Err(e) => {
                    inverse.check(false, || format!("sampling failed: {e}"));
                    continue;
                }
            };
            let eq = |a: Result<FellElement<F>>, b: Result<FellElement<F>>| matches!((a, b), (Ok(a), Ok(b)) if self.approx_eq(&a, &b));
            let xs = self.star(&x);
            let xxsx = xs.as_ref().map_err(Clone::clone).and_then(|xs| self.mul(&self.mul(&x, xs)?, &x));
            let xsxxs = xs.as_ref().map_err(Clone::clone).and_then(|xs| self.mul(&self.mul(xs, &x)?, xs));
            inverse.check(eq(xxsx, Ok(x.clone())) && eq(xsxxs, xs.clone()), || format!("fails at t={}", s.label(x.t)));
            let l = self.mul(&x, &y).and_then(|xy| self.mul(&xy, &z));
            let r = self.mul(&y, &z).and_then(|yz| self.mul(&x, &yz));
            assoc.check(eq(l, r), || format!("fails at ({}, {}, {})", s.label(x.t), s.label(y.t), s.label(z.t)));
            let xxs = xs.as_ref().map_err(Clone::clone).and_then(|xs| self.mul(&x, xs));
            range.check(eq(xxs, Ok(self.one(s.range_idem(x.t)))), || format!("x x* ≠ 1∂ at t={}", s.label(x.t)));
            let is_idem = eq(self.mul(&n, &n), Ok(n.clone()));
            idem.check(is_idem == n.u.approx_eq(&self.units[n.t], tol), || format!("at f={}", s.label(n.t)));

            let xy = self.mul(&x, &y);
            let ok = (|| -> Result<bool> {
                let xy = xy.clone()?;
                let lhs = self.gamma(&x)?.compose(&self.gamma(&y)?, alg)?;
                let rhs = self.gamma(&xy)?;
                Ok(lhs.approx_eq(&rhs, tol))
            })();
            hom.check(matches!(ok, Ok(true)), || format!("γ_xγ_y ≠ γ_xy at ({}, {})", s.label(x.t), s.label(y.t)));

            let ok = matches!(self.gamma(&n), Ok(g) if alg.ad(&n.u, &self.act.ideals[n.t]).is_ok_and(|a| a.approx_eq(&g, tol)));
            ga.check(ok, || format!("γ_n ≠ Ad τ_n at f={}", s.label(n.t)));

            let ok = (|| -> Result<bool> {
                let conj = self.mul(&self.mul(&x, &m)?, &self.star(&x)?)?;
                let lhs = self.gamma(&x)?.apply(&m.u, tol)?;
                Ok(self.tau(&conj).is_some_and(|t| t.approx_eq(&lhs, tol)))
            })();
            gb.check(matches!(ok, Ok(true)), || format!("γ_s(τ_n) ≠ τ_sns* at t={}", s.label(x.t)));

            let ok = matches!(self.mul(&n, &k), Ok(nk) if self.tau(&nk).is_some_and(|t| t.approx_eq(&alg.mul(&n.u, &k.u), tol)));
            gc.check(ok, || format!("τ_nτ_l ≠ τ_nl at ({}, {})", s.label(n.t), s.label(k.t)));
        }
        for c in [inverse, assoc, range, idem, hom, ga, gb, gc] {
            rep.push(c.finish());
        }
        rep.value("samples", samples);
        rep.value("seed", seed);
        rep
    }
}

/// The finite sub-semigroup generated by the `1∂_t`, with its Green action,
/// its quotient by `N = {u∂_f}`, the section `[u∂_t] ↦ 1∂_t` and the
/// isomorphism `φ(t) = [1∂_t]` from `T` onto the quotient.
#[derive(Clone, Debug)]
pub struct FellGenerated<F: Ord> {
    pub generated: Generated<FellElement<F>>,
    pub green: GreenAction<F>,
    pub quotient: Quotient,
    pub section: CrossSection,
    pub phi: Vec<usize>,
}

/// Enumerates the sub-semigroup generated by `{1∂_t}` up to `cap` elements.
pub fn fell_generated<F: Scalar + Ord>(act: &BusbySmithAction<F>, cap: usize) -> Result<FellGenerated<F>> {
    let fs = FellSemigroup::new(act)?;
    let t = &act.semigroup;
    let gens: Vec<FellElement<F>> = (0..t.size()).map(|x| fs.one(x)).collect();
    let generated = generate(
        &gens,
        |x, y| fs.mul(x, y).expect("products stay inside a verified action"),
        |x| fs.star(x).expect("stars stay inside a verified action"),
        cap,
    )?;
    let sf = &generated.semigroup;
    let labels = generated
        .elements
        .iter()
        .enumerate()
        .map(|(i, x)| format!("{}∂{}#{i}", if x.u == fs.units[x.t] { "1" } else { "u" }, t.label(x.t)))
        .collect();
    let sf = sf.clone().with_labels(labels)?;
    let n_list: Vec<usize> = (0..sf.size()).filter(|&i| t.is_idempotent(generated.elements[i].t)).collect();
    let normal = NormalClifford::new(&sf, &n_list)?;
    let ideals = generated.elements.iter().map(|x| act.ideals[x.t].clone()).collect();
    let gamma = generated.elements.iter().map(|x| fs.gamma(x)).collect::<Result<Vec<_>>>()?;
    let tau = generated.elements.iter().map(|x| fs.tau(x)).collect();
    let quotient = quotient_by(&sf, &normal);
    let mut reps = vec![usize::MAX; quotient.semigroup.size()];
    let mut phi = Vec::with_capacity(t.size());
    for x in 0..t.size() {
        let i = generated.index_of(&fs.one(x)).expect("generators are enumerated");
        let class = quotient.project(i);
        reps[class] = i;
        phi.push(class);
    }
    if reps.contains(&usize::MAX) {
        return Err(Error::Input("a class of the quotient has no element 1∂_t".into()));
    }
    let section = CrossSection::new(&quotient, reps)?;
    let green = GreenAction { algebra: act.algebra.clone(), semigroup: sf, normal, ideals, gamma, tau };
    let mut generated = generated;
    generated.semigroup = green.semigroup.clone();
    Ok(FellGenerated { generated, green, quotient, section, phi })
}
