//! Covariant representations of an action and their passage to and from
//! representations of the crossed product.

use alloc::format;
use alloc::vec::Vec;

use super::CrossedProduct;
use crate::actions::{ideal_units, BusbySmithAction};
use crate::algebra::{AlgebraElement, BasisIdeal, FdStarAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{ClauseCheck, ClauseKind, Report};
use crate::scalar::Scalar;

/// `(π, v)` on `H = F^h` with inner product `⟨x, y⟩ = y^H G x`.
#[derive(Clone, Debug)]
pub struct CovariantRep<F> {
    /// `π(b_k)` for every basis vector of `A`.
    pub pi: Vec<Matrix<F>>,
    pub v: Vec<Matrix<F>>,
    pub gram: Matrix<F>,
    gram_inv: Matrix<F>,
}

impl<F: Scalar> CovariantRep<F> {
    pub fn new(pi: Vec<Matrix<F>>, v: Vec<Matrix<F>>, gram: Matrix<F>, tol: f64) -> Result<Self> {
        let gram_inv =
            gram.inverse(tol).ok_or_else(|| Error::Singular("Gram matrix of the representation space".into()))?;
        Ok(CovariantRep { pi, v, gram, gram_inv })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn pi_of(&self, a: &AlgebraElement<F>) -> Matrix<F> {
        combine(&self.pi, a.coeffs(), self.dim())
    }

    /// `M† = G⁻¹ M^H G`.
    pub fn adjoint(&self, m: &Matrix<F>) -> Matrix<F> {
        self.gram_inv.mul(&m.conj_transpose()).mul(&self.gram)
    }

    /// The orthogonal projection onto `π(E)H`.
    pub fn projection_onto(&self, e: &BasisIdeal, tol: f64) -> Result<Matrix<F>> {
        let h = self.dim();
        let mut cols = Vec::new();
        for &k in e.indices() {
            for j in 0..h {
                cols.push(self.pi[k].col(j));
            }
        }
        if cols.is_empty() {
            return Ok(Matrix::zeros(h, h));
        }
        let all = Matrix::from_cols(h, &cols);
        let (_, pivots) = all.rref(tol);
        let b = Matrix::from_cols(h, &pivots.iter().map(|&p| all.col(p)).collect::<Vec<_>>());
        let bh = b.conj_transpose().mul(&self.gram);
        let inner = bh.mul(&b).inverse(tol).ok_or_else(|| Error::Singular("Gram matrix of a subspace".into()))?;
        Ok(b.mul(&inner).mul(&bh))
    }
}

fn combine<F: Scalar>(ms: &[Matrix<F>], coeffs: &[F], h: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(h, h);
    for (m, c) in ms.iter().zip(coeffs) {
        if !c.is_zero_tol(0.0) {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// The left-regular representation of `alg` with Gram matrix
/// `G[j][i] = tr(L_{b_j* b_i})`; fails when the trace form is degenerate.
pub fn left_regular<F: Scalar>(alg: &FdStarAlgebra<F>) -> Result<(Vec<Matrix<F>>, Matrix<F>)> {
    let d = alg.dim();
    let big_pi: Vec<Matrix<F>> = (0..d).map(|i| alg.left_matrix(&alg.basis(i))).collect();
    let mut gram = Matrix::zeros(d, d);
    for j in 0..d {
        let bj = alg.star(&alg.basis(j));
        for i in 0..d {
            gram.set(j, i, alg.left_matrix(&alg.mul(&bj, &alg.basis(i))).trace());
        }
    }
    if gram.rank(alg.tol()) != d {
        return Err(Error::Singular("trace form of the algebra".into()));
    }
    Ok((big_pi, gram))
}

/// `π(a) = Π([aδ_e])`, `v_s = Π([1_{E_s}δ_s])` for a representation `Π` of
/// the crossed product given on its basis.
pub fn rep_from_algebra_rep<F: Scalar>(
    cp: &CrossedProduct<F>,
    act: &BusbySmithAction<F>,
    big_pi: &[Matrix<F>],
    gram: Matrix<F>,
) -> Result<CovariantRep<F>> {
    if big_pi.len() != cp.dim() {
        return Err(Error::CarrierMismatch);
    }
    let alg = &act.algebra;
    let s = &act.semigroup;
    let e = s.unit().ok_or_else(|| Error::NoIdentity("action over a semigroup without unit".into()))?;
    let h = gram.rows();
    let apply = |x: &AlgebraElement<F>| combine(big_pi, x.coeffs(), h);
    let pi = (0..alg.dim()).map(|k| cp.class_delta(e, &alg.basis(k)).map(|x| apply(&x))).collect::<Result<Vec<_>>>()?;
    let units = ideal_units(alg, &act.ideals)?;
    let v = (0..s.size()).map(|x| cp.class_delta(x, &units[x]).map(|y| apply(&y))).collect::<Result<Vec<_>>>()?;
    CovariantRep::new(pi, v, gram, alg.tol())
}

/// The covariance clauses, the partial-isometry clause and the five
/// derived properties of `v`.
pub fn verify_covariant<F: Scalar>(rep: &CovariantRep<F>, act: &BusbySmithAction<F>) -> Report {
    let mut out = Report::new("covariant representation");
    let alg = &act.algebra;
    let s = &act.semigroup;
    let tol = alg.tol();
    let n = s.size();
    let h = rep.dim();
    let l = |x: usize| s.label(x);
    let d = alg.dim();
    let eq = |a: &Matrix<F>, b: &Matrix<F>| a.approx_eq(b, tol);

    let mut pi_ok = ClauseCheck::new("pi_star_representation", ClauseKind::Check);
    'p: for i in 0..d {
        let bi = alg.basis(i);
        if !pi_ok.check(eq(&rep.pi_of(&alg.star(&bi)), &rep.adjoint(&rep.pi[i])), || {
            format!("π({}*) ≠ π({})†", alg.label(i), alg.label(i))
        }) {
            break;
        }
        for j in 0..d {
            let lhs = rep.pi_of(&alg.mul(&bi, &alg.basis(j)));
            if !pi_ok.check(eq(&lhs, &rep.pi[i].mul(&rep.pi[j])), || {
                format!("π not multiplicative at ({}, {})", alg.label(i), alg.label(j))
            }) {
                break 'p;
            }
        }
    }
    out.push(pi_ok.finish());

    let vd: Vec<Matrix<F>> = rep.v.iter().map(|m| rep.adjoint(m)).collect();
    let mut cov = ClauseCheck::new("a_covariance", ClauseKind::Axiom);
    for x in 0..n {
        for &k in act.beta[x].domain().indices() {
            let a = alg.basis(k);
            let lhs = act.beta[x].apply(&a, tol).map(|y| rep.pi_of(&y));
            let rhs = rep.v[x].mul(&rep.pi[k]).mul(&vd[x]);
            if !cov.check(matches!(&lhs, Ok(m) if eq(m, &rhs)), || {
                format!("π(β_{}(a)) ≠ v π(a) v† at a = {}", l(x), alg.label(k))
            }) {
                break;
            }
        }
    }
    out.push(cov.finish());

    let mut coc = ClauseCheck::new("b_cocycle", ClauseKind::Axiom);
    for x in 0..n {
        for y in 0..n {
            let rhs = rep.pi_of(act.w(x, y)).mul(&rep.v[s.mul(x, y)]);
            coc.check(eq(&rep.v[x].mul(&rep.v[y]), &rhs), || {
                format!("v_{} v_{} ≠ π(w) v_{}", l(x), l(y), l(s.mul(x, y)))
            });
        }
    }
    out.push(coc.finish());

    let proj: Vec<Result<Matrix<F>>> = act.ideals.iter().map(|e| rep.projection_onto(e, tol)).collect();
    let is = |p: &Result<Matrix<F>>, m: &Matrix<F>| matches!(p, Ok(p) if eq(p, m));
    let mut iso = ClauseCheck::new("c_partial_isometry", ClauseKind::Axiom);
    for x in 0..n {
        let init = is(&proj[s.star(x)], &vd[x].mul(&rep.v[x]));
        let fin = is(&proj[x], &rep.v[x].mul(&vd[x]));
        iso.check(init && fin, || format!("v_{} has the wrong initial or final space", l(x)));
    }
    out.push(iso.finish());

    let mut pa = ClauseCheck::new("v_idempotent_is_projection", ClauseKind::Derived);
    for f in s.idempotents() {
        pa.check(is(&proj[f], &rep.v[f]), || format!("v_{} is not the projection onto π(E_{})H", l(f), l(f)));
    }
    out.push(pa.finish());
    let ident = Matrix::identity(h);
    let e = s.unit();
    out.assert("v_unit_is_identity", ClauseKind::Derived, e.is_some_and(|e| eq(&rep.v[e], &ident)), || {
        "v_e ≠ 1".into()
    });

    let mut pc = ClauseCheck::new("v_star_from_adjoint", ClauseKind::Derived);
    let mut pd = ClauseCheck::new("adjoint_from_v_star_right", ClauseKind::Derived);
    let mut pe = ClauseCheck::new("adjoint_from_v_star_left", ClauseKind::Derived);
    for x in 0..n {
        let xs = s.star(x);
        pc.check(eq(&rep.v[xs], &rep.pi_of(act.w(xs, x)).mul(&vd[x])), || format!("v_{}* ≠ π(w) v_{}†", l(x), l(x)));
        pd.check(eq(&vd[x], &rep.v[xs].mul(&rep.pi_of(&alg.star(act.w(x, xs))))), || {
            format!("v_{}† ≠ v_{}* π(w*)", l(x), l(x))
        });
        pe.check(eq(&vd[x], &rep.pi_of(&alg.star(act.w(xs, x))).mul(&rep.v[xs])), || {
            format!("v_{}† ≠ π(w*) v_{}*", l(x), l(x))
        });
    }
    out.push(pc.finish());
    out.push(pd.finish());
    out.push(pe.finish());
    out.value("space_dim", h);
    out
}

/// `π×v` is a \*-homomorphism on `L` that factors through `Π`:
/// `(π×v)(aδ_s) = π(a)v_s = Π([aδ_s])` for every basis vector of `L`.
pub fn verify_round_trip<F: Scalar>(rep: &CovariantRep<F>, cp: &CrossedProduct<F>, big_pi: &[Matrix<F>]) -> Report {
    let mut out = Report::new("integrated form");
    let l = &cp.l;
    let la = &l.algebra;
    let tol = la.tol();
    let h = rep.dim();
    let integrated = |x: &AlgebraElement<F>| {
        let mut m = Matrix::zeros(h, h);
        for (j, &(s, k)) in l.index.iter().enumerate() {
            let c = &x.coeffs()[j];
            if !c.is_zero_tol(0.0) {
                m = m.add(&rep.pi[k].mul(&rep.v[s]).scale(c));
            }
        }
        m
    };
    let images: Vec<Matrix<F>> = (0..la.dim()).map(|j| integrated(&la.basis(j))).collect();
    let mut hom = ClauseCheck::new("integrated_multiplicative", ClauseKind::Derived);
    'h: for i in 0..la.dim() {
        for j in 0..la.dim() {
            let lhs = integrated(&la.mul(&la.basis(i), &la.basis(j)));
            if !hom.check(lhs.approx_eq(&images[i].mul(&images[j]), tol), || {
                format!("at ({}, {})", la.label(i), la.label(j))
            }) {
                break 'h;
            }
        }
    }
    out.push(hom.finish());
    let mut star = ClauseCheck::new("integrated_star", ClauseKind::Derived);
    for i in 0..la.dim() {
        let lhs = integrated(&la.star(&la.basis(i)));
        if !star.check(lhs.approx_eq(&rep.adjoint(&images[i]), tol), || format!("at {}", la.label(i))) {
            break;
        }
    }
    out.push(star.finish());
    let mut rt = ClauseCheck::new("round_trip", ClauseKind::Check);
    for j in 0..la.dim() {
        let class = cp.quotient.project(&la.basis(j));
        let target = combine(big_pi, class.coeffs(), h);
        if !rt.check(images[j].approx_eq(&target, tol), || format!("π×v differs from Π at {}", la.label(j))) {
            break;
        }
    }
    out.push(rt.finish());
    out
}
