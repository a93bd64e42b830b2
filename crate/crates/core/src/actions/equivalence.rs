//! Exterior equivalence and conjugacy of Busby-Smith actions.

use alloc::format;
use alloc::vec::Vec;

use super::{ideal_units, same, BusbySmithAction, GreenAction, Psa};
use crate::algebra::{AlgebraElement, FdStarAlgebra};
use crate::congruence::{NormalClifford, Quotient};
use crate::cross_section::CrossSection;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{ClauseCheck, ClauseKind, Report};
use crate::scalar::Scalar;
use crate::semigroup::FiniteInverseSemigroup;

/// Checks that `V` implements an exterior equivalence from `(α, u)` to
/// `(β, w)`: `β_s = Ad V_s ∘ α_s` and
/// `w_{s,t} = V_s α_s(1_{E_{s*}} V_t) u_{s,t} V*_{st}`.
pub fn is_exterior_equivalence<F: Scalar>(
    from: &BusbySmithAction<F>,
    to: &BusbySmithAction<F>,
    v: &[AlgebraElement<F>],
) -> Result<Report> {
    let n = from.size();
    if from.algebra != to.algebra || from.semigroup != to.semigroup || v.len() != n {
        return Err(Error::CarrierMismatch);
    }
    let alg = &from.algebra;
    let s = &from.semigroup;
    let tol = alg.tol();
    let l = |x: usize| s.label(x);
    let mut rep = Report::new("exterior equivalence");
    rep.assert("same_ideals", ClauseKind::Check, from.ideals == to.ideals, || "E differs".into());
    let mut unit = ClauseCheck::new("witness_unitary", ClauseKind::Check);
    for x in 0..n {
        unit.check(alg.is_unitary_multiplier(&v[x], &from.ideals[x]), || {
            format!("V_{} is not a unitary multiplier of E_{}", l(x), l(x))
        });
    }
    rep.push(unit.finish());
    if !rep.passed() {
        return Ok(rep);
    }
    let units = ideal_units(alg, &from.ideals)?;
    let vs: Vec<AlgebraElement<F>> = v.iter().map(|x| alg.star(x)).collect();

    let mut a = ClauseCheck::new("a_maps", ClauseKind::Axiom);
    for x in 0..n {
        let dom = &from.ideals[s.star(x)];
        if !a.check(to.beta[x].domain() == dom, || format!("domains of β_{} differ", l(x))) {
            continue;
        }
        for &k in dom.indices() {
            let b = alg.basis(k);
            let lhs = to.beta[x].apply(&b, tol);
            let rhs = from.beta[x].apply(&b, tol).map(|y| alg.mul3(&v[x], &y, &vs[x]));
            if !a.check(same(&lhs, &rhs, tol), || format!("β_{} ≠ Ad V_{} ∘ α_{}", l(x), l(x), l(x))) {
                break;
            }
        }
    }
    rep.push(a.finish());

    let mut b = ClauseCheck::new("b_cocycles", ClauseKind::Axiom);
    for x in 0..n {
        for y in 0..n {
            let rhs = moved_cocycle(from, &units, v, &vs, x, y);
            b.check(same(&Ok(to.w(x, y).clone()), &rhs, tol), || format!("w_{{{},{}}} ≠ V α(1 V) u V*", l(x), l(y)));
        }
    }
    rep.push(b.finish());
    Ok(rep)
}

fn moved_cocycle<F: Scalar>(
    act: &BusbySmithAction<F>,
    units: &[AlgebraElement<F>],
    v: &[AlgebraElement<F>],
    vs: &[AlgebraElement<F>],
    x: usize,
    y: usize,
) -> Result<AlgebraElement<F>> {
    let alg = &act.algebra;
    let s = &act.semigroup;
    let inner = alg.mul(&units[s.star(x)], &v[y]);
    let moved = act.beta[x].apply(&inner, alg.tol())?;
    Ok(alg.mul(&alg.mul3(&v[x], &moved, act.w(x, y)), &vs[s.mul(x, y)]))
}

/// The action `(Ad V ∘ α, V α(1 V) u V*)` that `V` carries `(α, u)` to.
pub fn exterior_transform<F: Scalar>(
    act: &BusbySmithAction<F>,
    v: &[AlgebraElement<F>],
) -> Result<BusbySmithAction<F>> {
    let n = act.size();
    if v.len() != n {
        return Err(Error::CarrierMismatch);
    }
    let alg = &act.algebra;
    let tol = alg.tol();
    let units = ideal_units(alg, &act.ideals)?;
    let vs: Vec<AlgebraElement<F>> = v.iter().map(|x| alg.star(x)).collect();
    let mut beta = Vec::with_capacity(n);
    for x in 0..n {
        let b = &act.beta[x];
        let cols = b
            .domain()
            .indices()
            .iter()
            .map(|&k| {
                let y = b.apply(&alg.basis(k), tol)?;
                b.range().coords(&alg.mul3(&v[x], &y, &vs[x]), tol)
            })
            .collect::<Result<Vec<_>>>()?;
        beta.push(Psa::new(b.domain().clone(), b.range().clone(), Matrix::from_cols(b.range().len(), &cols))?);
    }
    let mut w = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            w.push(moved_cocycle(act, &units, v, &vs, x, y)?);
        }
    }
    BusbySmithAction::new(alg.clone(), act.semigroup.clone(), act.ideals.clone(), beta, w)
}

/// `V*`, implementing the reverse equivalence.
pub fn witness_inverse<F: Scalar>(alg: &FdStarAlgebra<F>, v: &[AlgebraElement<F>]) -> Vec<AlgebraElement<F>> {
    v.iter().map(|x| alg.star(x)).collect()
}

/// `X V`, implementing the composite of `V` followed by `X`.
pub fn witness_product<F: Scalar>(
    alg: &FdStarAlgebra<F>,
    x: &[AlgebraElement<F>],
    v: &[AlgebraElement<F>],
) -> Vec<AlgebraElement<F>> {
    x.iter().zip(v).map(|(a, b)| alg.mul(a, b)).collect()
}

/// `V_s = d(s)c(s)*` for two order-preserving sections of `T/N`, together
/// with the report that it carries the `c`-action to the `d`-action.
pub fn cross_section_equivalence_witness<F: Scalar>(
    t: &FiniteInverseSemigroup,
    n: &NormalClifford,
    q: &Quotient,
    c: &CrossSection,
    d: &CrossSection,
) -> Result<(Vec<AlgebraElement<F>>, Report)> {
    let from = super::action_from_cross_section::<F>(t, n, q, c)?;
    let to = super::action_from_cross_section::<F>(t, n, q, d)?;
    let mut elems = n.elements().to_vec();
    elems.sort_unstable();
    let dim = from.algebra.dim();
    let v = (0..q.semigroup.size())
        .map(|x| {
            let m = t.mul(d.get(x), t.star(c.get(x)));
            elems
                .binary_search(&m)
                .map(|k| AlgebraElement::basis(dim, k))
                .map_err(|_| Error::Input(format!("{} is outside N", t.label(m))))
        })
        .collect::<Result<Vec<_>>>()?;
    let rep = is_exterior_equivalence(&from, &to, &v)?;
    Ok((v, rep))
}

/// `V_q = τ_{c(q) b(q)*}`, carrying the action built from section `b` to
/// the one built from `c`.
pub fn green_section_witness<F: Scalar>(
    green: &GreenAction<F>,
    q: &Quotient,
    b: &CrossSection,
    c: &CrossSection,
) -> Result<Vec<AlgebraElement<F>>> {
    let s = &green.semigroup;
    (0..q.semigroup.size())
        .map(|x| {
            let m = s.mul(c.get(x), s.star(b.get(x)));
            green.tau(m).cloned().ok_or_else(|| Error::Input(format!("{} is outside N", s.label(m))))
        })
        .collect()
}

fn apply_rho<F: Scalar>(rho: &Matrix<F>, x: &AlgebraElement<F>) -> AlgebraElement<F> {
    AlgebraElement::new(rho.mul_vec(x.coeffs()))
}

/// Checks `ρ ∘ α_s = β_{φ(s)} ∘ ρ` and `ρ(u_{s,t}) = w_{φ(s),φ(t)}`. `ρ` is
/// given by its matrix on the two algebras' bases.
pub fn is_conjugacy<F: Scalar>(
    a: &BusbySmithAction<F>,
    b: &BusbySmithAction<F>,
    rho: &Matrix<F>,
    phi: &[usize],
) -> Result<Report> {
    let (sa, sb) = (&a.semigroup, &b.semigroup);
    let (aa, ab) = (&a.algebra, &b.algebra);
    let n = sa.size();
    let tol = ab.tol();
    if phi.len() != n || sb.size() != n {
        return Err(Error::Input("φ is not a bijection".into()));
    }
    let mut seen = alloc::vec![false; n];
    for &p in phi {
        if p >= n || seen[p] {
            return Err(Error::Input("φ is not a bijection".into()));
        }
        seen[p] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if phi[sa.mul(x, y)] != sb.mul(phi[x], phi[y]) {
                return Err(Error::Input(format!("φ is not multiplicative at ({}, {})", sa.label(x), sa.label(y))));
            }
        }
    }
    let d = aa.dim();
    if rho.rows() != ab.dim() || rho.cols() != d || rho.rank(tol) != d {
        return Err(Error::Input("ρ is not a linear isomorphism".into()));
    }
    for i in 0..d {
        let bi = aa.basis(i);
        if !apply_rho(rho, &aa.star(&bi)).approx_eq(&ab.star(&apply_rho(rho, &bi)), tol) {
            return Err(Error::Input("ρ does not preserve the involution".into()));
        }
        for j in 0..d {
            let bj = aa.basis(j);
            let lhs = apply_rho(rho, &aa.mul(&bi, &bj));
            if !lhs.approx_eq(&ab.mul(&apply_rho(rho, &bi), &apply_rho(rho, &bj)), tol) {
                return Err(Error::Input("ρ is not multiplicative".into()));
            }
        }
    }
    let l = |x: usize| sa.label(x);
    let mut rep = Report::new("conjugacy");
    let mut maps = ClauseCheck::new("maps_intertwined", ClauseKind::Axiom);
    for x in 0..n {
        let y = phi[x];
        let ok_ideal = a.ideals[x].len() == b.ideals[y].len()
            && a.ideals[x].indices().iter().all(|&k| b.ideals[y].holds(&apply_rho(rho, &aa.basis(k)), tol));
        if !maps.check(ok_ideal, || format!("ρ(E_{}) ≠ E_{}", l(x), sb.label(y))) {
            continue;
        }
        for &k in a.beta[x].domain().indices() {
            let lhs = a.beta[x].apply(&aa.basis(k), tol).map(|v| apply_rho(rho, &v));
            let rhs = b.beta[y].apply(&apply_rho(rho, &aa.basis(k)), tol);
            if !maps.check(same(&lhs, &rhs, tol), || format!("ρ∘α_{} ≠ β_{}∘ρ", l(x), sb.label(y))) {
                break;
            }
        }
    }
    rep.push(maps.finish());
    let mut coc = ClauseCheck::new("cocycles_transported", ClauseKind::Axiom);
    for x in 0..n {
        for y in 0..n {
            coc.check(apply_rho(rho, a.w(x, y)).approx_eq(b.w(phi[x], phi[y]), tol), || {
                format!("ρ(u_{{{},{}}}) ≠ w_{{φ,φ}}", l(x), l(y))
            });
        }
    }
    rep.push(coc.finish());
    Ok(rep)
}
