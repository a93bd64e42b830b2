//! Constructors and conversions between the three kinds of action.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::{
    ideal_units, verify_busby_smith, verify_twisted_partial, BusbySmithAction, GreenAction, Psa, TwistedPartialAction,
};
use crate::algebra::{AlgebraElement, BasisIdeal, FdStarAlgebra};
use crate::congruence::{quotient_by, NormalClifford, Quotient};
use crate::cross_section::{is_order_preserving, CrossSection};
use crate::error::{Error, Result};
use crate::exel::{enumerate_sg, Exel, ExelElement};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::semigroup::{FiniteInverseSemigroup, Generated, Group};

fn sorted(n: &NormalClifford) -> Vec<usize> {
    let mut v = n.elements().to_vec();
    v.sort_unstable();
    v
}

/// `span{m ∈ N : mm* ≤ f}` inside `C*(N)`, as basis positions of the sorted
/// elements of `N`.
pub fn semigroup_ideal(t: &FiniteInverseSemigroup, n: &NormalClifford, f: usize) -> BasisIdeal {
    BasisIdeal::new(sorted(n).iter().enumerate().filter(|&(_, &m)| t.leq(t.range_idem(m), f)).map(|(k, _)| k).collect())
}

fn unit_vector<F: Scalar>(len: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); len];
    v[i] = F::one();
    v
}

/// `E_{s*} → E_s`, `m ↦ c m c*`, on the semigroup algebra of `N`.
fn conjugation<F: Scalar>(
    t: &FiniteInverseSemigroup,
    elems: &[usize],
    c: usize,
    dom: &BasisIdeal,
    ran: &BasisIdeal,
) -> Result<Psa<F>> {
    let mut cols = Vec::with_capacity(dom.len());
    for &k in dom.indices() {
        let img = t.mul3(c, elems[k], t.star(c));
        let pos =
            elems.binary_search(&img).ok().and_then(|p| ran.indices().binary_search(&p).ok()).ok_or_else(|| {
                Error::Input(format!("{} · {} · {}* leaves the range ideal", t.label(c), t.label(elems[k]), t.label(c)))
            })?;
        cols.push(unit_vector(ran.len(), pos));
    }
    Psa::new(dom.clone(), ran.clone(), Matrix::from_cols(ran.len(), &cols))
}

fn check_section(t: &FiniteInverseSemigroup, q: &Quotient, c: &CrossSection) -> Result<()> {
    let rep = is_order_preserving(t, q, c);
    if let Some(f) = rep.failures().next() {
        return Err(Error::NotOrderPreserving(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    if q.semigroup.unit().is_none() {
        return Err(Error::Input("quotient semigroup has no unit".into()));
    }
    Ok(())
}

fn check_quotient(t: &FiniteInverseSemigroup, n: &NormalClifford, q: &Quotient) -> Result<()> {
    let expect = quotient_by(t, n);
    let size = t.size();
    let agree = (0..size).all(|a| (0..size).all(|b| expect.congruence.related(a, b) == q.congruence.related(a, b)));
    if !agree {
        return Err(Error::Input("quotient does not come from the given normal Clifford subsemigroup".into()));
    }
    Ok(())
}

/// The action of `T/N` on `C*(N)` given by an order-preserving section `c`:
/// `β_q = Ad c(q)` and `w_{q,r} = c(q)c(r)c(qr)*`.
pub fn action_from_cross_section<F: Scalar>(
    t: &FiniteInverseSemigroup,
    n: &NormalClifford,
    q: &Quotient,
    c: &CrossSection,
) -> Result<BusbySmithAction<F>> {
    check_quotient(t, n, q)?;
    check_section(t, q, c)?;
    let elems = sorted(n);
    let alg = FdStarAlgebra::from_semigroup_algebra(t, Some(&elems))?;
    let qs = &q.semigroup;
    let m = qs.size();
    let ideals: Vec<BasisIdeal> = (0..m).map(|x| semigroup_ideal(t, n, t.range_idem(c.get(x)))).collect();
    let beta = (0..m)
        .map(|x| conjugation(t, &elems, c.get(x), &ideals[qs.star(x)], &ideals[x]))
        .collect::<Result<Vec<_>>>()?;
    let mut w = Vec::with_capacity(m * m);
    for x in 0..m {
        for y in 0..m {
            let v = t.mul3(c.get(x), c.get(y), t.star(c.get(qs.mul(x, y))));
            let k =
                elems.binary_search(&v).map_err(|_| Error::Input(format!("c({x})c({y})c({x}{y})* is outside N")))?;
            w.push(AlgebraElement::basis(alg.dim(), k));
        }
    }
    BusbySmithAction::new(alg, qs.clone(), ideals, beta, w)
}

/// `γ_s = Ad s` on `E_s = span{m ∈ N : mm* ≤ ss*}`, `τ_n = n`.
pub fn green_canonical<F: Scalar>(t: &FiniteInverseSemigroup, n: &NormalClifford) -> Result<GreenAction<F>> {
    if t.unit().is_none() {
        return Err(Error::Input("semigroup has no unit".into()));
    }
    let elems = sorted(n);
    let alg = FdStarAlgebra::from_semigroup_algebra(t, Some(&elems))?;
    let size = t.size();
    let ideals: Vec<BasisIdeal> = (0..size).map(|s| semigroup_ideal(t, n, t.range_idem(s))).collect();
    let gamma =
        (0..size).map(|s| conjugation(t, &elems, s, &ideals[t.star(s)], &ideals[s])).collect::<Result<Vec<_>>>()?;
    let tau = (0..size).map(|s| elems.binary_search(&s).ok().map(|k| AlgebraElement::basis(alg.dim(), k))).collect();
    Ok(GreenAction { algebra: alg, semigroup: t.clone(), normal: n.clone(), ideals, gamma, tau })
}

/// `β_q = γ_{c(q)}`, `w_{q,r} = τ_{c(q)c(r)c(qr)*}` on `S/N`.
pub fn green_to_busby<F: Scalar>(
    green: &GreenAction<F>,
    q: &Quotient,
    c: &CrossSection,
) -> Result<BusbySmithAction<F>> {
    let s = &green.semigroup;
    check_quotient(s, &green.normal, q)?;
    check_section(s, q, c)?;
    let qs = &q.semigroup;
    let m = qs.size();
    let ideals: Vec<BasisIdeal> = (0..m).map(|x| green.ideals[c.get(x)].clone()).collect();
    let beta = (0..m).map(|x| green.gamma[c.get(x)].clone()).collect();
    let mut w = Vec::with_capacity(m * m);
    for x in 0..m {
        for y in 0..m {
            let v = s.mul3(c.get(x), c.get(y), s.star(c.get(qs.mul(x, y))));
            let t = green.tau(v).ok_or_else(|| Error::Input(format!("{} is outside N", s.label(v))))?;
            w.push(t.clone());
        }
    }
    BusbySmithAction::new(green.algebra.clone(), qs.clone(), ideals, beta, w)
}

fn meet_all(ideals: &[BasisIdeal], gs: impl Iterator<Item = usize>, dim: usize) -> BasisIdeal {
    gs.fold(BasisIdeal::full(dim), |acc, g| acc.intersect(&ideals[g]))
}

/// The action of `S(G)` determined by a twisted partial action:
/// `E_{(P,s)} = ∩_{g∈P} D_g`, `β_{(P,s)} = α_s` restricted, and
/// `w_{p,q} = 1_{E_{pq}} u_{s,t}`.
pub fn partial_to_exel<F: Scalar>(
    tpa: &TwistedPartialAction<F>,
) -> Result<(BusbySmithAction<F>, Generated<ExelElement>)> {
    let rep = verify_twisted_partial(tpa);
    if let Some(f) = rep.failures().next() {
        return Err(Error::Unverified(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    let sg = enumerate_sg(&tpa.group)?;
    let alg = &tpa.algebra;
    let s = &sg.semigroup;
    let m = s.size();
    let ideals: Vec<BasisIdeal> =
        sg.elements.iter().map(|x| meet_all(&tpa.ideals, x.set().into_iter(), alg.dim())).collect();
    let mut beta = Vec::with_capacity(m);
    for (p, x) in sg.elements.iter().enumerate() {
        let b = tpa.alpha[x.tail()].restrict(alg, &ideals[s.star(p)])?;
        if b.range() != &ideals[p] {
            return Err(Error::Input(format!("α_{} does not map onto E_{}", x.tail(), s.label(p))));
        }
        beta.push(b);
    }
    let units = ideal_units(alg, &ideals)?;
    let mut w = Vec::with_capacity(m * m);
    for (p, x) in sg.elements.iter().enumerate() {
        for (q, y) in sg.elements.iter().enumerate() {
            w.push(alg.mul(&units[s.mul(p, q)], tpa.u(x.tail(), y.tail())));
        }
    }
    let act = BusbySmithAction::new(alg.clone(), s.clone(), ideals, beta, w)?;
    Ok((act, sg))
}

/// Reads `α_g = β_{[g]}` and `u_{s,t} = w_{[s],[t]}` off an action of `S(G)`.
pub fn exel_to_partial<F: Scalar>(act: &BusbySmithAction<F>, group: &Group) -> Result<TwistedPartialAction<F>> {
    let sg = enumerate_sg(group)?;
    let s = &act.semigroup;
    if s.size() != sg.semigroup.size()
        || s.product_table() != sg.semigroup.product_table()
        || s.star_table() != sg.semigroup.star_table()
    {
        return Err(Error::Input("the action's semigroup is not S(G) in enumeration order".into()));
    }
    let ex = Exel::new(group.clone())?;
    let n = group.order();
    let idx: Vec<usize> =
        (0..n).map(|g| sg.index_of(&ex.embed(g)).expect("embedded elements are enumerated")).collect();
    let mut u = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            u.push(act.w(idx[a], idx[b]).clone());
        }
    }
    Ok(TwistedPartialAction {
        algebra: act.algebra.clone(),
        group: group.clone(),
        ideals: idx.iter().map(|&p| act.ideals[p].clone()).collect(),
        alpha: idx.iter().map(|&p| act.beta[p].clone()).collect(),
        u,
    })
}

/// The trivial global action: `D_g = A`, `α_g = id`, `u ≡ 1`.
pub fn trivial_partial_action<F: Scalar>(algebra: FdStarAlgebra<F>, group: Group) -> Result<TwistedPartialAction<F>> {
    let n = group.order();
    let full = BasisIdeal::full(algebra.dim());
    let one = algebra.unit()?;
    Ok(TwistedPartialAction {
        ideals: vec![full.clone(); n],
        alpha: vec![Psa::identity(&full); n],
        u: vec![one; n * n],
        algebra,
        group,
    })
}

/// `((1 − t²) + 2ti)/(1 + t²)` for a random rational `t`.
fn unit_circle<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> F {
    let p: i64 = rng.gen_range(-3..=3);
    let q: i64 = rng.gen_range(1..=3);
    let den = p * p + q * q;
    F::gaussian(F::from_ratio(q * q - p * p, den), F::from_ratio(2 * p * q, den))
}

/// A random twisted partial action of `G`: translation of the blocks of
/// `⊕_{x∈X} M_d` for a random nonempty `X ⊆ G`, made twisted by random
/// diagonal unitaries `V_g` (`α_g ↦ Ad V_g ∘ α_g`,
/// `u_{r,s} = V_r α_r(1_{D_{r⁻¹}} V_s) V*_{rs}`).
pub fn random_twisted_partial<F: Scalar, R: Rng + ?Sized>(
    group: &Group,
    block: usize,
    rng: &mut R,
) -> Result<TwistedPartialAction<F>> {
    let n = group.order();
    if block == 0 {
        return Err(Error::Input("block size must be positive".into()));
    }
    let mut points: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    if points.is_empty() {
        points.push(rng.gen_range(0..n));
    }
    let blocks = vec![block; points.len()];
    let alg = FdStarAlgebra::<F>::from_multimatrix(&blocks);
    let tol = alg.tol();
    let dim = alg.dim();
    let slot = |x: usize| points.binary_search(&x).ok();
    let block_ideal = |keep: &dyn Fn(usize) -> bool| {
        BasisIdeal::new(
            points
                .iter()
                .enumerate()
                .filter(|&(_, &x)| keep(x))
                .flat_map(|(j, _)| FdStarAlgebra::<F>::multimatrix_block(&blocks, j))
                .collect(),
        )
    };
    let ideals: Vec<BasisIdeal> =
        (0..n).map(|g| block_ideal(&|x| slot(group.mul(group.inv(g), x)).is_some())).collect();
    let mut plain = Vec::with_capacity(n);
    for g in 0..n {
        let dom = &ideals[group.inv(g)];
        let ran = &ideals[g];
        let cols: Vec<Vec<F>> = dom
            .indices()
            .iter()
            .map(|&k| {
                let j = blocks_of(&blocks, k);
                let within = k - FdStarAlgebra::<F>::multimatrix_block(&blocks, j)[0];
                let target = slot(group.mul(g, points[j])).expect("domain blocks translate into X");
                let idx = FdStarAlgebra::<F>::multimatrix_block(&blocks, target)[within];
                unit_vector(ran.len(), ran.indices().binary_search(&idx).expect("range ideal"))
            })
            .collect();
        plain.push(Psa::new(dom.clone(), ran.clone(), Matrix::from_cols(ran.len(), &cols))?);
    }
    let units = ideal_units(&alg, &ideals)?;
    let e = group.unit();
    let v: Vec<AlgebraElement<F>> = (0..n)
        .map(|g| {
            if g == e {
                return units[g].clone();
            }
            let mut x = AlgebraElement::zero(dim);
            for j in 0..points.len() {
                let b = FdStarAlgebra::<F>::multimatrix_block(&blocks, j);
                if !ideals[g].contains(b[0]) {
                    continue;
                }
                for i in 0..block {
                    x = x.add(&AlgebraElement::basis(dim, b[i * block + i]).scale(&unit_circle(rng)));
                }
            }
            x
        })
        .collect();
    let mut alpha = Vec::with_capacity(n);
    for g in 0..n {
        let vs = alg.star(&v[g]);
        let dom = &ideals[group.inv(g)];
        let cols = dom
            .indices()
            .iter()
            .map(|&k| {
                let y = plain[g].apply(&alg.basis(k), tol)?;
                ideals[g].coords(&alg.mul3(&v[g], &y, &vs), tol)
            })
            .collect::<Result<Vec<_>>>()?;
        alpha.push(Psa::new(dom.clone(), ideals[g].clone(), Matrix::from_cols(ideals[g].len(), &cols))?);
    }
    let mut u = Vec::with_capacity(n * n);
    for r in 0..n {
        for s in 0..n {
            let rs = group.mul(r, s);
            let inner = alg.mul(&units[group.inv(r)], &v[s]);
            let moved = plain[r].apply(&inner, tol)?;
            u.push(alg.mul3(&v[r], &moved, &alg.star(&v[rs])));
        }
    }
    Ok(TwistedPartialAction { algebra: alg, group: group.clone(), ideals, alpha, u })
}

fn blocks_of(blocks: &[usize], k: usize) -> usize {
    let mut start = 0;
    for (j, &b) in blocks.iter().enumerate() {
        start += b * b;
        if k < start {
            return j;
        }
    }
    panic!("basis index {k} beyond the last block")
}

/// Refuses actions that fail their verifier.
pub(crate) fn require_busby<F: Scalar>(act: &BusbySmithAction<F>) -> Result<()> {
    let rep = verify_busby_smith(act);
    let first = rep.failures().next().map(|f| format!("{}: {}", f.name, f.witness.clone().unwrap_or_default()));
    match first {
        Some(msg) => Err(Error::Unverified(msg)),
        None => Ok(()),
    }
}
