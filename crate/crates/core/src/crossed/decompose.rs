//! Iterated crossed products and the semigroup C\*-algebra identities.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{adapted_basis, green_crossed_product, quotient_crossed_product, verify_explicit_iso, CrossedProduct};
use crate::actions::{
    action_from_cross_section, fell_generated, green_canonical, green_to_busby, ideal_units, require_busby,
    verify_busby_smith, verify_green, BusbySmithAction, GreenAction, Psa,
};
use crate::algebra::{AlgebraElement, BasisIdeal, FdStarAlgebra};
use crate::congruence::{quotient_by, NormalClifford, Quotient};
use crate::cross_section::{find_order_preserving, is_order_preserving, CrossSection, SectionSearch};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::report::{ClauseKind, Report};
use crate::scalar::Scalar;
use crate::semigroup::FiniteInverseSemigroup;

fn local(emb: &[usize], x: usize) -> Option<usize> {
    emb.binary_search(&x).ok()
}

fn restrict_green<F: Scalar>(green: &GreenAction<F>, k: &NormalClifford) -> Result<(GreenAction<F>, Vec<usize>)> {
    let (sub, emb) = green.semigroup.sub_semigroup(k.elements())?;
    let n_local = green
        .normal
        .elements()
        .iter()
        .map(|&x| local(&emb, x).ok_or_else(|| Error::Input("K does not contain N".into())))
        .collect::<Result<Vec<_>>>()?;
    let normal = NormalClifford::new(&sub, &n_local)?;
    let act = GreenAction {
        algebra: green.algebra.clone(),
        semigroup: sub,
        normal,
        ideals: emb.iter().map(|&x| green.ideals[x].clone()).collect(),
        gamma: emb.iter().map(|&x| green.gamma[x].clone()).collect(),
        tau: emb.iter().map(|&x| green.tau[x].clone()).collect(),
    };
    Ok((act, emb))
}

fn restrict_busby<F: Scalar>(
    act: &BusbySmithAction<F>,
    l: &NormalClifford,
) -> Result<(BusbySmithAction<F>, Vec<usize>)> {
    let (sub, emb) = act.semigroup.sub_semigroup(l.elements())?;
    let mut w = Vec::with_capacity(emb.len() * emb.len());
    for &x in &emb {
        for &y in &emb {
            w.push(act.w(x, y).clone());
        }
    }
    let r = BusbySmithAction::new(
        act.algebra.clone(),
        sub,
        emb.iter().map(|&x| act.ideals[x].clone()).collect(),
        emb.iter().map(|&x| act.beta[x].clone()).collect(),
        w,
    )?;
    Ok((r, emb))
}

/// `B = inner` re-expressed on a basis adapted to the ideals `Ẽ_f`, with its
/// embedding `ι` into `outer`.
struct Inner<F> {
    algebra: FdStarAlgebra<F>,
    /// Columns: `ι(b'_j)` in the quotient coordinates of `outer`.
    iota: Matrix<F>,
    /// `Ẽ_f` for every idempotent `f` of the outer semigroup.
    ideals: Vec<Option<BasisIdeal>>,
    report: Report,
}

impl<F: Scalar> Inner<F> {
    fn build(
        outer: &CrossedProduct<F>,
        inner: &CrossedProduct<F>,
        emb: &[usize],
        s: &FiniteInverseSemigroup,
    ) -> Result<Self> {
        let c = &outer.quotient.algebra;
        let b = &inner.quotient.algebra;
        let tol = c.tol();
        let base = inner.l.base_dim;
        let cols = inner
            .quotient
            .survivors
            .iter()
            .map(|&j| {
                let (k, a) = inner.l.index[j];
                outer.class_delta(emb[k], &AlgebraElement::basis(base, a)).map(|x| x.into_coeffs())
            })
            .collect::<Result<Vec<_>>>()?;
        let iota = Matrix::from_cols(c.dim(), &cols);
        let mut report = Report::new("embedding of the inner crossed product");
        let rank = iota.rank(tol);
        report.assert("iota_injective", ClauseKind::Check, rank == b.dim(), || format!("rank {rank} < {}", b.dim()));
        let same = Matrix::identity(b.dim());
        report.absorb("iota", verify_explicit_iso(&same, b, &Subspace::new(b.dim(), tol), &image_algebra(c, &iota)?));
        let idems = s.idempotents();
        let mut families = Vec::with_capacity(idems.len());
        for &f in &idems {
            let mut vs = Vec::new();
            for (j, &(k, _)) in inner.l.index.iter().enumerate() {
                if s.leq(s.range_idem(emb[k]), f) {
                    vs.push(inner.quotient.project(&inner.l.algebra.basis(j)).into_coeffs());
                }
            }
            families.push(vs);
        }
        let (change, adapted) = adapted_basis(b, &families)?;
        let labels = (0..b.dim()).map(|j| format!("x{j}")).collect();
        let algebra = b.rebase(&change, labels)?;
        let mut ideals = vec![None; s.size()];
        for (&f, e) in idems.iter().zip(adapted) {
            ideals[f] = Some(e);
        }
        Ok(Inner { algebra, iota: iota.mul(&change), ideals, report })
    }

    fn ideal(&self, f: usize) -> &BasisIdeal {
        self.ideals[f].as_ref().expect("ideal of an idempotent")
    }

    fn image(&self, j: usize) -> AlgebraElement<F> {
        AlgebraElement::new(self.iota.col(j))
    }

    /// `ι⁻¹(z)`.
    fn pull(&self, z: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.iota
            .solve(z.coeffs(), self.algebra.tol())
            .map(AlgebraElement::new)
            .ok_or_else(|| Error::NotClosed("element outside the image of the inner crossed product".into()))
    }

    /// `Ad m : dom → ran`, computed in the outer algebra.
    fn conjugation(
        &self,
        c: &FdStarAlgebra<F>,
        m: &AlgebraElement<F>,
        dom: &BasisIdeal,
        ran: &BasisIdeal,
    ) -> Result<Psa<F>> {
        let ms = c.star(m);
        let tol = c.tol();
        let cols = dom
            .indices()
            .iter()
            .map(|&k| {
                let z = c.mul3(m, &self.image(k), &ms);
                ran.coords(&self.pull(&z)?, tol)
            })
            .collect::<Result<Vec<_>>>()?;
        Psa::new(dom.clone(), ran.clone(), Matrix::from_cols(ran.len(), &cols))
    }
}

/// The subalgebra spanned by the columns of `iota`, on that basis; used to
/// check that `ι` is an injective \*-homomorphism.
fn image_algebra<F: Scalar>(c: &FdStarAlgebra<F>, iota: &Matrix<F>) -> Result<FdStarAlgebra<F>> {
    let d = iota.cols();
    let tol = c.tol();
    let col = |j: usize| AlgebraElement::new(iota.col(j));
    let solve = |x: AlgebraElement<F>| {
        iota.solve(x.coeffs(), tol)
            .map(|v| v.into_iter().enumerate().filter(|(_, c)| !c.is_zero_tol(0.0)).collect::<Vec<_>>())
            .ok_or_else(|| Error::NotClosed("image of ι is not a subalgebra".into()))
    };
    let mut table = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            table.push(solve(c.mul(&col(i), &col(j)))?);
        }
    }
    let stars = (0..d).map(|i| solve(c.star(&col(i)))).collect::<Result<Vec<_>>>()?;
    FdStarAlgebra::new((0..d).map(|j| format!("ι{j}")).collect(), table, stars, tol)
}

/// Both sides of `A ×_{γ,τ} S ≅ (A ×_{γ,τ} K) ×_{γ̃,τ̃} S`.
#[derive(Clone, Debug)]
pub struct GreenDecomposition<F> {
    pub direct: CrossedProduct<F>,
    pub inner: CrossedProduct<F>,
    /// `(A ×_{γ,τ} K, S, K, γ̃, τ̃)` with `γ̃_s = Ad m_s`, `τ̃_k = m_k`.
    pub iterated: Option<GreenAction<F>>,
    pub iterated_product: Option<CrossedProduct<F>>,
    pub report: Report,
}

/// Builds and compares both sides of the iterated Green decomposition.
pub fn decompose_green<F: Scalar>(green: &GreenAction<F>, k: &NormalClifford) -> Result<GreenDecomposition<F>> {
    let s = &green.semigroup;
    if green.normal.elements().iter().any(|&n| !k.contains(n)) {
        return Err(Error::Input("K does not contain N".into()));
    }
    let mut rep = Report::new("iterated Green crossed product");
    let direct = green_crossed_product(green)?;
    let (gk, emb) = restrict_green(green, k)?;
    let inner = green_crossed_product(&gk)?;
    let b = Inner::build(&direct, &inner, &emb, s)?;
    rep.absorb("embedding", b.report.clone());
    let c = &direct.quotient.algebra;
    let units = ideal_units(&green.algebra, &green.ideals)?;
    let m = (0..s.size()).map(|x| direct.class_delta(x, &units[x])).collect::<Result<Vec<_>>>()?;
    let ideals: Vec<BasisIdeal> = (0..s.size()).map(|x| b.ideal(s.range_idem(x)).clone()).collect();
    let gamma =
        (0..s.size()).map(|x| b.conjugation(c, &m[x], &ideals[s.star(x)], &ideals[x])).collect::<Result<Vec<_>>>()?;
    let tau = (0..s.size())
        .map(|x| if k.contains(x) { b.pull(&m[x]).map(Some) } else { Ok(None) })
        .collect::<Result<Vec<_>>>()?;
    let iterated =
        GreenAction { algebra: b.algebra.clone(), semigroup: s.clone(), normal: k.clone(), ideals, gamma, tau };
    rep.absorb("iterated", verify_green(&iterated));
    rep.value("dim_direct", direct.dim());
    rep.value("dim_inner", inner.dim());
    if !rep.passed() {
        rep.note("iterated Green data failed verification; no iterated product formed");
        return Ok(GreenDecomposition { direct, inner, iterated: Some(iterated), iterated_product: None, report: rep });
    }
    let product = green_crossed_product(&iterated)?;
    rep.value("dim_iterated", product.dim());
    rep.assert("dims_equal", ClauseKind::Check, product.dim() == direct.dim(), || {
        format!("direct {} vs iterated {}", direct.dim(), product.dim())
    });
    let phi = iterated_map(&product, &b, c, |x| m[x].clone());
    rep.absorb("iso", verify_explicit_iso(&phi, &product.l.algebra, &product.quotient.relations, c));
    Ok(GreenDecomposition { direct, inner, iterated: Some(iterated), iterated_product: Some(product), report: rep })
}

/// `bδ_s ↦ ι(b) m_s` from the `L` of an iterated action into the outer
/// quotient.
fn iterated_map<F: Scalar>(
    product: &CrossedProduct<F>,
    b: &Inner<F>,
    c: &FdStarAlgebra<F>,
    m: impl Fn(usize) -> AlgebraElement<F>,
) -> Matrix<F> {
    let cols: Vec<Vec<F>> = product.l.index.iter().map(|&(x, j)| c.mul(&b.image(j), &m(x)).into_coeffs()).collect();
    Matrix::from_cols(c.dim(), &cols)
}

/// Both sides of `A ×_{β,w} T ≅ (A ×_{β,w} L) ×_{β̃,w̃} T/L`.
#[derive(Clone, Debug)]
pub struct BusbyDecomposition<F> {
    pub quotient: Quotient,
    pub section: CrossSection,
    pub direct: CrossedProduct<F>,
    pub inner: CrossedProduct<F>,
    /// `β̃_q = Ad m_{c(q)}`, `w̃_{q,r} = m_{c(q)} m_{c(r)} m*_{c(qr)}`.
    pub iterated: Option<BusbySmithAction<F>>,
    pub iterated_product: Option<CrossedProduct<F>>,
    pub report: Report,
}

fn section_for(
    t: &FiniteInverseSemigroup,
    l: &NormalClifford,
    c: Option<&CrossSection>,
) -> Result<(Quotient, CrossSection)> {
    match c {
        Some(c) => {
            let q = quotient_by(t, l);
            let rep = is_order_preserving(t, &q, c);
            if let Some(f) = rep.failures().next() {
                return Err(Error::NotOrderPreserving(format!(
                    "{}: {}",
                    f.name,
                    f.witness.clone().unwrap_or_default()
                )));
            }
            Ok((q, c.clone()))
        }
        None => match find_order_preserving(t, l) {
            (q, SectionSearch::Found(c)) => Ok((q, c)),
            (q, SectionSearch::Exhausted { obstructions }) => {
                let why: Vec<String> = obstructions.iter().map(|o| o.describe(&q)).collect();
                Err(Error::NoOrderPreservingSection(why.join("; ")))
            }
        },
    }
}

/// Builds and compares both sides of the iterated Busby-Smith
/// decomposition. The direct route embeds `A ×_{β,w} L` in `A ×_{β,w} T`
/// and certifies an explicit isomorphism; the second route follows the
/// chain through the Green action of the generated unitary semigroup and
/// reports its dimensions under `chain`. `cap` bounds that semigroup.
pub fn decompose_busby<F: Scalar + Ord>(
    act: &BusbySmithAction<F>,
    l: &NormalClifford,
    c: Option<&CrossSection>,
    cap: usize,
) -> Result<BusbyDecomposition<F>> {
    require_busby(act)?;
    let t = &act.semigroup;
    let (q, section) = section_for(t, l, c)?;
    let qs = &q.semigroup;
    let mut rep = Report::new("iterated Busby-Smith crossed product");
    let direct = quotient_crossed_product(act)?;
    let (al, emb) = restrict_busby(act, l)?;
    let inner = quotient_crossed_product(&al)?;
    let b = Inner::build(&direct, &inner, &emb, t)?;
    rep.absorb("embedding", b.report.clone());
    let x = &direct.quotient.algebra;
    let units = ideal_units(&act.algebra, &act.ideals)?;
    let m = (0..t.size()).map(|y| direct.class_delta(y, &units[y])).collect::<Result<Vec<_>>>()?;
    let mc = |r: usize| &m[section.get(r)];
    let ideals: Vec<BasisIdeal> = (0..qs.size()).map(|r| b.ideal(t.range_idem(section.get(r))).clone()).collect();
    let beta =
        (0..qs.size()).map(|r| b.conjugation(x, mc(r), &ideals[qs.star(r)], &ideals[r])).collect::<Result<Vec<_>>>()?;
    let mut w = Vec::with_capacity(qs.size() * qs.size());
    for r in 0..qs.size() {
        for s in 0..qs.size() {
            let z = x.mul3(mc(r), mc(s), &x.star(mc(qs.mul(r, s))));
            w.push(b.pull(&z)?);
        }
    }
    let iterated = BusbySmithAction::new(b.algebra.clone(), qs.clone(), ideals, beta, w)?;
    rep.absorb("iterated", verify_busby_smith(&iterated));
    rep.value("dim_direct", direct.dim());
    rep.value("dim_inner", inner.dim());
    let mut product = None;
    if rep.passed() {
        let p = quotient_crossed_product(&iterated)?;
        rep.value("dim_iterated", p.dim());
        rep.assert("dims_equal", ClauseKind::Check, p.dim() == direct.dim(), || {
            format!("direct {} vs iterated {}", direct.dim(), p.dim())
        });
        let phi = iterated_map(&p, &b, x, |r| mc(r).clone());
        rep.absorb("iso", verify_explicit_iso(&phi, &p.l.algebra, &p.quotient.relations, x));
        product = Some(p);
    } else {
        rep.note("iterated Busby-Smith data failed verification; no iterated product formed");
    }
    rep.absorb("chain", fell_chain(act, l, &q, &section, direct.dim(), cap)?);
    Ok(BusbyDecomposition {
        quotient: q,
        section,
        direct,
        inner,
        iterated: Some(iterated),
        iterated_product: product,
        report: rep,
    })
}

/// `A ×_{β,w} T ≅ A ×_{γ,τ} S ≅ (A ×_{γ,τ} K) ×_{γ̃,τ̃} S ≅ (…) ×_{α̃,ũ} S/K`
/// with `S` generated by the `1∂_t` and `K = {u∂_l : l ∈ L}`.
fn fell_chain<F: Scalar + Ord>(
    act: &BusbySmithAction<F>,
    l: &NormalClifford,
    q: &Quotient,
    c: &CrossSection,
    direct_dim: usize,
    cap: usize,
) -> Result<Report> {
    let mut rep = Report::new("chain through the unitary semigroup");
    let t = &act.semigroup;
    let fg = fell_generated(act, cap)?;
    let sf = &fg.green.semigroup;
    rep.value("fell_size", sf.size());
    let kf_list: Vec<usize> = (0..sf.size()).filter(|&i| l.contains(fg.generated.elements[i].t)).collect();
    let kf = NormalClifford::new(sf, &kf_list)?;
    let gd = decompose_green(&fg.green, &kf)?;
    rep.absorb("green", gd.report.clone());
    rep.value("dim_green", gd.direct.dim());
    rep.assert("green_matches_direct", ClauseKind::Check, gd.direct.dim() == direct_dim, || {
        format!("Green {} vs Busby-Smith {}", gd.direct.dim(), direct_dim)
    });
    let Some(iter_green) = gd.iterated.as_ref().filter(|_| gd.report.passed()) else {
        return Ok(rep);
    };
    let one = |x: usize| fg.section.get(fg.phi[x]);
    let qf = quotient_by(sf, &kf);
    let mut reps = vec![usize::MAX; qf.semigroup.size()];
    for x in 0..t.size() {
        reps[qf.project(one(x))] = one(c.get(q.project(x)));
    }
    if reps.contains(&usize::MAX) {
        return Err(Error::Input("a class of S/K contains no element 1∂_t".into()));
    }
    let d = CrossSection::new(&qf, reps)?;
    let busby = green_to_busby(iter_green, &qf, &d)?;
    let vr = verify_busby_smith(&busby);
    let ok = vr.passed();
    rep.absorb("induced", vr);
    if ok {
        let p = quotient_crossed_product(&busby)?;
        rep.value("dim_iterated", p.dim());
        rep.assert("iterated_matches_direct", ClauseKind::Check, p.dim() == direct_dim, || {
            format!("iterated {} vs direct {}", p.dim(), direct_dim)
        });
    }
    Ok(rep)
}

/// `(C*(G_K), S, K, α, σ)` with `E_s = C*(G_K)`, `α_s([k]) = [sks*]` and
/// `σ_k = [k]`.
pub fn green_group_image<F: Scalar>(s: &FiniteInverseSemigroup, k: &NormalClifford) -> Result<GreenAction<F>> {
    let (sub, emb) = s.sub_semigroup(k.elements())?;
    let (g, proj) = sub.max_group_image();
    let alg = FdStarAlgebra::<F>::from_group_algebra(&g);
    let m = g.order();
    let mut rep_of = vec![usize::MAX; m];
    for (i, &p) in proj.iter().enumerate() {
        if rep_of[p] == usize::MAX {
            rep_of[p] = emb[i];
        }
    }
    let full = BasisIdeal::full(m);
    let class = |x: usize| {
        local(&emb, x).map(|i| proj[i]).ok_or_else(|| Error::NotClosed(format!("{} is outside K", s.label(x))))
    };
    let mut gamma = Vec::with_capacity(s.size());
    for x in 0..s.size() {
        let mut mat = Matrix::zeros(m, m);
        for (j, &r) in rep_of.iter().enumerate() {
            mat.set(class(s.mul3(x, r, s.star(x)))?, j, F::one());
        }
        gamma.push(Psa::new(full.clone(), full.clone(), mat)?);
    }
    let tau = (0..s.size())
        .map(|x| if k.contains(x) { class(x).map(|c| Some(AlgebraElement::basis(m, c))) } else { Ok(None) })
        .collect::<Result<Vec<_>>>()?;
    Ok(GreenAction { algebra: alg, semigroup: s.clone(), normal: k.clone(), ideals: vec![full; s.size()], gamma, tau })
}

/// Dimension equalities for `C*(S) ≅ C*(E) ×_β S`, `C*(S) ≅ C*(N) ×_{α,σ} S`,
/// `C*(G_S) ≅ C*(G_N) ×_{α,σ} S`, and, over an order-preserving section,
/// `C*(S) ≅ C*(N) ×_{β,w} S/N` and `C*(G_S) ≅ C*(G_N) ×_{β,w} S/N`.
pub fn semigroup_cstar_reports<F: Scalar>(s: &FiniteInverseSemigroup, n: &NormalClifford) -> Result<Report> {
    let mut rep = Report::new("semigroup C*-algebras as crossed products");
    let cs = FdStarAlgebra::<F>::from_semigroup_algebra(s, None)?.cstar_dimension();
    rep.assert("semigroup_algebra_certified", ClauseKind::Check, cs.certified && cs.radical_dim == 0, || {
        format!("radical dimension {}, certified {}", cs.radical_dim, cs.certified)
    });
    let gs = s.max_group_image().0.order();
    rep.value("dim_cstar_s", cs.dim);
    rep.value("order_g_s", gs);
    let mut eq = |name: &str, lhs: usize, rhs: usize| {
        rep.value(&format!("dim_{name}"), rhs);
        rep.assert(name, ClauseKind::Check, lhs == rhs, || format!("{lhs} ≠ {rhs}"));
    };
    let e = NormalClifford::idempotents(s);
    eq("canonical", cs.dim, green_crossed_product(&green_canonical::<F>(s, &e)?)?.dim());
    let green = green_canonical::<F>(s, n)?;
    eq("green_semigroup_algebra", cs.dim, green_crossed_product(&green)?.dim());
    let group = green_group_image::<F>(s, n)?;
    eq("green_group_image", gs, green_crossed_product(&group)?.dim());
    let (q, c) = section_for(s, n, None)?;
    let busby = action_from_cross_section::<F>(s, n, &q, &c)?;
    eq("busby_semigroup_algebra", cs.dim, quotient_crossed_product(&busby)?.dim());
    let busby_group = green_to_busby(&group, &q, &c)?;
    eq("busby_group_image", gs, quotient_crossed_product(&busby_group)?.dim());
    let order_g_n = group.algebra.dim();
    rep.value("order_g_n", order_g_n);
    Ok(rep)
}
