//! Crossed products at finite dimension.
//!
//! `L` is the \*-algebra spanned by the symbols `aδ_s` (`a ∈ E_s`) with
//!
//! ```text
//! a_sδ_s · a_tδ_t = β_s(β_s⁻¹(a_s) a_t) w_{s,t} δ_{st}
//! (aδ_s)*         = β_s⁻¹(a*) w*_{s*,s} δ_{s*}
//! ```
//!
//! and the crossed product is `L` modulo the ideal generated by the order
//! relations `aδ_s − aδ_t` (`s ≤ t`), plus `aτ_nδ_e − aδ_n` for Green actions.
//! Whether these generate the whole null ideal is not assumed: each instance
//! is certified separately by an explicit isomorphism and by the trace form.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::actions::{require_busby, verify_green, BusbySmithAction, GreenAction, Psa};
use crate::algebra::{AlgebraElement, AlgebraQuotient, BasisIdeal, CstarDimension, FdStarAlgebra, Sparse};
use crate::congruence::{NormalClifford, Quotient};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::report::{ClauseCheck, ClauseKind, Report};
use crate::scalar::Scalar;
use crate::semigroup::FiniteInverseSemigroup;

mod decompose;
mod rep;

pub use decompose::{
    decompose_busby, decompose_green, green_group_image, semigroup_cstar_reports, BusbyDecomposition,
    GreenDecomposition,
};
pub use rep::{left_regular, rep_from_algebra_rep, verify_covariant, verify_round_trip, CovariantRep};

/// The convolution algebra `L` of an action, on the basis `b_kδ_s` ordered
/// lexicographically by `(s, k)`.
#[derive(Clone, Debug)]
pub struct Convolution<F> {
    pub algebra: FdStarAlgebra<F>,
    /// `index[j] = (s, k)`: basis vector `j` is `b_kδ_s`, `k` an ambient
    /// basis index of `A` lying in `E_s`.
    pub index: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    ideals: Vec<BasisIdeal>,
    base_dim: usize,
}

impl<F: Scalar> Convolution<F> {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `aδ_s`; fails when `a ∉ E_s`.
    pub fn delta(&self, s: usize, a: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        place(&self.ideals, &self.offsets, self.dim(), s, a, self.algebra.tol()).map(AlgebraElement::new)
    }

    /// The coefficient `x(s) ∈ E_s` of `x = Σ x(s)δ_s`.
    pub fn component(&self, x: &AlgebraElement<F>, s: usize) -> AlgebraElement<F> {
        let e = &self.ideals[s];
        let start = self.offsets[s];
        e.embed(self.base_dim, &x.coeffs()[start..start + e.len()])
    }
}

fn place<F: Scalar>(
    ideals: &[BasisIdeal],
    offsets: &[usize],
    dim: usize,
    s: usize,
    a: &AlgebraElement<F>,
    tol: f64,
) -> Result<Vec<F>> {
    let coords = ideals[s].coords(a, tol)?;
    let mut v = vec![F::zero(); dim];
    for (i, c) in coords.into_iter().enumerate() {
        v[offsets[s] + i] = c;
    }
    Ok(v)
}

fn sparse<F: Scalar>(v: Vec<F>) -> Sparse<F> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero_tol(0.0)).collect()
}

/// Structure constants of `L` from the displayed formulas; no verification.
fn convolution<F: Scalar>(act: &BusbySmithAction<F>) -> Result<Convolution<F>> {
    let alg = &act.algebra;
    let s = &act.semigroup;
    let tol = alg.tol();
    let mut index = Vec::new();
    let mut offsets = Vec::with_capacity(s.size());
    for x in 0..s.size() {
        offsets.push(index.len());
        index.extend(act.ideals[x].indices().iter().map(|&k| (x, k)));
    }
    let labels = index.iter().map(|&(x, k)| format!("{}δ{}", alg.label(k), s.label(x))).collect();
    let d = index.len();
    let delta = |x: usize, a: &AlgebraElement<F>| place(&act.ideals, &offsets, d, x, a, tol).map(sparse);
    let inv = act.beta.iter().map(|b| b.inverse(tol)).collect::<Result<Vec<Psa<F>>>>()?;
    let mut table = Vec::with_capacity(d * d);
    for &(x, i) in &index {
        let back = inv[x].apply(&alg.basis(i), tol)?;
        for &(y, j) in &index {
            let moved = act.beta[x].apply(&alg.mul(&back, &alg.basis(j)), tol)?;
            let val = alg.mul(&moved, act.w(x, y));
            table.push(delta(s.mul(x, y), &val)?);
        }
    }
    let mut stars = Vec::with_capacity(d);
    for &(x, i) in &index {
        let xs = s.star(x);
        let back = inv[x].apply(&alg.star(&alg.basis(i)), tol)?;
        let val = alg.mul(&back, &alg.star(act.w(xs, x)));
        stars.push(delta(xs, &val)?);
    }
    Ok(Convolution {
        algebra: FdStarAlgebra::new(labels, table, stars, tol)?,
        index,
        offsets,
        ideals: act.ideals.clone(),
        base_dim: alg.dim(),
    })
}

/// `L` for a verified action.
pub fn build_l<F: Scalar>(act: &BusbySmithAction<F>) -> Result<Convolution<F>> {
    require_busby(act)?;
    convolution(act)
}

/// `b_kδ_s − b_kδ_t` for `s < t` and `k` in the basis of `E_s`.
pub fn order_relations<F: Scalar>(s: &FiniteInverseSemigroup, l: &Convolution<F>) -> Result<Vec<AlgebraElement<F>>> {
    let mut out = Vec::new();
    for x in 0..s.size() {
        for y in 0..s.size() {
            if x == y || !s.leq(x, y) {
                continue;
            }
            for &k in l.ideals[x].indices() {
                let b = AlgebraElement::basis(l.base_dim, k);
                out.push(l.delta(x, &b)?.sub(&l.delta(y, &b)?));
            }
        }
    }
    Ok(out)
}

/// `L` together with its quotient by the ideal its relations generate.
#[derive(Clone, Debug)]
pub struct CrossedProduct<F> {
    pub l: Convolution<F>,
    pub generators: Vec<AlgebraElement<F>>,
    pub quotient: AlgebraQuotient<F>,
    pub cstar: CstarDimension,
    /// Associativity and involution laws of `L` on basis triples.
    pub l_report: Report,
}

impl<F: Scalar> CrossedProduct<F> {
    fn new(l: Convolution<F>, generators: Vec<AlgebraElement<F>>) -> Self {
        let ideal = l.algebra.ideal_closure(&generators);
        let quotient = l.algebra.quotient(ideal);
        let cstar = quotient.algebra.cstar_dimension();
        let l_report = l.algebra.verify();
        CrossedProduct { l, generators, quotient, cstar, l_report }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// The class of `aδ_s`.
    pub fn class_delta(&self, s: usize, a: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        Ok(self.quotient.project(&self.l.delta(s, a)?))
    }

    /// Dimension values and certification flags.
    pub fn summary(&self, title: &str) -> Report {
        let mut rep = Report::new(title);
        rep.value("dim_l", self.l.dim());
        rep.value("dim_quotient", self.dim());
        rep.value("radical_dim", self.cstar.radical_dim);
        rep.value("cstar_dim", self.cstar.dim);
        rep.absorb("l", self.l_report.clone());
        rep.assert("trace_form_certified", ClauseKind::Check, self.cstar.certified, || {
            "trace form is not positive modulo the radical".into()
        });
        rep
    }
}

/// `L / ⟨order relations⟩` for a verified Busby-Smith action.
pub fn quotient_crossed_product<F: Scalar>(act: &BusbySmithAction<F>) -> Result<CrossedProduct<F>> {
    let l = build_l(act)?;
    let gens = order_relations(&act.semigroup, &l)?;
    Ok(CrossedProduct::new(l, gens))
}

/// The untwisted action `(γ, 1)` underlying a Green action.
fn untwisted<F: Scalar>(green: &GreenAction<F>) -> Result<BusbySmithAction<F>> {
    BusbySmithAction::trivially_twisted(
        green.algebra.clone(),
        green.semigroup.clone(),
        green.ideals.clone(),
        green.gamma.clone(),
    )
}

fn require_green<F: Scalar>(green: &GreenAction<F>) -> Result<()> {
    let rep = verify_green(green);
    let first = rep.failures().next().map(|f| format!("{}: {}", f.name, f.witness.clone().unwrap_or_default()));
    match first {
        Some(msg) => Err(Error::Unverified(msg)),
        None => Ok(()),
    }
}

/// `b_kτ_nδ_e − b_kδ_n` for `n ∈ N` and `k` in the basis of `E_n`.
pub fn twist_relations<F: Scalar>(green: &GreenAction<F>, l: &Convolution<F>) -> Result<Vec<AlgebraElement<F>>> {
    let s = &green.semigroup;
    let e = s.unit().ok_or_else(|| Error::NoIdentity("Green action over a semigroup without unit".into()))?;
    let alg = &green.algebra;
    let mut out = Vec::new();
    for &n in green.normal.elements() {
        let tau = green.tau(n).ok_or_else(|| Error::Input(format!("τ is undefined at {}", s.label(n))))?;
        for &k in green.ideals[n].indices() {
            let b = alg.basis(k);
            out.push(l.delta(e, &alg.mul(&b, tau))?.sub(&l.delta(n, &b)?));
        }
    }
    Ok(out)
}

/// `L(γ) / ⟨order relations, twist relations⟩` for a verified Green action.
pub fn green_crossed_product<F: Scalar>(green: &GreenAction<F>) -> Result<CrossedProduct<F>> {
    require_green(green)?;
    let l = convolution(&untwisted(green)?)?;
    let mut gens = order_relations(&green.semigroup, &l)?;
    gens.extend(twist_relations(green, &l)?);
    Ok(CrossedProduct::new(l, gens))
}

/// Checks that `map` (target coordinates × source coordinates) is a
/// surjective \*-homomorphism whose kernel is exactly `relations`. A pass
/// certifies `source / relations ≅ target`.
pub fn verify_explicit_iso<F: Scalar>(
    map: &Matrix<F>,
    source: &FdStarAlgebra<F>,
    relations: &Subspace<F>,
    target: &FdStarAlgebra<F>,
) -> Report {
    let mut rep = Report::new("explicit isomorphism");
    let tol = target.tol();
    let (d, t) = (source.dim(), target.dim());
    let shape_ok = map.cols() == d && map.rows() == t && relations.ambient() == d;
    rep.assert("shape", ClauseKind::Check, shape_ok, || {
        format!("map is {}×{}, expected {t}×{d}", map.rows(), map.cols())
    });
    if !shape_ok {
        return rep;
    }
    let f = |x: &AlgebraElement<F>| AlgebraElement::new(map.mul_vec(x.coeffs()));
    let images: Vec<AlgebraElement<F>> = (0..d).map(|i| f(&source.basis(i))).collect();
    let mut hom = ClauseCheck::new("multiplicative", ClauseKind::Check);
    'outer: for i in 0..d {
        for j in 0..d {
            let lhs = f(&source.mul(&source.basis(i), &source.basis(j)));
            let rhs = target.mul(&images[i], &images[j]);
            if !hom.check(lhs.approx_eq(&rhs, tol), || {
                format!("φ({}·{}) ≠ φ({})φ({})", source.label(i), source.label(j), source.label(i), source.label(j))
            }) {
                break 'outer;
            }
        }
    }
    rep.push(hom.finish());
    let mut star = ClauseCheck::new("star_preserving", ClauseKind::Check);
    for i in 0..d {
        let ok = f(&source.star(&source.basis(i))).approx_eq(&target.star(&images[i]), tol);
        if !star.check(ok, || format!("φ({}*) ≠ φ({})*", source.label(i), source.label(i))) {
            break;
        }
    }
    rep.push(star.finish());
    let rank = map.rank(tol);
    rep.assert("surjective", ClauseKind::Check, rank == t, || format!("rank {rank} < {t}"));
    let kills = relations.basis().iter().all(|v| map.mul_vec(v).iter().all(|c| c.is_zero_tol(tol)));
    let kernel_dim = d - rank;
    rep.assert("kernel_is_relations", ClauseKind::Check, kills && kernel_dim == relations.dim(), || {
        format!("kernel dimension {kernel_dim}, relation dimension {}, relations killed: {kills}", relations.dim())
    });
    rep.value("source_dim", d);
    rep.value("target_dim", t);
    rep.value("kernel_dim", kernel_dim);
    rep
}

/// `aδ_q ↦ a·r(q)` from the `L` of an action on `C*(N)` over `T/N` into the
/// semigroup algebra of `T`, for any choice of representatives `r`.
pub fn semigroup_section_map<F: Scalar>(
    t: &FiniteInverseSemigroup,
    n: &NormalClifford,
    q: &Quotient,
    reps: &[usize],
    l: &Convolution<F>,
) -> Result<Matrix<F>> {
    if reps.len() != q.semigroup.size() {
        return Err(Error::Input("one representative per class expected".into()));
    }
    let mut elems = n.elements().to_vec();
    elems.sort_unstable();
    if l.base_dim != elems.len() {
        return Err(Error::CarrierMismatch);
    }
    let mut m = Matrix::zeros(t.size(), l.dim());
    for (j, &(x, k)) in l.index.iter().enumerate() {
        m.set(t.mul(elems[k], reps[x]), j, F::one());
    }
    Ok(m)
}

/// A basis adapted to a family of ideals of a semisimple algebra: the
/// columns of the returned matrix, grouped so that each ideal is spanned by
/// a subset of them, and those subsets.
pub(crate) fn adapted_basis<F: Scalar>(
    alg: &FdStarAlgebra<F>,
    ideals: &[Vec<Vec<F>>],
) -> Result<(Matrix<F>, Vec<BasisIdeal>)> {
    let d = alg.dim();
    let tol = alg.tol();
    let full: Vec<Vec<F>> = (0..d).map(|i| alg.basis(i).into_coeffs()).collect();
    // Each atom carries its membership in the ideals processed so far.
    let mut atoms: Vec<(Vec<Vec<F>>, Vec<bool>)> = vec![(full, Vec::new())];
    for ideal in ideals {
        let ideal = Subspace::spanned_by(d, ideal, tol).basis();
        let ann = annihilator(alg, &ideal);
        let mut next = Vec::new();
        for (atom, member) in atoms {
            for (side, inside) in [(&ideal, true), (&ann, false)] {
                let part = intersect(d, &atom, side, tol);
                if !part.is_empty() {
                    let mut m = member.clone();
                    m.push(inside);
                    next.push((part, m));
                }
            }
        }
        atoms = next;
    }
    let total: usize = atoms.iter().map(|(a, _)| a.len()).sum();
    if total != d {
        return Err(Error::NotBasisAligned(format!(
            "ideal atoms span {total} of {d} dimensions; the algebra is not semisimple on them"
        )));
    }
    let mut cols = Vec::with_capacity(d);
    let mut members = vec![Vec::new(); ideals.len()];
    for (atom, member) in atoms {
        for v in atom {
            for (j, &inside) in member.iter().enumerate() {
                if inside {
                    members[j].push(cols.len());
                }
            }
            cols.push(v);
        }
    }
    Ok((Matrix::from_cols(d, &cols), members.into_iter().map(BasisIdeal::new).collect()))
}

/// `{x : x y = 0 for all y ∈ I}`.
fn annihilator<F: Scalar>(alg: &FdStarAlgebra<F>, ideal: &[Vec<F>]) -> Vec<Vec<F>> {
    let d = alg.dim();
    let mut rows = Vec::with_capacity(d * ideal.len());
    for y in ideal {
        let y = AlgebraElement::new(y.clone());
        let cols: Vec<Vec<F>> = (0..d).map(|j| alg.mul(&alg.basis(j), &y).into_coeffs()).collect();
        rows.extend(Matrix::from_cols(d, &cols).row_vecs());
    }
    if rows.is_empty() {
        return (0..d).map(|i| alg.basis(i).into_coeffs()).collect();
    }
    Matrix::from_rows(rows).kernel(alg.tol())
}

fn intersect<F: Scalar>(d: usize, u: &[Vec<F>], v: &[Vec<F>], tol: f64) -> Vec<Vec<F>> {
    if u.is_empty() || v.is_empty() {
        return Vec::new();
    }
    let mut cols: Vec<Vec<F>> = u.to_vec();
    cols.extend(v.iter().map(|x| x.iter().map(|c| -c.clone()).collect()));
    let k = Matrix::from_cols(d, &cols).kernel(tol);
    let vecs: Vec<Vec<F>> = k
        .iter()
        .map(|coef| {
            let mut out = vec![F::zero(); d];
            for (c, col) in coef.iter().zip(u) {
                for (o, x) in out.iter_mut().zip(col) {
                    *o = o.clone() + c.clone() * x.clone();
                }
            }
            out
        })
        .collect();
    Subspace::spanned_by(d, &vecs, tol).basis()
}
