//! Finite-dimensional \*-algebras given by structure constants on a basis,
//! together with basis-aligned ideals and partial \*-automorphisms between
//! them.
//!
//! Every ideal that appears in this crate is the span of a subset of the
//! basis, and every such ideal of a semisimple algebra is unital, so
//! multipliers of an ideal are simply elements of it.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_psd, Matrix, PsdVerdict, Subspace};
use crate::report::{ClauseCheck, ClauseKind, Report};
use crate::scalar::Scalar;
use crate::semigroup::{FiniteInverseSemigroup, Group};

/// Sparse combination of basis vectors.
pub type Sparse<F> = Vec<(usize, F)>;

/// A vector of coefficients on an algebra's basis. Carries no reference to
/// the algebra; operations check lengths instead.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlgebraElement<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> AlgebraElement<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraElement { coeffs: vec![F::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut x = Self::zero(dim);
        x.coeffs[i] = F::one();
        x
    }

    pub fn from_sparse(dim: usize, terms: &[(usize, F)]) -> Self {
        let mut x = Self::zero(dim);
        for (i, c) in terms {
            x.coeffs[*i] = x.coeffs[*i].clone() + c.clone();
        }
        x
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &F {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "element length mismatch");
        AlgebraElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "element length mismatch");
        AlgebraElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().map(|a| c.clone() * a.clone()).collect() }
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_tol(tol))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim() && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Indices with a coefficient outside the tolerance band.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.coeffs[i].is_zero_tol(tol)).collect()
    }
}

/// Span of a set of basis indices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BasisIdeal {
    indices: Vec<usize>,
}

impl BasisIdeal {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        BasisIdeal { indices }
    }

    pub fn full(dim: usize) -> Self {
        BasisIdeal { indices: (0..dim).collect() }
    }

    pub fn empty() -> Self {
        BasisIdeal::default()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Product of two ideals; for basis-aligned ideals this is the
    /// intersection.
    pub fn intersect(&self, other: &BasisIdeal) -> BasisIdeal {
        BasisIdeal { indices: self.indices.iter().copied().filter(|&i| other.contains(i)).collect() }
    }

    pub fn is_subset_of(&self, other: &BasisIdeal) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    /// Whether `x` is supported inside the ideal.
    pub fn holds<F: Scalar>(&self, x: &AlgebraElement<F>, tol: f64) -> bool {
        x.coeffs.iter().enumerate().all(|(i, c)| self.contains(i) || c.is_zero_tol(tol))
    }

    /// Coordinates of `x` on the ideal's basis; fails if `x` leaves the ideal.
    pub fn coords<F: Scalar>(&self, x: &AlgebraElement<F>, tol: f64) -> Result<Vec<F>> {
        if !self.holds(x, tol) {
            return Err(Error::Input(format!(
                "element with support {:?} is not in the ideal {:?}",
                x.support(tol),
                self.indices
            )));
        }
        Ok(self.indices.iter().map(|&i| x.coeffs[i].clone()).collect())
    }

    pub fn embed<F: Scalar>(&self, dim: usize, coords: &[F]) -> AlgebraElement<F> {
        let mut x = AlgebraElement::zero(dim);
        for (k, &i) in self.indices.iter().enumerate() {
            x.coeffs[i] = coords[k].clone();
        }
        x
    }

    /// Two-sided, star-closed, in range.
    pub fn verify<F: Scalar>(&self, alg: &FdStarAlgebra<F>) -> Report {
        let mut rep = Report::new("basis ideal");
        let tol = alg.tol;
        rep.assert("indices_in_range", ClauseKind::Check, self.indices.iter().all(|&i| i < alg.dim()), || {
            format!("index beyond dimension {}", alg.dim())
        });
        if !rep.passed() {
            return rep;
        }
        let mut two = ClauseCheck::new("two_sided", ClauseKind::Check);
        'outer: for &i in &self.indices {
            for j in 0..alg.dim() {
                let ok = alg.basis_product(i, j).iter().all(|(k, c)| self.contains(*k) || c.is_zero_tol(tol))
                    && alg.basis_product(j, i).iter().all(|(k, c)| self.contains(*k) || c.is_zero_tol(tol));
                if !two.check(ok, || format!("{} · {} leaves the span", alg.label(i), alg.label(j))) {
                    break 'outer;
                }
            }
        }
        rep.push(two.finish());
        let mut star = ClauseCheck::new("star_closed", ClauseKind::Check);
        for &i in &self.indices {
            star.check(alg.basis_star(i).iter().all(|(k, c)| self.contains(*k) || c.is_zero_tol(tol)), || {
                format!("star of {} leaves the span", alg.label(i))
            });
        }
        rep.push(star.finish());
        rep
    }
}

/// Result of [`FdStarAlgebra::cstar_dimension`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CstarDimension {
    pub dim: usize,
    pub radical_dim: usize,
    /// The trace form is positive semidefinite with kernel exactly the radical.
    pub certified: bool,
}

/// A finite-dimensional \*-algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct FdStarAlgebra<F> {
    labels: Vec<String>,
    table: Vec<Sparse<F>>,
    stars: Vec<Sparse<F>>,
    tol: f64,
}

fn clean<F: Scalar>(v: Sparse<F>, tol: f64) -> Sparse<F> {
    let mut dense: Vec<(usize, F)> = Vec::new();
    for (i, c) in v {
        match dense.iter_mut().find(|(j, _)| *j == i) {
            Some((_, d)) => *d = d.clone() + c,
            None => dense.push((i, c)),
        }
    }
    dense.retain(|(_, c)| !c.is_zero_tol(if F::EXACT { 0.0 } else { tol * 1e-3 }));
    dense.sort_by_key(|(i, _)| *i);
    dense
}

fn to_sparse<F: Scalar>(v: &[F], tol: f64) -> Sparse<F> {
    let eps = if F::EXACT { 0.0 } else { tol * 1e-3 };
    v.iter().enumerate().filter(|(_, c)| !c.is_zero_tol(eps)).map(|(i, c)| (i, c.clone())).collect()
}

impl<F: Scalar> FdStarAlgebra<F> {
    /// `table[i * dim + j]` is `b_i · b_j`; `stars[i]` is `b_i*`. Only
    /// shapes and indices are checked; use [`FdStarAlgebra::verify`] for the
    /// algebra laws.
    pub fn new(labels: Vec<String>, table: Vec<Sparse<F>>, stars: Vec<Sparse<F>>, tol: f64) -> Result<Self> {
        let d = labels.len();
        if table.len() != d * d || stars.len() != d {
            return Err(Error::Input(format!(
                "structure data for dimension {d}: {} products, {} stars",
                table.len(),
                stars.len()
            )));
        }
        if table.iter().chain(&stars).flatten().any(|(k, _)| *k >= d) {
            return Err(Error::Input("basis index out of range in structure data".into()));
        }
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::Input("tolerance must be positive".into()));
        }
        Ok(FdStarAlgebra {
            labels,
            table: table.into_iter().map(|v| clean(v, tol)).collect(),
            stars: stars.into_iter().map(|v| clean(v, tol)).collect(),
            tol,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_star(&self, i: usize) -> &[(usize, F)] {
        &self.stars[i]
    }

    pub fn basis(&self, i: usize) -> AlgebraElement<F> {
        AlgebraElement::basis(self.dim(), i)
    }

    pub fn zero(&self) -> AlgebraElement<F> {
        AlgebraElement::zero(self.dim())
    }

    pub fn element(&self, coeffs: Vec<F>) -> Result<AlgebraElement<F>> {
        if coeffs.len() != self.dim() {
            return Err(Error::Input(format!(
                "element of length {} in an algebra of dimension {}",
                coeffs.len(),
                self.dim()
            )));
        }
        Ok(AlgebraElement { coeffs })
    }

    fn check_len(&self, x: &AlgebraElement<F>) {
        assert_eq!(x.dim(), self.dim(), "element does not belong to this algebra");
    }

    pub fn mul(&self, x: &AlgebraElement<F>, y: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.check_len(x);
        self.check_len(y);
        let mut out = vec![F::zero(); self.dim()];
        let xs = to_sparse(&x.coeffs, self.tol);
        let ys = to_sparse(&y.coeffs, self.tol);
        for (i, a) in &xs {
            for (j, b) in &ys {
                let ab = a.clone() * b.clone();
                for (k, c) in self.basis_product(*i, *j) {
                    out[*k] = out[*k].clone() + ab.clone() * c.clone();
                }
            }
        }
        AlgebraElement { coeffs: out }
    }

    pub fn mul3(&self, x: &AlgebraElement<F>, y: &AlgebraElement<F>, z: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.mul(&self.mul(x, y), z)
    }

    pub fn star(&self, x: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.check_len(x);
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in to_sparse(&x.coeffs, self.tol) {
            let ac = a.conj();
            for (k, c) in self.basis_star(i) {
                out[*k] = out[*k].clone() + ac.clone() * c.clone();
            }
        }
        AlgebraElement { coeffs: out }
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_matrix(&self, x: &AlgebraElement<F>) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|j| self.mul(x, &self.basis(j)).coeffs).collect();
        Matrix::from_cols(self.dim(), &cols)
    }

    fn basis_left_traces(&self) -> Vec<F> {
        (0..self.dim())
            .map(|k| {
                let mut t = F::zero();
                for j in 0..self.dim() {
                    for (m, c) in self.basis_product(k, j) {
                        if *m == j {
                            t = t + c.clone();
                        }
                    }
                }
                t
            })
            .collect()
    }

    fn trace_of_left(&self, x: &AlgebraElement<F>, traces: &[F]) -> F {
        let mut t = F::zero();
        for (c, tr) in x.coeffs.iter().zip(traces) {
            t = t + c.clone() * tr.clone();
        }
        t
    }

    /// Associativity on basis triples and the involution laws on basis pairs.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new("star algebra");
        let d = self.dim();
        let tol = self.tol;
        let mut assoc = ClauseCheck::new("associative", ClauseKind::Axiom);
        'a: for i in 0..d {
            for j in 0..d {
                let ij = AlgebraElement::from_sparse(d, self.basis_product(i, j));
                for k in 0..d {
                    let jk = AlgebraElement::from_sparse(d, self.basis_product(j, k));
                    let l = self.mul(&ij, &self.basis(k));
                    let r = self.mul(&self.basis(i), &jk);
                    if !assoc.check(l.approx_eq(&r, tol), || {
                        format!(
                            "({}{}){} ≠ {}({}{})",
                            self.label(i),
                            self.label(j),
                            self.label(k),
                            self.label(i),
                            self.label(j),
                            self.label(k)
                        )
                    }) {
                        break 'a;
                    }
                }
            }
        }
        rep.push(assoc.finish());
        let mut inv = ClauseCheck::new("star_involution", ClauseKind::Axiom);
        for i in 0..d {
            let b = self.basis(i);
            inv.check(self.star(&self.star(&b)).approx_eq(&b, tol), || {
                format!("star is not an involution on {}", self.label(i))
            });
        }
        rep.push(inv.finish());
        let mut anti = ClauseCheck::new("star_anti_multiplicative", ClauseKind::Axiom);
        'b: for i in 0..d {
            for j in 0..d {
                let (bi, bj) = (self.basis(i), self.basis(j));
                let l = self.star(&self.mul(&bi, &bj));
                let r = self.mul(&self.star(&bj), &self.star(&bi));
                if !anti.check(l.approx_eq(&r, tol), || {
                    format!("({}{})* ≠ {}*{}*", self.label(i), self.label(j), self.label(j), self.label(i))
                }) {
                    break 'b;
                }
            }
        }
        rep.push(anti.finish());
        rep
    }

    /// Semigroup algebra of `S`, or of a product- and star-closed subset of
    /// it. Basis order follows the subset, sorted.
    pub fn from_semigroup_algebra(s: &FiniteInverseSemigroup, subset: Option<&[usize]>) -> Result<Self> {
        let elems: Vec<usize> = match subset {
            None => (0..s.size()).collect(),
            Some(sub) => {
                let mut v = sub.to_vec();
                v.sort_unstable();
                v.dedup();
                if let Some(&bad) = v.iter().find(|&&a| a >= s.size()) {
                    return Err(Error::Input(format!("element {bad} out of range")));
                }
                v
            }
        };
        let pos = |a: usize| elems.binary_search(&a).ok();
        let mut table = Vec::with_capacity(elems.len() * elems.len());
        for &a in &elems {
            for &b in &elems {
                let ab = s.mul(a, b);
                let k = pos(ab).ok_or_else(|| {
                    Error::NotClosed(format!("{} · {} = {} is outside the subset", s.label(a), s.label(b), s.label(ab)))
                })?;
                table.push(vec![(k, F::one())]);
            }
        }
        let mut stars = Vec::with_capacity(elems.len());
        for &a in &elems {
            let k = pos(s.star(a))
                .ok_or_else(|| Error::NotClosed(format!("star of {} is outside the subset", s.label(a))))?;
            stars.push(vec![(k, F::one())]);
        }
        let labels = elems.iter().map(|&a| s.label(a)).collect();
        Self::new(labels, table, stars, crate::DEFAULT_TOL)
    }

    pub fn from_group_algebra(g: &Group) -> Self {
        let n = g.order();
        let table =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| vec![(g.mul(a, b), F::one())]).collect();
        let stars = (0..n).map(|a| vec![(g.inv(a), F::one())]).collect();
        let labels = (0..n).map(|a| g.label(a)).collect();
        Self::new(labels, table, stars, crate::DEFAULT_TOL).expect("group tables are in range")
    }

    /// Direct sum of full matrix algebras with the given block sizes, on the
    /// basis of matrix units `E<b>[i,j]`, block by block, row-major.
    pub fn from_multimatrix(blocks: &[usize]) -> Self {
        let mut units = Vec::new();
        for (b, &n) in blocks.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    units.push((b, i, j));
                }
            }
        }
        let index =
            |b: usize, i: usize, j: usize| units.iter().position(|&u| u == (b, i, j)).expect("matrix unit exists");
        let mut table = Vec::with_capacity(units.len() * units.len());
        for &(b1, i1, j1) in &units {
            for &(b2, i2, j2) in &units {
                if b1 == b2 && j1 == i2 {
                    table.push(vec![(index(b1, i1, j2), F::one())]);
                } else {
                    table.push(Vec::new());
                }
            }
        }
        let stars = units.iter().map(|&(b, i, j)| vec![(index(b, j, i), F::one())]).collect();
        let labels = units.iter().map(|&(b, i, j)| format!("E{b}[{i},{j}]")).collect();
        Self::new(labels, table, stars, crate::DEFAULT_TOL).expect("matrix units are in range")
    }

    /// Basis indices of block `b` in a [`FdStarAlgebra::from_multimatrix`]
    /// algebra.
    pub fn multimatrix_block(blocks: &[usize], b: usize) -> Vec<usize> {
        let start: usize = blocks[..b].iter().map(|n| n * n).sum();
        (start..start + blocks[b] * blocks[b]).collect()
    }

    /// The unit of `span(E)`: the unique `u ∈ E` with `u x = x u = x` for all
    /// basis `x` of `E`.
    pub fn ideal_identity(&self, e: &BasisIdeal) -> Result<AlgebraElement<F>> {
        if e.is_empty() {
            return Ok(self.zero());
        }
        let m = e.len();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for &i in e.indices() {
            let bi = self.basis(i);
            for side in 0..2 {
                let prods: Vec<AlgebraElement<F>> = e
                    .indices()
                    .iter()
                    .map(|&j| {
                        let bj = self.basis(j);
                        if side == 0 {
                            self.mul(&bj, &bi)
                        } else {
                            self.mul(&bi, &bj)
                        }
                    })
                    .collect();
                for k in 0..self.dim() {
                    rows.push((0..m).map(|c| prods[c].coeffs[k].clone()).collect::<Vec<F>>());
                    rhs.push(if k == i { F::one() } else { F::zero() });
                }
            }
        }
        let sys = Matrix::from_rows(rows);
        let sol = sys
            .solve(&rhs, self.tol)
            .ok_or_else(|| Error::NoIdentity(format!("span of {} basis elements has no unit", m)))?;
        Ok(e.embed(self.dim(), &sol))
    }

    pub fn unit(&self) -> Result<AlgebraElement<F>> {
        self.ideal_identity(&BasisIdeal::full(self.dim()))
    }

    /// `u ∈ E` with `u u* = u* u = 1_E`.
    pub fn is_unitary_multiplier(&self, u: &AlgebraElement<F>, e: &BasisIdeal) -> bool {
        if !e.holds(u, self.tol) {
            return false;
        }
        let Ok(one) = self.ideal_identity(e) else { return false };
        let us = self.star(u);
        self.mul(u, &us).approx_eq(&one, self.tol) && self.mul(&us, u).approx_eq(&one, self.tol)
    }

    /// `x ↦ u x u*` on `E`.
    pub fn ad(&self, u: &AlgebraElement<F>, e: &BasisIdeal) -> Result<PartialStarAutomorphism<F>> {
        if !self.is_unitary_multiplier(u, e) {
            return Err(Error::Input("Ad needs a unitary multiplier of the ideal".into()));
        }
        let us = self.star(u);
        let mut cols = Vec::with_capacity(e.len());
        for &i in e.indices() {
            let y = self.mul3(u, &self.basis(i), &us);
            cols.push(e.coords(&y, self.tol)?);
        }
        Ok(PartialStarAutomorphism { dom: e.clone(), ran: e.clone(), matrix: Matrix::from_cols(e.len(), &cols) })
    }

    /// Inverse of `x` inside the unital algebra `span(E)`.
    pub fn inverse_in(&self, x: &AlgebraElement<F>, e: &BasisIdeal) -> Result<AlgebraElement<F>> {
        let one = self.ideal_identity(e)?;
        let cols: Vec<Vec<F>> =
            e.indices().iter().map(|&j| e.coords(&self.mul(x, &self.basis(j)), self.tol)).collect::<Result<_>>()?;
        let m = Matrix::from_cols(e.len(), &cols);
        let y = m
            .solve(&e.coords(&one, self.tol)?, self.tol)
            .ok_or_else(|| Error::Singular("element is not invertible in the ideal".into()))?;
        let y = e.embed(self.dim(), &y);
        if !self.mul(&y, x).approx_eq(&one, self.tol) {
            return Err(Error::Singular("left and right inverses differ".into()));
        }
        Ok(y)
    }

    /// The Cayley transform `(1 + ih)(1 − ih)⁻¹` of a self-adjoint `h ∈ E`,
    /// a unitary of `span(E)`.
    pub fn cayley(&self, h: &AlgebraElement<F>, e: &BasisIdeal) -> Result<AlgebraElement<F>> {
        let one = self.ideal_identity(e)?;
        let ih = h.scale(&F::i());
        let inv = self.inverse_in(&one.sub(&ih), e)?;
        Ok(self.mul(&one.add(&ih), &inv))
    }

    /// A random self-adjoint element `x + x*` of `E` with small Gaussian
    /// rational coefficients.
    pub fn random_self_adjoint<R: Rng + ?Sized>(&self, e: &BasisIdeal, rng: &mut R) -> AlgebraElement<F> {
        let coords: Vec<F> = (0..e.len()).map(|_| random_coefficient(rng)).collect();
        let x = e.embed(self.dim(), &coords);
        x.add(&self.star(&x))
    }

    /// A random unitary of `span(E)`.
    pub fn random_unitary<R: Rng + ?Sized>(&self, e: &BasisIdeal, rng: &mut R) -> Result<AlgebraElement<F>> {
        if e.is_empty() {
            return Ok(self.zero());
        }
        let h = self.random_self_adjoint(e, rng);
        self.cayley(&h, e)
    }

    /// Dickson radical `{x : tr(L_{xy}) = 0 for all y}`.
    pub fn jacobson_radical(&self) -> Subspace<F> {
        let d = self.dim();
        let traces = self.basis_left_traces();
        let mut t = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let ij = AlgebraElement::from_sparse(d, self.basis_product(i, j));
                t.set(i, j, self.trace_of_left(&ij, &traces));
            }
        }
        Subspace::spanned_by(d, &t.transpose().kernel(self.tol), self.tol)
    }

    /// `dim(A / rad)`, certified when `(x, y) ↦ tr(L_{y* x})` is positive
    /// semidefinite with kernel exactly the radical.
    pub fn cstar_dimension(&self) -> CstarDimension {
        let d = self.dim();
        let rad = self.jacobson_radical();
        let traces = self.basis_left_traces();
        let stars: Vec<AlgebraElement<F>> = (0..d).map(|j| self.star(&self.basis(j))).collect();
        let mut h = Matrix::zeros(d, d);
        for j in 0..d {
            for i in 0..d {
                let p = self.mul(&stars[j], &self.basis(i));
                h.set(j, i, self.trace_of_left(&p, &traces));
            }
        }
        let rad_star_closed = rad.basis().iter().all(|v| {
            let x = AlgebraElement { coeffs: v.clone() };
            rad.contains(&self.star(&x).coeffs)
        });
        let certified = rad_star_closed
            && matches!(hermitian_psd(&h, self.tol), PsdVerdict::Positive { rank } if rank == d - rad.dim());
        CstarDimension { dim: d - rad.dim(), radical_dim: rad.dim(), certified }
    }

    /// Smallest two-sided star-closed ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &[AlgebraElement<F>]) -> Subspace<F> {
        let d = self.dim();
        let mut sub = Subspace::new(d, self.tol);
        let mut queue: Vec<Vec<F>> = Vec::new();
        for g in gens {
            for v in [g.clone(), self.star(g)] {
                if sub.insert(v.coeffs.clone()) {
                    queue.push(v.coeffs);
                }
            }
        }
        while let Some(v) = queue.pop() {
            let x = AlgebraElement { coeffs: v };
            for b in 0..d {
                let bb = self.basis(b);
                for y in [self.mul(&bb, &x), self.mul(&x, &bb)] {
                    if sub.insert(y.coeffs.clone()) {
                        queue.push(y.coeffs);
                    }
                }
            }
        }
        sub
    }

    /// `A / I` for a two-sided star-closed ideal `I`, on the basis of the
    /// surviving (non-pivot) basis vectors.
    pub fn quotient(&self, ideal: Subspace<F>) -> AlgebraQuotient<F> {
        let surv = ideal.survivors();
        let d = self.dim();
        let q = surv.len();
        let mut table = Vec::with_capacity(q * q);
        for &a in &surv {
            for &b in &surv {
                let p = AlgebraElement::from_sparse(d, self.basis_product(a, b));
                table.push(to_sparse(&ideal.quotient_coords(&p.coeffs), self.tol));
            }
        }
        let stars = surv
            .iter()
            .map(|&a| {
                let s = AlgebraElement::from_sparse(d, self.basis_star(a));
                to_sparse(&ideal.quotient_coords(&s.coeffs), self.tol)
            })
            .collect();
        let labels = surv.iter().map(|&a| self.labels[a].clone()).collect();
        let algebra = Self::new(labels, table, stars, self.tol).expect("quotient data is in range");
        AlgebraQuotient { algebra, relations: ideal, survivors: surv }
    }

    /// The same algebra on a new basis; column `k` of `change` holds the
    /// old coordinates of new basis vector `k`.
    pub fn rebase(&self, change: &Matrix<F>, labels: Vec<String>) -> Result<Self> {
        let d = self.dim();
        if change.rows() != d || change.cols() != d || labels.len() != d {
            return Err(Error::Input("change of basis has the wrong shape".into()));
        }
        let inv =
            change.inverse(self.tol).ok_or_else(|| Error::Singular("change of basis is not invertible".into()))?;
        let new: Vec<AlgebraElement<F>> = (0..d).map(|k| AlgebraElement { coeffs: change.col(k) }).collect();
        let mut table = Vec::with_capacity(d * d);
        for a in &new {
            for b in &new {
                table.push(to_sparse(&inv.mul_vec(&self.mul(a, b).coeffs), self.tol));
            }
        }
        let stars = new.iter().map(|a| to_sparse(&inv.mul_vec(&self.star(a).coeffs), self.tol)).collect();
        Self::new(labels, table, stars, self.tol)
    }

    /// Basis indices `k` of `within` whose basis vectors lie in the span of
    /// `vectors`, provided they span it exactly.
    pub fn aligned_span(&self, vectors: &[AlgebraElement<F>], within: &BasisIdeal) -> Result<BasisIdeal> {
        let vs: Vec<Vec<F>> = vectors.iter().map(|v| v.coeffs.clone()).collect();
        let sub = Subspace::spanned_by(self.dim(), &vs, self.tol);
        let hits: Vec<usize> =
            within.indices().iter().copied().filter(|&k| sub.contains(&self.basis(k).coeffs)).collect();
        if hits.len() != sub.dim() {
            return Err(Error::NotBasisAligned(format!(
                "span of dimension {} contains only {} basis vectors",
                sub.dim(),
                hits.len()
            )));
        }
        Ok(BasisIdeal::new(hits))
    }
}

/// A quotient algebra together with the relation subspace it was cut by.
#[derive(Clone, Debug)]
pub struct AlgebraQuotient<F> {
    pub algebra: FdStarAlgebra<F>,
    pub relations: Subspace<F>,
    /// Ambient basis indices kept as the quotient basis.
    pub survivors: Vec<usize>,
}

impl<F: Scalar> AlgebraQuotient<F> {
    pub fn project(&self, x: &AlgebraElement<F>) -> AlgebraElement<F> {
        AlgebraElement::new(self.relations.quotient_coords(&x.coeffs))
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// A small random Gaussian rational `(p + qi)/r`.
pub fn random_coefficient<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> F {
    let den = rng.gen_range(1..=3);
    F::gaussian(F::from_ratio(rng.gen_range(-3..=3), den), F::from_ratio(rng.gen_range(-3..=3), den))
}

/// A \*-isomorphism between two basis-aligned ideals; `matrix` maps domain
/// coordinates to range coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialStarAutomorphism<F> {
    dom: BasisIdeal,
    ran: BasisIdeal,
    matrix: Matrix<F>,
}

impl<F: Scalar> PartialStarAutomorphism<F> {
    pub fn new(dom: BasisIdeal, ran: BasisIdeal, matrix: Matrix<F>) -> Result<Self> {
        if matrix.rows() != ran.len() || matrix.cols() != dom.len() {
            return Err(Error::Input(format!(
                "matrix is {}x{} for ideals of size {} and {}",
                matrix.rows(),
                matrix.cols(),
                dom.len(),
                ran.len()
            )));
        }
        Ok(PartialStarAutomorphism { dom, ran, matrix })
    }

    pub fn identity(e: &BasisIdeal) -> Self {
        PartialStarAutomorphism { dom: e.clone(), ran: e.clone(), matrix: Matrix::identity(e.len()) }
    }

    pub fn empty() -> Self {
        Self::identity(&BasisIdeal::empty())
    }

    pub fn domain(&self) -> &BasisIdeal {
        &self.dom
    }

    pub fn range(&self) -> &BasisIdeal {
        &self.ran
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    /// Applies the map to an element of the domain ideal.
    pub fn apply(&self, x: &AlgebraElement<F>, tol: f64) -> Result<AlgebraElement<F>> {
        let c = self.dom.coords(x, tol)?;
        Ok(self.ran.embed(x.dim(), &self.matrix.mul_vec(&c)))
    }

    pub fn inverse(&self, tol: f64) -> Result<Self> {
        if self.dom.len() != self.ran.len() {
            return Err(Error::Singular("ideals of different dimension".into()));
        }
        let m = self
            .matrix
            .inverse(tol)
            .ok_or_else(|| Error::Singular("partial automorphism matrix is singular".into()))?;
        Ok(PartialStarAutomorphism { dom: self.ran.clone(), ran: self.dom.clone(), matrix: m })
    }

    /// Restriction to a basis-aligned ideal inside the domain.
    pub fn restrict(&self, alg: &FdStarAlgebra<F>, sub: &BasisIdeal) -> Result<Self> {
        if !sub.is_subset_of(&self.dom) {
            return Err(Error::Input("restriction to an ideal outside the domain".into()));
        }
        let images: Vec<AlgebraElement<F>> =
            sub.indices().iter().map(|&k| self.apply(&alg.basis(k), alg.tol)).collect::<Result<_>>()?;
        let ran = alg.aligned_span(&images, &self.ran)?;
        let cols: Vec<Vec<F>> = images.iter().map(|y| ran.coords(y, alg.tol)).collect::<Result<_>>()?;
        Ok(PartialStarAutomorphism { dom: sub.clone(), ran: ran.clone(), matrix: Matrix::from_cols(ran.len(), &cols) })
    }

    /// Image of a basis-aligned ideal inside the domain.
    pub fn image(&self, alg: &FdStarAlgebra<F>, sub: &BasisIdeal) -> Result<BasisIdeal> {
        Ok(self.restrict(alg, sub)?.ran)
    }

    /// `self ∘ other` on `other⁻¹(ran(other) ∩ dom(self))`.
    pub fn compose(&self, other: &Self, alg: &FdStarAlgebra<F>) -> Result<Self> {
        let meet = other.ran.intersect(&self.dom);
        let back = other.inverse(alg.tol)?;
        let pre = back.image(alg, &meet)?;
        let first = other.restrict(alg, &pre)?;
        let second = self.restrict(alg, &first.ran)?;
        Ok(PartialStarAutomorphism { dom: first.dom, ran: second.ran, matrix: second.matrix.mul(&first.matrix) })
    }

    /// Same ideals and the same matrix within tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dom == other.dom && self.ran == other.ran && self.matrix.approx_eq(&other.matrix, tol)
    }

    /// Multiplicative, star-preserving and bijective between two ideals.
    pub fn verify(&self, alg: &FdStarAlgebra<F>) -> Report {
        let mut rep = Report::new("partial star-automorphism");
        let tol = alg.tol;
        rep.absorb("domain", self.dom.verify(alg));
        rep.absorb("range", self.ran.verify(alg));
        if !rep.passed() {
            return rep;
        }
        let bij = self.dom.len() == self.ran.len() && self.matrix.rank(tol) == self.dom.len();
        rep.assert("bijective", ClauseKind::Axiom, bij, || {
            format!("rank {} between ideals of size {} and {}", self.matrix.rank(tol), self.dom.len(), self.ran.len())
        });
        let img = |k: usize| self.apply(&alg.basis(k), tol).expect("basis of the domain");
        let mut mult = ClauseCheck::new("multiplicative", ClauseKind::Axiom);
        'm: for &i in self.dom.indices() {
            for &j in self.dom.indices() {
                let lhs = self.apply(&alg.mul(&alg.basis(i), &alg.basis(j)), tol);
                let ok = matches!(&lhs, Ok(l) if l.approx_eq(&alg.mul(&img(i), &img(j)), tol));
                if !mult.check(ok, || format!("fails on {} · {}", alg.label(i), alg.label(j))) {
                    break 'm;
                }
            }
        }
        rep.push(mult.finish());
        let mut st = ClauseCheck::new("star_preserving", ClauseKind::Axiom);
        for &i in self.dom.indices() {
            let lhs = self.apply(&alg.star(&alg.basis(i)), tol);
            let ok = matches!(&lhs, Ok(l) if l.approx_eq(&alg.star(&img(i)), tol));
            st.check(ok, || format!("fails on {}*", alg.label(i)));
        }
        rep.push(st.finish());
        rep
    }
}
