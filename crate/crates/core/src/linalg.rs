//! Dense linear algebra over any [`Scalar`] backend.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{Scalar, Sign};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_tol(0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero_tol(0.0) {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (j, x) in v.iter().enumerate() {
                    acc = acc + self.get(i, j).clone() * x.clone();
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> Matrix<F> {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| c.clone() * a.clone()).collect() }
    }

    pub fn approx_eq(&self, other: &Matrix<F>, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.data.iter().all(|a| a.is_zero_tol(tol))
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, tol: f64) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut best: Option<(usize, f64)> = None;
            for i in r..m.rows {
                let x = m.get(i, c);
                if x.is_zero_tol(tol) {
                    continue;
                }
                let mag = x.magnitude();
                if F::EXACT {
                    best = Some((i, mag));
                    break;
                }
                if best.is_none_or(|(_, b)| mag > b) {
                    best = Some((i, mag));
                }
            }
            let Some((p, _)) = best else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let x = m.get(r, j).clone();
                m.set(r, j, x * inv.clone());
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero_tol(0.0) {
                    continue;
                }
                for j in 0..m.cols {
                    let x = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                    m.set(i, j, x);
                }
                if !F::EXACT {
                    m.set(i, c, F::zero());
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, tol: f64) -> usize {
        self.rref(tol).1.len()
    }

    /// A basis of the null space `{x : self·x = 0}`.
    pub fn kernel(&self, tol: f64) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref(tol);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `self·x = b`, if one exists.
    pub fn solve(&self, b: &[F], tol: f64) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref(tol);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self, tol: f64) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let (r, pivots) = aug.rref(tol);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.rows == self.cols && self.approx_eq(&self.conj_transpose(), tol)
    }
}

/// Outcome of a positive-semidefiniteness test on a Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsdVerdict {
    /// Positive semidefinite with the given rank.
    Positive {
        rank: usize,
    },
    NotPositive,
    /// A pivot fell inside the tolerance band; no verdict is claimed.
    Uncertain,
}

/// Tests a Hermitian matrix for positive semidefiniteness by diagonally
/// pivoted `LDL*` elimination.
pub fn hermitian_psd<F: Scalar>(m: &Matrix<F>, tol: f64) -> PsdVerdict {
    if !m.is_hermitian(tol) {
        return PsdVerdict::NotPositive;
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut rank = 0;
    loop {
        let mut best: Option<(usize, f64)> = None;
        for (pos, &i) in active.iter().enumerate() {
            let d = a.get(i, i);
            match d.re_sign(tol) {
                Sign::Negative => return PsdVerdict::NotPositive,
                Sign::Positive => {
                    let mag = d.magnitude();
                    if best.is_none_or(|(_, b)| mag > b) {
                        best = Some((pos, mag));
                    }
                }
                Sign::Zero => {}
            }
        }
        let Some((pos, _)) = best else { break };
        let k = active.swap_remove(pos);
        let dinv = a.get(k, k).inv().expect("positive pivot");
        rank += 1;
        for &i in &active {
            let aik = a.get(i, k).clone();
            if aik.is_zero_tol(0.0) {
                continue;
            }
            for &j in &active {
                let x = a.get(i, j).clone() - aik.clone() * dinv.clone() * a.get(k, j).clone();
                a.set(i, j, x);
            }
        }
    }
    // Remaining block has all diagonal entries in the zero band.
    let mut uncertain = false;
    for &i in &active {
        for &j in &active {
            let x = a.get(i, j);
            if !x.is_zero_tol(tol) {
                if F::EXACT {
                    return PsdVerdict::NotPositive;
                }
                uncertain = true;
            }
        }
        if !F::EXACT && !a.get(i, i).is_zero_tol(0.0) {
            // Diagonal inside the band but not exactly zero.
            let d = a.get(i, i).to_c64();
            if d.re < 0.0 && -d.re > tol * 1e-3 {
                uncertain = true;
            }
        }
    }
    if uncertain {
        PsdVerdict::Uncertain
    } else {
        PsdVerdict::Positive { rank }
    }
}

/// A subspace of `F^n` held as fully reduced rows.
///
/// Each row's pivot is its highest nonzero coordinate, and every row vanishes
/// at every other row's pivot. Reducing a vector against the rows therefore
/// zeroes every pivot coordinate, which makes the non-pivot coordinates a
/// coordinate system for the quotient `F^n / self` built on the
/// lowest-index basis vectors.
#[derive(Clone, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<(usize, Vec<F>)>,
    tol: f64,
}

impl<F: Scalar> Subspace<F> {
    pub fn new(ambient: usize, tol: f64) -> Self {
        Subspace { ambient, rows: Vec::new(), tol }
    }

    pub fn spanned_by(ambient: usize, vectors: &[Vec<F>], tol: f64) -> Self {
        let mut s = Self::new(ambient, tol);
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// The residue of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut r = v.to_vec();
        for (p, row) in &self.rows {
            let c = r[*p].clone();
            if c.is_zero_tol(0.0) {
                continue;
            }
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero_tol(0.0) {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
            if !F::EXACT {
                r[*p] = F::zero();
            }
        }
        r
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero_tol(self.tol))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut r = self.reduce(&v);
        let Some(p) = (0..self.ambient).rev().find(|&j| !r[j].is_zero_tol(self.tol)) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        if !F::EXACT {
            for x in r.iter_mut() {
                if x.is_zero_tol(self.tol * 1e-3) {
                    *x = F::zero();
                }
            }
        }
        r[p] = F::one();
        for (_, row) in self.rows.iter_mut() {
            let c = row[p].clone();
            if c.is_zero_tol(0.0) {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&r) {
                *x = x.clone() - c.clone() * y.clone();
            }
            if !F::EXACT {
                row[p] = F::zero();
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn basis(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        p.sort_unstable();
        p
    }

    /// Coordinates not used as pivots, ascending.
    pub fn survivors(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for (p, _) in &self.rows {
            is_pivot[*p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// Coordinates of the class of `v` in the quotient, indexed by
    /// [`Subspace::survivors`].
    pub fn quotient_coords(&self, v: &[F]) -> Vec<F> {
        let r = self.reduce(v);
        self.survivors().into_iter().map(|j| r[j].clone()).collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.rows.iter().all(|(_, r)| other.contains(r))
    }

    pub fn same_as(&self, other: &Subspace<F>) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussRat, C64};
    use proptest::prelude::*;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_i64(n)
    }

    fn m(rows: &[&[i64]]) -> Matrix<GaussRat> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(0.0), 2);
        let k = a.kernel(0.0);
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|x| *x == q(0)));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[5, 3]]);
        let inv = a.inverse(0.0).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse(0.0).is_none());
    }

    #[test]
    fn solve_consistency() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[q(3), q(1)], 0.0).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(b.solve(&[q(1), q(2)], 0.0).is_none());
    }

    #[test]
    fn subspace_survivors_are_low_indices() {
        let mut s = Subspace::new(3, 0.0);
        s.insert(vec![q(1), q(0), q(-1)]);
        assert_eq!(s.survivors(), vec![0, 1]);
        assert_eq!(s.quotient_coords(&[q(0), q(0), q(1)]), vec![q(1), q(0)]);
        assert!(!s.insert(vec![q(2), q(0), q(-2)]));
        assert!(s.contains(&[q(-3), q(0), q(3)]));
    }

    #[test]
    fn psd_detection() {
        assert_eq!(hermitian_psd(&m(&[&[2, 1], &[1, 2]]), 0.0), PsdVerdict::Positive { rank: 2 });
        assert_eq!(hermitian_psd(&m(&[&[1, 1], &[1, 1]]), 0.0), PsdVerdict::Positive { rank: 1 });
        assert_eq!(hermitian_psd(&m(&[&[1, 2], &[2, 1]]), 0.0), PsdVerdict::NotPositive);
        assert_eq!(hermitian_psd(&m(&[&[0, 1], &[1, 0]]), 0.0), PsdVerdict::NotPositive);
        let f = Matrix::from_rows(vec![
            vec![C64::new(1.0, 0.0), C64::new(0.0, 1.0)],
            vec![C64::new(0.0, -1.0), C64::new(1.0, 0.0)],
        ]);
        assert_eq!(hermitian_psd(&f, 1e-9), PsdVerdict::Positive { rank: 1 });
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(entries in proptest::collection::vec(-3i64..4, 12)) {
            let a = Matrix::from_rows(entries.chunks(4).map(|r| r.iter().map(|&x| q(x)).collect()).collect());
            let k = a.kernel(0.0);
            prop_assert_eq!(k.len() + a.rank(0.0), 4);
            for v in k {
                prop_assert!(a.mul_vec(&v).iter().all(|x| *x == q(0)));
            }
        }

        #[test]
        fn gram_matrices_are_psd(entries in proptest::collection::vec(-3i64..4, 9)) {
            let x = Matrix::from_rows(entries.chunks(3).map(|r| r.iter().map(|&v| q(v)).collect()).collect());
            let g = x.conj_transpose().mul(&x);
            prop_assert_eq!(hermitian_psd(&g, 0.0), PsdVerdict::Positive { rank: x.rank(0.0) });
        }
    }
}
