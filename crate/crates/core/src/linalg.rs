//! Kernels and linear solves built on the Howell-form machinery.
//!
//! Everything here uses row-vector conventions: `left_kernel(a)` is the set
//! of `x` with `x * a = 0`, and [`LeftSolver`] finds `x` with `x * a = b`.

use crate::matrix::Matrix;
use crate::normal_form::{echelon, pivot_columns, reduce};
use crate::ring::Ring;

/// An echelon basis with its pivot columns, ready for greedy reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span<R: Ring> {
    basis: Matrix<R>,
    pivots: Vec<usize>,
}

impl<R: Ring> Span<R> {
    /// Row span of `m`.
    pub fn new(m: &Matrix<R>) -> Self {
        let basis = echelon(m);
        let pivots = pivot_columns(&basis);
        Self { basis, pivots }
    }

    pub fn empty(ring: &R, dim: usize) -> Self {
        Self { basis: Matrix::zeros(ring, 0, dim), pivots: Vec::new() }
    }

    pub fn basis(&self) -> &Matrix<R> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical representative of `v` modulo the span.
    pub fn residue(&self, v: &[R::Elem]) -> Vec<R::Elem> {
        reduce(&self.basis, &self.pivots, v).0
    }

    pub fn contains(&self, v: &[R::Elem]) -> bool {
        let ring = self.basis.ring();
        self.residue(v).iter().all(|e| ring.is_zero(e))
    }

    /// Every row of `m` lies in the span.
    pub fn contains_rows(&self, m: &Matrix<R>) -> bool {
        (0..m.rows()).all(|i| self.contains(m.row(i)))
    }
}

/// Rows spanning `{x : x * a = 0}`, in canonical echelon form.
pub fn left_kernel<R: Ring>(a: &Matrix<R>) -> Matrix<R> {
    let ring = a.ring();
    let (r, c) = a.shape();
    let aug = a.hstack(&Matrix::identity(ring, r));
    let h = echelon(&aug);
    let piv = pivot_columns(&h);
    let keep: Vec<usize> = (0..h.rows()).filter(|&i| piv[i] >= c).collect();
    h.select_rows(&keep).submatrix(0..keep.len(), c..c + r)
}

/// Column vectors `v` with `a * v = 0`, returned as rows.
pub fn right_kernel<R: Ring>(a: &Matrix<R>) -> Matrix<R> {
    left_kernel(&a.transpose())
}

/// Solves `x * a = b` for many right-hand sides against a fixed `a`.
#[derive(Debug, Clone)]
pub struct LeftSolver<R: Ring> {
    rows: usize,
    cols: usize,
    span: Span<R>,
}

impl<R: Ring> LeftSolver<R> {
    pub fn new(a: &Matrix<R>) -> Self {
        let (r, c) = a.shape();
        let aug = a.hstack(&Matrix::identity(a.ring(), r));
        Self { rows: r, cols: c, span: Span::new(&aug) }
    }

    /// Some `x` with `x * a = b`, or `None` when `b` is outside the row span.
    pub fn solve(&self, b: &[R::Elem]) -> Option<Vec<R::Elem>> {
        assert_eq!(b.len(), self.cols, "right-hand side length");
        let ring = self.span.basis.ring();
        let mut v = b.to_vec();
        v.extend(std::iter::repeat_n(ring.zero(), self.rows));
        let res = self.span.residue(&v);
        if res[..self.cols].iter().any(|e| !ring.is_zero(e)) {
            return None;
        }
        Some(res[self.cols..].iter().map(|e| ring.neg(e)).collect())
    }

    /// Rows spanning the left kernel of `a`.
    pub fn kernel(&self) -> Matrix<R> {
        let h = &self.span.basis;
        let keep: Vec<usize> = (0..h.rows()).filter(|&i| self.span.pivots[i] >= self.cols).collect();
        h.select_rows(&keep).submatrix(0..keep.len(), self.cols..self.cols + self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{IntegersMod, PrimeField, Rationals};

    #[test]
    fn kernel_over_z4() {
        let r = IntegersMod::new(4).unwrap();
        let a = Matrix::from_i64(&r, 1, 1, &[2]);
        assert_eq!(left_kernel(&a), Matrix::from_i64(&r, 1, 1, &[2]));
    }

    #[test]
    fn kernel_over_f2() {
        let f = PrimeField::new(2).unwrap();
        let a = Matrix::from_i64(&f, 2, 1, &[1, 1]);
        assert_eq!(left_kernel(&a), Matrix::from_i64(&f, 1, 2, &[1, 1]));
    }

    #[test]
    fn solver_finds_preimages() {
        let q = Rationals;
        let a = Matrix::from_i64(&q, 2, 3, &[1, 2, 3, 0, 1, 1]);
        let s = LeftSolver::new(&a);
        let b = a.vec_mul(&[q.from_i64(3), q.from_i64(-2)]);
        let x = s.solve(&b).unwrap();
        assert_eq!(a.vec_mul(&x), b);
        assert!(s.solve(&[q.one(), q.zero(), q.zero()]).is_none());
    }

    #[test]
    fn solver_over_z_mod_n_respects_zero_divisors() {
        let r = IntegersMod::new(8).unwrap();
        let a = Matrix::from_i64(&r, 2, 2, &[2, 4, 0, 4]);
        let s = LeftSolver::new(&a);
        for b0 in 0..8 {
            for b1 in 0..8 {
                let b = vec![b0, b1];
                let brute = (0..8).any(|x| (0..8).any(|y| a.vec_mul(&[x, y]) == b));
                match s.solve(&b) {
                    Some(x) => assert_eq!(a.vec_mul(&x), b),
                    None => assert!(!brute, "missed solution for {b:?}"),
                }
            }
        }
    }
}
