//! Dense matrices over a [`Ring`].
//!
//! Linear maps act on column vectors: a map `R^m -> R^n` is an `n x m`
//! matrix whose column `j` is the image of the `j`-th generator.

use std::fmt;

use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    data: Vec<R::Elem>,
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} over {} [", self.rows, self.cols, self.ring.descriptor())?;
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(ring: &R, rows: usize, cols: usize) -> Self {
        Self { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Builds from row-major data. Panics if the length does not match.
    pub fn from_vec(ring: &R, rows: usize, cols: usize, data: Vec<R::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Self { ring: ring.clone(), rows, cols, data }
    }

    pub fn from_rows(ring: &R, cols: usize, rows: Vec<Vec<R::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Self { ring: ring.clone(), rows: n, cols, data }
    }

    /// Entries given as small integers, reduced into the ring.
    pub fn from_i64(ring: &R, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "matrix data length");
        let data = entries.iter().map(|&v| ring.from_i64(v)).collect();
        Self { ring: ring.clone(), rows, cols, data }
    }

    pub fn from_fn(ring: &R, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { ring: ring.clone(), rows, cols, data }
    }

    pub fn column_vector(ring: &R, v: Vec<R::Elem>) -> Self {
        let n = v.len();
        Self::from_vec(ring, n, 1, v)
    }

    pub fn row_vector(ring: &R, v: Vec<R::Elem>) -> Self {
        let n = v.len();
        Self::from_vec(ring, 1, n, v)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[R::Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [R::Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<R::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        self.ring.is_one(e)
                    } else {
                        self.ring.is_zero(e)
                    }
                })
            })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape {:?} * {:?}", self.shape(), other.shape());
        let r = &self.ring;
        let mut out = Self::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = r.add(&out.data[idx], &r.mul(a, b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R::Elem]) -> Vec<R::Elem> {
        assert_eq!(self.cols, v.len());
        let r = &self.ring;
        (0..self.rows)
            .map(|i| {
                let mut acc = r.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !r.is_zero(a) && !r.is_zero(b) {
                        acc = r.add(&acc, &r.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[R::Elem]) -> Vec<R::Elem> {
        assert_eq!(self.rows, v.len());
        let r = &self.ring;
        let mut out = vec![r.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.get(i, j);
                if !r.is_zero(b) {
                    *o = r.add(o, &r.mul(a, b));
                }
            }
        }
        out
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix shapes differ");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Self { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| self.ring.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| self.ring.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.ring.neg(a)).collect();
        Self { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let data = self.data.iter().map(|a| self.ring.mul(c, a)).collect();
        Self { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product, left factor major: entry `(i*p + k, j*q + l)` is `a[i][j] * b[k][l]`.
    pub fn kron(&self, other: &Self) -> Self {
        let r = &self.ring;
        let (p, q) = other.shape();
        let mut out = Self::zeros(r, self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if r.is_zero(a) {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = other.get(k, l);
                        if !r.is_zero(b) {
                            out.set(i * p + k, j * q + l, r.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row counts");
        Self::from_fn(&self.ring, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column counts");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self { ring: self.ring.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn vstack_all(ring: &R, cols: usize, parts: &[Self]) -> Self {
        parts.iter().fold(Self::zeros(ring, 0, cols), |acc, p| acc.vstack(p))
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let mut out = Self::zeros(&self.ring, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_rows(&self.ring, self.cols, rows)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.ring, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Drops rows that are entirely zero.
    pub fn nonzero_rows(&self) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| self.row(i).iter().any(|e| !self.ring.is_zero(e))).collect();
        self.select_rows(&keep)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += c * row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &R::Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if self.ring.is_zero(s) {
                continue;
            }
            let v = self.ring.add(&self.data[dst * self.cols + j], &self.ring.mul(c, s));
            self.data[dst * self.cols + j] = v;
        }
    }

    /// `col[dst] += c * col[src]`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: &R::Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if self.ring.is_zero(s) {
                continue;
            }
            let v = self.ring.add(&self.data[i * self.cols + dst], &self.ring.mul(c, s));
            self.data[i * self.cols + dst] = v;
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &R::Elem) {
        for j in 0..self.cols {
            let v = self.ring.mul(c, &self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }

    pub fn scale_col(&mut self, j: usize, c: &R::Elem) {
        for i in 0..self.rows {
            let v = self.ring.mul(c, &self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }

    /// Replaces rows `a`, `b` by `(s*a + t*b, u*a + v*b)`.
    pub fn combine_rows(&mut self, a: usize, b: usize, s: &R::Elem, t: &R::Elem, u: &R::Elem, v: &R::Elem) {
        let r = &self.ring;
        for j in 0..self.cols {
            let x = self.data[a * self.cols + j].clone();
            let y = self.data[b * self.cols + j].clone();
            if r.is_zero(&x) && r.is_zero(&y) {
                continue;
            }
            self.data[a * self.cols + j] = r.add(&r.mul(s, &x), &r.mul(t, &y));
            self.data[b * self.cols + j] = r.add(&r.mul(u, &x), &r.mul(v, &y));
        }
    }

    /// Replaces columns `a`, `b` by `(s*a + t*b, u*a + v*b)`.
    pub fn combine_cols(&mut self, a: usize, b: usize, s: &R::Elem, t: &R::Elem, u: &R::Elem, v: &R::Elem) {
        let r = &self.ring;
        for i in 0..self.rows {
            let x = self.data[i * self.cols + a].clone();
            let y = self.data[i * self.cols + b].clone();
            if r.is_zero(&x) && r.is_zero(&y) {
                continue;
            }
            self.data[i * self.cols + a] = r.add(&r.mul(s, &x), &r.mul(t, &y));
            self.data[i * self.cols + b] = r.add(&r.mul(u, &x), &r.mul(v, &y));
        }
    }

    /// Index of the first column where `self` and `other` differ.
    pub fn first_differing_column(&self, other: &Self) -> Option<usize> {
        assert_eq!(self.shape(), other.shape());
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self.get(i, j) != other.get(i, j)))
    }

    /// Permutation matrix of the swap `V (x) W -> W (x) V` for ranks `a`, `b`.
    pub fn swap_tensor(ring: &R, a: usize, b: usize) -> Self {
        let mut m = Self::zeros(ring, a * b, a * b);
        for i in 0..a {
            for j in 0..b {
                m.set(j * a + i, i * b + j, ring.one());
            }
        }
        m
    }

    /// Elementary matrix with a single one at `(i, j)`.
    pub fn unit(ring: &R, rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(ring, rows, cols);
        m.set(i, j, ring.one());
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, IntegersMod};

    #[test]
    fn kron_layout_is_left_major() {
        let z = Integers;
        let a = Matrix::from_i64(&z, 2, 1, &[1, 2]);
        let b = Matrix::from_i64(&z, 2, 1, &[3, 5]);
        let k = a.kron(&b);
        assert_eq!(k, Matrix::from_i64(&z, 4, 1, &[3, 5, 6, 10]));
    }

    #[test]
    fn kron_is_multiplicative() {
        let r = IntegersMod::new(6).unwrap();
        let a = Matrix::from_i64(&r, 2, 2, &[1, 2, 3, 4]);
        let b = Matrix::from_i64(&r, 2, 3, &[0, 1, 5, 2, 2, 1]);
        let c = Matrix::from_i64(&r, 2, 1, &[1, 5]);
        let d = Matrix::from_i64(&r, 3, 2, &[1, 0, 0, 1, 4, 4]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn swap_tensor_swaps_factors() {
        let z = Integers;
        let a = Matrix::from_i64(&z, 2, 1, &[1, 2]);
        let b = Matrix::from_i64(&z, 3, 1, &[3, 5, 7]);
        let s = Matrix::swap_tensor(&z, 2, 3);
        assert_eq!(s.mul(&a.kron(&b)), b.kron(&a));
    }

    #[test]
    fn row_ops() {
        let z = Integers;
        let mut m = Matrix::from_i64(&z, 2, 2, &[1, 2, 3, 4]);
        m.add_row_multiple(1, 0, &(-3).into());
        assert_eq!(m, Matrix::from_i64(&z, 2, 2, &[1, 2, 0, -2]));
        m.swap_cols(0, 1);
        assert_eq!(m, Matrix::from_i64(&z, 2, 2, &[2, 1, -2, 0]));
        assert_eq!(m.first_differing_column(&Matrix::from_i64(&z, 2, 2, &[2, 1, -2, 1])), Some(1));
    }
}
