//! Canonical row forms and the Smith form.
//!
//! [`echelon`] produces the reduced echelon form of the row span: RREF over
//! fields, Hermite form over `Z`, Howell form over `Z/n`. Over rings with zero
//! divisors the input is padded with `cols` zero rows so that annihilator
//! multiples of pivot rows have somewhere to go; the resulting form then has
//! the Howell property (every span vector vanishing on the first `j` columns
//! is a combination of the rows whose pivot lies beyond `j`), which is what
//! makes greedy reduction a complete membership test.

use crate::matrix::Matrix;
use crate::ring::{FormKind, Gcdex, Ring};

/// Output of [`canonical_form`]: `form = row_transform * padded(m) * col_transform`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm<R: Ring> {
    pub form: Matrix<R>,
    pub row_transform: Matrix<R>,
    pub col_transform: Matrix<R>,
    pub kind: FormKind,
}

impl<R: Ring> CanonicalForm<R> {
    /// The nonzero rows of the form.
    pub fn basis(&self) -> Matrix<R> {
        self.form.nonzero_rows()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormMode {
    /// Row-span form (RREF, Hermite or Howell depending on the ring).
    Span,
    /// Smith normal form with both transforms.
    Smith,
}

/// Row padding used by [`echelon`] for an `rows x cols` input.
pub fn padded_rows<R: Ring>(ring: &R, rows: usize, cols: usize) -> usize {
    if ring.has_zero_divisors() {
        rows + cols
    } else {
        rows
    }
}

pub fn canonical_form<R: Ring>(m: &Matrix<R>, mode: FormMode) -> CanonicalForm<R> {
    match mode {
        FormMode::Span => {
            let (form, t) = echelon_with_transform(m);
            let ring = m.ring();
            CanonicalForm {
                form,
                row_transform: t,
                col_transform: Matrix::identity(ring, m.cols()),
                kind: ring.form_kind(),
            }
        }
        FormMode::Smith => {
            let s = smith(m);
            CanonicalForm { form: s.diag, row_transform: s.u, col_transform: s.v, kind: FormKind::Smith }
        }
    }
}

/// Canonical echelon basis (nonzero rows only) of the row span of `m`.
pub fn echelon<R: Ring>(m: &Matrix<R>) -> Matrix<R> {
    echelon_impl(m, false).0.nonzero_rows()
}

/// Padded echelon form together with the invertible transform `t` such that
/// `form = t * [m; 0]`.
pub fn echelon_with_transform<R: Ring>(m: &Matrix<R>) -> (Matrix<R>, Matrix<R>) {
    let (f, t) = echelon_impl(m, true);
    (f, t.expect("transform requested"))
}

fn echelon_impl<R: Ring>(m: &Matrix<R>, track: bool) -> (Matrix<R>, Option<Matrix<R>>) {
    let ring = m.ring().clone();
    let (r, c) = m.shape();
    let n = padded_rows(&ring, r, c);
    let mut w = if n > r { m.vstack(&Matrix::zeros(&ring, n - r, c)) } else { m.clone() };
    let mut t = track.then(|| Matrix::identity(&ring, n));
    let zero_div = ring.has_zero_divisors();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut piv = 0usize;
    for j in 0..c {
        if piv >= n {
            break;
        }
        let Some(first) = (piv..n).find(|&i| !ring.is_zero(w.get(i, j))) else {
            continue;
        };
        if first != piv {
            w.swap_rows(first, piv);
            if let Some(t) = t.as_mut() {
                t.swap_rows(first, piv);
            }
        }
        for k in piv + 1..n {
            if ring.is_zero(w.get(k, j)) {
                continue;
            }
            let a = w.get(piv, j).clone();
            let b = w.get(k, j).clone();
            if let Some(q) = ring.divide(&b, &a) {
                let mq = ring.neg(&q);
                w.add_row_multiple(k, piv, &mq);
                if let Some(t) = t.as_mut() {
                    t.add_row_multiple(k, piv, &mq);
                }
            } else {
                let Gcdex { s, t: tt, u, v, .. } = ring.gcdex(&a, &b);
                w.combine_rows(piv, k, &s, &tt, &u, &v);
                if let Some(t) = t.as_mut() {
                    t.combine_rows(piv, k, &s, &tt, &u, &v);
                }
            }
        }
        let unit = ring.normalizing_unit(w.get(piv, j));
        if !ring.is_one(&unit) {
            w.scale_row(piv, &unit);
            if let Some(t) = t.as_mut() {
                t.scale_row(piv, &unit);
            }
        }
        if zero_div {
            let ann = ring.annihilator(w.get(piv, j));
            if !ring.is_zero(&ann) {
                let has_tail = w.row(piv).iter().skip(j + 1).any(|e| !ring.is_zero(e));
                if has_tail {
                    let slot = (piv + 1..n)
                        .find(|&i| w.row(i).iter().all(|e| ring.is_zero(e)))
                        .expect("padding leaves a free row for annihilator multiples");
                    w.add_row_multiple(slot, piv, &ann);
                    if let Some(t) = t.as_mut() {
                        t.add_row_multiple(slot, piv, &ann);
                    }
                }
            }
        }
        pivots.push((piv, j));
        piv += 1;
    }

    // Reduce entries above each pivot; left to right keeps earlier pivot columns intact.
    for &(pi, pj) in &pivots {
        let p = w.get(pi, pj).clone();
        for k in 0..pi {
            let e = w.get(k, pj);
            if ring.is_zero(e) {
                continue;
            }
            let (q, _) = ring.quo_rem(e, &p);
            if ring.is_zero(&q) {
                continue;
            }
            let mq = ring.neg(&q);
            w.add_row_multiple(k, pi, &mq);
            if let Some(t) = t.as_mut() {
                t.add_row_multiple(k, pi, &mq);
            }
        }
    }
    (w, t)
}

/// Pivot column of each row of an echelon basis.
pub fn pivot_columns<R: Ring>(basis: &Matrix<R>) -> Vec<usize> {
    let ring = basis.ring();
    (0..basis.rows())
        .map(|i| {
            basis
                .row(i)
                .iter()
                .position(|e| !ring.is_zero(e))
                .expect("echelon basis rows are nonzero")
        })
        .collect()
}

/// Greedy reduction of `v` against an echelon basis; returns the residue and
/// the coefficients used (`v = residue + coeffs * basis`).
pub fn reduce<R: Ring>(basis: &Matrix<R>, pivots: &[usize], v: &[R::Elem]) -> (Vec<R::Elem>, Vec<R::Elem>) {
    let ring = basis.ring();
    let mut w = v.to_vec();
    let mut coeffs = vec![ring.zero(); basis.rows()];
    for (i, &j) in pivots.iter().enumerate() {
        if ring.is_zero(&w[j]) {
            continue;
        }
        let (q, _) = ring.quo_rem(&w[j], basis.get(i, j));
        if ring.is_zero(&q) {
            continue;
        }
        for (k, b) in basis.row(i).iter().enumerate().skip(j) {
            if !ring.is_zero(b) {
                w[k] = ring.sub(&w[k], &ring.mul(&q, b));
            }
        }
        coeffs[i] = q;
    }
    (w, coeffs)
}

/// Smith form `diag = u * m * v` with `v_inv = v^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith<R: Ring> {
    pub diag: Matrix<R>,
    pub u: Matrix<R>,
    pub v: Matrix<R>,
    pub v_inv: Matrix<R>,
}

impl<R: Ring> Smith<R> {
    /// Diagonal entries `d_0 | d_1 | ...` (length `min(rows, cols)`).
    pub fn invariant_factors(&self) -> Vec<R::Elem> {
        let k = self.diag.rows().min(self.diag.cols());
        (0..k).map(|i| self.diag.get(i, i).clone()).collect()
    }
}

pub fn smith<R: Ring>(m: &Matrix<R>) -> Smith<R> {
    let ring = m.ring().clone();
    let (r, c) = m.shape();
    let mut a = m.clone();
    let mut u = Matrix::identity(&ring, r);
    let mut v = Matrix::identity(&ring, c);
    let mut v_inv = Matrix::identity(&ring, c);

    let col_combine = |a: &mut Matrix<R>, v: &mut Matrix<R>, vi: &mut Matrix<R>, x: usize, y: usize, g: &Gcdex<R::Elem>| {
        a.combine_cols(x, y, &g.s, &g.t, &g.u, &g.v);
        v.combine_cols(x, y, &g.s, &g.t, &g.u, &g.v);
        let det = ring.sub(&ring.mul(&g.s, &g.v), &ring.mul(&g.t, &g.u));
        let di = ring.divide(&ring.one(), &det).expect("gcdex determinant is a unit");
        let (s2, t2) = (ring.mul(&di, &g.v), ring.neg(&ring.mul(&di, &g.u)));
        let (u2, v2) = (ring.neg(&ring.mul(&di, &g.t)), ring.mul(&di, &g.s));
        vi.combine_rows(x, y, &s2, &t2, &u2, &v2);
    };

    for t in 0..r.min(c) {
        let Some((pi, pj)) = (t..r).flat_map(|i| (t..c).map(move |j| (i, j))).find(|&(i, j)| !ring.is_zero(a.get(i, j)))
        else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        loop {
            for i in t + 1..r {
                if ring.is_zero(a.get(i, t)) {
                    continue;
                }
                let p = a.get(t, t).clone();
                let b = a.get(i, t).clone();
                if let Some(q) = ring.divide(&b, &p) {
                    let mq = ring.neg(&q);
                    a.add_row_multiple(i, t, &mq);
                    u.add_row_multiple(i, t, &mq);
                } else {
                    let g = ring.gcdex(&p, &b);
                    a.combine_rows(t, i, &g.s, &g.t, &g.u, &g.v);
                    u.combine_rows(t, i, &g.s, &g.t, &g.u, &g.v);
                }
            }
            for j in t + 1..c {
                if ring.is_zero(a.get(t, j)) {
                    continue;
                }
                let p = a.get(t, t).clone();
                let b = a.get(t, j).clone();
                if let Some(q) = ring.divide(&b, &p) {
                    let mq = ring.neg(&q);
                    a.add_col_multiple(j, t, &mq);
                    v.add_col_multiple(j, t, &mq);
                    v_inv.add_row_multiple(t, j, &q);
                } else {
                    let g = ring.gcdex(&p, &b);
                    col_combine(&mut a, &mut v, &mut v_inv, t, j, &g);
                }
            }
            let clean = (t + 1..r).all(|i| ring.is_zero(a.get(i, t))) && (t + 1..c).all(|j| ring.is_zero(a.get(t, j)));
            if !clean {
                continue;
            }
            let p = a.get(t, t).clone();
            let bad = (t + 1..r)
                .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !ring.divides(&p, a.get(i, j)));
            match bad {
                Some((_, j)) => {
                    let one = ring.one();
                    a.add_col_multiple(t, j, &one);
                    v.add_col_multiple(t, j, &one);
                    v_inv.add_row_multiple(j, t, &ring.neg(&one));
                }
                None => break,
            }
        }
        let unit = ring.normalizing_unit(a.get(t, t));
        if !ring.is_one(&unit) {
            a.scale_row(t, &unit);
            u.scale_row(t, &unit);
        }
    }
    Smith { diag: a, u, v, v_inv }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, IntegersMod, PrimeField, Rationals};
    use num_bigint::BigInt;

    fn check_smith<R: Ring>(m: &Matrix<R>) -> Smith<R> {
        let s = smith(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.diag);
        assert!(s.v.mul(&s.v_inv).is_identity());
        let ring = m.ring();
        for i in 0..s.diag.rows() {
            for j in 0..s.diag.cols() {
                if i != j {
                    assert!(ring.is_zero(s.diag.get(i, j)));
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(ring.divides(&w[0], &w[1]), "{:?} does not divide {:?}", w[0], w[1]);
        }
        s
    }

    #[test]
    fn smith_of_small_integer_matrix() {
        let m = Matrix::from_i64(&Integers, 2, 2, &[2, 4, 6, 8]);
        let s = check_smith(&m);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn smith_over_z_mod_n() {
        let r = IntegersMod::new(12).unwrap();
        let m = Matrix::from_i64(&r, 3, 3, &[4, 6, 0, 2, 3, 9, 8, 0, 6]);
        check_smith(&m);
        let m = Matrix::from_i64(&r, 2, 3, &[0, 8, 4, 6, 0, 3]);
        check_smith(&m);
    }

    #[test]
    fn identity_is_canonical() {
        let f = PrimeField::new(5).unwrap();
        let id = Matrix::identity(&f, 3);
        let cf = canonical_form(&id, FormMode::Span);
        assert_eq!(cf.form, id);
        assert!(cf.row_transform.is_identity());
        assert_eq!(cf.kind, FormKind::Rref);
    }

    #[test]
    fn howell_of_two_over_z4() {
        let r = IntegersMod::new(4).unwrap();
        let cf = canonical_form(&Matrix::from_i64(&r, 1, 1, &[2]), FormMode::Span);
        assert_eq!(cf.basis(), Matrix::from_i64(&r, 1, 1, &[2]));
        assert_eq!(cf.kind, FormKind::Howell);
    }

    #[test]
    fn howell_property_requires_annihilator_rows() {
        // Row span of (2, 1) over Z/4 contains (0, 2); the form must list it.
        let r = IntegersMod::new(4).unwrap();
        let h = echelon(&Matrix::from_i64(&r, 1, 2, &[2, 1]));
        assert_eq!(h, Matrix::from_i64(&r, 2, 2, &[2, 1, 0, 2]));
    }

    #[test]
    fn transform_relation_holds() {
        let r = IntegersMod::new(8).unwrap();
        let m = Matrix::from_i64(&r, 3, 3, &[2, 4, 6, 4, 1, 0, 6, 5, 2]);
        let (form, t) = echelon_with_transform(&m);
        let padded = m.vstack(&Matrix::zeros(&r, 3, 3));
        assert_eq!(t.mul(&padded), form);
        let q = Rationals;
        let m = Matrix::from_i64(&q, 2, 3, &[1, 2, 3, 2, 4, 7]);
        let (form, t) = echelon_with_transform(&m);
        assert_eq!(t.mul(&m), form);
        assert_eq!(form, Matrix::from_i64(&q, 2, 3, &[1, 2, 0, 0, 0, 1]));
    }

    #[test]
    fn hermite_form_reduces_above_pivots() {
        let m = Matrix::from_i64(&Integers, 2, 2, &[3, 5, 0, 2]);
        assert_eq!(echelon(&m), Matrix::from_i64(&Integers, 2, 2, &[3, 1, 0, 2]));
    }
}
