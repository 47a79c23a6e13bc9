//! Exact results checked against brute-force enumeration over small finite rings.

mod common;

use std::collections::HashSet;

use comod::hom::MapEquation;
use comod::linalg::{left_kernel, Span};
use comod::matrix::Matrix;
use comod::module::{ModuleMap, PresentedModule};
use comod::normal_form::smith;
use comod::ring::{Integers, IntegersMod, PrimeField, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_vectors<R: Ring>(ring: &R, n: usize) -> Vec<Vec<R::Elem>> {
    let els = ring.elements().expect("finite ring");
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                els.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}

fn row_span<R: Ring>(ring: &R, rows: &Matrix<R>) -> HashSet<Vec<R::Elem>> {
    all_vectors(ring, rows.rows()).iter().map(|c| rows.vec_mul(c)).collect()
}

fn random_matrix<R: Ring>(ring: &R, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix<R> {
    Matrix::from_fn(ring, rows, cols, |_, _| ring.from_i64(rng.gen_range(0..8)))
}

fn kernel_matches<R: Ring>(ring: &R, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..40 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let a = random_matrix(ring, r, c, &mut rng);
        let brute: HashSet<_> = all_vectors(ring, r).into_iter().filter(|x| a.vec_mul(x).iter().all(|e| ring.is_zero(e))).collect();
        let k = left_kernel(&a);
        assert_eq!(row_span(ring, &k), brute, "left kernel of {a:?}");
    }
}

#[test]
fn left_kernel_f2() {
    kernel_matches(&PrimeField::new(2).unwrap(), 1);
}

#[test]
fn left_kernel_z4() {
    kernel_matches(&IntegersMod::new(4).unwrap(), 2);
}

#[test]
fn left_kernel_z6() {
    kernel_matches(&IntegersMod::new(6).unwrap(), 3);
}

#[test]
fn span_membership_z4() {
    let r = IntegersMod::new(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..40 {
        let (k, n) = (rng.gen_range(1..=3), rng.gen_range(1..=4));
        let m = random_matrix(&r, k, n, &mut rng);
        let span = Span::new(&m);
        let brute = row_span(&r, &m);
        for v in all_vectors(&r, n) {
            assert_eq!(span.contains(&v), brute.contains(&v));
        }
        assert_eq!(row_span(&r, span.basis()), brute);
    }
}

fn det(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

#[test]
fn smith_over_integers_matches_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let mut a = [[0i64; 3]; 3];
        for row in a.iter_mut() {
            for e in row.iter_mut() {
                *e = rng.gen_range(-6..=6);
            }
        }
        let m = Matrix::from_i64(&Integers, 3, 3, &a.concat());
        let s = smith(&m);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.diag);
        assert!(s.v.mul(&s.v_inv).is_identity());
        let mut g1 = 0i64;
        let mut g2 = 0i64;
        for e in a.iter().flatten() {
            g1 = g1.gcd(e);
        }
        for (r0, r1) in [(0, 1), (0, 2), (1, 2)] {
            for (c0, c1) in [(0, 1), (0, 2), (1, 2)] {
                g2 = g2.gcd(&(a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]));
            }
        }
        let g3 = det(&a).abs();
        let d: Vec<BigInt> = s.invariant_factors();
        assert!(d.iter().all(|x| !x.is_negative()));
        assert_eq!(d[0], BigInt::from(g1));
        assert_eq!(&d[0] * &d[1], BigInt::from(g2));
        assert_eq!(&d[0] * &d[1] * &d[2], BigInt::from(g3));
        for w in d.windows(2) {
            assert!(w[1].is_zero() || (&w[1] % &w[0]).is_zero() || w[0].is_zero());
        }
    }
}

#[test]
fn quotient_cardinality_z4() {
    let r = IntegersMod::new(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..40 {
        let (k, n) = (rng.gen_range(0..=3), rng.gen_range(1..=3));
        let rels = random_matrix(&r, k, n, &mut rng);
        let module = PresentedModule::new(&r, n, &rels);
        let span = row_span(&r, &rels).len() as u128;
        assert_eq!(module.cardinality(), Some(4u128.pow(n as u32) / span));
        let residues: HashSet<_> = all_vectors(&r, n).iter().map(|v| module.residue(v)).collect();
        assert_eq!(residues.len() as u128, 4u128.pow(n as u32) / span);
    }
}

#[test]
fn hom_module_counts_z4() {
    let r = IntegersMod::new(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let p = PresentedModule::new(&r, 2, &random_matrix(&r, 1, 2, &mut rng));
        let q = PresentedModule::new(&r, 2, &random_matrix(&r, 1, 2, &mut rng));
        let hom = MapEquation::new(&p, &q).kernel();
        let mut distinct = HashSet::new();
        for v in all_vectors(&r, 4) {
            let f = ModuleMap::new_unchecked(&p, &q, Matrix::from_vec(&r, 2, 2, v));
            if f.is_well_defined() {
                let cols: Vec<Vec<u64>> = (0..2).map(|j| q.residue(&f.matrix().column(j))).collect();
                distinct.insert(cols);
            }
        }
        assert_eq!(hom.cardinality(), Some(distinct.len() as u128));
    }
}
