#![allow(dead_code)]

use comod::coalgebra::{divided_power, grouplike, matrix_coalgebra, Coalgebra};
use comod::comodule::{Bicomodule, Comodule, Side};
use comod::fixtures::column_comodule;
use comod::matrix::Matrix;
use comod::module::PresentedModule;
use comod::ring::Ring;
use rand::Rng;

pub fn small<R: Ring, G: Rng>(ring: &R, rng: &mut G) -> R::Elem {
    ring.from_i64(rng.gen_range(-2..=2))
}

/// A random invertible matrix and its inverse, as products of elementary operations.
pub fn unimodular<R: Ring, G: Rng>(ring: &R, n: usize, rng: &mut G) -> (Matrix<R>, Matrix<R>) {
    let mut p = Matrix::identity(ring, n);
    let mut inv = Matrix::identity(ring, n);
    if n < 2 {
        return (p, inv);
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = small(ring, rng);
        p.add_row_multiple(i, j, &c);
        inv.add_col_multiple(j, i, &ring.neg(&c));
    }
    (p, inv)
}

/// `ρ = Σ_g φ_g ⊗ c_g` in the layout of the given side.
fn assemble<R: Ring>(ring: &R, side: Side, c: usize, phis: &[Matrix<R>]) -> Matrix<R> {
    let m = phis[0].rows();
    let mut rho = Matrix::zeros(ring, m * c, m);
    for (g, phi) in phis.iter().enumerate() {
        for i in 0..m {
            for j in 0..m {
                let row = match side {
                    Side::Right => i * c + g,
                    Side::Left => g * m + i,
                };
                rho.set(row, j, phi.get(i, j).clone());
            }
        }
    }
    rho
}

/// A graded module over `grouplike(d)` in a random basis.
pub fn random_grouplike_comodule<R: Ring, G: Rng>(ring: &R, d: usize, m: usize, side: Side, rng: &mut G) -> Comodule<R> {
    let c = grouplike(ring, d);
    let grades: Vec<usize> = (0..m).map(|_| rng.gen_range(0..d)).collect();
    let (p, inv) = unimodular(ring, m, rng);
    let phis: Vec<Matrix<R>> = (0..d)
        .map(|g| {
            let e = Matrix::from_fn(ring, m, m, |i, j| if i == j && grades[i] == g { ring.one() } else { ring.zero() });
            p.mul(&e).mul(&inv)
        })
        .collect();
    let rho = assemble(ring, side, d, &phis);
    Comodule::new(side, &c, &PresentedModule::free(ring, m), rho).expect("graded comodule")
}

/// A module over `R[t]/t^k` given by a random nilpotent `T`, as a divided power comodule.
pub fn random_divided_comodule<R: Ring, G: Rng>(ring: &R, k: usize, m: usize, side: Side, rng: &mut G) -> Comodule<R> {
    let c = divided_power(ring, k);
    // Blocks of size k keep T^k = 0.
    let upper = Matrix::from_fn(ring, m, m, |i, j| if i < j && i / k == j / k { small(ring, rng) } else { ring.zero() });
    let (p, inv) = unimodular(ring, m, rng);
    let t = p.mul(&upper).mul(&inv);
    let mut phis = vec![Matrix::identity(ring, m)];
    for n in 1..k {
        phis.push(phis[n - 1].mul(&t));
    }
    let rho = assemble(ring, side, k, &phis);
    Comodule::new(side, &c, &PresentedModule::free(ring, m), rho).expect("divided power comodule")
}

/// A right comodule over `c` for which random pairs are likely to be defined: graded or nilpotent.
pub fn random_pair<R: Ring, G: Rng>(ring: &R, rng: &mut G, max_rank: usize) -> (Comodule<R>, Comodule<R>) {
    let a = rng.gen_range(1..=max_rank);
    let b = rng.gen_range(1..=max_rank);
    if rng.gen_bool(0.5) {
        let d = rng.gen_range(1..=3);
        (random_grouplike_comodule(ring, d, a, Side::Right, rng), random_grouplike_comodule(ring, d, b, Side::Left, rng))
    } else {
        let k = rng.gen_range(2..=3);
        (random_divided_comodule(ring, k, a, Side::Right, rng), random_divided_comodule(ring, k, b, Side::Left, rng))
    }
}

/// `X^k` for the column comodule over `M^c(2)`, right side.
pub fn column_power<R: Ring>(ring: &R, k: usize) -> Comodule<R> {
    let x = column_comodule(ring);
    let mut out = x.clone();
    for _ in 1..k {
        out = out.direct_sum(&x).unwrap();
    }
    out
}

pub fn standard_coalgebras<R: Ring>(ring: &R) -> Vec<Coalgebra<R>> {
    let mut out: Vec<Coalgebra<R>> = (1..=4).map(|d| grouplike(ring, d)).collect();
    out.extend((1..=3).map(|n| matrix_coalgebra(ring, n)));
    out
}

/// A right `C`-comodule, a `C`-`D`-bicomodule and a left `D`-comodule with random structure.
pub fn random_triple<R: Ring, G: Rng>(ring: &R, rng: &mut G, max_rank: usize) -> (Comodule<R>, Bicomodule<R>, Comodule<R>) {
    let (a, l, b) = (rng.gen_range(1..=max_rank), rng.gen_range(1..=max_rank), rng.gen_range(1..=max_rank));
    let (p, inv) = unimodular(ring, l, rng);
    if rng.gen_bool(0.5) {
        let (d1, d2) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let grades: Vec<(usize, usize)> = (0..l).map(|_| (rng.gen_range(0..d1), rng.gen_range(0..d2))).collect();
        let proj = |pick: &dyn Fn(usize) -> bool| {
            let e = Matrix::from_fn(ring, l, l, |i, j| if i == j && pick(i) { ring.one() } else { ring.zero() });
            p.mul(&e).mul(&inv)
        };
        let left: Vec<Matrix<R>> = (0..d1).map(|g| proj(&|i| grades[i].0 == g)).collect();
        let right: Vec<Matrix<R>> = (0..d2).map(|h| proj(&|i| grades[i].1 == h)).collect();
        let (c, d) = (grouplike(ring, d1), grouplike(ring, d2));
        let lb = Bicomodule::new(&c, &d, &PresentedModule::free(ring, l), assemble(ring, Side::Left, d1, &left), assemble(ring, Side::Right, d2, &right))
            .expect("bigraded bicomodule");
        (random_grouplike_comodule(ring, d1, a, Side::Right, rng), lb, random_grouplike_comodule(ring, d2, b, Side::Left, rng))
    } else {
        let k = rng.gen_range(2..=3);
        let upper = Matrix::from_fn(ring, l, l, |i, j| if i < j && i / k == j / k { small(ring, rng) } else { ring.zero() });
        let t = p.mul(&upper).mul(&inv);
        let mut phis = vec![Matrix::identity(ring, l)];
        for n in 1..k {
            phis.push(phis[n - 1].mul(&t));
        }
        let c = divided_power(ring, k);
        let lb = Bicomodule::new(&c, &c, &PresentedModule::free(ring, l), assemble(ring, Side::Left, k, &phis), assemble(ring, Side::Right, k, &phis))
            .expect("nilpotent bicomodule");
        (random_divided_comodule(ring, k, a, Side::Right, rng), lb, random_divided_comodule(ring, k, b, Side::Left, rng))
    }
}

/// `⊕ R/(a_i)` with `a_i ∈ {0, 2}` and a nilpotent `T` that respects the relations.
fn torsion_nilpotent<R: Ring, G: Rng>(ring: &R, k: usize, m: usize, rng: &mut G) -> (PresentedModule<R>, Vec<Matrix<R>>) {
    let a: Vec<R::Elem> = (0..m).map(|_| ring.from_i64(if rng.gen_bool(0.5) { 2 } else { 0 })).collect();
    let rels = Matrix::from_fn(ring, m, m, |i, j| if i == j { a[i].clone() } else { ring.zero() });
    let carrier = PresentedModule::new(ring, m, &rels);
    let t = Matrix::from_fn(ring, m, m, |i, j| {
        let v = if i < j && i / k == j / k { small(ring, rng) } else { ring.zero() };
        if ring.divides(&a[i], &ring.mul(&a[j], &v)) { v } else { ring.zero() }
    });
    let mut phis = vec![Matrix::identity(ring, m)];
    for n in 1..k {
        phis.push(phis[n - 1].mul(&t));
    }
    (carrier, phis)
}

/// Like [`random_triple`] over a divided power coalgebra, with torsion in the carriers.
pub fn random_torsion_triple<R: Ring, G: Rng>(ring: &R, rng: &mut G, max_rank: usize) -> (Comodule<R>, Bicomodule<R>, Comodule<R>) {
    let k = rng.gen_range(2..=3);
    let c = divided_power(ring, k);
    let (mc, mp) = torsion_nilpotent(ring, k, rng.gen_range(1..=max_rank), rng);
    let (lc, lp) = torsion_nilpotent(ring, k, rng.gen_range(1..=max_rank), rng);
    let (nc, np) = torsion_nilpotent(ring, k, rng.gen_range(1..=max_rank), rng);
    let m = Comodule::new(Side::Right, &c, &mc, assemble(ring, Side::Right, k, &mp)).expect("torsion comodule");
    let l = Bicomodule::new(&c, &c, &lc, assemble(ring, Side::Left, k, &lp), assemble(ring, Side::Right, k, &lp)).expect("torsion bicomodule");
    let n = Comodule::new(Side::Left, &c, &nc, assemble(ring, Side::Left, k, &np)).expect("torsion comodule");
    (m, l, n)
}
