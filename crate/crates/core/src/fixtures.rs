//! Small named examples shared by tests, the CLI and the documentation.

use crate::coalgebra::{grouplike, matrix_coalgebra, unit_coalgebra, Coalgebra};
use crate::comodule::{Bicomodule, Comodule, Side};
use crate::matrix::Matrix;
use crate::module::PresentedModule;
use crate::morita::{MoritaContext, TestFamily};
use crate::ring::Ring;

/// `R^2` as a right `M^c(2)`-comodule, `x_j -> Σ_i x_i ⊗ e_ij`.
pub fn column_comodule<R: Ring>(ring: &R) -> Comodule<R> {
    let d = matrix_coalgebra(ring, 2);
    let mut rho = Matrix::zeros(ring, 8, 2);
    for j in 0..2 {
        for i in 0..2 {
            rho.set(i * 4 + (i * 2 + j), j, ring.one());
        }
    }
    Comodule::new(Side::Right, &d, &PresentedModule::free(ring, 2), rho).expect("column comodule")
}

/// `R^2` as a left `M^c(2)`-comodule, `y_i -> Σ_j e_ij ⊗ y_j`.
pub fn row_comodule<R: Ring>(ring: &R) -> Comodule<R> {
    let d = matrix_coalgebra(ring, 2);
    let mut rho = Matrix::zeros(ring, 8, 2);
    for i in 0..2 {
        for j in 0..2 {
            rho.set((i * 2 + j) * 2 + j, i, ring.one());
        }
    }
    Comodule::new(Side::Left, &d, &PresentedModule::free(ring, 2), rho).expect("row comodule")
}

/// `R^k` with the trivial coaction of the unit coalgebra.
pub fn plain_comodule<R: Ring>(ring: &R, side: Side, k: usize) -> Comodule<R> {
    let unit = unit_coalgebra(ring);
    Comodule::new(side, &unit, &PresentedModule::free(ring, k), Matrix::identity(ring, k)).expect("plain comodule")
}

/// The rank-one right comodule spanned by the grouplike `c_at` of `grouplike(d)`.
pub fn point_comodule<R: Ring>(ring: &R, d: usize, at: usize) -> Comodule<R> {
    let c = grouplike(ring, d);
    let mut rho = Matrix::zeros(ring, d, 1);
    rho.set(at, 0, ring.one());
    Comodule::new(Side::Right, &c, &PresentedModule::free(ring, 1), rho).expect("point comodule")
}

/// `(C, C, C, C, Δ, Δ)`.
pub fn trivial_context<R: Ring>(c: &Coalgebra<R>) -> MoritaContext<R> {
    let reg = Bicomodule::regular(c);
    MoritaContext::new(c, c, &reg, &reg, c.delta(), c.delta()).expect("trivial context")
}

/// `D = M^c(2)`, `C = R`, `M` the row comodule, `N` the column comodule,
/// `f(e_ij) = y_i ⊗ x_j`, `g(1) = Σ_i x_i ⊗ y_i`.
pub fn comatrix_context<R: Ring>(ring: &R) -> MoritaContext<R> {
    let d = matrix_coalgebra(ring, 2);
    let c = unit_coalgebra(ring);
    let m = row_comodule(ring).to_bicomodule();
    let n = column_comodule(ring).to_bicomodule();
    let f = Matrix::identity(ring, 4);
    let g = Matrix::from_fn(ring, 4, 1, |k, _| if k == 0 || k == 3 { ring.one() } else { ring.zero() });
    MoritaContext::new(&d, &c, &m, &n, &f, &g).expect("comatrix context")
}

/// Right: `R, R^2, R^3` over `R` and `X, X ⊕ X, D` over `D`; left: `R, R^2` and `Y, D`.
pub fn comatrix_test_family<R: Ring>(ring: &R) -> TestFamily<R> {
    let d = matrix_coalgebra(ring, 2);
    let x = column_comodule(ring);
    let xx = x.direct_sum(&x).expect("same coalgebra");
    TestFamily {
        right_c: (1..=3).map(|k| (format!("R^{k}"), plain_comodule(ring, Side::Right, k))).collect(),
        right_d: vec![("X".into(), x), ("X+X".into(), xx), ("D".into(), Comodule::regular(Side::Right, &d))],
        left_c: (1..=2).map(|k| (format!("R^{k}"), plain_comodule(ring, Side::Left, k))).collect(),
        left_d: vec![("Y".into(), row_comodule(ring)), ("D".into(), Comodule::regular(Side::Left, &d))],
    }
}
