//! Coalgebras on free modules of finite rank, given by structure constants.
//!
//! For a coalgebra of rank `d`, `delta` is `d^2 x d` with column `j` holding
//! the coordinates of `Δ(c_j)` in the basis `c_a (x) c_b` (index `a*d + b`),
//! and `epsilon` is `1 x d`.

use serde::Serialize;

use crate::error::{dim_err, Result};
use crate::matrix::Matrix;
use crate::module::{ModuleMap, PresentedModule};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra<R: Ring> {
    name: String,
    ring: R,
    rank: usize,
    delta: Matrix<R>,
    epsilon: Matrix<R>,
}

/// One checked identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    /// First basis element or generator where the two sides differ.
    pub witness: Option<usize>,
}

impl AxiomCheck {
    pub fn new(axiom: &str, witness: Option<usize>) -> Self {
        Self { axiom: axiom.to_string(), passed: witness.is_none(), witness }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

impl<R: Ring> Coalgebra<R> {
    pub fn new(name: &str, delta: Matrix<R>, epsilon: Matrix<R>) -> Result<Self> {
        let ring = delta.ring().clone();
        let d = epsilon.cols();
        if epsilon.rows() != 1 {
            return Err(dim_err(format!("coalgebra {name}"), format!("epsilon must be 1x{d}, got {:?}", epsilon.shape())));
        }
        if d == 0 {
            return Err(dim_err(format!("coalgebra {name}"), "rank must be positive"));
        }
        if delta.shape() != (d * d, d) {
            return Err(dim_err(
                format!("coalgebra {name}"),
                format!("delta must be {}x{d} for rank {d}, got {}x{}", d * d, delta.rows(), delta.cols()),
            ));
        }
        Ok(Self { name: name.to_string(), ring, rank: d, delta, epsilon })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn delta(&self) -> &Matrix<R> {
        &self.delta
    }

    pub fn epsilon(&self) -> &Matrix<R> {
        &self.epsilon
    }

    pub fn module(&self) -> PresentedModule<R> {
        PresentedModule::free(&self.ring, self.rank)
    }

    pub fn delta_map(&self) -> ModuleMap<R> {
        let c = self.module();
        ModuleMap::new_unchecked(&c, &c.tensor(&c), self.delta.clone())
    }

    pub fn epsilon_map(&self) -> ModuleMap<R> {
        ModuleMap::new_unchecked(&self.module(), &PresentedModule::free(&self.ring, 1), self.epsilon.clone())
    }

    /// Same structure constants, equality ignoring names.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.delta == other.delta && self.epsilon == other.epsilon
    }

    /// Structure-constant copy with one entry of `delta` shifted by one.
    pub fn perturbed_delta(&self, row: usize, col: usize) -> Self {
        let mut c = self.clone();
        let v = self.ring.add(self.delta.get(row, col), &self.ring.one());
        c.delta.set(row, col, v);
        c
    }

    pub fn perturbed_epsilon(&self, col: usize) -> Self {
        let mut c = self.clone();
        let v = self.ring.add(self.epsilon.get(0, col), &self.ring.one());
        c.epsilon.set(0, col, v);
        c
    }
}

pub fn check_coalgebra<R: Ring>(c: &Coalgebra<R>) -> AxiomReport {
    let r = &c.ring;
    let id = Matrix::identity(r, c.rank);
    let left = id.kron(&c.delta).mul(&c.delta);
    let right = c.delta.kron(&id).mul(&c.delta);
    let ceps_l = c.epsilon.kron(&id).mul(&c.delta);
    let ceps_r = id.kron(&c.epsilon).mul(&c.delta);
    AxiomReport {
        checks: vec![
            AxiomCheck::new("coassociativity", left.first_differing_column(&right)),
            AxiomCheck::new("left counit", ceps_l.first_differing_column(&id)),
            AxiomCheck::new("right counit", ceps_r.first_differing_column(&id)),
        ],
    }
}

/// `Δ_D π = (π ⊗ π) Δ_C` and `ε_D π = ε_C`.
pub fn check_coalgebra_morphism<R: Ring>(pi: &Matrix<R>, src: &Coalgebra<R>, dst: &Coalgebra<R>) -> Result<AxiomReport> {
    if pi.shape() != (dst.rank, src.rank) {
        return Err(dim_err(
            "coalgebra morphism",
            format!("matrix is {:?}, expected {}x{}", pi.shape(), dst.rank, src.rank),
        ));
    }
    let lhs = dst.delta.mul(pi);
    let rhs = pi.kron(pi).mul(&src.delta);
    let e = dst.epsilon.mul(pi);
    Ok(AxiomReport {
        checks: vec![
            AxiomCheck::new("comultiplicative", lhs.first_differing_column(&rhs)),
            AxiomCheck::new("counital", e.first_differing_column(&src.epsilon)),
        ],
    })
}

/// A finite-rank algebra: `mult` is `d x d^2`, `unit` is `d x 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra<R: Ring> {
    pub ring: R,
    pub rank: usize,
    pub mult: Matrix<R>,
    pub unit: Matrix<R>,
}

impl<R: Ring> Algebra<R> {
    pub fn check(&self) -> AxiomReport {
        let id = Matrix::identity(&self.ring, self.rank);
        let assoc_l = self.mult.mul(&self.mult.kron(&id));
        let assoc_r = self.mult.mul(&id.kron(&self.mult));
        let unit_l = self.mult.mul(&self.unit.kron(&id));
        let unit_r = self.mult.mul(&id.kron(&self.unit));
        AxiomReport {
            checks: vec![
                AxiomCheck::new("associativity", assoc_l.first_differing_column(&assoc_r)),
                AxiomCheck::new("left unit", unit_l.first_differing_column(&id)),
                AxiomCheck::new("right unit", unit_r.first_differing_column(&id)),
            ],
        }
    }

    /// Product of two elements given in coordinates.
    pub fn product(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        let ab = Matrix::column_vector(&self.ring, a.to_vec()).kron(&Matrix::column_vector(&self.ring, b.to_vec()));
        self.mult.mul(&ab).column(0)
    }

    /// A pair of basis elements that do not commute.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        let d = self.rank;
        for a in 0..d {
            for b in a + 1..d {
                if self.mult.column(a * d + b) != self.mult.column(b * d + a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting_pair().is_none()
    }
}

/// Convolution algebra on the dual basis: `(f * g)(c) = (f ⊗ g)(Δ c)`.
pub fn dual_algebra<R: Ring>(c: &Coalgebra<R>) -> Algebra<R> {
    Algebra { ring: c.ring.clone(), rank: c.rank, mult: c.delta.transpose(), unit: c.epsilon.transpose() }
}

/// `Δ(c_i) = c_i ⊗ c_i`, `ε(c_i) = 1`.
pub fn grouplike<R: Ring>(ring: &R, d: usize) -> Coalgebra<R> {
    assert!(d > 0, "grouplike coalgebra needs positive rank");
    let mut delta = Matrix::zeros(ring, d * d, d);
    for i in 0..d {
        delta.set(i * d + i, i, ring.one());
    }
    let epsilon = Matrix::from_vec(ring, 1, d, vec![ring.one(); d]);
    Coalgebra::new(&format!("grouplike({d})"), delta, epsilon).expect("grouplike shapes")
}

/// The base ring as a coalgebra.
pub fn unit_coalgebra<R: Ring>(ring: &R) -> Coalgebra<R> {
    grouplike(ring, 1).renamed("R")
}

/// Comatrix coalgebra on `e_ij` (index `i*n + j`), `Δ(e_ij) = Σ_k e_ik ⊗ e_kj`, `ε(e_ij) = δ_ij`.
pub fn matrix_coalgebra<R: Ring>(ring: &R, n: usize) -> Coalgebra<R> {
    assert!(n > 0, "matrix coalgebra needs positive size");
    let d = n * n;
    let mut delta = Matrix::zeros(ring, d * d, d);
    let mut epsilon = Matrix::zeros(ring, 1, d);
    for i in 0..n {
        for j in 0..n {
            let col = i * n + j;
            for k in 0..n {
                delta.set((i * n + k) * d + (k * n + j), col, ring.one());
            }
            if i == j {
                epsilon.set(0, col, ring.one());
            }
        }
    }
    Coalgebra::new(&format!("matrix({n})"), delta, epsilon).expect("matrix coalgebra shapes")
}

/// Divided power coalgebra truncated at degree `k - 1`: `Δ(x_n) = Σ_{i+j=n} x_i ⊗ x_j`.
pub fn divided_power<R: Ring>(ring: &R, k: usize) -> Coalgebra<R> {
    assert!(k > 0, "divided power coalgebra needs positive rank");
    let mut delta = Matrix::zeros(ring, k * k, k);
    for n in 0..k {
        for i in 0..=n {
            delta.set(i * k + (n - i), n, ring.one());
        }
    }
    let mut epsilon = Matrix::zeros(ring, 1, k);
    epsilon.set(0, 0, ring.one());
    Coalgebra::new(&format!("divided({k})"), delta, epsilon).expect("divided power shapes")
}

/// Direct sum: basis of `c1` followed by basis of `c2`.
pub fn direct_sum<R: Ring>(c1: &Coalgebra<R>, c2: &Coalgebra<R>) -> Coalgebra<R> {
    let r = &c1.ring;
    let (d1, d2) = (c1.rank, c2.rank);
    let d = d1 + d2;
    let mut delta = Matrix::zeros(r, d * d, d);
    for j in 0..d1 {
        for a in 0..d1 {
            for b in 0..d1 {
                delta.set(a * d + b, j, c1.delta.get(a * d1 + b, j).clone());
            }
        }
    }
    for j in 0..d2 {
        for a in 0..d2 {
            for b in 0..d2 {
                delta.set((d1 + a) * d + d1 + b, d1 + j, c2.delta.get(a * d2 + b, j).clone());
            }
        }
    }
    let epsilon = c1.epsilon.hstack(&c2.epsilon);
    Coalgebra::new(&format!("{}+{}", c1.name, c2.name), delta, epsilon).expect("direct sum shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, IntegersMod, PrimeField, Rationals};

    #[test]
    fn builders_pass_axioms() {
        let q = Rationals;
        assert!(check_coalgebra(&grouplike(&q, 3)).passed());
        assert!(check_coalgebra(&matrix_coalgebra(&q, 2)).passed());
        assert!(check_coalgebra(&divided_power(&IntegersMod::new(4).unwrap(), 4)).passed());
        let s = direct_sum(&grouplike(&Integers, 1), &grouplike(&Integers, 1));
        assert!(s.same_structure(&grouplike(&Integers, 2)));
    }

    #[test]
    fn zero_counit_fails_at_column_zero() {
        let f = PrimeField::new(2).unwrap();
        let c = grouplike(&f, 1);
        let bad = Coalgebra::new("bad", c.delta().clone(), Matrix::zeros(&f, 1, 1)).unwrap();
        let rep = check_coalgebra(&bad);
        assert!(!rep.passed());
        assert_eq!(rep.get("left counit").unwrap().witness, Some(0));
    }

    #[test]
    fn shape_error_names_coalgebra() {
        let q = Rationals;
        let err = Coalgebra::new("K", Matrix::zeros(&q, 3, 2), Matrix::zeros(&q, 1, 2)).unwrap_err();
        assert!(err.to_string().contains("coalgebra K"), "{err}");
    }

    #[test]
    fn morphisms() {
        let q = Rationals;
        let g2 = grouplike(&q, 2);
        let g1 = grouplike(&q, 1);
        let collapse = Matrix::from_i64(&q, 1, 2, &[1, 1]);
        assert!(check_coalgebra_morphism(&collapse, &g2, &g1).unwrap().passed());
        assert!(check_coalgebra_morphism(&Matrix::identity(&q, 2), &g2, &g2).unwrap().passed());
        let zero = Matrix::zeros(&q, 1, 1);
        let rep = check_coalgebra_morphism(&zero, &g1, &g1).unwrap();
        assert!(!rep.get("counital").unwrap().passed);
    }

    #[test]
    fn dual_algebras() {
        let q = Rationals;
        let g = dual_algebra(&grouplike(&q, 3));
        assert!(g.check().passed() && g.is_commutative());
        let e0 = vec![q.one(), q.zero(), q.zero()];
        assert_eq!(g.product(&e0, &e0), e0);
        let m = dual_algebra(&matrix_coalgebra(&q, 2));
        assert!(m.check().passed());
        assert!(m.noncommuting_pair().is_some());
        // e*_{01} e*_{10} = e*_{00} under this convention.
        let e = |i: usize| (0..4).map(|k| if k == i { q.one() } else { q.zero() }).collect::<Vec<_>>();
        assert_eq!(m.product(&e(1), &e(2)), e(0));
        assert_eq!(m.product(&e(2), &e(1)), e(3));
    }
}
