//! Linear equations whose unknown is a module map.
//!
//! An unknown `G: P -> Q` is stored as the vector of its columns (block `j`
//! is the image of generator `j` of `P`), so `Hom_R(P, Q)` sits inside `Q^p`.
//! A constraint `L(G) = T` with `L` linear and values in `Z^s` is assembled
//! by evaluating `L` on elementary matrices; well-definedness on the
//! relations of `P` is always added.

use crate::matrix::Matrix;
use crate::module::{ModuleMap, Preimage, PresentedModule};
use crate::ring::Ring;

/// `Q^p`, the ambient of `Hom_R(P, Q)` in column-block coordinates.
pub fn power<R: Ring>(q: &PresentedModule<R>, p: usize) -> PresentedModule<R> {
    let r = q.ring();
    let rels = Matrix::identity(r, p).kron(q.relations());
    PresentedModule::new(r, p * q.gens(), &rels)
}

pub fn matrix_to_vec<R: Ring>(m: &Matrix<R>) -> Vec<R::Elem> {
    (0..m.cols()).flat_map(|j| m.column(j)).collect()
}

pub fn vec_to_matrix<R: Ring>(ring: &R, v: &[R::Elem], rows: usize, cols: usize) -> Matrix<R> {
    assert_eq!(v.len(), rows * cols);
    Matrix::from_fn(ring, rows, cols, |i, j| v[j * rows + i].clone())
}

/// A system of linear conditions on `G: P -> Q`.
pub struct MapEquation<R: Ring> {
    p: PresentedModule<R>,
    q: PresentedModule<R>,
    /// Each block: target module `Z` and the linear operator values `L(E_ij)` (`Z.gens x s`).
    blocks: Vec<(PresentedModule<R>, usize, Vec<Matrix<R>>)>,
}

/// Solution of a [`MapEquation`].
#[derive(Debug, Clone)]
pub struct MapSolution<R: Ring> {
    pub map: Option<ModuleMap<R>>,
    /// No nonzero map satisfies the homogeneous system.
    pub unique: bool,
}

impl<R: Ring> MapEquation<R> {
    pub fn new(p: &PresentedModule<R>, q: &PresentedModule<R>) -> Self {
        Self { p: p.without_ambient(), q: q.without_ambient(), blocks: Vec::new() }
    }

    /// Adds the condition `op(G)` (a `z.gens() x s` matrix) as a block.
    pub fn constrain(mut self, z: &PresentedModule<R>, s: usize, op: impl Fn(&Matrix<R>) -> Matrix<R>) -> Self {
        let r = self.p.ring().clone();
        let (pg, qg) = (self.p.gens(), self.q.gens());
        let mut images = Vec::with_capacity(pg * qg);
        for j in 0..pg {
            for i in 0..qg {
                let v = op(&Matrix::unit(&r, qg, pg, i, j));
                assert_eq!(v.shape(), (z.gens(), s), "constraint operator shape");
                images.push(v);
            }
        }
        self.blocks.push((z.without_ambient(), s, images));
        self
    }

    fn system(&self) -> (ModuleMap<R>, usize) {
        let r = self.p.ring();
        let (pg, qg) = (self.p.gens(), self.q.gens());
        let prel = self.p.relations();
        let nrel = prel.rows();
        let mut codomain = power(&self.q, nrel);
        for (z, s, _) in &self.blocks {
            codomain = codomain.direct_sum(&power(z, *s));
        }
        let mut cols = Vec::with_capacity(pg * qg);
        for j in 0..pg {
            for i in 0..qg {
                let mut col = Vec::with_capacity(codomain.gens());
                for k in 0..nrel {
                    for ii in 0..qg {
                        col.push(if ii == i { prel.get(k, j).clone() } else { r.zero() });
                    }
                }
                for (_, _, images) in &self.blocks {
                    col.extend(matrix_to_vec(&images[j * qg + i]));
                }
                cols.push(col);
            }
        }
        let m = Matrix::from_rows(r, codomain.gens(), cols).transpose();
        let m = if pg * qg == 0 { Matrix::zeros(r, codomain.gens(), 0) } else { m };
        (ModuleMap::new_unchecked(&power(&self.q, pg), &codomain, m), nrel * qg)
    }

    /// Solutions of the homogeneous system, embedded in `Q^p`.
    pub fn kernel(&self) -> PresentedModule<R> {
        self.system().0.kernel()
    }

    /// Solves with right-hand sides `targets[b]` for each block (same order as added).
    pub fn solve(&self, targets: &[Matrix<R>]) -> MapSolution<R> {
        assert_eq!(targets.len(), self.blocks.len(), "one target per constraint block");
        let r = self.p.ring();
        let (sys, offset) = self.system();
        let mut rhs = vec![r.zero(); offset];
        for t in targets {
            rhs.extend(matrix_to_vec(t));
        }
        let unique = sys.is_injective();
        let map = Preimage::new(&sys).solve(&rhs).map(|x| {
            let x = sys.domain().residue(&x);
            ModuleMap::new_unchecked(&self.p, &self.q, vec_to_matrix(r, &x, self.q.gens(), self.p.gens()))
        });
        MapSolution { map, unique }
    }
}

/// Element of `Hom(P, Q)` given by the vector `v` in `Q^p` coordinates.
pub fn map_from_vec<R: Ring>(p: &PresentedModule<R>, q: &PresentedModule<R>, v: &[R::Elem]) -> ModuleMap<R> {
    ModuleMap::new_unchecked(p, q, vec_to_matrix(p.ring(), v, q.gens(), p.gens()))
}

/// Maps `P -> Q` named by the generators of a solution module with ambient `Q^p`.
pub fn generator_maps<R: Ring>(
    sol: &PresentedModule<R>,
    p: &PresentedModule<R>,
    q: &PresentedModule<R>,
) -> Vec<ModuleMap<R>> {
    let emb = &sol.ambient().expect("solution module has an ambient").matrix;
    (0..sol.gens()).map(|k| map_from_vec(p, q, &emb.column(k))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{IntegersMod, Rationals};

    #[test]
    fn hom_between_cyclics() {
        // Hom(Z/2, Z/4) over Z/4 is Z/2, generated by 1 -> 2.
        let r = IntegersMod::new(4).unwrap();
        let p = PresentedModule::cyclic(&r, &2);
        let q = PresentedModule::free(&r, 1);
        let k = MapEquation::new(&p, &q).kernel();
        assert_eq!(k.cardinality(), Some(2));
        let maps = generator_maps(&k, &p, &q);
        assert!(maps.iter().all(|m| m.is_well_defined()));
    }

    #[test]
    fn solves_commuting_condition() {
        // G with G * A = A * G for A = diag(1, 2) is diagonal.
        let q = Rationals;
        let m = PresentedModule::free(&q, 2);
        let a = Matrix::from_i64(&q, 2, 2, &[1, 0, 0, 2]);
        let eq = MapEquation::new(&m, &m).constrain(&m, 2, |g| g.mul(&a).sub(&a.mul(g)));
        assert_eq!(eq.kernel().gens(), 2);
        let sol = eq.solve(&[Matrix::zeros(&q, 2, 2)]);
        assert!(!sol.unique);
        assert!(sol.map.is_some());
    }
}
