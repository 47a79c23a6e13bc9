//! Comodules and bicomodules.
//!
//! A right `C`-comodule has coaction `M -> M ⊗ C`, a left one `M -> C ⊗ M`,
//! always with left-major tensor indexing. Bicomodules carry a left
//! coaction over one coalgebra and a right coaction over another.

use serde::Serialize;

use crate::coalgebra::{unit_coalgebra, AxiomCheck, AxiomReport, Coalgebra};
use crate::error::{dim_err, Error, Result};
use crate::hom::{generator_maps, power, MapEquation};
use crate::matrix::Matrix;
use crate::module::{ModuleMap, PresentedModule};
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Comodule<R: Ring> {
    side: Side,
    coalgebra: Coalgebra<R>,
    carrier: PresentedModule<R>,
    coaction: ModuleMap<R>,
}

impl<R: Ring> Comodule<R> {
    /// Checks shapes and well-definedness; the comodule axioms are checked by [`check_comodule`].
    pub fn new(side: Side, coalgebra: &Coalgebra<R>, carrier: &PresentedModule<R>, coaction: Matrix<R>) -> Result<Self> {
        let c = coalgebra.module();
        let target = match side {
            Side::Right => carrier.tensor(&c),
            Side::Left => c.tensor(carrier),
        };
        if coaction.shape() != (target.gens(), carrier.gens()) {
            return Err(dim_err(
                format!("{side} comodule over {}", coalgebra.name()),
                format!(
                    "coaction must be {}x{}, got {}x{}",
                    target.gens(),
                    carrier.gens(),
                    coaction.rows(),
                    coaction.cols()
                ),
            ));
        }
        let coaction = ModuleMap::new(carrier, &target, coaction)?;
        Ok(Self { side, coalgebra: coalgebra.clone(), carrier: carrier.clone(), coaction })
    }

    pub(crate) fn from_parts(side: Side, coalgebra: &Coalgebra<R>, carrier: &PresentedModule<R>, coaction: ModuleMap<R>) -> Self {
        Self { side, coalgebra: coalgebra.clone(), carrier: carrier.clone(), coaction }
    }

    /// `C` over itself through `Δ`.
    pub fn regular(side: Side, c: &Coalgebra<R>) -> Self {
        Self::from_parts(side, c, &c.module(), c.delta_map())
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coalgebra(&self) -> &Coalgebra<R> {
        &self.coalgebra
    }

    pub fn carrier(&self) -> &PresentedModule<R> {
        &self.carrier
    }

    pub fn coaction(&self) -> &ModuleMap<R> {
        &self.coaction
    }

    pub fn ring(&self) -> &R {
        self.carrier.ring()
    }

    pub fn rank(&self) -> usize {
        self.carrier.gens()
    }

    /// View as a bicomodule over the unit coalgebra on the other side.
    pub fn to_bicomodule(&self) -> Bicomodule<R> {
        let r = self.ring();
        let unit = unit_coalgebra(r);
        let id = ModuleMap::identity(&self.carrier);
        match self.side {
            Side::Right => Bicomodule::from_parts(&unit, &self.coalgebra, &self.carrier, id, self.coaction.clone()),
            Side::Left => Bicomodule::from_parts(&self.coalgebra, &unit, &self.carrier, self.coaction.clone(), id),
        }
    }

    /// Direct sum `M ⊕ N` of comodules on the same side over the same coalgebra.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        same_setup(self, other)?;
        let r = self.ring().clone();
        let d = self.coalgebra.rank();
        let (m, n) = (self.rank(), other.rank());
        let carrier = self.carrier.direct_sum(&other.carrier);
        let mut rho = Matrix::zeros(&r, (m + n) * d, m + n);
        let (a, b) = (self.coaction.matrix(), other.coaction.matrix());
        for g in 0..m {
            for k in 0..m * d {
                let (x, c) = match self.side {
                    Side::Right => (k / d, k % d),
                    Side::Left => (k % m, k / m),
                };
                let row = match self.side {
                    Side::Right => x * d + c,
                    Side::Left => c * (m + n) + x,
                };
                rho.set(row, g, a.get(k, g).clone());
            }
        }
        for g in 0..n {
            for k in 0..n * d {
                let (x, c) = match self.side {
                    Side::Right => (k / d, k % d),
                    Side::Left => (k % n, k / n),
                };
                let row = match self.side {
                    Side::Right => (m + x) * d + c,
                    Side::Left => c * (m + n) + m + x,
                };
                rho.set(row, m + g, b.get(k, g).clone());
            }
        }
        Comodule::new(self.side, &self.coalgebra, &carrier, rho)
    }
}

fn same_setup<R: Ring>(a: &Comodule<R>, b: &Comodule<R>) -> Result<()> {
    if a.side != b.side {
        return Err(Error::SideMismatch(format!("{} vs {}", a.side, b.side)));
    }
    if !a.coalgebra.same_structure(&b.coalgebra) {
        return Err(Error::CoalgebraMismatch(format!("{} vs {}", a.coalgebra.name(), b.coalgebra.name())));
    }
    Ok(())
}

pub fn check_comodule<R: Ring>(m: &Comodule<R>) -> AxiomReport {
    let c = &m.coalgebra;
    let id_m = ModuleMap::identity(&m.carrier);
    let id_c = ModuleMap::identity(&c.module());
    let rho = &m.coaction;
    let (lhs, rhs, counit) = match m.side {
        Side::Right => (
            id_m.tensor(&c.delta_map()).compose(rho),
            rho.tensor(&id_c).compose(rho),
            id_m.tensor(&c.epsilon_map()).compose(rho),
        ),
        Side::Left => (
            c.delta_map().tensor(&id_m).compose(rho),
            id_c.tensor(rho).compose(rho),
            c.epsilon_map().tensor(&id_m).compose(rho),
        ),
    };
    let counit = counit.with_codomain(&m.carrier);
    AxiomReport {
        checks: vec![
            AxiomCheck::new("well-defined", (!rho.is_well_defined()).then_some(0)),
            AxiomCheck::new("coassociativity", lhs.first_difference(&rhs)),
            AxiomCheck::new("counit", counit.first_difference(&id_m)),
        ],
    }
}

/// Bicomodule with left coaction over `left` and right coaction over `right`.
#[derive(Debug, Clone)]
pub struct Bicomodule<R: Ring> {
    left: Coalgebra<R>,
    right: Coalgebra<R>,
    carrier: PresentedModule<R>,
    left_coaction: ModuleMap<R>,
    right_coaction: ModuleMap<R>,
}

impl<R: Ring> Bicomodule<R> {
    pub fn new(
        left: &Coalgebra<R>,
        right: &Coalgebra<R>,
        carrier: &PresentedModule<R>,
        left_coaction: Matrix<R>,
        right_coaction: Matrix<R>,
    ) -> Result<Self> {
        let l = Comodule::new(Side::Left, left, carrier, left_coaction)?;
        let r = Comodule::new(Side::Right, right, carrier, right_coaction)?;
        Ok(Self::from_parts(left, right, carrier, l.coaction, r.coaction))
    }

    pub(crate) fn from_parts(
        left: &Coalgebra<R>,
        right: &Coalgebra<R>,
        carrier: &PresentedModule<R>,
        left_coaction: ModuleMap<R>,
        right_coaction: ModuleMap<R>,
    ) -> Self {
        Self { left: left.clone(), right: right.clone(), carrier: carrier.clone(), left_coaction, right_coaction }
    }

    /// `C` as a `C`-`C`-bicomodule.
    pub fn regular(c: &Coalgebra<R>) -> Self {
        Self::from_parts(c, c, &c.module(), c.delta_map(), c.delta_map())
    }

    pub fn left_coalgebra(&self) -> &Coalgebra<R> {
        &self.left
    }

    pub fn right_coalgebra(&self) -> &Coalgebra<R> {
        &self.right
    }

    pub fn carrier(&self) -> &PresentedModule<R> {
        &self.carrier
    }

    pub fn left_coaction(&self) -> &ModuleMap<R> {
        &self.left_coaction
    }

    pub fn right_coaction(&self) -> &ModuleMap<R> {
        &self.right_coaction
    }

    pub fn ring(&self) -> &R {
        self.carrier.ring()
    }

    pub fn rank(&self) -> usize {
        self.carrier.gens()
    }

    pub fn as_left(&self) -> Comodule<R> {
        Comodule::from_parts(Side::Left, &self.left, &self.carrier, self.left_coaction.clone())
    }

    pub fn as_right(&self) -> Comodule<R> {
        Comodule::from_parts(Side::Right, &self.right, &self.carrier, self.right_coaction.clone())
    }
}

pub fn check_bicomodule<R: Ring>(b: &Bicomodule<R>) -> AxiomReport {
    let mut checks = Vec::new();
    for (prefix, rep) in [("left ", check_comodule(&b.as_left())), ("right ", check_comodule(&b.as_right()))] {
        for c in rep.checks {
            checks.push(AxiomCheck { axiom: format!("{prefix}{}", c.axiom), ..c });
        }
    }
    let id_c = ModuleMap::identity(&b.left.module());
    let id_d = ModuleMap::identity(&b.right.module());
    let lhs = id_c.tensor(&b.right_coaction).compose(&b.left_coaction);
    let rhs = b.left_coaction.tensor(&id_d).compose(&b.right_coaction);
    checks.push(AxiomCheck::new("compatibility", lhs.first_difference(&rhs)));
    AxiomReport { checks }
}

/// The colinearity defect `ρ_N G - (G ⊗ id) ρ_M` (mirrored for left comodules).
pub(crate) fn colinearity_defect<R: Ring>(m: &Comodule<R>, n: &Comodule<R>, g: &Matrix<R>) -> Matrix<R> {
    let id_c = Matrix::identity(m.ring(), m.coalgebra.rank());
    let pushed = match m.side {
        Side::Right => g.kron(&id_c),
        Side::Left => id_c.kron(g),
    };
    n.coaction.matrix().mul(g).sub(&pushed.mul(m.coaction.matrix()))
}

pub fn is_colinear<R: Ring>(m: &Comodule<R>, n: &Comodule<R>, f: &ModuleMap<R>) -> bool {
    let defect = colinearity_defect(m, n, f.matrix());
    ModuleMap::new_unchecked(&m.carrier, n.coaction.codomain(), defect).is_zero()
}

/// `Com_C(M, N)` as a submodule of `Hom_R(M, N) ⊆ N^m`.
pub fn com_hom<R: Ring>(m: &Comodule<R>, n: &Comodule<R>) -> Result<PresentedModule<R>> {
    same_setup(m, n)?;
    let z = n.coaction.codomain().clone();
    Ok(MapEquation::new(&m.carrier, &n.carrier)
        .constrain(&z, m.rank(), |g| colinearity_defect(m, n, g))
        .kernel())
}

/// The colinear maps named by the generators of [`com_hom`].
pub fn com_hom_maps<R: Ring>(m: &Comodule<R>, n: &Comodule<R>, com: &PresentedModule<R>) -> Vec<ModuleMap<R>> {
    generator_maps(com, &m.carrier, &n.carrier)
}

/// Whether `f` lies in the presented module `com` (ambient `N^m`).
pub fn hom_contains<R: Ring>(com: &PresentedModule<R>, f: &ModuleMap<R>) -> bool {
    let incl = com.inclusion().expect("hom module has an ambient");
    let v = crate::hom::matrix_to_vec(f.matrix());
    let single = ModuleMap::new_unchecked(
        &PresentedModule::free(f.ring(), 1),
        incl.codomain(),
        Matrix::column_vector(f.ring(), v),
    );
    single.factor_through(&incl).is_some()
}

/// `W ⊗ M` with coaction `id_W ⊗ ρ_M`.
pub fn trivial_comodule<R: Ring>(w: &PresentedModule<R>, m: &Comodule<R>) -> Result<Comodule<R>> {
    if w.ring() != m.ring() {
        return Err(Error::RingMismatch(w.ring().descriptor(), m.ring().descriptor()));
    }
    let r = m.ring();
    let carrier = w.tensor(&m.carrier);
    let base = Matrix::identity(r, w.gens()).kron(m.coaction.matrix());
    let rho = match m.side {
        Side::Right => base,
        Side::Left => {
            let d = m.coalgebra.rank();
            Matrix::swap_tensor(r, w.gens(), d).kron(&Matrix::identity(r, m.rank())).mul(&base)
        }
    };
    let target = match m.side {
        Side::Right => carrier.tensor(&m.coalgebra.module()),
        Side::Left => m.coalgebra.module().tensor(&carrier),
    };
    Ok(Comodule::from_parts(m.side, &m.coalgebra, &carrier, ModuleMap::new_unchecked(&carrier, &target, rho)))
}

/// `f ⊗ id_M : W ⊗ M -> V ⊗ M`.
pub fn trivial_map<R: Ring>(f: &ModuleMap<R>, m: &Comodule<R>) -> ModuleMap<R> {
    f.tensor(&ModuleMap::identity(&m.carrier))
}

/// Outcome of the cofree adjunction check `Com_C(M, X ⊗ C) ≅ Hom_R(M, X)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjunctionReport {
    pub com_generators: usize,
    pub hom_generators: usize,
    pub forward_iso: bool,
    pub round_trips: bool,
}

impl AdjunctionReport {
    pub fn passed(&self) -> bool {
        self.forward_iso && self.round_trips
    }
}

/// Checks `f -> (id ⊗ ε) f` against its inverse `g -> (g ⊗ id) ρ_M` for right comodules.
pub fn cofree_adjunction_check<R: Ring>(m: &Comodule<R>, x: &PresentedModule<R>) -> Result<AdjunctionReport> {
    if m.side != Side::Right {
        return Err(Error::SideMismatch("cofree adjunction is stated for right comodules".into()));
    }
    if !m.carrier.has_free_presentation() || !x.has_free_presentation() {
        return Err(Error::NonFreeCarrier("cofree adjunction input".into()));
    }
    let r = m.ring();
    let c = &m.coalgebra;
    let cofree = trivial_comodule(x, &Comodule::regular(Side::Right, c))?;
    let com = com_hom(m, &cofree)?;
    let hom = power(x, m.rank());
    let incl = com.inclusion().expect("ambient");
    let eps = Matrix::identity(r, x.gens()).kron(c.epsilon());
    // Forward: (id ⊗ ε) on each column block.
    let fwd_mat = Matrix::identity(r, m.rank()).kron(&eps).mul(incl.matrix());
    let fwd = ModuleMap::new_unchecked(&com, &hom, fwd_mat);
    // Backward: g -> (g ⊗ id_C) ρ_M, evaluated on elementary g.
    let mut cols = Vec::new();
    for j in 0..m.rank() {
        for i in 0..x.gens() {
            let g = Matrix::unit(r, x.gens(), m.rank(), i, j);
            let f = g.kron(&Matrix::identity(r, c.rank())).mul(m.coaction.matrix());
            cols.push(crate::hom::matrix_to_vec(&f));
        }
    }
    let back_amb = ModuleMap::new_unchecked(&hom, incl.codomain(), Matrix::from_rows(r, incl.codomain().gens(), cols).transpose());
    let back = back_amb.factor_through(&incl);
    let forward_iso = fwd.is_isomorphism();
    let round_trips = match back {
        Some(b) => fwd.compose(&b).equals(&ModuleMap::identity(&hom)) && b.compose(&fwd).equals(&ModuleMap::identity(&com)),
        None => false,
    };
    Ok(AdjunctionReport { com_generators: com.gens(), hom_generators: hom.gens(), forward_iso, round_trips })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{grouplike, matrix_coalgebra};
    use crate::ring::{PrimeField, Rationals};

    fn point<R: Ring>(ring: &R, c: &Coalgebra<R>, at: usize, side: Side) -> Comodule<R> {
        let mut rho = Matrix::zeros(ring, c.rank(), 1);
        rho.set(at, 0, ring.one());
        Comodule::new(side, c, &PresentedModule::free(ring, 1), rho).unwrap()
    }

    #[test]
    fn regular_and_point_comodules_pass() {
        let q = Rationals;
        let c = grouplike(&q, 2);
        assert!(check_comodule(&Comodule::regular(Side::Right, &c)).passed());
        assert!(check_comodule(&point(&q, &c, 0, Side::Right)).passed());
    }

    #[test]
    fn doubled_counit_fails() {
        let q = Rationals;
        let c = grouplike(&q, 2);
        let m = Comodule::new(Side::Right, &c, &PresentedModule::free(&q, 1), Matrix::from_i64(&q, 2, 1, &[1, 1])).unwrap();
        let rep = check_comodule(&m);
        assert!(!rep.get("counit").unwrap().passed);
        assert_eq!(rep.get("counit").unwrap().witness, Some(0));
    }

    #[test]
    fn com_hom_examples() {
        let q = Rationals;
        let c = grouplike(&q, 2);
        let reg = Comodule::regular(Side::Right, &c);
        assert_eq!(com_hom(&reg, &reg).unwrap().gens(), 2);
        let p = point(&q, &c, 0, Side::Right);
        let k = com_hom(&p, &p).unwrap();
        assert_eq!(k.gens(), 1);
        assert!(hom_contains(&k, &ModuleMap::identity(p.carrier())));
    }

    #[test]
    fn cofree_adjunction_small() {
        let f2 = PrimeField::new(2).unwrap();
        let c = grouplike(&f2, 1);
        let rep = cofree_adjunction_check(&Comodule::regular(Side::Right, &c), &PresentedModule::free(&f2, 1)).unwrap();
        assert!(rep.passed());
        let q = Rationals;
        let d = matrix_coalgebra(&q, 2);
        let rep = cofree_adjunction_check(&Comodule::regular(Side::Right, &d), &PresentedModule::free(&q, 2)).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.hom_generators, 8);
    }

    #[test]
    fn direct_sum_of_points() {
        let q = Rationals;
        let c = grouplike(&q, 2);
        for side in [Side::Left, Side::Right] {
            let s = point(&q, &c, 0, side).direct_sum(&point(&q, &c, 1, side)).unwrap();
            assert!(check_comodule(&s).passed());
            assert_eq!(com_hom(&s, &s).unwrap().gens(), 2);
        }
    }

    #[test]
    fn trivial_comodule_left_side() {
        let q = Rationals;
        let c = matrix_coalgebra(&q, 2);
        let l = Comodule::regular(Side::Left, &c);
        let t = trivial_comodule(&PresentedModule::free(&q, 2), &l).unwrap();
        assert!(check_comodule(&t).passed());
    }
}
