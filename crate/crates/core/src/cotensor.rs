//! Cotensor products as explicit kernels.
//!
//! For a right `C`-comodule `M` and a left `C`-comodule `N`, `M □_C N` is the
//! kernel of `α = ρ_M ⊗ id - id ⊗ ρ_N : M ⊗ N -> M ⊗ C ⊗ N`. Everything is
//! computed on bicomodules; a one-sided comodule is a bicomodule over the
//! unit coalgebra on its other side.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use serde::Serialize;

use crate::coalgebra::Coalgebra;
use crate::comodule::{check_comodule, trivial_comodule, Bicomodule, Comodule, Side};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::{ModuleMap, PresentedModule};
use crate::purity::{complete_family_for, image_inclusion, is_sequence_w_pure, is_w_pure};
use crate::ring::Ring;

#[derive(Debug, Clone)]
pub struct CotensorResult<R: Ring> {
    /// The cotensor, with ambient `P ⊗ Q`.
    pub module: PresentedModule<R>,
    pub inclusion: ModuleMap<R>,
    pub alpha: ModuleMap<R>,
    /// Induced left coaction over the left coalgebra of the first factor.
    pub induced_left: Option<(Coalgebra<R>, ModuleMap<R>)>,
    /// Induced right coaction over the right coalgebra of the second factor.
    pub induced_right: Option<(Coalgebra<R>, ModuleMap<R>)>,
}

impl<R: Ring> CotensorResult<R> {
    pub fn carrier(&self) -> PresentedModule<R> {
        self.module.without_ambient()
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }

    pub fn as_right_comodule(&self) -> Option<Comodule<R>> {
        let (d, rho) = self.induced_right.as_ref()?;
        Some(Comodule::from_parts(Side::Right, d, &self.carrier(), rho.clone()))
    }

    pub fn as_left_comodule(&self) -> Option<Comodule<R>> {
        let (c, rho) = self.induced_left.as_ref()?;
        Some(Comodule::from_parts(Side::Left, c, &self.carrier(), rho.clone()))
    }

    pub fn as_bicomodule(&self) -> Option<Bicomodule<R>> {
        let (c, l) = self.induced_left.as_ref()?;
        let (d, r) = self.induced_right.as_ref()?;
        Some(Bicomodule::from_parts(c, d, &self.carrier(), l.clone(), r.clone()))
    }
}

fn kernel_of_alpha<R: Ring>(
    p: &PresentedModule<R>,
    rho_p: &ModuleMap<R>,
    q: &PresentedModule<R>,
    rho_q: &ModuleMap<R>,
) -> (PresentedModule<R>, ModuleMap<R>, ModuleMap<R>) {
    let a = rho_p.tensor(&ModuleMap::identity(q));
    let b = ModuleMap::identity(p).tensor(rho_q);
    let alpha = a.sub(&b);
    let k = alpha.kernel();
    let incl = k.inclusion().expect("kernel has ambient");
    (k, incl, alpha)
}

/// `M □_C N` for a right comodule `M` and a left comodule `N`.
pub fn cotensor<R: Ring>(m: &Comodule<R>, n: &Comodule<R>) -> Result<CotensorResult<R>> {
    if m.side() != Side::Right || n.side() != Side::Left {
        return Err(Error::SideMismatch(format!("cotensor needs right ⊗ left, got {} ⊗ {}", m.side(), n.side())));
    }
    if !m.coalgebra().same_structure(n.coalgebra()) {
        return Err(Error::CoalgebraMismatch(format!("{} vs {}", m.coalgebra().name(), n.coalgebra().name())));
    }
    let (module, inclusion, alpha) = kernel_of_alpha(m.carrier(), m.coaction(), n.carrier(), n.coaction());
    Ok(CotensorResult { module, inclusion, alpha, induced_left: None, induced_right: None })
}

/// `P □_C Q` for bicomodules `P` (A-C) and `Q` (C-B), with both induced coactions.
pub fn cotensor_bicomodules<R: Ring>(p: &Bicomodule<R>, q: &Bicomodule<R>) -> Result<CotensorResult<R>> {
    if !p.right_coalgebra().same_structure(q.left_coalgebra()) {
        return Err(Error::CoalgebraMismatch(format!(
            "{} vs {}",
            p.right_coalgebra().name(),
            q.left_coalgebra().name()
        )));
    }
    let (module, inclusion, alpha) = kernel_of_alpha(p.carrier(), p.right_coaction(), q.carrier(), q.left_coaction());
    let a = p.left_coalgebra();
    let b = q.right_coalgebra();
    let id_a = ModuleMap::identity(&a.module());
    let id_b = ModuleMap::identity(&b.module());
    let left_amb = p.left_coaction().tensor(&ModuleMap::identity(q.carrier())).compose(&inclusion);
    let left = left_amb
        .factor_through(&id_a.tensor(&inclusion))
        .ok_or_else(|| Error::PurityObstruction(format!("left {} coaction on the cotensor", a.name())))?;
    let right_amb = ModuleMap::identity(p.carrier()).tensor(q.right_coaction()).compose(&inclusion);
    let right = right_amb
        .factor_through(&inclusion.tensor(&id_b))
        .ok_or_else(|| Error::PurityObstruction(format!("right {} coaction on the cotensor", b.name())))?;
    Ok(CotensorResult {
        module,
        inclusion,
        alpha,
        induced_left: Some((a.clone(), left)),
        induced_right: Some((b.clone(), right)),
    })
}

/// `M □_C L` as a right `D`-comodule.
pub fn induced_comodule<R: Ring>(m: &Comodule<R>, l: &Bicomodule<R>) -> Result<Comodule<R>> {
    if m.side() != Side::Right {
        return Err(Error::SideMismatch("induced comodule needs a right comodule".into()));
    }
    let res = cotensor_bicomodules(&m.to_bicomodule(), l)?;
    Ok(res.as_right_comodule().expect("right coaction induced"))
}

/// `f □ g`, the map between cotensors induced by `f ⊗ g`.
pub fn cotensor_map<R: Ring>(
    src: &CotensorResult<R>,
    dst: &CotensorResult<R>,
    f: &ModuleMap<R>,
    g: &ModuleMap<R>,
) -> Result<ModuleMap<R>> {
    f.tensor(g)
        .compose(&src.inclusion)
        .factor_through(&dst.inclusion)
        .ok_or_else(|| Error::NotWellDefined("f ⊗ g does not preserve the cotensor".into()))
}

/// Mutually inverse maps `M □_C C ≅ M` (or `C □_C N ≅ N`).
#[derive(Debug, Clone)]
pub struct CounitIso<R: Ring> {
    pub cotensor: CotensorResult<R>,
    pub forward: ModuleMap<R>,
    pub backward: ModuleMap<R>,
    pub verified: bool,
}

pub fn counit_iso<R: Ring>(m: &Comodule<R>) -> Result<CounitIso<R>> {
    let c = m.coalgebra();
    let (res, eps) = match m.side() {
        Side::Right => {
            let res = cotensor(m, &Comodule::regular(Side::Left, c))?;
            let eps = ModuleMap::identity(m.carrier()).tensor(&c.epsilon_map());
            (res, eps)
        }
        Side::Left => {
            let res = cotensor(&Comodule::regular(Side::Right, c), m)?;
            let eps = c.epsilon_map().tensor(&ModuleMap::identity(m.carrier()));
            (res, eps)
        }
    };
    let forward = eps.compose(&res.inclusion).with_codomain(m.carrier());
    let backward = m
        .coaction()
        .factor_through(&res.inclusion)
        .ok_or_else(|| Error::NotWellDefined("coaction does not land in the cotensor".into()))?;
    let verified = forward.compose(&backward).equals(&ModuleMap::identity(m.carrier()))
        && backward.compose(&forward).equals(&ModuleMap::identity(&res.carrier()));
    Ok(CounitIso { cotensor: res, forward, backward, verified })
}

/// Per-module verdicts for one test module `W`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PurityTriple {
    pub module: String,
    /// `W ⊗ (M □ N) -> W ⊗ M ⊗ N` is injective.
    pub kernel_pure: bool,
    /// The kernel sequence stays exact after `W ⊗`.
    pub pure: bool,
    pub gamma_iso: bool,
    pub mu_iso: bool,
}

impl PurityTriple {
    pub fn consistent(&self) -> bool {
        self.pure == self.gamma_iso && self.gamma_iso == self.mu_iso
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PurityCertificateCot {
    pub complete: bool,
    pub results: Vec<PurityTriple>,
    pub note: String,
}

impl PurityCertificateCot {
    pub fn pure(&self) -> bool {
        self.results.iter().all(|t| t.pure)
    }

    /// The three verdicts agree on every tested module.
    pub fn consistent(&self) -> bool {
        self.results.iter().all(|t| t.consistent())
    }
}

/// `γ_W : W ⊗ (M □ N) -> (W ⊗ M) □ N`.
pub fn gamma_map<R: Ring>(m: &Comodule<R>, n: &Comodule<R>, res: &CotensorResult<R>, w: &PresentedModule<R>) -> Result<ModuleMap<R>> {
    let wm = trivial_comodule(w, m)?;
    let res_w = cotensor(&wm, n)?;
    let amb = ModuleMap::identity(w).tensor(&res.inclusion);
    amb.factor_through(&res_w.inclusion)
        .ok_or_else(|| Error::NotWellDefined("γ does not land in the cotensor".into()))
}

/// `μ_W : (M □ N) ⊗ W -> M □ (N ⊗ W)`.
pub fn mu_map<R: Ring>(m: &Comodule<R>, n: &Comodule<R>, res: &CotensorResult<R>, w: &PresentedModule<R>) -> Result<ModuleMap<R>> {
    let nw = right_trivial_left_comodule(n, w);
    let res_w = cotensor(m, &nw)?;
    let amb = res.inclusion.tensor(&ModuleMap::identity(w));
    amb.factor_through(&res_w.inclusion)
        .ok_or_else(|| Error::NotWellDefined("μ does not land in the cotensor".into()))
}

/// `N ⊗ W` as a left comodule through `ρ_N ⊗ id_W`.
pub fn right_trivial_left_comodule<R: Ring>(n: &Comodule<R>, w: &PresentedModule<R>) -> Comodule<R> {
    let carrier = n.carrier().tensor(w);
    let rho = n.coaction().tensor(&ModuleMap::identity(w));
    let target = n.coalgebra().module().tensor(&carrier);
    Comodule::from_parts(Side::Left, n.coalgebra(), &carrier, rho.with_codomain(&target))
}

pub fn purity_certificate<R: Ring>(
    m: &Comodule<R>,
    n: &Comodule<R>,
    family: Option<&[(String, PresentedModule<R>)]>,
) -> Result<PurityCertificateCot> {
    let res = cotensor(m, n)?;
    let (fam, complete, note) = match family {
        Some(f) => (f.to_vec(), false, "caller-supplied family".to_string()),
        None => {
            let image = image_inclusion(&res.inclusion, &res.alpha);
            let (f, note) = complete_family_for(m.ring(), &[&res.inclusion, &image]);
            (f, true, note)
        }
    };
    let mut results = Vec::with_capacity(fam.len());
    for (name, w) in &fam {
        let kernel_pure = is_w_pure(&res.inclusion, w);
        let pure = is_sequence_w_pure(&res.inclusion, &res.alpha, w);
        let gamma_iso = gamma_map(m, n, &res, w)?.is_isomorphism();
        let mu_iso = mu_map(m, n, &res, w)?.is_isomorphism();
        results.push(PurityTriple { module: name.clone(), kernel_pure, pure, gamma_iso, mu_iso });
    }
    Ok(PurityCertificateCot { complete, results, note })
}

/// Cooperative cancellation for long checks.
#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    pub cancel: Option<Arc<AtomicBool>>,
}

impl CheckOptions {
    pub fn check(&self) -> Result<()> {
        match &self.cancel {
            Some(flag) if flag.load(Ordering::Relaxed) => Err(Error::Cancelled),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AssocReport {
    /// The kernel sequence of `M □ L` stays exact after `⊗ N`.
    pub left_pure: bool,
    /// The kernel sequence of `L □ N` stays exact after `M ⊗`.
    pub right_pure: bool,
    pub left_rank: usize,
    pub right_rank: usize,
    pub psi_defined: bool,
    pub psi_iso: bool,
    /// Set when the induced coactions needed for one side could not be formed.
    pub obstruction: Option<String>,
}

impl AssocReport {
    pub fn preconditions(&self) -> bool {
        self.left_pure && self.right_pure
    }

    /// Purity of both sides forces `ψ₁` to be an isomorphism.
    pub fn hard_assertion_holds(&self) -> bool {
        !self.preconditions() || self.psi_iso
    }
}

/// Both bracketings of `M □ L □ N` and the comparison map between them.
#[derive(Debug, Clone)]
pub struct Association<R: Ring> {
    pub report: AssocReport,
    /// `(M □ L) □ N` with inclusion into `(M □ L) ⊗ N`.
    pub left: Option<CotensorResult<R>>,
    pub left_inner: Option<CotensorResult<R>>,
    /// `M □ (L □ N)` with inclusion into `M ⊗ (L □ N)`.
    pub right: Option<CotensorResult<R>>,
    pub right_inner: Option<CotensorResult<R>>,
    /// Embeddings of both sides in `M ⊗ L ⊗ N`.
    pub j_left: Option<ModuleMap<R>>,
    pub j_right: Option<ModuleMap<R>>,
    /// `ψ₁ : (M □ L) □ N -> M □ (L □ N)`.
    pub psi: Option<ModuleMap<R>>,
}

/// Associativity for bicomodules `M` (A-C), `L` (C-D), `N` (D-B).
pub fn associate<R: Ring>(
    m: &Bicomodule<R>,
    l: &Bicomodule<R>,
    n: &Bicomodule<R>,
    opts: &CheckOptions,
) -> Result<Association<R>> {
    opts.check()?;
    let ml_raw = kernel_of_alpha(m.carrier(), m.right_coaction(), l.carrier(), l.left_coaction());
    let ln_raw = kernel_of_alpha(l.carrier(), l.right_coaction(), n.carrier(), n.left_coaction());
    let left_pure = is_sequence_w_pure(&ml_raw.1, &ml_raw.2, n.carrier());
    let right_pure = is_sequence_w_pure(&ln_raw.1, &ln_raw.2, m.carrier());
    opts.check()?;
    let mut report = AssocReport {
        left_pure,
        right_pure,
        left_rank: 0,
        right_rank: 0,
        psi_defined: false,
        psi_iso: false,
        obstruction: None,
    };
    let mut out = Association {
        report: report.clone(),
        left: None,
        left_inner: None,
        right: None,
        right_inner: None,
        j_left: None,
        j_right: None,
        psi: None,
    };
    let ml = match cotensor_bicomodules(m, l) {
        Ok(r) => r,
        Err(e) => {
            report.obstruction = Some(e.to_string());
            out.report = report;
            return Ok(out);
        }
    };
    opts.check()?;
    let ln = match cotensor_bicomodules(l, n) {
        Ok(r) => r,
        Err(e) => {
            report.obstruction = Some(e.to_string());
            out.report = report;
            return Ok(out);
        }
    };
    opts.check()?;
    let a = cotensor_bicomodules(&ml.as_bicomodule().expect("bicomodule"), n);
    opts.check()?;
    let b = cotensor_bicomodules(m, &ln.as_bicomodule().expect("bicomodule"));
    opts.check()?;
    let (a, b) = match (a, b) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            report.obstruction = Some(e.to_string());
            out.report = report;
            return Ok(out);
        }
    };
    let j_a = ml.inclusion.tensor(&ModuleMap::identity(n.carrier())).compose(&a.inclusion);
    let j_b = ModuleMap::identity(m.carrier()).tensor(&ln.inclusion).compose(&b.inclusion);
    let j_b = j_b.with_codomain(j_a.codomain());
    report.left_rank = a.module.gens();
    report.right_rank = b.module.gens();
    let psi = j_a.factor_through(&j_b).filter(|p| p.is_well_defined());
    opts.check()?;
    if let Some(p) = &psi {
        report.psi_defined = true;
        report.psi_iso = p.is_isomorphism();
    }
    Ok(Association {
        report,
        left: Some(a),
        left_inner: Some(ml),
        right: Some(b),
        right_inner: Some(ln),
        j_left: Some(j_a),
        j_right: Some(j_b),
        psi,
    })
}

/// [`associate`] for a right `C`-comodule, a `C`-`D`-bicomodule and a left `D`-comodule.
pub fn associativity_check<R: Ring>(
    m: &Comodule<R>,
    l: &Bicomodule<R>,
    n: &Comodule<R>,
    opts: &CheckOptions,
) -> Result<AssocReport> {
    if m.side() != Side::Right || n.side() != Side::Left {
        return Err(Error::SideMismatch("associativity needs right, bi, left".into()));
    }
    Ok(associate(&m.to_bicomodule(), l, &n.to_bicomodule(), opts)?.report)
}

/// A short exact sequence `0 -> N1 -> N2 -> N3 -> 0` of comodules.
#[derive(Debug, Clone)]
pub struct Probe<R: Ring> {
    pub name: String,
    pub n1: Comodule<R>,
    pub n2: Comodule<R>,
    pub n3: Comodule<R>,
    pub i: ModuleMap<R>,
    pub p: ModuleMap<R>,
}

impl<R: Ring> Probe<R> {
    /// Exactness of the underlying modules, colinearity of both maps, and purity of `N1` in `N2`.
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::NonExactProbe(format!("{}: {what}", self.name)));
        if !crate::comodule::is_colinear(&self.n1, &self.n2, &self.i) || !crate::comodule::is_colinear(&self.n2, &self.n3, &self.p) {
            return bad("maps are not colinear");
        }
        if !self.i.is_injective() {
            return bad("first map is not injective");
        }
        if !self.p.is_surjective() {
            return bad("second map is not surjective");
        }
        if !exact_at_middle(&self.i, &self.p) {
            return bad("not exact in the middle");
        }
        let (fam, _) = complete_family_for(self.i.ring(), &[&self.i]);
        if !fam.iter().all(|(_, w)| is_w_pure(&self.i, w)) {
            return bad("first map is not pure");
        }
        Ok(())
    }
}

/// `im i = ker p`.
pub fn exact_at_middle<R: Ring>(i: &ModuleMap<R>, p: &ModuleMap<R>) -> bool {
    if !p.compose(i).is_zero() {
        return false;
    }
    let k = p.kernel();
    let incl = k.inclusion().expect("ambient");
    incl.factor_through(i).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeResult {
    pub probe: String,
    pub exact: bool,
    pub injective: bool,
    pub surjective: bool,
    pub middle_exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub results: Vec<ProbeResult>,
    /// Nonzero comodules `N` from the family with `M □ N = 0`.
    pub faithfulness_witnesses: Vec<String>,
    pub family_size: usize,
    pub scope: String,
}

impl ProbeReport {
    pub fn coflat(&self) -> bool {
        self.results.iter().all(|r| r.exact)
    }

    pub fn left_exact(&self) -> bool {
        self.results.iter().all(|r| r.injective && r.middle_exact)
    }

    pub fn faithful(&self) -> bool {
        self.faithfulness_witnesses.is_empty()
    }
}

/// Applies `M □ -` to each probe and reports exactness and faithfulness.
pub fn coflatness_probe<R: Ring>(m: &Comodule<R>, probes: &[Probe<R>]) -> Result<ProbeReport> {
    let mut results = Vec::new();
    let mut witnesses = Vec::new();
    let mut seen: Vec<(String, Comodule<R>)> = Vec::new();
    let id_m = ModuleMap::identity(m.carrier());
    for pr in probes {
        pr.validate()?;
        let c1 = cotensor(m, &pr.n1)?;
        let c2 = cotensor(m, &pr.n2)?;
        let c3 = cotensor(m, &pr.n3)?;
        let mi = cotensor_map(&c1, &c2, &id_m, &pr.i)?;
        let mp = cotensor_map(&c2, &c3, &id_m, &pr.p)?;
        let injective = mi.is_injective();
        let surjective = mp.is_surjective();
        let middle_exact = exact_at_middle(&mi, &mp);
        results.push(ProbeResult {
            probe: pr.name.clone(),
            exact: injective && surjective && middle_exact,
            injective,
            surjective,
            middle_exact,
        });
        for (label, n, c) in [("N1", &pr.n1, &c1), ("N2", &pr.n2, &c2), ("N3", &pr.n3, &c3)] {
            let key = format!("{}.{label}", pr.name);
            if n.carrier().is_zero() || seen.iter().any(|(_, s)| same_comodule(s, n)) {
                continue;
            }
            seen.push((key.clone(), n.clone()));
            if c.is_zero() {
                witnesses.push(key);
            }
        }
    }
    Ok(ProbeReport {
        results,
        faithfulness_witnesses: witnesses,
        family_size: probes.len(),
        scope: "certified against family".into(),
    })
}

fn same_comodule<R: Ring>(a: &Comodule<R>, b: &Comodule<R>) -> bool {
    a.side() == b.side() && a.carrier() == b.carrier() && a.coaction().matrix() == b.coaction().matrix()
}

/// Basis subsets of `C` closed under the coaction of the given side.
pub fn closed_basis_subsets<R: Ring>(c: &Coalgebra<R>, side: Side) -> Vec<Vec<usize>> {
    let d = c.rank();
    assert!(d <= 16, "basis subset enumeration is capped at rank 16");
    let ring = c.ring();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << d) - 1 {
        let inside = |k: usize| mask & (1 << k) != 0;
        let closed = (0..d).filter(|&t| inside(t)).all(|t| {
            (0..d * d).all(|row| {
                let (a, b) = (row / d, row % d);
                let keep = match side {
                    Side::Left => b,
                    Side::Right => a,
                };
                ring.is_zero(c.delta().get(row, t)) || inside(keep)
            })
        });
        if closed {
            out.push((0..d).filter(|&k| inside(k)).collect());
        }
    }
    out
}

/// The sub- and quotient comodules of `C` on a closed basis subset.
pub fn basis_subcomodule<R: Ring>(c: &Coalgebra<R>, side: Side, subset: &[usize]) -> (Comodule<R>, Comodule<R>, ModuleMap<R>, ModuleMap<R>) {
    let ring = c.ring();
    let d = c.rank();
    let rest: Vec<usize> = (0..d).filter(|k| !subset.contains(k)).collect();
    let restrict = |idx: &[usize]| {
        let k = idx.len();
        let mut rho = Matrix::zeros(ring, k * d, k);
        for (col, &t) in idx.iter().enumerate() {
            for row in 0..d * d {
                let e = c.delta().get(row, t);
                if ring.is_zero(e) {
                    continue;
                }
                let (a, b) = (row / d, row % d);
                let (coal, inner) = match side {
                    Side::Left => (a, b),
                    Side::Right => (b, a),
                };
                let Some(pos) = idx.iter().position(|&x| x == inner) else { continue };
                let r = match side {
                    Side::Left => coal * k + pos,
                    Side::Right => pos * d + coal,
                };
                rho.set(r, col, e.clone());
            }
        }
        Comodule::new(side, c, &PresentedModule::free(ring, k), rho).expect("restricted coaction shapes")
    };
    let sub = restrict(subset);
    let quo = restrict(&rest);
    let full = c.module();
    let i = ModuleMap::new_unchecked(
        sub.carrier(),
        &full,
        Matrix::from_fn(ring, d, subset.len(), |r, col| if subset[col] == r { ring.one() } else { ring.zero() }),
    );
    let p = ModuleMap::new_unchecked(
        &full,
        quo.carrier(),
        Matrix::from_fn(ring, rest.len(), d, |row, col| if rest[row] == col { ring.one() } else { ring.zero() }),
    );
    (sub, quo, i, p)
}

/// Short exact sequences `0 -> S -> C -> C/S -> 0` from closed basis subsets
/// of `C`, their sums with `0 -> C -> C -> 0`, and the split sequence
/// `0 -> C -> C ⊕ C -> C -> 0`.
pub fn standard_probes<R: Ring>(c: &Coalgebra<R>, side: Side) -> Vec<Probe<R>> {
    let ring = c.ring();
    let reg = Comodule::regular(side, c);
    let d = c.rank();
    let mut out = Vec::new();
    for subset in closed_basis_subsets(c, side) {
        let (sub, quo, i, p) = basis_subcomodule(c, side, &subset);
        let name = format!("basis{subset:?}");
        out.push(Probe { name: name.clone(), n1: sub.clone(), n2: reg.clone(), n3: quo.clone(), i: i.clone(), p: p.clone() });
        let n1 = sub.direct_sum(&reg).expect("same setup");
        let n2 = reg.direct_sum(&reg).expect("same setup");
        let n3 = quo.clone();
        let i2 = i.matrix().block_diag(&Matrix::identity(ring, d));
        let p2 = p.matrix().hstack(&Matrix::zeros(ring, quo.rank(), d));
        out.push(Probe {
            name: format!("{name}+C"),
            i: ModuleMap::new_unchecked(n1.carrier(), n2.carrier(), i2),
            p: ModuleMap::new_unchecked(n2.carrier(), n3.carrier(), p2),
            n1,
            n2,
            n3,
        });
    }
    let n2 = reg.direct_sum(&reg).expect("same setup");
    let i = Matrix::identity(ring, d).vstack(&Matrix::zeros(ring, d, d));
    let p = Matrix::zeros(ring, d, d).hstack(&Matrix::identity(ring, d));
    out.push(Probe {
        name: "split C+C".into(),
        i: ModuleMap::new_unchecked(reg.carrier(), n2.carrier(), i),
        p: ModuleMap::new_unchecked(n2.carrier(), reg.carrier(), p),
        n1: reg.clone(),
        n2,
        n3: reg,
    });
    debug_assert!(out.iter().all(|p| check_comodule(&p.n1).passed() && check_comodule(&p.n3).passed()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{grouplike, matrix_coalgebra};
    use crate::ring::{Integers, Rationals};

    fn point<R: Ring>(ring: &R, c: &Coalgebra<R>, at: usize, side: Side) -> Comodule<R> {
        let mut rho = Matrix::zeros(ring, c.rank(), 1);
        rho.set(at, 0, ring.one());
        Comodule::new(side, c, &PresentedModule::free(ring, 1), rho).unwrap()
    }

    #[test]
    fn pure_kernel_with_impure_image() {
        // M = Z^2 with t(e_2) = 2 e_1 over divided(2), N = Z with t = 0.
        let z = Integers;
        let c = crate::coalgebra::divided_power(&z, 2);
        let m = Comodule::new(Side::Right, &c, &PresentedModule::free(&z, 2), Matrix::from_i64(&z, 4, 2, &[1, 0, 0, 2, 0, 1, 0, 0])).unwrap();
        let n = Comodule::new(Side::Left, &c, &PresentedModule::free(&z, 1), Matrix::from_i64(&z, 2, 1, &[1, 0])).unwrap();
        let cert = purity_certificate(&m, &n, None).unwrap();
        let t = cert.results.iter().find(|t| t.module == "Z/2").unwrap();
        assert!(t.kernel_pure);
        assert!(!t.pure && !t.gamma_iso && !t.mu_iso);
        assert!(cert.consistent());
    }

    #[test]
    fn grouplike_components() {
        let q = Rationals;
        let c = grouplike(&q, 2);
        let m = point(&q, &c, 0, Side::Right);
        assert!(cotensor(&m, &point(&q, &c, 1, Side::Left)).unwrap().is_zero());
        assert_eq!(cotensor(&m, &point(&q, &c, 0, Side::Left)).unwrap().module.gens(), 1);
    }

    #[test]
    fn counit_iso_on_regular_and_torsion() {
        let q = Rationals;
        let c = matrix_coalgebra(&q, 2);
        assert!(counit_iso(&Comodule::regular(Side::Right, &c)).unwrap().verified);
        assert!(counit_iso(&Comodule::regular(Side::Left, &c)).unwrap().verified);
        let z = Integers;
        let g = grouplike(&z, 1);
        let w = PresentedModule::cyclic(&z, &2.into());
        let t = trivial_comodule(&w, &Comodule::regular(Side::Right, &g)).unwrap();
        let iso = counit_iso(&t).unwrap();
        assert!(iso.verified);
        assert_eq!(iso.cotensor.carrier().cardinality(), None);
        assert_eq!(iso.cotensor.carrier().structure().torsion.len(), 1);
    }

    #[test]
    fn probes_are_exact() {
        let q = Rationals;
        let c = matrix_coalgebra(&q, 2);
        let probes = standard_probes(&c, Side::Left);
        assert_eq!(closed_basis_subsets(&c, Side::Left), vec![vec![0, 2], vec![1, 3]]);
        for p in &probes {
            p.validate().unwrap();
        }
        let rep = coflatness_probe(&Comodule::regular(Side::Right, &c), &probes).unwrap();
        assert!(rep.coflat() && rep.faithful());
    }

    #[test]
    fn point_comodule_is_not_faithful() {
        let q = Rationals;
        let c = grouplike(&q, 2);
        let rep = coflatness_probe(&point(&q, &c, 0, Side::Right), &standard_probes(&c, Side::Left)).unwrap();
        assert!(rep.coflat());
        assert!(!rep.faithful());
    }

    #[test]
    fn cancellation_is_honoured() {
        let q = Rationals;
        let c = grouplike(&q, 1);
        let flag = Arc::new(AtomicBool::new(true));
        let opts = CheckOptions { cancel: Some(flag) };
        let m = Comodule::regular(Side::Right, &c);
        let l = Bicomodule::regular(&c);
        let n = Comodule::regular(Side::Left, &c);
        assert_eq!(associativity_check(&m, &l, &n, &opts).unwrap_err(), Error::Cancelled);
    }
}
