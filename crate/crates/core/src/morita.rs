//! Morita-Takeuchi contexts and the equivalences they induce.
//!
//! A context is `(D, C, M, N, f, g)` with `M` a `D`-`C`-bicomodule, `N` a
//! `C`-`D`-bicomodule, and bicolinear maps `f : D -> M □_C N`,
//! `g : C -> N □_D M`. Every rebracketing of a triple cotensor goes through
//! [`associate`], after both purity certificates have passed.

use std::sync::OnceLock;

use serde::Serialize;

use crate::cohom::{coend, cohom, compare_coend, delta_map, injector_and_exactness_probe, require_qf, InjectorReport};
use crate::coalgebra::Coalgebra;
use crate::comodule::{is_colinear, Bicomodule, Comodule, Side};
use crate::cotensor::{
    associate, cotensor, cotensor_bicomodules, cotensor_map, counit_iso, purity_certificate, CheckOptions,
    CotensorResult, Probe, PurityCertificateCot,
};
use crate::error::{dim_err, Error, Result};
use crate::matrix::Matrix;
use crate::module::{is_flat, ModuleMap};
use crate::ring::Ring;

#[derive(Debug, Clone)]
pub struct MoritaContext<R: Ring> {
    d: Coalgebra<R>,
    c: Coalgebra<R>,
    m: Bicomodule<R>,
    n: Bicomodule<R>,
    /// `f : D -> M □_C N`.
    f: ModuleMap<R>,
    /// `g : C -> N □_D M`.
    g: ModuleMap<R>,
    mn: CotensorResult<R>,
    nm: CotensorResult<R>,
    report: OnceLock<ContextReport>,
}

/// One triangle identity and the first generator where it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleCheck {
    pub name: String,
    pub psi_iso: bool,
    pub commutes: bool,
    pub defect_witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContextReport {
    pub m_flat: bool,
    pub n_flat: bool,
    pub purity_mn: PurityCertificateCot,
    pub purity_nm: PurityCertificateCot,
    pub f_bicolinear: bool,
    pub g_bicolinear: bool,
    pub triangles: Vec<TriangleCheck>,
}

impl ContextReport {
    pub fn passed(&self) -> bool {
        self.m_flat
            && self.n_flat
            && self.purity_mn.pure()
            && self.purity_nm.pure()
            && self.f_bicolinear
            && self.g_bicolinear
            && self.triangles.iter().all(|t| t.commutes)
    }
}

impl<R: Ring> MoritaContext<R> {
    /// `f_amb` and `g_amb` are given into `M ⊗ N` and `N ⊗ M`; they must land in the cotensors.
    pub fn new(
        d: &Coalgebra<R>,
        c: &Coalgebra<R>,
        m: &Bicomodule<R>,
        n: &Bicomodule<R>,
        f_amb: &Matrix<R>,
        g_amb: &Matrix<R>,
    ) -> Result<Self> {
        let checks = [
            (m.left_coalgebra(), d, "left coalgebra of M"),
            (m.right_coalgebra(), c, "right coalgebra of M"),
            (n.left_coalgebra(), c, "left coalgebra of N"),
            (n.right_coalgebra(), d, "right coalgebra of N"),
        ];
        for (have, want, what) in checks {
            if !have.same_structure(want) {
                return Err(Error::CoalgebraMismatch(format!("{what}: {} vs {}", have.name(), want.name())));
            }
        }
        let mn = cotensor(&m.as_right(), &n.as_left())?;
        let nm = cotensor(&n.as_right(), &m.as_left())?;
        let f = Self::land(d, f_amb, &mn, "f")?;
        let g = Self::land(c, g_amb, &nm, "g")?;
        Ok(Self { d: d.clone(), c: c.clone(), m: m.clone(), n: n.clone(), f, g, mn, nm, report: OnceLock::new() })
    }

    fn land(src: &Coalgebra<R>, amb: &Matrix<R>, res: &CotensorResult<R>, what: &str) -> Result<ModuleMap<R>> {
        let target = res.inclusion.codomain();
        if amb.shape() != (target.gens(), src.rank()) {
            return Err(dim_err(
                format!("context map {what}"),
                format!("expected {}x{}, got {}x{}", target.gens(), src.rank(), amb.rows(), amb.cols()),
            ));
        }
        ModuleMap::new_unchecked(&src.module(), target, amb.clone())
            .factor_through(&res.inclusion)
            .ok_or_else(|| Error::NotWellDefined(format!("{what} does not land in the cotensor")))
    }

    pub fn d_coalgebra(&self) -> &Coalgebra<R> {
        &self.d
    }

    pub fn c_coalgebra(&self) -> &Coalgebra<R> {
        &self.c
    }

    pub fn m(&self) -> &Bicomodule<R> {
        &self.m
    }

    pub fn n(&self) -> &Bicomodule<R> {
        &self.n
    }

    pub fn f(&self) -> &ModuleMap<R> {
        &self.f
    }

    pub fn g(&self) -> &ModuleMap<R> {
        &self.g
    }

    pub fn mn(&self) -> &CotensorResult<R> {
        &self.mn
    }

    pub fn nm(&self) -> &CotensorResult<R> {
        &self.nm
    }

    /// Cached verification report, if [`verify_context`] has run.
    pub fn report(&self) -> Option<&ContextReport> {
        self.report.get()
    }

    /// The same context with `g` multiplied by `s`.
    pub fn with_scaled_g(&self, s: &R::Elem) -> Self {
        let mut out = self.clone();
        out.g = self.g.scale(s);
        out.report = OnceLock::new();
        out
    }

    /// The same context with `f` multiplied by `s`.
    pub fn with_scaled_f(&self, s: &R::Elem) -> Self {
        let mut out = self.clone();
        out.f = self.f.scale(s);
        out.report = OnceLock::new();
        out
    }
}

fn bicolinear<R: Ring>(src: &Coalgebra<R>, res: &CotensorResult<R>, h: &ModuleMap<R>) -> bool {
    let (Some(l), Some(r)) = (res.as_left_comodule(), res.as_right_comodule()) else {
        return false;
    };
    let h = h.with_codomain(&res.carrier());
    is_colinear(&Comodule::regular(Side::Left, src), &l, &h) && is_colinear(&Comodule::regular(Side::Right, src), &r, &h)
}

/// `A ≅ A □ E →(id □ k) A □ (P □ Q)` against `A ≅ E' □ A →(k' □ id) (A □ P) □ Q →ψ₁ A □ (P □ Q)`.
fn triangle<R: Ring>(
    name: &str,
    a: &Bicomodule<R>,
    p: &Bicomodule<R>,
    k_right: &ModuleMap<R>,
    k_left: &ModuleMap<R>,
    opts: &CheckOptions,
) -> Result<TriangleCheck> {
    let assoc = associate(a, p, a, opts)?;
    if !assoc.report.preconditions() {
        return Err(Error::AssociativityUnavailable(format!("{name}: purity preconditions failed")));
    }
    let (Some(left), Some(right), Some(psi)) = (&assoc.left, &assoc.right, &assoc.psi) else {
        let why = assoc.report.obstruction.clone().unwrap_or_else(|| "ψ₁ not defined".into());
        return Err(Error::AssociativityUnavailable(format!("{name}: {why}")));
    };
    let id_a = ModuleMap::identity(a.carrier());
    let via_right = counit_iso(&a.as_right())?;
    let path1 = cotensor_map(&via_right.cotensor, right, &id_a, k_right)?.compose(&via_right.backward);
    let via_left = counit_iso(&a.as_left())?;
    let path2 = cotensor_map(&via_left.cotensor, left, k_left, &id_a)?.compose(&via_left.backward);
    let defect = psi.compose(&path2).sub(&path1.with_codomain(psi.codomain()));
    let witness = defect.nonzero_witness();
    Ok(TriangleCheck { name: name.into(), psi_iso: assoc.report.psi_iso, commutes: witness.is_none(), defect_witness: witness })
}

/// Checks flatness, purity of both cotensors, bicolinearity of `f` and `g` and both triangles.
pub fn verify_context<R: Ring>(ctx: &MoritaContext<R>, opts: &CheckOptions) -> Result<ContextReport> {
    if let Some(r) = ctx.report.get() {
        return Ok(r.clone());
    }
    let purity_mn = purity_certificate(&ctx.m.as_right(), &ctx.n.as_left(), None)?;
    let purity_nm = purity_certificate(&ctx.n.as_right(), &ctx.m.as_left(), None)?;
    if !purity_mn.pure() || !purity_nm.pure() {
        return Err(Error::AssociativityUnavailable("M □ N or N □ M is not pure".into()));
    }
    opts.check()?;
    let mn = cotensor_bicomodules(&ctx.m, &ctx.n)?;
    let nm = cotensor_bicomodules(&ctx.n, &ctx.m)?;
    let f_bicolinear = bicolinear(&ctx.d, &mn, &ctx.f);
    let g_bicolinear = bicolinear(&ctx.c, &nm, &ctx.g);
    let t_m = triangle("M", &ctx.m, &ctx.n, &ctx.g, &ctx.f, opts)?;
    opts.check()?;
    let t_n = triangle("N", &ctx.n, &ctx.m, &ctx.f, &ctx.g, opts)?;
    let report = ContextReport {
        m_flat: is_flat(ctx.m.carrier()),
        n_flat: is_flat(ctx.n.carrier()),
        purity_mn,
        purity_nm,
        f_bicolinear,
        g_bicolinear,
        triangles: vec![t_m, t_n],
    };
    Ok(ctx.report.get_or_init(|| report).clone())
}

/// `f` and `g` are both bijective; needs a passed verification.
pub fn is_strict<R: Ring>(ctx: &MoritaContext<R>) -> Result<bool> {
    match ctx.report.get() {
        None => Err(Error::UnverifiedContext("run verify_context first".into())),
        Some(r) if !r.passed() => Err(Error::UnverifiedContext("verification failed".into())),
        Some(_) => Ok(ctx.f.is_isomorphism() && ctx.g.is_isomorphism()),
    }
}

/// Test comodules for the two categories on each side.
#[derive(Debug, Clone)]
pub struct TestFamily<R: Ring> {
    pub right_c: Vec<(String, Comodule<R>)>,
    pub right_d: Vec<(String, Comodule<R>)>,
    pub left_c: Vec<(String, Comodule<R>)>,
    pub left_d: Vec<(String, Comodule<R>)>,
}

impl<R: Ring> TestFamily<R> {
    /// Regular comodules and the context bicomodules themselves.
    pub fn standard(ctx: &MoritaContext<R>) -> Self {
        Self {
            right_c: vec![("C".into(), Comodule::regular(Side::Right, &ctx.c)), ("M".into(), ctx.m.as_right())],
            right_d: vec![("D".into(), Comodule::regular(Side::Right, &ctx.d)), ("N".into(), ctx.n.as_right())],
            left_c: vec![("C".into(), Comodule::regular(Side::Left, &ctx.c)), ("N".into(), ctx.n.as_left())],
            left_d: vec![("D".into(), Comodule::regular(Side::Left, &ctx.d)), ("M".into(), ctx.m.as_left())],
        }
    }

    pub fn len(&self) -> usize {
        self.right_c.len() + self.right_d.len() + self.left_c.len() + self.left_d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The comparison `X -> FG(X)` for one test comodule.
#[derive(Debug, Clone)]
pub struct RoundTrip<R: Ring> {
    pub name: String,
    pub side: Side,
    /// `"FG"` on `C`-comodules, `"GF"` on `D`-comodules.
    pub composite: &'static str,
    pub rank: usize,
    pub image_rank: usize,
    pub iso: bool,
    pub colinear: bool,
    pub map: Option<ModuleMap<R>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundTripSummary {
    pub name: String,
    pub side: String,
    pub composite: String,
    pub rank: usize,
    pub image_rank: usize,
    pub iso: bool,
    pub colinear: bool,
}

impl<R: Ring> RoundTrip<R> {
    pub fn passed(&self) -> bool {
        self.iso && self.colinear
    }

    pub fn summary(&self) -> RoundTripSummary {
        RoundTripSummary {
            name: self.name.clone(),
            side: self.side.to_string(),
            composite: self.composite.into(),
            rank: self.rank,
            image_rank: self.image_rank,
            iso: self.iso,
            colinear: self.colinear,
        }
    }
}

/// Round trips of the functors `- □_C N`, `- □_D M` and their left-hand mirrors.
#[derive(Debug, Clone)]
pub struct EquivalenceWitness<R: Ring> {
    pub round_trips: Vec<RoundTrip<R>>,
    pub scope: String,
}

impl<R: Ring> EquivalenceWitness<R> {
    pub fn passed(&self) -> bool {
        self.round_trips.iter().all(|r| r.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &RoundTrip<R>> {
        self.round_trips.iter().filter(|r| !r.passed())
    }
}

/// `X ≅ X □ E →(id □ k) X □ (P □ Q) →ψ₁⁻¹ (X □ P) □ Q` for a right comodule `X`.
fn right_round_trip<R: Ring>(
    name: &str,
    composite: &'static str,
    x: &Comodule<R>,
    p: &Bicomodule<R>,
    q: &Bicomodule<R>,
    k: &ModuleMap<R>,
    opts: &CheckOptions,
) -> Result<RoundTrip<R>> {
    let xb = x.to_bicomodule();
    let assoc = associate(&xb, p, q, opts)?;
    let mut out = RoundTrip { name: name.into(), side: Side::Right, composite, rank: x.rank(), image_rank: 0, iso: false, colinear: false, map: None };
    let (Some(left), Some(right), Some(psi)) = (&assoc.left, &assoc.right, &assoc.psi) else {
        return Ok(out);
    };
    out.image_rank = left.module.gens();
    let Some(psi_inv) = psi.inverse() else {
        return Ok(out);
    };
    let unit = counit_iso(x)?;
    let to_right = cotensor_map(&unit.cotensor, right, &ModuleMap::identity(x.carrier()), k)?.compose(&unit.backward);
    let lambda = psi_inv.compose(&to_right.with_codomain(psi_inv.domain()));
    out.iso = lambda.is_isomorphism();
    out.colinear = left.as_right_comodule().is_some_and(|fx| is_colinear(x, &fx, &lambda.with_codomain(fx.carrier())));
    out.map = Some(lambda);
    Ok(out)
}

/// `X ≅ E □ X →(k □ id) (P □ Q) □ X →ψ₁ P □ (Q □ X)` for a left comodule `X`.
fn left_round_trip<R: Ring>(
    name: &str,
    composite: &'static str,
    x: &Comodule<R>,
    p: &Bicomodule<R>,
    q: &Bicomodule<R>,
    k: &ModuleMap<R>,
    opts: &CheckOptions,
) -> Result<RoundTrip<R>> {
    let xb = x.to_bicomodule();
    let assoc = associate(p, q, &xb, opts)?;
    let mut out = RoundTrip { name: name.into(), side: Side::Left, composite, rank: x.rank(), image_rank: 0, iso: false, colinear: false, map: None };
    let (Some(left), Some(right), Some(psi)) = (&assoc.left, &assoc.right, &assoc.psi) else {
        return Ok(out);
    };
    out.image_rank = right.module.gens();
    let unit = counit_iso(x)?;
    let to_left = cotensor_map(&unit.cotensor, left, k, &ModuleMap::identity(x.carrier()))?.compose(&unit.backward);
    let lambda = psi.compose(&to_left);
    out.iso = lambda.is_isomorphism();
    out.colinear = right.as_left_comodule().is_some_and(|fx| is_colinear(x, &fx, &lambda.with_codomain(fx.carrier())));
    out.map = Some(lambda);
    Ok(out)
}

/// Certifies the induced equivalences on a finite family of test comodules.
pub fn equivalence_from_context<R: Ring>(
    ctx: &MoritaContext<R>,
    tests: &TestFamily<R>,
    opts: &CheckOptions,
) -> Result<EquivalenceWitness<R>> {
    if !is_strict(ctx)? {
        return Err(Error::UnverifiedContext("context is not strict".into()));
    }
    let mut round_trips = Vec::with_capacity(tests.len());
    for (name, x) in &tests.right_c {
        opts.check()?;
        round_trips.push(right_round_trip(name, "FG", x, &ctx.n, &ctx.m, &ctx.g, opts)?);
    }
    for (name, y) in &tests.right_d {
        opts.check()?;
        round_trips.push(right_round_trip(name, "GF", y, &ctx.m, &ctx.n, &ctx.f, opts)?);
    }
    for (name, x) in &tests.left_c {
        opts.check()?;
        round_trips.push(left_round_trip(name, "FG", x, &ctx.n, &ctx.m, &ctx.g, opts)?);
    }
    for (name, y) in &tests.left_d {
        opts.check()?;
        round_trips.push(left_round_trip(name, "GF", y, &ctx.m, &ctx.n, &ctx.f, opts)?);
    }
    let scope = format!("certified on {} test comodules", tests.len());
    Ok(EquivalenceWitness { round_trips, scope })
}

/// The context `(e(X), C, X, h(C), δ_X, η_C)` built from a right `C`-comodule `X`.
pub fn context_from_comodule<R: Ring>(
    x: &Comodule<R>,
    probes: Option<&[Probe<R>]>,
    opts: &CheckOptions,
) -> Result<MoritaContext<R>> {
    require_qf(x.ring(), "context from comodule")?;
    if x.side() != Side::Right {
        return Err(Error::SideMismatch("context needs a right comodule".into()));
    }
    let inj = injector_and_exactness_probe(&x.to_bicomodule(), probes)?;
    require_hypotheses(&inj)?;
    opts.check()?;
    let ce = coend(x)?;
    let c = x.coalgebra();
    let e = &ce.coalgebra;
    let xe = &ce.bicomodule;
    let c_reg = Bicomodule::regular(c);
    let hc = cohom(xe, &c_reg.as_right())?;
    let right = hc.right_coaction()?;
    let left = hc.left_coaction(&c_reg)?;
    let n = Bicomodule::from_parts(c, e, &hc.carrier(), left.coaction().clone(), right.coaction().clone());
    opts.check()?;
    let delta = delta_map(xe, x)?;
    let f_amb = delta.target.inclusion.compose(&delta.delta).matrix().clone();
    let g_amb = hc.eta.matrix().clone();
    let ctx = MoritaContext::new(e, c, xe, &n, &f_amb, &g_amb)?;
    verify_context(&ctx, opts)?;
    Ok(ctx)
}

fn require_hypotheses(inj: &InjectorReport) -> Result<()> {
    if !inj.coflat.coflat() {
        return Err(Error::HypothesisNotCertified("not coflat against the probe family".into()));
    }
    if !inj.injector {
        return Err(Error::HypothesisNotCertified("not an injector".into()));
    }
    if !inj.coflat.faithful() {
        let w = inj.coflat.faithfulness_witnesses.join(", ");
        return Err(Error::HypothesisNotCertified(format!("not faithful: X □ N = 0 for N in [{w}]")));
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct InvertibilityReport {
    pub injector: InjectorReport,
    pub coend_rank: usize,
    pub coend_iso: bool,
    pub context: ContextReport,
    pub strict: bool,
    pub round_trips: Vec<RoundTripSummary>,
    pub scope: String,
}

impl InvertibilityReport {
    pub fn invertible(&self) -> bool {
        self.coend_iso && self.context.passed() && self.strict && self.round_trips.iter().all(|r| r.iso && r.colinear)
    }
}

/// A `C`-`D`-bicomodule `X` is invertible: injective cogenerator over `D` with `e_D(X) ≅ C`.
pub fn invertibility_check<R: Ring>(
    x: &Bicomodule<R>,
    probes: Option<&[Probe<R>]>,
    tests: Option<&TestFamily<R>>,
    opts: &CheckOptions,
) -> Result<InvertibilityReport> {
    require_qf(x.ring(), "invertibility check")?;
    let injector = injector_and_exactness_probe(x, probes)?;
    require_hypotheses(&injector)?;
    let cmp = compare_coend(x)?;
    if !cmp.is_isomorphism() {
        let detail = match (&cmp.pi, &cmp.morphism) {
            (None, _) => "no linear comparison map".to_string(),
            (Some(_), Some(m)) if !m.passed() => {
                let f: Vec<&str> = m.failures().map(|c| c.axiom.as_str()).collect();
                format!("comparison is not a coalgebra map ({})", f.join(", "))
            }
            _ => format!("comparison e({}) -> {} is not bijective", x.right_coalgebra().name(), x.left_coalgebra().name()),
        };
        return Err(Error::CoendMismatch(detail));
    }
    let ctx = context_from_comodule(&x.as_right(), probes, opts)?;
    let context = verify_context(&ctx, opts)?;
    let strict = context.passed() && is_strict(&ctx)?;
    let (round_trips, scope) = if strict {
        let owned;
        let tests = match tests {
            Some(t) => t,
            None => {
                owned = TestFamily::standard(&ctx);
                &owned
            }
        };
        let w = equivalence_from_context(&ctx, tests, opts)?;
        (w.round_trips.iter().map(|r| r.summary()).collect(), w.scope)
    } else {
        (Vec::new(), "context not strict".into())
    };
    Ok(InvertibilityReport {
        injector,
        coend_rank: cmp.coend.coalgebra.rank(),
        coend_iso: true,
        context,
        strict,
        round_trips,
        scope,
    })
}
