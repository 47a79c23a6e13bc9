//! One function per command; each delegates to a single library operation.

use clap::ValueEnum;
use comod::coalgebra::check_coalgebra;
use comod::cohom::{adjunction_check, coend, cohom, delta_check, dual_anti_iso_check};
use comod::comodule::{check_bicomodule, check_comodule, Comodule, Side};
use comod::cotensor::{associativity_check, coflatness_probe, cotensor, purity_certificate, standard_probes, CheckOptions, Probe};
use comod::error::Error;
use comod::matrix::Matrix;
use comod::module::PresentedModule;
use comod::morita::{
    context_from_comodule, equivalence_from_context, invertibility_check, is_strict, verify_context, MoritaContext, TestFamily,
};
use comod::ring::{Ring, RingDescriptor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::model::{Entity, Model};
use crate::report::{Check, Verdict};
use crate::{sha256_hex, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    CheckCoalgebra,
    CheckComodule,
    Cotensor,
    Purity,
    Assoc,
    CoflatProbe,
    Cohom,
    Coend,
    AntiIso,
    ContextVerify,
    ContextStrict,
    Equivalence,
    ContextFromComodule,
    Invertible,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckCoalgebra => "check-coalgebra",
            Command::CheckComodule => "check-comodule",
            Command::Cotensor => "cotensor",
            Command::Purity => "purity",
            Command::Assoc => "assoc",
            Command::CoflatProbe => "coflat-probe",
            Command::Cohom => "cohom",
            Command::Coend => "coend",
            Command::AntiIso => "anti-iso",
            Command::ContextVerify => "context-verify",
            Command::ContextStrict => "context-strict",
            Command::Equivalence => "equivalence",
            Command::ContextFromComodule => "context-from-comodule",
            Command::Invertible => "invertible",
        }
    }

    fn uses_probes(self) -> bool {
        matches!(self, Command::CoflatProbe | Command::Cohom | Command::ContextFromComodule | Command::Invertible)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOptions {
    /// `standard`, `basis` or `split`.
    pub probes: String,
    /// Test comodule names for `equivalence`; `standard` expands to the regular family.
    pub tests: Option<Vec<String>>,
    /// Adds random direct sums of test comodules to the `equivalence` family.
    pub seed: Option<u64>,
    /// Largest rank allowed for any coalgebra or comodule in the file.
    pub max_rank: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { probes: "standard".into(), tests: None, seed: None, max_rank: 64 }
    }
}

impl RunOptions {
    pub fn validate(&self, cmd: Command) -> Result<(), CliError> {
        if !matches!(self.probes.as_str(), "standard" | "basis" | "split") {
            return Err(CliError::Usage(format!("unknown probe family `{}` (standard, basis, split)", self.probes)));
        }
        if self.probes != "standard" && !cmd.uses_probes() {
            return Err(CliError::Usage(format!("--probes has no effect on {}", cmd.name())));
        }
        if (self.tests.is_some() || self.seed.is_some()) && cmd != Command::Equivalence {
            return Err(CliError::Usage("--tests and --seed apply to equivalence only".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub scope: Option<String>,
    pub data: Value,
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::RingMismatch(..) => "RingMismatch",
        Error::Dimension { .. } => "DimensionMismatch",
        Error::SideMismatch(_) => "SideMismatch",
        Error::CoalgebraMismatch(_) => "CoalgebraMismatch",
        Error::NotWellDefined(_) => "NotWellDefined",
        Error::NonFreeCarrier(_) => "NonFreeCarrier",
        Error::PurityObstruction(_) => "PurityObstruction",
        Error::UnsupportedRing { .. } => "UnsupportedRing",
        Error::AssociativityUnavailable(_) => "AssociativityUnavailable",
        Error::UnverifiedContext(_) => "UnverifiedContext",
        Error::HypothesisNotCertified(_) => "HypothesisNotCertified",
        Error::ExactnessNotCertified(_) => "ExactnessNotCertified",
        Error::CoendMismatch(_) => "CoendMismatch",
        Error::NonExactProbe(_) => "NonExactProbe",
        Error::NoSolution(_) => "NoSolution",
        Error::Cancelled => "Cancelled",
    }
}

enum Stop {
    Cli(CliError),
    Lib(Error),
}

impl From<CliError> for Stop {
    fn from(e: CliError) -> Self {
        Stop::Cli(e)
    }
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Lib(e)
    }
}

type Res<T> = Result<T, Stop>;

/// Errors that say the input is unusable become usage-level errors; the rest
/// are failed checks with the message as witness.
fn settle(e: Error) -> Result<Outcome, CliError> {
    match e {
        Error::RingMismatch(..)
        | Error::Dimension { .. }
        | Error::SideMismatch(_)
        | Error::CoalgebraMismatch(_)
        | Error::NotWellDefined(_)
        | Error::NonFreeCarrier(_)
        | Error::UnsupportedRing { .. }
        | Error::NonExactProbe(_)
        | Error::Cancelled => Err(CliError::Input(e)),
        other => Ok(Outcome {
            checks: vec![Check::new(error_kind(&other), Verdict::Fail, Some(other.to_string()))],
            scope: None,
            data: Value::Null,
        }),
    }
}

fn arity(cmd: Command, names: &[String], want: &[&str]) -> Result<(), CliError> {
    if names.len() != want.len() {
        return Err(CliError::Usage(format!("{} expects {} ({} given)", cmd.name(), want.join(" "), names.len())));
    }
    Ok(())
}

fn done(checks: Vec<Check>, scope: Option<String>, data: Value) -> Res<Outcome> {
    Ok(Outcome { checks, scope, data })
}

pub fn run<R: Ring>(cmd: Command, model: &Model<R>, names: &[String], opts: &RunOptions) -> Result<Outcome, CliError> {
    let res = match cmd {
        Command::CheckCoalgebra => run_check_coalgebra(model, names),
        Command::CheckComodule => run_check_comodule(model, names),
        Command::Cotensor => arity(cmd, names, &["M", "N"]).map_err(Stop::from).and_then(|_| run_cotensor(model, names)),
        Command::Purity => arity(cmd, names, &["M", "N"]).map_err(Stop::from).and_then(|_| run_purity(model, names)),
        Command::Assoc => arity(cmd, names, &["M", "L", "N"]).map_err(Stop::from).and_then(|_| run_assoc(model, names)),
        Command::CoflatProbe => arity(cmd, names, &["M"]).map_err(Stop::from).and_then(|_| run_coflat(model, &names[0], opts)),
        Command::Cohom => arity(cmd, names, &["X", "M"]).map_err(Stop::from).and_then(|_| run_cohom(model, names, opts)),
        Command::Coend => arity(cmd, names, &["X"]).map_err(Stop::from).and_then(|_| run_coend(model, &names[0])),
        Command::AntiIso => arity(cmd, names, &["X"]).map_err(Stop::from).and_then(|_| run_anti_iso(model, &names[0])),
        Command::ContextVerify => arity(cmd, names, &["K"]).map_err(Stop::from).and_then(|_| run_verify(model, &names[0])),
        Command::ContextStrict => arity(cmd, names, &["K"]).map_err(Stop::from).and_then(|_| run_strict(model, &names[0])),
        Command::Equivalence => {
            arity(cmd, names, &["K"]).map_err(Stop::from).and_then(|_| run_equivalence(model, &names[0], opts))
        }
        Command::ContextFromComodule => {
            arity(cmd, names, &["X"]).map_err(Stop::from).and_then(|_| run_from_comodule(model, &names[0], opts))
        }
        Command::Invertible => arity(cmd, names, &["X"]).map_err(Stop::from).and_then(|_| run_invertible(model, &names[0], opts)),
    };
    match res {
        Ok(o) => Ok(o),
        Err(Stop::Cli(e)) => Err(e),
        Err(Stop::Lib(e)) => settle(e),
    }
}

fn all_or(names: &[String], defaults: Vec<String>) -> Vec<String> {
    if names.is_empty() {
        defaults
    } else {
        names.to_vec()
    }
}

fn run_check_coalgebra<R: Ring>(model: &Model<R>, names: &[String]) -> Res<Outcome> {
    let mut checks = Vec::new();
    let mut data = serde_json::Map::new();
    for name in all_or(names, model.names_of("coalgebra")) {
        let rep = check_coalgebra(model.coalgebra(&name)?);
        for c in &rep.checks {
            checks.push(Check::expect(format!("{name}: {}", c.axiom), c.passed, || {
                format!("sides differ at basis element {}", c.witness.unwrap_or(0))
            }));
        }
        data.insert(name, json!(rep));
    }
    if checks.is_empty() {
        return Err(CliError::Usage("no coalgebras to check".into()).into());
    }
    done(checks, None, Value::Object(data))
}

fn run_check_comodule<R: Ring>(model: &Model<R>, names: &[String]) -> Res<Outcome> {
    let mut defaults = Vec::new();
    for (n, e) in &model.entities {
        if matches!(e, Entity::Comodule(_) | Entity::Bicomodule(_)) {
            defaults.push(n.clone());
        }
    }
    let mut checks = Vec::new();
    let mut data = serde_json::Map::new();
    for name in all_or(names, defaults) {
        let rep = match model.get(&name)? {
            Entity::Comodule(m) => check_comodule(m),
            Entity::Bicomodule(b) => check_bicomodule(b),
            other => {
                return Err(CliError::Semantic { name, msg: format!("is a {}, expected a comodule", other.kind()) }.into());
            }
        };
        for c in &rep.checks {
            checks.push(Check::expect(format!("{name}: {}", c.axiom), c.passed, || {
                format!("sides differ at generator {}", c.witness.unwrap_or(0))
            }));
        }
        data.insert(name, json!(rep));
    }
    if checks.is_empty() {
        return Err(CliError::Usage("no comodules to check".into()).into());
    }
    done(checks, None, Value::Object(data))
}

fn run_cotensor<R: Ring>(model: &Model<R>, names: &[String]) -> Res<Outcome> {
    let m = model.sided(&names[0], Side::Right)?;
    let n = model.sided(&names[1], Side::Left)?;
    let res = cotensor(&m, &n)?;
    let checks = vec![
        Check::expect("inclusion into M ⊗ N is injective", res.inclusion.is_injective(), || "kernel is nonzero".into()),
        Check::expect("cotensor lies in the kernel of the comparison map", res.alpha.compose(&res.inclusion).is_zero(), || {
            "composite is nonzero".into()
        }),
    ];
    let data = json!({
        "generators": res.module.gens(),
        "structure": res.module.structure().to_string(),
        "tensor_generators": res.inclusion.codomain().gens(),
        "zero": res.is_zero(),
        "inclusion": rows(res.inclusion.matrix()),
    });
    done(checks, None, data)
}

fn rows<R: Ring>(m: &Matrix<R>) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
}

fn run_purity<R: Ring>(model: &Model<R>, names: &[String]) -> Res<Outcome> {
    let m = model.sided(&names[0], Side::Right)?;
    let n = model.sided(&names[1], Side::Left)?;
    let cert = purity_certificate(&m, &n, None)?;
    let mut checks = Vec::new();
    for t in &cert.results {
        checks.push(Check::expect(format!("{}: purity, γ and μ agree", t.module), t.consistent(), || {
            format!("pure {}, γ iso {}, μ iso {}", t.pure, t.gamma_iso, t.mu_iso)
        }));
    }
    let first = cert.results.iter().find(|t| !t.pure).map(|t| t.module.clone());
    checks.push(Check::new(
        "cotensor is pure",
        if !cert.complete {
            Verdict::NotCertified
        } else {
            Verdict::from_bool(first.is_none())
        },
        first.map(|w| format!("not pure against {w}")),
    ));
    done(checks, Some(cert.note.clone()), json!(cert))
}

fn run_assoc<R: Ring>(model: &Model<R>, names: &[String]) -> Res<Outcome> {
    let m = model.sided(&names[0], Side::Right)?;
    let l = model.as_bicomodule(&names[1])?;
    let n = model.sided(&names[2], Side::Left)?;
    let rep = associativity_check(&m, &l, &n, &CheckOptions::default())?;
    let pre = |ok: bool, what: &str| {
        Check::new(what, if ok { Verdict::Pass } else { Verdict::NotCertified }, (!ok).then(|| "sequence is not pure".to_string()))
    };
    let psi = if rep.psi_iso {
        Check::new("ψ₁ is an isomorphism", Verdict::Pass, None)
    } else {
        let why = rep.obstruction.clone().unwrap_or_else(|| "ψ₁ is not bijective".into());
        let v = if rep.preconditions() { Verdict::Fail } else { Verdict::NotCertified };
        Check::new("ψ₁ is an isomorphism", v, Some(why))
    };
    let checks = vec![pre(rep.left_pure, "M □ L is pure"), pre(rep.right_pure, "L □ N is pure"), psi];
    done(checks, None, json!(rep))
}

fn probes_for<R: Ring>(x: &Comodule<R>, spec: &str) -> (Vec<Probe<R>>, String) {
    let all = standard_probes(x.coalgebra(), Side::Left);
    let chosen: Vec<Probe<R>> = match spec {
        "basis" => all.into_iter().filter(|p| p.name.starts_with("basis") && !p.name.ends_with("+C")).collect(),
        "split" => all.into_iter().filter(|p| p.name.starts_with("split")).collect(),
        _ => all,
    };
    let mut text = String::new();
    for p in &chosen {
        text.push_str(&format!("{}|{:?}|{:?}|{:?};", p.name, p.i.matrix().data(), p.p.matrix().data(), p.n2.coaction().matrix().data()));
    }
    let scope = format!("{spec} probe family, {} sequences, sha256 {}", chosen.len(), &sha256_hex(text.as_bytes())[..16]);
    (chosen, scope)
}

fn run_coflat<R: Ring>(model: &Model<R>, name: &str, opts: &RunOptions) -> Res<Outcome> {
    let m = model.sided(name, Side::Right)?;
    let (probes, family) = probes_for(&m, &opts.probes);
    let rep = coflatness_probe(&m, &probes)?;
    let mut checks: Vec<Check> = rep
        .results
        .iter()
        .map(|r| {
            Check::expect(format!("probe {} stays exact", r.probe), r.exact, || {
                format!("injective {}, surjective {}, exact in the middle {}", r.injective, r.surjective, r.middle_exact)
            })
        })
        .collect();
    let bad = rep.results.iter().find(|r| !r.exact).map(|r| r.probe.clone());
    checks.push(Check::expect("coflat", bad.is_none(), || format!("probe {}", bad.clone().unwrap_or_default())));
    checks.push(Check::expect("faithful", rep.faithful(), || {
        format!("nonzero N with M □ N = 0: {}", rep.faithfulness_witnesses.join(", "))
    }));
    done(checks, Some(format!("{} ({family})", rep.scope)), json!(rep))
}

/// Test modules for the adjunction: `R`, `R^2`, and `R/(d)` for proper divisors of `n` over `Z/n`.
fn adjunction_family<R: Ring>(ring: &R) -> Vec<(String, PresentedModule<R>)> {
    let mut out = vec![("R".to_string(), PresentedModule::free(ring, 1)), ("R^2".to_string(), PresentedModule::free(ring, 2))];
    if let RingDescriptor::IntegersMod(n) = ring.descriptor() {
        for d in (2..n).filter(|d| n % d == 0) {
            out.push((format!("Z/{d}"), PresentedModule::cyclic(ring, &ring.from_i64(d as i64))));
        }
    }
    out
}

fn run_cohom<R: Ring>(model: &Model<R>, names: &[String], opts: &RunOptions) -> Res<Outcome> {
    let x = model.as_bicomodule(&names[0])?;
    let m = model.sided(&names[1], Side::Right)?;
    let ch = cohom(&x, &m)?;
    let mut checks = Vec::new();
    let mut adj = serde_json::Map::new();
    for (wname, w) in adjunction_family(&model.ring) {
        let a = adjunction_check(&ch, &w)?;
        checks.push(Check::expect(format!("adjunction bijection for W = {wname}"), a.passed(), || {
            format!("Φ colinear {}, Φ iso {}, round trip {}", a.phi_colinear, a.phi_iso, a.round_trip)
        }));
        adj.insert(wname, json!(a));
    }
    let (probes, family) = probes_for(&x.as_right(), &opts.probes);
    let delta = match delta_check(&x, &m, Some(&probes)) {
        Ok(iso) => Check::expect("δ_M is an isomorphism", iso, || "δ_M is not bijective".into()),
        Err(e @ Error::ExactnessNotCertified(_)) => Check::new("δ_M is an isomorphism", Verdict::NotCertified, Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    checks.push(delta);
    let data = json!({
        "generators": ch.carrier().gens(),
        "structure": ch.carrier().structure().to_string(),
        "com_generators": ch.com.gens(),
        "adjunction": adj,
    });
    done(checks, Some(format!("adjunction on {} test modules; δ_M after {family}", adj.len())), data)
}

fn run_coend<R: Ring>(model: &Model<R>, name: &str) -> Res<Outcome> {
    let x = model.sided(name, Side::Right)?;
    let ce = coend(&x)?;
    let mut checks = Vec::new();
    for (prefix, rep) in [("e(X)", &ce.axioms), ("X as a bicomodule", &ce.bicomodule_axioms)] {
        for c in &rep.checks {
            checks.push(Check::expect(format!("{prefix}: {}", c.axiom), c.passed, || {
                format!("sides differ at {}", c.witness.unwrap_or(0))
            }));
        }
    }
    checks.push(Check::expect("comultiplication is uniquely determined", ce.delta_unique, || "solution is not unique".into()));
    let data = json!({
        "rank": ce.coalgebra.rank(),
        "delta": rows(ce.coalgebra.delta()),
        "epsilon": rows(ce.coalgebra.epsilon()),
    });
    done(checks, None, data)
}

fn run_anti_iso<R: Ring>(model: &Model<R>, name: &str) -> Res<Outcome> {
    let x = model.sided(name, Side::Right)?;
    let rep = dual_anti_iso_check(&x)?;
    let checks = vec![
        Check::expect("bijective", rep.bijective, || "comparison map is not bijective".into()),
        Check::expect("unit preserving", rep.unit_preserving, || "unit is not preserved".into()),
        Check::expect("order reversing", rep.order_reversing, || "products are not reversed".into()),
    ];
    done(checks, None, json!(rep))
}

fn context_checks(rep: &comod::morita::ContextReport) -> Vec<Check> {
    let purity = |name: &str, p: &comod::cotensor::PurityCertificateCot| {
        let bad = p.results.iter().find(|t| !t.pure).map(|t| t.module.clone());
        Check::expect(name, bad.is_none(), || format!("not pure against {}", bad.clone().unwrap_or_default()))
    };
    let mut checks = vec![
        Check::expect("M is flat", rep.m_flat, || "carrier of M is not flat".into()),
        Check::expect("N is flat", rep.n_flat, || "carrier of N is not flat".into()),
        purity("M □ N is pure", &rep.purity_mn),
        purity("N □ M is pure", &rep.purity_nm),
        Check::expect("f is bicolinear", rep.f_bicolinear, || "f does not commute with the coactions".into()),
        Check::expect("g is bicolinear", rep.g_bicolinear, || "g does not commute with the coactions".into()),
    ];
    for t in &rep.triangles {
        checks.push(Check::expect(format!("triangle {}: associativity map is an isomorphism", t.name), t.psi_iso, || {
            "ψ₁ is not bijective".into()
        }));
        checks.push(Check::expect(format!("triangle {} commutes", t.name), t.commutes, || match t.defect_witness {
            Some(k) => format!("defect is nonzero at basis element {k}"),
            None => "defect is nonzero".into(),
        }));
    }
    checks
}

fn run_verify<R: Ring>(model: &Model<R>, name: &str) -> Res<Outcome> {
    let ctx = model.context(name)?;
    let rep = verify_context(ctx, &CheckOptions::default())?;
    done(context_checks(&rep), None, json!(rep))
}

fn strict_check<R: Ring>(ctx: &MoritaContext<R>) -> Res<Check> {
    let strict = is_strict(ctx)?;
    Ok(Check::expect("strict: f and g are isomorphisms", strict, || {
        let bad: Vec<&str> = [("f", ctx.f()), ("g", ctx.g())].into_iter().filter(|(_, m)| !m.is_isomorphism()).map(|(n, _)| n).collect();
        format!("not bijective: {}", bad.join(", "))
    }))
}

fn run_strict<R: Ring>(model: &Model<R>, name: &str) -> Res<Outcome> {
    let ctx = model.context(name)?;
    let rep = verify_context(ctx, &CheckOptions::default())?;
    let mut checks = vec![Check::expect("context verified", rep.passed(), || {
        let failed: Vec<String> = context_checks(&rep).into_iter().filter(|c| c.verdict == Verdict::Fail).map(|c| c.name).collect();
        failed.join("; ")
    })];
    if rep.passed() {
        checks.push(strict_check(ctx)?);
    }
    done(checks, None, json!({ "context": rep }))
}

type Bucket<R> = Vec<(String, Comodule<R>)>;

fn test_family<R: Ring>(model: &Model<R>, ctx: &MoritaContext<R>, opts: &RunOptions) -> Res<TestFamily<R>> {
    let standard = TestFamily::standard(ctx);
    let (c, d) = (ctx.c_coalgebra(), ctx.d_coalgebra());
    let mut fam = TestFamily { right_c: vec![], right_d: vec![], left_c: vec![], left_d: vec![] };
    let explicit = opts.tests.is_some();
    let names: Vec<String> = match &opts.tests {
        Some(t) => t.clone(),
        None => std::iter::once("standard".to_string()).chain(model.names_of("comodule")).collect(),
    };
    for name in names {
        if name == "standard" {
            fam.right_c.extend(standard.right_c.iter().cloned());
            fam.right_d.extend(standard.right_d.iter().cloned());
            fam.left_c.extend(standard.left_c.iter().cloned());
            fam.left_d.extend(standard.left_d.iter().cloned());
            continue;
        }
        let x = model.comodule(&name)?;
        let mut placed = false;
        let buckets: [(&comod::coalgebra::Coalgebra<R>, Side, &mut Bucket<R>); 4] = [
            (c, Side::Right, &mut fam.right_c),
            (d, Side::Right, &mut fam.right_d),
            (c, Side::Left, &mut fam.left_c),
            (d, Side::Left, &mut fam.left_d),
        ];
        for (coalg, side, bucket) in buckets {
            if x.side() == side && x.coalgebra().same_structure(coalg) {
                bucket.push((name.clone(), x.clone()));
                placed = true;
            }
        }
        if !placed && explicit {
            return Err(CliError::Semantic { name, msg: "is not a comodule over either coalgebra of the context".into() }.into());
        }
    }
    if let Some(seed) = opts.seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for bucket in [&mut fam.right_c, &mut fam.right_d, &mut fam.left_c, &mut fam.left_d] {
            if bucket.is_empty() {
                continue;
            }
            let (i, j) = (rng.gen_range(0..bucket.len()), rng.gen_range(0..bucket.len()));
            let (a, b) = (&bucket[i], &bucket[j]);
            let sum = a.1.direct_sum(&b.1)?;
            let label = format!("{}+{}", a.0, b.0);
            bucket.push((label, sum));
        }
    }
    Ok(fam)
}

fn run_equivalence<R: Ring>(model: &Model<R>, name: &str, opts: &RunOptions) -> Res<Outcome> {
    let ctx = model.context(name)?;
    verify_context(ctx, &CheckOptions::default())?;
    let fam = test_family(model, ctx, opts)?;
    let w = equivalence_from_context(ctx, &fam, &CheckOptions::default())?;
    let summaries: Vec<_> = w.round_trips.iter().map(|r| r.summary()).collect();
    let checks = summaries
        .iter()
        .map(|s| {
            Check::expect(format!("{} round trip on {} {}", s.composite, s.side, s.name), s.iso && s.colinear, || {
                format!("rank {} -> {}, iso {}, colinear {}", s.rank, s.image_rank, s.iso, s.colinear)
            })
        })
        .collect();
    done(checks, Some(w.scope.clone()), json!({ "round_trips": summaries }))
}

fn run_from_comodule<R: Ring>(model: &Model<R>, name: &str, opts: &RunOptions) -> Res<Outcome> {
    let x = model.sided(name, Side::Right)?;
    let (probes, family) = probes_for(&x, &opts.probes);
    let ctx = context_from_comodule(&x, Some(&probes), &CheckOptions::default())?;
    let rep = verify_context(&ctx, &CheckOptions::default())?;
    let mut checks = context_checks(&rep);
    if rep.passed() {
        checks.push(strict_check(&ctx)?);
    }
    let data = json!({
        "coend_rank": ctx.d_coalgebra().rank(),
        "n_generators": ctx.n().rank(),
        "mn_generators": ctx.mn().module.gens(),
        "nm_generators": ctx.nm().module.gens(),
        "context": rep,
    });
    done(checks, Some(format!("hypotheses certified against the {family}")), data)
}

fn run_invertible<R: Ring>(model: &Model<R>, name: &str, opts: &RunOptions) -> Res<Outcome> {
    let x = model.as_bicomodule(name)?;
    let (probes, family) = probes_for(&x.as_right(), &opts.probes);
    let rep = invertibility_check(&x, Some(&probes), None, &CheckOptions::default())?;
    let mut checks = vec![
        Check::expect("injector", rep.injector.injector, || rep.injector.reduction.join("; ")),
        Check::expect("cogenerator", rep.injector.cogenerator, || rep.injector.coflat.faithfulness_witnesses.join(", ")),
        Check::expect("e(X) is isomorphic to the left coalgebra", rep.coend_iso, || "no coalgebra isomorphism".into()),
        Check::expect("context verified", rep.context.passed(), || "see context report".into()),
        Check::expect("strict", rep.strict, || "f or g is not bijective".into()),
    ];
    for s in &rep.round_trips {
        checks.push(Check::expect(format!("{} round trip on {} {}", s.composite, s.side, s.name), s.iso && s.colinear, || {
            format!("rank {} -> {}, iso {}, colinear {}", s.rank, s.image_rank, s.iso, s.colinear)
        }));
    }
    done(checks, Some(format!("{}; probes: {family}", rep.scope)), json!(rep))
}
