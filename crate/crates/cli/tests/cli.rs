use std::path::{Path, PathBuf};
use std::process::Command as Proc;

use comod::coalgebra::grouplike;
use comod::fixtures::comatrix_context;
use comod::ring::{PrimeField, Rationals};
use comod_cli::format::{parse, render, Def, DefinitionFile, Item, MatrixLit};
use comod_cli::model::Model;
use comod_cli::report::{Status, Verdict};
use comod_cli::{execute, CliError, Command, RunOptions};
use proptest::prelude::*;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

fn comod(args: &[&str]) -> (i32, String) {
    let out = Proc::new(env!("CARGO_BIN_EXE_comod")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8_lossy(&out.stdout).into_owned() + &String::from_utf8_lossy(&out.stderr))
}

fn all_fixtures() -> Vec<String> {
    let mut v: Vec<String> = std::fs::read_dir(fixture(""))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".def"))
        .collect();
    v.sort();
    v
}

#[test]
fn exit_codes_over_the_corpus() {
    let cases: &[(&[&str], i32)] = &[
        (&["check-coalgebra", "grouplike.def"], 0),
        (&["check-comodule", "grouplike.def"], 0),
        (&["check-coalgebra", "comatrix.def", "D"], 0),
        (&["check-coalgebra", "bad_shape.def"], 2),
        (&["context-verify", "comatrix.def", "K"], 0),
        (&["context-strict", "comatrix.def", "K"], 0),
        (&["equivalence", "comatrix.def", "K"], 0),
        (&["context-verify", "scaled_g.def", "K"], 1),
        (&["context-strict", "scaled_g.def", "K"], 1),
        (&["equivalence", "scaled_g.def", "K"], 1),
        (&["coflat-probe", "point.def", "P"], 1),
        (&["coflat-probe", "point.def", "Reg"], 0),
        (&["invertible", "point.def", "P"], 1),
        (&["invertible", "comatrix.def", "X"], 0),
        (&["coend", "comatrix.def", "X"], 0),
        (&["anti-iso", "comatrix.def", "D"], 2),
        (&["anti-iso", "comatrix.def", "X"], 0),
        (&["cohom", "comatrix.def", "X", "X"], 0),
        (&["purity", "torsion.def", "H", "Reg"], 0),
        (&["purity", "integers.def", "M", "N"], 1),
        (&["assoc", "integers.def", "M", "L", "N"], 0),
        (&["cotensor", "comatrix.def", "XX", "Y"], 0),
        (&["context-verify", "comatrix.def", "Nope"], 2),
        (&["context-verify", "comatrix.def", "X"], 2),
        (&["cotensor", "comatrix.def", "X"], 2),
        (&["bogus", "comatrix.def"], 2),
        (&["check-coalgebra", "missing.def"], 2),
        (&["equivalence", "comatrix.def", "K", "--probes", "weird"], 2),
    ];
    for (args, want) in cases {
        let mut a: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        if a.len() > 1 {
            a[1] = fixture(&a[1]).display().to_string();
        }
        let refs: Vec<&str> = a.iter().map(String::as_str).collect();
        let (code, out) = comod(&refs);
        assert_eq!(code, *want, "{args:?}\n{out}");
    }
}

#[test]
fn fixtures_round_trip() {
    for name in all_fixtures() {
        let Ok(f) = parse(&read(&name)) else { continue };
        let again = parse(&render(&f)).unwrap();
        assert_eq!(again, f, "{name}");
        assert_eq!(render(&again), render(&f), "{name}");
    }
}

#[test]
fn every_fixture_parses() {
    let failing: Vec<String> = all_fixtures().into_iter().filter(|n| parse(&read(n)).is_err()).collect();
    assert!(failing.is_empty(), "{failing:?}");
}

#[test]
fn grouplike_literal_matches_builtin() {
    let f = parse(&read("grouplike.def")).unwrap();
    let r = PrimeField::new(2).unwrap();
    let m = Model::build(&r, &f, 64).unwrap();
    assert!(m.coalgebra("G").unwrap().same_structure(&grouplike(&r, 2)));
}

#[test]
fn comatrix_fixture_is_the_comatrix_context() {
    let f = parse(&read("comatrix.def")).unwrap();
    let m = Model::build(&Rationals, &f, 64).unwrap();
    let k = m.context("K").unwrap();
    let want = comatrix_context(&Rationals);
    assert!(k.d_coalgebra().same_structure(want.d_coalgebra()));
    assert!(k.c_coalgebra().same_structure(want.c_coalgebra()));
    assert_eq!(k.m().left_coaction().matrix(), want.m().left_coaction().matrix());
    assert_eq!(k.n().right_coaction().matrix(), want.n().right_coaction().matrix());
    assert_eq!(k.f().matrix(), want.f().matrix());
    assert_eq!(k.g().matrix(), want.g().matrix());
}

#[test]
fn wrong_delta_shape_names_the_coalgebra() {
    let r = execute(Command::CheckCoalgebra, &read("bad_shape.def"), &[], &RunOptions::default());
    assert_eq!(r.exit_code(), 2);
    let e = r.error.unwrap();
    assert!(e.message.starts_with("B:"), "{}", e.message);
    // Without a declared rank the library catches it.
    let text = "ring Q\ncoalgebra Odd\n  delta 3x2\n    1 0\n    0 0\n    0 1\n  epsilon 1x2\n    1 1\nend\n";
    let r = execute(Command::CheckCoalgebra, text, &[], &RunOptions::default());
    let e = r.error.unwrap();
    assert_eq!(e.kind, "SemanticError");
    assert!(e.message.contains("Odd") && e.message.contains("dimension"), "{}", e.message);
}

#[test]
fn qf_only_commands_reject_integers() {
    let text = read("integers.def");
    let o = RunOptions::default();
    for (cmd, args) in [
        (Command::Cohom, vec!["L", "Reg"]),
        (Command::Coend, vec!["Reg"]),
        (Command::AntiIso, vec!["Reg"]),
        (Command::ContextFromComodule, vec!["Reg"]),
        (Command::Invertible, vec!["L"]),
    ] {
        let args: Vec<String> = args.into_iter().map(String::from).collect();
        let r = execute(cmd, &text, &args, &o);
        assert_eq!(r.error.as_ref().map(|e| e.kind.as_str()), Some("UnsupportedRing"), "{cmd:?}");
        assert_eq!(r.exit_code(), 2);
    }
    for (cmd, args) in [(Command::Cotensor, vec!["M", "N"]), (Command::Purity, vec!["M", "N"]), (Command::Assoc, vec!["M", "L", "N"])] {
        let args: Vec<String> = args.into_iter().map(String::from).collect();
        let r = execute(cmd, &text, &args, &o);
        assert!(r.error.is_none(), "{cmd:?}: {:?}", r.error);
        assert!(!r.checks.is_empty());
    }
}

#[test]
fn scaled_g_reports_a_defect_witness() {
    let r = execute(Command::ContextVerify, &read("scaled_g.def"), &["K".into()], &RunOptions::default());
    assert_eq!(r.status, Status::Fail);
    let tri: Vec<_> = r.checks.iter().filter(|c| c.name.ends_with("commutes")).collect();
    assert_eq!(tri.len(), 2);
    for c in tri {
        assert_eq!(c.verdict, Verdict::Fail);
        assert!(c.witness.as_deref().unwrap().contains("basis element"));
    }
}

#[test]
fn equivalence_on_comatrix_fixture() {
    let text = read("comatrix.def");
    let opts = RunOptions { tests: Some(vec!["R1".into(), "R2".into(), "X".into(), "XX".into(), "L1".into(), "Y".into()]), ..Default::default() };
    let r = execute(Command::Equivalence, &text, &["K".into()], &opts);
    assert_eq!(r.status, Status::Pass, "{}", r.summary());
    assert_eq!(r.checks.len(), 6);
    let opts = RunOptions { tests: Some(vec!["Nope".into()]), ..Default::default() };
    assert_eq!(execute(Command::Equivalence, &text, &["K".into()], &opts).exit_code(), 2);
    let seeded = RunOptions { seed: Some(7), ..Default::default() };
    let a = execute(Command::Equivalence, &text, &["K".into()], &seeded);
    let b = execute(Command::Equivalence, &text, &["K".into()], &seeded);
    assert_eq!(a.checks, b.checks);
    assert!(a.checks.len() > execute(Command::Equivalence, &text, &["K".into()], &RunOptions::default()).checks.len());
}

#[test]
fn faithfulness_witness_and_family_scope() {
    let r = execute(Command::CoflatProbe, &read("point.def"), &["P".into()], &RunOptions::default());
    let get = |n: &str| r.checks.iter().find(|c| c.name == n).unwrap().clone();
    assert_eq!(get("coflat").verdict, Verdict::Pass);
    assert_eq!(get("faithful").verdict, Verdict::Fail);
    assert!(r.scope.as_deref().unwrap().contains("certified against family"));
    let split = RunOptions { probes: "split".into(), ..Default::default() };
    let s = execute(Command::CoflatProbe, &read("point.def"), &["P".into()], &split);
    assert_ne!(s.scope, r.scope);
}

#[test]
fn reports_are_deterministic_and_versioned() {
    let dir = std::env::temp_dir().join(format!("comod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let file = fixture("comatrix.def").display().to_string();
    let mut seen = Vec::new();
    for _ in 0..2 {
        let (code, _) = comod(&["context-verify", &file, "K", "--report", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(v["schema"], "comod-report/1");
        assert_eq!(v["status"], "pass");
        assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
        v.as_object_mut().unwrap().remove("timings");
        seen.push(v);
    }
    assert_eq!(seen[0], seen[1]);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn digest_ignores_formatting() {
    let text = read("grouplike.def");
    let noisy = text.replace("  ", "     ").replace("ring F2", "ring F2   # comment");
    let a = execute(Command::CheckCoalgebra, &text, &[], &RunOptions::default());
    let b = execute(Command::CheckCoalgebra, &noisy, &[], &RunOptions::default());
    assert_eq!(a.input_digest, b.input_digest);
}

#[test]
fn parse_errors_have_positions() {
    let r = execute(Command::CheckCoalgebra, "ring Q\ncoalgebra G = grouplike(2)\nfoo G\n", &[], &RunOptions::default());
    assert_eq!(r.exit_code(), 2);
    let e = r.error.unwrap();
    assert_eq!(e.kind, "ParseError");
    assert!(e.message.starts_with("3:1:"), "{}", e.message);
    assert!(matches!(parse("ring Q\ncomodule X right G\n  generators 1\n  coaction 1x1\n    1\n"), Err(CliError::Parse { line: 2, .. })));
}

#[test]
fn names_must_be_defined_first() {
    let text = "ring Q\ncomodule X = regular right G\ncoalgebra G = unit\n";
    let r = execute(Command::CheckComodule, text, &[], &RunOptions::default());
    assert_eq!(r.error.unwrap().message, "G: is not defined (names must be defined before use)");
}

#[test]
fn max_rank_caps_entities() {
    let opts = RunOptions { max_rank: 3, ..Default::default() };
    let r = execute(Command::CheckCoalgebra, &read("comatrix.def"), &[], &opts);
    assert_eq!(r.error.unwrap().kind, "UsageError");
}

fn lit_strategy() -> impl Strategy<Value = MatrixLit> {
    (0usize..4, 0usize..4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-20i64..20, r * c).prop_map(move |v| MatrixLit { rows: r, cols: c, entries: v.iter().map(|x| x.to_string()).collect() })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_map_files_round_trip(ms in prop::collection::vec(lit_strategy(), 1..5), modulus in 2u64..9) {
        for ring in ["Q".to_string(), "Z".to_string(), format!("Z/{modulus}")] {
            let items = ms.iter().enumerate().map(|(i, m)| Item { name: format!("m{i}"), def: Def::Map(m.clone()) }).collect();
            let file = DefinitionFile { ring: ring.parse().unwrap(), items };
            let once = parse(&render(&file)).unwrap();
            prop_assert_eq!(&parse(&render(&once)).unwrap(), &once);
        }
    }
}
