use comod::coalgebra::{grouplike, matrix_coalgebra, unit_coalgebra};
use comod::comodule::{Bicomodule, Comodule, Side};
use comod::cotensor::CheckOptions;
use comod::error::Error;
use comod::fixtures::*;
use comod::matrix::Matrix;
use comod::module::PresentedModule;
use comod::morita::*;
use comod::ring::{Integers, IntegersMod, PrimeField, Rationals};

fn opts() -> CheckOptions {
    CheckOptions::default()
}

#[test]
fn comatrix_round_trips() {
    let q = Rationals;
    let ctx = comatrix_context(&q);
    verify_context(&ctx, &opts()).unwrap();
    let fam = comatrix_test_family(&q);
    let w = equivalence_from_context(&ctx, &fam, &opts()).unwrap();
    assert_eq!(w.round_trips.len(), fam.len());
    for rt in &w.round_trips {
        assert!(rt.passed(), "{} {} {}", rt.name, rt.side, rt.composite);
        assert_eq!(rt.rank, rt.image_rank);
    }
}

#[test]
fn cotensor_ranks_of_comatrix_context() {
    let q = Rationals;
    let ctx = comatrix_context(&q);
    assert_eq!(ctx.mn().module.gens(), 4);
    assert_eq!(ctx.nm().module.gens(), 1);
}

#[test]
fn trivial_context_over_subcomodules() {
    let f = PrimeField::new(2).unwrap();
    let c = grouplike(&f, 2);
    let ctx = trivial_context(&c);
    verify_context(&ctx, &opts()).unwrap();
    let sub = point_comodule(&f, 2, 1);
    let fam = TestFamily { right_c: vec![], right_d: vec![("c1".into(), sub)], left_c: vec![], left_d: vec![] };
    assert!(equivalence_from_context(&ctx, &fam, &opts()).unwrap().passed());
}

#[test]
fn scaled_f_over_z4_is_not_verified() {
    let r = IntegersMod::new(4).unwrap();
    let ctx = comatrix_context(&r);
    assert!(verify_context(&ctx, &opts()).unwrap().passed());
    assert!(is_strict(&ctx).unwrap());
    let bad = ctx.with_scaled_f(&2);
    let rep = verify_context(&bad, &opts()).unwrap();
    assert!(!rep.passed());
    assert!(matches!(is_strict(&bad), Err(Error::UnverifiedContext(_))));
}

#[test]
fn zero_context_is_verified_but_not_strict() {
    let r = IntegersMod::new(4).unwrap();
    let d = matrix_coalgebra(&r, 2);
    let c = unit_coalgebra(&r);
    let zero = PresentedModule::free(&r, 0);
    let m = Bicomodule::new(&d, &c, &zero, Matrix::zeros(&r, 0, 0), Matrix::zeros(&r, 0, 0)).unwrap();
    let n = Bicomodule::new(&c, &d, &zero, Matrix::zeros(&r, 0, 0), Matrix::zeros(&r, 0, 0)).unwrap();
    let ctx = MoritaContext::new(&d, &c, &m, &n, &Matrix::zeros(&r, 0, 4), &Matrix::zeros(&r, 0, 1)).unwrap();
    assert!(verify_context(&ctx, &opts()).unwrap().passed());
    assert!(!is_strict(&ctx).unwrap());
    let fam = TestFamily::standard(&ctx);
    assert!(matches!(equivalence_from_context(&ctx, &fam, &opts()), Err(Error::UnverifiedContext(_))));
}

#[test]
fn context_from_regular_comodule() {
    let q = Rationals;
    let c = grouplike(&q, 2);
    let ctx = context_from_comodule(&Comodule::regular(Side::Right, &c), None, &opts()).unwrap();
    assert!(ctx.report().unwrap().passed());
    assert!(is_strict(&ctx).unwrap());
    assert_eq!(ctx.d_coalgebra().rank(), 2);
}

#[test]
fn context_from_column_recovers_comatrix() {
    let q = Rationals;
    let ctx = context_from_comodule(&column_comodule(&q), None, &opts()).unwrap();
    assert!(is_strict(&ctx).unwrap());
    assert_eq!(ctx.d_coalgebra().rank(), 1);
    assert_eq!(ctx.n().rank(), 2);
    let w = equivalence_from_context(&ctx, &TestFamily::standard(&ctx), &opts()).unwrap();
    assert!(w.passed());
}

#[test]
fn context_from_doubled_column() {
    let q = Rationals;
    let x = column_comodule(&q);
    let xx = x.direct_sum(&x).unwrap();
    let ctx = context_from_comodule(&xx, None, &opts()).unwrap();
    assert_eq!(ctx.d_coalgebra().rank(), 4);
    assert!(is_strict(&ctx).unwrap());
}

#[test]
fn comatrix_bicomodule_is_invertible() {
    let q = Rationals;
    let x = column_comodule(&q).to_bicomodule();
    let rep = invertibility_check(&x, None, None, &opts()).unwrap();
    assert!(rep.invertible());
    assert_eq!(rep.coend_rank, 1);
}

#[test]
fn regular_bicomodule_is_invertible() {
    let f = PrimeField::new(3).unwrap();
    let c = grouplike(&f, 2);
    let rep = invertibility_check(&Bicomodule::regular(&c), None, None, &opts()).unwrap();
    assert!(rep.invertible());
}

#[test]
fn point_comodule_is_not_invertible() {
    let q = Rationals;
    let x = point_comodule(&q, 2, 0).to_bicomodule();
    match invertibility_check(&x, None, None, &opts()) {
        Err(Error::HypothesisNotCertified(msg)) => assert!(msg.contains("faithful")),
        other => panic!("expected a faithfulness failure, got {other:?}"),
    }
}

#[test]
fn integers_are_rejected() {
    let c = grouplike(&Integers, 1);
    let x = Comodule::regular(Side::Right, &c);
    assert!(matches!(context_from_comodule(&x, None, &opts()), Err(Error::UnsupportedRing { .. })));
    let b = x.to_bicomodule();
    assert!(matches!(invertibility_check(&b, None, None, &opts()), Err(Error::UnsupportedRing { .. })));
}

#[test]
fn cancellation_is_observed() {
    use std::sync::atomic::AtomicBool;
    use std::sync::Arc;
    let q = Rationals;
    let ctx = comatrix_context(&q);
    let o = CheckOptions { cancel: Some(Arc::new(AtomicBool::new(true))) };
    assert!(matches!(verify_context(&ctx, &o), Err(Error::Cancelled)));
}

#[test]
fn wrong_shape_names_the_map() {
    let q = Rationals;
    let c = grouplike(&q, 1);
    let reg = Bicomodule::regular(&c);
    let err = MoritaContext::new(&c, &c, &reg, &reg, &Matrix::zeros(&q, 2, 1), c.delta()).unwrap_err();
    assert!(err.to_string().contains("context map f"));
}
