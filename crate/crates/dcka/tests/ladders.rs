use dcka::exact_core::{rat, Rat};
use dcka::ladders::{
    band_nilpotency, build_ladders, commutator_polynomial, expected_commutator, isotonic_ladders,
    isotonic_power_check, kernel_report, product_polynomial, reduction_check, spectrum_generating_check,
    LadderKind, LadderOp,
};
use dcka::operators::OperatorPoly;
use dcka::schemes::{n_infinity, predict_spectrum, Scheme};

fn scheme(s: &str) -> Scheme {
    s.parse().unwrap()
}

fn roots(r: &[i64]) -> OperatorPoly {
    OperatorPoly::from_roots(&r.iter().map(|&x| rat(x)).collect::<Vec<_>>())
}

/// `[H, O] = step·O` and `[O⁻, O⁺] = p(H)` as differential-operator identities.
fn symbolic_checks(lo: &LadderOp, hi: &LadderOp, p: &OperatorPoly) {
    let h = lo.reference.hamiltonian.to_diffop();
    for op in [lo, hi] {
        let d = op.chain.expand();
        assert_eq!(h.commutator(&d), d.scale(&op.step), "{}", op.name());
    }
    let (dl, dh) = (lo.chain.expand(), hi.chain.expand());
    assert_eq!(dl.commutator(&dh), p.eval_op(&lo.reference.hamiltonian));
}

#[test]
fn negative_three_algebra() {
    let fam = build_ladders(&scheme("-3")).unwrap();
    assert_eq!(fam.shift, rat(8));
    assert_eq!(fam.a.lowering.order(), 4);
    let a = commutator_polynomial(&fam.a.lowering, &fam.a.raising).unwrap();
    // 16(L+3)(L+7)(L+1/2)
    let expected = OperatorPoly::from_roots(&[rat(-3), rat(-7), Rat::new((-1).into(), 2.into())]);
    assert_eq!(a, OperatorPoly::new(expected.poly().scale(&rat(16))));
    symbolic_checks(&fam.a.lowering, &fam.a.raising, &a);
    assert_eq!(product_polynomial(&fam.a.raising, &fam.a.lowering).unwrap(), roots(&[-7, -3, 1, 3]));
    let c = commutator_polynomial(&fam.c.lowering, &fam.c.raising).unwrap();
    assert_eq!(c.poly().coeffs(), &[rat(960), rat(-32), rat(192), rat(32)]);
    symbolic_checks(&fam.c.lowering, &fam.c.raising, &c);
    for kind in [LadderKind::A, LadderKind::B, LadderKind::C] {
        let p = fam.pairs().into_iter().find(|p| p.lowering.kind == kind).unwrap();
        let got = commutator_polynomial(&p.lowering, &p.raising).unwrap();
        assert_eq!(Some(got), expected_commutator(&fam, kind), "{kind}");
    }
}

#[test]
fn negative_three_reductions() {
    let fam = build_ladders(&scheme("-3")).unwrap();
    let red = reduction_check(&fam);
    assert_eq!(red.get("B-", "A-").unwrap().cofactor, Some(roots(&[-1, -5])));
    assert_eq!(red.get("B+", "A+").unwrap().cofactor, Some(roots(&[-1, -5])));
    assert_eq!(red.get("A-", "B~-").unwrap().cofactor, Some(OperatorPoly::constant(rat(-1))));
}

#[test]
fn even_top_scheme() {
    let s = scheme("1,5,6");
    let fam = build_ladders(&s).unwrap();
    let model = predict_spectrum(&s).unwrap();
    assert_eq!(fam.c.lowering.kind, LadderKind::CTilde);
    assert_eq!(fam.c.raising.step, rat(12));
    let k = kernel_report(&fam.c.lowering, &model, &rat(60));
    assert_eq!(k.energies(), vec![rat(7), rat(15), rat(23)]);
    assert_eq!(k.infinite_band_count(&model), n_infinity(&s).unwrap());
    let conn = spectrum_generating_check(&fam, &model, &rat(43));
    assert_eq!(conn.verdict("B").unwrap().components, 2);
    assert!(conn.verdict("A,C").unwrap().strongly_connected);
    assert!(conn.verdict("B,C").unwrap().strongly_connected);
    assert!(conn.violations.is_empty());
    assert!(band_nilpotency(&fam, &model));
    let c = commutator_polynomial(&fam.c.lowering, &fam.c.raising).unwrap();
    assert_eq!(Some(c), expected_commutator(&fam, LadderKind::CTilde));
}

#[test]
fn two_negative_seeds() {
    let s = scheme("-3,-7");
    let fam = build_ladders(&s).unwrap();
    let model = predict_spectrum(&s).unwrap();
    for p in fam.pairs() {
        if let Some(e) = expected_commutator(&fam, p.lowering.kind) {
            assert_eq!(commutator_polynomial(&p.lowering, &p.raising).unwrap(), e, "{}", p.lowering.kind);
        }
    }
    let k = kernel_report(&fam.c.lowering, &model, &rat(80));
    assert_eq!(k.infinite_band_count(&model), n_infinity(&s).unwrap());
    assert!(k.arrival_rule_holds && k.closure_holds);
}

#[test]
fn isotonic_sl2() {
    for m in 1..=3 {
        let (lo, hi) = isotonic_ladders(m);
        assert_eq!((lo.step.clone(), hi.step.clone()), (rat(-4), rat(4)));
        let p = commutator_polynomial(&lo, &hi).unwrap();
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.poly().leading(), rat(8));
        symbolic_checks(&lo, &hi, &p);
        let (c_lo, c_hi, steps) = isotonic_power_check(m).unwrap();
        assert!(c_lo.is_some() && c_hi.is_some() && steps, "m={m}");
    }
}
