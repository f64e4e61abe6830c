use std::collections::BTreeSet;

use dcka::exact_core::rat;
use dcka::operators::dcka_potential;
use dcka::schemes::{
    dual, is_regular, n_infinity, predict_spectrum, reduce_mixed, regularity, Convention, Scheme, SchemeError,
    Verdict,
};
use proptest::prelude::*;

fn scheme(s: &str) -> Scheme {
    s.parse().unwrap()
}

/// Positive schemes without `ψ_0`, top index `≤ max`.
fn positive_scheme(max: u32) -> impl Strategy<Value = Scheme> {
    prop::collection::btree_set(1i64..=max as i64, 1..=max as usize)
        .prop_map(|s| Scheme::new(&s.into_iter().collect::<Vec<_>>()).unwrap())
}

/// Levels `2n+1` of odd `ψ_n` that are not seeds, up to `top`.
fn removal_rule(s: &Scheme, top: i64) -> Vec<i64> {
    let seeds: BTreeSet<u32> = s.positive_part().iter().copied().collect();
    (0..)
        .map(|l| 2 * l + 1)
        .take_while(|n| 2 * n + 1 <= top)
        .filter(|n| !seeds.contains(&(*n as u32)))
        .map(|n| 2 * n + 1)
        .collect()
}

#[test]
fn parsing() {
    assert_eq!(scheme(" 1, 4,5 ").indices(), vec![1, 4, 5]);
    assert_eq!(scheme("-7,-3").indices(), vec![-3, -7]);
    assert!(matches!("1,1".parse::<Scheme>(), Err(SchemeError::Duplicate(1))));
    assert!("1,x".parse::<Scheme>().is_err());
    assert!("-0".parse::<Scheme>().is_err());
    assert!("".parse::<Scheme>().is_err());
}

#[test]
fn dual_examples() {
    let d = dual(&scheme("1,4,5,10,11")).unwrap();
    assert_eq!(d.dual, scheme("-2,-3,-4,-5,-8,-9,-11"));
    assert_eq!(d.shift, rat(24));
    assert_eq!((d.n_plus, d.n_minus), (5, 7));
    let d = dual(&scheme("-3")).unwrap();
    assert_eq!((d.dual, d.shift), (scheme("1,2,3"), rat(8)));
    let d = dual(&scheme("1,3")).unwrap();
    assert_eq!((d.dual, d.shift), (scheme("-1,-3"), rat(8)));
    assert_eq!(dual(&scheme("1,-2")), Err(SchemeError::Mixed));
}

#[test]
fn reductions() {
    // W(ψ_0) = e^{-x²/2}: V = x² + 2, the bare oscillator raised by 2.
    let r = reduce_mixed(&scheme("0"));
    assert!(r.positive.is_empty());
    assert_eq!(r.shift, rat(-2));
    let v0 = dcka_potential(&scheme("0")).unwrap();
    assert!(v0.tail().is_zero());
    assert_eq!(v0.shift(), &rat(2));
    let r = reduce_mixed(&scheme("1,4"));
    assert_eq!((r.positive, r.shift), (scheme("1,4"), rat(0)));
    // A mixed scheme and its positive form give the same potential up to the shift.
    for s in ["1,-2", "2,3,-1", "0,-2", "0,1"] {
        let s = scheme(s);
        let r = reduce_mixed(&s);
        if is_regular(&r.positive) && is_regular(&s) {
            let a = dcka_potential(&s).unwrap();
            let b = dcka_potential(&r.positive).unwrap();
            assert_eq!(a.tail(), b.tail(), "{s:?}");
            assert_eq!(b.shift() - a.shift(), r.shift, "{s:?}");
        }
    }
}

#[test]
fn regularity_verdicts() {
    assert_eq!(regularity(&scheme("1,4,5,10,11")).verdict, Verdict::Regular);
    assert_eq!(regularity(&scheme("-3,-7")).verdict, Verdict::Regular);
    let r = regularity(&scheme("1,4"));
    assert_eq!(r.verdict, Verdict::Singular);
    assert_eq!(r.root_intervals.len(), r.positive_roots);
}

#[test]
fn spectrum_examples() {
    let m = predict_spectrum(&scheme("1,4,5,10,11")).unwrap();
    let b = m.bands(Convention::Plus);
    assert_eq!(b.len(), 3);
    assert_eq!((b[0].lowest.clone(), b[0].count), (rat(7), Some(1)));
    assert_eq!((b[1].lowest.clone(), b[1].count), (rat(15), Some(2)));
    assert_eq!((b[2].lowest.clone(), b[2].count), (rat(27), None));
    assert_eq!(m.plus_minus_shift, rat(24));

    let m = predict_spectrum(&scheme("-3")).unwrap();
    assert_eq!(m.bands(Convention::Minus)[0].lowest, rat(3));
    assert_eq!(m.native, Convention::Minus);

    let m = predict_spectrum(&scheme("1,3")).unwrap();
    assert_eq!(m.bands(Convention::Plus), vec![dcka::schemes::Band { lowest: rat(11), count: None }]);
}

#[test]
fn n_infinity_examples() {
    assert_eq!(n_infinity(&scheme("1,4,5,10,11")).unwrap(), 3);
    assert_eq!(n_infinity(&scheme("1,2,3")).unwrap(), 2);
    assert_eq!(n_infinity(&scheme("1,5,6")).unwrap(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dual_is_an_involution(s in positive_scheme(14)) {
        let d = dual(&s).unwrap();
        let back = dual(&d.dual).unwrap();
        prop_assert_eq!(&back.dual, &s);
        prop_assert_eq!(&d.shift, &rat(2 * (s.max_index() as i64 + 1)));
        prop_assert_eq!(d.n_plus + d.n_minus, s.max_index() as usize + 1);
        prop_assert_eq!(back.shift, d.shift);
    }

    #[test]
    fn spectrum_follows_removal_rule(s in positive_scheme(9)) {
        prop_assume!(is_regular(&s));
        let m = predict_spectrum(&s).unwrap();
        let levels: Vec<_> = m.levels(Convention::Plus, &rat(60));
        let expected: Vec<_> = removal_rule(&s, 60).into_iter().map(rat).collect();
        prop_assert_eq!(levels, expected);
        let bands = m.bands(Convention::Plus);
        prop_assert!(bands.last().unwrap().count.is_none());
        for w in bands.windows(2) {
            let top = &w[0].lowest + rat(4 * (w[0].count.unwrap() as i64 - 1));
            prop_assert!(&w[1].lowest - top >= rat(8));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dual_pairs_share_a_potential(s in positive_scheme(7)) {
        prop_assume!(is_regular(&s));
        let d = dual(&s).unwrap();
        let a = dcka_potential(&s).unwrap();
        let b = dcka_potential(&d.dual).unwrap();
        prop_assert_eq!(a.tail(), b.tail());
        prop_assert_eq!(a.shift() - b.shift(), d.shift);
    }
}
