use dcka::exact_core::rat;
use dcka::states::{osc, OscIndex};
use dcka::wronskian::{
    seed_removal_identity_check, seed_wronskian, structure_decompose, wronskian, wronskian_rat, QuasiRat,
};
use proptest::prelude::*;

fn idx(n: u32, wick: bool) -> OscIndex {
    if wick {
        OscIndex::Wick(n)
    } else {
        OscIndex::Phys(n)
    }
}

fn funcs(seeds: &[OscIndex]) -> Vec<QuasiRat> {
    seeds.iter().map(|&s| osc(s).func).collect()
}

fn seeds_strategy(max_len: usize) -> impl Strategy<Value = Vec<OscIndex>> {
    prop::collection::btree_set((0u32..9, any::<bool>()), 2..=max_len)
        .prop_map(|s| s.into_iter().map(|(n, w)| idx(n, w)).collect())
}

#[test]
fn two_by_two_matches_direct_formula() {
    for (a, b) in [(1, 2), (0, 5), (3, 4)] {
        let f = osc(OscIndex::Phys(a)).func;
        let g = osc(OscIndex::Wick(b)).func;
        let direct = f.mul(&g.derivative()).sub(&f.derivative().mul(&g));
        assert_eq!(wronskian_rat(&[f, g]), direct);
    }
}

#[test]
fn quasi_poly_and_rational_routes_agree() {
    let seeds = [OscIndex::Phys(1), OscIndex::Phys(4), OscIndex::Wick(2)];
    let qp: Vec<_> = funcs(&seeds).iter().map(|f| f.to_quasi_poly().unwrap()).collect();
    assert_eq!(wronskian(&qp).to_quasi_rat(), wronskian_rat(&funcs(&seeds)));
    assert_eq!(seed_wronskian(&seeds).to_quasi_rat(), wronskian_rat(&funcs(&seeds)));
}

#[test]
fn odd_states_give_monomial_gaussian() {
    // W(ψ_1, ψ_3, …, ψ_{2m-1}) = C x^{m(m+1)/2} e^{-m x²/2}
    for m in 1..=5u32 {
        let seeds: Vec<_> = (0..m).map(|j| OscIndex::Phys(2 * j + 1)).collect();
        let d = structure_decompose(&seed_wronskian(&seeds));
        assert_eq!(d.origin_power, (m * (m + 1) / 2) as i64);
        assert_eq!(d.gauss_weight, -(m as i64));
        assert_eq!(d.core.degree(), Some(0));
    }
}

#[test]
fn negative_odd_sets_have_even_core() {
    let seeds = [OscIndex::Wick(3), OscIndex::Wick(7)];
    let d = structure_decompose(&seed_wronskian(&seeds));
    assert_eq!((d.origin_power, d.gauss_weight), (3, 2));
    assert!(d.core.is_even());
    // 8x^6 + 60x^4 + 126x^2 + 105 up to a constant
    let expected = dcka::exact_core::Poly::from_even_ints(&[105, 126, 60, 8]);
    assert_eq!(d.core.scale(&expected.leading()), expected.scale(&d.core.leading()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn swapping_two_entries_flips_sign(seeds in seeds_strategy(4), i in 0usize..4, j in 0usize..4) {
        let (i, j) = (i % seeds.len(), j % seeds.len());
        prop_assume!(i != j);
        let fs = funcs(&seeds);
        let mut swapped = fs.clone();
        swapped.swap(i, j);
        prop_assert_eq!(wronskian_rat(&swapped), wronskian_rat(&fs).scale(&rat(-1)));
    }

    #[test]
    fn decomposition_reassembles(seeds in seeds_strategy(4)) {
        let w = seed_wronskian(&seeds);
        prop_assert_eq!(structure_decompose(&w).reassemble(), w);
    }

    #[test]
    fn seed_removal_identity(seeds in seeds_strategy(3), probe in (9u32..14, any::<bool>())) {
        let states: Vec<_> = seeds.iter().map(|&s| osc(s)).collect();
        let p = osc(idx(probe.0, probe.1));
        prop_assert!(seed_removal_identity_check(&states, &p).unwrap());
    }
}
