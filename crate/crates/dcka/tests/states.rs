use dcka::exact_core::{rat, ratio, Poly, Rat};
use dcka::states::{
    conjugate_hermite, hermite, hermite_laguerre_identity_check, is_physical, isotonic_state, laguerre, osc,
    osc_hamiltonian, osc_state, wick_rotate_state, OscIndex,
};
use dcka::wronskian::QuasiRat;
use num_traits::One;
use proptest::prelude::*;

fn factorial(n: u32) -> Rat {
    (1..=n as i64).fold(Rat::one(), |a, k| a * rat(k))
}

/// Explicit sum `n! Σ (±1)^k (2x)^{n-2k} / (k! (n-2k)!)`.
fn hermite_sum(n: u32, alternating: bool) -> Poly {
    let mut c = vec![rat(0); n as usize + 1];
    for k in 0..=n / 2 {
        let sign = if alternating && k % 2 == 1 { rat(-1) } else { rat(1) };
        let p = n - 2 * k;
        c[p as usize] = sign * factorial(n) * rat(2).pow(p as i32) / (factorial(k) * factorial(p));
    }
    Poly::from_coeffs(c)
}

/// `Σ (-1)^k binom(n+α, n-k) x^k / k!`.
fn laguerre_sum(n: u32, alpha: &Rat) -> Poly {
    let c = (0..=n)
        .map(|k| {
            let binom = (k + 1..=n).fold(Rat::one(), |a, j| a * (alpha + rat(j as i64))) / factorial(n - k);
            let sign = if k % 2 == 1 { rat(-1) } else { rat(1) };
            sign * binom / factorial(k)
        })
        .collect();
    Poly::from_coeffs(c)
}

#[test]
fn special_polynomials_match_sums() {
    for n in 0..=12 {
        assert_eq!(hermite(n), hermite_sum(n, true), "H_{n}");
        assert_eq!(conjugate_hermite(n), hermite_sum(n, false), "conjugate H_{n}");
        for a in [ratio(1, 2), ratio(3, 2), ratio(7, 2), rat(0)] {
            assert_eq!(laguerre(n, &a), laguerre_sum(n, &a), "L_{n}^({a})");
        }
    }
}

#[test]
fn low_hermite_values() {
    assert_eq!(hermite(3), Poly::from_ints(&[0, -12, 0, 8]));
    assert_eq!(conjugate_hermite(2), Poly::from_ints(&[2, 0, 4]));
}

#[test]
fn physical_flags_on_half_line() {
    for n in 0..10 {
        assert_eq!(osc_state(n).physical, n % 2 == 1);
        assert!(!osc_state(-n - 1).physical);
    }
    assert!(!is_physical(&osc(OscIndex::Wick(0)).func));
}

#[test]
fn isotonic_states_are_eigenfunctions() {
    for m in 0..4u32 {
        for l in 0..4u32 {
            let st = isotonic_state(m, l);
            assert_eq!(st.energy, rat(4 * (m + l) as i64 + 3));
            // L_m = -d² + x² + m(m+1)/x² + 2m
            let f = &st.func;
            let c = ratio((m * (m + 1)) as i64, 1);
            let x_2 = dcka::exact_core::RatFunc::monomial(c, -2);
            let lf = osc_hamiltonian(f).add(&f.mul_rat(&x_2)).add(&f.scale(&rat(2 * m as i64)));
            assert_eq!(lf, f.scale(&st.energy), "m={m}, l={l}");
        }
    }
}

#[test]
fn hermite_laguerre_identities_hold() {
    for n in 0..=6 {
        for m in 0..=n {
            let rep = hermite_laguerre_identity_check(n, m);
            assert!(rep.passed, "n={n}, m={m}: {:?}", rep.checks);
        }
    }
}

proptest! {
    #[test]
    fn oscillator_eigen_equation(n in 0u32..25, wick in any::<bool>()) {
        let idx = if wick { OscIndex::Wick(n) } else { OscIndex::Phys(n) };
        let st = osc(idx);
        prop_assert_eq!(osc_hamiltonian(&st.func), st.func.scale(&st.energy));
    }

    #[test]
    fn wick_rotation_swaps_families(n in 0u32..20) {
        let p = osc(OscIndex::Phys(n));
        let w = wick_rotate_state(&p).unwrap();
        prop_assert_eq!(&w.energy, &osc(OscIndex::Wick(n)).energy);
        prop_assert!(w.func.proportional(&osc(OscIndex::Wick(n)).func));
        let back = wick_rotate_state(&w).unwrap();
        prop_assert_eq!(back.func, p.func);
    }
}

#[test]
fn quasi_rational_identity() {
    assert!(QuasiRat::one().proportional(&QuasiRat::one().scale(&rat(3))));
}
