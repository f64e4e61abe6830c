use dcka::numeric_verify::{compare_spectrum, convergence_study, solve, GridSpec, NumericError};
use dcka::operators::dcka_potential;
use dcka::schemes::{Convention, Scheme};

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

fn grids(x_min: f64) -> Vec<GridSpec> {
    [2000, 4000].iter().map(|&n| GridSpec::new(x_min, 12.0, n).unwrap()).collect()
}

#[test]
fn half_oscillator() {
    let e = solve(|x| x * x, &GridSpec::new(1e-9, 12.0, 4000).unwrap(), 3).unwrap();
    assert!(close(&e, &[3.0, 7.0, 11.0], 5e-3), "{e:?}");
}

#[test]
fn isotonic_m1() {
    let e = solve(|x| x * x + 2.0 / (x * x) + 2.0, &GridSpec::standard(), 3).unwrap();
    assert!(close(&e, &[7.0, 11.0, 15.0], 5e-3), "{e:?}");
}

#[test]
fn gapped_scheme_levels() {
    let s: Scheme = "1,4,5,10,11".parse().unwrap();
    let r = compare_spectrum(&s, &GridSpec::standard(), 6, Convention::Plus, 5e-3).unwrap();
    assert!(close(&r.computed, &[7.0, 15.0, 19.0, 27.0, 31.0, 35.0], 5e-3), "{:?}", r.computed);
    assert!(r.converged);
    assert!(r.gap_counts_match());
    assert!(r.computed.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn second_order_convergence() {
    let ho = convergence_study(|x| x * x, &grids(1e-9), &[3.0, 7.0, 11.0]).unwrap();
    let iso = convergence_study(|x| x * x + 6.0 / (x * x) + 4.0, &grids(1.2e-3), &[11.0, 15.0, 19.0]).unwrap();
    let v = dcka_potential(&"-3,-7".parse().unwrap()).unwrap().potential();
    let golden = convergence_study(|x| v.eval_f64(x), &grids(1.2e-3), &[3.0, 7.0, 11.0]).unwrap();
    for rep in [ho, iso, golden] {
        for o in &rep.orders[0] {
            assert!((1.8..=2.2).contains(o), "{:?}", rep.orders);
        }
    }
}

#[test]
fn errors() {
    assert!(matches!(GridSpec::new(1.0, 0.5, 1000), Err(NumericError::Grid(_))));
    assert!(matches!(GridSpec::new(0.1, 1.0, 499), Err(NumericError::Grid(_))));
    let r = solve(|x| if x > 1.0 { f64::NAN } else { 0.0 }, &GridSpec::standard(), 2);
    assert!(matches!(r, Err(NumericError::NonFinite(_))));
}

#[test]
fn deterministic() {
    let g = GridSpec::new(1e-3, 10.0, 800).unwrap();
    assert_eq!(solve(|x| x * x, &g, 4).unwrap(), solve(|x| x * x, &g, 4).unwrap());
}
