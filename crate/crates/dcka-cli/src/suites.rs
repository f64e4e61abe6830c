//! Self-check suites behind `dcka verify`.

use std::time::Duration;

use dcka::exact_core::{positive_real_root_count, Poly};
use dcka::numeric_verify::{compare_spectrum, GridSpec};
use dcka::operators::{chain_potential, dcka_potential};
use dcka::schemes::{dual, positive_schemes, Convention, Scheme};
use dcka::states::{hermite_laguerre_identity_check, OscIndex};
use dcka::wronskian::{seed_wronskian, structure_decompose};
use serde::Serialize;

use crate::golden::REFERENCES;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identities,
    Golden,
    Duality,
    Numeric,
    All,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(suite: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { suite, name: name.into(), passed, detail: detail.into() }
}

pub fn run(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Identities => identities(),
        Suite::Golden => golden(),
        Suite::Duality => duality(),
        Suite::Numeric => numeric(),
        Suite::All => [identities(), golden(), duality(), numeric()].concat(),
    }
}

pub fn golden() -> Vec<Check> {
    REFERENCES
        .iter()
        .map(|g| {
            let s: Scheme = g.scheme.parse().expect("reference scheme parses");
            let name = format!("potential ({})", g.scheme);
            let (l, c) = match (dcka_potential(&s), chain_potential(&s)) {
                (Ok(l), Ok(c)) => (l, c),
                (Err(e), _) | (_, Err(e)) => return check("golden", name, false, e.to_string()),
            };
            let Some(form) = l.decompose() else {
                return check("golden", name, false, "potential has no conformal form");
            };
            let m_ok = form.m == g.m;
            let c_ok = form.constant == g.constant();
            let tail_ok = form.remainder == g.remainder();
            let routes = l == c;
            let detail = format!("m {m_ok}, constant {c_ok}, rational part {tail_ok}, two routes agree {routes}");
            check("golden", name, m_ok && c_ok && tail_ok && routes, detail)
        })
        .collect()
}

fn proportional(a: &Poly, b: &Poly) -> bool {
    !a.is_zero() && !b.is_zero() && a.scale(&b.leading()) == b.scale(&a.leading())
}

pub fn identities() -> Vec<Check> {
    let mut out = Vec::new();
    let mut failed = Vec::new();
    let mut count = 0;
    for n in 0..=8u32 {
        for m in 0..=n {
            count += 1;
            if !hermite_laguerre_identity_check(n, m).passed {
                failed.push(format!("(n={n}, m={m})"));
            }
        }
    }
    out.push(check(
        "identities",
        "Hermite-Laguerre relations, n <= 8",
        failed.is_empty(),
        if failed.is_empty() { format!("{count} cases") } else { format!("failed at {}", failed.join(", ")) },
    ));

    // Odd index sets drawn from 1, 3, ..., 13.
    let odd: Vec<u32> = (0..7).map(|j| 2 * j + 1).collect();
    let mut bad = Vec::new();
    let mut count = 0;
    for mask in 1u32..(1 << odd.len()) {
        let set: Vec<u32> = odd.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        let size = set.len() as i64;
        if size > 5 {
            continue;
        }
        count += 1;
        let phys = structure_decompose(&seed_wronskian(&set.iter().map(|&n| OscIndex::Phys(n)).collect::<Vec<_>>()));
        let wick = structure_decompose(&seed_wronskian(&set.iter().map(|&n| OscIndex::Wick(n)).collect::<Vec<_>>()));
        let shape = |d: &dcka::wronskian::WronskianDecomposition, k: i64| {
            d.origin_power == size * (size + 1) / 2 && d.gauss_weight == k && d.core.is_even()
        };
        let rotated = phys.core.rotate_imaginary().map_or(false, |(q, _)| proportional(&q, &wick.core));
        let zero_free = positive_real_root_count(&wick.core) == 0;
        if !(shape(&phys, -size) && shape(&wick, size) && rotated && zero_free) {
            bad.push(format!("{set:?}"));
        }
    }
    out.push(check(
        "identities",
        "Wronskian structure of odd sets, size <= 5",
        bad.is_empty(),
        if bad.is_empty() { format!("{count} sets") } else { format!("failed for {}", bad.join(", ")) },
    ));
    out
}

pub fn duality() -> Vec<Check> {
    let mut out = Vec::new();
    let examples = [("1,4,5,10,11", "-2,-3,-4,-5,-8,-9,-11", 24), ("-3", "1,2,3", 8), ("1,3", "-1,-3", 8)];
    for (input, expected, shift) in examples {
        let s: Scheme = input.parse().unwrap();
        let d = dual(&s).unwrap();
        let ok = d.dual.to_string() == expected && d.shift == dcka::exact_core::rat(shift);
        out.push(check("duality", format!("dual ({input})"), ok, format!("({}) with shift {}", d.dual, d.shift)));
    }
    let mut bad = Vec::new();
    let schemes: Vec<Scheme> = positive_schemes(11).into_iter().filter(|s| !s.contains(0)).collect();
    for s in &schemes {
        let d = dual(s).unwrap();
        let reparsed: Scheme = d.dual.to_string().parse().unwrap();
        let back = dual(&reparsed).unwrap();
        let ok = back.dual == *s
            && d.shift == back.shift
            && d.shift == dcka::exact_core::rat(2 * (s.max_index() as i64 + 1))
            && d.n_plus == s.len()
            && d.n_minus == d.dual.len();
        if !ok {
            bad.push(s.to_string());
        }
    }
    out.push(check(
        "duality",
        "involution and shift, max index <= 11",
        bad.is_empty(),
        if bad.is_empty() { format!("{} schemes", schemes.len()) } else { format!("failed for {}", bad.join("; ")) },
    ));
    out
}

pub fn numeric() -> Vec<Check> {
    REFERENCES
        .iter()
        .map(|g| {
            let s: Scheme = g.scheme.parse().unwrap();
            let name = format!("lowest levels ({})", g.scheme);
            match compare_spectrum(&s, &GridSpec::standard(), 6, Convention::Plus, 5e-3) {
                Ok(r) => {
                    let ok = r.max_abs_error <= 5e-3 && r.gap_counts_match() && r.elapsed < Duration::from_secs(10);
                    let detail = format!(
                        "max error {:.2e}, gap counts {:?}, {:.0} ms",
                        r.max_abs_error,
                        r.gap_counts,
                        r.elapsed.as_secs_f64() * 1e3
                    );
                    check("numeric", name, ok, detail)
                }
                Err(e) => check("numeric", name, false, e.to_string()),
            }
        })
        .collect()
}
