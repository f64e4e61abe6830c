use num_traits::{One, Zero};

use crate::exact_core::{rat, ratio, LaurentPoly, Rat, RatFunc};
use crate::operators::{DiffOp, OpChain};
use crate::wronskian::QuasiRat;

use super::{hermite, laguerre, QuasiPoly};

/// Outcome of one identity: exact equality, and equality up to a constant
/// with the constant actually needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub exact: bool,
    pub proportional: bool,
    /// `lhs / rhs` when proportional.
    pub ratio: Option<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteLaguerreReport {
    pub n: u32,
    pub m: u32,
    pub checks: Vec<IdentityCheck>,
    /// All identities in their valid form hold exactly.
    pub passed: bool,
}

impl HermiteLaguerreReport {
    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &'static str, lhs: &QuasiRat, rhs: &QuasiRat) -> IdentityCheck {
    let r = lhs.ratio_constant(rhs).filter(|r| !r.is_zero());
    IdentityCheck {
        name,
        exact: lhs == rhs,
        proportional: r.is_some(),
        ratio: r,
    }
}

/// `A_j^- = d/dx + x - j/x`.
pub(crate) fn isotonic_lowering(j: i64) -> DiffOp {
    DiffOp::first_order(&RatFunc::x() - &RatFunc::monomial(rat(j), -1))
}

/// `𝔸_m^- = A_m^- ⋯ A_1^-`.
pub(crate) fn isotonic_intertwiner(m: u32) -> OpChain {
    OpChain::from_factors((1..=m as i64).rev().map(isotonic_lowering).collect())
}

/// `𝒟_m = (d - m/x) ⋯ (d - 1/x)`.
pub(crate) fn calogero_lowering(m: u32) -> OpChain {
    OpChain::from_factors(
        (1..=m as i64)
            .rev()
            .map(|j| DiffOp::first_order(RatFunc::monomial(rat(-j), -1)))
            .collect(),
    )
}

fn pow2(e: i64) -> Rat {
    if e >= 0 {
        Rat::from_integer(num_bigint::BigInt::one() << e as usize)
    } else {
        Rat::new(num_bigint::BigInt::one(), num_bigint::BigInt::one() << (-e) as usize)
    }
}

fn factorial(n: u32) -> Rat {
    (1..=n as i64).fold(Rat::one(), |a, k| a * rat(k))
}

fn sign(e: u32) -> Rat {
    if e % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Checks the Hermite/Laguerre relations for the isotonic eigenstates
/// (`n ≥ m ≥ 0`):
///
/// 1. `𝔸_m^-(H_{2n+1} e^{-x²/2}) = C x^{m+1} L_{n-m}^{(m+1/2)}(x²) e^{-x²/2}`,
///    `C = (-1)^{n+m} 2^{2n+m+1} n!`;
/// 2. `x^{m+1} L_{n-m}^{(m+1/2)}(x²) = C^{-1} 𝒟_m H_{2n+1}`;
/// 3. `H_{2n+1} = (-1)^{n+m} (n-m)! 2^{2n-m+1} 𝒟̂_m (x^{m+1} L_{n-m}^{(m+1/2)}(x²))`;
/// 4. `H_{2n} = (-1)^{n+m} (n-m)! 2^{2n-m} (2n+1)^{-1} (d/dx) 𝒟̂_m (⋯)`,
///
/// with `𝒟̂_m = e^{x²} 𝒟_m^† e^{-x²}`. The variants of 3 and 4 using the
/// plain adjoint `𝒟_m^†` and the power `2^{2n+m}` are reported under the
/// `*_plain_adjoint` names; they agree with 3 and 4 only at `m = 0`.
///
/// # Panics
/// If `m > n`.
pub fn hermite_laguerre_identity_check(n: u32, m: u32) -> HermiteLaguerreReport {
    assert!(m <= n, "need n >= m");
    let e = n + m;
    let c_nm = sign(e) * pow2(2 * n as i64 + m as i64 + 1) * factorial(n);
    let h_odd = QuasiRat::from_poly(hermite(2 * n + 1), 0);
    let h_even = QuasiRat::from_poly(hermite(2 * n), 0);
    let psi_odd = QuasiRat::from_poly(hermite(2 * n + 1), -1);
    let lag = laguerre(n - m, &(rat(m as i64) + ratio(1, 2))).compose_square();
    let xl = QuasiPoly::new(LaurentPoly::new(m as i64 + 1, lag.clone()), 0).to_quasi_rat();
    let xl_gauss = QuasiPoly::new(LaurentPoly::new(m as i64 + 1, lag), -1).to_quasi_rat();

    let mut checks = Vec::new();
    let lhs1 = isotonic_intertwiner(m).apply(&psi_odd);
    checks.push(check("dressed_hermite", &lhs1, &xl_gauss.scale(&c_nm)));

    let dm = calogero_lowering(m);
    let rhs2 = dm.apply(&h_odd).scale(&c_nm.recip());
    checks.push(check("calogero_lowering", &xl, &rhs2));

    let dm_adj = dm.adjoint();
    let dm_hat = OpChain::from_factors(dm_adj.factors().iter().map(|f| f.gauge(-2)).collect());
    let base = sign(e) * factorial(n - m);
    let up = dm_hat.apply(&xl);
    let up_plain = dm_adj.apply(&xl);

    let c3 = &base * pow2(2 * n as i64 - m as i64 + 1);
    checks.push(check("hermite_odd", &h_odd, &up.scale(&c3)));
    let c3p = &base * pow2(2 * n as i64 + m as i64 + 1);
    checks.push(check("hermite_odd_plain_adjoint", &h_odd, &up_plain.scale(&c3p)));

    let inv = rat(2 * n as i64 + 1).recip();
    let c4 = &base * pow2(2 * n as i64 - m as i64) * &inv;
    checks.push(check("hermite_even", &h_even, &up.derivative().scale(&c4)));
    let c4p = &base * pow2(2 * n as i64 + m as i64) * &inv;
    checks.push(check(
        "hermite_even_plain_adjoint",
        &h_even,
        &up_plain.derivative().scale(&c4p),
    ));

    let passed = checks
        .iter()
        .filter(|c| !c.name.ends_with("_plain_adjoint"))
        .all(|c| c.exact);
    HermiteLaguerreReport { n, m, checks, passed }
}
