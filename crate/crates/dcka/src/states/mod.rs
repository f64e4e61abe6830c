//! Hermite and Laguerre polynomials, oscillator eigenfunctions and their
//! Wick-rotated partners.
//!
//! States are held modulo nonzero constants. `osc_state(n)` is
//! `H_n(x) e^{-x²/2}` with energy `2n+1`; `osc_state(-n)` is
//! `𝓗_n(x) e^{x²/2}` with energy `-(2n+1)`, where `𝓗_n(x) = (-i)^n H_n(ix)`
//! has all coefficients positive.
//!
//! ```
//! use dcka::states::{osc_state, wick_rotate};
//!
//! let s = osc_state(-3);
//! assert_eq!(s.energy, dcka::exact_core::rat(-7));
//! assert!(!s.physical);
//! let back = wick_rotate(&s.func.to_quasi_poly().unwrap()).unwrap();
//! assert_eq!(back.to_quasi_rat(), osc_state(3).func);
//! ```

mod identities;
mod quasipoly;

use std::fmt;

use num_traits::One;

use crate::exact_core::{positive_real_root_count, rat, ratio, LaurentPoly, Poly, Rat};
use crate::wronskian::QuasiRat;

pub use identities::{hermite_laguerre_identity_check, HermiteLaguerreReport, IdentityCheck};
pub use quasipoly::QuasiPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StateError {
    #[error("body mixes even and odd powers; no real form after x -> ix")]
    MixedParity,
}

/// Physicists' Hermite polynomial `H_n`, leading coefficient `2^n`.
pub fn hermite(n: u32) -> Poly {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Poly::from_ints(&[0, 2]);
    let two_x = Poly::from_ints(&[0, 2]);
    for k in 1..n {
        let next = &(&two_x * &cur) - &prev.scale(&rat(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// `𝓗_n(x) = (-i)^n H_n(ix)`; a real polynomial with positive coefficients.
pub fn conjugate_hermite(n: u32) -> Poly {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Poly::from_ints(&[0, 2]);
    let two_x = Poly::from_ints(&[0, 2]);
    for k in 1..n {
        let next = &(&two_x * &cur) + &prev.scale(&rat(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalised Laguerre polynomial `L_n^(alpha)(x)` from the explicit sum
/// `Σ (-1)^i binom(n+alpha, n-i) x^i / i!`.
pub fn laguerre(n: u32, alpha: &Rat) -> Poly {
    let n = n as i64;
    let mut out = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        // binom(n+alpha, n-i) = Π_{j=1}^{n-i} (alpha + i + j) / (n-i)!
        let mut b = Rat::one();
        for j in 1..=(n - i) {
            b *= alpha + rat(i + j);
            b /= rat(j);
        }
        let mut fact = Rat::one();
        for j in 1..=i {
            fact *= rat(j);
        }
        let c = b / fact;
        out.push(if i % 2 == 0 { c } else { -c });
    }
    Poly::from_coeffs(out)
}

/// Which oscillator solution a state came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OscIndex {
    /// `ψ_n`
    Phys(u32),
    /// `ψ_n^-`, including `n = 0`.
    Wick(u32),
}

impl OscIndex {
    /// Energy `2n+1` or `-(2n+1)`.
    pub fn energy(self) -> Rat {
        match self {
            OscIndex::Phys(n) => rat(2 * n as i64 + 1),
            OscIndex::Wick(n) => rat(-(2 * n as i64 + 1)),
        }
    }

    /// Scheme-style signed index; `Wick(0)` has none.
    pub fn signed(self) -> Option<i64> {
        match self {
            OscIndex::Phys(n) => Some(n as i64),
            OscIndex::Wick(0) => None,
            OscIndex::Wick(n) => Some(-(n as i64)),
        }
    }
}

impl fmt::Display for OscIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OscIndex::Phys(n) => write!(f, "{n}"),
            OscIndex::Wick(n) => write!(f, "-{n}"),
        }
    }
}

/// Where a state came from: the scheme it was mapped through (empty for the
/// bare oscillator) and the source solution.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateLabel {
    pub scheme: Vec<i64>,
    pub source: Option<OscIndex>,
}

/// An eigenfunction with its eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenState {
    pub func: QuasiRat,
    pub energy: Rat,
    pub physical: bool,
    pub label: StateLabel,
}

impl EigenState {
    pub fn new(func: QuasiRat, energy: Rat, label: StateLabel) -> Self {
        let physical = is_physical(&func);
        EigenState { func, energy, physical, label }
    }
}

/// Normalisable on the half-line with a zero at the origin: vanishing order
/// at least one, decaying Gaussian, no poles on `(0, ∞)`.
pub fn is_physical(f: &QuasiRat) -> bool {
    if f.is_zero() || f.origin_power() < 1 || f.gauss_weight() >= 0 {
        return false;
    }
    positive_real_root_count(f.body().den()) == 0
}

/// Oscillator state for a signed index: `n ≥ 0` gives `ψ_n`, `-n` gives `ψ_n^-`.
///
/// On the half-line only odd `ψ_n` are physical.
pub fn osc_state(idx: i64) -> EigenState {
    if idx >= 0 {
        osc(OscIndex::Phys(idx as u32))
    } else {
        osc(OscIndex::Wick((-idx) as u32))
    }
}

/// Oscillator state for an explicit index, including `ψ_0^-`.
pub fn osc(idx: OscIndex) -> EigenState {
    let (p, k) = match idx {
        OscIndex::Phys(n) => (hermite(n), -1),
        OscIndex::Wick(n) => (conjugate_hermite(n), 1),
    };
    let physical = matches!(idx, OscIndex::Phys(n) if n % 2 == 1);
    EigenState {
        func: QuasiRat::from_poly(p, k),
        energy: idx.energy(),
        physical,
        label: StateLabel { scheme: Vec::new(), source: Some(idx) },
    }
}

/// `l`-th eigenstate `x^{m+1} L_l^{(m+1/2)}(x²) e^{-x²/2}` of the isotonic
/// oscillator, energy `4(m+l)+3` in the convention `L_m = L_m^iso + 2m`.
pub fn isotonic_state(m: u32, l: u32) -> EigenState {
    let lag = laguerre(l, &(rat(m as i64) + ratio(1, 2))).compose_square();
    let body = LaurentPoly::new(m as i64 + 1, lag);
    let func = QuasiPoly::new(body, -1).to_quasi_rat();
    EigenState {
        physical: true,
        func,
        energy: rat(4 * (m + l) as i64 + 3),
        label: StateLabel { scheme: (0..m).map(|j| 2 * j as i64 + 1).collect(), source: None },
    }
}

/// The substitution `x -> ix` with the phase `i^{-deg}` removed, so that
/// `ψ_n ↦ ψ_n^-` exactly. The Gaussian weight changes sign; for an
/// eigenfunction the energy changes sign too.
pub fn wick_rotate(f: &QuasiPoly) -> Result<QuasiPoly, StateError> {
    let b = f.body();
    let Some(d) = b.degree() else {
        return Ok(f.clone());
    };
    let terms = b.terms();
    if terms.iter().any(|(j, _)| (d - j) % 2 != 0) {
        return Err(StateError::MixedParity);
    }
    let mut out = LaurentPoly::zero();
    for (j, c) in terms {
        let c = if ((d - j) / 2) % 2 == 0 { c } else { -c };
        out = &out + &LaurentPoly::monomial(c, j);
    }
    Ok(QuasiPoly::new(out, -f.gauss_weight()))
}

/// [`wick_rotate`] on an eigenstate; flips the energy and recomputes the
/// physical flag.
pub fn wick_rotate_state(s: &EigenState) -> Result<EigenState, StateError> {
    let q = s.func.to_quasi_poly().ok_or(StateError::MixedParity)?;
    let r = wick_rotate(&q)?.to_quasi_rat();
    let label = StateLabel {
        scheme: s.label.scheme.clone(),
        source: s.label.source.map(|i| match i {
            OscIndex::Phys(n) => OscIndex::Wick(n),
            OscIndex::Wick(n) => OscIndex::Phys(n),
        }),
    };
    Ok(EigenState::new(r, -s.energy.clone(), label))
}

/// `-f'' + x² f` for checking oscillator eigen-equations.
pub fn osc_hamiltonian(f: &QuasiRat) -> QuasiRat {
    let x2 = crate::exact_core::RatFunc::monomial(Rat::one(), 2);
    f.mul_rat(&x2).sub(&f.derivative().derivative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_small() {
        assert_eq!(hermite(0), Poly::one());
        assert_eq!(hermite(3), Poly::from_ints(&[0, -12, 0, 8]));
        assert_eq!(conjugate_hermite(3), Poly::from_ints(&[0, 12, 0, 8]));
        assert_eq!(conjugate_hermite(2), Poly::from_ints(&[2, 0, 4]));
    }

    #[test]
    fn laguerre_small() {
        assert_eq!(laguerre(0, &ratio(1, 2)), Poly::one());
        assert_eq!(
            laguerre(1, &ratio(1, 2)),
            Poly::from_coeffs(vec![ratio(3, 2), rat(-1)])
        );
    }

    #[test]
    fn mixed_parity_rejected() {
        let q = QuasiPoly::new(LaurentPoly::from_poly(Poly::from_ints(&[1, 1])), -1);
        assert_eq!(wick_rotate(&q), Err(StateError::MixedParity));
    }

    #[test]
    fn wick_zero_is_reachable_only_explicitly() {
        let s = osc(OscIndex::Wick(0));
        assert_eq!(s.energy, rat(-1));
        assert_eq!(OscIndex::Wick(0).signed(), None);
    }
}
