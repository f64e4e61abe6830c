use num_traits::Zero;

use crate::exact_core::{rat, Rat, RatFunc};
use crate::schemes::{is_regular, regularity, Scheme, SchemeError};
use crate::states::{isotonic_state, osc, EigenState, OscIndex, StateLabel};
use crate::wronskian::{det_ratfunc, seed_wronskian, structure_decompose, wronskian_rat, QuasiRat};

use super::{DiffOp, OpChain, OperatorPoly, SchrodingerOp};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OperatorError {
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error("state is annihilated by the intertwiner")]
    Annihilated,
}

fn check_regular(s: &Scheme) -> Result<(), OperatorError> {
    if !is_regular(s) {
        return Err(SchemeError::Singular(regularity(s).positive_roots).into());
    }
    Ok(())
}

/// `a^- = d/dx + x`.
pub fn a_minus() -> DiffOp {
    DiffOp::first_order(RatFunc::x())
}

/// `a^+ = -d/dx + x`.
pub fn a_plus() -> DiffOp {
    DiffOp::first_order_adjoint(RatFunc::x())
}

/// `(A^-, A^+) = (d/dx + 𝒲, -d/dx + 𝒲)` with `𝒲 = -ψ'/ψ`.
///
/// # Panics
/// If `state` is zero.
pub fn darboux_pair(state: &QuasiRat) -> (DiffOp, DiffOp) {
    assert!(!state.is_zero(), "Darboux pair of the zero function");
    let w = -&state.derivative().div(state).rational_part();
    (DiffOp::first_order(w.clone()), DiffOp::first_order_adjoint(w))
}

/// Isotonic first-order pair: `m ≥ 0` gives `A_m^∓` with `𝒲 = x - m/x`,
/// `m < 0` gives `A_{m}^∓` with `𝒲 = -x + m/x`.
pub fn iso_pair(m: i64) -> (DiffOp, DiffOp) {
    let w = if m >= 0 {
        &RatFunc::x() - &RatFunc::monomial(rat(m), -1)
    } else {
        &(-&RatFunc::x()) + &RatFunc::monomial(rat(m), -1)
    };
    (DiffOp::first_order(w.clone()), DiffOp::first_order_adjoint(w))
}

/// Intertwiner as a chain of first-order factors: the `j`-th factor is the
/// Darboux step built on the `j`-th seed mapped through the previous ones.
/// Regularity is not required.
pub fn chain_for_seeds(seeds: &[OscIndex]) -> OpChain {
    let mut factors: Vec<DiffOp> = Vec::with_capacity(seeds.len());
    for &sd in seeds {
        let chain = OpChain::from_factors(factors.iter().rev().cloned().collect());
        let mapped = chain.apply(&osc(sd).func);
        let (am, _) = darboux_pair(&mapped);
        factors.push(am);
    }
    factors.reverse();
    OpChain::from_factors(factors)
}

/// `𝔸^- = A_n^- ⋯ A_1^-` for a regular scheme, in factored form.
pub fn intertwiner_chain(s: &Scheme) -> Result<OpChain, OperatorError> {
    check_regular(s)?;
    Ok(chain_for_seeds(&s.seeds()))
}

/// [`intertwiner_chain`] expanded; monic of order `|s|`.
pub fn intertwiner(s: &Scheme) -> Result<DiffOp, OperatorError> {
    Ok(intertwiner_chain(s)?.expand())
}

/// The intertwiner read off the determinant `W(φ_1,…,φ_n, f) / W(φ_1,…,φ_n)`
/// expanded along its last column.
pub fn intertwiner_from_minors(s: &Scheme) -> Result<DiffOp, OperatorError> {
    check_regular(s)?;
    let seeds = s.seeds();
    let n = seeds.len();
    // rows[i][j] = φ_j^{(i)} / e^{k_j x²/2}, i = 0..=n
    let mut rows: Vec<Vec<RatFunc>> = vec![Vec::with_capacity(n); n + 1];
    for &sd in &seeds {
        let mut cur = osc(sd).func;
        for (i, row) in rows.iter_mut().enumerate() {
            if i > 0 {
                cur = cur.derivative();
            }
            row.push(cur.rational_part());
        }
    }
    let w = det_ratfunc(rows[..n].to_vec());
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let minor: Vec<Vec<RatFunc>> =
            rows.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, r)| r.clone()).collect();
        let c = &det_ratfunc(minor) / &w;
        coeffs.push(if (n + j) % 2 == 0 { c } else { -&c });
    }
    Ok(DiffOp::from_coeffs(coeffs))
}

/// `-d² + x² - 2(ln W)''` for any seed list with a nonzero Wronskian.
pub(crate) fn native_potential_for_seeds(seeds: &[OscIndex]) -> SchrodingerOp {
    let d = structure_decompose(&seed_wronskian(seeds));
    let f = RatFunc::from_poly(d.core.clone());
    let f1 = d.core.derivative();
    let f2 = f1.derivative();
    let num = &(&f1 * &f1) - &(&d.core * &f2);
    let log_part = (&RatFunc::from_poly(num) / &(&f * &f)).scale(&rat(2));
    let mu = d.origin_power;
    let tail = &RatFunc::monomial(rat(2 * mu), -2) + &log_part;
    SchrodingerOp::new(tail, rat(-2 * d.gauss_weight))
}

/// Deformed Hamiltonian `-d² + x² - 2(ln W)''` from the Wronskian
/// structure `W = C x^μ e^{kx²/2} f`.
pub fn dcka_potential(s: &Scheme) -> Result<SchrodingerOp, OperatorError> {
    check_regular(s)?;
    Ok(native_potential_for_seeds(&s.seeds()))
}

/// Same Hamiltonian summed step by step: `x² + 2 Σ 𝒲_j'` over the
/// superpotentials of the chain factors.
pub fn chain_potential(s: &Scheme) -> Result<SchrodingerOp, OperatorError> {
    let chain = intertwiner_chain(s)?;
    let mut tail = RatFunc::zero();
    for f in chain.factors() {
        tail = &tail + &f.coeff(0).derivative().scale(&rat(2));
    }
    Ok(SchrodingerOp::new(tail, Rat::zero()))
}

/// `W(φ_1,…,φ_n, ψ) / W(φ_1,…,φ_n)`: an eigenstate of the deformed
/// Hamiltonian with the energy of `ψ`, physical flag recomputed.
pub fn map_state(s: &Scheme, psi: &EigenState) -> Result<EigenState, OperatorError> {
    check_regular(s)?;
    let mut fs: Vec<QuasiRat> = s.seeds().into_iter().map(|sd| osc(sd).func).collect();
    let w = wronskian_rat(&fs);
    fs.push(psi.func.clone());
    let wl = wronskian_rat(&fs);
    if wl.is_zero() {
        return Err(OperatorError::Annihilated);
    }
    let label = StateLabel { scheme: s.indices(), source: psi.label.source };
    Ok(EigenState::new(wl.div(&w).normalized(), psi.energy.clone(), label))
}

/// `A L_1 = (L_2 - shift) A` as an operator identity.
pub fn verify_intertwining(a: &DiffOp, l1: &SchrodingerOp, l2: &SchrodingerOp, shift: &Rat) -> bool {
    let lhs = a.compose(&l1.to_diffop());
    let rhs = l2.plus(&-shift).to_diffop().compose(a);
    lhs == rhs
}

/// `A^+ A^- = p(L)` as an operator identity.
pub fn verify_factorization(
    a_plus: &DiffOp,
    a_minus: &DiffOp,
    l: &SchrodingerOp,
    p: &OperatorPoly,
) -> bool {
    a_plus.compose(a_minus) == p.eval_op(l)
}

/// Scalar content of the unbroken and broken supersymmetric extensions
/// built on `L_{m-1}` and `L_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SusyReport {
    pub m: u32,
    /// `A_m^+A_m^- = L_{m-1} - (4m-1)`, `A_m^-A_m^+ = L_m - (4m-1)`.
    pub unbroken: [bool; 2],
    /// `A_{-m}^-A_{-m}^+ = L_m - 1`, `A_{-m}^+A_{-m}^- = L_{m-1} + 3`.
    pub broken: [bool; 2],
    /// `A_m^-` annihilates the ground state of `L_{m-1}`.
    pub ground_annihilated: bool,
    /// `A_{-m}^∓` annihilate none of the lowest physical states checked.
    pub broken_kills_none: bool,
    /// Ground energies of `A_{-m}^-A_{-m}^+` and `A_{-m}^+A_{-m}^-`.
    pub broken_ground_energies: (Rat, Rat),
}

impl SusyReport {
    pub fn passed(&self) -> bool {
        self.unbroken.iter().chain(self.broken.iter()).all(|&b| b)
            && self.ground_annihilated
            && self.broken_kills_none
            && self.broken_ground_energies.0 == self.broken_ground_energies.1
    }
}

/// # Panics
/// If `m == 0`.
pub fn susy_content_check(m: u32) -> SusyReport {
    assert!(m >= 1, "need m >= 1");
    let mi = m as i64;
    let lm = SchrodingerOp::isotonic_shifted(mi);
    let lm1 = SchrodingerOp::isotonic_shifted(mi - 1);
    let (am, ap) = iso_pair(mi);
    let (bm, bp) = iso_pair(-mi);
    let c = rat(4 * mi - 1);
    let unbroken = [
        ap.compose(&am) == lm1.plus(&-c.clone()).to_diffop(),
        am.compose(&ap) == lm.plus(&-c).to_diffop(),
    ];
    let broken = [
        bm.compose(&bp) == lm.plus(&rat(-1)).to_diffop(),
        bp.compose(&bm) == lm1.plus(&rat(3)).to_diffop(),
    ];
    let ground_annihilated = am.apply(&isotonic_state(m - 1, 0).func).is_zero();
    let broken_kills_none = (0..4).all(|l| {
        !bp.apply(&isotonic_state(m, l).func).is_zero()
            && !bm.apply(&isotonic_state(m - 1, l).func).is_zero()
    });
    let e_up = isotonic_state(m, 0).energy - rat(1);
    let e_down = isotonic_state(m - 1, 0).energy + rat(3);
    SusyReport {
        m,
        unbroken,
        broken,
        ground_annihilated,
        broken_kills_none,
        broken_ground_energies: (e_up, e_down),
    }
}

/// Substituting `m ↦ -(m+1)` into the formulas for `A_m^∓` gives
/// `-A_{-(m+1)}^±`, checked as coefficient identities.
pub fn involution_check(m: u32) -> bool {
    let mp = -(m as i64) - 1;
    let w = &RatFunc::x() - &RatFunc::monomial(rat(mp), -1);
    let (sub_m, sub_p) = (DiffOp::first_order(w.clone()), DiffOp::first_order_adjoint(w));
    let (bm, bp) = iso_pair(mp);
    sub_m == bp.neg() && sub_p == bm.neg()
}

fn rotate_ratfunc(r: &RatFunc) -> Option<(RatFunc, i64)> {
    let (n, pn) = r.num().rotate_imaginary()?;
    let (d, pd) = r.den().rotate_imaginary()?;
    Some((RatFunc::new(n, d).ok()?, pn as i64 - pd as i64))
}

/// Substitution `x ↦ ix` (so `d/dx ↦ -i d/dx`) written as `i^phase · R`
/// with `R` real; `None` when the terms do not share a phase up to sign.
pub fn wick_substitute(op: &DiffOp) -> Option<(DiffOp, u8)> {
    let mut phase: Option<i64> = None;
    let mut out = Vec::with_capacity(op.coeffs().len());
    for (j, c) in op.coeffs().iter().enumerate() {
        if c.is_zero() {
            out.push(RatFunc::zero());
            continue;
        }
        let (r, p) = rotate_ratfunc(c)?;
        let pj = (p - j as i64).rem_euclid(4);
        let base = *phase.get_or_insert(pj);
        match (pj - base).rem_euclid(4) {
            0 => out.push(r),
            2 => out.push(-&r),
            _ => return None,
        }
    }
    Some((DiffOp::from_coeffs(out), phase.unwrap_or(0) as u8))
}

/// `A_m^± ↦ -i A_{-m}^±` under `x ↦ ix`, for `m ≥ 1`.
pub fn wick_check(m: u32) -> bool {
    let (am, ap) = iso_pair(m as i64);
    let (bm, bp) = iso_pair(-(m as i64));
    [(am, bm), (ap, bp)].iter().all(|(a, b)| wick_substitute(a) == Some((b.clone(), 3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::Poly;
    use crate::states::osc_state;

    fn poly_with_roots(roots: &[i64]) -> OperatorPoly {
        OperatorPoly::from_roots(&roots.iter().map(|&r| rat(r)).collect::<Vec<_>>())
    }

    #[test]
    fn oscillator_factorizes() {
        let l = SchrodingerOp::oscillator();
        assert!(verify_factorization(&a_plus(), &a_minus(), &l, &poly_with_roots(&[1])));
    }

    #[test]
    fn wick_three_intertwiner() {
        let s: Scheme = "-3".parse().unwrap();
        let a = intertwiner(&s).unwrap();
        let (bm, _) = iso_pair(-1);
        let extra = RatFunc::new(Poly::from_ints(&[0, -4]), Poly::from_ints(&[3, 0, 2])).unwrap();
        assert_eq!(a, bm.add(&DiffOp::mul_by(extra)));
        let ap = a.adjoint();
        let l0 = SchrodingerOp::oscillator();
        assert!(verify_factorization(&ap, &a, &l0, &poly_with_roots(&[-7])));
    }

    #[test]
    fn minors_match_chain() {
        for s in ["1,4,5", "-3,-7", "1,2,3"] {
            let s: Scheme = s.parse().unwrap();
            assert_eq!(intertwiner(&s).unwrap(), intertwiner_from_minors(&s).unwrap());
        }
    }

    #[test]
    fn potential_routes_agree() {
        for s in ["-3", "1,4,5", "1,3,5"] {
            let s: Scheme = s.parse().unwrap();
            assert_eq!(
                dcka_potential(&s).unwrap().potential(),
                chain_potential(&s).unwrap().potential()
            );
        }
    }

    #[test]
    fn mapped_ground_state() {
        let s: Scheme = "1,3".parse().unwrap();
        let g = map_state(&s, &osc_state(5)).unwrap();
        assert!(g.physical);
        assert_eq!(g.energy, rat(11));
        assert!(!map_state(&s, &osc_state(2)).unwrap().physical);
        assert_eq!(map_state(&s, &osc_state(1)), Err(OperatorError::Annihilated));
    }

    #[test]
    fn susy_and_involutions() {
        for m in 1..=3 {
            let r = susy_content_check(m);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.broken_ground_energies.0, rat(4 * m as i64 + 2));
        }
        for m in 0..=5 {
            assert!(involution_check(m));
        }
        for m in 1..=5 {
            assert!(wick_check(m));
        }
    }
}
