//! Ladder operators of the deformed systems and their algebra.
//!
//! Every ladder operator acts on the eigenfunctions `𝔸ψ` obtained by
//! dressing oscillator solutions. Identities between high-order operators
//! are certified on that eigenbasis: an operator of order at most `D` that
//! annihilates `D + 1` eigenfunctions with distinct eigenvalues is zero.
//!
//! ```
//! use dcka::ladders::{build_ladders, commutator_polynomial};
//!
//! let fam = build_ladders(&"-3".parse().unwrap()).unwrap();
//! assert_eq!(fam.a.lowering.order(), 4);
//! let p = commutator_polynomial(&fam.a.lowering, &fam.a.raising).unwrap();
//! assert_eq!(p.to_string(), "16L^3 + 168L^2 + 416L + 168");
//! ```

mod build;
mod graph;
mod kernel;
mod reduce;

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::exact_core::Rat;
use crate::operators::{OpChain, OperatorError, OperatorPoly, SchrodingerOp};
use crate::schemes::{Convention, SchemeError};
use crate::states::{osc, OscIndex};
use crate::wronskian::QuasiRat;

pub use build::{build_ladders, expected_commutator, isotonic_ladders, LadderFamily, LadderPair};
pub use graph::{band_nilpotency, default_cutoff, spectrum_generating_check, ConnectivityReport, SetVerdict};
pub use kernel::{kernel_report, KernelMember, KernelReport};
pub use reduce::{isotonic_power_check, reduction_check, Reduction, ReductionReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LadderError {
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error("{0}: result is not a polynomial in the Hamiltonian")]
    NotPolynomial(String),
    #[error("{0}: step relation fails")]
    StepFailed(String),
    #[error("operators refer to different Hamiltonians")]
    ReferenceMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LadderKind {
    A,
    B,
    BTilde,
    C,
    CTilde,
    Cm,
}

impl fmt::Display for LadderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LadderKind::A => "A",
            LadderKind::B => "B",
            LadderKind::BTilde => "B~",
            LadderKind::C => "C",
            LadderKind::CTilde => "C~",
            LadderKind::Cm => "Cm",
        })
    }
}

/// Hamiltonian whose eigenfunctions are `dressing(φ)` for oscillator
/// solutions `φ`, with energy `E_osc + energy_offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianRef {
    pub hamiltonian: SchrodingerOp,
    pub dressing: OpChain,
    pub energy_offset: Rat,
    pub convention: Convention,
}

impl HamiltonianRef {
    /// Dressed oscillator solution with its energy, or `None` when the
    /// dressing annihilates it.
    pub fn eigenfunction(&self, idx: OscIndex) -> Option<(Rat, QuasiRat)> {
        let st = osc(idx);
        let f = self.dressing.apply(&st.func);
        if f.is_zero() {
            return None;
        }
        Some((st.energy + &self.energy_offset, f))
    }

    /// At least `count` eigenfunctions with distinct energies, smallest
    /// `|E_osc|` first.
    pub fn nodes(&self, count: usize) -> Vec<(Rat, QuasiRat)> {
        let mut out = Vec::with_capacity(count);
        let mut n = 0u32;
        while out.len() < count {
            for idx in [OscIndex::Phys(n), OscIndex::Wick(n)] {
                if let Some(e) = self.eigenfunction(idx) {
                    out.push(e);
                }
            }
            n += 1;
        }
        out
    }
}

/// Operator `O` with `[H, O] = step · O` for the referenced Hamiltonian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderOp {
    pub kind: LadderKind,
    pub chain: OpChain,
    pub step: Rat,
    pub reference: Arc<HamiltonianRef>,
}

impl LadderOp {
    pub fn order(&self) -> usize {
        self.chain.order()
    }

    pub fn is_lowering(&self) -> bool {
        self.step < Rat::zero()
    }

    pub fn apply(&self, f: &QuasiRat) -> QuasiRat {
        self.chain.apply(f)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, if self.is_lowering() { "-" } else { "+" })
    }

    /// Checks `H(Oφ) = (E + step) Oφ` on `order + 3` eigenfunctions, which
    /// forces `[H, O] - step·O = 0`.
    pub fn certify_step(&self) -> bool {
        let h = &self.reference.hamiltonian;
        self.reference.nodes(self.order() + 3).iter().all(|(e, f)| {
            let g = self.apply(f);
            g.is_zero() || h.apply(&g) == g.scale(&(e + &self.step))
        })
    }
}

/// Fits `c(E)` on the eigenbasis to a polynomial of degree at most
/// `max_deg`, using `nodes` eigenfunctions. `action` must return a multiple
/// of its argument.
pub(crate) fn fit_on_eigenbasis<F>(
    reference: &HamiltonianRef,
    max_deg: usize,
    nodes: usize,
    what: &str,
    action: F,
) -> Result<OperatorPoly, LadderError>
where
    F: Fn(&QuasiRat) -> QuasiRat + Sync,
{
    use rayon::prelude::*;
    let pts = reference.nodes(nodes.max(max_deg + 1));
    let values: Vec<Option<(Rat, Rat)>> = pts
        .par_iter()
        .map(|(e, f)| {
            let g = action(f);
            let c = if g.is_zero() { Some(Rat::zero()) } else { g.ratio_constant(f) };
            c.map(|c| (e.clone(), c))
        })
        .collect();
    let values: Option<Vec<(Rat, Rat)>> = values.into_iter().collect();
    let values = values.ok_or_else(|| LadderError::NotPolynomial(what.to_string()))?;
    let p = OperatorPoly::interpolate(&values[..max_deg + 1]);
    if values.iter().all(|(e, c)| &p.eval(e) == c) {
        Ok(p)
    } else {
        Err(LadderError::NotPolynomial(what.to_string()))
    }
}

/// `[minus, plus]` as a polynomial in the shared Hamiltonian.
pub fn commutator_polynomial(minus: &LadderOp, plus: &LadderOp) -> Result<OperatorPoly, LadderError> {
    if minus.reference != plus.reference {
        return Err(LadderError::ReferenceMismatch);
    }
    let d = minus.order() + plus.order();
    fit_on_eigenbasis(&minus.reference, d / 2, d + 1, "commutator", |f| {
        minus.apply(&plus.apply(f)).sub(&plus.apply(&minus.apply(f)))
    })
}

/// `a ∘ b` as a polynomial in the shared Hamiltonian.
pub fn product_polynomial(a: &LadderOp, b: &LadderOp) -> Result<OperatorPoly, LadderError> {
    if a.reference != b.reference {
        return Err(LadderError::ReferenceMismatch);
    }
    let d = a.order() + b.order();
    fit_on_eigenbasis(&a.reference, d / 2, d + 1, "product", |f| a.apply(&b.apply(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::rat;
    use crate::schemes::predict_spectrum;

    fn roots_poly(roots: &[i64]) -> OperatorPoly {
        OperatorPoly::from_roots(&roots.iter().map(|&r| rat(r)).collect::<Vec<_>>())
    }

    #[test]
    fn single_negative_seed_family() {
        let fam = build_ladders(&"-3".parse().unwrap()).unwrap();
        for kind in [LadderKind::A, LadderKind::B, LadderKind::C] {
            let pair = fam.pairs().into_iter().find(|p| p.lowering.kind == kind).unwrap();
            let got = commutator_polynomial(&pair.lowering, &pair.raising).unwrap();
            assert_eq!(Some(got), expected_commutator(&fam, kind), "{kind}");
        }
        let prod = product_polynomial(&fam.a.raising, &fam.a.lowering).unwrap();
        assert_eq!(prod, roots_poly(&[-7, -3, 1, 3]));
        let red = reduction_check(&fam);
        let r = red.get("B-", "A-").unwrap();
        assert_eq!(r.cofactor, Some(roots_poly(&[-1, -5])));
    }

    #[test]
    fn kernel_of_c_lowering() {
        let s = "-3".parse().unwrap();
        let fam = build_ladders(&s).unwrap();
        let model = predict_spectrum(&s).unwrap();
        let k = kernel_report(&fam.c.lowering, &model, &rat(40));
        assert_eq!(k.energies(), vec![rat(11), rat(15)]);
        assert!(k.arrival_rule_holds && k.kernel_equals_arrival_set && k.closure_holds);
    }

    #[test]
    fn isotonic_sl2() {
        let (lo, hi) = isotonic_ladders(1);
        assert_eq!(lo.step, rat(-4));
        let p = commutator_polynomial(&lo, &hi).unwrap();
        assert_eq!(p.degree(), Some(1));
        let (c_lo, c_hi, steps) = isotonic_power_check(2).unwrap();
        assert!(c_lo.is_some() && c_hi.is_some() && steps);
    }
}
