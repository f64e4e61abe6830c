use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exact_core::{rat, Poly, Rat, RatFunc};
use crate::operators::{
    a_minus, a_plus, chain_for_seeds, native_potential_for_seeds, DiffOp, OpChain,
    OperatorError, OperatorPoly, SchrodingerOp,
};
use crate::schemes::{dual, is_regular, reduce_mixed, regularity, Convention, Scheme, SchemeError};
use crate::states::OscIndex;

use super::{HamiltonianRef, LadderError, LadderKind, LadderOp};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderPair {
    pub lowering: LadderOp,
    pub raising: LadderOp,
}

/// The ladder operators of a deformed system, all referred to `L_(-)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderFamily {
    pub input: Scheme,
    /// Positive representative.
    pub positive: Scheme,
    /// Its dual negative scheme.
    pub negative: Scheme,
    /// `L_(+) - L_(-)`.
    pub shift: Rat,
    pub reference: Arc<HamiltonianRef>,
    /// `𝔸_(+)`, mapping oscillator solutions to eigenfunctions.
    pub plus_intertwiner: OpChain,
    pub a: LadderPair,
    pub b: LadderPair,
    /// Gluing ladders: `C` when the top positive index is odd, `C~` when even.
    pub c: LadderPair,
    /// Isotonic ladders dressed by a partial intertwiner, when the positive
    /// scheme starts with `1, 3, …, 2m-1`.
    pub b_tilde: Option<LadderPair>,
}

impl LadderFamily {
    pub fn n_plus(&self) -> usize {
        self.positive.len()
    }

    pub fn n_minus(&self) -> usize {
        self.negative.len()
    }

    pub fn top_index(&self) -> u32 {
        self.positive.max_index()
    }

    pub fn pairs(&self) -> Vec<&LadderPair> {
        let mut v = vec![&self.a, &self.b, &self.c];
        if let Some(bt) = &self.b_tilde {
            v.push(bt);
        }
        v
    }

    /// `P(x) = Π (x - 2n_k - 1)` over the positive scheme.
    pub fn p_poly(&self) -> Poly {
        product_over(self.positive.positive_part(), -1, -1)
    }

    /// `R(x) = Π (x + 2n_l + 1)` over the negative scheme.
    pub fn r_poly(&self) -> Poly {
        product_over(self.negative.negative_part(), 1, 1)
    }
}

fn product_over(idx: &[u32], sign: i64, c: i64) -> Poly {
    let mut p = Poly::one();
    for &n in idx {
        p = &p * &Poly::from_coeffs(vec![rat(sign * 2 * n as i64 + c), Rat::one()]);
    }
    p
}

fn make(kind: LadderKind, chain: OpChain, step: Rat, r: &Arc<HamiltonianRef>) -> Result<LadderOp, LadderError> {
    let op = LadderOp { kind, chain, step, reference: Arc::clone(r) };
    if !op.certify_step() {
        return Err(LadderError::StepFailed(op.name()));
    }
    Ok(op)
}

fn sandwich(outer: &OpChain, middle: Vec<DiffOp>, inner: &OpChain) -> OpChain {
    outer.then_left_of(&OpChain::from_factors(middle)).then_left_of(&inner.adjoint())
}

/// `𝒞_m^- = -(a^-)² + m(m+1)/x²` and `𝒞_m^+ = -(a^+)² + m(m+1)/x²`.
pub(crate) fn isotonic_ladder_ops(m: i64) -> (DiffOp, DiffOp) {
    let c = DiffOp::mul_by(RatFunc::monomial(rat(m * (m + 1)), -2));
    let lo = a_minus().compose(&a_minus()).neg().add(&c);
    let hi = a_plus().compose(&a_plus()).neg().add(&c);
    (lo, hi)
}

/// Second-order ladders of `L_m^iso`, step `∓4`. The reference Hamiltonian
/// is `L_m^iso` itself, with eigenfunctions `𝔸_m^- φ`.
pub fn isotonic_ladders(m: u32) -> (LadderOp, LadderOp) {
    let seeds: Vec<OscIndex> = (0..m).map(|j| OscIndex::Phys(2 * j + 1)).collect();
    let r = Arc::new(HamiltonianRef {
        hamiltonian: SchrodingerOp::isotonic(m as i64, Rat::zero()),
        dressing: chain_for_seeds(&seeds),
        energy_offset: rat(-2 * m as i64),
        convention: Convention::Native,
    });
    let (lo, hi) = isotonic_ladder_ops(m as i64);
    let lo = LadderOp { kind: LadderKind::Cm, chain: OpChain::from_op(lo), step: rat(-4), reference: Arc::clone(&r) };
    let hi = LadderOp { kind: LadderKind::Cm, chain: OpChain::from_op(hi), step: rat(4), reference: r };
    (lo, hi)
}

/// Builds and certifies `𝒜^±`, `ℬ^±`, `𝒞^±` (or `𝒞̃^±`) and, when
/// available, `𝔅̃^±`.
pub fn build_ladders(s: &Scheme) -> Result<LadderFamily, LadderError> {
    if s.is_empty() {
        return Err(SchemeError::Empty.into());
    }
    if !is_regular(s) {
        return Err(OperatorError::Scheme(SchemeError::Singular(regularity(s).positive_roots)).into());
    }
    let positive = reduce_mixed(s).positive;
    if positive.is_empty() {
        return Err(SchemeError::Empty.into());
    }
    let d = dual(&positive)?;
    let negative = d.dual;
    let shift = d.shift;
    let minus_chain = chain_for_seeds(&negative.seeds());
    let reference = Arc::new(HamiltonianRef {
        hamiltonian: native_potential_for_seeds(&negative.seeds()),
        dressing: minus_chain.clone(),
        energy_offset: Rat::zero(),
        convention: Convention::Minus,
    });
    let plus_chain = chain_for_seeds(&positive.seeds());
    let r = &reference;
    let am = a_minus();
    let ap = a_plus();

    let a = LadderPair {
        lowering: make(LadderKind::A, sandwich(&minus_chain, vec![am.clone(), am.clone()], &minus_chain), rat(-4), r)?,
        raising: make(LadderKind::A, sandwich(&minus_chain, vec![ap.clone(), ap.clone()], &minus_chain), rat(4), r)?,
    };
    let b = LadderPair {
        lowering: make(LadderKind::B, sandwich(&plus_chain, vec![am.clone(), am.clone()], &plus_chain), rat(-4), r)?,
        raising: make(LadderKind::B, sandwich(&plus_chain, vec![ap.clone(), ap.clone()], &plus_chain), rat(4), r)?,
    };
    let c = if positive.max_index() % 2 == 1 {
        LadderPair {
            lowering: make(LadderKind::C, plus_chain.then_left_of(&minus_chain.adjoint()), -shift.clone(), r)?,
            raising: make(LadderKind::C, minus_chain.then_left_of(&plus_chain.adjoint()), shift.clone(), r)?,
        }
    } else {
        let step = &shift - rat(2);
        LadderPair {
            lowering: make(LadderKind::CTilde, sandwich(&plus_chain, vec![ap], &minus_chain), -step.clone(), r)?,
            raising: make(LadderKind::CTilde, sandwich(&minus_chain, vec![am], &plus_chain), step, r)?,
        }
    };

    let m = (0..).take_while(|j| positive.contains(2 * j + 1)).count();
    let b_tilde = if m == 0 {
        None
    } else {
        let mut ordered: Vec<OscIndex> = (0..m as u32).map(|j| OscIndex::Phys(2 * j + 1)).collect();
        let rest: Vec<OscIndex> = positive.seeds().into_iter().filter(|sd| !ordered.contains(sd)).collect();
        ordered.extend(rest);
        let full = chain_for_seeds(&ordered);
        let partial = OpChain::from_factors(full.factors()[..ordered.len() - m].to_vec());
        let (lo, hi) = isotonic_ladder_ops(m as i64);
        Some(LadderPair {
            lowering: make(LadderKind::BTilde, sandwich(&partial, vec![lo], &partial), rat(-4), r)?,
            raising: make(LadderKind::BTilde, sandwich(&partial, vec![hi], &partial), rat(4), r)?,
        })
    };

    Ok(LadderFamily {
        input: s.clone(),
        positive,
        negative,
        shift,
        reference,
        plus_intertwiner: plus_chain,
        a,
        b,
        c,
        b_tilde,
    })
}

/// Closed-form commutator `[lowering, raising]` of a family pair, as a
/// polynomial in `L = L_(-)`, with `N = n_+ + n_-`:
///
/// * `A`: `F(L) - F(L-4)`, `F(x) = (x+1)(x+3) R(x) R(x+4)`;
/// * `B`: `G(L+2N) - G(L+2N-4)`, `G(x) = (x+1)(x+3) P(x+4) P(x)`;
/// * `C`: `(RP)(L+2N) - (RP)(L)`;
/// * `C~`: `H(L+2N-2) - H(L)`, `H(x) = (x+1) R(x) P(x+2)`.
pub fn expected_commutator(fam: &LadderFamily, kind: LadderKind) -> Option<OperatorPoly> {
    let p = fam.p_poly();
    let r = fam.r_poly();
    let two_n = rat(2 * (fam.n_plus() + fam.n_minus()) as i64);
    let x13 = Poly::from_ints(&[3, 4, 1]);
    let diff = |f: &Poly, a: Rat, b: Rat| OperatorPoly::new(&f.translate(&a) - &f.translate(&b));
    match kind {
        LadderKind::A => {
            let f = &(&x13 * &r) * &r.translate(&rat(4));
            Some(diff(&f, rat(0), rat(-4)))
        }
        LadderKind::B => {
            let g = &(&x13 * &p.translate(&rat(4))) * &p;
            Some(diff(&g, two_n.clone(), &two_n - rat(4)))
        }
        LadderKind::C => Some(diff(&(&r * &p), two_n, rat(0))),
        LadderKind::CTilde => {
            let h = &(&Poly::from_ints(&[1, 1]) * &r) * &p.translate(&rat(2));
            Some(diff(&h, &two_n - rat(2), rat(0)))
        }
        _ => None,
    }
}
