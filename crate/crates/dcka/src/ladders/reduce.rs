use crate::exact_core::Rat;
use crate::operators::{chain_for_seeds, DiffOp, OperatorPoly, SchrodingerOp};
use crate::states::OscIndex;

use super::build::isotonic_ladder_ops;
use super::{LadderError, LadderFamily, LadderOp};

/// `high = low ∘ q(L)` for lowering operators, `high = q(L) ∘ low` for
/// raising ones, with `L = L_(-)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub high: String,
    pub low: String,
    /// `q` in `L_(-)`; `None` when no such factorization exists.
    pub cofactor: Option<OperatorPoly>,
    /// The same `q` written in `L_(+) = L_(-) + shift`.
    pub cofactor_plus: Option<OperatorPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub entries: Vec<Reduction>,
}

impl ReductionReport {
    pub fn get(&self, high: &str, low: &str) -> Option<&Reduction> {
        self.entries.iter().find(|r| r.high == high && r.low == low)
    }
}

/// Finds `q` with `high = low ∘ q(L)` (lowering) or `q(L) ∘ low` (raising)
/// on the eigenbasis. The difference has order at most `ord high`, so it is
/// checked on `ord high + 1` eigenfunctions.
fn factor(high: &LadderOp, low: &LadderOp) -> Option<OperatorPoly> {
    if high.step != low.step || high.reference != low.reference || low.order() > high.order() {
        return None;
    }
    let gap = high.order() - low.order();
    if gap % 2 == 1 {
        return None;
    }
    let deg = gap / 2;
    let nodes = high.reference.nodes(high.order() + deg + 2);
    let mut pts: Vec<(Rat, Rat)> = Vec::new();
    for (e, f) in &nodes {
        let h = high.apply(f);
        let l = low.apply(f);
        match (h.is_zero(), l.is_zero()) {
            (true, true) => continue,
            (false, true) => return None,
            _ => {}
        }
        let c = if h.is_zero() { Rat::from_integer(0.into()) } else { h.ratio_constant(&l)? };
        let at = if low.is_lowering() { e.clone() } else { e + &low.step };
        pts.push((at, c));
    }
    if pts.len() < deg + 1 {
        return None;
    }
    let q = OperatorPoly::interpolate(&pts[..deg + 1]);
    pts.iter().all(|(e, c)| &q.eval(e) == c).then_some(q)
}

/// Tries every lower-order member of the family as a factor of the
/// higher-order ones: `𝒜, ℬ` over `𝔅̃`, and `𝒜, ℬ` over each other.
pub fn reduction_check(fam: &LadderFamily) -> ReductionReport {
    let mut ops: Vec<&LadderOp> = vec![&fam.a.lowering, &fam.a.raising, &fam.b.lowering, &fam.b.raising];
    if let Some(bt) = &fam.b_tilde {
        ops.push(&bt.lowering);
        ops.push(&bt.raising);
    }
    let mut entries = Vec::new();
    for high in &ops {
        for low in &ops {
            if std::ptr::eq(*high, *low) || high.step != low.step || low.order() > high.order() {
                continue;
            }
            if high.kind == low.kind {
                continue;
            }
            let q = factor(high, low);
            let qp = q.as_ref().map(|q| q.translate(&-fam.shift.clone()));
            entries.push(Reduction { high: high.name(), low: low.name(), cofactor: q, cofactor_plus: qp });
        }
    }
    ReductionReport { entries }
}

/// `𝔸_m^- (𝔸_{-m}^-)^†` and `𝔸_{-m}^- (𝔸_m^-)^†` against `(𝒞_m^∓)^m`:
/// returns the constants `c_∓` with `𝒞̃_m^∓ = c_∓ (𝒞_m^∓)^m`, and whether
/// `[L_m^iso, 𝒞̃_m^±] = ±4m 𝒞̃_m^±` holds.
pub fn isotonic_power_check(m: u32) -> Result<(Option<Rat>, Option<Rat>, bool), LadderError> {
    let pos: Vec<OscIndex> = (0..m).map(|j| OscIndex::Phys(2 * j + 1)).collect();
    let neg: Vec<OscIndex> = (0..m).map(|j| OscIndex::Wick(2 * j + 1)).collect();
    let ap = chain_for_seeds(&pos);
    let an = chain_for_seeds(&neg);
    let lo = ap.then_left_of(&an.adjoint()).expand();
    let hi = an.then_left_of(&ap.adjoint()).expand();
    let (c_lo, c_hi) = isotonic_ladder_ops(m as i64);
    let mut plo = DiffOp::identity();
    let mut phi = DiffOp::identity();
    for _ in 0..m {
        plo = plo.compose(&c_lo);
        phi = phi.compose(&c_hi);
    }
    let h = SchrodingerOp::isotonic(m as i64, Rat::from_integer(0.into())).to_diffop();
    let step = Rat::from_integer((4 * m as i64).into());
    let steps = h.commutator(&lo) == lo.scale(&-step.clone()) && h.commutator(&hi) == hi.scale(&step);
    Ok((lo.ratio_constant(&plo), hi.ratio_constant(&phi), steps))
}
