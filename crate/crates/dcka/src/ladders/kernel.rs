use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::exact_core::{rat, Rat};
use crate::operators::map_state;
use crate::schemes::{Convention, SpectrumModel};
use crate::states::{osc, osc_state, EigenState, OscIndex};
use crate::wronskian::{wronskian_rat, QuasiRat};

use super::LadderOp;

/// Physical kernel member: energy in the `L_(+)` convention, band index
/// (0 = lowest) and position inside the band.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelMember {
    pub energy: Rat,
    pub band: usize,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub operator: String,
    pub step: Rat,
    /// Convention of every energy below.
    pub convention: Convention,
    pub cutoff: Rat,
    pub physical_members: Vec<KernelMember>,
    pub physical_checked: usize,
    /// Non-physical candidates found in the kernel, with a label.
    pub nonphysical_members: Vec<(Rat, String)>,
    pub nonphysical_checked: usize,
    /// Every state whose arrival level is outside the spectrum is annihilated.
    pub arrival_rule_holds: bool,
    /// The kernel is exactly the set of states with arrival outside the
    /// spectrum.
    pub kernel_equals_arrival_set: bool,
    /// Every non-annihilated image is proportional to the predicted state at
    /// the arrival level.
    pub closure_holds: bool,
}

impl KernelReport {
    pub fn energies(&self) -> Vec<Rat> {
        self.physical_members.iter().map(|m| m.energy.clone()).collect()
    }

    /// Members in the infinite band.
    pub fn infinite_band_count(&self, model: &SpectrumModel) -> usize {
        let last = model.bands(Convention::Plus).len() - 1;
        self.physical_members.iter().filter(|m| m.band == last).count()
    }
}

/// Physical eigenstate of the positive representative at `E_(+) = 2n+1`.
pub(crate) fn physical_state(model: &SpectrumModel, e_plus: &Rat) -> Option<EigenState> {
    let n = (e_plus - rat(1)) / rat(2);
    if !n.is_integer() || n < Rat::zero() {
        return None;
    }
    let n: i64 = num_traits::ToPrimitive::to_i64(&n.to_integer())?;
    map_state(&model.positive, &osc_state(n)).ok()
}

fn band_position(model: &SpectrumModel, e: &Rat) -> Option<(usize, usize)> {
    for (i, b) in model.bands(Convention::Plus).iter().enumerate() {
        let d = (e - &b.lowest) / rat(4);
        if d >= Rat::zero() && d.is_integer() {
            let k: usize = num_traits::ToPrimitive::to_usize(&d.to_integer()).unwrap();
            if b.count.map_or(true, |n| k < n) {
                return Some((i, k));
            }
        }
    }
    None
}

/// `W(seeds \ {j}) / W(seeds)` for each seed, with its energy.
fn inverse_states(seeds: &[OscIndex]) -> Vec<(Rat, QuasiRat)> {
    let fs: Vec<QuasiRat> = seeds.iter().map(|&s| osc(s).func).collect();
    let w = wronskian_rat(&fs);
    (0..seeds.len())
        .map(|j| {
            let rest: Vec<QuasiRat> =
                fs.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, f)| f.clone()).collect();
            (seeds[j].energy(), wronskian_rat(&rest).div(&w))
        })
        .collect()
}

/// Applies `op` to every predicted physical state with `E_(+) ≤ cutoff` and
/// to the named non-physical candidates: dressed non-physical oscillator
/// solutions and inverse seed states.
pub fn kernel_report(op: &LadderOp, model: &SpectrumModel, cutoff: &Rat) -> KernelReport {
    let shift = model.plus_minus_shift.clone();
    let levels = model.levels(Convention::Plus, cutoff);
    let results: Vec<(Rat, bool, bool, bool)> = levels
        .par_iter()
        .map(|e| {
            let st = physical_state(model, e).expect("predicted level has a mapped state");
            assert!(st.physical, "predicted level {e} maps to a non-physical state");
            let img = op.apply(&st.func);
            let arrival = e + &op.step;
            let arrival_in = model.contains(Convention::Plus, &arrival);
            let killed = img.is_zero();
            let closure = killed
                || (arrival_in
                    && physical_state(model, &arrival).map_or(false, |t| img.proportional(&t.func)));
            (e.clone(), killed, arrival_in, closure)
        })
        .collect();
    let mut physical_members = Vec::new();
    let mut arrival_rule_holds = true;
    let mut kernel_equals_arrival_set = true;
    let mut closure_holds = true;
    for (e, killed, arrival_in, closure) in &results {
        if *killed {
            let (band, position) = band_position(model, e).unwrap();
            physical_members.push(KernelMember { energy: e.clone(), band, position });
        }
        if !arrival_in && !killed {
            arrival_rule_holds = false;
        }
        if *killed == *arrival_in {
            kernel_equals_arrival_set = false;
        }
        closure_holds &= closure;
    }

    // Non-physical candidates, energies converted to L_(+).
    let mut cands: Vec<(Rat, String, QuasiRat)> = Vec::new();
    let r = &op.reference;
    let mut n = 0u32;
    loop {
        let e_minus = rat(-(2 * n as i64 + 1));
        if (&e_minus + &shift).abs() > *cutoff && rat(2 * n as i64 + 1) > *cutoff {
            break;
        }
        if let Some((e, f)) = r.eigenfunction(OscIndex::Wick(n)) {
            cands.push((e + &shift, format!("dressed psi_{n}^-"), f));
        }
        if n % 2 == 0 && rat(2 * n as i64 + 1) <= *cutoff {
            if let Ok(st) = map_state(&model.positive, &osc_state(n as i64)) {
                cands.push((st.energy.clone(), format!("mapped psi_{n}"), st.func));
            }
        }
        n += 1;
    }
    for (e, f) in inverse_states(&model.positive.seeds()) {
        cands.push((e, "inverse positive seed state".into(), f));
    }
    for (e, f) in inverse_states(&r_seeds(model)) {
        cands.push((e + &shift, "inverse negative seed state".into(), f));
    }
    let nonphysical_checked = cands.len();
    let nonphysical_members: Vec<(Rat, String)> = cands
        .into_par_iter()
        .filter(|(_, _, f)| op.apply(f).is_zero())
        .map(|(e, l, _)| (e, l))
        .collect();

    KernelReport {
        operator: op.name(),
        step: op.step.clone(),
        convention: Convention::Plus,
        cutoff: cutoff.clone(),
        physical_members,
        physical_checked: results.len(),
        nonphysical_members,
        nonphysical_checked,
        arrival_rule_holds,
        kernel_equals_arrival_set,
        closure_holds,
    }
}

fn r_seeds(model: &SpectrumModel) -> Vec<OscIndex> {
    crate::schemes::dual(&model.positive).map(|d| d.dual.seeds()).unwrap_or_default()
}
