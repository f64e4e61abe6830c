use std::collections::{BTreeMap, VecDeque};

use num_traits::Signed;
use rayon::prelude::*;

use crate::exact_core::{rat, Rat};
use crate::schemes::{Convention, SpectrumModel};

use super::kernel::physical_state;
use super::{LadderFamily, LadderOp};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetVerdict {
    /// Ladder pairs in the set, e.g. `"A,C"`.
    pub set: String,
    pub strongly_connected: bool,
    /// Strongly connected components among the levels up to the cutoff.
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    /// Energies in the `L_(+)` convention.
    pub cutoff: Rat,
    pub levels: Vec<Rat>,
    pub bands: usize,
    pub verdicts: Vec<SetVerdict>,
    /// Non-annihilated images that left the spectrum or disagreed with the
    /// predicted state; empty when the ladders behave.
    pub violations: Vec<String>,
}

impl ConnectivityReport {
    pub fn verdict(&self, set: &str) -> Option<&SetVerdict> {
        self.verdicts.iter().find(|v| v.set == set)
    }
}

/// Six levels above the bottom of the infinite band, raised when a ladder
/// step is longer than that (`L_(+)` convention).
pub fn default_cutoff(fam: &LadderFamily, model: &SpectrumModel) -> Rat {
    let step = fam.c.raising.step.abs();
    let bottom = model.infinite_bottom(Convention::Plus);
    &bottom + std::cmp::max(rat(24), step)
}

/// Directed graph on physical levels: an edge `E → E + step` for each ladder
/// that does not annihilate the state at `E`, found by exact application on
/// levels up to `cutoff + 2·max step`. A set is spectrum generating when
/// every pair of levels `≤ cutoff` is mutually reachable.
pub fn spectrum_generating_check(fam: &LadderFamily, model: &SpectrumModel, cutoff: &Rat) -> ConnectivityReport {
    let max_step = fam.pairs().iter().map(|p| p.raising.step.clone()).max().unwrap();
    let ext = cutoff + &max_step * rat(2);
    let all_levels = model.levels(Convention::Plus, &ext);
    let index: BTreeMap<Rat, usize> = all_levels.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let states: Vec<_> = all_levels
        .par_iter()
        .map(|e| physical_state(model, e).expect("predicted level has a mapped state"))
        .collect();

    let ops: Vec<(&str, &LadderOp)> = vec![
        ("A", &fam.a.lowering),
        ("A", &fam.a.raising),
        ("B", &fam.b.lowering),
        ("B", &fam.b.raising),
        ("C", &fam.c.lowering),
        ("C", &fam.c.raising),
    ];
    let jobs: Vec<(usize, usize)> =
        (0..ops.len()).flat_map(|o| (0..all_levels.len()).map(move |i| (o, i))).collect();
    let results: Vec<(usize, usize, Option<usize>, Option<String>)> = jobs
        .par_iter()
        .map(|&(o, i)| {
            let op = ops[o].1;
            let img = op.apply(&states[i].func);
            if img.is_zero() {
                return (o, i, None, None);
            }
            let arrival = &all_levels[i] + &op.step;
            match index.get(&arrival) {
                Some(&j) => {
                    let bad = (!img.proportional(&states[j].func))
                        .then(|| format!("{} at {}: image is not the state at {}", op.name(), all_levels[i], arrival));
                    (o, i, Some(j), bad)
                }
                None if model.contains(Convention::Plus, &arrival) => (o, i, None, None),
                None => (o, i, None, Some(format!("{} at {}: arrival {} is not a level", op.name(), all_levels[i], arrival))),
            }
        })
        .collect();

    let violations: Vec<String> = results.iter().filter_map(|r| r.3.clone()).collect();
    let n_inner = all_levels.iter().filter(|e| *e <= cutoff).count();
    let sets: [(&str, &[&str]); 5] =
        [("A,C", &["A", "C"]), ("B,C", &["B", "C"]), ("A", &["A"]), ("B", &["B"]), ("C", &["C"])];
    let verdicts = sets
        .iter()
        .map(|(name, kinds)| {
            let mut adj = vec![Vec::new(); all_levels.len()];
            for (o, i, j, _) in &results {
                if let Some(j) = j {
                    if kinds.contains(&ops[*o].0) {
                        adj[*i].push(*j);
                    }
                }
            }
            let reach: Vec<Vec<bool>> = (0..n_inner).map(|s| bfs(&adj, s)).collect();
            let mut comp = vec![usize::MAX; n_inner];
            let mut count = 0;
            for a in 0..n_inner {
                if comp[a] != usize::MAX {
                    continue;
                }
                for b in a..n_inner {
                    if reach[a][b] && reach[b][a] {
                        comp[b] = count;
                    }
                }
                count += 1;
            }
            SetVerdict { set: name.to_string(), strongly_connected: count == 1, components: count }
        })
        .collect();

    ConnectivityReport {
        cutoff: cutoff.clone(),
        levels: all_levels.into_iter().take(n_inner).collect(),
        bands: model.bands(Convention::Plus).len(),
        verdicts,
        violations,
    }
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[s] = true;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                q.push_back(v);
            }
        }
    }
    seen
}

/// Within each finite band of `l` states, `(ℬ^±)^l` annihilates every state
/// of the band.
pub fn band_nilpotency(fam: &LadderFamily, model: &SpectrumModel) -> bool {
    model.bands(Convention::Plus).iter().filter(|b| b.count.is_some()).all(|b| {
        let l = b.count.unwrap();
        (0..l).all(|k| {
            let e = &b.lowest + rat(4 * k as i64);
            let st = physical_state(model, &e).unwrap();
            [&fam.b.lowering, &fam.b.raising].iter().all(|op| {
                let mut f = st.func.clone();
                for _ in 0..l {
                    f = op.apply(&f);
                }
                f.is_zero()
            })
        })
    })
}
