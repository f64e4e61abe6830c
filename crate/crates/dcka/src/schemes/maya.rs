use std::collections::BTreeSet;

use crate::states::OscIndex;

/// Subset of the integers containing every integer below some bound and
/// none above some other bound.
///
/// Seed `ψ_n` fills position `n`; seed `ψ_n^-` empties position `-n-1`,
/// starting from the vacuum `{…, -2, -1}`. Translating a diagram by `t`
/// changes the potential by `2t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MayaDiagram {
    /// Filled positions at or above zero.
    filled: BTreeSet<i64>,
    /// Empty positions below zero.
    holes: BTreeSet<i64>,
}

impl MayaDiagram {
    pub fn vacuum() -> Self {
        MayaDiagram { filled: BTreeSet::new(), holes: BTreeSet::new() }
    }

    /// Diagram of a seed list; a seed that would fill an already filled slot
    /// (or empty an empty one) is a repeated seed and yields `None`.
    pub fn from_seeds(seeds: &[OscIndex]) -> Option<Self> {
        let mut m = MayaDiagram::vacuum();
        for &s in seeds {
            match s {
                OscIndex::Phys(n) => {
                    if !m.filled.insert(n as i64) {
                        return None;
                    }
                }
                OscIndex::Wick(n) => {
                    if !m.holes.insert(-(n as i64) - 1) {
                        return None;
                    }
                }
            }
        }
        Some(m)
    }

    pub fn contains(&self, p: i64) -> bool {
        if p < 0 {
            !self.holes.contains(&p)
        } else {
            self.filled.contains(&p)
        }
    }

    /// Smallest empty position.
    pub fn smallest_hole(&self) -> i64 {
        if let Some(&h) = self.holes.iter().next() {
            return h;
        }
        (0..).find(|p| !self.filled.contains(p)).unwrap()
    }

    /// Largest filled position.
    pub fn largest_filled(&self) -> i64 {
        if let Some(&f) = self.filled.iter().next_back() {
            return f;
        }
        (1..).map(|k| -k).find(|p| !self.holes.contains(p)).unwrap()
    }

    /// `{p - t : p ∈ self}`.
    pub fn shifted_down(&self, t: i64) -> MayaDiagram {
        let lo = self.smallest_hole().min(0);
        let hi = self.largest_filled().max(-1);
        let mut out = MayaDiagram::vacuum();
        let a = (lo - t).min(hi - t).min(-1) - 1;
        let b = (lo - t).max(hi - t).max(0) + 1;
        for p in a..=b {
            let src = p + t;
            let filled = if src < lo { true } else if src > hi { false } else { self.contains(src) };
            if p < 0 && !filled {
                out.holes.insert(p);
            } else if p >= 0 && filled {
                out.filled.insert(p);
            }
        }
        out
    }

    /// Seeds of this diagram, physical first.
    pub fn seeds(&self) -> Vec<OscIndex> {
        let mut v: Vec<OscIndex> = self.filled.iter().map(|&n| OscIndex::Phys(n as u32)).collect();
        v.extend(self.holes.iter().rev().map(|&h| OscIndex::Wick((-h - 1) as u32)));
        v
    }

    /// Equivalent diagram with only physical seeds (and no `ψ_0`), with the
    /// translation `h` used: `V_self = V_result + 2h`.
    pub fn positive_form(&self) -> (MayaDiagram, i64) {
        let h = self.smallest_hole();
        (self.shifted_down(h), h)
    }

    /// Equivalent diagram with only Wick-rotated seeds, with translation `t`:
    /// `V_self = V_result + 2t`.
    pub fn negative_form(&self) -> (MayaDiagram, i64) {
        let t = self.largest_filled() + 1;
        (self.shifted_down(t), t)
    }
}
