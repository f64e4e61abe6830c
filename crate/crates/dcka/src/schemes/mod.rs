//! Seed schemes, duality, regularity and predicted spectra.
//!
//! A scheme is a list of signed indices: `n` stands for `ψ_n` and `-n` for
//! `ψ_n^-`. A purely positive scheme and a purely negative one are dual when
//! they generate the same Hamiltonian up to an additive constant.
//!
//! ```
//! use dcka::schemes::{dual, Scheme};
//!
//! let s: Scheme = "1,4,5,10,11".parse().unwrap();
//! let d = dual(&s).unwrap();
//! assert_eq!(d.dual.to_string(), "-2,-3,-4,-5,-8,-9,-11");
//! assert_eq!(d.shift, dcka::exact_core::rat(24));
//! ```

mod maya;
mod spectrum;

use std::fmt;
use std::str::FromStr;

use crate::exact_core::{isolate_positive_roots, positive_real_root_count, rat, Rat};
use crate::states::OscIndex;
use crate::wronskian::{seed_wronskian, structure_decompose, WronskianDecomposition};

pub use maya::MayaDiagram;
pub use spectrum::{n_infinity, predict_spectrum, Band, Convention, SpectrumModel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemeError {
    #[error("cannot parse scheme entry {0:?}")]
    Parse(String),
    #[error("index {0} appears twice")]
    Duplicate(i64),
    #[error("scheme mixes positive and negative seeds; reduce it first")]
    Mixed,
    #[error("scheme is singular: the Wronskian has {0} zero(s) on the positive half-line")]
    Singular(usize),
    #[error("scheme is empty")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    Positive,
    Negative,
    Mixed,
}

/// Sorted, duplicate-free seed list: non-negative indices ascending, then
/// negative indices by increasing magnitude.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scheme {
    pos: Vec<u32>,
    neg: Vec<u32>,
}

impl Scheme {
    /// Builds a scheme from signed indices in any order.
    pub fn new(indices: &[i64]) -> Result<Self, SchemeError> {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for &i in indices {
            if i >= 0 {
                pos.push(i as u32);
            } else {
                neg.push((-i) as u32);
            }
        }
        pos.sort_unstable();
        neg.sort_unstable();
        for w in pos.windows(2) {
            if w[0] == w[1] {
                return Err(SchemeError::Duplicate(w[0] as i64));
            }
        }
        for w in neg.windows(2) {
            if w[0] == w[1] {
                return Err(SchemeError::Duplicate(-(w[0] as i64)));
            }
        }
        Ok(Scheme { pos, neg })
    }

    pub fn empty() -> Self {
        Scheme { pos: Vec::new(), neg: Vec::new() }
    }

    pub fn from_seeds(seeds: &[OscIndex]) -> Option<Self> {
        let mut v = Vec::new();
        for s in seeds {
            v.push(s.signed()?);
        }
        Scheme::new(&v).ok()
    }

    /// Signed indices in canonical order.
    pub fn indices(&self) -> Vec<i64> {
        self.pos
            .iter()
            .map(|&n| n as i64)
            .chain(self.neg.iter().map(|&n| -(n as i64)))
            .collect()
    }

    pub fn positive_part(&self) -> &[u32] {
        &self.pos
    }

    pub fn negative_part(&self) -> &[u32] {
        &self.neg
    }

    pub fn seeds(&self) -> Vec<OscIndex> {
        self.pos
            .iter()
            .map(|&n| OscIndex::Phys(n))
            .chain(self.neg.iter().map(|&n| OscIndex::Wick(n)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `None` for the empty scheme.
    pub fn sign_class(&self) -> Option<SignClass> {
        match (self.pos.is_empty(), self.neg.is_empty()) {
            (true, true) => None,
            (false, true) => Some(SignClass::Positive),
            (true, false) => Some(SignClass::Negative),
            (false, false) => Some(SignClass::Mixed),
        }
    }

    /// Largest index magnitude `n_m`.
    pub fn max_index(&self) -> u32 {
        self.pos.iter().chain(self.neg.iter()).copied().max().unwrap_or(0)
    }

    pub fn maya(&self) -> MayaDiagram {
        MayaDiagram::from_seeds(&self.seeds()).expect("schemes have no repeated seeds")
    }

    pub fn contains(&self, idx: i64) -> bool {
        if idx >= 0 {
            self.pos.binary_search(&(idx as u32)).is_ok()
        } else {
            self.neg.binary_search(&((-idx) as u32)).is_ok()
        }
    }
}

impl FromStr for Scheme {
    type Err = SchemeError;

    /// Comma-separated signed integers; whitespace is ignored. `-0` is
    /// rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let cleaned = cleaned.trim_start_matches('(').trim_end_matches(')');
        if cleaned.is_empty() {
            return Err(SchemeError::Empty);
        }
        let mut v = Vec::new();
        for tok in cleaned.split(',') {
            if tok == "-0" {
                return Err(SchemeError::Parse(tok.to_string()));
            }
            let n: i64 = tok.parse().map_err(|_| SchemeError::Parse(tok.to_string()))?;
            v.push(n);
        }
        Scheme::new(&v)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scheme({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityResult {
    pub dual: Scheme,
    /// `L_(+) - L_(-)`.
    pub shift: Rat,
    /// `n_m + 1`: the dual Wronskians differ by `e^{±(n_m+1)x²/2}`.
    pub gaussian_exponent: i64,
    pub n_plus: usize,
    pub n_minus: usize,
}

/// Dual scheme by the mirror rule: for positive `s` with top index `n_m`,
/// the dual holds `-(n_m - j)` for each `j ∈ {0,…,n_m}` missing from `s`;
/// for negative `s`, `p ∈ {1,…,n_m}` is kept iff `-(n_m - p)` is absent.
pub fn dual(s: &Scheme) -> Result<DualityResult, SchemeError> {
    let nm = s.max_index();
    let (d, n_plus, n_minus) = match s.sign_class() {
        None => return Err(SchemeError::Empty),
        Some(SignClass::Mixed) => return Err(SchemeError::Mixed),
        Some(SignClass::Positive) => {
            let v: Vec<i64> = (0..=nm)
                .filter(|j| !s.contains(*j as i64))
                .map(|j| -((nm - j) as i64))
                .collect();
            let d = Scheme::new(&v).unwrap();
            let n = d.len();
            (d, s.len(), n)
        }
        Some(SignClass::Negative) => {
            let v: Vec<i64> = (1..=nm)
                .filter(|p| p == &nm || !s.contains(-((nm - p) as i64)))
                .map(|p| p as i64)
                .collect();
            let d = Scheme::new(&v).unwrap();
            let n = d.len();
            (d, n, s.len())
        }
    };
    Ok(DualityResult {
        dual: d,
        shift: rat(2 * (nm as i64 + 1)),
        gaussian_exponent: nm as i64 + 1,
        n_plus,
        n_minus,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub positive: Scheme,
    /// `V_positive - V_input`.
    pub shift: Rat,
}

/// Equivalent purely positive scheme without `ψ_0`, obtained by moving the
/// Maya diagram down to its first hole. Positive schemes free of `ψ_0` are
/// returned unchanged.
pub fn reduce_mixed(s: &Scheme) -> Reduction {
    if (s.sign_class() == Some(SignClass::Positive) && !s.contains(0)) || s.is_empty() {
        return Reduction { positive: s.clone(), shift: rat(0) };
    }
    reduce_seeds(&s.seeds())
}

/// [`reduce_mixed`] for raw seed lists, including `ψ_0^-`.
pub(crate) fn reduce_seeds(seeds: &[OscIndex]) -> Reduction {
    let m = MayaDiagram::from_seeds(seeds).expect("repeated seed");
    let (p, h) = m.positive_form();
    Reduction {
        positive: Scheme::from_seeds(&p.seeds()).expect("positive form has signed indices"),
        shift: rat(-2 * h),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Regular,
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub verdict: Verdict,
    pub decomposition: WronskianDecomposition,
    pub positive_roots: usize,
    /// Isolating intervals for the roots of the core on `(0, ∞)`.
    pub root_intervals: Vec<(Rat, Rat)>,
}

/// Regular iff the Wronskian core has no zero on `(0, ∞)`. The empty
/// scheme is the oscillator itself and is regular.
pub fn regularity(s: &Scheme) -> RegularityReport {
    let w = seed_wronskian(&s.seeds());
    let d = structure_decompose(&w);
    let n = positive_real_root_count(&d.core);
    let intervals = if n > 0 { isolate_positive_roots(&d.core) } else { Vec::new() };
    RegularityReport {
        verdict: if n == 0 { Verdict::Regular } else { Verdict::Singular },
        decomposition: d,
        positive_roots: n,
        root_intervals: intervals,
    }
}

pub fn is_regular(s: &Scheme) -> bool {
    regularity(s).verdict == Verdict::Regular
}

/// Every positive scheme with indices in `1..=max`.
pub fn positive_schemes(max: u32) -> Vec<Scheme> {
    let n = max as usize;
    (1u64..(1u64 << n))
        .map(|mask| {
            let v: Vec<i64> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as i64 + 1).collect();
            Scheme::new(&v).unwrap()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: Scheme = " -3, 1 ,4".parse().unwrap();
        assert_eq!(s.to_string(), "1,4,-3");
        assert_eq!(s.sign_class(), Some(SignClass::Mixed));
        assert!("1,1".parse::<Scheme>().is_err());
        assert!("-0".parse::<Scheme>().is_err());
        assert!("a".parse::<Scheme>().is_err());
    }

    #[test]
    fn small_duals() {
        let d = dual(&"-3".parse().unwrap()).unwrap();
        assert_eq!(d.dual.to_string(), "1,2,3");
        assert_eq!(d.shift, rat(8));
        let d = dual(&"1,3".parse().unwrap()).unwrap();
        assert_eq!(d.dual.to_string(), "-1,-3");
    }

    #[test]
    fn positive_input_reduces_to_itself() {
        let s: Scheme = "1,4,5".parse().unwrap();
        assert_eq!(reduce_mixed(&s), Reduction { positive: s, shift: rat(0) });
    }
}
