use std::fmt;

use num_traits::Zero;

use crate::exact_core::{rat, Rat};

use super::{dual, is_regular, reduce_mixed, Scheme, SchemeError, SignClass};

/// Which Hamiltonian the energies refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    /// The operator of the positive representative, `L_(+)`.
    Plus,
    /// The operator of the dual negative scheme, `L_(-)`.
    Minus,
    /// `-d² + x² - 2(ln W)''` for the input scheme itself.
    Native,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Plus => "L_(+)",
            Convention::Minus => "L_(-)",
            Convention::Native => "native",
        })
    }
}

/// Run of levels `lowest, lowest+4, …`; `count = None` for the infinite band.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Band {
    pub lowest: Rat,
    pub count: Option<usize>,
}

/// Physical spectrum of a regular scheme: finite valence bands followed by
/// one infinite band, all with spacing 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumModel {
    plus_bands: Vec<Band>,
    /// Positive representative of the input.
    pub positive: Scheme,
    /// `E_(+) - E_(-)`.
    pub plus_minus_shift: Rat,
    /// `E_native - E_(+)`.
    pub native_offset: Rat,
    /// The input's own convention expressed as `Plus` or `Minus` when it
    /// coincides with one of them, `Native` otherwise.
    pub native: Convention,
}

impl SpectrumModel {
    /// `E_conv - E_(+)`.
    pub fn offset(&self, c: Convention) -> Rat {
        match c {
            Convention::Plus => Rat::zero(),
            Convention::Minus => -self.plus_minus_shift.clone(),
            Convention::Native => self.native_offset.clone(),
        }
    }

    pub fn bands(&self, c: Convention) -> Vec<Band> {
        let off = self.offset(c);
        self.plus_bands
            .iter()
            .map(|b| Band { lowest: &b.lowest + &off, count: b.count })
            .collect()
    }

    /// Every predicted level `≤ cutoff`, ascending.
    pub fn levels(&self, c: Convention, cutoff: &Rat) -> Vec<Rat> {
        let mut out = Vec::new();
        for b in self.bands(c) {
            let mut e = b.lowest.clone();
            let mut k = 0;
            while &e <= cutoff && b.count.map_or(true, |n| k < n) {
                out.push(e.clone());
                e += rat(4);
                k += 1;
            }
        }
        out
    }

    /// Number of levels in finite bands.
    pub fn valence_count(&self) -> usize {
        self.plus_bands.iter().filter_map(|b| b.count).sum()
    }

    /// Bottom of the infinite band.
    pub fn infinite_bottom(&self, c: Convention) -> Rat {
        &self.plus_bands.last().unwrap().lowest + &self.offset(c)
    }

    pub fn contains(&self, c: Convention, e: &Rat) -> bool {
        let off = self.offset(c);
        let ep = e - &off;
        self.plus_bands.iter().any(|b| {
            let d = &ep - &b.lowest;
            if d < Rat::zero() || !(&d / rat(4)).is_integer() {
                return false;
            }
            match b.count {
                None => true,
                Some(n) => d < rat(4 * n as i64),
            }
        })
    }
}

/// Half-oscillator levels `4l + 3` with those of odd seeds removed, grouped
/// into runs. Energies come back in the input's own convention via
/// [`SpectrumModel::bands`] with [`Convention::Native`].
pub fn predict_spectrum(s: &Scheme) -> Result<SpectrumModel, SchemeError> {
    if !s.is_empty() && !is_regular(s) {
        let r = super::regularity(s);
        return Err(SchemeError::Singular(r.positive_roots));
    }
    let (positive, native_offset, native) = match s.sign_class() {
        None => (s.clone(), Rat::zero(), Convention::Plus),
        Some(SignClass::Positive) if !s.contains(0) => (s.clone(), Rat::zero(), Convention::Plus),
        Some(SignClass::Negative) => {
            let d = dual(s)?;
            (d.dual, -d.shift, Convention::Minus)
        }
        Some(_) => {
            let r = reduce_mixed(s);
            (r.positive, -r.shift, Convention::Native)
        }
    };
    let removed: Vec<i64> = positive
        .positive_part()
        .iter()
        .filter(|&&n| n % 2 == 1)
        .map(|&n| 2 * n as i64 + 1)
        .collect();
    let top = removed.iter().copied().max().unwrap_or(-1);
    let mut bands: Vec<Band> = Vec::new();
    let mut e = 3i64;
    let mut run: Option<(i64, usize)> = None;
    while e <= top + 4 {
        if removed.contains(&e) {
            if let Some((lo, n)) = run.take() {
                bands.push(Band { lowest: rat(lo), count: Some(n) });
            }
        } else {
            run = Some(match run {
                Some((lo, n)) => (lo, n + 1),
                None => (e, 1),
            });
        }
        e += 4;
    }
    let lo = run.map_or(top + 4, |(lo, _)| lo);
    bands.push(Band { lowest: rat(lo), count: None });
    let plus_minus_shift = if positive.is_empty() {
        rat(0)
    } else {
        rat(2 * (positive.max_index() as i64 + 1))
    };
    Ok(SpectrumModel { plus_bands: bands, positive, plus_minus_shift, native_offset, native })
}

/// Number of infinite-band states annihilated by the gluing lowering ladder:
/// `(n_+ + n_-)/2 - n_v` when the top positive index is odd,
/// `(n_+ + n_- - 1)/2 - n_v` when it is even.
pub fn n_infinity(s: &Scheme) -> Result<usize, SchemeError> {
    let model = predict_spectrum(s)?;
    let p = &model.positive;
    if p.is_empty() {
        return Err(SchemeError::Empty);
    }
    let d = dual(p)?;
    let total = d.n_plus + d.n_minus;
    let half = if p.max_index() % 2 == 1 { total / 2 } else { (total - 1) / 2 };
    Ok(half - model.valence_count())
}
