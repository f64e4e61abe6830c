//! Wronskians of quasi-polynomials and quasi-rational functions.
//!
//! For inputs `f_j = b_j e^{k_j x²/2}` the Gaussian factors pull out of the
//! determinant, leaving `det[D_j^i b_j]` with `D_j = d/dx + k_j x`. Columns
//! are scaled to integer polynomials and the determinant is taken with
//! fraction-free Bareiss elimination over `Z[x]`.
//!
//! ```
//! use dcka::states::osc_state;
//! use dcka::wronskian::{structure_decompose, wronskian};
//!
//! let w = wronskian(&[osc_state(-3).func.to_quasi_poly().unwrap()]);
//! let d = structure_decompose(&w);
//! assert_eq!((d.origin_power, d.gauss_weight), (1, 1));
//! assert_eq!(d.core.to_string(), "2x^2 + 3");
//! ```

mod quasirat;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::exact_core::ipoly::{self, IPoly};
use crate::exact_core::{LaurentPoly, Poly, Rat, RatFunc};
use crate::states::{EigenState, OscIndex, QuasiPoly};

pub use quasirat::QuasiRat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WronskianError {
    #[error("seed and probe energies must be pairwise distinct")]
    DegenerateEnergies,
    #[error("need at least one seed")]
    NoSeeds,
}

/// `constant · x^origin_power · e^{gauss_weight x²/2} · core(x)` with
/// `core(0) ≠ 0`, `core` primitive over the integers with positive leading
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WronskianDecomposition {
    pub constant: Rat,
    pub origin_power: i64,
    pub gauss_weight: i64,
    pub core: Poly,
}

impl WronskianDecomposition {
    pub fn reassemble(&self) -> QuasiPoly {
        QuasiPoly::new(
            LaurentPoly::new(self.origin_power, self.core.scale(&self.constant)),
            self.gauss_weight,
        )
    }
}

fn bareiss_det(mut m: Vec<Vec<IPoly>>) -> IPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev: IPoly = vec![BigInt::one()];
    for k in 0..n {
        if m[k][k].is_empty() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_empty()) else {
                return Vec::new();
            };
            m.swap(k, r);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ipoly::sub(&ipoly::mul(&m[i][j], &m[k][k]), &ipoly::mul(&m[i][k], &m[k][j]));
                m[i][j] = ipoly::exact_div(&t, &prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.iter().map(|c| -c).collect()
    } else {
        d
    }
}

/// Exact Wronskian `det[f_j^(i)]`, rows `i = 0..n`, columns in input order.
///
/// A zero result means the inputs are linearly dependent.
///
/// # Panics
/// If `fs` is empty.
pub fn wronskian(fs: &[QuasiPoly]) -> QuasiPoly {
    assert!(!fs.is_empty(), "Wronskian of an empty list");
    let n = fs.len();
    if fs.iter().any(|f| f.is_zero()) {
        return QuasiPoly::zero();
    }
    let k_total: i64 = fs.iter().map(|f| f.gauss_weight()).sum();
    let mut cols: Vec<Vec<IPoly>> = Vec::with_capacity(n);
    let mut den_total = BigInt::one();
    let mut shift_total: i64 = 0;
    for f in fs {
        let v = f.body().valuation().unwrap();
        let s = (n as i64 - 1) - v;
        shift_total += s;
        let mut entries = Vec::with_capacity(n);
        let mut cur = f.clone();
        for i in 0..n {
            if i > 0 {
                cur = cur.derivative();
            }
            let l = cur.body().shift(s);
            entries.push(l.to_poly().expect("column shift clears negative powers"));
        }
        let mut d = BigInt::one();
        for p in &entries {
            for c in p.coeffs() {
                if !c.denom().is_one() {
                    d = d.lcm(c.denom());
                }
            }
        }
        den_total *= &d;
        let col: Vec<IPoly> = entries
            .iter()
            .map(|p| p.coeffs().iter().map(|c| c.numer() * (&d / c.denom())).collect())
            .collect();
        cols.push(col);
    }
    let mat: Vec<Vec<IPoly>> = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
    let det = bareiss_det(mat);
    if det.is_empty() {
        return QuasiPoly::zero();
    }
    let body = Poly::from_coeffs(
        det.into_iter().map(|c| Rat::new(c, den_total.clone())).collect(),
    );
    QuasiPoly::new(LaurentPoly::new(-shift_total, body), k_total)
}

/// Wronskian of quasi-rational functions by elimination over the field of
/// rational functions. An independent route to [`wronskian`] for
/// quasi-polynomial inputs; the empty Wronskian is `1`.
pub fn wronskian_rat(fs: &[QuasiRat]) -> QuasiRat {
    let n = fs.len();
    if n == 0 {
        return QuasiRat::one();
    }
    if fs.iter().any(|f| f.is_zero()) {
        return QuasiRat::zero();
    }
    let k_total: i64 = fs.iter().map(|f| f.gauss_weight()).sum();
    let mut m: Vec<Vec<RatFunc>> = vec![Vec::with_capacity(n); n];
    for f in fs {
        let mut cur = f.clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i > 0 {
                cur = cur.derivative();
            }
            row.push(cur.rational_part());
        }
    }
    QuasiRat::new(det_ratfunc(m), 0, k_total)
}

/// Determinant of a square matrix over the rational functions.
pub(crate) fn det_ratfunc(mut m: Vec<Vec<RatFunc>>) -> RatFunc {
    let n = m.len();
    let mut det = RatFunc::one();
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return RatFunc::zero();
        };
        if r != k {
            m.swap(k, r);
            det = -&det;
        }
        let piv = m[k][k].clone();
        det = &det * &piv;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &piv;
            for j in k + 1..n {
                let t = &factor * &m[k][j];
                m[i][j] = &m[i][j] - &t;
            }
            m[i][k] = RatFunc::zero();
        }
    }
    det
}

/// Wronskian of oscillator solutions; `1` for no seeds.
pub fn seed_wronskian(seeds: &[OscIndex]) -> QuasiPoly {
    if seeds.is_empty() {
        return QuasiPoly::from_poly(Poly::one(), 0);
    }
    let fs: Vec<QuasiPoly> = seeds
        .iter()
        .map(|&i| crate::states::osc(i).func.to_quasi_poly().unwrap())
        .collect();
    wronskian(&fs)
}

/// Splits a nonzero quasi-polynomial into constant, origin power, Gaussian
/// weight and a primitive integer core.
///
/// # Panics
/// If `w` is zero.
pub fn structure_decompose(w: &QuasiPoly) -> WronskianDecomposition {
    assert!(!w.is_zero(), "decomposition of the zero function");
    let b = w.body();
    let p = b.unit_part();
    let (den, nums) = p.to_int_form();
    let g = ipoly::content(&nums);
    let sign = if nums.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    let core: IPoly = nums.iter().map(|c| c * &sign / &g).collect();
    WronskianDecomposition {
        constant: Rat::new(g * sign, den),
        origin_power: b.valuation().unwrap(),
        gauss_weight: w.gauss_weight(),
        core: Poly::from_coeffs(core.into_iter().map(Rat::from_integer).collect()),
    }
}

/// `num / den` as a quasi-rational function.
///
/// # Panics
/// If `den` is zero.
pub fn quasirat_divide(num: &QuasiPoly, den: &QuasiPoly) -> QuasiRat {
    num.to_quasi_rat().div(&den.to_quasi_rat())
}

/// First-order Darboux step `f ↦ f' - (ψ'/ψ) f` built on `ψ`.
pub fn darboux_step(psi: &QuasiRat, f: &QuasiRat) -> QuasiRat {
    let log_d = psi.derivative().div(psi).rational_part();
    f.derivative().sub(&f.mul_rat(&log_d))
}

/// Checks the seed-removal form of the Crum identity,
/// `W(ψ_1..ψ_n, ψ_λ) W(Aψ_2..Aψ_n) = W(ψ_1..ψ_n) W(Aψ_2..Aψ_n, Aψ_λ)` with
/// `A` the Darboux step built on `ψ_1`.
pub fn seed_removal_identity_check(
    seeds: &[EigenState],
    probe: &EigenState,
) -> Result<bool, WronskianError> {
    if seeds.is_empty() {
        return Err(WronskianError::NoSeeds);
    }
    let mut energies: Vec<&Rat> = seeds.iter().map(|s| &s.energy).collect();
    energies.push(&probe.energy);
    for i in 0..energies.len() {
        for j in 0..i {
            if energies[i] == energies[j] {
                return Err(WronskianError::DegenerateEnergies);
            }
        }
    }
    let psi1 = &seeds[0].func;
    let mut all: Vec<QuasiRat> = seeds.iter().map(|s| s.func.clone()).collect();
    let w_seeds = wronskian_rat(&all);
    all.push(probe.func.clone());
    let w_full = wronskian_rat(&all);
    let mut moved: Vec<QuasiRat> = seeds[1..].iter().map(|s| darboux_step(psi1, &s.func)).collect();
    let w_moved = wronskian_rat(&moved);
    moved.push(darboux_step(psi1, &probe.func));
    let w_moved_full = wronskian_rat(&moved);
    Ok(w_full.mul(&w_moved) == w_seeds.mul(&w_moved_full))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::osc_state;

    fn qp(i: i64) -> QuasiPoly {
        osc_state(i).func.to_quasi_poly().unwrap()
    }

    #[test]
    fn single_entry_is_itself() {
        assert_eq!(wronskian(&[qp(1)]), qp(1));
    }

    #[test]
    fn repeated_column_vanishes() {
        assert!(wronskian(&[qp(1), qp(1)]).is_zero());
    }

    #[test]
    fn bareiss_agrees_with_field_elimination() {
        let fs = [qp(1), qp(4), qp(5), qp(-2)];
        let rs: Vec<QuasiRat> = fs.iter().map(|f| f.to_quasi_rat()).collect();
        assert_eq!(wronskian(&fs).to_quasi_rat(), wronskian_rat(&rs));
    }
}
