//! Finite-difference eigenvalues of half-line Schrödinger operators.
//!
//! The operator `-d² + V` on `[x_min, x_max]` with Dirichlet ends is
//! discretised by the three-point stencil; the lowest eigenvalues of the
//! resulting symmetric tridiagonal matrix are found by bisection on Sturm
//! counts.
//!
//! ```
//! use dcka::numeric_verify::{solve, GridSpec};
//!
//! let grid = GridSpec::new(1e-3, 10.0, 2000).unwrap();
//! let e = solve(|x| x * x, &grid, 3).unwrap();
//! assert!((e[0] - 3.0).abs() < 1e-2 && (e[2] - 11.0).abs() < 1e-2);
//! ```

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::exact_core::Rat;
use crate::operators::{dcka_potential, OperatorError, SchrodingerOp};
use crate::schemes::{predict_spectrum, Convention, Scheme};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("potential is not finite at x = {0}")]
    NonFinite(f64),
    #[error("bisection did not converge for level {0}")]
    NoConvergence(usize),
    #[error(transparent)]
    Operator(#[from] OperatorError),
}

/// Uniform grid of `points` interior nodes strictly inside
/// `[x_min, x_max]`; the wave function vanishes at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, points: usize) -> Result<Self, NumericError> {
        if !(x_min > 0.0 && x_max > x_min) {
            return Err(NumericError::Grid(format!("need 0 < x_min < x_max, got {x_min}, {x_max}")));
        }
        if points < 500 {
            return Err(NumericError::Grid(format!("need at least 500 points, got {points}")));
        }
        Ok(GridSpec { x_min, x_max, points })
    }

    /// `N = 4000` on `[1.2e-3, 12]`.
    pub fn standard() -> Self {
        GridSpec { x_min: 1.2e-3, x_max: 12.0, points: 4000 }
    }

    pub fn step(&self) -> f64 {
        (self.x_max - self.x_min) / (self.points + 1) as f64
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.step();
        (1..=self.points).map(move |i| self.x_min + h * i as f64)
    }
}

/// Number of eigenvalues of the tridiagonal matrix below `lambda`.
fn sturm_count(diag: &[f64], off2: f64, lambda: f64) -> usize {
    let mut count = 0;
    let mut q = diag[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for &d in &diag[1..] {
        let prev = if q == 0.0 { f64::EPSILON * off2.sqrt().max(1.0) } else { q };
        q = d - lambda - off2 / prev;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `k` lowest eigenvalues, ascending.
pub fn solve<V>(v: V, grid: &GridSpec, k: usize) -> Result<Vec<f64>, NumericError>
where
    V: Fn(f64) -> f64,
{
    let h = grid.step();
    let inv_h2 = 1.0 / (h * h);
    let mut diag = Vec::with_capacity(grid.points);
    for x in grid.nodes() {
        let vx = v(x);
        if !vx.is_finite() {
            return Err(NumericError::NonFinite(x));
        }
        diag.push(2.0 * inv_h2 + vx);
    }
    let off2 = inv_h2 * inv_h2;
    let lo0 = diag.iter().cloned().fold(f64::INFINITY, f64::min) - 2.0 * inv_h2;
    let hi0 = diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 2.0 * inv_h2;
    (0..k)
        .into_par_iter()
        .map(|j| {
            let (mut lo, mut hi) = (lo0, hi0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if sturm_count(&diag, off2, mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
                if hi - lo <= 1e-12 * hi.abs().max(1.0) {
                    return Ok(0.5 * (lo + hi));
                }
            }
            Err(NumericError::NoConvergence(j))
        })
        .collect()
}

/// Solves for the potential of an exact operator, evaluated in floating
/// point.
pub fn solve_operator(l: &SchrodingerOp, grid: &GridSpec, k: usize) -> Result<Vec<f64>, NumericError> {
    let v = l.potential();
    solve(|x| v.eval_f64(x), grid, k)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub convention: Convention,
    pub computed: Vec<f64>,
    pub predicted: Vec<f64>,
    pub max_abs_error: f64,
    /// Richardson estimate from the half grid agrees with the fine grid to
    /// within the tolerance.
    pub converged: bool,
    /// For each gap: (predicted levels below, computed levels below).
    pub gap_counts: Vec<(usize, usize)>,
    pub elapsed: Duration,
}

impl SpectralReport {
    pub fn gap_counts_match(&self) -> bool {
        self.gap_counts.iter().all(|(a, b)| a == b)
    }
}

fn to_f64(r: &Rat) -> f64 {
    crate::exact_core::rat_to_f64(r)
}

/// Compares the `k` lowest computed levels of the scheme's own Hamiltonian
/// with the predicted spectrum in the requested convention.
pub fn compare_spectrum(
    s: &Scheme,
    grid: &GridSpec,
    k: usize,
    convention: Convention,
    tol: f64,
) -> Result<SpectralReport, NumericError> {
    let l = dcka_potential(s)?;
    let model = predict_spectrum(s).map_err(OperatorError::from)?;
    let offset = to_f64(&(model.offset(convention) - model.offset(Convention::Native)));
    // Enough levels to see past the last gap.
    let bands = model.bands(Convention::Native);
    let valence = model.valence_count();
    let n = k.max(valence + bands.len() + 1);
    let start = Instant::now();
    let fine = solve_operator(&l, grid, n)?;
    let elapsed = start.elapsed();
    let half = GridSpec { points: grid.points / 2, ..*grid };
    let coarse = solve_operator(&l, &half, k)?;
    let ratio = (half.step() / grid.step()).powi(2);
    let converged = fine
        .iter()
        .zip(&coarse)
        .all(|(f, c)| ((ratio * f - c) / (ratio - 1.0) - f).abs() < tol);

    let mut top = Rat::from_integer(1000000.into());
    top = top.min(&model.infinite_bottom(Convention::Native) + Rat::from_integer((4 * n as i64).into()));
    let predicted_all: Vec<f64> = model.levels(Convention::Native, &top).iter().map(to_f64).collect();
    let mut gap_counts = Vec::new();
    let mut below = 0;
    for w in bands.windows(2) {
        below += w[0].count.unwrap();
        let mid = to_f64(&w[1].lowest) - 2.0;
        gap_counts.push((below, fine.iter().filter(|&&e| e < mid).count()));
    }
    let computed: Vec<f64> = fine.iter().take(k).map(|e| e + offset).collect();
    let predicted: Vec<f64> = predicted_all.iter().take(k).map(|e| e + offset).collect();
    let max_abs_error = computed
        .iter()
        .zip(&predicted)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(SpectralReport { convention, computed, predicted, max_abs_error, converged, gap_counts, elapsed })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub points: Vec<usize>,
    /// `levels[g][j]`: level `j` on grid `g`.
    pub levels: Vec<Vec<f64>>,
    /// Observed order of each level between consecutive grids.
    pub orders: Vec<Vec<f64>>,
    /// Richardson extrapolation from the two finest grids.
    pub extrapolated: Vec<f64>,
}

/// Observed convergence order against known exact levels.
///
/// # Panics
/// If fewer than two grids are given.
pub fn convergence_study<V>(
    v: V,
    grids: &[GridSpec],
    exact: &[f64],
) -> Result<ConvergenceReport, NumericError>
where
    V: Fn(f64) -> f64 + Sync,
{
    assert!(grids.len() >= 2, "need at least two grids");
    let k = exact.len();
    let levels: Vec<Vec<f64>> = grids.iter().map(|g| solve(&v, g, k)).collect::<Result<_, _>>()?;
    let orders = (1..grids.len())
        .map(|g| {
            let hr = (grids[g - 1].step() / grids[g].step()).ln();
            (0..k)
                .map(|j| ((levels[g - 1][j] - exact[j]).abs() / (levels[g][j] - exact[j]).abs()).ln() / hr)
                .collect()
        })
        .collect();
    let (a, b) = (&grids[grids.len() - 2], &grids[grids.len() - 1]);
    let r = (a.step() / b.step()).powi(2);
    let extrapolated = (0..k)
        .map(|j| (r * levels[grids.len() - 1][j] - levels[grids.len() - 2][j]) / (r - 1.0))
        .collect();
    Ok(ConvergenceReport { points: grids.iter().map(|g| g.points).collect(), levels, orders, extrapolated })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isotonic_levels() {
        let g = GridSpec::standard();
        // L_1 = L_1^iso + 2
        let e = solve(|x| x * x + 2.0 / (x * x) + 2.0, &g, 3).unwrap();
        for (a, b) in e.iter().zip([7.0, 11.0, 15.0]) {
            assert!((a - b).abs() < 5e-3, "{a} vs {b}");
        }
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(GridSpec::new(0.0, 1.0, 1000).is_err());
        assert!(GridSpec::new(0.1, 1.0, 10).is_err());
    }
}
