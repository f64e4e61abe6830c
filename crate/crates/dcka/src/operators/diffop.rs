use std::fmt;

use num_traits::{One, Zero};

use crate::exact_core::{rat, Rat, RatFunc};
use crate::wronskian::QuasiRat;

/// `Σ c_j(x) (d/dx)^j` with rational-function coefficients.
///
/// The coefficient list is trimmed, so the last entry is the nonzero leading
/// coefficient; the zero operator has an empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DiffOp {
    c: Vec<RatFunc>,
}

fn binom(n: usize, k: usize) -> i64 {
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp { c: Vec::new() }
    }

    pub fn identity() -> Self {
        DiffOp::mul_by(RatFunc::one())
    }

    /// `d/dx`.
    pub fn d() -> Self {
        DiffOp::from_coeffs(vec![RatFunc::zero(), RatFunc::one()])
    }

    /// Multiplication by `f`.
    pub fn mul_by(f: RatFunc) -> Self {
        DiffOp::from_coeffs(vec![f])
    }

    pub fn constant(c: Rat) -> Self {
        DiffOp::mul_by(RatFunc::constant(c))
    }

    pub fn from_coeffs(mut c: Vec<RatFunc>) -> Self {
        while matches!(c.last(), Some(x) if x.is_zero()) {
            c.pop();
        }
        DiffOp { c }
    }

    /// `d/dx + w`.
    pub fn first_order(w: RatFunc) -> Self {
        DiffOp::from_coeffs(vec![w, RatFunc::one()])
    }

    /// `-d/dx + w`.
    pub fn first_order_adjoint(w: RatFunc) -> Self {
        DiffOp::from_coeffs(vec![w, RatFunc::constant(rat(-1))])
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.c
    }

    pub fn coeff(&self, j: usize) -> RatFunc {
        self.c.get(j).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Differential order; `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn scale(&self, s: &Rat) -> DiffOp {
        DiffOp::from_coeffs(self.c.iter().map(|x| x.scale(s)).collect())
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let n = self.c.len().max(other.c.len());
        DiffOp::from_coeffs((0..n).map(|j| &self.coeff(j) + &other.coeff(j)).collect())
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        let n = self.c.len().max(other.c.len());
        DiffOp::from_coeffs((0..n).map(|j| &self.coeff(j) - &other.coeff(j)).collect())
    }

    pub fn neg(&self) -> DiffOp {
        self.scale(&rat(-1))
    }

    /// `self ∘ other`, by the Leibniz rule
    /// `D^i b = Σ_r binom(i, r) b^(r) D^(i-r)`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        if self.is_zero() || other.is_zero() {
            return DiffOp::zero();
        }
        let da = self.c.len() - 1;
        let db = other.c.len() - 1;
        // derivs[j][r] = b_j^(r)
        let derivs: Vec<Vec<RatFunc>> = other
            .c
            .iter()
            .map(|b| {
                let mut v = Vec::with_capacity(da + 1);
                let mut cur = b.clone();
                for r in 0..=da {
                    if r > 0 {
                        cur = cur.derivative();
                    }
                    v.push(cur.clone());
                    if cur.is_zero() {
                        break;
                    }
                }
                v
            })
            .collect();
        let mut out = vec![RatFunc::zero(); da + db + 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, dj) in derivs.iter().enumerate() {
                for (r, br) in dj.iter().enumerate().take(i + 1) {
                    if br.is_zero() {
                        continue;
                    }
                    let term = (a * br).scale(&rat(binom(i, r)));
                    let slot = &mut out[i - r + j];
                    *slot = &*slot + &term;
                }
            }
        }
        DiffOp::from_coeffs(out)
    }

    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.compose(other).sub(&other.compose(self))
    }

    /// Formal adjoint: `(Σ c_j D^j)^† = Σ (-D)^j c_j`.
    pub fn adjoint(&self) -> DiffOp {
        let n = self.c.len();
        let mut out = vec![RatFunc::zero(); n];
        for (j, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if j % 2 == 0 { 1 } else { -1 };
            // D^j c = Σ_r binom(j, r) c^(j-r) D^r
            let mut derivs = Vec::with_capacity(j + 1);
            let mut cur = c.clone();
            for t in 0..=j {
                if t > 0 {
                    cur = cur.derivative();
                }
                derivs.push(cur.clone());
            }
            for (r, slot) in out.iter_mut().enumerate().take(j + 1) {
                let t = &derivs[j - r];
                if t.is_zero() {
                    continue;
                }
                *slot = &*slot + &t.scale(&rat(sign * binom(j, r)));
            }
        }
        DiffOp::from_coeffs(out)
    }

    /// Action on a quasi-rational function.
    pub fn apply(&self, f: &QuasiRat) -> QuasiRat {
        let mut acc = QuasiRat::zero();
        let mut dj = f.clone();
        for (j, c) in self.c.iter().enumerate() {
            if j > 0 {
                dj = dj.derivative();
            }
            if dj.is_zero() {
                break;
            }
            if !c.is_zero() {
                acc = acc.add(&dj.mul_rat(c));
            }
        }
        acc
    }

    /// `e^{-s x²/2} ∘ self ∘ e^{s x²/2}`: replaces `d/dx` by `d/dx + s x`.
    pub fn gauge(&self, s: i64) -> DiffOp {
        let shifted = DiffOp::from_coeffs(vec![RatFunc::monomial(rat(s), 1), RatFunc::one()]);
        let mut out = DiffOp::zero();
        let mut power = DiffOp::identity();
        for (j, c) in self.c.iter().enumerate() {
            if j > 0 {
                power = shifted.compose(&power);
            }
            out = out.add(&DiffOp::mul_by(c.clone()).compose(&power));
        }
        out
    }

    /// `Some(c)` when `self = c · other` for a rational constant `c`.
    pub fn ratio_constant(&self, other: &DiffOp) -> Option<Rat> {
        if other.is_zero() {
            return None;
        }
        if self.c.len() != other.c.len() {
            return if self.is_zero() { Some(Rat::zero()) } else { None };
        }
        let lead = (&self.c[self.c.len() - 1] / &other.c[other.c.len() - 1]).as_constant()?;
        if self.sub(&other.scale(&lead)).is_zero() {
            Some(lead)
        } else {
            None
        }
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) D")?,
                _ => write!(f, "({c}) D^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp({self})")
    }
}

impl One for DiffOp {
    fn one() -> Self {
        DiffOp::identity()
    }
}

impl std::ops::Mul for DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: DiffOp) -> DiffOp {
        self.compose(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_x_commutator_is_one() {
        let x = DiffOp::mul_by(RatFunc::x());
        assert_eq!(DiffOp::d().commutator(&x), DiffOp::identity());
    }

    #[test]
    fn adjoint_of_first_order() {
        let w = RatFunc::x();
        assert_eq!(DiffOp::first_order(w.clone()).adjoint(), DiffOp::first_order_adjoint(w));
    }

    #[test]
    fn gauge_by_gaussian() {
        // e^{x²/2} (d/dx) e^{-x²/2} = d/dx - x
        let g = DiffOp::d().gauge(-1);
        assert_eq!(g, DiffOp::first_order(RatFunc::monomial(rat(-1), 1)));
    }
}
