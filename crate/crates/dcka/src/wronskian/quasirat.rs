use std::fmt;

use num_traits::{One, Zero};

use crate::exact_core::{rat, Poly, Rat, RatFunc};
use crate::states::QuasiPoly;

/// `body(x) · x^mu · e^(k x^2 / 2)` with `body(0)` finite and nonzero.
///
/// The zero function is stored as a zero body with `mu = k = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuasiRat {
    body: RatFunc,
    mu: i64,
    k: i64,
}

fn split_x_power(p: &Poly) -> (i64, Poly) {
    match p.valuation() {
        Some(v) if v > 0 => (v as i64, p.shift_down(v)),
        _ => (0, p.clone()),
    }
}

impl QuasiRat {
    pub fn zero() -> Self {
        QuasiRat { body: RatFunc::zero(), mu: 0, k: 0 }
    }

    pub fn one() -> Self {
        QuasiRat { body: RatFunc::one(), mu: 0, k: 0 }
    }

    /// `r(x) · x^mu · e^(k x^2/2)` for an arbitrary rational `r`; powers of `x`
    /// in `r` are moved into `mu`.
    pub fn new(r: RatFunc, mu: i64, k: i64) -> Self {
        if r.is_zero() {
            return QuasiRat::zero();
        }
        let (vn, n) = split_x_power(r.num());
        let (vd, d) = split_x_power(r.den());
        let body = if vn == 0 && vd == 0 {
            r
        } else {
            RatFunc::new(n, d).expect("nonzero denominator")
        };
        QuasiRat { body, mu: mu + vn - vd, k }
    }

    pub fn from_poly(p: Poly, k: i64) -> Self {
        QuasiRat::new(RatFunc::from_poly(p), 0, k)
    }

    pub fn body(&self) -> &RatFunc {
        &self.body
    }

    /// Vanishing order at the origin (negative for a pole).
    pub fn origin_power(&self) -> i64 {
        self.mu
    }

    pub fn gauss_weight(&self) -> i64 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// The rational part `body · x^mu` as one rational function.
    pub fn rational_part(&self) -> RatFunc {
        &self.body * &RatFunc::monomial(Rat::one(), self.mu)
    }

    pub fn scale(&self, s: &Rat) -> QuasiRat {
        if s.is_zero() {
            return QuasiRat::zero();
        }
        QuasiRat { body: self.body.scale(s), mu: self.mu, k: self.k }
    }

    pub fn mul(&self, other: &QuasiRat) -> QuasiRat {
        if self.is_zero() || other.is_zero() {
            return QuasiRat::zero();
        }
        QuasiRat {
            body: &self.body * &other.body,
            mu: self.mu + other.mu,
            k: self.k + other.k,
        }
    }

    /// Multiplication by a rational function.
    pub fn mul_rat(&self, r: &RatFunc) -> QuasiRat {
        if self.is_zero() || r.is_zero() {
            return QuasiRat::zero();
        }
        QuasiRat::new(&self.body * r, self.mu, self.k)
    }

    /// Exact quotient.
    ///
    /// # Panics
    /// If `other` is zero.
    pub fn div(&self, other: &QuasiRat) -> QuasiRat {
        assert!(!other.is_zero(), "division by the zero function");
        if self.is_zero() {
            return QuasiRat::zero();
        }
        QuasiRat {
            body: &self.body / &other.body,
            mu: self.mu - other.mu,
            k: self.k - other.k,
        }
    }

    pub fn recip(&self) -> QuasiRat {
        QuasiRat::one().div(self)
    }

    /// Sum of two functions with the same Gaussian weight.
    ///
    /// # Panics
    /// If both are nonzero with different weights.
    pub fn add(&self, other: &QuasiRat) -> QuasiRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.k, other.k, "sum of functions with different Gaussian weights");
        let m = self.mu.min(other.mu);
        let a = &self.body * &RatFunc::monomial(Rat::one(), self.mu - m);
        let b = &other.body * &RatFunc::monomial(Rat::one(), other.mu - m);
        QuasiRat::new(&a + &b, m, self.k)
    }

    pub fn sub(&self, other: &QuasiRat) -> QuasiRat {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn derivative(&self) -> QuasiRat {
        if self.is_zero() {
            return QuasiRat::zero();
        }
        // (x^mu B e^(kx²/2))' = x^(mu-1) e^(kx²/2) (mu B + x B' + k x² B)
        let x = RatFunc::x();
        let inner = &(&self.body.scale(&rat(self.mu)) + &(&x * &self.body.derivative()))
            + &(&x.pow(2) * &self.body).scale(&rat(self.k));
        QuasiRat::new(inner, self.mu - 1, self.k)
    }

    /// `Some(c)` when `self = c · other` for a rational constant `c`.
    pub fn ratio_constant(&self, other: &QuasiRat) -> Option<Rat> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.mu != other.mu || self.k != other.k {
            return None;
        }
        (&self.body / &other.body).as_constant()
    }

    /// Proportional with a nonzero factor.
    pub fn proportional(&self, other: &QuasiRat) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.ratio_constant(other).is_some()
    }

    /// Representative with monic numerator, for display and comparisons up to
    /// a constant.
    pub fn normalized(&self) -> QuasiRat {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.body.num().leading().recip())
    }

    /// The quasi-polynomial form when the body is a polynomial.
    pub fn to_quasi_poly(&self) -> Option<QuasiPoly> {
        if self.is_zero() {
            return Some(QuasiPoly::zero());
        }
        if !self.body.is_polynomial() {
            return None;
        }
        let p = self.body.num().scale(&self.body.den().coeff(0).recip());
        Some(QuasiPoly::new(crate::exact_core::LaurentPoly::new(self.mu, p), self.k))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.body.eval_f64(x) * x.powi(self.mu as i32) * (self.k as f64 * x * x / 2.0).exp()
    }
}

impl From<QuasiPoly> for QuasiRat {
    fn from(q: QuasiPoly) -> Self {
        q.to_quasi_rat()
    }
}

impl fmt::Display for QuasiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.body)?;
        if self.mu != 0 {
            write!(f, " x^{}", self.mu)?;
        }
        if self.k != 0 {
            write!(f, " exp({}x^2/2)", self.k)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuasiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiRat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_x_move_into_mu() {
        let r = RatFunc::new(Poly::from_ints(&[0, 0, 3]), Poly::from_ints(&[0, 1, 1])).unwrap();
        let q = QuasiRat::new(r, 0, -1);
        assert_eq!(q.origin_power(), 1);
        assert_eq!(q.body().den(), &Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn derivative_of_gaussian_monomial() {
        // (x e^{-x²/2})' = (1 - x²) e^{-x²/2}
        let q = QuasiRat::from_poly(Poly::x(), -1);
        assert_eq!(q.derivative(), QuasiRat::from_poly(Poly::from_ints(&[1, 0, -1]), -1));
    }

    #[test]
    fn quotient_of_inverse_state() {
        let q = QuasiRat::from_poly(Poly::from_ints(&[0, 0, 1]), 1).recip();
        assert_eq!(q.origin_power(), -2);
        assert_eq!(q.gauss_weight(), -1);
        assert_eq!(q.body(), &RatFunc::one());
    }
}
