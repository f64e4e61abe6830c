use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::{fmt_terms, Poly};
use super::{rat, Rat};

/// Finite sum `Σ c_k x^k` with integer (possibly negative) exponents.
///
/// Stored as `x^val · p(x)` with `p(0) ≠ 0`, so the valuation is the lowest
/// exponent present and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    val: i64,
    p: Poly,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { val: 0, p: Poly::zero() }
    }

    pub fn one() -> Self {
        LaurentPoly::from_poly(Poly::one())
    }

    /// `x^shift · p`, normalised.
    pub fn new(shift: i64, p: Poly) -> Self {
        match p.valuation() {
            None => LaurentPoly::zero(),
            Some(v) => LaurentPoly {
                val: shift + v as i64,
                p: p.shift_down(v),
            },
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        LaurentPoly::new(0, p)
    }

    pub fn monomial(c: Rat, k: i64) -> Self {
        LaurentPoly::new(k, Poly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.val)
        }
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.p.degree().map(|d| self.val + d as i64)
    }

    /// The polynomial `p` in `x^val · p`, with `p(0) ≠ 0`.
    pub fn unit_part(&self) -> &Poly {
        &self.p
    }

    pub fn coeff(&self, k: i64) -> Rat {
        if k < self.val {
            return Rat::zero();
        }
        self.p.coeff((k - self.val) as usize)
    }

    /// Exponent/coefficient pairs in increasing exponent order.
    pub fn terms(&self) -> Vec<(i64, Rat)> {
        self.p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.val + i as i64, c.clone()))
            .collect()
    }

    /// The polynomial itself when no negative powers occur.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.val < 0 {
            None
        } else {
            Some(self.p.shift_up(self.val as usize))
        }
    }

    pub fn derivative(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        // d/dx (x^v p) = x^(v-1) (v p + x p').
        let inner = &self.p.scale(&rat(self.val)) + &self.p.derivative().shift_up(1);
        LaurentPoly::new(self.val - 1, inner)
    }

    pub fn scale(&self, s: &Rat) -> LaurentPoly {
        LaurentPoly::new(self.val, self.p.scale(s))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { val: self.val + k, p: self.p.clone() }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let base = self.p.eval(x);
        if self.val >= 0 {
            base * num_traits::pow(x.clone(), self.val as usize)
        } else {
            base / num_traits::pow(x.clone(), (-self.val) as usize)
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.p.eval_f64(x) * x.powi(self.val as i32)
    }
}

fn align(a: &LaurentPoly, b: &LaurentPoly) -> (i64, Poly, Poly) {
    let v = a.val.min(b.val);
    (v, a.p.shift_up((a.val - v) as usize), b.p.shift_up((b.val - v) as usize))
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (v, a, b) = align(self, rhs);
        LaurentPoly::new(v, &a + &b)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::new(self.val + rhs.val, &self.p * &rhs.p)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { val: self.val, p: -&self.p }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut t = self.terms();
        t.reverse();
        fmt_terms(f, t.into_iter())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_power_derivative() {
        let inv = LaurentPoly::monomial(rat(1), -1);
        assert_eq!(inv.derivative(), LaurentPoly::monomial(rat(-1), -2));
    }

    #[test]
    fn constant_derivative_vanishes() {
        assert!(LaurentPoly::monomial(rat(7), 0).derivative().is_zero());
    }

    #[test]
    fn valuation_tracks_lowest_power() {
        let p = &LaurentPoly::monomial(rat(2), -3) + &LaurentPoly::monomial(rat(1), 4);
        assert_eq!(p.valuation(), Some(-3));
        assert_eq!(p.degree(), Some(4));
        let q = &p - &LaurentPoly::monomial(rat(2), -3);
        assert_eq!(q.valuation(), Some(4));
    }
}
