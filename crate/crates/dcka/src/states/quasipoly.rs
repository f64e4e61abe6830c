use std::fmt;

use num_traits::Zero;

use crate::exact_core::{rat, LaurentPoly, Poly, Rat, RatFunc};
use crate::wronskian::QuasiRat;

/// `body(x) · e^(k x²/2)` with a Laurent polynomial body.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuasiPoly {
    body: LaurentPoly,
    k: i64,
}

impl QuasiPoly {
    pub fn new(body: LaurentPoly, k: i64) -> Self {
        if body.is_zero() {
            return QuasiPoly::zero();
        }
        QuasiPoly { body, k }
    }

    pub fn zero() -> Self {
        QuasiPoly { body: LaurentPoly::zero(), k: 0 }
    }

    pub fn from_poly(p: Poly, k: i64) -> Self {
        QuasiPoly::new(LaurentPoly::from_poly(p), k)
    }

    pub fn body(&self) -> &LaurentPoly {
        &self.body
    }

    pub fn gauss_weight(&self) -> i64 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// `d/dx`, keeping the weight: `(b e^{kx²/2})' = (b' + k x b) e^{kx²/2}`.
    pub fn derivative(&self) -> QuasiPoly {
        if self.is_zero() {
            return QuasiPoly::zero();
        }
        let kx = LaurentPoly::monomial(rat(self.k), 1);
        QuasiPoly::new(&self.body.derivative() + &(&kx * &self.body), self.k)
    }

    pub fn scale(&self, s: &Rat) -> QuasiPoly {
        if s.is_zero() {
            return QuasiPoly::zero();
        }
        QuasiPoly::new(self.body.scale(s), self.k)
    }

    pub fn mul(&self, other: &QuasiPoly) -> QuasiPoly {
        if self.is_zero() || other.is_zero() {
            return QuasiPoly::zero();
        }
        QuasiPoly::new(&self.body * &other.body, self.k + other.k)
    }

    pub fn to_quasi_rat(&self) -> QuasiRat {
        if self.is_zero() {
            return QuasiRat::zero();
        }
        let v = self.body.valuation().unwrap();
        QuasiRat::new(RatFunc::from_poly(self.body.unit_part().clone()), v, self.k)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.body.eval_f64(x) * (self.k as f64 * x * x / 2.0).exp()
    }
}

impl fmt::Display for QuasiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.body)
        } else {
            write!(f, "({}) exp({}x^2/2)", self.body, self.k)
        }
    }
}

impl fmt::Debug for QuasiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiPoly({self})")
    }
}
