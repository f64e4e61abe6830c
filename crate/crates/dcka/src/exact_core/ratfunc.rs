use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::Rat;
use super::ExactError;

/// Quotient `num / den` of polynomials in lowest terms with `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds and canonicalises `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        Self::monic_den(num, den)
    }

    fn monic_den(num: Poly, den: Poly) -> Self {
        let l = den.leading();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let inv = l.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    /// `c · x^k` for any integer `k`.
    pub fn monomial(c: Rat, k: i64) -> Self {
        if k >= 0 {
            RatFunc::from_poly(Poly::monomial(c, k as usize))
        } else {
            RatFunc::monic_den(Poly::constant(c), Poly::monomial(Rat::one(), (-k) as usize))
        }
    }

    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn scale(&self, s: &Rat) -> RatFunc {
        if s.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(s), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<RatFunc, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFunc::monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn derivative(&self) -> RatFunc {
        if self.is_polynomial() {
            return RatFunc::from_poly(self.num.derivative().scale(&self.den.coeff(0).recip()));
        }
        // (n/d)' = (n' d - n d') / d^2; only factors of d can cancel.
        let d1 = self.den.derivative();
        let g = self.den.gcd(&d1);
        let dg = self.den.exact_div(&g).unwrap();
        let d1g = d1.exact_div(&g).unwrap();
        // n' (d/g) - n (d'/g) over d (d/g).
        let top = &(&self.num.derivative() * &dg) - &(&self.num * &d1g);
        let bottom = &self.den * &dg;
        RatFunc::reduce(top, bottom)
    }

    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn pow(&self, n: u32) -> RatFunc {
        RatFunc { num: self.num.pow(n), den: self.den.pow(n) }
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_constant() {
            let top = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if top.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc::monic_den(top, &self.den * &rhs.den);
        }
        let b1 = self.den.exact_div(&g).unwrap();
        let d1 = rhs.den.exact_div(&g).unwrap();
        let top = &(&self.num * &d1) + &(&rhs.num * &b1);
        if top.is_zero() {
            return RatFunc::zero();
        }
        let h = top.gcd(&g);
        if h.is_constant() {
            RatFunc::monic_den(top, &(&g * &b1) * &d1)
        } else {
            let top = top.exact_div(&h).unwrap();
            let g2 = g.exact_div(&h).unwrap();
            RatFunc::monic_den(top, &(&g2 * &b1) * &d1)
        }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let cancel = |n: &Poly, d: &Poly| -> (Poly, Poly) {
            if d.is_constant() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d);
            if g.is_constant() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g).unwrap(), d.exact_div(&g).unwrap())
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RatFunc::monic_den(&a * &c, &b * &d)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.recip().expect("division by the zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
