use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact_core::{rat, Poly, Rat, RatFunc};
use crate::wronskian::QuasiRat;

use super::DiffOp;

/// `-d²/dx² + x² + tail(x) + shift`. A finite limit of the tail at infinity
/// is moved into `shift`, so equal operators compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchrodingerOp {
    tail: RatFunc,
    shift: Rat,
}

/// `V = x² + m(m+1)/x² + constant + remainder`, with `remainder` regular at
/// the origin and vanishing at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PotentialForm {
    pub m: i64,
    pub constant: Rat,
    pub remainder: RatFunc,
}

impl SchrodingerOp {
    pub fn new(tail: RatFunc, shift: Rat) -> Self {
        let (dn, dd) = (tail.num().degree(), tail.den().degree());
        match (dn, dd) {
            (Some(n), Some(d)) if n == d => {
                let c = tail.num().leading() / tail.den().leading();
                let tail = &tail - &RatFunc::constant(c.clone());
                SchrodingerOp { tail, shift: shift + c }
            }
            _ => SchrodingerOp { tail, shift },
        }
    }

    /// `-d² + x²` (also the half-harmonic operator `L_0`).
    pub fn oscillator() -> Self {
        SchrodingerOp::new(RatFunc::zero(), Rat::zero())
    }

    /// `L_m^iso + shift`.
    pub fn isotonic(m: i64, shift: Rat) -> Self {
        SchrodingerOp::new(RatFunc::monomial(rat(m * (m + 1)), -2), shift)
    }

    /// `L_m = L_m^iso + 2m`.
    pub fn isotonic_shifted(m: i64) -> Self {
        SchrodingerOp::isotonic(m, rat(2 * m))
    }

    pub fn tail(&self) -> &RatFunc {
        &self.tail
    }

    pub fn shift(&self) -> &Rat {
        &self.shift
    }

    /// `self + c`.
    pub fn plus(&self, c: &Rat) -> SchrodingerOp {
        SchrodingerOp::new(self.tail.clone(), &self.shift + c)
    }

    /// The full potential as one rational function.
    pub fn potential(&self) -> RatFunc {
        &(&RatFunc::monomial(Rat::one(), 2) + &self.tail) + &RatFunc::constant(self.shift.clone())
    }

    pub fn to_diffop(&self) -> DiffOp {
        DiffOp::from_coeffs(vec![self.potential(), RatFunc::zero(), RatFunc::constant(rat(-1))])
    }

    pub fn apply(&self, f: &QuasiRat) -> QuasiRat {
        f.mul_rat(&self.potential()).sub(&f.derivative().derivative())
    }

    /// `Some(E)` when `f` is an eigenfunction.
    pub fn eigenvalue_of(&self, f: &QuasiRat) -> Option<Rat> {
        if f.is_zero() {
            return None;
        }
        self.apply(f).ratio_constant(f)
    }

    /// Splits off `m(m+1)/x²` and the constant part of the potential.
    ///
    /// Returns `None` when the double pole coefficient is not of the form
    /// `m(m+1)` or the tail has a higher-order pole at the origin.
    pub fn decompose(&self) -> Option<PotentialForm> {
        let v = &self.tail;
        let den = v.den();
        let vd = den.valuation().unwrap_or(0);
        if vd > 2 {
            return None;
        }
        // Coefficient of x^-2: (num/den·x^2)(0).
        let g = if vd == 2 {
            let d0 = den.shift_down(2);
            v.num().coeff(0) / d0.coeff(0)
        } else {
            Rat::zero()
        };
        if vd == 1 {
            return None;
        }
        let m = triangular_root(&g)?;
        let rest = v - &RatFunc::monomial(g, -2);
        if rest.den().valuation().unwrap_or(0) > 0 {
            return None;
        }
        // Constant = limit at infinity of `rest`.
        let dn = rest.num().degree();
        let dd = rest.den().degree().unwrap_or(0);
        let c_inf = match dn {
            None => Rat::zero(),
            Some(d) if d < dd => Rat::zero(),
            Some(d) if d == dd => rest.num().leading() / rest.den().leading(),
            Some(_) => return None,
        };
        let remainder = &rest - &RatFunc::constant(c_inf.clone());
        Some(PotentialForm { m, constant: c_inf + &self.shift, remainder })
    }
}

/// The `m ≥ 0` with `m(m+1) = g`.
fn triangular_root(g: &Rat) -> Option<i64> {
    if !g.is_integer() {
        return None;
    }
    let g = g.to_integer();
    let g: i64 = num_traits::ToPrimitive::to_i64(&g)?;
    if g < 0 {
        return None;
    }
    let mut m = ((1.0 + 8.0 * g as f64).sqrt() as i64 - 1) / 2;
    while m * (m + 1) < g {
        m += 1;
    }
    while m > 0 && m * (m + 1) > g {
        m -= 1;
    }
    (m * (m + 1) == g).then_some(m)
}

impl fmt::Display for PotentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^2 + {}/x^2", self.m * (self.m + 1))?;
        if self.constant.is_negative() {
            write!(f, " - {}", -self.constant.clone())?;
        } else if !self.constant.is_zero() {
            write!(f, " + {}", self.constant)?;
        }
        if !self.remainder.is_zero() {
            write!(f, " + {}", self.remainder)?;
        }
        Ok(())
    }
}

/// Polynomial in an abstract Hamiltonian symbol `L`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct OperatorPoly {
    p: Poly,
}

impl OperatorPoly {
    pub fn new(p: Poly) -> Self {
        OperatorPoly { p }
    }

    pub fn constant(c: Rat) -> Self {
        OperatorPoly::new(Poly::constant(c))
    }

    /// `Π (L - r)`.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut p = Poly::one();
        for r in roots {
            p = &p * &Poly::from_coeffs(vec![-r.clone(), Rat::one()]);
        }
        OperatorPoly::new(p)
    }

    pub fn poly(&self) -> &Poly {
        &self.p
    }

    pub fn degree(&self) -> Option<usize> {
        self.p.degree()
    }

    pub fn eval(&self, e: &Rat) -> Rat {
        self.p.eval(e)
    }

    /// `p(L + a)` as a polynomial in `L`. If `L' = L + a`, this rewrites a
    /// polynomial in `L'` as one in `L`.
    pub fn translate(&self, a: &Rat) -> OperatorPoly {
        OperatorPoly::new(self.p.translate(a))
    }

    /// Substitutes a concrete operator for `L`.
    pub fn eval_op(&self, l: &SchrodingerOp) -> DiffOp {
        let lop = l.to_diffop();
        let mut acc = DiffOp::zero();
        for c in self.p.coeffs().iter().rev() {
            acc = lop.compose(&acc).add(&DiffOp::constant(c.clone()));
        }
        acc
    }

    /// Exact interpolation through `(E_i, c_i)` with distinct nodes.
    pub fn interpolate(points: &[(Rat, Rat)]) -> OperatorPoly {
        let mut acc = Poly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Poly::one();
            let mut den = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &Poly::from_coeffs(vec![-xj.clone(), Rat::one()]);
                    den *= xi - xj;
                }
            }
            acc = &acc + &basis.scale(&(yi / den));
        }
        OperatorPoly::new(acc)
    }

    /// Rational roots, with multiplicity, found among the candidates.
    pub fn roots_among(&self, candidates: &[Rat]) -> Vec<Rat> {
        let mut out = Vec::new();
        let mut p = self.p.clone();
        for c in candidates {
            loop {
                if p.is_zero() || p.is_constant() {
                    break;
                }
                if p.eval(c).is_zero() {
                    out.push(c.clone());
                    p = p.exact_div(&Poly::from_coeffs(vec![-c.clone(), Rat::one()])).unwrap();
                } else {
                    break;
                }
            }
        }
        out
    }
}

impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.p.to_string();
        write!(f, "{}", s.replace('x', "L"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isotonic_decomposes() {
        let l = SchrodingerOp::isotonic_shifted(3);
        let d = l.decompose().unwrap();
        assert_eq!(d.m, 3);
        assert_eq!(d.constant, rat(6));
        assert!(d.remainder.is_zero());
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = Poly::from_ints(&[30, -1, 6, 1]);
        let pts: Vec<_> = (0..4).map(|i| (rat(i), p.eval(&rat(i)))).collect();
        assert_eq!(OperatorPoly::interpolate(&pts).poly(), &p);
    }
}
