use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ipoly::{self, IPoly};
use super::{rat, Rat};

/// Univariate polynomial with rational coefficients.
///
/// Storage is dense in increasing degree with trailing zeros trimmed, so two
/// polynomials are equal exactly when their coefficient vectors are. The zero
/// polynomial has no degree ([`Poly::degree`] returns `None`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rat, deg: usize) -> Self {
        let mut v = vec![Rat::zero(); deg + 1];
        v[deg] = c;
        Poly::from_coeffs(v)
    }

    /// Coefficients listed from degree zero upwards.
    pub fn from_coeffs(mut c: Vec<Rat>) -> Self {
        while matches!(c.last(), Some(x) if x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    /// Integer coefficients listed from degree zero upwards.
    pub fn from_ints(c: &[i64]) -> Self {
        Poly::from_coeffs(c.iter().map(|&v| rat(v)).collect())
    }

    pub(crate) fn from_ipoly(p: &[BigInt]) -> Self {
        Poly::from_coeffs(p.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// Polynomial `Σ c_k x^(2k)` in the even powers only.
    pub fn from_even_ints(c: &[i64]) -> Self {
        let mut v = Vec::with_capacity(2 * c.len());
        for (i, &x) in c.iter().enumerate() {
            if i > 0 {
                v.push(Rat::zero());
            }
            v.push(rat(x));
        }
        Poly::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, deg: usize) -> Rat {
        self.c.get(deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn leading(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Lowest degree with a nonzero coefficient (`None` for zero).
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|c| !c.is_zero())
    }

    /// True when only even powers occur.
    pub fn is_even(&self) -> bool {
        self.c.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// True when only odd powers occur.
    pub fn is_odd(&self) -> bool {
        self.c.iter().step_by(2).all(|c| c.is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.c.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            c: self.c.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); k];
        v.extend(self.c.iter().cloned());
        Poly { c: v }
    }

    /// Division by `x^k`; the dropped low coefficients must be zero.
    pub fn shift_down(&self, k: usize) -> Poly {
        debug_assert!(self.c.iter().take(k).all(|c| c.is_zero()));
        Poly::from_coeffs(self.c.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// `p(x + a)`.
    pub fn translate(&self, a: &Rat) -> Poly {
        let lin = Poly::from_coeffs(vec![a.clone(), Rat::one()]);
        let mut out = Poly::zero();
        for c in self.c.iter().rev() {
            out = &(&out * &lin) + &Poly::constant(c.clone());
        }
        out
    }

    /// `p(x^2)`.
    pub fn compose_square(&self) -> Poly {
        let mut v = Vec::with_capacity(2 * self.c.len());
        for (i, c) in self.c.iter().enumerate() {
            if i > 0 {
                v.push(Rat::zero());
            }
            v.push(c.clone());
        }
        Poly::from_coeffs(v)
    }

    /// `q` with `p(x) = q(x^2)`; only meaningful for even `p`.
    pub fn even_to_half(&self) -> Poly {
        debug_assert!(self.is_even());
        Poly::from_coeffs(self.c.iter().step_by(2).cloned().collect())
    }

    /// Coefficients with the sign pattern of `p(ix)`, i.e. `c_k i^k` with the
    /// real unit taken out; returns `(q, parity)` where `p(ix) = i^parity q(x)`.
    /// Only defined for polynomials of a fixed parity.
    pub fn rotate_imaginary(&self) -> Option<(Poly, u8)> {
        let par = if self.is_even() {
            0u8
        } else if self.is_odd() {
            1u8
        } else {
            return None;
        };
        // p(ix) = Σ c_k i^k x^k = i^par Σ c_k i^(k-par) x^k, and k-par is even.
        let v = self
            .c
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_zero() {
                    c.clone()
                } else if ((k as u32 - par as u32) / 2) % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                }
            })
            .collect();
        Some((Poly::from_coeffs(v), par))
    }

    /// Common denominator and integer numerators.
    pub(crate) fn to_int_form(&self) -> (BigInt, IPoly) {
        let mut den = BigInt::one();
        for c in &self.c {
            if !c.denom().is_one() {
                den = den.lcm(c.denom());
            }
        }
        let nums = self
            .c
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (den, nums)
    }

    /// Integer primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        let (_, n) = self.to_int_form();
        Poly::from_ipoly(&ipoly::primitive(&n))
    }

    pub(crate) fn primitive_ipoly(&self) -> IPoly {
        let (_, n) = self.to_int_form();
        ipoly::primitive(&n)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        if l.is_one() {
            return self.clone();
        }
        self.scale(&l.recip())
    }

    /// Quotient and remainder of Euclidean division.
    ///
    /// # Panics
    /// On division by the zero polynomial.
    pub fn div_rem(&self, b: &Poly) -> (Poly, Poly) {
        let db = b.degree().expect("division by the zero polynomial");
        let Some(da) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if da < db {
            return (Poly::zero(), self.clone());
        }
        let inv = b.leading().recip();
        let mut r = self.c.clone();
        let mut q = vec![Rat::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let lc = &r[i + db];
            if lc.is_zero() {
                continue;
            }
            let f = lc * &inv;
            for (j, bc) in b.c.iter().enumerate() {
                if !bc.is_zero() {
                    r[i + j] -= &f * bc;
                }
            }
            q[i] = f;
        }
        r.truncate(db);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    /// Quotient of a division known to be exact, or `None` if it is not.
    ///
    /// By Gauss's lemma the quotient of primitive integer polynomials is
    /// integral, so the work happens in `Z[x]`.
    pub fn exact_div(&self, b: &Poly) -> Option<Poly> {
        assert!(!b.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (na, a) = self.to_int_form();
        let (nb, bb) = b.to_int_form();
        let ga = ipoly::content(&a);
        let gb = ipoly::content(&bb);
        let a1: IPoly = a.iter().map(|c| c / &ga).collect();
        let b1: IPoly = bb.iter().map(|c| c / &gb).collect();
        let q = ipoly::exact_div(&a1, &b1)?;
        let scale = Rat::new(ga * nb, gb * na);
        Some(Poly::from_ipoly(&q).scale(&scale))
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let g = ipoly::gcd(&self.primitive_ipoly(), &other.primitive_ipoly());
        Poly::from_ipoly(&g).monic()
    }

    /// `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.c.iter().map(rat_to_f64).collect()
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Very large numerator/denominator: scale both to fit.
        let n = r.numer();
        let d = r.denom();
        let shift = n.bits().max(d.bits()).saturating_sub(900) as usize;
        let nf = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let df = (d >> shift).to_f64().unwrap_or(f64::NAN);
        nf / df
    })
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.c.get(i), rhs.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(v)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.c.get(i), rhs.c.get(i)) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(v)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if self.c.len() == 1 {
            return rhs.scale(&self.c[0]);
        }
        if rhs.c.len() == 1 {
            return self.scale(&rhs.c[0]);
        }
        let (da, a) = self.to_int_form();
        let (db, b) = rhs.to_int_form();
        let prod = ipoly::mul(&a, &b);
        let den = da * db;
        if den.is_one() {
            return Poly::from_ipoly(&prod);
        }
        Poly::from_coeffs(
            prod.into_iter()
                .map(|n| Rat::new(n, den.clone()))
                .collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            c: self.c.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Poly, Add, add);
forward_owned!(Poly, Sub, sub);
forward_owned!(Poly, Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub(crate) fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, Rat)>,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let unit = a.is_one();
        if k == 0 {
            write!(f, "{a}")?;
        } else {
            if !unit {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            if k == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{k}")?;
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.c
                .iter()
                .enumerate()
                .rev()
                .map(|(k, c)| (k as i64, c.clone())),
        )
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_expansions() {
        let a = Poly::from_ints(&[1, 0, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, Poly::from_ints(&[-1, 1, -1, 1]));
        let s = Poly::from_ints(&[3, 0, 2]);
        assert_eq!(s.pow(2), Poly::from_ints(&[9, 0, 12, 0, 4]));
    }

    #[test]
    fn derivative_rules() {
        assert_eq!(Poly::from_ints(&[0, 0, 0, 1]).derivative(), Poly::from_ints(&[0, 0, 3]));
        assert!(Poly::from_ints(&[5]).derivative().is_zero());
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
    }

    #[test]
    fn division_and_gcd() {
        let p = Poly::from_ints(&[-1, 0, 1]);
        let q = Poly::from_ints(&[-1, 1]);
        assert_eq!(p.exact_div(&q), Some(Poly::from_ints(&[1, 1])));
        let half = Poly::from_coeffs(vec![Rat::new(1.into(), 2.into()), Rat::one()]);
        let prod = &half * &Poly::from_ints(&[3, 0, 7]);
        assert_eq!(prod.exact_div(&half), Some(Poly::from_ints(&[3, 0, 7])));
        assert_eq!(p.gcd(&Poly::from_ints(&[1, 1])), Poly::from_ints(&[1, 1]));
        let (qq, r) = Poly::from_ints(&[1, 0, 1]).div_rem(&q);
        assert_eq!(qq, Poly::from_ints(&[1, 1]));
        assert_eq!(r, Poly::from_ints(&[2]));
    }

    #[test]
    fn imaginary_rotation_signs() {
        // H_3 = 8x^3 - 12x; H_3(ix) = i(-8x^3 - 12x).
        let h3 = Poly::from_ints(&[0, -12, 0, 8]);
        let (q, par) = h3.rotate_imaginary().unwrap();
        assert_eq!(par, 1);
        assert_eq!(q, Poly::from_ints(&[0, -12, 0, -8]));
        assert!(Poly::from_ints(&[1, 1]).rotate_imaginary().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[0, -12, 0, 8]).to_string(), "8x^3 - 12x");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
