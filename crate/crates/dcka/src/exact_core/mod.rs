//! Exact arithmetic: rationals, polynomials, Laurent polynomials, rational
//! functions, and real-root counting on the positive half-line.
//!
//! Every value is kept in a canonical form, so `==` is a mathematical identity
//! test. Rational functions are reduced with a monic denominator.
//!
//! ```
//! use dcka::exact_core::{Poly, RatFunc, positive_real_root_count};
//!
//! let f = Poly::from_ints(&[3, 0, 2]); // 2x^2 + 3
//! assert_eq!(positive_real_root_count(&f), 0);
//! let r = RatFunc::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-1, 1])).unwrap();
//! assert_eq!(r, RatFunc::from_poly(Poly::from_ints(&[1, 1])));
//! ```

pub(crate) mod ipoly;
mod laurent;
mod linalg;
mod poly;
mod ratfunc;
mod roots;

pub use laurent::LaurentPoly;
pub use linalg::{nullspace, rank, row_reduce};
pub use poly::Poly;
pub use poly::rat_to_f64;
pub use ratfunc::RatFunc;
pub use roots::{isolate_positive_roots, positive_real_root_count};

/// Arbitrary-precision rational number in lowest terms.
pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// `n / d` in lowest terms.
///
/// # Panics
/// If `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Renders a rational as `"num/den"` (denominator always present).
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if d == num_bigint::BigInt::from(0) {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => Some(Rat::from_integer(s.parse().ok()?)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
}
