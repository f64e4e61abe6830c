//! Exact counting and isolation of real roots on the open half-line.
//!
//! Sturm chains are built over the integers with positive rescaling only, so
//! every sign in the chain is exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ipoly::{self, IPoly};
use super::poly::Poly;
use super::Rat;

/// Sturm chain of a squarefree primitive integer polynomial.
struct Sturm {
    chain: Vec<IPoly>,
}

impl Sturm {
    fn new(p: IPoly) -> Self {
        let mut chain = vec![p.clone(), ipoly::primitive_keep_sign(&ipoly::derivative(&p))];
        loop {
            let n = chain.len();
            if chain[n - 1].len() <= 1 {
                break;
            }
            let a = &chain[n - 2];
            let b = &chain[n - 1];
            let mut r = ipoly::prem(a, b);
            // prem multiplies by lc(b)^e; undo a negative factor.
            let e = a.len() - b.len() + 1;
            if b.last().unwrap().is_negative() && e % 2 == 1 {
                r = r.iter().map(|c| -c).collect();
            }
            if r.is_empty() {
                break;
            }
            let r: IPoly = r.iter().map(|c| -c).collect();
            chain.push(ipoly::primitive_keep_sign(&r));
        }
        Sturm { chain }
    }

    fn changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut n = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
        n
    }

    fn at_zero_plus(&self) -> usize {
        Self::changes(self.chain.iter().map(|p| {
            p.iter().find(|c| !c.is_zero()).map(ipoly::sign_of).unwrap_or(0)
        }))
    }

    fn at_infinity(&self) -> usize {
        Self::changes(self.chain.iter().map(|p| p.last().map(ipoly::sign_of).unwrap_or(0)))
    }

    fn at(&self, x: &Rat) -> usize {
        // Sign of p(n/d) equals sign of d^deg p(n/d) since d > 0.
        let n = x.numer();
        let d = x.denom();
        Self::changes(self.chain.iter().map(|p| {
            let mut acc = BigInt::zero();
            let mut dp = BigInt::one();
            for c in p.iter().rev() {
                acc = acc * n + c * &dp;
                dp *= d;
            }
            // acc = Σ c_k n^k d^(deg-k) after the loop (Horner in homogeneous form).
            ipoly::sign_of(&acc)
        }))
    }
}

/// Squarefree primitive part with the roots at the origin removed.
fn prepare(p: &Poly) -> IPoly {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    let v = p.valuation().unwrap();
    let q = p.shift_down(v);
    let q = q.squarefree_part();
    q.primitive_ipoly()
}

/// Number of distinct real roots of `p` in `(0, ∞)`.
///
/// Even polynomials are first reduced through `y = x^2`, which maps positive
/// roots bijectively onto positive roots.
///
/// # Panics
/// If `p` is the zero polynomial.
pub fn positive_real_root_count(p: &Poly) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    let mut q = p.clone();
    while q.degree().unwrap_or(0) >= 2 && q.is_even() {
        q = q.even_to_half();
    }
    let q = prepare(&q);
    if q.len() <= 1 {
        return 0;
    }
    let s = Sturm::new(q);
    s.at_zero_plus() - s.at_infinity()
}

/// Disjoint intervals `(a, b)`, each containing exactly one positive root of
/// `p`.
pub fn isolate_positive_roots(p: &Poly) -> Vec<(Rat, Rat)> {
    let q = prepare(p);
    if q.len() <= 1 {
        return Vec::new();
    }
    let qp = Poly::from_ipoly(&q);
    let s = Sturm::new(q);
    let total = s.at_zero_plus() - s.at_infinity();
    if total == 0 {
        return Vec::new();
    }
    // Cauchy bound.
    let lead = qp.leading();
    let mut bound = Rat::one();
    for c in qp.coeffs() {
        let r = (c / &lead).abs();
        if r > bound {
            bound = r;
        }
    }
    let hi = bound + Rat::one();
    let mut out = Vec::new();
    let mut stack = vec![(Rat::zero(), hi, total)];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mut k = 2i64;
        let mut m = (&a + &b) / Rat::from_integer(2.into());
        while qp.eval(&m).is_zero() {
            k += 1;
            m = &a + (&b - &a) / Rat::from_integer(k.into());
        }
        let va = if a.is_zero() { s.at_zero_plus() } else { s.at(&a) };
        let vm = s.at(&m);
        let vb = s.at(&b);
        stack.push((a, m.clone(), va - vm));
        stack.push((m, b, vm - vb));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_counts() {
        assert_eq!(positive_real_root_count(&Poly::from_ints(&[3, 0, 2])), 0);
        assert_eq!(positive_real_root_count(&Poly::from_ints(&[-1, 0, 1])), 1);
        assert_eq!(positive_real_root_count(&Poly::from_ints(&[15, 0, 10, 0, -4, 0, 8])), 0);
        // (x-1)^2 (x-2) x: distinct positive roots 1 and 2.
        let p = &(&Poly::from_ints(&[1, -2, 1]) * &Poly::from_ints(&[-2, 1])) * &Poly::x();
        assert_eq!(positive_real_root_count(&p), 2);
        // Roots at negative values only.
        assert_eq!(positive_real_root_count(&Poly::from_ints(&[6, 5, 1])), 0);
    }

    #[test]
    fn isolation_brackets_each_root() {
        let p = &(&Poly::from_ints(&[-1, 3]) * &Poly::from_ints(&[-7, 1])) * &Poly::from_ints(&[1, 0, 1]);
        let iv = isolate_positive_roots(&p);
        assert_eq!(iv.len(), 2);
        for (a, b) in &iv {
            assert!(a <= b);
        }
    }
}
