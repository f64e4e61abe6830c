//! Dense polynomials over the integers.
//!
//! These are the work-horse for multiplication, gcd and pseudo-division; the
//! rational types convert into this form, do the heavy lifting, and convert
//! back.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients in increasing degree, no trailing zeros.
pub(crate) type IPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut IPoly) {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Positive gcd of the coefficients; zero for the zero polynomial.
pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive(p: &[BigInt]) -> IPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut g = content(p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    if g.is_one() {
        return p.to_vec();
    }
    p.iter().map(|c| c / &g).collect()
}

/// Divides out the content only, keeping signs.
pub(crate) fn primitive_keep_sign(p: &[BigInt]) -> IPoly {
    let g = content(p);
    if g.is_zero() || g.is_one() {
        return p.to_vec();
    }
    p.iter().map(|c| c / &g).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() >= 48 && b.len() >= 48 {
        return karatsuba(a, b);
    }
    schoolbook(a, b)
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> IPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn add_into(acc: &mut Vec<BigInt>, p: &[BigInt], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn karatsuba(a: &[BigInt], b: &[BigInt]) -> IPoly {
    if a.len() < 48 || b.len() < 48 {
        return schoolbook(a, b);
    }
    let m = a.len().max(b.len()) / 2;
    let split = |p: &[BigInt]| -> (IPoly, IPoly) {
        if p.len() <= m {
            (p.to_vec(), Vec::new())
        } else {
            let mut lo = p[..m].to_vec();
            trim(&mut lo);
            (lo, p[m..].to_vec())
        }
    };
    let (a0, a1) = split(a);
    let (b0, b1) = split(b);
    let z0 = mul(&a0, &b0);
    let z2 = mul(&a1, &b1);
    let mut sa = a0.clone();
    add_into(&mut sa, &a1, 0);
    let mut sb = b0.clone();
    add_into(&mut sb, &b1, 0);
    trim(&mut sa);
    trim(&mut sb);
    let mut z1 = mul(&sa, &sb);
    let neg0: IPoly = z0.iter().map(|c| -c).collect();
    let neg2: IPoly = z2.iter().map(|c| -c).collect();
    add_into(&mut z1, &neg0, 0);
    add_into(&mut z1, &neg2, 0);
    let mut out = z0;
    add_into(&mut out, &z1, m);
    add_into(&mut out, &z2, 2 * m);
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> IPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    trim(&mut out);
    out
}

pub(crate) fn derivative(p: &[BigInt]) -> IPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut out: IPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
pub(crate) fn prem(a: &[BigInt], b: &[BigInt]) -> IPoly {
    let db = degree(b).expect("pseudo-division by zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    let Some(da) = degree(&r) else {
        return r;
    };
    if da < db {
        return r;
    }
    let lb = &b[db];
    let mut steps = da - db + 1;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb.clone(), steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Exact quotient `a / b` in `Z[x]`, or `None` when `b` does not divide `a`.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<IPoly> {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    let Some(da) = degree(&r) else {
        return Some(Vec::new());
    };
    if da < db {
        return None;
    }
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); da - db + 1];
    while let Some(dr) = degree(&r) {
        if dr < db {
            return None;
        }
        let (qc, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &qc * c;
        }
        q[shift] = qc;
        trim(&mut r);
    }
    Some(q)
}

fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Symmetric base-`x` digits of `h`, read back as a polynomial.
fn interpolate(mut h: BigInt, x: &BigInt) -> IPoly {
    let half = x >> 1;
    let mut out = Vec::new();
    while !h.is_zero() {
        let mut g = h.mod_floor(x);
        if g > half {
            g -= x;
        }
        h = (&h - &g) / x;
        out.push(g);
    }
    out
}

/// Heuristic gcd via evaluation at a large integer; `None` means give up.
fn heu_gcd(f: &[BigInt], g: &[BigInt]) -> Option<IPoly> {
    let fnorm = max_norm(f);
    let gnorm = max_norm(g);
    let b: BigInt = BigInt::from(2) * fnorm.clone().min(gnorm.clone()) + 29;
    let lf = f.last().unwrap().abs();
    let lg = g.last().unwrap().abs();
    let alt = BigInt::from(2) * (&fnorm / &lf).min(&gnorm / &lg) + 2;
    let sq = b.sqrt() * 99;
    let mut x = b.clone().min(sq).max(alt);
    for _ in 0..6 {
        let ff = eval(f, &x);
        let gg = eval(g, &x);
        if !ff.is_zero() && !gg.is_zero() {
            let h = ff.gcd(&gg);
            let cand = primitive(&interpolate(h.clone(), &x));
            if !cand.is_empty() && exact_div(f, &cand).is_some() && exact_div(g, &cand).is_some() {
                return Some(cand);
            }
            let cff = &ff / &h;
            let cf = interpolate(cff, &x);
            if !cf.is_empty() {
                if let Some(hh) = exact_div(f, &cf) {
                    let hh = primitive(&hh);
                    if !hh.is_empty() && exact_div(g, &hh).is_some() {
                        return Some(hh);
                    }
                }
            }
            let cfg = &gg / &h;
            let cg = interpolate(cfg, &x);
            if !cg.is_empty() {
                if let Some(hh) = exact_div(g, &cg) {
                    let hh = primitive(&hh);
                    if !hh.is_empty() && exact_div(f, &hh).is_some() {
                        return Some(hh);
                    }
                }
            }
        }
        let r = x.sqrt().sqrt();
        x = (x * BigInt::from(73794) * r) / BigInt::from(27011);
    }
    None
}

fn prs_gcd(f: &[BigInt], g: &[BigInt]) -> IPoly {
    let mut a = primitive(f);
    let mut b = primitive(g);
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = primitive_keep_sign(&r);
    }
    primitive(&a)
}

/// Primitive gcd with positive leading coefficient; content is ignored.
pub(crate) fn gcd(f: &[BigInt], g: &[BigInt]) -> IPoly {
    if f.is_empty() {
        return primitive(g);
    }
    if g.is_empty() {
        return primitive(f);
    }
    let f = primitive(f);
    let g = primitive(g);
    if f.len() == 1 || g.len() == 1 {
        return vec![BigInt::one()];
    }
    if f == g {
        return f;
    }
    heu_gcd(&f, &g).unwrap_or_else(|| prs_gcd(&f, &g))
}

pub(crate) fn sign_of(c: &BigInt) -> i8 {
    match c.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(v: &[i64]) -> IPoly {
        let mut p: IPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let a: IPoly = (0..70).map(|i| BigInt::from(i * 7 - 100)).collect();
        let b: IPoly = (0..65).map(|i| BigInt::from(3 - i * i)).collect();
        assert_eq!(karatsuba(&a, &b), schoolbook(&a, &b));
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let common = ip(&[3, 0, 2]);
        let f = mul(&common, &ip(&[-1, 1]));
        let g = mul(&common, &ip(&[5, 0, 0, 7]));
        assert_eq!(gcd(&f, &g), ip(&[3, 0, 2]));
        assert_eq!(prs_gcd(&f, &g), ip(&[3, 0, 2]));
    }

    #[test]
    fn exact_division_detects_remainders() {
        assert_eq!(exact_div(&ip(&[-1, 0, 1]), &ip(&[-1, 1])), Some(ip(&[1, 1])));
        assert_eq!(exact_div(&ip(&[1, 0, 1]), &ip(&[-1, 1])), None);
    }
}
