use num_traits::Zero;

use crate::exact_core::{rank, rat, Poly, Rat, RatFunc};
use crate::schemes::Scheme;

use super::{dcka_potential, DiffOp, OperatorError};

/// Result of searching for `O = a_2 d² + a_1 d + a_0` with
/// `a_j = p_j / (x² f²)`, `deg p_j ≤ degree_bound`, `f` the Wronskian core,
/// and `[L, O] = λ O`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderTwoReport {
    pub scheme: Scheme,
    pub degree_bound: usize,
    /// `(λ, dimension of the solution space)`.
    pub solutions: Vec<(Rat, usize)>,
}

impl OrderTwoReport {
    pub fn none_found(&self) -> bool {
        self.solutions.iter().all(|(_, d)| *d == 0)
    }
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = a.gcd(b);
    (a * b).exact_div(&g).expect("gcd divides the product").monic()
}

/// Exhaustive linear-algebra search for order-two ladder operators of the
/// deformed Hamiltonian within the bounded ansatz.
pub fn order_two_ladder_spot_check(
    s: &Scheme,
    degree_bound: usize,
    steps: &[Rat],
) -> Result<OrderTwoReport, OperatorError> {
    let l = dcka_potential(s)?;
    let core = crate::schemes::regularity(s).decomposition.core;
    let base_den = &Poly::monomial(rat(1), 2) * &(&core * &core);
    let h = l.to_diffop();
    let mut basis: Vec<DiffOp> = Vec::new();
    for slot in 0..3 {
        for p in 0..=degree_bound {
            let a = RatFunc::new(Poly::monomial(rat(1), p), base_den.clone()).unwrap();
            let mut c = vec![RatFunc::zero(); slot + 1];
            c[slot] = a;
            basis.push(DiffOp::from_coeffs(c));
        }
    }
    let comms: Vec<DiffOp> = basis.iter().map(|e| h.commutator(e)).collect();
    let mut solutions = Vec::new();
    for lambda in steps {
        let residues: Vec<DiffOp> =
            comms.iter().zip(&basis).map(|(c, e)| c.sub(&e.scale(lambda))).collect();
        let mut den = Poly::constant(rat(1));
        for r in &residues {
            for c in r.coeffs() {
                den = lcm(&den, c.den());
            }
        }
        // Equations: coefficient of x^i in slot j of den·residue.
        let mut cols: Vec<Vec<(usize, usize, Rat)>> = Vec::new();
        let mut max_deg = 0;
        for r in &residues {
            let mut col = Vec::new();
            for (j, c) in r.coeffs().iter().enumerate() {
                let p = (c.num() * &den).exact_div(c.den()).unwrap();
                for (i, v) in p.coeffs().iter().enumerate() {
                    if !v.is_zero() {
                        max_deg = max_deg.max(i);
                        col.push((j, i, v.clone()));
                    }
                }
            }
            cols.push(col);
        }
        let nrows = 4 * (max_deg + 1);
        let mut rows = vec![vec![Rat::zero(); cols.len()]; nrows];
        for (k, col) in cols.iter().enumerate() {
            for (j, i, v) in col {
                rows[j * (max_deg + 1) + i][k] = v.clone();
            }
        }
        let r = rank(&rows);
        solutions.push((lambda.clone(), cols.len() - r));
    }
    Ok(OrderTwoReport { scheme: s.clone(), degree_bound, solutions })
}
