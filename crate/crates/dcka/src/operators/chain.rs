use num_traits::One;

use crate::exact_core::{rat, Rat};
use crate::wronskian::QuasiRat;

use super::DiffOp;

/// Product `c · F_1 F_2 ⋯ F_n` kept in factored form; `F_n` acts first.
///
/// High-order ladder operators are only ever applied to functions, so they
/// are stored this way and expanded on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpChain {
    scalar: Rat,
    factors: Vec<DiffOp>,
}

impl OpChain {
    pub fn identity() -> Self {
        OpChain { scalar: Rat::one(), factors: Vec::new() }
    }

    pub fn from_op(op: DiffOp) -> Self {
        OpChain { scalar: Rat::one(), factors: vec![op] }
    }

    /// Leftmost factor first.
    pub fn from_factors(factors: Vec<DiffOp>) -> Self {
        OpChain { scalar: Rat::one(), factors }
    }

    pub fn factors(&self) -> &[DiffOp] {
        &self.factors
    }

    pub fn scalar(&self) -> &Rat {
        &self.scalar
    }

    pub fn scale(&self, s: &Rat) -> OpChain {
        OpChain { scalar: &self.scalar * s, factors: self.factors.clone() }
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|f| f.order().unwrap_or(0)).sum()
    }

    /// `self ∘ other`.
    pub fn then_left_of(&self, other: &OpChain) -> OpChain {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        OpChain { scalar: &self.scalar * &other.scalar, factors }
    }

    /// Formal adjoint: factors reversed and adjointed.
    pub fn adjoint(&self) -> OpChain {
        OpChain {
            scalar: self.scalar.clone(),
            factors: self.factors.iter().rev().map(|f| f.adjoint()).collect(),
        }
    }

    pub fn apply(&self, f: &QuasiRat) -> QuasiRat {
        let mut cur = f.clone();
        for op in self.factors.iter().rev() {
            if cur.is_zero() {
                return cur;
            }
            cur = op.apply(&cur);
        }
        cur.scale(&self.scalar)
    }

    /// The product as a single operator.
    pub fn expand(&self) -> DiffOp {
        let mut acc = DiffOp::identity();
        for op in self.factors.iter().rev() {
            acc = op.compose(&acc);
        }
        acc.scale(&self.scalar)
    }

    pub fn negate(&self) -> OpChain {
        self.scale(&rat(-1))
    }
}
