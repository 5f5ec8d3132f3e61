use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ring::{Monomial, VariableContext};

/// A monomial order on squarefree monomials.
///
/// `Lex` compares by the leftmost variable in which two monomials differ.
/// `WeightedLex` first compares the total weight of the variables present
/// and falls back to `Lex` on ties. Weights are non-negative, which keeps
/// the order a well-order with `1` as the smallest monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    WeightedLex(Vec<u64>),
}

impl MonomialOrder {
    pub fn weighted_lex(weights: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(weights.len());
        for (index, &weight) in weights.iter().enumerate() {
            if weight < 0 {
                return Err(Error::NegativeWeight { index, weight });
            }
            out.push(weight as u64);
        }
        Self::from_unsigned(out)
    }

    pub fn from_unsigned(weights: Vec<u64>) -> Result<Self> {
        if weights.len() > crate::ring::MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                count: weights.len(),
                max: crate::ring::MAX_VARIABLES,
            });
        }
        weights
            .iter()
            .try_fold(0u64, |acc, &w| acc.checked_add(w))
            .ok_or(Error::WeightOverflow)?;
        Ok(MonomialOrder::WeightedLex(weights))
    }

    pub fn weights(&self) -> Option<&[u64]> {
        match self {
            MonomialOrder::Lex => None,
            MonomialOrder::WeightedLex(w) => Some(w),
        }
    }

    /// Checks that the order can be used with `ctx`.
    pub fn check(&self, ctx: &VariableContext) -> Result<()> {
        match self {
            MonomialOrder::WeightedLex(w) if w.len() != ctx.len() => Err(Error::WeightLength {
                expected: ctx.len(),
                found: w.len(),
            }),
            _ => Ok(()),
        }
    }

    pub fn weighted_degree(&self, m: Monomial) -> u64 {
        match self {
            MonomialOrder::Lex => 0,
            MonomialOrder::WeightedLex(w) => m.vars().map(|i| w.get(i).copied().unwrap_or(0)).sum(),
        }
    }

    /// A sort key whose numeric order is this monomial order.
    ///
    /// The weighted degree occupies the high 64 bits, the lex mask the low
    /// 64 bits; construction guarantees the degree fits.
    #[inline]
    pub fn key(&self, m: Monomial) -> u128 {
        ((self.weighted_degree(m) as u128) << 64) | m.bits() as u128
    }

    pub fn compare(&self, a: Monomial, b: Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(&b),
            MonomialOrder::WeightedLex(_) => self
                .weighted_degree(a)
                .cmp(&self.weighted_degree(b))
                .then_with(|| a.cmp(&b)),
        }
    }

    /// Variable indices from largest to smallest under this order.
    pub fn variable_order(&self, ctx: &VariableContext) -> Vec<usize> {
        let mut vars: Vec<usize> = (0..ctx.len()).collect();
        vars.sort_by(|&i, &j| self.compare(Monomial::var(j), Monomial::var(i)));
        vars
    }
}
