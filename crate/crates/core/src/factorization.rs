use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ratq::Vec2;

/// Multiplicities of each generator in an expression of a target vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    mults: Vec<BigInt>,
    length: BigInt,
}

impl Factorization {
    /// Checks that `mults` are nonnegative and that `sum mults[i] * gens[i]`
    /// equals `target`.
    pub fn new(gens: &[Vec2], mults: Vec<BigInt>, target: &Vec2) -> Result<Self> {
        if mults.len() != gens.len() || mults.iter().any(Signed::is_negative) {
            return Err(Error::FactorizationMismatch);
        }
        let (mut x, mut y) = (BigInt::zero(), BigInt::zero());
        for (g, k) in gens.iter().zip(&mults) {
            x += g.x() * k;
            y += g.y() * k;
        }
        if &x != target.x() || &y != target.y() {
            return Err(Error::FactorizationMismatch);
        }
        let length = mults.iter().sum();
        Ok(Factorization { mults, length })
    }

    pub fn mults(&self) -> &[BigInt] {
        &self.mults
    }

    pub fn length(&self) -> &BigInt {
        &self.length
    }

    /// The same factorization with multiplicities listed in another order:
    /// entry `i` of the result is `mults[order[i]]`.
    pub fn permuted(&self, order: &[usize]) -> Factorization {
        Factorization {
            mults: order.iter().map(|&i| self.mults[i].clone()).collect(),
            length: self.length.clone(),
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mults.iter().map(ToString::to_string).collect();
        write!(f, "({}) length {}", parts.join(","), self.length)
    }
}
