use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use super::mat::Mat;
use super::normal_form::smith;

/// Finite abelian group `Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | … | d_k`, every `d_i ≥ 2`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FinAbGroup {
    factors: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders(&[BigInt::from(n)])
    }

    /// Normalizes any product of cyclic groups of the given (positive) orders.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        assert!(orders.iter().all(|d| d.is_positive()), "cyclic orders must be positive");
        let s = smith(&Mat::diagonal(orders.len(), orders.len(), orders));
        let factors = s.diagonal.into_iter().filter(|d| !d.is_one()).collect();
        FinAbGroup { factors }
    }

    /// Accepts an already-normalized chain, checking it.
    pub fn from_invariant_factors(factors: Vec<BigInt>) -> Option<Self> {
        let ok = factors.iter().all(|d| d > &BigInt::one())
            && factors.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        ok.then_some(FinAbGroup { factors })
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> BigInt {
        self.factors.last().cloned().unwrap_or_else(BigInt::one)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Whether every element is killed by `n`.
    pub fn is_killed_by(&self, n: &BigInt) -> bool {
        n.is_multiple_of(&self.exponent())
    }

    pub fn factors_u64(&self) -> Option<Vec<u64>> {
        self.factors.iter().map(|d| d.to_u64()).collect()
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for FinAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.factors.len()))?;
        for d in &self.factors {
            match d.to_u64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&d.to_string())?,
            }
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn normalization() {
        let g = FinAbGroup::from_cyclic_orders(&[b(4), b(2), b(1), b(6)]);
        assert_eq!(g.factors(), &[b(2), b(2), b(12)]);
        assert_eq!(g.order(), b(48));
        assert_eq!(g.exponent(), b(12));
        assert!(FinAbGroup::from_cyclic_orders(&[b(1)]).is_trivial());
        assert!(FinAbGroup::from_invariant_factors(vec![b(2), b(3)]).is_none());
        assert!(FinAbGroup::from_invariant_factors(vec![b(1)]).is_none());
        assert!(g.is_killed_by(&b(24)));
        assert!(!g.is_killed_by(&b(6)));
    }
}
