use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

/// Admissible monomial orders. Variable 0 is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Weighted degree first, ties broken reverse-lexicographically: the
    /// monomial with the smaller exponent in the last differing variable wins.
    WeightedGrevlex {
        weights: Vec<u64>,
    },
    Lex,
    /// Variables `[0, split)` form the first block and are compared first;
    /// each block uses weighted grevlex with its own weights.
    Block {
        split: usize,
        first: Vec<u64>,
        second: Vec<u64>,
    },
}

fn grevlex(a: &[u32], b: &[u32], weights: &[u64]) -> Ordering {
    let wa: u64 = a.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum();
    let wb: u64 = b.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum();
    wa.cmp(&wb).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn weighted_grevlex(weights: Vec<u64>) -> Self {
        MonomialOrder::WeightedGrevlex { weights }
    }

    /// Number of variables the order is defined on, or `None` for lex.
    pub fn nvars(&self) -> Option<usize> {
        match self {
            MonomialOrder::WeightedGrevlex { weights } => Some(weights.len()),
            MonomialOrder::Lex => None,
            MonomialOrder::Block { first, second, .. } => Some(first.len() + second.len()),
        }
    }

    /// Compare two monomials of the same ring. Unchecked; see [`Self::compare`].
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::WeightedGrevlex { weights } => grevlex(a, b, weights),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Block { split, first, second } => {
                grevlex(&a[..*split], &b[..*split], first).then_with(|| grevlex(&a[*split..], &b[*split..], second))
            }
        }
    }

    /// Checked comparison: errors when the monomials do not share a ring.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        let n = self.nvars().unwrap_or(a.nvars());
        if a.nvars() != n || b.nvars() != n {
            return Err(Error::RingMismatch(format!(
                "monomials over {} and {} variables compared under an order on {n}",
                a.nvars(),
                b.nvars()
            )));
        }
        Ok(self.cmp(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    // Hand-evaluated reference table for weights (7,5,3,7), y0 > y1 > y2 > y3.
    // Equal weighted degree is broken by the last variable in which the
    // exponents differ; the smaller exponent there is the larger monomial.
    #[test]
    fn weighted_grevlex_reference_table() {
        let ord = MonomialOrder::weighted_grevlex(vec![7, 5, 3, 7]);
        let table: &[(&[u32], &[u32], Ordering)] = &[
            // y1^2 (10) vs y0 y2 (10): last difference at y2, 0 < 1
            (&[0, 2, 0, 0], &[1, 0, 1, 0], Ordering::Greater),
            // y2^4 (12) vs y1 y3 (12): last difference at y3, 0 < 1
            (&[0, 0, 4, 0], &[0, 1, 0, 1], Ordering::Greater),
            // y1 y2^3 (14) vs y0 y3 (14)
            (&[0, 1, 3, 0], &[1, 0, 0, 1], Ordering::Greater),
            // y0 (7) vs y3 (7): last difference at y3
            (&[1, 0, 0, 0], &[0, 0, 0, 1], Ordering::Greater),
            // y0 (7) vs y2^2 (6): degree decides
            (&[1, 0, 0, 0], &[0, 0, 2, 0], Ordering::Greater),
            (&[0, 1, 1, 0], &[0, 1, 1, 0], Ordering::Equal),
        ];
        for (a, b, expected) in table {
            assert_eq!(ord.cmp(&m(a), &m(b)), *expected, "{a:?} vs {b:?}");
            assert_eq!(ord.cmp(&m(b), &m(a)), expected.reverse());
        }
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let ord = MonomialOrder::Block { split: 2, first: vec![1, 1], second: vec![7, 5, 3, 7] };
        let with_x = m(&[1, 0, 0, 0, 0, 0]);
        let big_y = m(&[0, 0, 9, 9, 9, 9]);
        assert_eq!(ord.cmp(&with_x, &big_y), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 1, 0, 0, 0, 0]), &m(&[0, 0, 0, 0, 0, 5])), Ordering::Greater);
    }

    #[test]
    fn compare_detects_ring_mismatch() {
        let ord = MonomialOrder::weighted_grevlex(vec![1, 1]);
        assert!(ord.compare(&m(&[1, 0]), &m(&[1, 0, 0])).is_err());
        assert_eq!(ord.compare(&m(&[1, 0]), &m(&[1, 0])).unwrap(), Ordering::Equal);
    }
}
