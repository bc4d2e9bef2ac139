use std::cmp::Ordering;

use crate::polyalg::{Monomial, MonomialOrder, Polynomial, Ring};

/// Monic pure difference `lead - trail` with `lead > trail`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    /// `a - b` up to sign, or `None` when `a == b`.
    pub fn oriented(a: Monomial, b: Monomial, order: &MonomialOrder) -> Option<Binomial> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn from_polynomial(f: &Polynomial) -> Option<Binomial> {
        let (a, b) = f.as_pure_difference()?;
        Binomial::oriented(a.clone(), b.clone(), f.ring().order())
    }

    pub fn to_polynomial(&self, ring: &Ring) -> Polynomial {
        Polynomial::binomial(ring, self.lead.clone(), self.trail.clone())
    }

    /// Each reduction step by a pure difference maps a monomial to a single
    /// smaller monomial, so the normal form of a monomial is a chain.
    pub fn nf_monomial(m: &Monomial, by: &[&Binomial]) -> Monomial {
        let mut m = m.clone();
        while let Some((q, g)) = by.iter().find_map(|g| m.div(&g.lead).map(|q| (q, g))) {
            m = q.mul(&g.trail);
        }
        m
    }
}
