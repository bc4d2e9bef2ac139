//! Buchberger completion with Gebauer–Möller pair updates, shared by the
//! binomial and general coefficient paths.

use std::cmp::Ordering;

use crate::polyalg::{reduce_sorted, s_poly_sorted, Monomial, Polynomial, Ring};

use super::binomial::Binomial;

/// What the completion loop needs from a basis element.
pub(crate) trait GbElement: Clone {
    fn lead(&self) -> &Monomial;
    /// S-pair of two elements, `None` when it vanishes.
    fn s_pair(&self, other: &Self, ring: &Ring) -> Option<Self>;
    /// Full normal form, made monic; `None` when it reduces to zero.
    fn reduce(&self, by: &[&Self], ring: &Ring) -> Option<Self>;
}

impl GbElement for Binomial {
    fn lead(&self) -> &Monomial {
        &self.lead
    }

    fn s_pair(&self, other: &Self, ring: &Ring) -> Option<Self> {
        let l = self.lead.lcm(&other.lead);
        let a = l.div(&self.lead).expect("lcm").mul(&self.trail);
        let b = l.div(&other.lead).expect("lcm").mul(&other.trail);
        Binomial::oriented(a, b, ring.order())
    }

    fn reduce(&self, by: &[&Self], ring: &Ring) -> Option<Self> {
        Binomial::oriented(Binomial::nf_monomial(&self.lead, by), Binomial::nf_monomial(&self.trail, by), ring.order())
    }
}

impl GbElement for Polynomial {
    fn lead(&self) -> &Monomial {
        self.leading_monomial().expect("basis elements are nonzero")
    }

    fn s_pair(&self, other: &Self, _ring: &Ring) -> Option<Self> {
        let s = s_poly_sorted(self, other);
        (!s.is_zero()).then_some(s)
    }

    fn reduce(&self, by: &[&Self], _ring: &Ring) -> Option<Self> {
        let r = reduce_sorted(self, by);
        (!r.is_zero()).then(|| r.monic())
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

/// Incremental Buchberger state. Elements are only ever appended; those whose
/// leading monomial became redundant are kept for old pairs but marked inactive.
pub(crate) struct Engine<E> {
    ring: Ring,
    basis: Vec<E>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<E: GbElement> Engine<E> {
    pub fn new(ring: &Ring) -> Self {
        Engine { ring: ring.clone(), basis: Vec::new(), active: Vec::new(), pairs: Vec::new() }
    }

    pub fn active(&self) -> Vec<&E> {
        self.basis.iter().zip(&self.active).filter(|(_, &a)| a).map(|(e, _)| e).collect()
    }

    pub fn into_active(self) -> Vec<E> {
        self.basis.into_iter().zip(self.active).filter(|(_, a)| *a).map(|(e, _)| e).collect()
    }

    pub fn normal_form(&self, f: &E) -> Option<E> {
        f.reduce(&self.active(), &self.ring)
    }

    /// Reduce `f` against the current basis and insert the remainder.
    /// Returns whether anything was added.
    pub fn add(&mut self, f: &E) -> bool {
        match self.normal_form(f) {
            Some(h) => {
                self.insert(h);
                true
            }
            None => false,
        }
    }

    /// Process pairs in normal-strategy order until none with lcm degree at
    /// most `max_degree` remain (all of them when `None`).
    pub fn complete(&mut self, max_degree: Option<u64>) {
        while let Some(k) = self.select(max_degree) {
            let Pair { i, j, .. } = self.pairs.swap_remove(k);
            if let Some(s) = self.basis[i].s_pair(&self.basis[j], &self.ring) {
                if let Some(h) = self.normal_form(&s) {
                    self.insert(h);
                }
            }
        }
    }

    fn select(&self, max_degree: Option<u64>) -> Option<usize> {
        let order = self.ring.order();
        let mut best: Option<usize> = None;
        for (k, p) in self.pairs.iter().enumerate() {
            if max_degree.is_some_and(|d| p.degree > d) {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    let q = &self.pairs[b];
                    p.degree
                        .cmp(&q.degree)
                        .then_with(|| order.cmp(&p.lcm, &q.lcm))
                        .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
                        == Ordering::Less
                }
            };
            if better {
                best = Some(k);
            }
        }
        best
    }

    fn insert(&mut self, h: E) {
        let hl = h.lead().clone();
        let k = self.basis.len();
        let mut cand: Vec<(usize, Monomial, bool)> = self
            .basis
            .iter()
            .enumerate()
            .filter(|&(g, _)| self.active[g])
            .map(|(g, e)| (g, hl.lcm(e.lead()), hl.is_coprime(e.lead())))
            .collect();
        cand.reverse();

        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, l, coprime)) = cand.pop() {
            let dominated = cand.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l, coprime));
            }
        }

        let basis = &self.basis;
        self.pairs.retain(|p| {
            !hl.divides(&p.lcm) || hl.lcm(basis[p.i].lead()) == p.lcm || hl.lcm(basis[p.j].lead()) == p.lcm
        });
        for (g, l, coprime) in kept {
            if !coprime {
                let degree = self.ring.degree_of(&l);
                self.pairs.push(Pair { i: g, j: k, lcm: l, degree });
            }
        }

        for g in 0..k {
            if self.active[g] && hl.divides(self.basis[g].lead()) {
                self.active[g] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
    }
}
