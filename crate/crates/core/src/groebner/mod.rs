//! Gröbner bases, ideal equality and toric kernels.

mod binomial;
mod engine;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::{GradedRing, Monomial, MonomialOrder, Polynomial, Ring};
use crate::semigroup::{ExponentPair, InvariantSet};

use binomial::Binomial;
use engine::{Engine, GbElement};

/// An ideal of a graded polynomial ring, given by generators.
#[derive(Clone)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    ring: Ring,
}

impl Ideal {
    /// Zero generators are dropped; the rest are re-sorted by `ring`'s order.
    pub fn new(ring: &Ring, generators: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = Vec::new();
        for g in generators {
            ring.check_same_space(g.ring())?;
            if !g.is_zero() {
                gens.push(g.reorder(ring.order())?);
            }
        }
        Ok(Ideal { generators: gens, ring: ring.clone() })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Vec<Polynomial>> {
        if self.is_zero() {
            return Ok(Vec::new());
        }
        buchberger(&self.generators, order)
    }

    pub fn reduced_basis(&self, order: &MonomialOrder) -> Result<Vec<Polynomial>> {
        let g = self.groebner_basis(order)?;
        reduce_basis(&g, order)
    }

    /// Ideal membership by normal form against a Gröbner basis.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.ring.check_same_space(f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        let g = self.groebner_basis(self.ring.order())?;
        if g.is_empty() {
            return Ok(false);
        }
        Ok(crate::polyalg::normal_form(f, &g, self.ring.order())?.is_zero())
    }

    /// A minimal homogeneous generating set, chosen greedily in degree order
    /// from the reduced Gröbner basis.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous("minimal generators need a homogeneous ideal".into()));
        }
        let mut g = self.reduced_basis(self.ring.order())?;
        let degree = |f: &Polynomial| f.degree().expect("homogeneous");
        let order = self.ring.order().clone();
        g.sort_by(|a, b| {
            degree(a)
                .cmp(&degree(b))
                .then_with(|| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
        });
        if let Some(bins) = as_binomials(&g) {
            let keep = greedy_minimal(&self.ring, &bins, |b| self.ring.degree_of(&b.lead));
            return Ok(keep.iter().map(|b| b.to_polynomial(&self.ring)).collect());
        }
        Ok(greedy_minimal(&self.ring, &g, degree))
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.generators.iter().map(|g| g.to_string())).finish()
    }
}

fn greedy_minimal<E: GbElement>(ring: &Ring, sorted: &[E], degree: impl Fn(&E) -> u64) -> Vec<E> {
    let mut engine = Engine::new(ring);
    let mut keep = Vec::new();
    for g in sorted {
        let d = degree(g);
        engine.complete(Some(d));
        if engine.add(g) {
            keep.push(g.clone());
        }
    }
    keep
}

/// The `2 x (n+1)` matrix whose columns are the invariant exponent pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMatrix {
    columns: Vec<(u64, u64)>,
}

impl DegreeMatrix {
    pub fn from_invariants(inv: &InvariantSet) -> Self {
        DegreeMatrix { columns: inv.points().iter().map(|e| (e.c, e.d)).collect() }
    }

    pub fn columns(&self) -> &[(u64, u64)] {
        &self.columns
    }

    /// Image exponent of `y^m` under `y_i -> x1^c_i x2^d_i`.
    pub fn bidegree(&self, m: &Monomial) -> (u64, u64) {
        m.exponents()
            .iter()
            .zip(&self.columns)
            .fold((0, 0), |(a, b), (&e, &(c, d))| (a + e as u64 * c, b + e as u64 * d))
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        let mut bidegrees = f.terms().iter().map(|(m, _)| self.bidegree(m));
        match bidegrees.next() {
            None => true,
            Some(first) => bidegrees.all(|b| b == first),
        }
    }
}

fn ordered_ring(gens: &[Polynomial], order: &MonomialOrder) -> Result<Ring> {
    let first = gens.first().ok_or_else(|| Error::Parameter("empty generator list".into()))?;
    for g in gens {
        first.ring().check_same_space(g.ring())?;
    }
    if first.ring().order() == order {
        Ok(first.ring().clone())
    } else {
        first.ring().with_order(order.clone())
    }
}

fn as_binomials(gens: &[Polynomial]) -> Option<Vec<Binomial>> {
    gens.iter().map(Binomial::from_polynomial).collect()
}

fn complete<E: GbElement>(ring: &Ring, gens: &[E]) -> Vec<E> {
    let mut engine = Engine::new(ring);
    for g in gens {
        engine.add(g);
    }
    engine.complete(None);
    engine.into_active()
}

fn reduce_elements<E: GbElement>(ring: &Ring, mut g: Vec<E>) -> Vec<E> {
    let order = ring.order();
    g.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    let mut minimal: Vec<E> = Vec::new();
    for e in g {
        if !minimal.iter().any(|m| m.lead().divides(e.lead())) {
            minimal.push(e);
        }
    }
    (0..minimal.len())
        .map(|i| {
            let others: Vec<&E> = minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, e)| e).collect();
            minimal[i].reduce(&others, ring).expect("minimal basis elements do not reduce to zero")
        })
        .collect()
}

/// A Gröbner basis of the ideal generated by `gens` under `order`. Pure
/// difference inputs take a coefficient-free fast path.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let ring = ordered_ring(gens, order)?;
    let gens: Vec<Polynomial> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| g.reorder(order)).collect::<Result<_>>()?;
    if let Some(bins) = as_binomials(&gens) {
        return Ok(complete(&ring, &bins).iter().map(|b| b.to_polynomial(&ring)).collect());
    }
    Ok(complete(&ring, &gens))
}

/// The reduced Gröbner basis: monic, inter-reduced, sorted by increasing
/// leading monomial. `g` must already be a Gröbner basis under `order`.
pub fn reduce_basis(g: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    if g.iter().all(Polynomial::is_zero) {
        return Ok(Vec::new());
    }
    let ring = ordered_ring(g, order)?;
    let g: Vec<Polynomial> = g.iter().filter(|f| !f.is_zero()).map(|f| f.reorder(order)).collect::<Result<_>>()?;
    if let Some(bins) = as_binomials(&g) {
        return Ok(reduce_elements(&ring, bins).iter().map(|b| b.to_polynomial(&ring)).collect());
    }
    let monic = g.iter().map(Polynomial::monic).collect();
    Ok(reduce_elements(&ring, monic))
}

/// Equality of ideals via their reduced Gröbner bases.
pub fn ideal_equal(i: &Ideal, j: &Ideal, order: &MonomialOrder) -> Result<bool> {
    i.ring.check_same_space(&j.ring)?;
    Ok(i.reduced_basis(order)? == j.reduced_basis(order)?)
}

/// Kernel of `y_i -> x1^c_i x2^d_i` by elimination of `x1, x2`, returned as a
/// minimal set of pure-difference generators over the presentation ring.
pub fn toric_kernel(inv: &InvariantSet) -> Result<Ideal> {
    let ring = GradedRing::presentation(&inv.degrees())?;
    let gb = toric_kernel_basis(inv)?;
    let ideal = Ideal::new(&ring, gb)?;
    let minimal = ideal.minimal_generators()?;
    Ideal::new(&ring, minimal)
}

/// Reduced Gröbner basis of the toric kernel under the presentation order.
pub fn toric_kernel_basis(inv: &InvariantSet) -> Result<Vec<Polynomial>> {
    let points = inv.points();
    let n = points.len();
    let elim = GradedRing::elimination(points)?;
    let gens: Vec<Binomial> = points
        .iter()
        .enumerate()
        .map(|(i, &ExponentPair { c, d })| {
            let mut y = vec![0u32; n + 2];
            y[2 + i] = 1;
            let mut x = vec![0u32; n + 2];
            x[0] = c as u32;
            x[1] = d as u32;
            Binomial::oriented(Monomial::from_exponents(x), Monomial::from_exponents(y), elim.order())
                .expect("distinct monomials")
        })
        .collect();
    let gb = reduce_elements(&elim, complete(&elim, &gens));
    let ring = GradedRing::presentation(&inv.degrees())?;
    let mut out: Vec<Binomial> = gb
        .into_iter()
        .filter(|b| b.lead.exponents()[..2] == [0, 0])
        .map(|b| Binomial { lead: b.lead.drop_leading(2), trail: b.trail.drop_leading(2) })
        .collect();
    out.sort_by(|a, b| ring.order().cmp(&a.lead, &b.lead));
    Ok(out.iter().map(|b| b.to_polynomial(&ring)).collect())
}

/// Monomials of weighted degree `degree` outside the leading-term ideal of
/// `ideal` under `order`.
pub fn standard_monomial_count(ideal: &Ideal, order: &MonomialOrder, degree: i64) -> Result<u64> {
    if degree < 0 {
        return Err(Error::Parameter(format!("negative degree {degree}")));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::Inhomogeneous("standard monomial count needs a homogeneous ideal".into()));
    }
    let ring = ideal.ring();
    if ring.degrees().contains(&0) {
        return Err(Error::Parameter("variables of degree zero".into()));
    }
    let leads: Vec<Monomial> =
        ideal.reduced_basis(order)?.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    let mut count = 0u64;
    let mut exps = vec![0u32; ring.nvars()];
    enumerate(ring.degrees(), 0, degree as u64, &mut exps, &mut |m| {
        let m = Monomial::from_exponents(m.to_vec());
        if !leads.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
    });
    Ok(count)
}

fn enumerate(degrees: &[u64], i: usize, left: u64, exps: &mut [u32], visit: &mut impl FnMut(&[u32])) {
    if i + 1 == degrees.len() {
        if left.is_multiple_of(degrees[i]) {
            exps[i] = (left / degrees[i]) as u32;
            visit(exps);
        }
        return;
    }
    for e in 0..=left / degrees[i] {
        exps[i] = e as u32;
        enumerate(degrees, i + 1, left - e * degrees[i], exps, visit);
    }
    exps[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{hilbert_count_invariants, kernel_membership};
    use crate::semigroup::invariant_generators;
    use proptest::prelude::*;

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|s| Polynomial::parse(ring, s).unwrap())).unwrap()
    }

    fn kernel(p: u64, b: u64) -> (InvariantSet, Ideal) {
        let inv = invariant_generators(p, b).unwrap();
        let k = toric_kernel(&inv).unwrap();
        (inv, k)
    }

    fn assert_kernel(p: u64, b: u64, expected: &[&str]) {
        let (_, k) = kernel(p, b);
        let e = ideal(k.ring(), expected);
        assert!(ideal_equal(&k, &e, k.ring().order()).unwrap(), "{p},{b}: {k:?}");
        assert_eq!(k.generators().len(), expected.len());
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = GradedRing::presentation(&[7, 5, 3, 7]).unwrap();
        let f = Polynomial::parse(&r, "y1^2 - y0*y2").unwrap();
        assert_eq!(buchberger(std::slice::from_ref(&f), r.order()).unwrap(), vec![f]);
    }

    #[test]
    fn zero_dimensional_toy() {
        let r = GradedRing::presentation(&[1, 1]).unwrap();
        let i = ideal(&r, &["y0^2", "y1^2 - y0"]);
        let g = i.reduced_basis(r.order()).unwrap();
        let shown: Vec<String> = g.iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, ["y1^2 - y0", "y0^2"]);
        assert!(i.contains(&Polynomial::parse(&r, "y1^4").unwrap()).unwrap());
        assert!(!i.contains(&Polynomial::parse(&r, "y1^3").unwrap()).unwrap());
    }

    #[test]
    fn general_coefficients() {
        let r = GradedRing::presentation(&[1, 1, 1]).unwrap();
        let i = ideal(&r, &["2*y0*y1 - 3*y2^2", "y0^2 + y1*y2 - y2^2"]);
        let g = i.reduced_basis(r.order()).unwrap();
        assert!(g.iter().all(|f| f.leading_coeff().unwrap() == &crate::polyalg::coeff(1)));
        let member = &(&Polynomial::parse(&r, "y0 + 5*y2").unwrap() * &i.generators()[0])
            - &(&Polynomial::parse(&r, "7/2*y1").unwrap() * &i.generators()[1]);
        assert!(i.contains(&member).unwrap());
        let swapped = Ideal::new(&r, i.generators().iter().rev().cloned()).unwrap();
        assert_eq!(swapped.reduced_basis(r.order()).unwrap(), g);
        assert_eq!(reduce_basis(&g, r.order()).unwrap(), g);
    }

    #[test]
    fn example_kernels() {
        assert_kernel(7, 3, &["y1^2 - y0*y2", "y2^4 - y1*y3", "y1*y2^3 - y0*y3"]);
        assert_kernel(
            13,
            5,
            &["y2^3-y1*y3", "y3^3-y2*y4", "y1^2-y0*y2", "y1*y2^2-y0*y3", "y2^2*y3^2-y1*y4", "y1*y2*y3^2-y0*y4"],
        );
        assert_kernel(
            13,
            4,
            &["y2^2-y1*y3", "y1*y2-y0*y3", "y3^5-y2*y4", "y1^2-y0*y2", "y2*y3^4-y1*y4", "y1*y3^4-y0*y4"],
        );
        assert_kernel(
            11,
            3,
            &[
                "y2^2-y1*y3",
                "y3^3-y2*y4",
                "y4^2-y3*y5",
                "y1*y2-y0*y3",
                "y2*y3^2-y1*y4",
                "y3^2*y4-y2*y5",
                "y1^2-y0*y2",
                "y1*y3^2-y0*y4",
                "y2*y3*y4-y1*y5",
                "y1*y3*y4-y0*y5",
            ],
        );
        for p in [3u64, 5, 7, 11] {
            let (_, k) = kernel(p, p - 1);
            assert_eq!(k.generators().len(), 1);
            assert_eq!(k.generators()[0].to_string(), format!("y1^{p} - y0*y2"));
        }
    }

    #[test]
    fn reduced_basis_is_idempotent_and_order_free() {
        let (_, k) = kernel(7, 3);
        let order = k.ring().order();
        let g = k.reduced_basis(order).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(reduce_basis(&g, order).unwrap(), g);
        let rev = Ideal::new(k.ring(), k.generators().iter().rev().cloned()).unwrap();
        assert_eq!(rev.reduced_basis(order).unwrap(), g);
    }

    #[test]
    fn ideal_inequality_and_mismatch() {
        let r = GradedRing::presentation(&[1, 1]).unwrap();
        let a = ideal(&r, &["y0"]);
        let b = ideal(&r, &["y0^2"]);
        assert!(!ideal_equal(&a, &b, r.order()).unwrap());
        assert!(ideal_equal(&a, &a, r.order()).unwrap());
        let s = GradedRing::presentation(&[1, 2]).unwrap();
        assert!(ideal_equal(&a, &ideal(&s, &["y0"]), r.order()).is_err());
    }

    #[test]
    fn kernel_generators_are_homogeneous_members() {
        for (p, b) in [(7u64, 3u64), (13, 5), (17, 10), (11, 3), (19, 2), (23, 7)] {
            let (inv, k) = kernel(p, b);
            let dm = DegreeMatrix::from_invariants(&inv);
            for g in k.generators() {
                assert!(g.as_pure_difference().is_some());
                assert!(g.is_homogeneous() && dm.is_homogeneous(g), "{g}");
                assert!(kernel_membership(g, &inv).unwrap(), "{g}");
            }
            assert_eq!(dm.columns().first(), Some(&(p, 0)));
            assert_eq!(dm.columns().last(), Some(&(0, p)));
        }
    }

    #[test]
    fn codim2_standard_monomials_in_y1_y2_cover_each_residue_once() {
        // Standard monomials y1^i y2^j map bijectively onto Z/p via the x1-exponent.
        for p in (3..50u64).filter(|&p| crate::modarith::is_prime(p)) {
            for b in (1..p).filter(|&b| crate::classify::product_invariant(p, b).unwrap().0 == p + 1) {
                let (inv, k) = kernel(p, b);
                let leads: Vec<Monomial> = k
                    .reduced_basis(k.ring().order())
                    .unwrap()
                    .iter()
                    .map(|g| g.leading_monomial().unwrap().clone())
                    .collect();
                let (c1, c2) = (inv.points()[1].c, inv.points()[2].c);
                let mut residues = Vec::new();
                for i in 0..=p as u32 {
                    for j in 0..=p as u32 {
                        let m = Monomial::from_exponents(vec![0, i, j, 0]);
                        if !leads.iter().any(|l| l.divides(&m)) {
                            residues.push((i as u64 * c1 + j as u64 * c2) % p);
                        }
                    }
                }
                residues.sort_unstable();
                assert_eq!(residues, (0..p).collect::<Vec<_>>(), "p = {p}, b = {b}");
            }
        }
    }

    #[test]
    fn standard_monomials_match_hilbert_counts() {
        let (_, k) = kernel(7, 3);
        let order = k.ring().order().clone();
        assert_eq!(standard_monomial_count(&k, &order, 0).unwrap(), 1);
        assert_eq!(standard_monomial_count(&k, &order, 7).unwrap(), 2);
        assert!(standard_monomial_count(&k, &order, -1).is_err());
        for p in [3u64, 5, 7] {
            let (_, v) = kernel(p, 1);
            assert_eq!(standard_monomial_count(&v, v.ring().order(), p as i64).unwrap(), p + 1);
        }
        for (p, b) in [(7u64, 3u64), (13, 5), (11, 3)] {
            let (_, k) = kernel(p, b);
            for n in 0..=3 * p {
                assert_eq!(
                    standard_monomial_count(&k, k.ring().order(), n as i64).unwrap(),
                    hilbert_count_invariants(p, b, n),
                    "{p},{b} at {n}"
                );
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn reduced_basis_independent_of_generator_order(seed in any::<u64>(), idx in 0usize..6) {
            let cases = [(7u64, 3u64), (13, 5), (13, 4), (11, 3), (17, 10), (19, 4)];
            let (p, b) = cases[idx];
            let (_, k) = kernel(p, b);
            let mut gens = k.generators().to_vec();
            let n = gens.len();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                gens.swap(i, (s >> 33) as usize % (i + 1));
            }
            let shuffled = Ideal::new(k.ring(), gens).unwrap();
            prop_assert_eq!(shuffled.reduced_basis(k.ring().order()).unwrap(), k.reduced_basis(k.ring().order()).unwrap());
        }
    }
}
