//! Exact multivariate polynomial arithmetic over `Q` with graded monomial
//! orders.

mod monomial;
mod order;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{coeff, Coeff, Polynomial};
pub use ring::{GradedRing, Ring};

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Checked comparison of two monomials under `order`.
pub fn compare(m1: &Monomial, m2: &Monomial, order: &MonomialOrder) -> Result<Ordering> {
    order.compare(m1, m2)
}

/// Full reduction of `f` by `divisors`. Everything must already be sorted by
/// the same order. The greatest reducible term is reduced first, by the first
/// divisor (in list order) whose leading monomial divides it.
pub(crate) fn reduce_sorted(f: &Polynomial, divisors: &[&Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut done: Vec<(Monomial, Coeff)> = Vec::new();
    let mut work = f.clone();
    while let Some((m, c)) = work.leading_term().cloned() {
        let hit = divisors.iter().find_map(|g| {
            let (lm, lc) = g.leading_term()?;
            m.div(lm).map(|q| (q, lc, *g))
        });
        match hit {
            Some((q, lc, g)) => {
                let factor = -(&c / lc);
                work = work.add_scaled(&factor, &q, g);
            }
            None => {
                done.push((m, c));
                let mut terms = work.into_terms();
                terms.remove(0);
                work = Polynomial::from_sorted_terms(&ring, terms);
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, done)
}

/// Remainder of `f` on division by `g` under `order`; returned over `f`'s ring.
pub fn normal_form(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    if g.is_empty() {
        return Err(Error::Parameter("normal form needs at least one divisor".into()));
    }
    for h in g {
        f.ring().check_same_space(h.ring())?;
    }
    let fo = f.reorder(order)?;
    let go: Vec<Polynomial> = g.iter().filter(|h| !h.is_zero()).map(|h| h.reorder(order)).collect::<Result<_>>()?;
    let refs: Vec<&Polynomial> = go.iter().collect();
    reduce_sorted(&fo, &refs).reorder(f.ring().order())
}

/// `lcm/LT(f) * f - lcm/LT(g) * g`, with leading terms cancelling.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    f.ring().check_same_space(g.ring())?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::Parameter("S-polynomial of a zero polynomial".into()));
    }
    let fo = f.reorder(order)?;
    let go = g.reorder(order)?;
    let s = s_poly_sorted(&fo, &go);
    s.reorder(f.ring().order())
}

pub(crate) fn s_poly_sorted(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), &fc.recip());
    let b = l.div(gm).unwrap();
    a.add_scaled(&-gc.recip(), &b, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring4() -> Ring {
        GradedRing::presentation(&[7, 5, 3, 7]).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn parse_and_render() {
        let r = ring4();
        let f = p(&r, "-y0*y2 + y1^2");
        assert_eq!(f.to_string(), "y1^2 - y0*y2");
        assert_eq!(p(&r, "3/2*y0*y1 - 2 + y3").to_string(), "3/2*y0*y1 + y3 - 2");
        assert_eq!(p(&r, "y1 - y1").to_string(), "0");
        assert!(Polynomial::parse(&r, "y9").is_err());
        assert!(Polynomial::parse(&r, "y1 +").is_err());
    }

    #[test]
    fn compare_examples() {
        let r = ring4();
        let ord = r.order().clone();
        let y1sq = p(&r, "y1^2").leading_monomial().unwrap().clone();
        let y0y2 = p(&r, "y0*y2").leading_monomial().unwrap().clone();
        assert_eq!(compare(&y1sq, &y0y2, &ord).unwrap(), Ordering::Greater);
        assert_eq!(compare(&y0y2, &y0y2, &ord).unwrap(), Ordering::Equal);

        let e = GradedRing::elimination(&[(7, 0).into(), (4, 1).into(), (1, 2).into(), (0, 7).into()]).unwrap();
        let x = p(&e, "x2").leading_monomial().unwrap().clone();
        let y = p(&e, "y0^3*y1^5*y3^2").leading_monomial().unwrap().clone();
        assert_eq!(compare(&x, &y, e.order()).unwrap(), Ordering::Greater);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring4();
        let ord = r.order().clone();
        let g = vec![p(&r, "y1^2 - y0*y2")];
        assert!(normal_form(&p(&r, "y1^2 - y0*y2"), &g, &ord).unwrap().is_zero());
        assert_eq!(normal_form(&p(&r, "y0"), &g, &ord).unwrap(), p(&r, "y0"));
        assert_eq!(normal_form(&p(&r, "y1^3"), &g, &ord).unwrap(), p(&r, "y0*y1*y2"));
        assert!(normal_form(&p(&r, "y0"), &[], &ord).is_err());
    }

    #[test]
    fn s_polynomial_examples() {
        let r = ring4();
        let ord = r.order().clone();
        let f = p(&r, "y1^2 - y0*y2");
        let g = p(&r, "y2^4 - y1*y3");
        assert!(s_polynomial(&f, &f, &ord).unwrap().is_zero());
        let s = s_polynomial(&f, &g, &ord).unwrap();
        assert_eq!(s, p(&r, "y1^3*y3 - y0*y2^5"));
        assert!(s.as_pure_difference().is_some());
        assert!(s_polynomial(&f, &Polynomial::zero(&r), &ord).is_err());
    }

    #[test]
    fn normal_form_under_other_order_returns_original_ring() {
        let r = ring4();
        let f = p(&r, "y1^3 + y0*y3");
        let g = vec![p(&r, "y1^2 - y0*y2")];
        let nf = normal_form(&f, &g, &MonomialOrder::Lex).unwrap();
        // Under lex y0*y2 is the leading term, so y1^3 is not reducible.
        assert_eq!(nf, f);
        assert_eq!(nf.ring().order(), r.order());
    }

    fn arb_poly(r: Ring) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, 4), -3i64..4), 0..5).prop_map(move |ts| {
            Polynomial::from_terms(&r, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(e), coeff(c))))
        })
    }

    fn arb_binomial(r: Ring) -> impl Strategy<Value = Polynomial> {
        (prop::collection::vec(0u32..4, 4), prop::collection::vec(0u32..4, 4))
            .prop_map(move |(a, b)| Polynomial::binomial(&r, Monomial::from_exponents(a), Monomial::from_exponents(b)))
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(ring4()), g in arb_poly(ring4()), h in arb_poly(ring4())) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn order_is_multiplicative(a in prop::collection::vec(0u32..5, 4),
                                   b in prop::collection::vec(0u32..5, 4),
                                   c in prop::collection::vec(0u32..5, 4)) {
            let r = ring4();
            let (a, b, c) = (Monomial::from_exponents(a), Monomial::from_exponents(b), Monomial::from_exponents(c));
            for ord in [r.order().clone(), MonomialOrder::Lex] {
                let base = ord.cmp(&a, &b);
                prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), base);
                prop_assert_eq!(ord.cmp(&b, &a), base.reverse());
                // 1 is the smallest monomial
                prop_assert_ne!(ord.cmp(&Monomial::one(4), &a), Ordering::Greater);
                if a.divides(&b) && a != b {
                    prop_assert_eq!(ord.cmp(&a, &b), Ordering::Less);
                }
            }
        }

        #[test]
        fn normal_form_idempotent(f in arb_poly(ring4()), g1 in arb_poly(ring4()), g2 in arb_poly(ring4())) {
            let gs: Vec<_> = [g1, g2].into_iter().filter(|g| !g.is_zero()).collect();
            prop_assume!(!gs.is_empty());
            let ord = ring4().order().clone();
            let once = normal_form(&f, &gs, &ord).unwrap();
            prop_assert_eq!(normal_form(&once, &gs, &ord).unwrap(), once);
        }

        #[test]
        fn binomial_closure(f in arb_binomial(ring4()), g in arb_binomial(ring4()), h in arb_binomial(ring4())) {
            prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
            let ord = ring4().order().clone();
            let s = s_polynomial(&f, &g, &ord).unwrap();
            prop_assert!(s.is_zero() || s.as_pure_difference().is_some());
            let nf = normal_form(&s, &[f.clone(), g.clone(), h.clone()], &ord).unwrap();
            prop_assert!(nf.is_zero() || nf.as_pure_difference().is_some());
        }
    }
}
