use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Ring};
use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial with exact rational coefficients. Terms are kept sorted in
/// decreasing order under the ring's monomial order, with no zero
/// coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Polynomial::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, Coeff::one())
    }

    pub fn term(ring: &Ring, mono: Monomial, c: Coeff) -> Self {
        debug_assert_eq!(mono.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(mono, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &Ring, mono: Monomial) -> Self {
        Polynomial::term(ring, mono, Coeff::one())
    }

    /// `v_i^e`.
    pub fn var_power(ring: &Ring, i: usize, e: u32) -> Self {
        Polynomial::monomial(ring, Monomial::var_power(ring.nvars(), i, e))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial::var_power(ring, i, 1)
    }

    /// The pure difference `m1 - m2`.
    pub fn binomial(ring: &Ring, m1: Monomial, m2: Monomial) -> Self {
        Polynomial::from_terms(ring, [(m1, Coeff::one()), (m2, -Coeff::one())])
    }

    /// Collect arbitrary terms: sorts, merges equal monomials, drops zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Build from terms already sorted decreasingly with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Internal degree of a nonzero homogeneous polynomial.
    pub fn degree(&self) -> Option<u64> {
        let d = self.ring.degree_of(&self.terms.first()?.0);
        self.terms.iter().all(|(m, _)| self.ring.degree_of(m) == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`; order-preserving since monomial orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self + c * m * other`, by a sorted merge.
    pub fn add_scaled(&self, c: &Coeff, m: &Monomial, other: &Polynomial) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(t, x)| (t.mul(m), x * c)).peekable();
        loop {
            let which = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match which {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (t, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((t.clone(), s));
                    }
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// The same polynomial over a copy of the ring sorted by another order.
    pub fn reorder(&self, order: &MonomialOrder) -> Result<Polynomial> {
        if self.ring.order() == order {
            return Ok(self.clone());
        }
        let ring = self.ring.with_order(order.clone())?;
        Ok(Polynomial::from_terms(&ring, self.terms.iter().cloned()))
    }

    /// Move to another ring by a monomial map (used to leave an elimination ring).
    pub fn map_monomials(&self, ring: &Ring, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// `Some((lead, trail))` when the polynomial is `lead - trail` or `trail - lead`
    /// for two distinct monomials.
    pub fn as_pure_difference(&self) -> Option<(&Monomial, &Monomial)> {
        if self.terms.len() != 2 {
            return None;
        }
        let (c0, c1) = (&self.terms[0].1, &self.terms[1].1);
        (c0.abs().is_one() && (c0 + c1).is_zero()).then(|| (&self.terms[0].0, &self.terms[1].0))
    }

    /// Parse `"y1^2 - y0*y2"`, `"3/2*y0*y1 + 1"` and similar.
    pub fn parse(ring: &Ring, text: &str) -> Result<Polynomial> {
        Parser { ring, chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }.polynomial()
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.same_space(&other.ring) || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.ring.order() == other.ring.order() {
            return self.terms == other.terms;
        }
        let mut a: Vec<_> = self.terms.iter().collect();
        let mut b: Vec<_> = other.terms.iter().collect();
        a.sort_by(|x, y| x.0.cmp(&y.0));
        b.sort_by(|x, y| x.0.cmp(&y.0));
        a == b
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.render(self.ring.names()))?;
            } else {
                write!(f, "{abs}*{}", m.render(self.ring.names()))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_space(&rhs.ring));
        self.add_scaled(&Coeff::one(), &Monomial::one(self.ring.nvars()), rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_space(&rhs.ring));
        self.add_scaled(&-Coeff::one(), &Monomial::one(self.ring.nvars()), rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_space(&rhs.ring));
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Coeff::zero) += c1 * c2;
            }
        }
        Polynomial::from_terms(&self.ring, acc)
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {}", self.pos))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -Coeff::one()
            }
            Some('+') => {
                self.pos += 1;
                Coeff::one()
            }
            _ => Coeff::one(),
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * &sign));
            match self.peek() {
                None => break,
                Some('+') => sign = Coeff::one(),
                Some('-') => sign = -Coeff::one(),
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }

    fn term(&mut self) -> Result<(Monomial, Coeff)> {
        let mut c = Coeff::one();
        let mut m = Monomial::one(self.ring.nvars());
        loop {
            match self.peek() {
                Some(ch) if ch.is_ascii_digit() => {
                    let num = self.integer()?;
                    let value = if self.peek() == Some('/') {
                        self.pos += 1;
                        let den = self.integer()?;
                        if den.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        BigRational::new(num, den)
                    } else {
                        BigRational::from_integer(num)
                    };
                    c *= value;
                }
                Some(ch) if ch.is_ascii_alphabetic() || ch == '_' => {
                    let start = self.pos;
                    while matches!(self.peek(), Some(ch) if ch.is_ascii_alphanumeric() || ch == '_') {
                        self.pos += 1;
                    }
                    let name: String = self.chars[start..self.pos].iter().collect();
                    let i =
                        self.ring.var_index(&name).ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        e = self.integer()?.try_into().map_err(|_| self.err("exponent too large"))?;
                    }
                    m = m.mul(&Monomial::var_power(self.ring.nvars(), i, e));
                }
                _ => return Err(self.err("expected a number or a variable")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((m, c));
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(ch) if ch.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("bad integer"))
    }
}
