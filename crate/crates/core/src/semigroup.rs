//! Minimal generating invariants of `k[x1, x2]^G` for `G = Z/p` acting by
//! `(1, b)`, and their lattice geometry.
//!
//! A monomial `x1^c x2^d` is invariant iff `c + b*d = 0 (mod p)`, so the
//! invariant ring is the semigroup ring of `{(c, d) : c + b*d = 0 mod p}` and
//! its minimal algebra generators are the indecomposable lattice points.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modarith::{is_prime, mod_inverse, CanonicalAction, MAX_MODULUS};

/// Exponent vector `(c, d)` of the monomial `x1^c x2^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentPair {
    pub c: u64,
    pub d: u64,
}

impl ExponentPair {
    pub const fn new(c: u64, d: u64) -> Self {
        ExponentPair { c, d }
    }

    /// Total degree `c + d`.
    pub fn degree(&self) -> u64 {
        self.c + self.d
    }

    pub fn transpose(&self) -> Self {
        ExponentPair { c: self.d, d: self.c }
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c, self.d)
    }
}

impl From<(u64, u64)> for ExponentPair {
    fn from((c, d): (u64, u64)) -> Self {
        ExponentPair { c, d }
    }
}

/// The minimal generators of the invariant semigroup, listed with `c`
/// strictly decreasing (and hence `d` strictly increasing).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantSet {
    points: Vec<ExponentPair>,
    p: u64,
    b: u64,
}

impl InvariantSet {
    /// Wrap an already-computed point list, checking the staircase shape and
    /// membership of every point.
    pub fn from_points(p: u64, b: u64, points: Vec<ExponentPair>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Parameter("an invariant set has at least two points".into()));
        }
        if points[0] != ExponentPair::new(p, 0) || points[points.len() - 1] != ExponentPair::new(0, p) {
            return Err(Error::Parameter("invariant set must start at (p,0) and end at (0,p)".into()));
        }
        for w in points.windows(2) {
            if !(w[0].c > w[1].c && w[0].d < w[1].d) {
                return Err(Error::Parameter(format!("points {} and {} break the staircase", w[0], w[1])));
            }
        }
        for pt in &points {
            if !(pt.c + b * pt.d).is_multiple_of(p) {
                return Err(Error::Parameter(format!("{pt} is not invariant for (p, b) = ({p}, {b})")));
            }
        }
        Ok(InvariantSet { points, p, b })
    }

    pub fn points(&self) -> &[ExponentPair] {
        &self.points
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Internal degrees `c + d` of the presentation variables `y_0..y_n`.
    pub fn degrees(&self) -> Vec<u64> {
        degrees(self)
    }

    pub fn slopes(&self) -> SlopeSet {
        slopes(self)
    }

    /// Swap `x1` and `x2`: the invariant set of the weight `b^{-1}`.
    pub fn transpose(&self) -> InvariantSet {
        let b_inv = mod_inverse(self.b as i64, self.p as i64).expect("b is a unit") as u64;
        let points = self.points.iter().rev().map(ExponentPair::transpose).collect();
        InvariantSet { points, p: self.p, b: b_inv }
    }
}

/// Distinct slopes of consecutive generator pairs, as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlopeSet(pub BTreeSet<Ratio<i64>>);

impl SlopeSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, r: &Ratio<i64>) -> bool {
        self.0.contains(r)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Ratio<i64>> {
        self.0.iter()
    }
}

fn check_weight(p: u64, b: u64) -> Result<()> {
    if p < 2 || p > MAX_MODULUS as u64 || !is_prime(p) {
        return Err(Error::Parameter(format!("p = {p} is not a supported prime")));
    }
    if b == 0 || b >= p {
        return Err(Error::Parameter(format!("weight b = {b} must satisfy 0 < b < {p}")));
    }
    Ok(())
}

/// Minimal generators of `{(c, d) in N^2 : c + b*d = 0 mod p}`.
///
/// For each `1 <= d < p` the only candidate is `c = (-b*d) mod p`; anything
/// larger factors through `x1^p`. A candidate is a generator iff it is not
/// the sum of two nonzero members, and since every interior candidate has
/// `c < p` both addends must themselves be candidates.
pub fn invariant_generators(p: u64, b: u64) -> Result<InvariantSet> {
    check_weight(p, b)?;
    // c_of[d] = (-b d) mod p
    let c_of: Vec<u64> = (0..p).map(|d| (p - (b * d) % p) % p).collect();
    let mut points = vec![ExponentPair::new(p, 0)];
    for d in 1..p {
        let c = c_of[d as usize];
        let decomposable = (1..d).any(|d1| c_of[d1 as usize] + c_of[(d - d1) as usize] == c);
        if !decomposable {
            points.push(ExponentPair::new(c, d));
        }
    }
    points.push(ExponentPair::new(0, p));
    points.sort_by_key(|e| std::cmp::Reverse(e.c));
    debug_assert!(points.windows(2).all(|w| w[0].d < w[1].d));
    Ok(InvariantSet { points, p, b })
}

/// The two arithmetic progressions of generators read off from
/// `p = b*q + r` and `p = b^{-1}*s + t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionFamily {
    /// `(p - k*b, k)` for `0 <= k <= q`.
    pub near_x1: Vec<ExponentPair>,
    /// `(m, p - m*b^{-1})` for `0 <= m <= s`.
    pub near_x2: Vec<ExponentPair>,
}

impl DivisionFamily {
    pub fn union(&self) -> BTreeSet<ExponentPair> {
        self.near_x1.iter().chain(&self.near_x2).copied().collect()
    }
}

pub fn division_family(action: &CanonicalAction) -> DivisionFamily {
    let (p, b, b_inv) = (action.p as u64, action.b as u64, action.b_inv as u64);
    let q = p / b;
    let s = p / b_inv;
    DivisionFamily {
        near_x1: (0..=q).map(|k| ExponentPair::new(p - k * b, k)).collect(),
        near_x2: (0..=s).map(|m| ExponentPair::new(m, p - m * b_inv)).collect(),
    }
}

/// Closed forms for `b = 1` (the `p`-th Veronese) and `b = p - 1`.
pub fn special_cases(p: u64, b: u64) -> Result<Option<InvariantSet>> {
    check_weight(p, b)?;
    let points = if b == 1 {
        (0..=p).map(|k| ExponentPair::new(p - k, k)).collect()
    } else if b == p - 1 {
        vec![ExponentPair::new(p, 0), ExponentPair::new(1, 1), ExponentPair::new(0, p)]
    } else {
        return Ok(None);
    };
    Ok(Some(InvariantSet { points, p, b }))
}

pub fn slopes(inv: &InvariantSet) -> SlopeSet {
    SlopeSet(
        inv.points
            .windows(2)
            .map(|w| {
                let dd = w[1].d as i64 - w[0].d as i64;
                let dc = w[1].c as i64 - w[0].c as i64;
                Ratio::new(dd, dc)
            })
            .collect(),
    )
}

pub fn degrees(inv: &InvariantSet) -> Vec<u64> {
    inv.points.iter().map(ExponentPair::degree).collect()
}
