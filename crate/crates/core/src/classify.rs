//! Classification of actions by the product `(p-b)(p-b^{-1})` and the two
//! divisions of `p`, cross-checked against the computed invariants.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modarith::{is_prime, mod_inverse, normalize, Action, CanonicalAction};
use crate::semigroup::{invariant_generators, ExponentPair, InvariantSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassKind {
    Veronese,
    ThreeGenerators,
    Codim2,
    FiveGen2p1Lower,
    FiveGen2p1Upper,
    TwoSlope,
    General,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `p = b*q + r` and `p = b^{-1}*s + t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisionData {
    pub q: u64,
    pub r: u64,
    pub s: u64,
    pub t: u64,
}

impl DivisionData {
    pub fn two_slope_condition(&self) -> bool {
        self.r == self.s && self.q == self.t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub p: u64,
    pub b: u64,
    pub b_inv: u64,
    pub swapped: bool,
    pub product: u64,
    pub k: u64,
    pub n_invariants: usize,
    pub n_slopes: usize,
    pub division: DivisionData,
    pub two_slope_condition: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassLabel {
    pub kind: ClassKind,
    pub evidence: Evidence,
}

impl ClassLabel {
    pub const CSV_HEADER: &'static str = "p,b,b_inv,product,k,n_invariants,n_slopes,q,r,s,t,label";

    pub fn csv_row(&self) -> String {
        let e = &self.evidence;
        let d = &e.division;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            e.p, e.b, e.b_inv, e.product, e.k, e.n_invariants, e.n_slopes, d.q, d.r, d.s, d.t, self.kind
        )
    }
}

fn weight(p: u64, b: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::Parameter(format!("p = {p} is not prime")));
    }
    if b == 0 || b >= p {
        return Err(Error::Parameter(format!("weight b = {b} must satisfy 0 < b < {p}")));
    }
    Ok(mod_inverse(b as i64, p as i64)? as u64)
}

/// `(p-b)(p-b^{-1})` and the `k` with product `= p*k + 1`.
pub fn product_invariant(p: u64, b: u64) -> Result<(u64, u64)> {
    let b_inv = weight(p, b)?;
    let product = (p - b) * (p - b_inv);
    Ok((product, (product - 1) / p))
}

pub fn division_data(p: u64, b: u64) -> Result<DivisionData> {
    let b_inv = weight(p, b)?;
    Ok(DivisionData { q: p / b, r: p % b, s: p / b_inv, t: p % b_inv })
}

/// The five generators predicted for a `2p+1` weight, or `None` when the
/// product is different. `alpha = (p-b^{-1}+1)/2` and `beta = (p-b+1)/2`.
pub fn predicted_2p1_invariants(p: u64, b: u64) -> Result<Option<Vec<ExponentPair>>> {
    let b_inv = weight(p, b)?;
    if (p - b) * (p - b_inv) != 2 * p + 1 {
        return Ok(None);
    }
    let middle = if 2 * b < p - 1 {
        ExponentPair::new(p - 2 * b, 2)
    } else {
        ExponentPair::new((p - b).div_ceil(2), (p - b_inv).div_ceil(2))
    };
    Ok(Some(vec![
        ExponentPair::new(p, 0),
        ExponentPair::new(p - b, 1),
        middle,
        ExponentPair::new(1, p - b_inv),
        ExponentPair::new(0, p),
    ]))
}

/// Classify the action `(1, b)`; see [`classify_action`].
pub fn classify(p: u64, b: u64) -> Result<ClassLabel> {
    classify_action(&Action::new(p as i64, 1, b as i64)?)
}

/// Normalize, then label in priority order: Veronese, three generators,
/// codimension two, the two `2p+1` branches, two slopes, general. Fails with
/// [`Error::TheoremViolation`] if the computed invariants contradict the label.
pub fn classify_action(action: &Action) -> Result<ClassLabel> {
    classify_canonical(&normalize(action))
}

pub fn classify_canonical(c: &CanonicalAction) -> Result<ClassLabel> {
    let (p, b) = (c.p as u64, c.b as u64);
    let inv = invariant_generators(p, b)?;
    let (product, k) = product_invariant(p, b)?;
    let division = division_data(p, b)?;
    let evidence = Evidence {
        p,
        b,
        b_inv: c.b_inv as u64,
        swapped: c.swapped,
        product,
        k,
        n_invariants: inv.len(),
        n_slopes: inv.slopes().len(),
        division,
        two_slope_condition: division.two_slope_condition(),
    };
    let kind = if b == 1 {
        ClassKind::Veronese
    } else if b == p - 1 {
        ClassKind::ThreeGenerators
    } else if product == p + 1 {
        ClassKind::Codim2
    } else if product == 2 * p + 1 {
        if 2 * b < p - 1 {
            ClassKind::FiveGen2p1Lower
        } else {
            ClassKind::FiveGen2p1Upper
        }
    } else if evidence.two_slope_condition {
        ClassKind::TwoSlope
    } else {
        ClassKind::General
    };
    let label = ClassLabel { kind, evidence };
    check_theorems(&label, &inv)?;
    Ok(label)
}

/// The structural statements every label must be consistent with.
pub fn check_theorems(label: &ClassLabel, inv: &InvariantSet) -> Result<()> {
    let e = &label.evidence;
    let fail = |what: &str| Err(Error::TheoremViolation(format!("{what} fails at p = {}, b = {}: {e:?}", e.p, e.b)));
    if (e.n_invariants == 4) != (e.product == e.p + 1) {
        return fail("four generators iff product = p+1");
    }
    if let Some(points) = predicted_2p1_invariants(e.p, e.b)? {
        if inv.points() != points.as_slice() {
            return fail("product = 2p+1 forces the five predicted generators");
        }
    }
    if (e.n_slopes == 2) != e.two_slope_condition {
        return fail("two slopes iff r = s and q = t");
    }
    match label.kind {
        ClassKind::Veronese if e.n_invariants as u64 != e.p + 1 => fail("b = 1 gives p+1 generators"),
        ClassKind::ThreeGenerators if e.n_invariants != 3 => fail("b = p-1 gives three generators"),
        _ => Ok(()),
    }
}

/// Canonical weights of the sweep: primes `p <= p_max` and `1 <= b <= b^{-1}`,
/// in increasing `(p, b)` order.
pub fn sweep_points(p_max: u64) -> Vec<(u64, u64)> {
    (2..=p_max)
        .filter(|&p| is_prime(p))
        .flat_map(|p| {
            (1..p)
                .filter(move |&b| b <= mod_inverse(b as i64, p as i64).expect("prime modulus") as u64)
                .map(move |b| (p, b))
        })
        .collect()
}
