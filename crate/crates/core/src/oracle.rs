//! Brute-force references for the fast paths. Nothing here calls into
//! `semigroup`, `groebner` or `resolution` computations; the oracles are
//! deliberately naive.

use std::collections::{HashMap, HashSet};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, Ideal};
use crate::polyalg::{Coeff, Polynomial};
use crate::resolution::Resolution;
use crate::semigroup::{ExponentPair, InvariantSet};

/// Indecomposable points of `{(c, d) : 0 <= c, d <= p, c + b*d = 0 mod p}`
/// found by testing every pair of members.
pub fn brute_semigroup(p: u64, b: u64) -> Result<InvariantSet> {
    if p < 2 || b == 0 || b >= p {
        return Err(Error::Parameter(format!("need 0 < b < p, got p = {p}, b = {b}")));
    }
    let members: Vec<(u64, u64)> = (0..=p)
        .flat_map(|c| (0..=p).map(move |d| (c, d)))
        .filter(|&(c, d)| (c, d) != (0, 0) && (c as u128 + b as u128 * d as u128).is_multiple_of(p as u128))
        .collect();
    let set: HashSet<(u64, u64)> = members.iter().copied().collect();
    let mut gens: Vec<ExponentPair> = members
        .iter()
        .filter(|&&(c, d)| {
            !members.iter().any(|&(e, f)| e <= c && f <= d && (e, f) != (c, d) && set.contains(&(c - e, d - f)))
        })
        .map(|&(c, d)| ExponentPair::new(c, d))
        .collect();
    gens.sort_by_key(|e| std::cmp::Reverse(e.c));
    InvariantSet::from_points(p, b, gens)
}

/// Whether `f(x1^c_0 x2^d_0, ..., x1^c_n x2^d_n)` vanishes identically.
pub fn kernel_membership(f: &Polynomial, inv: &InvariantSet) -> Result<bool> {
    let pts = inv.points();
    if f.ring().nvars() != pts.len() {
        return Err(Error::RingMismatch(format!(
            "polynomial over {} variables, invariant set with {} points",
            f.ring().nvars(),
            pts.len()
        )));
    }
    let mut image: HashMap<(u128, u128), Coeff> = HashMap::new();
    for (m, c) in f.terms() {
        let mut key = (0u128, 0u128);
        for (&e, pt) in m.exponents().iter().zip(pts) {
            key.0 += e as u128 * pt.c as u128;
            key.1 += e as u128 * pt.d as u128;
        }
        *image.entry(key).or_insert_with(Coeff::zero) += c;
    }
    Ok(image.values().all(Zero::is_zero))
}

/// Number of invariant monomials `x1^c x2^d` with `c + d = n`.
pub fn hilbert_count_invariants(p: u64, b: u64, n: u64) -> u64 {
    (0..=n).filter(|&c| (c as u128 + b as u128 * (n - c) as u128).is_multiple_of(p as u128)).count() as u64
}

/// Outcome of [`verify_resolution`]; each failed check adds a message.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionReport {
    pub complex: bool,
    pub minimal: bool,
    pub homogeneous: bool,
    pub generates: bool,
    pub length: bool,
    pub euler: bool,
    pub failures: Vec<String>,
}

impl ResolutionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check that `res` is a minimal graded free resolution of `R/ideal` with the
/// Hilbert function of the invariant ring, up to degree `3p`.
pub fn verify_resolution(res: &Resolution, ideal: &Ideal, inv: &InvariantSet) -> Result<ResolutionReport> {
    let ring = res.ring();
    let ds = res.differentials();
    let mut failures = Vec::new();

    let mut complex = true;
    for (k, w) in ds.windows(2).enumerate() {
        let (a, b) = (&w[0], &w[1]);
        for i in 0..a.nrows() {
            for j in 0..b.ncols() {
                let mut acc = Polynomial::zero(ring);
                for t in 0..a.ncols() {
                    acc = &acc + &(a.entry(i, t) * b.entry(t, j));
                }
                if !acc.is_zero() && complex {
                    complex = false;
                    failures.push(format!("d_{} * d_{} has nonzero entry ({i}, {j})", k + 1, k + 2));
                }
            }
        }
    }

    let mut minimal = true;
    let mut homogeneous = true;
    for (k, d) in ds.iter().enumerate() {
        for i in 0..d.nrows() {
            for j in 0..d.ncols() {
                let e = d.entry(i, j);
                if e.terms().len() == 1 && e.terms()[0].0.is_one() && minimal {
                    minimal = false;
                    failures.push(format!("d_{} has a unit entry at ({i}, {j})", k + 1));
                }
                let want = d.col_twists()[j] - d.row_twists()[i];
                if e.terms().iter().any(|(m, _)| ring.degree_of(m) as i64 != want) && homogeneous {
                    homogeneous = false;
                    failures.push(format!("d_{} entry ({i}, {j}) is not of degree {want}", k + 1));
                }
            }
        }
    }

    let image = match ds.first() {
        Some(d1) => Ideal::new(ring, (0..d1.ncols()).map(|j| d1.entry(0, j).clone()))?,
        None => Ideal::new(ring, [])?,
    };
    let generates = ideal_equal(&image, ideal, ring.order())?;
    if !generates {
        failures.push("the columns of d_1 do not generate the ideal".into());
    }

    let length = res.length() + 2 == inv.len();
    if !length {
        failures.push(format!("length {} but {} invariants", res.length(), inv.len()));
    }

    let top = 3 * inv.p() as usize;
    let mut series = vec![0i128; top + 1];
    for (i, m) in res.modules().iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for &t in m.twists() {
            if (0..=top as i64).contains(&t) {
                series[t as usize] += sign;
            }
        }
    }
    for d in inv.degrees() {
        let d = d as usize;
        for n in d..=top {
            series[n] += series[n - d];
        }
    }
    let mut euler = true;
    for (n, &h) in series.iter().enumerate() {
        let want = hilbert_count_invariants(inv.p(), inv.b(), n as u64) as i128;
        if h != want {
            euler = false;
            failures.push(format!("Hilbert function at degree {n}: resolution gives {h}, invariants give {want}"));
            break;
        }
    }

    Ok(ResolutionReport { complex, minimal, homogeneous, generates, length, euler, failures })
}
