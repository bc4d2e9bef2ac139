//! Modular arithmetic over a prime modulus.
//!
//! All integers are `i64`. Moduli are bounded by [`MAX_MODULUS`] so that
//! every product of two residues fits in an `i64`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`Action`] and the residue routines.
pub const MAX_MODULUS: i64 = (1 << 31) - 1;

/// Deterministic primality test, exact for every `u64`.
///
/// Trial division for small inputs, then Miller-Rabin with the first twelve
/// prime bases, which has no pseudoprimes below 3.3 * 10^24.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn check_prime(p: i64) -> Result<()> {
    if !(2..=MAX_MODULUS).contains(&p) || !is_prime(p as u64) {
        return Err(Error::Parameter(format!("p = {p} is not a prime in [2, {MAX_MODULUS}]")));
    }
    Ok(())
}

/// The representative of `c` in `[0, p)`.
pub fn residue(c: i64, p: i64) -> Result<i64> {
    check_prime(p)?;
    Ok(c.rem_euclid(p))
}

/// The inverse of `c` modulo `p`, in `(0, p)`, by the extended Euclidean algorithm.
pub fn mod_inverse(c: i64, p: i64) -> Result<i64> {
    let c = residue(c, p)?;
    if c == 0 {
        return Err(Error::Domain(format!("{c} is not invertible modulo {p}")));
    }
    let (mut r0, mut r1) = (p, c);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Ok(t0.rem_euclid(p))
}

/// A diagonal action `x1 -> z^a x1, x2 -> z^b x2` of the cyclic group of
/// prime order `p`, where `z` is a primitive `p`-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Action {
    p: i64,
    a: i64,
    b: i64,
}

impl Action {
    pub fn new(p: i64, a: i64, b: i64) -> Result<Self> {
        check_prime(p)?;
        for (name, w) in [("a", a), ("b", b)] {
            if w <= 0 || w >= p {
                return Err(Error::Parameter(format!("weight {name} = {w} must satisfy 0 < {name} < p = {p}")));
            }
        }
        Ok(Action { p, a, b })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }
}

/// The reduced form `(1, b)` of an action with `b <= b^{-1}`.
///
/// `swapped` records that `x1` and `x2` were exchanged to reach `b <= b^{-1}`;
/// the original invariants are then the transposes of the canonical ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalAction {
    pub p: i64,
    pub b: i64,
    pub b_inv: i64,
    pub swapped: bool,
}

impl CanonicalAction {
    /// Canonical form of the action `(1, b)`.
    pub fn from_weight(p: i64, b: i64) -> Result<Self> {
        Ok(normalize(&Action::new(p, 1, b)?))
    }
}

/// Rescale `a` to 1 and, if needed, transpose so that `b <= b^{-1}`.
pub fn normalize(action: &Action) -> CanonicalAction {
    let p = action.p;
    // Both inverses exist: p is prime and the weights are nonzero mod p.
    let a_inv = mod_inverse(action.a, p).expect("validated action");
    let w = (a_inv * action.b).rem_euclid(p);
    let w_inv = mod_inverse(w, p).expect("validated action");
    if w <= w_inv {
        CanonicalAction { p, b: w, b_inv: w_inv, swapped: false }
    } else {
        CanonicalAction { p, b: w_inv, b_inv: w, swapped: true }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn residues() {
        assert_eq!(residue(18, 13).unwrap(), 5);
        assert_eq!(residue(0, 7).unwrap(), 0);
        assert_eq!(residue(-3, 11).unwrap(), 8);
        assert!(matches!(residue(3, 12), Err(Error::Parameter(_))));
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 7).unwrap(), 5);
        assert_eq!(mod_inverse(4, 13).unwrap(), 10);
        for p in [2, 3, 5, 101, 1_000_003] {
            assert_eq!(mod_inverse(1, p).unwrap(), 1);
        }
        assert!(matches!(mod_inverse(14, 7), Err(Error::Domain(_))));
    }

    #[test]
    fn primality() {
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(91));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(is_prime(18_446_744_073_709_551_557));
        let sieve: Vec<u64> = (0..200).filter(|&n| is_prime(n)).collect();
        let trial: Vec<u64> = (0..200u64).filter(|&n| n >= 2 && (2..n).all(|d| n % d != 0)).collect();
        assert_eq!(sieve, trial);
    }

    #[test]
    fn normalization() {
        let n = normalize(&Action::new(13, 7, 9).unwrap());
        assert_eq!(n, CanonicalAction { p: 13, b: 5, b_inv: 8, swapped: false });
        let n = normalize(&Action::new(7, 1, 3).unwrap());
        assert_eq!(n, CanonicalAction { p: 7, b: 3, b_inv: 5, swapped: false });
        let n = normalize(&Action::new(17, 1, 12).unwrap());
        assert_eq!(n, CanonicalAction { p: 17, b: 10, b_inv: 12, swapped: true });
    }

    #[test]
    fn action_validation() {
        assert!(Action::new(4, 1, 1).is_err());
        assert!(Action::new(7, 0, 1).is_err());
        assert!(Action::new(7, 1, 7).is_err());
        assert!(Action::new(7, 6, 6).is_ok());
    }

    proptest! {
        #[test]
        fn residue_is_periodic(c in -1_000_000i64..1_000_000, idx in 0usize..6) {
            let p = [2i64, 3, 7, 13, 101, 7919][idx];
            let r = residue(c, p).unwrap();
            prop_assert!((0..p).contains(&r));
            prop_assert_eq!(r, residue(c + p, p).unwrap());
            prop_assert_eq!(r, residue(c - p, p).unwrap());
        }

        #[test]
        fn inverse_properties(c in -1_000_000i64..1_000_000, idx in 0usize..6) {
            let p = [2i64, 3, 7, 13, 101, 7919][idx];
            prop_assume!(c.rem_euclid(p) != 0);
            let inv = mod_inverse(c, p).unwrap();
            prop_assert!(0 < inv && inv < p);
            prop_assert_eq!(residue(c * inv, p).unwrap(), 1);
            prop_assert_eq!(mod_inverse(inv, p).unwrap(), residue(c, p).unwrap());
        }

        #[test]
        fn canonical_form_is_reduced(b in 1i64..100, a in 1i64..100) {
            let p = 101;
            let c = normalize(&Action::new(p, a, b).unwrap());
            prop_assert!(c.b <= c.b_inv);
            prop_assert_eq!((c.b * c.b_inv) % p, 1);
        }
    }
}
