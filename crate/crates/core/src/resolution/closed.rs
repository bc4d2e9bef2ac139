//! Closed-form kernels and complexes for the four- and five-generator classes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::modarith::{is_prime, mod_inverse};
use crate::polyalg::{coeff, GradedRing, Monomial, Polynomial, Ring};
use crate::semigroup::invariant_generators;

use super::{PolyMatrix, Resolution};

/// Which of the two `2p+1` families a weight falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Branch {
    /// `b < (p-1)/2`, forcing `b = (p-1)/3`.
    Lower,
    /// `b > (p-1)/2`.
    Upper,
}

struct Setup {
    p: u64,
    b: u64,
    b_inv: u64,
    ring: Ring,
}

impl Setup {
    fn new(p: u64, b: u64, want_len: usize, product: u64) -> Result<Setup> {
        if !is_prime(p) || b == 0 || b >= p {
            return Err(Error::Parameter(format!("need a prime p and 0 < b < p, got p = {p}, b = {b}")));
        }
        let b_inv = mod_inverse(b as i64, p as i64)? as u64;
        if (p - b) * (p - b_inv) != product {
            return Err(Error::Classification(format!(
                "(p-b)(p-b^-1) = {} for p = {p}, b = {b}, need {product}",
                (p - b) * (p - b_inv)
            )));
        }
        let inv = invariant_generators(p, b)?;
        if inv.len() != want_len {
            return Err(Error::TheoremViolation(format!(
                "p = {p}, b = {b} has {} invariants, expected {want_len}",
                inv.len()
            )));
        }
        let ring = GradedRing::presentation(&inv.degrees())?;
        Ok(Setup { p, b, b_inv, ring })
    }

    fn mono(&self, powers: &[(usize, u64)]) -> Monomial {
        let mut e = vec![0u32; self.ring.nvars()];
        for &(i, k) in powers {
            e[i] += k as u32;
        }
        Monomial::from_exponents(e)
    }

    fn poly(&self, powers: &[(usize, u64)]) -> Polynomial {
        Polynomial::monomial(&self.ring, self.mono(powers))
    }

    fn binomial(&self, a: &[(usize, u64)], b: &[(usize, u64)]) -> Polynomial {
        Polynomial::binomial(&self.ring, self.mono(a), self.mono(b))
    }

    fn degree(&self, f: &Polynomial) -> i64 {
        f.degree().expect("homogeneous") as i64
    }
}

fn codim2_generators(s: &Setup) -> Vec<Polynomial> {
    let (a, c) = (s.p - s.b_inv, s.p - s.b);
    vec![
        s.binomial(&[(1, a)], &[(0, 1), (2, 1)]),
        s.binomial(&[(2, c)], &[(1, 1), (3, 1)]),
        s.binomial(&[(1, a - 1), (2, c - 1)], &[(0, 1), (3, 1)]),
    ]
}

/// The three-binomial kernel of a codimension-two action.
pub fn explicit_kernel_codim2(p: u64, b: u64) -> Result<Ideal> {
    let s = Setup::new(p, b, 4, p + 1)?;
    Ideal::new(&s.ring, codim2_generators(&s))
}

/// The `3 x 2` Hilbert–Burch matrix and the two-step complex it defines.
pub fn hilbert_burch(p: u64, b: u64) -> Result<(PolyMatrix, Resolution)> {
    let s = Setup::new(p, b, 4, p + 1)?;
    let (a, c) = (s.p - s.b_inv, s.p - s.b);
    let neg = |f: Polynomial| -&f;
    let entries = vec![
        vec![neg(s.poly(&[(3, 1)])), neg(s.poly(&[(2, c - 1)]))],
        vec![neg(s.poly(&[(1, a - 1)])), neg(s.poly(&[(0, 1)]))],
        vec![s.poly(&[(2, 1)]), s.poly(&[(1, 1)])],
    ];
    let (p, bi, b) = (p as i64, s.b_inv as i64, s.b as i64);
    let f1 = vec![2 * p - bi + 1, 2 * p - b + 1, 2 * p];
    let f2 = vec![3 * p - bi + 1, 3 * p - b + 1];
    let m = PolyMatrix::new(&s.ring, entries, f1.clone(), f2)?;
    let d1 = PolyMatrix::new(&s.ring, vec![codim2_generators(&s)], vec![0], f1)?;
    let res = Resolution::new(&s.ring, vec![d1, m.clone()])?;
    Ok((m, res.sorted()))
}

/// Six-binomial kernel and `2 x 4` determinantal matrix of a `2p+1` action.
/// The upper-branch matrix is `[[y0, y1, y2, y3^(beta-1)], [y1^(alpha-1), y2, y3, y4]]`,
/// whose minors are exactly the six binomials.
pub fn explicit_kernel_2p1(p: u64, b: u64) -> Result<(Ideal, PolyMatrix, Branch)> {
    let s = Setup::new(p, b, 5, 2 * p + 1)?;
    let (branch, alpha, beta) = if 2 * b < p - 1 {
        if 3 * b != p - 1 {
            return Err(Error::TheoremViolation(format!("lower 2p+1 branch with b = {b} != (p-1)/3")));
        }
        (Branch::Lower, 2, b + 1)
    } else if 2 * b > p - 1 {
        if !(p - s.b_inv + 1).is_multiple_of(2) || !(p - b + 1).is_multiple_of(2) {
            return Err(Error::TheoremViolation(format!("upper 2p+1 branch with odd p-b+1 for p = {p}, b = {b}")));
        }
        (Branch::Upper, (p - s.b_inv).div_ceil(2), (p - b).div_ceil(2))
    } else {
        return Err(Error::Classification("b = (p-1)/2 gives product p+1, not 2p+1".into()));
    };
    let gens = vec![
        s.binomial(&[(2, 2)], &[(1, 1), (3, 1)]),
        s.binomial(&[(1, alpha - 1), (2, 1)], &[(0, 1), (3, 1)]),
        s.binomial(&[(3, beta)], &[(2, 1), (4, 1)]),
        s.binomial(&[(1, alpha)], &[(0, 1), (2, 1)]),
        s.binomial(&[(2, 1), (3, beta - 1)], &[(1, 1), (4, 1)]),
        s.binomial(&[(1, alpha - 1), (3, beta - 1)], &[(0, 1), (4, 1)]),
    ];
    let top = vec![s.poly(&[(0, 1)]), s.poly(&[(1, 1)]), s.poly(&[(2, 1)]), s.poly(&[(3, beta - 1)])];
    let bottom = vec![s.poly(&[(1, alpha - 1)]), s.poly(&[(2, 1)]), s.poly(&[(3, 1)]), s.poly(&[(4, 1)])];
    let r2 = s.degree(&top[0]) - s.degree(&bottom[0]);
    let m = PolyMatrix::with_row_twists(&s.ring, vec![top, bottom], vec![0, r2])?;
    if !m.is_homogeneous() {
        return Err(Error::Internal(format!("2p+1 matrix for p = {p}, b = {b} is not homogeneous")));
    }
    Ok((Ideal::new(&s.ring, gens)?, m, branch))
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..m {
            cur.push(j);
            go(j + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Eagon–Northcott complex of a homogeneous `2 x m` matrix. `F_i` for
/// `i >= 1` has basis `(J, a)` with `|J| = i + 1` and `0 <= a < i`, of twist
/// `sum_J c_j - r1 - r2 - a*r1 - (i-1-a)*r2`.
pub fn eagon_northcott(mat: &PolyMatrix) -> Result<Resolution> {
    let m = mat.ncols();
    if mat.nrows() != 2 || m < 3 {
        return Err(Error::Shape(format!("need a 2 x m matrix with m >= 3, got {} x {m}", mat.nrows())));
    }
    if !mat.is_homogeneous() {
        return Err(Error::Inhomogeneous("Eagon-Northcott input must be homogeneous".into()));
    }
    let ring = mat.ring();
    let (r1, r2) = (mat.row_twists()[0], mat.row_twists()[1]);
    let c = mat.col_twists();
    let e = mat.entries();

    let pairs = combinations(m, 2);
    let minors = mat.maximal_minors()?;
    let f1: Vec<i64> = pairs.iter().map(|j| c[j[0]] + c[j[1]] - r1 - r2).collect();
    let mut diffs = vec![PolyMatrix::new(ring, vec![minors], vec![0], f1)?];

    let mut prev_basis: Vec<(Vec<usize>, usize)> = pairs.into_iter().map(|j| (j, 0)).collect();
    for i in 2..m {
        let basis: Vec<(Vec<usize>, usize)> =
            combinations(m, i + 1).into_iter().flat_map(|j| (0..i).map(move |a| (j.clone(), a))).collect();
        let index: HashMap<&(Vec<usize>, usize), usize> = prev_basis.iter().enumerate().map(|(k, x)| (x, k)).collect();
        let twists: Vec<i64> = basis
            .iter()
            .map(|(j, a)| {
                let a = *a as i64;
                j.iter().map(|&x| c[x]).sum::<i64>() - r1 - r2 - a * r1 - (i as i64 - 1 - a) * r2
            })
            .collect();
        let mut entries = vec![vec![Polynomial::zero(ring); basis.len()]; prev_basis.len()];
        for (col, (j, a)) in basis.iter().enumerate() {
            for t in 0..j.len() {
                let sign = coeff(if t % 2 == 0 { 1 } else { -1 });
                let rest: Vec<usize> = j.iter().enumerate().filter(|&(u, _)| u != t).map(|(_, &x)| x).collect();
                if *a >= 1 {
                    let row = index[&(rest.clone(), a - 1)];
                    entries[row][col] = &entries[row][col] + &e[0][j[t]].scale(&sign);
                }
                if *a + 2 <= i {
                    let row = index[&(rest, *a)];
                    entries[row][col] = &entries[row][col] + &e[1][j[t]].scale(&sign);
                }
            }
        }
        let rows = diffs.last().unwrap().col_twists().to_vec();
        diffs.push(PolyMatrix::new(ring, entries, rows, twists)?);
        prev_basis = basis;
    }
    Ok(Resolution::new(ring, diffs)?.sorted())
}
