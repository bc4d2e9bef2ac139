//! Schreyer's algorithm. Each level is a Gröbner basis of the previous
//! syzygy module under the induced order, so no module Buchberger is needed:
//! every S-pair is divided once to read off its syzygy.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyalg::{Coeff, Monomial, MonomialOrder, Polynomial, Ring};

use super::{minimize, PolyMatrix, Resolution};

#[derive(Clone)]
struct Term {
    /// `mon` times the total monomial of `comp`; compared first.
    total: Monomial,
    mon: Monomial,
    comp: usize,
    coeff: Coeff,
}

type Vector = Vec<Term>;

/// Components of a free module under a Schreyer order: `m e_c` is compared by
/// `m * totals[c]` in the ring, ties broken by `ranks[c]` (larger is bigger).
struct Frame {
    totals: Vec<Monomial>,
    ranks: Vec<usize>,
}

impl Frame {
    fn cmp(&self, order: &MonomialOrder, a: &Term, b: &Term) -> Ordering {
        order.cmp(&a.total, &b.total).then_with(|| self.ranks[a.comp].cmp(&self.ranks[b.comp]))
    }

    fn term(&self, mon: Monomial, comp: usize, coeff: Coeff) -> Term {
        Term { total: mon.mul(&self.totals[comp]), mon, comp, coeff }
    }

    fn collect(&self, order: &MonomialOrder, acc: HashMap<(usize, Monomial), Coeff>) -> Vector {
        let mut v: Vector =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((comp, mon), c)| self.term(mon, comp, c)).collect();
        v.sort_by(|a, b| self.cmp(order, b, a));
        v
    }
}

/// `v + c * m * g`.
fn add_scaled(frame: &Frame, order: &MonomialOrder, v: &[Term], c: &Coeff, m: &Monomial, g: &[Term]) -> Vector {
    let mut out = Vec::with_capacity(v.len() + g.len());
    let mut a = v.iter().cloned().peekable();
    let mut b = g
        .iter()
        .map(|t| Term { total: t.total.mul(m), mon: t.mon.mul(m), comp: t.comp, coeff: &t.coeff * c })
        .peekable();
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(a.next().unwrap()),
            (None, Some(_)) => out.push(b.next().unwrap()),
            (Some(x), Some(y)) => match frame.cmp(order, x, y) {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let mut x = a.next().unwrap();
                    x.coeff += b.next().unwrap().coeff;
                    if !x.coeff.is_zero() {
                        out.push(x);
                    }
                }
            },
        }
    }
    out
}

/// Divide `s` by the basis `gb`; the remainder must vanish. Returns the
/// quotients as `(element, monomial, coefficient)` triples.
fn divide(frame: &Frame, order: &MonomialOrder, mut s: Vector, gb: &[Vector]) -> Result<Vec<(usize, Monomial, Coeff)>> {
    let mut quotients = Vec::new();
    while let Some(lt) = s.first() {
        let hit = gb.iter().enumerate().find_map(|(k, g)| {
            let gl = &g[0];
            if gl.comp != lt.comp {
                return None;
            }
            lt.mon.div(&gl.mon).map(|q| (k, q, &lt.coeff / &gl.coeff))
        });
        let (k, q, c) = hit.ok_or_else(|| Error::Internal("Schreyer S-pair left a nonzero remainder".into()))?;
        s = add_scaled(frame, order, &s, &-c.clone(), &q, &gb[k]);
        quotients.push((k, q, c));
    }
    Ok(quotients)
}

/// Sort so that elements with the same leading component appear in
/// decreasing lex order of their leading monomials; this bounds the length.
fn sort_for_termination(gb: &mut [Vector]) {
    gb.sort_by(|a, b| a[0].comp.cmp(&b[0].comp).then_with(|| b[0].mon.cmp(&a[0].mon)));
}

/// The frame of the free module whose basis maps onto `gb`.
fn frame_of(prev: &Frame, gb: &[Vector]) -> Frame {
    let totals = gb.iter().map(|g| g[0].total.clone()).collect();
    let mut idx: Vec<usize> = (0..gb.len()).collect();
    idx.sort_by(|&i, &j| prev.ranks[gb[i][0].comp].cmp(&prev.ranks[gb[j][0].comp]).then(j.cmp(&i)));
    let mut ranks = vec![0; gb.len()];
    for (r, &i) in idx.iter().enumerate() {
        ranks[i] = r;
    }
    Frame { totals, ranks }
}

/// Syzygies of `gb` (elements of the module with frame `prev`) as elements of
/// the module with frame `cur`.
fn syzygies(prev: &Frame, cur: &Frame, order: &MonomialOrder, gb: &[Vector]) -> Result<Vec<Vector>> {
    let mut out = Vec::new();
    for i in 0..gb.len() {
        let li = &gb[i][0];
        let mut cands: Vec<(usize, Monomial)> = Vec::new();
        for (j, g) in gb.iter().enumerate().skip(i + 1) {
            if g[0].comp == li.comp {
                cands.push((j, li.mon.lcm(&g[0].mon).div(&li.mon).expect("lcm")));
            }
        }
        let minimal: Vec<&(usize, Monomial)> = cands
            .iter()
            .enumerate()
            .filter(|&(a, (_, m))| !cands.iter().enumerate().any(|(b, (_, n))| n.divides(m) && (n != m || b < a)))
            .map(|(_, c)| c)
            .collect();
        for (j, mij) in minimal {
            let lj = &gb[*j][0];
            let mji = li.mon.lcm(&lj.mon).div(&lj.mon).expect("lcm");
            let ci = li.coeff.recip();
            let cj = -lj.coeff.recip();
            let s = add_scaled(prev, order, &[], &ci, mij, &gb[i]);
            let s = add_scaled(prev, order, &s, &cj, &mji, &gb[*j]);
            let mut acc: HashMap<(usize, Monomial), Coeff> = HashMap::new();
            *acc.entry((i, mij.clone())).or_insert_with(Coeff::zero) += ci;
            *acc.entry((*j, mji)).or_insert_with(Coeff::zero) += cj;
            for (k, q, c) in divide(prev, order, s, gb)? {
                *acc.entry((k, q)).or_insert_with(Coeff::zero) -= c;
            }
            let syz = cur.collect(order, acc);
            debug_assert!(syz[0].comp == i && &syz[0].mon == mij);
            out.push(syz);
        }
    }
    Ok(out)
}

fn to_matrix(ring: &Ring, rows: &Frame, cols: &Frame, elems: &[Vector]) -> PolyMatrix {
    let twist = |m: &Monomial| ring.degree_of(m) as i64;
    let mut entries: Vec<Vec<Vec<(Monomial, Coeff)>>> = vec![vec![Vec::new(); elems.len()]; rows.totals.len()];
    for (j, v) in elems.iter().enumerate() {
        for t in v {
            entries[t.comp][j].push((t.mon.clone(), t.coeff.clone()));
        }
    }
    let entries = entries
        .into_iter()
        .map(|row| row.into_iter().map(|terms| Polynomial::from_terms(ring, terms)).collect())
        .collect();
    PolyMatrix {
        ring: ring.clone(),
        entries,
        row_twists: rows.totals.iter().map(twist).collect(),
        col_twists: cols.totals.iter().map(twist).collect(),
    }
}

/// Minimal graded free resolution of `R/I`, twists ascending in each module.
pub fn minimal_free_resolution(ideal: &Ideal) -> Result<Resolution> {
    if !ideal.is_homogeneous() {
        return Err(Error::Inhomogeneous("resolutions need a homogeneous ideal".into()));
    }
    let ring = ideal.ring().clone();
    let order = ring.order().clone();
    let n = ring.nvars();
    let f0 = Frame { totals: vec![Monomial::one(n)], ranks: vec![0] };
    let mut level: Vec<Vector> = ideal
        .reduced_basis(&order)?
        .iter()
        .map(|g| g.terms().iter().map(|(m, c)| f0.term(m.clone(), 0, c.clone())).collect())
        .collect();
    if level.iter().any(|v: &Vector| v[0].total.is_one()) {
        return Err(Error::Parameter("the unit ideal has no quotient to resolve".into()));
    }
    let mut frames = vec![f0];
    let mut diffs = Vec::new();
    while !level.is_empty() {
        sort_for_termination(&mut level);
        let prev = frames.last().unwrap();
        let cur = frame_of(prev, &level);
        diffs.push(to_matrix(&ring, prev, &cur, &level));
        let next = syzygies(prev, &cur, &order, &level)?;
        frames.push(cur);
        level = next;
    }
    let res = Resolution::new(&ring, minimize(diffs))?;
    Ok(res.sorted())
}
