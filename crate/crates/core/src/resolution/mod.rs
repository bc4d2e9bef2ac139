//! Minimal graded free resolutions of `R/I`: a general Schreyer computation
//! followed by minimization, and the closed-form complexes available for the
//! codimension-two and `2p+1` classes.

mod closed;
mod schreyer;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyalg::{Polynomial, Ring};

pub use closed::{eagon_northcott, explicit_kernel_2p1, explicit_kernel_codim2, hilbert_burch, Branch};
pub use schreyer::minimal_free_resolution;

/// `⊕ R(-t)` over the stored twists `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedFreeModule {
    twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn sorted_twists(&self) -> Vec<i64> {
        let mut t = self.twists.clone();
        t.sort_unstable();
        t
    }
}

/// A matrix of polynomials mapping `⊕ R(-col_twists) -> ⊕ R(-row_twists)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    entries: Vec<Vec<Polynomial>>,
    row_twists: Vec<i64>,
    col_twists: Vec<i64>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, entries: Vec<Vec<Polynomial>>, row_twists: Vec<i64>, col_twists: Vec<i64>) -> Result<Self> {
        if entries.len() != row_twists.len() || entries.iter().any(|r| r.len() != col_twists.len()) {
            return Err(Error::Shape(format!(
                "entries do not form a {} x {} matrix",
                row_twists.len(),
                col_twists.len()
            )));
        }
        let mut entries = entries;
        for e in entries.iter_mut().flatten() {
            ring.check_same_space(e.ring())?;
            *e = e.reorder(ring.order())?;
        }
        Ok(PolyMatrix { ring: ring.clone(), entries, row_twists, col_twists })
    }

    pub fn zero(ring: &Ring, row_twists: Vec<i64>, col_twists: Vec<i64>) -> Self {
        let entries = vec![vec![Polynomial::zero(ring); col_twists.len()]; row_twists.len()];
        PolyMatrix { ring: ring.clone(), entries, row_twists, col_twists }
    }

    /// Twists read off the entries: rows from `row_twists`, each column from
    /// its first nonzero entry.
    pub fn with_row_twists(ring: &Ring, entries: Vec<Vec<Polynomial>>, row_twists: Vec<i64>) -> Result<Self> {
        let ncols = entries.first().map_or(0, Vec::len);
        let col_twists = (0..ncols)
            .map(|j| {
                entries
                    .iter()
                    .zip(&row_twists)
                    .find_map(|(row, &t)| row.get(j).filter(|e| !e.is_zero()).map(|e| (e, t)))
                    .and_then(|(e, t)| e.degree().map(|d| d as i64 + t))
                    .ok_or_else(|| Error::Inhomogeneous(format!("column {j} is zero or inhomogeneous")))
            })
            .collect::<Result<_>>()?;
        PolyMatrix::new(ring, entries, row_twists, col_twists)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_twists.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_twists.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn row_twists(&self) -> &[i64] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i64] {
        &self.col_twists
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_zero)
    }

    /// Every nonzero entry `(i, j)` is homogeneous of degree `col_twists[j] - row_twists[i]`.
    pub fn is_homogeneous(&self) -> bool {
        self.entries.iter().zip(&self.row_twists).all(|(row, &r)| {
            row.iter().zip(&self.col_twists).all(|(e, &c)| e.is_zero() || e.degree().map(|d| d as i64) == Some(c - r))
        })
    }

    pub fn has_unit_entries(&self) -> bool {
        self.entries.iter().flatten().any(Polynomial::is_unit)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        self.ring.check_same_space(&other.ring)?;
        let mut out = PolyMatrix::zero(&self.ring, self.row_twists.clone(), other.col_twists.clone());
        for i in 0..self.nrows() {
            for j in 0..other.ncols() {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.ncols() {
                    let (a, b) = (&self.entries[i][k], &other.entries[k][j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    /// All `2 x 2` minors of a matrix with two rows or two columns, in
    /// lexicographic order of the chosen index pairs.
    pub fn maximal_minors(&self) -> Result<Vec<Polynomial>> {
        let e = &self.entries;
        let det = |a: &Polynomial, b: &Polynomial, c: &Polynomial, d: &Polynomial| &(a * d) - &(b * c);
        let mut out = Vec::new();
        if self.nrows() == 2 {
            for j in 0..self.ncols() {
                for k in j + 1..self.ncols() {
                    out.push(det(&e[0][j], &e[0][k], &e[1][j], &e[1][k]));
                }
            }
        } else if self.ncols() == 2 {
            for i in 0..self.nrows() {
                for k in i + 1..self.nrows() {
                    out.push(det(&e[i][0], &e[i][1], &e[k][0], &e[k][1]));
                }
            }
        } else {
            return Err(Error::Shape(format!("{}x{} matrix has no 2x2 maximal minors", self.nrows(), self.ncols())));
        }
        Ok(out)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
    }

    fn remove_row(&mut self, i: usize) {
        self.entries.remove(i);
        self.row_twists.remove(i);
    }

    fn remove_col(&mut self, j: usize) {
        for row in &mut self.entries {
            row.remove(j);
        }
        self.col_twists.remove(j);
    }

    fn permute_rows(&mut self, perm: &[usize]) {
        self.entries = perm.iter().map(|&i| self.entries[i].clone()).collect();
        self.row_twists = perm.iter().map(|&i| self.row_twists[i]).collect();
    }

    fn permute_cols(&mut self, perm: &[usize]) {
        for row in &mut self.entries {
            *row = perm.iter().map(|&j| row[j].clone()).collect();
        }
        self.col_twists = perm.iter().map(|&j| self.col_twists[j]).collect();
    }

    /// Column `target -= a * column src`.
    fn col_axpy(&mut self, target: usize, a: &Polynomial, src: usize) {
        for row in &mut self.entries {
            if !row[src].is_zero() {
                row[target] = &row[target] - &(a * &row[src]);
            }
        }
    }
}

/// A graded free resolution `F_0 <- F_1 <- ... <- F_n` with `F_0 = R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    ring: Ring,
    modules: Vec<GradedFreeModule>,
    differentials: Vec<PolyMatrix>,
}

impl Resolution {
    /// Assemble from differentials `d_1, d_2, ...`; adjacent twists must agree.
    pub fn new(ring: &Ring, differentials: Vec<PolyMatrix>) -> Result<Self> {
        let mut modules =
            vec![GradedFreeModule::new(differentials.first().map_or_else(|| vec![0], |d| d.row_twists.clone()))];
        for (k, d) in differentials.iter().enumerate() {
            if d.row_twists != modules[k].twists {
                return Err(Error::Shape(format!("d_{} does not start where d_{k} ends", k + 1)));
            }
            modules.push(GradedFreeModule::new(d.col_twists.clone()));
        }
        Ok(Resolution { ring: ring.clone(), modules, differentials })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.differentials
    }

    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(GradedFreeModule::rank).collect()
    }

    pub fn twists(&self, i: usize) -> &[i64] {
        self.modules.get(i).map_or(&[], |m| m.twists())
    }

    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[0].mul(&w[1]).is_ok_and(|m| m.is_zero()))
    }

    pub fn is_minimal(&self) -> bool {
        !self.differentials.iter().any(PolyMatrix::has_unit_entries)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.differentials.iter().all(PolyMatrix::is_homogeneous)
    }

    /// The same resolution with each module's basis reordered by ascending twist.
    pub fn sorted(mut self) -> Self {
        for k in 1..self.modules.len() {
            let t = &self.modules[k].twists;
            let mut perm: Vec<usize> = (0..t.len()).collect();
            perm.sort_by_key(|&i| t[i]);
            self.differentials[k - 1].permute_cols(&perm);
            if k < self.differentials.len() {
                self.differentials[k].permute_rows(&perm);
            }
            self.modules[k] = GradedFreeModule::new(self.differentials[k - 1].col_twists.clone());
        }
        self
    }

    /// `{"modules": [[twists]], "differentials": [[[entries]]]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "modules": self.modules.iter().map(|m| m.twists.clone()).collect::<Vec<_>>(),
            "differentials": self.differentials.iter().map(PolyMatrix::to_strings).collect::<Vec<_>>(),
        })
    }
}

/// `beta_{i,j}`: number of generators of `F_i` in degree `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

pub fn betti(res: &Resolution) -> BettiTable {
    let mut entries = BTreeMap::new();
    for (i, m) in res.modules.iter().enumerate() {
        for &t in &m.twists {
            *entries.entry((i, t)).or_insert(0) += 1;
        }
    }
    BettiTable { entries }
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), usize> {
        &self.entries
    }

    /// `{degree: count}` for homological index `i`.
    pub fn column(&self, i: usize) -> BTreeMap<i64, usize> {
        self.entries.range((i, i64::MIN)..=(i, i64::MAX)).map(|(&(_, j), &n)| (j, n)).collect()
    }

    pub fn totals(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut t = vec![0; len];
        for (&(i, _), &n) in &self.entries {
            t[i] += n;
        }
        t
    }

    /// Rows indexed by `j - i`, columns by `i`; only nonzero rows are shown.
    pub fn render(&self) -> String {
        let totals = self.totals();
        let mut rows: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (&(i, j), &n) in &self.entries {
            rows.entry(j - i as i64).or_insert_with(|| vec![0; totals.len()])[i] += n;
        }
        let label_w = rows.keys().map(|k| k.to_string().len() + 1).max().unwrap_or(1).max("total:".len());
        let cell_w = self.entries.values().chain(&totals).map(|n| n.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:>label_w$}", "");
        for i in 0..totals.len() {
            let _ = write!(out, " {i:>cell_w$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label_w$}", "total:");
        for n in &totals {
            let _ = write!(out, " {n:>cell_w$}");
        }
        out.push('\n');
        for (r, counts) in rows {
            let _ = write!(out, "{:>label_w$}", format!("{r}:"));
            for n in counts {
                let cell = if n.is_zero() { ".".to_string() } else { n.to_string() };
                let _ = write!(out, " {cell:>cell_w$}");
            }
            out.push('\n');
        }
        out
    }
}

pub(crate) fn minimize(mut ds: Vec<PolyMatrix>) -> Vec<PolyMatrix> {
    for k in 0..ds.len() {
        while let Some((r, c)) = find_unit(&ds[k]) {
            let u = ds[k].entries[r][c].leading_coeff().expect("unit").clone();
            let inv = u.recip();
            for c2 in 0..ds[k].ncols() {
                if c2 != c && !ds[k].entries[r][c2].is_zero() {
                    let a = ds[k].entries[r][c2].scale(&inv);
                    ds[k].col_axpy(c2, &a, c);
                }
            }
            ds[k].remove_row(r);
            ds[k].remove_col(c);
            if k + 1 < ds.len() {
                ds[k + 1].remove_row(c);
            }
            if k > 0 {
                ds[k - 1].remove_col(r);
            }
        }
    }
    while ds.last().is_some_and(|d| d.ncols() == 0) {
        ds.pop();
    }
    ds
}

fn find_unit(d: &PolyMatrix) -> Option<(usize, usize)> {
    d.entries.iter().enumerate().find_map(|(i, row)| row.iter().position(Polynomial::is_unit).map(|j| (i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{ideal_equal, toric_kernel, Ideal};
    use crate::polyalg::GradedRing;
    use crate::semigroup::invariant_generators;

    fn kernel(p: u64, b: u64) -> Ideal {
        toric_kernel(&invariant_generators(p, b).unwrap()).unwrap()
    }

    fn twists(res: &Resolution) -> Vec<Vec<i64>> {
        res.modules().iter().skip(1).map(GradedFreeModule::sorted_twists).collect()
    }

    fn check(res: &Resolution) {
        assert!(res.is_complex() && res.is_minimal() && res.is_homogeneous());
    }

    #[test]
    fn general_resolutions_of_examples() {
        let r = minimal_free_resolution(&kernel(7, 3)).unwrap();
        check(&r);
        assert_eq!(twists(&r), vec![vec![10, 12, 14], vec![17, 19]]);

        let r = minimal_free_resolution(&kernel(13, 5)).unwrap();
        check(&r);
        assert_eq!(
            twists(&r),
            vec![vec![15, 18, 18, 19, 22, 26], vec![24, 27, 28, 28, 31, 31, 32, 35], vec![37, 40, 41]]
        );

        let r = minimal_free_resolution(&kernel(13, 4)).unwrap();
        check(&r);
        assert_eq!(
            twists(&r),
            vec![vec![14, 17, 20, 20, 23, 26], vec![24, 27, 27, 30, 30, 33, 33, 36], vec![37, 40, 43]]
        );

        for p in [3u64, 7, 11] {
            let r = minimal_free_resolution(&kernel(p, p - 1)).unwrap();
            assert_eq!(twists(&r), vec![vec![2 * p as i64]]);
        }
    }

    #[test]
    fn first_differential_generates_the_ideal() {
        for (p, b) in [(7u64, 3u64), (13, 5), (11, 3), (11, 2)] {
            let k = kernel(p, b);
            let r = minimal_free_resolution(&k).unwrap();
            let d1 = Ideal::new(k.ring(), r.differentials()[0].entries()[0].clone()).unwrap();
            assert!(ideal_equal(&d1, &k, k.ring().order()).unwrap());
            assert_eq!(r.length(), invariant_generators(p, b).unwrap().len() - 2);
        }
    }

    #[test]
    fn zero_and_inhomogeneous_ideals() {
        let ring = GradedRing::presentation(&[1, 2]).unwrap();
        let zero = Ideal::new(&ring, []).unwrap();
        let r = minimal_free_resolution(&zero).unwrap();
        assert_eq!(r.length(), 0);
        let t = betti(&r);
        assert_eq!(t.entries().len(), 1);
        assert_eq!(t.get(0, 0), 1);
        let bad = Ideal::new(&ring, [Polynomial::parse(&ring, "y0 - y1").unwrap()]).unwrap();
        assert!(matches!(minimal_free_resolution(&bad), Err(Error::Inhomogeneous(_))));
    }

    #[test]
    fn hilbert_burch_examples() {
        let (m, res) = hilbert_burch(7, 3).unwrap();
        assert_eq!(twists(&res), vec![vec![10, 12, 14], vec![17, 19]]);
        assert!(res.is_complex() && res.is_minimal() && m.is_homogeneous());
        assert_eq!(m.to_strings(), [["-y3", "-y2^3"], ["-y1", "-y0"], ["y2", "y1"]]);
        let minors = m.maximal_minors().unwrap();
        assert_eq!(minors[2].to_string(), "-y1^2 + y0*y2");
        let k = kernel(7, 3);
        assert!(ideal_equal(&Ideal::new(k.ring(), minors).unwrap(), &k, k.ring().order()).unwrap());

        let (m, _) = hilbert_burch(5, 2).unwrap();
        assert_eq!(m.to_strings(), [["-y3", "-y2^2"], ["-y1", "-y0"], ["y2", "y1"]]);
        let k = kernel(5, 2);
        let minors = Ideal::new(k.ring(), m.maximal_minors().unwrap()).unwrap();
        assert!(ideal_equal(&minors, &k, k.ring().order()).unwrap());

        assert!(matches!(hilbert_burch(17, 10), Err(Error::Classification(_))));
        assert!(matches!(explicit_kernel_codim2(17, 10), Err(Error::Classification(_))));
    }

    #[test]
    fn codim2_kernels_match_toric() {
        for p in [5u64, 7, 11, 13, 29] {
            let b = (p - 1) / 2;
            let e = explicit_kernel_codim2(p, b).unwrap();
            assert!(ideal_equal(&e, &kernel(p, b), e.ring().order()).unwrap(), "{p}");
            let (_, hb) = hilbert_burch(p, b).unwrap();
            assert_eq!(twists(&hb), twists(&minimal_free_resolution(&e).unwrap()));
        }
    }

    #[test]
    fn two_p_plus_one_kernels() {
        let (i, m, br) = explicit_kernel_2p1(13, 4).unwrap();
        assert_eq!(br, Branch::Lower);
        assert_eq!(m.to_strings(), [["y0", "y1", "y2", "y3^4"], ["y1", "y2", "y3", "y4"]]);
        assert!(ideal_equal(&i, &kernel(13, 4), i.ring().order()).unwrap());

        let (i, m, br) = explicit_kernel_2p1(17, 10).unwrap();
        assert_eq!(br, Branch::Upper);
        let ring = i.ring().clone();
        let listed = Ideal::new(
            &ring,
            ["y2^2-y1*y3", "y1^2*y2-y0*y3", "y3^4-y2*y4", "y1^3-y0*y2", "y2*y3^3-y1*y4", "y1^2*y3^3-y0*y4"]
                .iter()
                .map(|s| Polynomial::parse(&ring, s).unwrap()),
        )
        .unwrap();
        assert!(ideal_equal(&i, &listed, ring.order()).unwrap());
        assert!(ideal_equal(&i, &kernel(17, 10), ring.order()).unwrap());
        let minors = Ideal::new(&ring, m.maximal_minors().unwrap()).unwrap();
        assert!(ideal_equal(&minors, &i, ring.order()).unwrap());

        let (i, _, br) = explicit_kernel_2p1(7, 2).unwrap();
        assert_eq!(br, Branch::Lower);
        assert!(ideal_equal(&i, &kernel(7, 2), i.ring().order()).unwrap());
        assert!(matches!(explicit_kernel_2p1(7, 3), Err(Error::Classification(_))));
    }

    #[test]
    fn eagon_northcott_examples() {
        let (_, m, _) = explicit_kernel_2p1(13, 4).unwrap();
        let en = eagon_northcott(&m).unwrap();
        assert_eq!(en.ranks(), [1, 6, 8, 3]);
        assert!(en.is_complex() && en.is_minimal() && en.is_homogeneous());
        assert_eq!(
            twists(&en),
            vec![vec![14, 17, 20, 20, 23, 26], vec![24, 27, 27, 30, 30, 33, 33, 36], vec![37, 40, 43]]
        );

        let (_, m, _) = explicit_kernel_2p1(17, 10).unwrap();
        let en = eagon_northcott(&m).unwrap();
        assert!(en.is_complex());
        let (i, _, _) = explicit_kernel_2p1(17, 10).unwrap();
        assert_eq!(twists(&en), twists(&minimal_free_resolution(&i).unwrap()));

        let ring = GradedRing::presentation(&[1, 1, 1, 1]).unwrap();
        let y = |k| Polynomial::var(&ring, k);
        let g = PolyMatrix::with_row_twists(&ring, vec![vec![y(0), y(1), y(2)], vec![y(1), y(2), y(3)]], vec![0, 0])
            .unwrap();
        let en = eagon_northcott(&g).unwrap();
        assert_eq!(en.ranks(), [1, 3, 2]);
        assert!(en.is_complex());

        let two = PolyMatrix::with_row_twists(&ring, vec![vec![y(0), y(1)], vec![y(1), y(2)]], vec![0, 0]).unwrap();
        assert!(matches!(eagon_northcott(&two), Err(Error::Shape(_))));
    }

    #[test]
    fn broken_matrix_is_not_a_complex() {
        let (m, res) = hilbert_burch(7, 3).unwrap();
        let mut entries = m.entries().to_vec();
        entries[2][0] = -&entries[2][0];
        let bad = PolyMatrix::new(m.ring(), entries, m.row_twists().to_vec(), m.col_twists().to_vec()).unwrap();
        let d1 = PolyMatrix::new(
            m.ring(),
            vec![explicit_kernel_codim2(7, 3).unwrap().generators().to_vec()],
            vec![0],
            m.row_twists().to_vec(),
        )
        .unwrap();
        assert!(res.is_complex());
        assert!(!Resolution::new(m.ring(), vec![d1, bad]).unwrap().is_complex());
    }

    #[test]
    fn betti_tables() {
        let t = betti(&minimal_free_resolution(&kernel(7, 3)).unwrap());
        assert_eq!(t.column(1), BTreeMap::from([(10, 1), (12, 1), (14, 1)]));
        assert_eq!(t.column(2), BTreeMap::from([(17, 1), (19, 1)]));
        assert_eq!(t.totals(), [1, 3, 2]);
        let t = betti(&minimal_free_resolution(&kernel(13, 5)).unwrap());
        assert_eq!(t.column(1), BTreeMap::from([(15, 1), (18, 2), (19, 1), (22, 1), (26, 1)]));
        assert_eq!(t.column(2), BTreeMap::from([(24, 1), (27, 1), (28, 2), (31, 2), (32, 1), (35, 1)]));
        assert_eq!(t.column(3), BTreeMap::from([(37, 1), (40, 1), (41, 1)]));
        let text = betti(&hilbert_burch(7, 3).unwrap().1).render();
        assert!(text.starts_with("       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    9: . 1 .\n"), "{text}");
    }
}
