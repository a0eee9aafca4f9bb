//! Rectangular semistandard Young tableaux with k rows and entries in `[1, n]`.
//!
//! Tableaux form a commutative monoid under row-wise union. Two tableaux are
//! equivalent when they agree after stripping trivial columns (columns of
//! consecutive integers). The module also carries the dictionary between
//! dominant monomials in the variables `Y_{i,s}` and tableaux, computed with the
//! height function `ξ(i) = i − 2`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cmcat::KSubset;
use crate::linalg::ExactSolver;
use crate::{Error, Result};

/// A rectangular semistandard Young tableau, stored as sorted rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    k: usize,
    n: u32,
    rows: Vec<Vec<u32>>,
}

/// Outcome of comparing two tableaux in the dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    /// The first tableau is strictly smaller.
    Less,
    /// The first tableau is strictly larger.
    Greater,
    /// The tableaux are equal.
    Equal,
    /// Same content, but neither dominates the other.
    Incomparable,
    /// The contents differ, so the order does not apply.
    DifferentContent,
}

/// Per-row value counts of a tableau: `counts[r][v-1]` is the number of boxes
/// with value `v` in row `r`.
///
/// Entries may be negative when the grid encodes a formal difference.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContentGrid {
    k: usize,
    n: u32,
    counts: Vec<i64>,
}

impl ContentGrid {
    /// The zero grid.
    pub fn zero(k: usize, n: u32) -> Self {
        ContentGrid { k, n, counts: vec![0; k * n as usize] }
    }

    /// Number of rows.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Alphabet bound.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Count of value `v` (1-based) in row `r` (0-based).
    pub fn get(&self, r: usize, v: u32) -> i64 {
        self.counts[r * self.n as usize + (v as usize - 1)]
    }

    /// The grid flattened row by row.
    pub fn as_slice(&self) -> &[i64] {
        &self.counts
    }

    /// Add `factor` times `other` to this grid.
    pub fn add_scaled(&mut self, other: &ContentGrid, factor: i64) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += factor * b;
        }
    }
}

fn check_rows(k: usize, n: u32, rows: &[Vec<u32>]) -> Result<()> {
    if rows.len() != k {
        return Err(Error::DimensionMismatch(format!("expected {k} rows, got {}", rows.len())));
    }
    let width = rows.first().map_or(0, Vec::len);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(Error::NotSemistandard(format!("row {} has length {}, expected {width}", r + 1, row.len())));
        }
        if let Some(&v) = row.iter().find(|&&v| v < 1 || v > n) {
            return Err(Error::OutOfRange(format!("entry {v} outside [1, {n}]")));
        }
        if row.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotSemistandard(format!("row {} is not weakly increasing", r + 1)));
        }
    }
    for r in 1..k {
        for j in 0..width {
            if rows[r - 1][j] >= rows[r][j] {
                return Err(Error::NotSemistandard(format!("column {} is not strictly increasing", j + 1)));
            }
        }
    }
    Ok(())
}

impl Tableau {
    /// Build a tableau from rows. Rows are sorted first; semistandardness is
    /// then checked.
    pub fn new(k: usize, n: u32, mut rows: Vec<Vec<u32>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadParameters("a tableau needs at least one row".into()));
        }
        for row in rows.iter_mut() {
            row.sort_unstable();
        }
        check_rows(k, n, &rows)?;
        Ok(Tableau { k, n, rows })
    }

    /// The tableau with no columns.
    pub fn empty(k: usize, n: u32) -> Self {
        Tableau { k, n, rows: vec![Vec::new(); k] }
    }

    /// Union of the given columns, each a k-subset of `[1, n]`.
    pub fn from_columns(k: usize, n: u32, columns: &[KSubset]) -> Result<Self> {
        let mut rows = vec![Vec::with_capacity(columns.len()); k];
        for c in columns {
            if c.k() != k || c.n() != n {
                return Err(Error::DimensionMismatch(format!("column {c} is not a {k}-subset of [{n}]")));
            }
            for (row, &v) in rows.iter_mut().zip(c.elements()) {
                row.push(v);
            }
        }
        Tableau::new(k, n, rows)
    }

    /// The one-column tableau of a k-subset.
    pub fn column(subset: &KSubset) -> Self {
        Tableau { k: subset.k(), n: subset.n(), rows: subset.elements().iter().map(|&v| vec![v]).collect() }
    }

    /// Rebuild a tableau from its per-row value counts.
    pub fn from_content_grid(grid: &ContentGrid) -> Result<Self> {
        let mut rows = vec![Vec::new(); grid.k];
        for (r, row) in rows.iter_mut().enumerate() {
            for v in 1..=grid.n {
                let c = grid.get(r, v);
                if c < 0 {
                    return Err(Error::NotAFactor(format!("negative count of {v} in row {}", r + 1)));
                }
                row.extend(core::iter::repeat_n(v, c as usize));
            }
        }
        Tableau::new(grid.k, grid.n, rows)
    }

    /// Number of rows.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Alphabet bound.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Rows, each sorted.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of columns (the rank).
    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    /// Whether the tableau has no columns.
    pub fn is_empty(&self) -> bool {
        self.width() == 0
    }

    /// Column `j` (0-based) as a k-subset.
    pub fn column_subset(&self, j: usize) -> KSubset {
        KSubset::from_sorted_unchecked(self.n, self.rows.iter().map(|r| r[j]).collect())
    }

    /// All columns, left to right.
    pub fn columns(&self) -> Vec<KSubset> {
        (0..self.width()).map(|j| self.column_subset(j)).collect()
    }

    fn same_shape_as(&self, other: &Tableau) -> Result<()> {
        if self.k != other.k || self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "(k, n) = ({}, {}) vs ({}, {})",
                self.k, self.n, other.k, other.n
            )));
        }
        Ok(())
    }

    /// Row-wise multiset union.
    pub fn union(&self, other: &Tableau) -> Result<Tableau> {
        self.same_shape_as(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend_from_slice(b);
                r
            })
            .collect();
        Tableau::new(self.k, self.n, rows)
    }

    /// Row-wise multiset difference `self / divisor`.
    pub fn quotient(&self, divisor: &Tableau) -> Result<Tableau> {
        self.same_shape_as(divisor)?;
        let mut rows = Vec::with_capacity(self.k);
        for (r, (a, b)) in self.rows.iter().zip(&divisor.rows).enumerate() {
            let mut row = a.clone();
            for v in b {
                match row.binary_search(v) {
                    Ok(pos) => {
                        row.remove(pos);
                    }
                    Err(_) => {
                        return Err(Error::NotAFactor(format!("value {v} missing from row {}", r + 1)));
                    }
                }
            }
            rows.push(row);
        }
        Tableau::new(self.k, self.n, rows)
    }

    /// Per-row value counts.
    pub fn content_grid(&self) -> ContentGrid {
        let mut g = ContentGrid::zero(self.k, self.n);
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                g.counts[r * self.n as usize + (v as usize - 1)] += 1;
            }
        }
        g
    }

    /// Multiplicity of each value `1..=n` over the whole tableau (index 0 unused).
    pub fn content(&self) -> Vec<u32> {
        let mut c = vec![0u32; self.n as usize + 1];
        for &v in self.rows.iter().flatten() {
            c[v as usize] += 1;
        }
        c
    }

    /// Whether every column consists of consecutive integers.
    pub fn is_trivial(&self) -> bool {
        (0..self.width()).all(|j| (1..self.k).all(|r| self.rows[r][j] == self.rows[r - 1][j] + 1))
    }

    /// Remove the trivial column starting at `c`, if it divides the tableau.
    fn strip_trivial(&self, c: u32) -> Option<Tableau> {
        let column = KSubset::interval(self.n, c, self.k as u32)?;
        self.quotient(&Tableau::column(&column)).ok()
    }

    /// The canonical representative obtained by removing a maximal trivial
    /// factor.
    pub fn reduce(&self) -> Tableau {
        let mut t = self.clone();
        let last_start = (self.n as usize + 1).saturating_sub(self.k) as u32;
        'outer: loop {
            for c in 1..=last_start {
                if let Some(s) = t.strip_trivial(c) {
                    t = s;
                    continue 'outer;
                }
            }
            return t;
        }
    }

    /// Whether the two tableaux agree after reduction.
    pub fn equivalent(&self, other: &Tableau) -> Result<bool> {
        self.same_shape_as(other)?;
        Ok(self.reduce() == other.reduce())
    }

    /// Row lengths of the subtableau of entries `≤ i`.
    fn restricted_shape(&self, i: u32) -> Vec<usize> {
        self.rows.iter().map(|r| r.partition_point(|&v| v <= i)).collect()
    }

    /// Compare in the dominance order: same content, then dominance of the
    /// shapes of the restrictions to entries `≤ i` for every `i`.
    pub fn dominance_compare(&self, other: &Tableau) -> Dominance {
        if self.k != other.k || self.n != other.n || self.content() != other.content() {
            return Dominance::DifferentContent;
        }
        if self == other {
            return Dominance::Equal;
        }
        let (mut ge, mut le) = (true, true);
        for i in 1..=self.n {
            let (a, b) = (self.restricted_shape(i), other.restricted_shape(i));
            let (mut sa, mut sb) = (0usize, 0usize);
            for (x, y) in a.iter().zip(&b) {
                sa += x;
                sb += y;
                if sa < sb {
                    ge = false;
                }
                if sa > sb {
                    le = false;
                }
            }
        }
        match (ge, le) {
            (true, _) => Dominance::Greater,
            (_, true) => Dominance::Less,
            _ => Dominance::Incomparable,
        }
    }

    /// The Bender–Knuth involution `BK_i`.
    ///
    /// An `i` is paired when an `i + 1` sits directly below it; all other
    /// occurrences of `i` and `i + 1` are free. In each row the numbers of free
    /// `i` and free `i + 1` are exchanged. For `i` outside `[1, n − 1]` the
    /// tableau is returned unchanged.
    pub fn bender_knuth(&self, i: u32) -> Tableau {
        if i == 0 || i >= self.n {
            return self.clone();
        }
        let w = self.width();
        let mut rows = Vec::with_capacity(self.k);
        for r in 0..self.k {
            let row = &self.rows[r];
            let mut paired_lo = 0;
            let mut paired_hi = 0;
            let mut lo = 0;
            let mut hi = 0;
            for j in 0..w {
                if row[j] == i {
                    lo += 1;
                    if r + 1 < self.k && self.rows[r + 1][j] == i + 1 {
                        paired_lo += 1;
                    }
                } else if row[j] == i + 1 {
                    hi += 1;
                    if r > 0 && self.rows[r - 1][j] == i {
                        paired_hi += 1;
                    }
                }
            }
            let free_lo = lo - paired_lo;
            let free_hi = hi - paired_hi;
            let mut new_row: Vec<u32> = row.iter().copied().filter(|&v| v != i && v != i + 1).collect();
            new_row.extend(core::iter::repeat_n(i, paired_lo + free_hi));
            new_row.extend(core::iter::repeat_n(i + 1, paired_hi + free_lo));
            new_row.sort_unstable();
            rows.push(new_row);
        }
        debug_assert!(check_rows(self.k, self.n, &rows).is_ok());
        Tableau { k: self.k, n: self.n, rows }
    }

    /// Promotion `BK_1 ∘ BK_2 ∘ ⋯ ∘ BK_{n−1}` (so `BK_{n−1}` acts first).
    pub fn promote(&self) -> Tableau {
        (1..self.n).rev().fold(self.clone(), |t, i| t.bender_knuth(i))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str(" / ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// The column `[(i−s)/2, k+(i−s)/2] \ {k−(i+s)/2}` attached to `Y_{i,s}`.
pub fn fundamental_subset(i: i64, s: i64, k: usize, n: u32) -> Result<KSubset> {
    let k_i = k as i64;
    if i < 1 || i >= k_i {
        return Err(Error::OutOfRange(format!("i = {i} outside [1, {}]", k_i - 1)));
    }
    if (i - s).rem_euclid(2) != 0 {
        return Err(Error::OutOfRange(format!("s = {s} has the wrong parity for i = {i}")));
    }
    let a = (i - s) / 2;
    let removed = k_i - (i + s) / 2;
    if a < 1 || a + k_i > n as i64 {
        return Err(Error::OutOfRange(format!("Y_{{{i},{s}}} needs entries in [{a}, {}], outside [1, {n}]", a + k_i)));
    }
    let elems = (a..=a + k_i).filter(|&v| v != removed).map(|v| v as u32).collect();
    KSubset::new(n, elems)
}

/// A dominant monomial `∏ Y_{i,s}^{u_{i,s}}` in the range allowed for `(k, ℓ)`:
/// `1 ≤ i ≤ k − 1` and `s = i − 2 − 2r` with `0 ≤ r ≤ ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominantMonomial {
    k: usize,
    ell: usize,
    factors: BTreeMap<(i64, i64), u32>,
}

impl DominantMonomial {
    /// Build from `(i, s, multiplicity)` triples. Repeated pairs accumulate.
    pub fn new(k: usize, ell: usize, factors: &[(i64, i64, u32)]) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadParameters("k must be at least 2".into()));
        }
        let mut map = BTreeMap::new();
        for &(i, s, m) in factors {
            if m == 0 {
                return Err(Error::OutOfRange(format!("zero multiplicity for Y_{{{i},{s}}}")));
            }
            if !in_range(k, ell, i, s) {
                return Err(Error::OutOfRange(format!("Y_{{{i},{s}}} outside the range for (k, ℓ) = ({k}, {ell})")));
            }
            *map.entry((i, s)).or_insert(0) += m;
        }
        Ok(DominantMonomial { k, ell, factors: map })
    }

    /// The monomial 1.
    pub fn one(k: usize, ell: usize) -> Self {
        DominantMonomial { k, ell, factors: BTreeMap::new() }
    }

    /// Rank of the Dynkin diagram plus one.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Level bound.
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `n = k + ℓ + 1`.
    pub fn n(&self) -> u32 {
        (self.k + self.ell + 1) as u32
    }

    /// `(i, s, multiplicity)` triples in increasing `(i, s)` order.
    pub fn factors(&self) -> Vec<(i64, i64, u32)> {
        self.factors.iter().map(|(&(i, s), &m)| (i, s, m)).collect()
    }

    /// Total number of fundamental factors, with multiplicity.
    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }
}

fn in_range(k: usize, ell: usize, i: i64, s: i64) -> bool {
    if i < 1 || i >= k as i64 {
        return false;
    }
    let r2 = i - 2 - s;
    r2 >= 0 && r2 % 2 == 0 && r2 / 2 <= ell as i64
}

/// All generators `Y_{i,s}` for `(k, ℓ)`, ordered by `i` then decreasing `s`.
pub fn monomial_generators(k: usize, ell: usize) -> Vec<(i64, i64)> {
    (1..k as i64).flat_map(|i| (0..=ell as i64).map(move |r| (i, i - 2 - 2 * r))).collect()
}

/// Union of the fundamental columns of `m`, reduced.
pub fn monomial_to_tableau(m: &DominantMonomial) -> Result<Tableau> {
    let n = m.n();
    let mut cols = Vec::new();
    for (&(i, s), &mult) in &m.factors {
        let c = fundamental_subset(i, s, m.k, n)?;
        cols.extend(core::iter::repeat_n(c, mult as usize));
    }
    Ok(Tableau::from_columns(m.k, n, &cols)?.reduce())
}

/// Precomputed exact solver for the inverse dictionary at fixed `(k, n)`.
///
/// The content grid of a tableau is written as a combination of the content
/// grids of all fundamental columns (with non-negative coefficients) and all
/// trivial columns (with arbitrary integer coefficients).
#[derive(Clone, Debug)]
pub struct MonomialDictionary {
    k: usize,
    n: u32,
    generators: Vec<(i64, i64)>,
    solver: ExactSolver,
}

impl MonomialDictionary {
    /// Set up the dictionary for `k` rows and alphabet `[1, n]`, `n ≥ k + 1`.
    ///
    /// Fails if the fundamental and trivial content grids are linearly
    /// dependent, which would make the decomposition non-unique.
    pub fn new(k: usize, n: u32) -> Result<Self> {
        if k < 2 || (n as usize) < k + 1 {
            return Err(Error::BadParameters(format!("need k ≥ 2 and n ≥ k + 1, got ({k}, {n})")));
        }
        let ell = n as usize - k - 1;
        let generators = monomial_generators(k, ell);
        let mut columns = Vec::new();
        for &(i, s) in &generators {
            let c = fundamental_subset(i, s, k, n)?;
            columns.push(Tableau::column(&c).content_grid().as_slice().to_vec());
        }
        for start in 1..=(n - k as u32 + 1) {
            let c = KSubset::interval(n, start, k as u32).expect("interval inside [1, n]");
            columns.push(Tableau::column(&c).content_grid().as_slice().to_vec());
        }
        let solver = ExactSolver::new(&columns)?;
        Ok(MonomialDictionary { k, n, generators, solver })
    }

    /// The dominant monomial whose tableau is equivalent to `t`.
    pub fn tableau_to_monomial(&self, t: &Tableau) -> Result<DominantMonomial> {
        if t.k != self.k || t.n != self.n {
            return Err(Error::DimensionMismatch(format!("dictionary is for ({}, {})", self.k, self.n)));
        }
        let x = self.solver.solve(t.content_grid().as_slice()).map_err(|_| Error::NoDecomposition(format!("{t}")))?;
        let mut factors = Vec::new();
        for (&(i, s), &u) in self.generators.iter().zip(&x) {
            if u < 0 {
                return Err(Error::NoDecomposition(format!("{t} needs Y_{{{i},{s}}} with exponent {u}")));
            }
            if u > 0 {
                factors.push((i, s, u as u32));
            }
        }
        DominantMonomial::new(self.k, self.n as usize - self.k - 1, &factors)
    }
}

/// One-shot version of [`MonomialDictionary::tableau_to_monomial`].
pub fn tableau_to_monomial(t: &Tableau) -> Result<DominantMonomial> {
    MonomialDictionary::new(t.k, t.n)?.tableau_to_monomial(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: usize, n: u32, rows: &[&[u32]]) -> Tableau {
        Tableau::new(k, n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn subset(n: u32, e: &[u32]) -> KSubset {
        KSubset::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn union_of_fundamental_columns() {
        let cols = [subset(6, &[1, 3, 4]), subset(6, &[2, 3, 5]), subset(6, &[2, 4, 5]), subset(6, &[3, 4, 6])];
        let u = Tableau::from_columns(3, 6, &cols).unwrap();
        assert_eq!(u, t(3, 6, &[&[1, 2, 2, 3], &[3, 3, 4, 4], &[4, 5, 5, 6]]));
        assert_eq!(u.reduce(), t(3, 6, &[&[1, 2], &[3, 4], &[5, 6]]));
    }

    #[test]
    fn quotient_recovers_factor() {
        let u = Tableau::from_columns(3, 6, &[subset(6, &[1, 2, 6]), subset(6, &[1, 4, 5]), subset(6, &[2, 3, 4])])
            .unwrap();
        assert_eq!(u, t(3, 6, &[&[1, 1, 2], &[2, 3, 4], &[4, 5, 6]]));
        let q = u.quotient(&Tableau::column(&subset(6, &[1, 2, 4]))).unwrap();
        assert_eq!(q, t(3, 6, &[&[1, 2], &[3, 4], &[5, 6]]));
        assert!(matches!(q.quotient(&u), Err(Error::NotAFactor(_))));
    }

    #[test]
    fn quotient_detects_broken_columns() {
        let big = t(2, 4, &[&[1, 3], &[2, 4]]);
        let err = big.quotient(&Tableau::column(&subset(4, &[1, 4]))).unwrap_err();
        assert!(matches!(err, Error::NotSemistandard(_)));
    }

    #[test]
    fn reduce_examples() {
        let s = t(3, 6, &[&[1, 2], &[3, 4], &[4, 6]]);
        let u = t(3, 6, &[&[1, 1], &[2, 4], &[3, 6]]);
        assert_eq!(s.reduce(), t(3, 6, &[&[1], &[4], &[6]]));
        assert_eq!(u.reduce(), t(3, 6, &[&[1], &[4], &[6]]));
        assert!(s.equivalent(&u).unwrap());
        assert!(t(3, 3, &[&[1], &[2], &[3]]).reduce().is_empty());
        assert!(!t(3, 4, &[&[1], &[2], &[4]]).equivalent(&t(3, 4, &[&[1], &[3], &[4]])).unwrap());
    }

    #[test]
    fn dominance_example() {
        let a = t(3, 6, &[&[1, 3], &[2, 5], &[4, 6]]);
        let b = t(3, 6, &[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(b.dominance_compare(&a), Dominance::Greater);
        assert_eq!(a.dominance_compare(&b), Dominance::Less);
        assert_eq!(a.dominance_compare(&a), Dominance::Equal);
        let c = t(3, 6, &[&[1, 2], &[3, 4], &[5, 5]]);
        assert_eq!(a.dominance_compare(&c), Dominance::DifferentContent);
    }

    #[test]
    fn fundamental_subsets() {
        assert_eq!(fundamental_subset(1, -5, 3, 6).unwrap(), subset(6, &[3, 4, 6]));
        assert_eq!(fundamental_subset(2, 0, 3, 6).unwrap(), subset(6, &[1, 3, 4]));
        assert_eq!(fundamental_subset(2, -2, 3, 6).unwrap(), subset(6, &[2, 4, 5]));
        assert_eq!(fundamental_subset(1, -3, 3, 6).unwrap(), subset(6, &[2, 3, 5]));
        assert!(fundamental_subset(1, -7, 3, 6).is_err());
        assert!(fundamental_subset(1, -4, 3, 6).is_err());
    }

    #[test]
    fn dictionary_worked_example() {
        let m = DominantMonomial::new(3, 2, &[(1, -5, 1), (1, -3, 1), (2, -2, 1), (2, 0, 1)]).unwrap();
        let tab = monomial_to_tableau(&m).unwrap();
        assert_eq!(tab, t(3, 6, &[&[1, 2], &[3, 4], &[5, 6]]));
        assert_eq!(tableau_to_monomial(&tab).unwrap(), m);
        let col = Tableau::column(&subset(6, &[2, 3, 5]));
        assert_eq!(tableau_to_monomial(&col).unwrap().factors(), vec![(1, -3, 1)]);
        assert_eq!(tableau_to_monomial(&t(3, 6, &[&[2], &[3], &[4]])).unwrap(), DominantMonomial::one(3, 2));
    }

    #[test]
    fn promotion_example() {
        let a = t(3, 8, &[&[1, 1], &[2, 4], &[4, 7]]);
        assert_eq!(a.promote(), t(3, 8, &[&[2, 2], &[3, 5], &[5, 8]]));
        assert_eq!(Tableau::empty(3, 8).promote(), Tableau::empty(3, 8));
    }

    #[test]
    fn bender_knuth_fixes_absent_values() {
        let a = t(2, 6, &[&[1, 1], &[2, 6]]);
        assert_eq!(a.bender_knuth(3), a);
        assert_eq!(a.bender_knuth(4).bender_knuth(4), a);
    }
}
