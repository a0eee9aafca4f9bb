//! Hernandez–Leclerc quivers for type A, the initial quiver `Q_ℓ`, and the
//! k-subsets attached to Kirillov–Reshetikhin modules and generic kernels.
//!
//! Vertices are pairs `(i, m)` with `i ∈ [1, k−1]` and `m < 0`, where `m` is
//! even for odd `i` and odd for even `i`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cluster::{Quiver, Seed};
use crate::cmcat::KSubset;
use crate::einv::{are_compatible, EValueReport, Sampling};
use crate::gvec::GVectorSolver;
use crate::qpa::{build_algebra, opposite_triangle_potential, Algebra, QuiverWithPotential};
use crate::tableaux::Tableau;
use crate::{Error, Result};

/// Which height function labels the Dynkin vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeightFn {
    /// `ξ(i) = i − 2`, for the linear orientation.
    Linear,
    /// `ξ′(i) = 0` for even `i` and `−1` for odd `i`, for the bipartite
    /// orientation.
    Bipartite,
}

impl HeightFn {
    /// Value at `i`.
    pub fn at(self, i: i64) -> i64 {
        match self {
            HeightFn::Linear => i - 2,
            HeightFn::Bipartite => {
                if i % 2 == 0 {
                    0
                } else {
                    -1
                }
            }
        }
    }
}

/// A vertex `(i, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HLVertex {
    /// Dynkin index.
    pub i: i64,
    /// Spectral parameter.
    pub m: i64,
}

impl HLVertex {
    /// Validate the parity rule and sign.
    pub fn new(i: i64, m: i64) -> Result<Self> {
        if i < 1 || m >= 0 || (i + m) % 2 == 0 {
            return Err(Error::BadParameters(format!("({i}, {m}) is not a vertex")));
        }
        Ok(HLVertex { i, m })
    }
}

/// Top value of `m` in column `i`.
fn top(i: i64) -> i64 {
    if i % 2 == 1 {
        -2
    } else {
        -1
    }
}

fn build_layered(
    k: usize,
    rows: impl Fn(i64) -> Vec<i64>,
    arrows_of: impl Fn(HLVertex, &dyn Fn(HLVertex) -> bool) -> Vec<(HLVertex, HLVertex)>,
) -> Result<Quiver> {
    let mut mutable = Vec::new();
    let mut frozen = Vec::new();
    for i in 1..k as i64 {
        let col = rows(i);
        let (last, rest) = col.split_last().ok_or_else(|| Error::BadParameters("empty column".into()))?;
        mutable.extend(rest.iter().map(|&m| HLVertex { i, m }));
        frozen.push(HLVertex { i, m: *last });
    }
    let n_mut = mutable.len();
    let vertices: Vec<HLVertex> = mutable.into_iter().chain(frozen).collect();
    let index: BTreeMap<HLVertex, usize> = vertices.iter().enumerate().map(|(t, &v)| (v, t)).collect();
    let present = |v: HLVertex| index.contains_key(&v);
    let mut arrows = Vec::new();
    for &v in &vertices {
        for (a, b) in arrows_of(v, &present) {
            arrows.push((index[&a], index[&b]));
        }
    }
    Quiver::new(vertices.len(), n_mut, &arrows)?.with_coords(vertices.iter().map(|v| (v.i, v.m)).collect())
}

/// The truncation `Γ⁻_s`: vertices with `m ≥ s`, arrows `(i, m+2) → (i, m)`
/// and `(i, m−1) → (j, m)` for `|i − j| = 1`. The lowest vertex of each column
/// is frozen. Vertex order: mutable vertices column by column from the top,
/// then the frozen ones by column.
pub fn gamma_quiver(k: usize, s: i64) -> Result<Quiver> {
    if k < 2 || s >= 0 {
        return Err(Error::BadParameters(format!("need k ≥ 2 and s < 0, got k = {k}, s = {s}")));
    }
    if (1..k as i64).any(|i| top(i) < s) {
        return Err(Error::BadParameters(format!("truncation at {s} leaves an empty column")));
    }
    build_layered(
        k,
        |i| (s..=top(i)).rev().filter(|m| (i + m) % 2 != 0).collect(),
        |v, present| {
            let mut out = Vec::new();
            let down = HLVertex { i: v.i, m: v.m - 2 };
            if present(down) {
                out.push((v, down));
            }
            for j in [v.i - 1, v.i + 1] {
                let w = HLVertex { i: j, m: v.m + 1 };
                if present(w) {
                    out.push((v, w));
                }
            }
            out
        },
    )
}

/// The quiver `Q_ℓ` with `(k−1)(ℓ+1)` vertices. Arrows leave only the
/// non-bottom vertices: `(i, a) → (i, a−2)`, `(i, a) → (i+1, a + (−1)^{i+1})`
/// and `(i, a) → (i−1, a + 2 + (−1)^{i−1})`. The bottom row is frozen.
pub fn q_ell_quiver(k: usize, ell: usize) -> Result<Quiver> {
    if k < 2 {
        return Err(Error::BadParameters(format!("need k ≥ 2, got {k}")));
    }
    let ell = ell as i64;
    build_layered(
        k,
        |i| (0..=ell).map(|r| top(i) - 2 * r).collect(),
        |v, present| {
            if v.m == top(v.i) - 2 * ell {
                return Vec::new();
            }
            let sign = |e: i64| if e % 2 == 0 { 1 } else { -1 };
            [
                HLVertex { i: v.i, m: v.m - 2 },
                HLVertex { i: v.i + 1, m: v.m + sign(v.i + 1) },
                HLVertex { i: v.i - 1, m: v.m + 2 + sign(v.i - 1) },
            ]
            .into_iter()
            .filter(|&w| present(w))
            .map(|w| (v, w))
            .collect()
        },
    )
}

/// The coordinates of `(a, b)` in the Grassmannian grid as a vertex of `Q_ℓ`:
/// `(b, −2a)` for odd `b` and `(b, −2a + 1)` for even `b`.
pub fn grid_to_q_ell(a: i64, b: i64) -> HLVertex {
    HLVertex { i: b, m: if b % 2 == 1 { -2 * a } else { -2 * a + 1 } }
}

/// Order in which the mutable vertices of one column are mutated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnOrder {
    /// From the top row down.
    TopDown,
    /// From the lowest mutable row up.
    BottomUp,
}

/// Column sweeps turning the mutable part of `Q_ℓ` into that of `Γ⁻_{−2ℓ−2}`:
/// columns `k−1` down to `3`, then `k−1` down to `5`, and so on. Returns
/// vertex indices of [`q_ell_quiver`].
pub fn hl_mutation_sequence(k: usize, ell: usize, order: ColumnOrder) -> Vec<usize> {
    let mut seq = Vec::new();
    let last = k as i64 - 1;
    let mut lowest = 3;
    while lowest <= last {
        for col in (lowest..=last).rev() {
            let base = (col as usize - 1) * ell;
            let rows: Vec<usize> = (0..ell).map(|r| base + r).collect();
            match order {
                ColumnOrder::TopDown => seq.extend(rows),
                ColumnOrder::BottomUp => seq.extend(rows.into_iter().rev()),
            }
        }
        lowest += 2;
    }
    seq
}

/// `n = k + ℓ + 1`.
pub fn hl_n(k: usize, ell: usize) -> u32 {
    (k + ell + 1) as u32
}

fn cyclic_union(n: u32, parts: &[(i64, i64)]) -> Result<KSubset> {
    let mut elems = Vec::new();
    for &(lo, hi) in parts {
        for v in lo..=hi {
            elems.push(crate::cmcat::wrap(v, n));
        }
    }
    KSubset::new(n, elems).map_err(|_| Error::OutOfRange(format!("intervals {parts:?} overlap modulo {n}")))
}

fn check_vertex(i: i64, m: i64, k: usize, ell: usize) -> Result<()> {
    HLVertex::new(i, m).map_err(|e| Error::OutOfRange(format!("{e}")))?;
    if i > k as i64 - 1 || m < -2 * ell as i64 - 2 {
        return Err(Error::OutOfRange(format!("({i}, {m}) is not a vertex of the truncation for k = {k}, ℓ = {ell}")));
    }
    Ok(())
}

/// `J_{i,m} = [p, p+k−i−1] ∪ [(i−m−1)/2 + k−i+1, (i−m−1)/2 + k]` with
/// `p = (i − ξ′(i))/2`, intervals taken cyclically in `[1, n]`.
pub fn kr_subset(i: i64, m: i64, k: usize, ell: usize) -> Result<KSubset> {
    check_vertex(i, m, k, ell)?;
    let k_i = k as i64;
    let p = (i - HeightFn::Bipartite.at(i)) / 2;
    let q = (i - m - 1) / 2;
    cyclic_union(hl_n(k, ell), &[(p, p + k_i - i - 1), (q + k_i - i + 1, q + k_i)])
}

/// Largest admissible `v` at `(i, m)`: `⌊(m + 2ℓ + (−1)^{i+1}) / 2⌋`.
pub fn max_v(i: i64, m: i64, ell: usize) -> i64 {
    let sign = if i % 2 == 1 { 1 } else { -1 };
    (m + 2 * ell as i64 + sign).div_euclid(2)
}

fn check_triple(i: i64, m: i64, v: i64, k: usize, ell: usize) -> Result<()> {
    check_vertex(i, m, k, ell)?;
    if v < 1 || v > max_v(i, m, ell) {
        return Err(Error::OutOfRange(format!("v = {v} outside [1, {}] at ({i}, {m})", max_v(i, m, ell))));
    }
    Ok(())
}

/// `I^{(v)}_{i,m} = [p, p+k−i−1] ∪ [p + v + k − i, p + v + k − 1]` with
/// `p = (i − m + 1)/2`.
pub fn kernel_subset(i: i64, m: i64, v: i64, k: usize, ell: usize) -> Result<KSubset> {
    check_triple(i, m, v, k, ell)?;
    let k_i = k as i64;
    let p = (i - m + 1) / 2;
    let q = (i - m + 2 * v - 1) / 2;
    cyclic_union(hl_n(k, ell), &[(p, p + k_i - i - 1), (q + k_i - i + 1, q + k_i)])
}

/// The subset of `τ M^{(i)}_{v,m}`, by the two displayed cases on the sign of
/// `(1 − i − m)/2`.
pub fn tau_kernel_subset(i: i64, m: i64, v: i64, k: usize, ell: usize) -> Result<KSubset> {
    check_triple(i, m, v, k, ell)?;
    let n = hl_n(k, ell);
    let k_i = k as i64;
    let a = (1 - i - m) / 2;
    let b = (i - m - 1) / 2;
    let second = ((i - m + 2 * v + 1) / 2, (i - m + 2 * v - 1) / 2 + k_i - i);
    if a >= 1 {
        cyclic_union(n, &[(a, b), second])
    } else {
        cyclic_union(n, &[(1, b), second, (n as i64 + a, n as i64)])
    }
}

/// All admissible triples `(i, m, v)` for `(k, ℓ)`.
pub fn admissible_triples(k: usize, ell: usize) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for i in 1..k as i64 {
        let mut m = top(i);
        while m >= -2 * ell as i64 - 2 {
            for v in 1..=max_v(i, m, ell) {
                out.push((i, m, v));
            }
            m -= 2;
        }
    }
    out
}

/// Recover `(i, m, v)` from a kernel subset.
pub fn kernel_parameters(subset: &KSubset, k: usize, ell: usize) -> Result<(i64, i64, i64)> {
    if subset.n() != hl_n(k, ell) || subset.k() != k {
        return Err(Error::DimensionMismatch(format!("{subset} is not a {k}-subset of [{}]", hl_n(k, ell))));
    }
    let runs = subset.cyclic_runs();
    if runs.len() != 2 {
        return Err(Error::NotTwoIntervals);
    }
    let n = subset.n() as i64;
    let mut found = Vec::new();
    for (first, second) in [(runs[0], runs[1]), (runs[1], runs[0])] {
        let i = k as i64 - first.1 as i64;
        let gap = (second.0 as i64 - first.0 as i64 - first.1 as i64).rem_euclid(n);
        let p = first.0 as i64;
        let m = i + 1 - 2 * p;
        if second.1 as i64 == i && check_triple(i, m, gap, k, ell).is_ok() {
            found.push((i, m, gap));
        }
    }
    match found.as_slice() {
        [t] => Ok(*t),
        [] => Err(Error::NoDecomposition(format!("{subset} is not a kernel subset for k = {k}, ℓ = {ell}"))),
        _ => Err(Error::NonUniqueSolution),
    }
}

/// The seed whose mutable part is `Γ⁻_{−2ℓ−2}` labelled by `J_{i,m}`, with
/// the `n` cyclic intervals as frozen labels. Frozen vertices carry no arrows.
pub fn hl_seed(k: usize, ell: usize) -> Result<Seed> {
    let gamma = gamma_quiver(k, -2 * ell as i64 - 2)?;
    let part = gamma.mutable_part();
    let n = hl_n(k, ell);
    let coords = part.coords().expect("gamma quivers carry coordinates").to_vec();
    let mut labels = Vec::new();
    for &(i, m) in &coords {
        labels.push(Tableau::column(&kr_subset(i, m, k, ell)?));
    }
    let mut all_coords = coords.clone();
    for j in 1..=n as i64 {
        labels.push(Tableau::column(&KSubset::cyclic_interval(n, j, k as u32)));
        all_coords.push((0, -j));
    }
    let quiver = Quiver::new(labels.len(), part.m(), &part.arrows())?.with_coords(all_coords)?;
    Seed::new(quiver, labels)
}

/// The Jacobian algebra attached to the mutable part of a seed quiver with
/// coordinates: the opposite quiver with the orientation-signed triangle
/// potential, vertex names taken from the one-column labels.
pub fn seed_qp(seed: &Seed) -> Result<QuiverWithPotential> {
    let labels = seed.subset_labels().ok_or_else(|| Error::BadParameters("seed labels must be one-column".into()))?;
    let names: Vec<String> = labels[..seed.quiver().n_mut()].iter().map(KSubset::label).collect();
    opposite_triangle_potential(seed.quiver(), names)
}

/// Everything needed to test compatibility of kernel subsets at `(k, ℓ)`.
#[derive(Clone, Debug)]
pub struct HLContext {
    /// `k`.
    pub k: usize,
    /// `ℓ`.
    pub ell: usize,
    /// The labelled seed.
    pub seed: Seed,
    /// Jacobian algebra over its mutable vertices.
    pub algebra: Algebra,
    solver: GVectorSolver,
}

impl HLContext {
    /// Build the seed, its algebra and a g-vector solver.
    pub fn new(k: usize, ell: usize) -> Result<Self> {
        let seed = hl_seed(k, ell)?;
        let algebra = build_algebra(&seed_qp(&seed)?, 8 * (k + ell))?;
        let solver = GVectorSolver::new(&seed)?;
        Ok(HLContext { k, ell, seed, algebra, solver })
    }

    /// Conjectural compatibility of the kernel subsets of two admissible
    /// triples, through the generic value of 𝔢 on their g-vectors.
    pub fn kr_compatible(&self, a: (i64, i64, i64), b: (i64, i64, i64), s: Sampling) -> Result<(bool, EValueReport)> {
        let ga = self.solver.g_vector(&Tableau::column(&kernel_subset(a.0, a.1, a.2, self.k, self.ell)?))?;
        let gb = self.solver.g_vector(&Tableau::column(&kernel_subset(b.0, b.1, b.2, self.k, self.ell)?))?;
        are_compatible(&self.algebra, &ga, &gb, s)
    }
}

/// One-shot form of [`HLContext::kr_compatible`].
pub fn kr_compatible(
    a: (i64, i64, i64),
    b: (i64, i64, i64),
    k: usize,
    ell: usize,
    s: Sampling,
) -> Result<(bool, EValueReport)> {
    HLContext::new(k, ell)?.kr_compatible(a, b, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(n: u32, e: &[u32]) -> KSubset {
        KSubset::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn kr_subsets_at_k4() {
        assert_eq!(kr_subset(3, -2, 4, 3).unwrap(), s(8, &[2, 4, 5, 6]));
        assert_eq!(kr_subset(3, -6, 4, 3).unwrap(), s(8, &[2, 6, 7, 8]));
    }

    #[test]
    fn kernel_example() {
        assert_eq!(kernel_subset(3, -2, 2, 4, 3).unwrap(), s(8, &[3, 6, 7, 8]));
        assert_eq!(tau_kernel_subset(3, -2, 2, 4, 3).unwrap(), s(8, &[1, 2, 5, 8]));
        assert_eq!(kernel_parameters(&s(8, &[3, 6, 7, 8]), 4, 3), Ok((3, -2, 2)));
        assert!(kernel_subset(3, -2, 3, 4, 3).is_err());
    }

    #[test]
    fn sequence_shapes() {
        assert!(hl_mutation_sequence(2, 3, ColumnOrder::TopDown).is_empty());
        assert!(hl_mutation_sequence(3, 5, ColumnOrder::TopDown).is_empty());
        assert_eq!(hl_mutation_sequence(4, 2, ColumnOrder::TopDown), vec![4, 5]);
        assert_eq!(hl_mutation_sequence(5, 1, ColumnOrder::TopDown), vec![3, 2]);
    }

    #[test]
    fn q_ell_for_k2_is_a_line() {
        let q = q_ell_quiver(2, 3).unwrap();
        assert_eq!(q.m(), 4);
        let mut arrows = q.arrows();
        arrows.sort();
        assert_eq!(arrows, vec![(0, 1), (1, 2), (2, 3)]);
    }
}
