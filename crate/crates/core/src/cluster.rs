//! Quivers, exchange matrices and mutation of tableau-labelled seeds.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cmcat::KSubset;
use crate::gvec::{GVector, GVectorSolver};
use crate::tableaux::{Dominance, Tableau};
use crate::{Error, Result};

/// A quiver whose first `n_mut` vertices are mutable and the rest frozen.
///
/// Arrows are stored as a count matrix. Opposite arrows between two vertices
/// cancel on construction, so at most one direction is ever populated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    m: usize,
    n_mut: usize,
    counts: Vec<u32>,
    coords: Option<Vec<(i64, i64)>>,
}

impl Quiver {
    /// Build from an arrow list (repeats allowed; 2-cycles cancel).
    pub fn new(m: usize, n_mut: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        if n_mut > m {
            return Err(Error::BadParameters(format!("{n_mut} mutable vertices out of {m}")));
        }
        let mut counts = vec![0u32; m * m];
        for &(i, j) in arrows {
            if i >= m || j >= m {
                return Err(Error::BadParameters(format!("arrow {i}→{j} leaves the vertex set")));
            }
            if i == j {
                return Err(Error::BadParameters(format!("loop at vertex {i}")));
            }
            counts[i * m + j] += 1;
        }
        let mut q = Quiver { m, n_mut, counts, coords: None };
        q.cancel_two_cycles();
        Ok(q)
    }

    /// Attach display coordinates, one per vertex.
    pub fn with_coords(mut self, coords: Vec<(i64, i64)>) -> Result<Self> {
        if coords.len() != self.m {
            return Err(Error::DimensionMismatch(format!("{} coordinates for {} vertices", coords.len(), self.m)));
        }
        self.coords = Some(coords);
        Ok(self)
    }

    /// Display coordinates, if any.
    pub fn coords(&self) -> Option<&[(i64, i64)]> {
        self.coords.as_deref()
    }

    /// Number of vertices.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of mutable vertices.
    pub fn n_mut(&self) -> usize {
        self.n_mut
    }

    /// Whether `v` is frozen.
    pub fn is_frozen(&self, v: usize) -> bool {
        v >= self.n_mut
    }

    /// Number of arrows `i → j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> u32 {
        self.counts[i * self.m + j]
    }

    /// All arrows with multiplicity, ordered by source then target.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in 0..self.m {
                out.extend(core::iter::repeat_n((i, j), self.arrow_count(i, j) as usize));
            }
        }
        out
    }

    /// The skew-symmetric exchange matrix `b_ij = #(i→j) − #(j→i)`.
    pub fn exchange_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.m)
            .map(|i| (0..self.m).map(|j| self.arrow_count(i, j) as i64 - self.arrow_count(j, i) as i64).collect())
            .collect()
    }

    fn cancel_two_cycles(&mut self) {
        let m = self.m;
        for i in 0..m {
            for j in (i + 1)..m {
                let c = self.counts[i * m + j].min(self.counts[j * m + i]);
                self.counts[i * m + j] -= c;
                self.counts[j * m + i] -= c;
            }
        }
    }

    /// Mutation at `r`: add `i → j` for every path `i → r → j`, reverse the
    /// arrows at `r`, cancel 2-cycles. Pairs of frozen vertices are left alone.
    pub fn mutate(&self, r: usize) -> Result<Quiver> {
        if r >= self.m {
            return Err(Error::BadParameters(format!("vertex {r} out of range")));
        }
        if self.is_frozen(r) {
            return Err(Error::FrozenVertex(r));
        }
        let m = self.m;
        let mut counts = self.counts.clone();
        for i in 0..m {
            let into = self.arrow_count(i, r);
            if into == 0 {
                continue;
            }
            for j in 0..m {
                let out = self.arrow_count(r, j);
                if out == 0 || i == j || (self.is_frozen(i) && self.is_frozen(j)) {
                    continue;
                }
                counts[i * m + j] += into * out;
            }
        }
        for v in 0..m {
            counts[v * m + r] = self.arrow_count(r, v);
            counts[r * m + v] = self.arrow_count(v, r);
        }
        let mut q = Quiver { m, n_mut: self.n_mut, counts, coords: self.coords.clone() };
        q.cancel_two_cycles();
        Ok(q)
    }

    /// The full subquiver on the mutable vertices.
    pub fn mutable_part(&self) -> Quiver {
        let k = self.n_mut;
        let mut counts = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                counts[i * k + j] = self.arrow_count(i, j);
            }
        }
        Quiver { m: k, n_mut: k, counts, coords: self.coords.as_ref().map(|c| c[..k].to_vec()) }
    }

    /// Relabel vertices so that old vertex `perm[t]` becomes vertex `t`.
    /// The mutable/frozen split is kept by count.
    pub fn permuted(&self, perm: &[usize]) -> Quiver {
        let m = self.m;
        let mut counts = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                counts[a * m + b] = self.arrow_count(perm[a], perm[b]);
            }
        }
        Quiver {
            m,
            n_mut: self.n_mut,
            counts,
            coords: self.coords.as_ref().map(|c| perm.iter().map(|&p| c[p]).collect()),
        }
    }

    /// A vertex bijection `φ` (as a vector, `φ[v]` in `other`) preserving all
    /// arrow counts, if one exists. The frozen/mutable split is ignored.
    pub fn isomorphism(&self, other: &Quiver) -> Option<Vec<usize>> {
        if self.m != other.m || self.arrows().len() != other.arrows().len() {
            return None;
        }
        let ca = refine_colors(self);
        let cb = refine_colors(other);
        let mut hist_a: Vec<u64> = ca.clone();
        let mut hist_b: Vec<u64> = cb.clone();
        hist_a.sort_unstable();
        hist_b.sort_unstable();
        if hist_a != hist_b {
            return None;
        }
        // Assign the most constrained vertices (rarest colors) first.
        let mut order: Vec<usize> = (0..self.m).collect();
        let freq = |c: u64| ca.iter().filter(|&&x| x == c).count();
        order.sort_by_key(|&v| (freq(ca[v]), v));
        let mut phi = vec![usize::MAX; self.m];
        let mut used = vec![false; self.m];
        if extend_isomorphism(self, other, &ca, &cb, &order, 0, &mut phi, &mut used) {
            Some(phi)
        } else {
            None
        }
    }
}

fn mix(h: u64, v: u64) -> u64 {
    // FNV-style combination; only used to bucket vertices.
    (h ^ v).wrapping_mul(0x0100_0000_01b3).rotate_left(17) ^ 0x9e37_79b9_7f4a_7c15
}

/// Iterated degree refinement: a vertex's color is updated from the sorted
/// multiset of (count, direction, neighbour color) triples.
fn refine_colors(q: &Quiver) -> Vec<u64> {
    let m = q.m;
    let mut colors: Vec<u64> = vec![1; m];
    for _ in 0..m.max(1) {
        let mut next = Vec::with_capacity(m);
        for v in 0..m {
            let mut sig: Vec<(u32, u8, u64)> = Vec::new();
            for w in 0..m {
                if q.arrow_count(v, w) > 0 {
                    sig.push((q.arrow_count(v, w), 0, colors[w]));
                }
                if q.arrow_count(w, v) > 0 {
                    sig.push((q.arrow_count(w, v), 1, colors[w]));
                }
            }
            sig.sort_unstable();
            let mut h = mix(0, colors[v]);
            for (c, d, col) in sig {
                h = mix(mix(mix(h, c as u64), d as u64), col);
            }
            next.push(h);
        }
        let classes_before: BTreeSet<u64> = colors.iter().copied().collect();
        let classes_after: BTreeSet<u64> = next.iter().copied().collect();
        colors = next;
        if classes_after.len() == classes_before.len() {
            break;
        }
    }
    colors
}

#[allow(clippy::too_many_arguments)]
fn extend_isomorphism(
    a: &Quiver,
    b: &Quiver,
    ca: &[u64],
    cb: &[u64],
    order: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.m {
        if used[w] || ca[v] != cb[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            a.arrow_count(u, v) == b.arrow_count(phi[u], w) && a.arrow_count(v, u) == b.arrow_count(w, phi[u])
        });
        if !consistent {
            continue;
        }
        phi[v] = w;
        used[w] = true;
        if extend_isomorphism(a, b, ca, cb, order, depth + 1, phi, used) {
            return true;
        }
        used[w] = false;
        phi[v] = usize::MAX;
    }
    false
}

/// Matrix mutation of an exchange matrix at `r`, leaving entries between two
/// frozen vertices (index `≥ n_mut`) untouched.
pub fn mutate_exchange_matrix(b: &[Vec<i64>], r: usize, n_mut: usize) -> Vec<Vec<i64>> {
    let m = b.len();
    let mut out = b.to_vec();
    for i in 0..m {
        for j in 0..m {
            if i == r || j == r {
                out[i][j] = -b[i][j];
            } else if i < n_mut || j < n_mut {
                let pos = |x: i64| x.max(0);
                out[i][j] = b[i][j] + pos(b[i][r]) * pos(b[r][j]) - pos(-b[i][r]) * pos(-b[r][j]);
            }
        }
    }
    out
}

/// A quiver together with a tableau label at every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Seed {
    quiver: Quiver,
    labels: Vec<Tableau>,
}

impl Seed {
    /// Pair a quiver with one label per vertex.
    pub fn new(quiver: Quiver, labels: Vec<Tableau>) -> Result<Self> {
        if labels.len() != quiver.m() {
            return Err(Error::DimensionMismatch(format!("{} labels for {} vertices", labels.len(), quiver.m())));
        }
        if let Some(w) = labels.windows(2).find(|w| w[0].k() != w[1].k() || w[0].n() != w[1].n()) {
            return Err(Error::DimensionMismatch(format!("labels {} and {} have different (k, n)", w[0], w[1])));
        }
        Ok(Seed { quiver, labels })
    }

    /// The quiver.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Vertex labels.
    pub fn labels(&self) -> &[Tableau] {
        &self.labels
    }

    /// Labels of one-column seeds as k-subsets (`None` if some label has
    /// more than one column).
    pub fn subset_labels(&self) -> Option<Vec<KSubset>> {
        self.labels.iter().map(|t| (t.width() == 1).then(|| t.column_subset(0))).collect()
    }

    fn neighbour_union(&self, r: usize, incoming: bool) -> Result<Tableau> {
        let first = &self.labels[0];
        let mut acc = Tableau::empty(first.k(), first.n());
        for v in 0..self.quiver.m() {
            let c = if incoming { self.quiver.arrow_count(v, r) } else { self.quiver.arrow_count(r, v) };
            for _ in 0..c {
                acc = acc.union(&self.labels[v])?;
            }
        }
        Ok(acc)
    }

    /// Seed mutation at `r`: the new label is
    /// `T_r⁻¹ · max{∪_{i→r} T_i, ∪_{r→i} T_i}` (then reduced), and the quiver
    /// is mutated.
    pub fn mutate(&self, r: usize) -> Result<Seed> {
        let quiver = self.quiver.mutate(r)?;
        let into = self.neighbour_union(r, true)?;
        let out = self.neighbour_union(r, false)?;
        let larger = match into.dominance_compare(&out) {
            Dominance::Greater | Dominance::Equal => into,
            Dominance::Less => out,
            Dominance::Incomparable | Dominance::DifferentContent => {
                return Err(Error::IncomparableExchange(r));
            }
        };
        let mut labels = self.labels.clone();
        labels[r] = larger.quotient(&self.labels[r])?.reduce();
        Ok(Seed { quiver, labels })
    }

    /// Cluster identity: the sorted reduced mutable labels.
    pub fn cluster_key(&self) -> Vec<Tableau> {
        let mut key: Vec<Tableau> = self.labels[..self.quiver.n_mut()].iter().map(Tableau::reduce).collect();
        key.sort();
        key
    }
}

/// Coordinates `(a, b)` of the Grassmannian initial quiver in seed order:
/// mutable vertices by column `b` then row `a`, followed by the frozen vertex
/// `(0, 0)`, the column `b = k`, and the bottom row `a = n − k`.
pub fn grassmannian_coordinates(k: usize, n: usize) -> Vec<(i64, i64)> {
    let (k, rows) = (k as i64, (n - k) as i64);
    let mut v = Vec::new();
    for b in 1..k {
        for a in 1..rows {
            v.push((a, b));
        }
    }
    v.push((0, 0));
    for a in 1..=rows {
        v.push((a, k));
    }
    for b in 1..k {
        v.push((rows, b));
    }
    v
}

/// The Plücker label at grid position `(a, b)`: `[1, k−b] ∪ [a+k−b+1, a+k]`,
/// and `[1, k]` at `(0, 0)`.
pub fn grassmannian_label(k: usize, n: usize, (a, b): (i64, i64)) -> KSubset {
    let k_i = k as i64;
    let elems = if (a, b) == (0, 0) {
        (1..=k_i).collect::<Vec<_>>()
    } else {
        (1..=k_i - b).chain(a + k_i - b + 1..=a + k_i).collect()
    };
    KSubset::new(n as u32, elems.into_iter().map(|v| v as u32).collect()).expect("grid labels are k-subsets")
}

/// The rectangular initial seed of the Grassmannian cluster algebra.
pub fn grassmannian_initial_seed(k: usize, n: usize) -> Result<Seed> {
    if k < 2 || k + 2 > n {
        return Err(Error::BadParameters(format!("need 2 ≤ k ≤ n − 2, got (k, n) = ({k}, {n})")));
    }
    let coords = grassmannian_coordinates(k, n);
    let index: BTreeMap<(i64, i64), usize> = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let (k_i, rows) = (k as i64, (n - k) as i64);
    let mut arrows = vec![(index[&(0, 0)], index[&(1, 1)])];
    for b in 1..=k_i {
        for a in 2..=rows {
            arrows.push((index[&(a - 1, b)], index[&(a, b)]));
        }
    }
    for a in 1..=rows {
        for b in 2..=k_i {
            arrows.push((index[&(a, b - 1)], index[&(a, b)]));
        }
    }
    for a in 1..rows {
        for b in 1..k_i {
            arrows.push((index[&(a + 1, b + 1)], index[&(a, b)]));
        }
    }
    let n_mut = (k - 1) * (n - k - 1);
    let quiver = Quiver::new(coords.len(), n_mut, &arrows)?.with_coords(coords.clone())?;
    let labels = coords.iter().map(|&c| Tableau::column(&grassmannian_label(k, n, c))).collect();
    Seed::new(quiver, labels)
}

/// Result of a breadth-first walk through the exchange graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exploration {
    /// Distinct reduced mutable labels met, sorted, with g-vectors relative to
    /// the starting seed.
    pub variables: Vec<(Tableau, GVector)>,
    /// Number of distinct clusters visited.
    pub seeds: usize,
    /// Whether the walk stopped because the seed budget ran out.
    pub budget_exceeded: bool,
    /// Whether every reachable cluster within the depth bound was visited and
    /// the frontier at the last level produced nothing new.
    pub closed: bool,
}

/// Breadth-first exploration, one level at a time.
///
/// `expand` maps a frontier to, for each seed in order, the list of its
/// mutations at every mutable vertex in increasing order. Any order-preserving
/// implementation (sequential or parallel) gives the same result.
pub fn explore_with<F>(start: &Seed, max_depth: usize, max_seeds: usize, mut expand: F) -> Result<Exploration>
where
    F: FnMut(&[Seed]) -> Result<Vec<Vec<Seed>>>,
{
    if max_seeds == 0 {
        return Err(Error::BadParameters("seed budget must be positive".into()));
    }
    let mut visited: BTreeSet<Vec<Tableau>> = BTreeSet::new();
    let mut variables: BTreeSet<Tableau> = BTreeSet::new();
    visited.insert(start.cluster_key());
    variables.extend(start.cluster_key());
    let mut frontier = vec![start.clone()];
    let mut budget_exceeded = false;
    let mut closed = false;
    for _ in 0..max_depth {
        let children = expand(&frontier)?;
        let mut next = Vec::new();
        'merge: for family in children {
            for child in family {
                let key = child.cluster_key();
                if visited.contains(&key) {
                    continue;
                }
                if visited.len() >= max_seeds {
                    budget_exceeded = true;
                    break 'merge;
                }
                variables.extend(key.iter().cloned());
                visited.insert(key);
                next.push(child);
            }
        }
        if budget_exceeded {
            break;
        }
        if next.is_empty() {
            closed = true;
            break;
        }
        frontier = next;
    }
    let solver = GVectorSolver::new(start)?;
    let variables = variables.into_iter().map(|t| solver.g_vector(&t).map(|g| (t, g))).collect::<Result<Vec<_>>>()?;
    Ok(Exploration { variables, seeds: visited.len(), budget_exceeded, closed })
}

/// Sequential exploration; see [`explore_with`].
pub fn explore(start: &Seed, max_depth: usize, max_seeds: usize) -> Result<Exploration> {
    explore_with(start, max_depth, max_seeds, |frontier| {
        frontier.iter().map(|s| (0..s.quiver().n_mut()).map(|r| s.mutate(r)).collect()).collect()
    })
}

/// Shortest mutation sequence from `start` to a seed carrying `target` as a
/// reduced mutable label, searched breadth first within the budgets.
pub fn find_mutation_path(
    start: &Seed,
    target: &Tableau,
    max_depth: usize,
    max_seeds: usize,
) -> Result<Option<Vec<usize>>> {
    let target = target.reduce();
    let hit = |s: &Seed| s.cluster_key().contains(&target);
    if hit(start) {
        return Ok(Some(Vec::new()));
    }
    let mut visited: BTreeSet<Vec<Tableau>> = BTreeSet::new();
    visited.insert(start.cluster_key());
    let mut frontier: Vec<(Seed, Vec<usize>)> = vec![(start.clone(), Vec::new())];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for (seed, path) in &frontier {
            for r in 0..seed.quiver().n_mut() {
                let child = seed.mutate(r)?;
                if !visited.insert(child.cluster_key()) {
                    continue;
                }
                let mut p = path.clone();
                p.push(r);
                if hit(&child) {
                    return Ok(Some(p));
                }
                if visited.len() >= max_seeds {
                    return Err(Error::BudgetExceeded(max_seeds));
                }
                next.push((child, p));
            }
        }
        frontier = next;
    }
    Ok(None)
}
