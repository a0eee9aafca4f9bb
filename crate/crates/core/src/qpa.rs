//! Finite-dimensional Jacobian algebras of quivers with potential.
//!
//! Paths compose left to right: the path `a b` first follows `a`, then `b`.
//! A path from `j` to `i` is a morphism `P_i → P_j` between indecomposable
//! projectives, so `Hom(P_i, P_j)` is spanned by the paths from `j` to `i` and
//! `ψ ∘ φ` is the concatenation `ψ φ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::cluster::Quiver;
use crate::linalg::{rref, Rational};
use crate::{Error, Result};

/// A named arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    /// Label.
    pub name: String,
    /// Source vertex.
    pub from: usize,
    /// Target vertex.
    pub to: usize,
}

/// One signed cycle of a potential, as a sequence of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PotentialTerm {
    /// Coefficient.
    pub coeff: i64,
    /// The arrows of the cycle in order.
    pub cycle: Vec<usize>,
}

/// A quiver with named vertices and arrows and a potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverWithPotential {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    potential: Vec<PotentialTerm>,
}

impl QuiverWithPotential {
    /// Validate and build. Every potential term must be a closed path.
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>, potential: Vec<PotentialTerm>) -> Result<Self> {
        if let Some(a) = arrows.iter().find(|a| a.from >= vertices.len() || a.to >= vertices.len()) {
            return Err(Error::BadParameters(format!("arrow {} leaves the vertex set", a.name)));
        }
        for term in &potential {
            let c = &term.cycle;
            if c.is_empty() || c.iter().any(|&a| a >= arrows.len()) {
                return Err(Error::BadParameters(format!("bad potential term {c:?}")));
            }
            let closed = (0..c.len()).all(|t| arrows[c[t]].to == arrows[c[(t + 1) % c.len()]].from);
            if !closed {
                return Err(Error::BadParameters(format!("potential term {c:?} is not a cycle")));
            }
        }
        Ok(QuiverWithPotential { vertices, arrows, potential })
    }

    /// Vertex names.
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Arrows.
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Potential terms.
    pub fn potential(&self) -> &[PotentialTerm] {
        &self.potential
    }

    /// Index of a vertex by name.
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// The underlying quiver, all vertices mutable.
    pub fn quiver(&self) -> Result<Quiver> {
        let arrows: Vec<_> = self.arrows.iter().map(|a| (a.from, a.to)).collect();
        Quiver::new(self.vertices.len(), self.vertices.len(), &arrows)
    }
}

/// Quiver with potential on the opposite of the mutable part of `q`, with
/// potential the sum of all oriented triangles, signed by their orientation in
/// the plane of the vertex coordinates (clockwise `+1`, counter-clockwise `−1`).
pub fn opposite_triangle_potential(q: &Quiver, names: Vec<String>) -> Result<QuiverWithPotential> {
    let part = q.mutable_part();
    let coords = part
        .coords()
        .ok_or_else(|| Error::BadParameters("triangle potentials need vertex coordinates".into()))?
        .to_vec();
    if names.len() != part.m() {
        return Err(Error::DimensionMismatch(format!("{} names for {} vertices", names.len(), part.m())));
    }
    let mut arrows = Vec::new();
    for (i, j) in part.arrows() {
        if part.arrow_count(i, j) > 1 {
            return Err(Error::BadParameters("multiple arrows are not supported by triangle potentials".into()));
        }
        arrows.push(Arrow { name: format!("{}>{}", names[j], names[i]), from: j, to: i });
    }
    let mut potential = Vec::new();
    for (x, a) in arrows.iter().enumerate() {
        for (y, b) in arrows.iter().enumerate() {
            if b.from != a.to {
                continue;
            }
            for (z, c) in arrows.iter().enumerate() {
                // Record each triangle once, from its smallest arrow index.
                if c.from != b.to || c.to != a.from || x > y || x > z {
                    continue;
                }
                let (p, r, s) = (coords[a.from], coords[b.from], coords[c.from]);
                let area = (r.0 - p.0) * (s.1 - p.1) - (r.1 - p.1) * (s.0 - p.0);
                if area == 0 {
                    return Err(Error::BadParameters("degenerate triangle in potential".into()));
                }
                potential.push(PotentialTerm { coeff: if area < 0 { 1 } else { -1 }, cycle: vec![x, y, z] });
            }
        }
    }
    QuiverWithPotential::new(names, arrows, potential)
}

/// A homogeneous linear combination of paths, each path a list of arrow
/// indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    /// The arrow this relation is the cyclic derivative for.
    pub arrow: usize,
    /// Signed paths.
    pub terms: Vec<(i64, Vec<usize>)>,
}

/// Cyclic derivatives of the potential, one per arrow. For every occurrence of
/// the arrow in a cycle, the relation gains the rest of the cycle read from the
/// arrow after it.
pub fn potential_relations(qp: &QuiverWithPotential) -> Vec<Relation> {
    (0..qp.arrows.len())
        .map(|a| {
            let mut acc: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
            for term in &qp.potential {
                let c = &term.cycle;
                for t in (0..c.len()).filter(|&t| c[t] == a) {
                    let path: Vec<usize> = (1..c.len()).map(|u| c[(t + u) % c.len()]).collect();
                    *acc.entry(path).or_insert(0) += term.coeff;
                }
            }
            let terms = acc.into_iter().filter(|&(_, c)| c != 0).map(|(p, c)| (c, p)).collect();
            Relation { arrow: a, terms }
        })
        .collect()
}

/// A basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    /// Start vertex of the path.
    pub start: usize,
    /// End vertex of the path.
    pub end: usize,
    /// Path length.
    pub degree: usize,
    /// A representing path (empty for idempotents and in table mode).
    pub path: Vec<usize>,
}

/// A linear combination of basis elements.
pub type Combination = Vec<(usize, Rational)>;

/// One entry of a multiplication table: `(x, y)` and the integer combination
/// of basis elements equal to `x · y`.
pub type ProductEntry = ((usize, usize), Vec<(usize, i64)>);

/// A finite-dimensional algebra given by a basis of paths and its structure
/// constants.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    n_vertices: usize,
    basis: Vec<BasisElement>,
    by_pair: BTreeMap<(usize, usize), Vec<usize>>,
    products: BTreeMap<(usize, usize), Combination>,
}

fn add_into(acc: &mut BTreeMap<usize, Rational>, idx: usize, c: &Rational) {
    let e = acc.entry(idx).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&idx);
    }
}

fn to_combination(acc: BTreeMap<usize, Rational>) -> Combination {
    acc.into_iter().collect()
}

/// Builds the graded quotient of the path algebra by the relations, one
/// degree at a time.
struct GradedBuilder<'a> {
    arrows: &'a [Arrow],
    basis: Vec<BasisElement>,
    by_degree: Vec<Vec<usize>>,
    reduce: BTreeMap<(usize, usize), Combination>,
}

impl GradedBuilder<'_> {
    fn extend(&self, x: &Combination, arrow: usize) -> Combination {
        let mut acc = BTreeMap::new();
        for (idx, c) in x {
            if let Some(img) = self.reduce.get(&(*idx, arrow)) {
                for (j, d) in img {
                    add_into(&mut acc, *j, &(c * d));
                }
            }
        }
        to_combination(acc)
    }

    fn next_degree(&mut self, d: usize, relations: &[Relation]) -> Result<bool> {
        // Candidate columns: (basis element of degree d − 1, arrow).
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        for &b in &self.by_degree[d - 1] {
            for (a, arr) in self.arrows.iter().enumerate() {
                if arr.from == self.basis[b].end {
                    candidates.push((b, a));
                }
            }
        }
        let col_of: BTreeMap<(usize, usize), usize> = candidates.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let endpoints = |&(b, a): &(usize, usize)| (self.basis[b].start, self.arrows[a].to);

        let mut blocks: BTreeMap<(usize, usize), Vec<BTreeMap<usize, Rational>>> = BTreeMap::new();
        for rel in relations {
            let len = rel.terms[0].1.len();
            if len == 0 || len > d {
                continue;
            }
            let first = self.arrows[rel.terms[0].1[0]].from;
            for &b in &self.by_degree[d - len] {
                if self.basis[b].end != first {
                    continue;
                }
                let mut row = BTreeMap::new();
                for (coeff, path) in &rel.terms {
                    let mut x: Combination = vec![(b, Rational::one())];
                    for &a in &path[..len - 1] {
                        x = self.extend(&x, a);
                    }
                    let last = path[len - 1];
                    for (idx, c) in x {
                        let col = col_of[&(idx, last)];
                        add_into(&mut row, col, &(c * Rational::from_integer((*coeff).into())));
                    }
                }
                if let Some((&col, _)) = row.iter().next() {
                    blocks.entry(endpoints(&candidates[col])).or_default().push(row);
                }
            }
        }

        let mut grouped: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, c) in candidates.iter().enumerate() {
            grouped.entry(endpoints(c)).or_default().push(i);
        }
        let mut new_elements = Vec::new();
        for (key, cols) in grouped {
            // Columns are listed last-first so that elimination pivots on later
            // candidates and the earliest paths survive as basis elements.
            let order: Vec<usize> = cols.iter().rev().copied().collect();
            let pos: BTreeMap<usize, usize> = order.iter().enumerate().map(|(p, &c)| (c, p)).collect();
            let mut rows: Vec<Vec<Rational>> = blocks
                .remove(&key)
                .unwrap_or_default()
                .into_iter()
                .map(|r| {
                    let mut dense = vec![Rational::zero(); order.len()];
                    for (c, v) in r {
                        dense[pos[&c]] = v;
                    }
                    dense
                })
                .collect();
            let pivots = rref(&mut rows);
            let free: Vec<usize> = (0..order.len()).filter(|p| !pivots.contains(p)).collect();
            let mut free_index = BTreeMap::new();
            for &p in free.iter().rev() {
                let (b, a) = candidates[order[p]];
                let mut path = self.basis[b].path.clone();
                path.push(a);
                let idx = self.basis.len() + new_elements.len();
                new_elements.push(BasisElement { start: key.0, end: key.1, degree: d, path });
                free_index.insert(p, idx);
                self.reduce.insert((b, a), vec![(idx, Rational::one())]);
            }
            for (row, &p) in rows.iter().zip(&pivots) {
                let image: Combination =
                    free.iter().filter(|&&q| !row[q].is_zero()).map(|&q| (free_index[&q], -row[q].clone())).collect();
                self.reduce.insert(candidates[order[p]], image);
            }
        }
        let nonempty = !new_elements.is_empty();
        let start = self.basis.len();
        self.basis.extend(new_elements);
        self.by_degree.push((start..self.basis.len()).collect());
        Ok(nonempty)
    }
}

/// Jacobian algebra of `qp`, computed degree by degree until a degree
/// vanishes. Fails with `NotFiniteDimensional` if degree `cap` is still
/// nonzero, and with `BadParameters` if some relation is not homogeneous.
pub fn build_algebra(qp: &QuiverWithPotential, cap: usize) -> Result<Algebra> {
    let relations: Vec<Relation> = potential_relations(qp).into_iter().filter(|r| !r.terms.is_empty()).collect();
    for r in &relations {
        if r.terms.iter().any(|(_, p)| p.len() != r.terms[0].1.len()) {
            return Err(Error::BadParameters(format!(
                "relation for arrow {} is not homogeneous",
                qp.arrows[r.arrow].name
            )));
        }
    }
    let n = qp.vertices.len();
    let mut builder = GradedBuilder {
        arrows: &qp.arrows,
        basis: (0..n).map(|v| BasisElement { start: v, end: v, degree: 0, path: Vec::new() }).collect(),
        by_degree: vec![(0..n).collect()],
        reduce: BTreeMap::new(),
    };
    let mut d = 1;
    while builder.next_degree(d, &relations)? {
        if d >= cap {
            return Err(Error::NotFiniteDimensional(d));
        }
        d += 1;
    }
    let mut products = BTreeMap::new();
    for x in 0..builder.basis.len() {
        for y in 0..builder.basis.len() {
            if builder.basis[x].end != builder.basis[y].start {
                continue;
            }
            let mut acc: Combination = vec![(x, Rational::one())];
            for &a in &builder.basis[y].path {
                acc = builder.extend(&acc, a);
            }
            if !acc.is_empty() {
                products.insert((x, y), acc);
            }
        }
    }
    Algebra::assemble(n, builder.basis, products)
}

impl Algebra {
    fn assemble(
        n_vertices: usize,
        basis: Vec<BasisElement>,
        products: BTreeMap<(usize, usize), Combination>,
    ) -> Result<Self> {
        let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, b) in basis.iter().enumerate() {
            if b.start >= n_vertices || b.end >= n_vertices {
                return Err(Error::BadParameters(format!("basis element {i} leaves the vertex set")));
            }
            by_pair.entry((b.start, b.end)).or_default().push(i);
        }
        Ok(Algebra { n_vertices, basis, by_pair, products })
    }

    /// Table-mode constructor. `basis[i] = (start, end, degree)`; idempotents
    /// must be present; products of basis elements not listed are zero, and
    /// products with idempotents are filled in automatically.
    pub fn from_table(n_vertices: usize, basis: &[(usize, usize, usize)], products: &[ProductEntry]) -> Result<Self> {
        let basis: Vec<BasisElement> =
            basis.iter().map(|&(start, end, degree)| BasisElement { start, end, degree, path: Vec::new() }).collect();
        let idempotent = |v: usize| basis.iter().position(|b| b.start == v && b.end == v && b.degree == 0);
        let mut table = BTreeMap::new();
        for (x, b) in basis.iter().enumerate() {
            let (Some(es), Some(ee)) = (idempotent(b.start), idempotent(b.end)) else {
                return Err(Error::BadParameters(format!("missing idempotent for basis element {x}")));
            };
            table.insert((es, x), vec![(x, Rational::one())]);
            table.insert((x, ee), vec![(x, Rational::one())]);
        }
        for ((x, y), comb) in products {
            if *x >= basis.len() || *y >= basis.len() || basis[*x].end != basis[*y].start {
                return Err(Error::BadParameters(format!("product ({x}, {y}) is not composable")));
            }
            let mut acc = BTreeMap::new();
            for &(z, c) in comb {
                if z >= basis.len() || basis[z].start != basis[*x].start || basis[z].end != basis[*y].end {
                    return Err(Error::BadParameters(format!("product ({x}, {y}) has a wrongly placed term {z}")));
                }
                add_into(&mut acc, z, &Rational::from_integer(c.into()));
            }
            if !acc.is_empty() {
                table.insert((*x, *y), to_combination(acc));
            }
        }
        Algebra::assemble(n_vertices, basis, table)
    }

    /// Number of vertices.
    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Total dimension.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// All basis elements.
    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Basis elements of the paths from `start` to `end`.
    pub fn paths(&self, start: usize, end: usize) -> &[usize] {
        self.by_pair.get(&(start, end)).map_or(&[], Vec::as_slice)
    }

    /// Basis of `Hom(P_i, P_j)`, the paths from `j` to `i`.
    pub fn hom_basis(&self, i: usize, j: usize) -> &[usize] {
        self.paths(j, i)
    }

    /// `dim Hom(P_i, P_j)`.
    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.hom_basis(i, j).len()
    }

    /// Product of basis elements `x · y` (follow `x`, then `y`).
    pub fn multiply(&self, x: usize, y: usize) -> &[(usize, Rational)] {
        self.products.get(&(x, y)).map_or(&[], Vec::as_slice)
    }

    /// `ψ ∘ φ` for basis morphisms `φ: P_i → P_j` and `ψ: P_j → P_l`.
    pub fn compose(&self, psi: usize, phi: usize) -> &[(usize, Rational)] {
        self.multiply(psi, phi)
    }

    /// Product of two combinations.
    pub fn multiply_combinations(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> Combination {
        let mut acc = BTreeMap::new();
        for (a, c) in x {
            for (b, d) in y {
                for (z, e) in self.multiply(*a, *b) {
                    add_into(&mut acc, *z, &(c * d * e));
                }
            }
        }
        to_combination(acc)
    }

    /// Whether the structure constants are associative on every composable
    /// basis triple and idempotents act as identities.
    pub fn check_laws(&self) -> bool {
        let one = Rational::one();
        for (v, b) in self.basis.iter().enumerate() {
            let unit = |w: usize| self.paths(w, w).iter().copied().find(|&e| self.basis[e].degree == 0);
            let (Some(es), Some(ee)) = (unit(b.start), unit(b.end)) else {
                return false;
            };
            let expect: Combination = vec![(v, one.clone())];
            if self.multiply(es, v) != expect.as_slice() || self.multiply(v, ee) != expect.as_slice() {
                return false;
            }
        }
        let n = self.basis.len();
        for x in 0..n {
            for y in 0..n {
                if self.basis[x].end != self.basis[y].start {
                    continue;
                }
                let xy = self.multiply(x, y).to_vec();
                for z in 0..n {
                    if self.basis[y].end != self.basis[z].start {
                        continue;
                    }
                    let left = self.multiply_combinations(&xy, &[(z, one.clone())]);
                    let yz = self.multiply(y, z).to_vec();
                    let right = self.multiply_combinations(&[(x, one.clone())], &yz);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Structure constants converted into `F`, in a dense form indexed by
    /// basis pairs.
    pub fn product_in<F: crate::linalg::Field>(&self, x: usize, y: usize) -> Vec<(usize, F)> {
        self.multiply(x, y).iter().map(|(z, c)| (*z, F::from_rational(c))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn a2_path_algebra() {
        let qp = QuiverWithPotential::new(names(2), vec![Arrow { name: "a".into(), from: 0, to: 1 }], vec![]).unwrap();
        let a = build_algebra(&qp, 10).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.hom_dim(1, 0), 1);
        assert_eq!(a.hom_dim(0, 1), 0);
        assert!(a.check_laws());
    }

    #[test]
    fn oriented_triangle_cuts_to_length_one() {
        let arrows = vec![
            Arrow { name: "a".into(), from: 0, to: 1 },
            Arrow { name: "b".into(), from: 1, to: 2 },
            Arrow { name: "c".into(), from: 2, to: 0 },
        ];
        let w = vec![PotentialTerm { coeff: 1, cycle: vec![0, 1, 2] }];
        let qp = QuiverWithPotential::new(names(3), arrows, w).unwrap();
        let rel = potential_relations(&qp);
        assert_eq!(rel[0].terms, vec![(1, vec![1, 2])]);
        assert_eq!(rel[1].terms, vec![(1, vec![2, 0])]);
        let a = build_algebra(&qp, 10).unwrap();
        assert_eq!(a.dim(), 6);
        assert!(a.check_laws());
    }

    #[test]
    fn oriented_cycle_without_relations_is_infinite() {
        let arrows = vec![Arrow { name: "a".into(), from: 0, to: 1 }, Arrow { name: "b".into(), from: 1, to: 0 }];
        let qp = QuiverWithPotential::new(names(2), arrows, vec![]).unwrap();
        assert_eq!(build_algebra(&qp, 6), Err(Error::NotFiniteDimensional(6)));
    }

    #[test]
    fn table_mode_identity_laws() {
        let a = Algebra::from_table(2, &[(0, 0, 0), (1, 1, 0), (0, 1, 1)], &[]).unwrap();
        assert!(a.check_laws());
        assert_eq!(a.hom_dim(1, 0), 1);
    }
}
