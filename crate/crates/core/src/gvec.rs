//! g-vectors of tableaux relative to a seed, and the two sides of the
//! associated cone.

use alloc::format;
use alloc::vec::Vec;

use crate::cluster::Seed;
use crate::cmcat::KSubset;
use crate::linalg::ExactSolver;
use crate::tableaux::Tableau;
use crate::{Error, Result};

/// Integer coordinates of a tableau in the basis of seed label contents.
/// Mutable coordinates come first, in the seed's vertex order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GVector {
    coords: Vec<i64>,
    n_mut: usize,
}

impl GVector {
    /// Wrap raw coordinates; the first `n_mut` are the mutable ones.
    pub fn new(coords: Vec<i64>, n_mut: usize) -> Result<Self> {
        if n_mut > coords.len() {
            return Err(Error::DimensionMismatch(format!("{n_mut} mutable of {} coordinates", coords.len())));
        }
        Ok(GVector { coords, n_mut })
    }

    /// The standard basis vector `e_j`.
    pub fn unit(m: usize, n_mut: usize, j: usize) -> Self {
        let mut coords = alloc::vec![0; m];
        coords[j] = 1;
        GVector { coords, n_mut }
    }

    /// All coordinates.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// The mutable coordinates.
    pub fn mutable(&self) -> &[i64] {
        &self.coords[..self.n_mut]
    }

    /// Number of mutable coordinates.
    pub fn n_mut(&self) -> usize {
        self.n_mut
    }

    /// Length of the vector.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    /// Whether the vector has no coordinates.
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `t · g`.
    pub fn scale(&self, t: i64) -> GVector {
        GVector { coords: self.coords.iter().map(|c| c * t).collect(), n_mut: self.n_mut }
    }

    /// Coordinate-wise sum.
    pub fn add(&self, other: &GVector) -> Result<GVector> {
        if self.len() != other.len() || self.n_mut != other.n_mut {
            return Err(Error::DimensionMismatch("g-vectors of different seeds".into()));
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(GVector { coords, n_mut: self.n_mut })
    }
}

/// Precomputed solver for g-vectors over a fixed seed.
#[derive(Clone, Debug)]
pub struct GVectorSolver {
    labels: Vec<Tableau>,
    n_mut: usize,
    solver: ExactSolver,
}

impl GVectorSolver {
    /// Prepare the solver; fails with `NonUniqueSolution` if the label
    /// contents are linearly dependent.
    pub fn new(seed: &Seed) -> Result<Self> {
        let labels = seed.labels().to_vec();
        let columns: Vec<Vec<i64>> = labels.iter().map(|t| t.content_grid().as_slice().to_vec()).collect();
        let solver = ExactSolver::new(&columns)?;
        Ok(GVectorSolver { labels, n_mut: seed.quiver().n_mut(), solver })
    }

    /// The unique integer `g` with `c(reduce(T)) = Σ_j g_j c(S_j)`.
    pub fn g_vector(&self, t: &Tableau) -> Result<GVector> {
        let first = &self.labels[0];
        if t.k() != first.k() || t.n() != first.n() {
            return Err(Error::DimensionMismatch(format!("tableau {t} does not match the seed's (k, n)")));
        }
        let coords = self.solver.solve(t.reduce().content_grid().as_slice())?;
        Ok(GVector { coords, n_mut: self.n_mut })
    }

    /// Rebuild `reduce(T)` from `g`: the union of the positive part, divided
    /// by the union of the negative part.
    pub fn reconstruct(&self, g: &GVector) -> Result<Tableau> {
        if g.len() != self.labels.len() {
            return Err(Error::DimensionMismatch(format!("{} coordinates for {} labels", g.len(), self.labels.len())));
        }
        let first = &self.labels[0];
        let mut pos = Tableau::empty(first.k(), first.n());
        let mut neg = pos.clone();
        for (label, &c) in self.labels.iter().zip(g.coords()) {
            let target = if c > 0 { &mut pos } else { &mut neg };
            for _ in 0..c.unsigned_abs() {
                *target = target.union(label)?;
            }
        }
        Ok(pos.quotient(&neg)?.reduce())
    }
}

/// g-vector of `t` relative to `seed`.
pub fn g_vector(t: &Tableau, seed: &Seed) -> Result<GVector> {
    GVectorSolver::new(seed)?.g_vector(t)
}

/// The two sides of the cone of `g`: seed vertices with negative coordinates
/// (the submodule side) and positive coordinates (the quotient side), each
/// repeated by multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConePresentation {
    sub_vertices: Vec<usize>,
    quot_vertices: Vec<usize>,
    sub: Vec<KSubset>,
    quot: Vec<KSubset>,
    n_mut: usize,
}

impl ConePresentation {
    /// Subsets on the negative side.
    pub fn sub(&self) -> &[KSubset] {
        &self.sub
    }

    /// Subsets on the positive side.
    pub fn quot(&self) -> &[KSubset] {
        &self.quot
    }

    /// Seed vertices on the negative side.
    pub fn sub_vertices(&self) -> &[usize] {
        &self.sub_vertices
    }

    /// Seed vertices on the positive side.
    pub fn quot_vertices(&self) -> &[usize] {
        &self.quot_vertices
    }

    /// The negative side restricted to mutable vertices.
    pub fn mutable_sub(&self) -> Vec<KSubset> {
        self.filter_mutable(&self.sub_vertices, &self.sub)
    }

    /// The positive side restricted to mutable vertices.
    pub fn mutable_quot(&self) -> Vec<KSubset> {
        self.filter_mutable(&self.quot_vertices, &self.quot)
    }

    fn filter_mutable(&self, vs: &[usize], ss: &[KSubset]) -> Vec<KSubset> {
        vs.iter().zip(ss).filter(|(&v, _)| v < self.n_mut).map(|(_, s)| s.clone()).collect()
    }
}

/// Split `g` into its cone presentation. The seed must have one-column labels.
pub fn cone_presentation(g: &GVector, seed: &Seed) -> Result<ConePresentation> {
    let labels = seed
        .subset_labels()
        .ok_or_else(|| Error::BadParameters("cone presentations need one-column seed labels".into()))?;
    if labels.len() != g.len() {
        return Err(Error::DimensionMismatch(format!("{} coordinates for {} labels", g.len(), labels.len())));
    }
    let mut cp = ConePresentation {
        sub_vertices: Vec::new(),
        quot_vertices: Vec::new(),
        sub: Vec::new(),
        quot: Vec::new(),
        n_mut: g.n_mut(),
    };
    for (j, &c) in g.coords().iter().enumerate() {
        let (vs, ss) = if c < 0 { (&mut cp.sub_vertices, &mut cp.sub) } else { (&mut cp.quot_vertices, &mut cp.quot) };
        for _ in 0..c.unsigned_abs() {
            vs.push(j);
            ss.push(labels[j].clone());
        }
    }
    Ok(cp)
}
