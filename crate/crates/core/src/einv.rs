//! E-invariants of two-term complexes of projectives, and their generic
//! values over g-vector strata.
//!
//! For complexes `f: F₋₁ → F₀` and `g: G₋₁ → G₀`,
//! `E(f, g) = dim Hom(F₋₁, G₀) − rank((u, v) ↦ g∘u + v∘f)` with
//! `u ∈ Hom(F₋₁, G₋₁)` and `v ∈ Hom(F₀, G₀)`. Positive generic values found
//! by sampling are upper bounds on the true minimum; a sampled zero is exact.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gvec::GVector;
use crate::linalg::{rank, Field, Fp, Rational};
use crate::qpa::Algebra;
use crate::{Error, Result};

/// A morphism between direct sums of indecomposable projectives.
///
/// `blocks[t][s]` holds coordinates in the basis `hom_basis(neg[s], pos[t])`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTermComplex<F> {
    neg: Vec<usize>,
    pos: Vec<usize>,
    blocks: Vec<Vec<Vec<F>>>,
}

impl<F: Field> TwoTermComplex<F> {
    /// Validate block shapes against `algebra`.
    pub fn new(algebra: &Algebra, neg: Vec<usize>, pos: Vec<usize>, blocks: Vec<Vec<Vec<F>>>) -> Result<Self> {
        let nv = algebra.n_vertices();
        if neg.iter().chain(&pos).any(|&v| v >= nv) {
            return Err(Error::AlgebraMismatch);
        }
        if blocks.len() != pos.len() || blocks.iter().any(|row| row.len() != neg.len()) {
            return Err(Error::DimensionMismatch(format!("block grid must be {}×{}", pos.len(), neg.len())));
        }
        for (t, row) in blocks.iter().enumerate() {
            for (s, b) in row.iter().enumerate() {
                if b.len() != algebra.hom_dim(neg[s], pos[t]) {
                    return Err(Error::DimensionMismatch(format!(
                        "block ({t}, {s}) has {} coordinates, Hom has dimension {}",
                        b.len(),
                        algebra.hom_dim(neg[s], pos[t])
                    )));
                }
            }
        }
        Ok(TwoTermComplex { neg, pos, blocks })
    }

    /// A complex whose Hom spaces are at most one-dimensional, given by a
    /// scalar matrix indexed `[target][source]`. Nonzero entries on zero Hom
    /// spaces are rejected.
    pub fn from_scalar_matrix(
        algebra: &Algebra,
        neg: Vec<usize>,
        pos: Vec<usize>,
        matrix: &[Vec<i64>],
    ) -> Result<Self> {
        if matrix.len() != pos.len() || matrix.iter().any(|r| r.len() != neg.len()) {
            return Err(Error::DimensionMismatch(format!("matrix must be {}×{}", pos.len(), neg.len())));
        }
        let mut blocks = Vec::with_capacity(pos.len());
        for (t, row) in matrix.iter().enumerate() {
            let mut out = Vec::with_capacity(neg.len());
            for (s, &x) in row.iter().enumerate() {
                match (algebra.hom_dim(neg[s], pos[t]), x) {
                    (0, 0) => out.push(vec![]),
                    (1, x) => out.push(vec![F::from_i64(x)]),
                    (d, _) => {
                        return Err(Error::DimensionMismatch(format!(
                            "entry ({t}, {s}) over a Hom space of dimension {d}"
                        )));
                    }
                }
            }
            blocks.push(out);
        }
        TwoTermComplex::new(algebra, neg, pos, blocks)
    }

    /// The zero map with the given terms.
    pub fn zero(algebra: &Algebra, neg: Vec<usize>, pos: Vec<usize>) -> Result<Self> {
        let blocks =
            pos.iter().map(|&t| neg.iter().map(|&s| vec![F::zero(); algebra.hom_dim(s, t)]).collect()).collect();
        TwoTermComplex::new(algebra, neg, pos, blocks)
    }

    /// Vertices of the degree −1 term.
    pub fn neg(&self) -> &[usize] {
        &self.neg
    }

    /// Vertices of the degree 0 term.
    pub fn pos(&self) -> &[usize] {
        &self.pos
    }

    /// Coordinates of the block from `neg[s]` to `pos[t]`.
    pub fn block(&self, t: usize, s: usize) -> &[F] {
        &self.blocks[t][s]
    }
}

/// Coordinates of `Hom(⊕ P_src, ⊕ P_dst)` flattened block by block.
struct HomLayout {
    offsets: Vec<Vec<usize>>,
    total: usize,
}

impl HomLayout {
    fn new(algebra: &Algebra, src: &[usize], dst: &[usize]) -> Self {
        let mut offsets = vec![vec![0; src.len()]; dst.len()];
        let mut total = 0;
        for (t, &y) in dst.iter().enumerate() {
            for (s, &x) in src.iter().enumerate() {
                offsets[t][s] = total;
                total += algebra.hom_dim(x, y);
            }
        }
        HomLayout { offsets, total }
    }
}

fn position(algebra: &Algebra, x: usize, y: usize, elem: usize) -> usize {
    algebra.hom_basis(x, y).iter().position(|&e| e == elem).expect("composite lies in the expected Hom space")
}

/// `E(f, g)`.
pub fn e_pair<F: Field>(algebra: &Algebra, f: &TwoTermComplex<F>, g: &TwoTermComplex<F>) -> Result<usize> {
    let check = |c: &TwoTermComplex<F>| {
        c.neg.iter().chain(&c.pos).all(|&v| v < algebra.n_vertices())
            && c.blocks
                .iter()
                .enumerate()
                .all(|(t, row)| row.iter().enumerate().all(|(s, b)| b.len() == algebra.hom_dim(c.neg[s], c.pos[t])))
    };
    if !check(f) || !check(g) {
        return Err(Error::AlgebraMismatch);
    }
    let target = HomLayout::new(algebra, &f.neg, &g.pos);
    if target.total == 0 {
        return Ok(0);
    }
    let mut columns: Vec<Vec<F>> = Vec::new();

    // u ranges over Hom(F₋₁, G₋₁); its image is g∘u.
    for (s, &x) in f.neg.iter().enumerate() {
        for (r, &y) in g.neg.iter().enumerate() {
            for &beta in algebra.hom_basis(x, y) {
                let mut col = vec![F::zero(); target.total];
                for (t, &z) in g.pos.iter().enumerate() {
                    for (gamma, coeff) in algebra.hom_basis(y, z).iter().zip(&g.blocks[t][r]) {
                        if coeff.is_zero() {
                            continue;
                        }
                        for (e, c) in algebra.product_in::<F>(*gamma, beta) {
                            let i = target.offsets[t][s] + position(algebra, x, z, e);
                            col[i] = col[i].add(&coeff.mul(&c));
                        }
                    }
                }
                columns.push(col);
            }
        }
    }
    // v ranges over Hom(F₀, G₀); its image is v∘f.
    for (s2, &y) in f.pos.iter().enumerate() {
        for (t, &z) in g.pos.iter().enumerate() {
            for &beta in algebra.hom_basis(y, z) {
                let mut col = vec![F::zero(); target.total];
                for (s, &x) in f.neg.iter().enumerate() {
                    for (phi, coeff) in algebra.hom_basis(x, y).iter().zip(&f.blocks[s2][s]) {
                        if coeff.is_zero() {
                            continue;
                        }
                        for (e, c) in algebra.product_in::<F>(beta, *phi) {
                            let i = target.offsets[t][s] + position(algebra, x, z, e);
                            col[i] = col[i].add(&coeff.mul(&c));
                        }
                    }
                }
                columns.push(col);
            }
        }
    }
    Ok(target.total - rank(&columns))
}

/// `E(f, g) + E(g, f)`.
pub fn ee_symmetrized<F: Field>(algebra: &Algebra, f: &TwoTermComplex<F>, g: &TwoTermComplex<F>) -> Result<usize> {
    Ok(e_pair(algebra, f, g)? + e_pair(algebra, g, f)?)
}

/// Which exact field random maps are drawn over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldChoice {
    /// Rationals, coefficients uniform in `[−10, 10]`.
    Rational,
    /// F_p with p = 2³¹ − 1, coefficients uniform over the field.
    Prime,
}

/// Sampling parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sampling {
    /// Number of samples.
    pub samples: usize,
    /// Field.
    pub field: FieldChoice,
    /// Master seed; sample `i` uses ChaCha8 stream `i` of this seed.
    pub seed: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { samples: 20, field: FieldChoice::Rational, seed: 0 }
    }
}

/// The outcome of a generic-value computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EValueReport {
    /// Smallest value seen.
    pub value: usize,
    /// True when the value is zero (then it is exact).
    pub certified: bool,
    /// Number of samples drawn.
    pub samples: usize,
    /// Field used.
    pub field: FieldChoice,
    /// Index of the first sample attaining `value`.
    pub witness: usize,
}

/// Stream of random field elements for one sample.
pub struct SampleStream {
    rng: ChaCha8Rng,
}

impl SampleStream {
    /// The stream for sample `index` of master seed `seed`.
    pub fn new(seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        SampleStream { rng }
    }

    /// A coefficient in `[−10, 10]`.
    pub fn small(&mut self) -> i64 {
        self.rng.random_range(-10..=10)
    }

    /// A uniform element of F_p.
    pub fn prime(&mut self) -> Fp {
        Fp::new(self.rng.random_range(0..crate::linalg::MERSENNE_31 as i64))
    }
}

/// Draws field elements of the requested kind.
pub trait Sample: Field {
    /// One random coefficient.
    fn draw(stream: &mut SampleStream) -> Self;
}

impl Sample for Rational {
    fn draw(stream: &mut SampleStream) -> Self {
        Rational::from_i64(stream.small())
    }
}

impl Sample for Fp {
    fn draw(stream: &mut SampleStream) -> Self {
        stream.prime()
    }
}

/// Split the mutable part of `g` into the degree −1 and degree 0 vertices,
/// repeated by multiplicity. Frozen coordinates are dropped.
pub fn terms_of(g: &GVector) -> (Vec<usize>, Vec<usize>) {
    let mut neg = Vec::new();
    let mut pos = Vec::new();
    for (j, &c) in g.mutable().iter().enumerate() {
        let dst = if c < 0 { &mut neg } else { &mut pos };
        dst.extend(core::iter::repeat_n(j, c.unsigned_abs() as usize));
    }
    (neg, pos)
}

/// A random map in the stratum of `g`.
pub fn random_complex<F: Sample>(
    algebra: &Algebra,
    g: &GVector,
    stream: &mut SampleStream,
) -> Result<TwoTermComplex<F>> {
    if g.n_mut() != algebra.n_vertices() {
        return Err(Error::AlgebraMismatch);
    }
    let (neg, pos) = terms_of(g);
    let blocks = pos
        .iter()
        .map(|&t| neg.iter().map(|&s| (0..algebra.hom_dim(s, t)).map(|_| F::draw(stream)).collect()).collect())
        .collect();
    TwoTermComplex::new(algebra, neg, pos, blocks)
}

/// `E(f, f)` for the random map of sample `index`.
pub fn sample_e<F: Sample>(algebra: &Algebra, g: &GVector, seed: u64, index: u64) -> Result<usize> {
    let mut stream = SampleStream::new(seed, index);
    let f = random_complex::<F>(algebra, g, &mut stream)?;
    e_pair(algebra, &f, &f)
}

/// `𝔼(f, h)` for the independent random maps of sample `index`.
pub fn sample_e_pair<F: Sample>(algebra: &Algebra, g: &GVector, h: &GVector, seed: u64, index: u64) -> Result<usize> {
    let mut stream = SampleStream::new(seed, index);
    let f = random_complex::<F>(algebra, g, &mut stream)?;
    let k = random_complex::<F>(algebra, h, &mut stream)?;
    ee_symmetrized(algebra, &f, &k)
}

/// Fold per-sample values (in sample order) into a report.
pub fn summarize(values: &[usize], field: FieldChoice) -> Result<EValueReport> {
    let (witness, &value) = values
        .iter()
        .enumerate()
        .min_by_key(|&(i, v)| (*v, i))
        .ok_or_else(|| Error::BadParameters("at least one sample is required".into()))?;
    Ok(EValueReport { value, certified: value == 0, samples: values.len(), field, witness })
}

/// Evaluate `per_sample` on every index; a zero stops the scan early since no
/// smaller value exists.
fn scan(samples: usize, field: FieldChoice, mut per_sample: impl FnMut(u64) -> Result<usize>) -> Result<EValueReport> {
    let mut values = Vec::new();
    for i in 0..samples {
        let v = per_sample(i as u64)?;
        values.push(v);
        if v == 0 {
            break;
        }
    }
    let mut report = summarize(&values, field)?;
    report.samples = samples;
    Ok(report)
}

/// Generic value `𝔢(g)`, sampled.
pub fn generic_e(algebra: &Algebra, g: &GVector, s: Sampling) -> Result<EValueReport> {
    match s.field {
        FieldChoice::Rational => scan(s.samples, s.field, |i| sample_e::<Rational>(algebra, g, s.seed, i)),
        FieldChoice::Prime => scan(s.samples, s.field, |i| sample_e::<Fp>(algebra, g, s.seed, i)),
    }
}

/// Generic value `𝔢(g, h)`, sampled. Symmetric in `g` and `h`.
pub fn generic_e_pair(algebra: &Algebra, g: &GVector, h: &GVector, s: Sampling) -> Result<EValueReport> {
    let (a, b) = if g <= h { (g, h) } else { (h, g) };
    match s.field {
        FieldChoice::Rational => scan(s.samples, s.field, |i| sample_e_pair::<Rational>(algebra, a, b, s.seed, i)),
        FieldChoice::Prime => scan(s.samples, s.field, |i| sample_e_pair::<Fp>(algebra, a, b, s.seed, i)),
    }
}

/// Conjectural reality test: `𝔢(g) = 0`.
pub fn is_real_g(algebra: &Algebra, g: &GVector, s: Sampling) -> Result<(bool, EValueReport)> {
    let r = generic_e(algebra, g, s)?;
    Ok((r.value == 0, r))
}

/// Conjectural compatibility test: `𝔢(g, h) = 0`.
pub fn are_compatible(algebra: &Algebra, g: &GVector, h: &GVector, s: Sampling) -> Result<(bool, EValueReport)> {
    let r = generic_e_pair(algebra, g, h, s)?;
    Ok((r.value == 0, r))
}

/// Exchange-pair test: `𝔢(g, h) = 1`.
pub fn is_exchange_pair(algebra: &Algebra, g: &GVector, h: &GVector, s: Sampling) -> Result<(bool, EValueReport)> {
    let r = generic_e_pair(algebra, g, h, s)?;
    Ok((r.value == 1, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpa::{build_algebra, Arrow, QuiverWithPotential};
    use alloc::string::ToString;

    fn a2() -> Algebra {
        let qp = QuiverWithPotential::new(
            vec!["0".to_string(), "1".to_string()],
            vec![Arrow { name: "a".into(), from: 0, to: 1 }],
            vec![],
        )
        .unwrap();
        build_algebra(&qp, 4).unwrap()
    }

    #[test]
    fn projective_presentation_is_rigid() {
        let a = a2();
        let f = TwoTermComplex::<Rational>::zero(&a, vec![], vec![0]).unwrap();
        assert_eq!(e_pair(&a, &f, &f), Ok(0));
    }

    #[test]
    fn a2_exchange_pair() {
        // Over the path algebra of 0 → 1, P_0 and the shifted P_1 are the two
        // ends of an exchange: E(P_1[1], P_0) = dim Hom(P_1, P_0) = 1.
        let a = a2();
        let p0 = GVector::new(vec![1, 0], 2).unwrap();
        let shifted = GVector::new(vec![0, -1], 2).unwrap();
        let r = generic_e_pair(&a, &p0, &shifted, Sampling::default()).unwrap();
        assert_eq!(r.value, 1);
        let r = generic_e(&a, &GVector::new(vec![-1, 1], 2).unwrap(), Sampling::default()).unwrap();
        assert!(r.certified);
    }
}
