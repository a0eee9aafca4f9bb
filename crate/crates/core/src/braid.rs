//! The braid group action on consecutively generic tuples of vectors.
//!
//! A tuple `(v₁, …, v_n)` in `k`-space is extended to all integer indices by
//! `v_{j+n} = (−1)^{k−1} v_j`, matching the twisted cyclic shift
//! `ρ(v₁, …, v_n) = (v₂, …, v_n, (−1)^{k−1} v₁)`.

use alloc::format;
use alloc::vec::Vec;

use crate::einv::{Sample, SampleStream};
use crate::linalg::{determinant, gcd, Field};
use crate::{Error, Result};

/// `n` vectors of length `k` over `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorTuple<F> {
    k: usize,
    vectors: Vec<Vec<F>>,
}

impl<F: Field> VectorTuple<F> {
    /// Build from vectors, all of length `k`.
    pub fn new(k: usize, vectors: Vec<Vec<F>>) -> Result<Self> {
        if k == 0 || vectors.len() < k || vectors.iter().any(|v| v.len() != k) {
            return Err(Error::DimensionMismatch(format!("need at least {k} vectors of length {k}")));
        }
        Ok(VectorTuple { k, vectors })
    }

    /// A tuple with independently drawn coordinates.
    pub fn random(k: usize, n: usize, stream: &mut SampleStream) -> Result<Self>
    where
        F: Sample,
    {
        let vectors = (0..n).map(|_| (0..k).map(|_| F::draw(stream)).collect()).collect();
        VectorTuple::new(k, vectors)
    }

    /// Vector length.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vectors.
    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    /// The vectors `v₁, …, v_n`.
    pub fn vectors(&self) -> &[Vec<F>] {
        &self.vectors
    }

    /// `d = gcd(k, n)`.
    pub fn d(&self) -> usize {
        gcd(self.k as i64, self.n() as i64) as usize
    }

    /// `v_j` for any integer `j` (1-based), using the twisted extension.
    pub fn extended(&self, j: i64) -> Vec<F> {
        let n = self.n() as i64;
        let q = (j - 1).div_euclid(n);
        let v = &self.vectors[(j - 1).rem_euclid(n) as usize];
        if self.k.is_multiple_of(2) && q % 2 != 0 {
            v.iter().map(Field::neg).collect()
        } else {
            v.clone()
        }
    }

    fn det_of(&self, indices: impl Iterator<Item = i64>) -> F {
        let rows: Vec<Vec<F>> = indices.map(|j| self.extended(j)).collect();
        determinant(&rows)
    }

    /// `det(v_{j+1}, …, v_{j+k})`.
    pub fn window_det(&self, j: i64) -> F {
        self.det_of((1..=self.k as i64).map(|t| j + t))
    }

    /// Whether every cyclic window of `k` consecutive vectors is a basis.
    pub fn is_consecutively_generic(&self) -> bool {
        (0..self.n() as i64).all(|j| !self.window_det(j).is_zero())
    }

    /// `ρ`.
    pub fn twisted_shift(&self) -> Self {
        let vectors = (2..=self.n() as i64 + 1).map(|j| self.extended(j)).collect();
        VectorTuple { k: self.k, vectors }
    }

    /// `ρ^e`.
    pub fn twisted_shift_pow(&self, e: usize) -> Self {
        (0..e).fold(self.clone(), |t, _| t.twisted_shift())
    }

    /// `σ_i`, applied to every window `[v_{1+jd}, …, v_{(j+1)d}]`: positions
    /// `i` and `i+1` of a window become `v_{i+1}` and
    /// `det(v_i, v_{i+2}, …, v_{i+k}) / det(v_{i+1}, …, v_{i+k}) · v_{i+1} − v_i`.
    pub fn sigma(&self, i: usize) -> Result<Self> {
        let d = self.d();
        if d < 2 || i == 0 || i >= d {
            return Err(Error::BadParameters(format!("σ_{i} needs 1 ≤ i ≤ d − 1 with d = {d}")));
        }
        if !self.is_consecutively_generic() {
            return Err(Error::NotGeneric);
        }
        let k = self.k as i64;
        let mut vectors = self.vectors.clone();
        for w in 0..self.n() / d {
            let p = (w * d + i) as i64;
            let den = self.window_det(p);
            if den.is_zero() {
                return Err(Error::DegenerateDenominator(i));
            }
            let num = self.det_of(core::iter::once(p).chain(p + 2..=p + k));
            let ratio = num.mul(&den.inv());
            let (a, b) = (self.extended(p), self.extended(p + 1));
            let w1 = b.iter().zip(&a).map(|(y, x)| ratio.mul(y).sub(x)).collect();
            vectors[(p - 1) as usize] = b;
            vectors[p as usize] = w1;
        }
        Ok(VectorTuple { k: self.k, vectors })
    }

    /// Apply `σ_{i₁}`, then `σ_{i₂}`, and so on.
    pub fn sigma_word(&self, word: &[usize]) -> Result<Self> {
        word.iter().try_fold(self.clone(), |t, &i| t.sigma(i))
    }

    /// All maximal minors, subsets in lexicographic order.
    pub fn plucker(&self) -> Vec<F> {
        let mut out = Vec::new();
        let mut subset: Vec<usize> = (0..self.k).collect();
        let n = self.n();
        loop {
            let rows: Vec<Vec<F>> = subset.iter().map(|&j| self.vectors[j].clone()).collect();
            out.push(determinant(&rows));
            let Some(pos) = (0..self.k).rev().find(|&t| subset[t] < n - self.k + t) else {
                return out;
            };
            subset[pos] += 1;
            for t in pos + 1..self.k {
                subset[t] = subset[t - 1] + 1;
            }
        }
    }
}

/// Whether two vectors are nonzero multiples of each other.
pub fn proportional<F: Field>(a: &[F], b: &[F]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(p) = a.iter().position(|x| !x.is_zero()) else {
        return b.iter().all(Field::is_zero);
    };
    if b[p].is_zero() {
        return false;
    }
    let ratio = b[p].mul(&a[p].inv());
    a.iter().zip(b).all(|(x, y)| ratio.mul(x) == *y)
}

/// Outcome of one relation on one tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Both sides agree.
    Holds,
    /// Both sides are defined and differ.
    Fails,
    /// Some side hit a vanishing denominator or lost genericity.
    Undefined,
}

/// A relation compared on raw tuples and on Plücker vectors up to scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationVerdict {
    /// The generators involved.
    pub generators: Vec<usize>,
    /// Exact equality of tuples.
    pub tuple: Verdict,
    /// Proportionality of Plücker vectors.
    pub plucker: Verdict,
}

/// Per-relation verdicts for one tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidReport {
    /// `σ_i ∘ ρ^d = ρ^d ∘ σ_i`, one entry per `i`.
    pub periodicity: Vec<RelationVerdict>,
    /// `σ_i σ_j = σ_j σ_i` for `|i − j| ≥ 2`.
    pub commutation: Vec<RelationVerdict>,
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`.
    pub braid: Vec<RelationVerdict>,
    /// Whether every `σ_i(t)` is again consecutively generic.
    pub genericity_preserved: bool,
}

fn compare<F: Field>(
    generators: Vec<usize>,
    lhs: Result<VectorTuple<F>>,
    rhs: Result<VectorTuple<F>>,
) -> RelationVerdict {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) => RelationVerdict {
            generators,
            tuple: if a == b { Verdict::Holds } else { Verdict::Fails },
            plucker: if proportional(&a.plucker(), &b.plucker()) { Verdict::Holds } else { Verdict::Fails },
        },
        _ => RelationVerdict { generators, tuple: Verdict::Undefined, plucker: Verdict::Undefined },
    }
}

/// Evaluate periodicity, far commutation and braid relations on `t`.
pub fn braid_property_check<F: Field>(t: &VectorTuple<F>) -> Result<BraidReport> {
    if !t.is_consecutively_generic() {
        return Err(Error::NotGeneric);
    }
    let d = t.d();
    let gens: Vec<usize> = (1..d).collect();
    let genericity_preserved = gens.iter().all(|&i| t.sigma(i).is_ok_and(|s| s.is_consecutively_generic()));
    let periodicity = gens
        .iter()
        .map(|&i| compare(alloc::vec![i], t.twisted_shift_pow(d).sigma(i), t.sigma(i).map(|s| s.twisted_shift_pow(d))))
        .collect();
    let mut commutation = Vec::new();
    for &i in &gens {
        for &j in gens.iter().filter(|&&j| j >= i + 2) {
            commutation.push(compare(alloc::vec![i, j], t.sigma_word(&[i, j]), t.sigma_word(&[j, i])));
        }
    }
    let braid = gens
        .iter()
        .filter(|&&i| i + 1 < d)
        .map(|&i| compare(alloc::vec![i, i + 1], t.sigma_word(&[i, i + 1, i]), t.sigma_word(&[i + 1, i, i + 1])))
        .collect();
    Ok(BraidReport { periodicity, commutation, braid, genericity_preserved })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    fn tuple(k: usize, rows: &[&[i64]]) -> VectorTuple<Rational> {
        VectorTuple::new(k, rows.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn gr24_tuple_is_generic() {
        let t = tuple(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]);
        assert!(t.is_consecutively_generic());
        let bad = tuple(2, &[&[1, 0], &[1, 0], &[1, 1], &[1, -1]]);
        assert!(!bad.is_consecutively_generic());
    }

    #[test]
    fn shift_period_sign() {
        let t = tuple(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]);
        let back = t.twisted_shift_pow(4);
        let negated: Vec<Vec<Rational>> = t.vectors().iter().map(|v| v.iter().map(Field::neg).collect()).collect();
        assert_eq!(back.vectors(), negated.as_slice());
    }

    #[test]
    fn sigma_with_vanishing_numerator() {
        // k = 2, n = 4, d = 2: σ₁ on the window (v₁, v₂) with det(v₁, v₃) = 0
        // gives (v₂, −v₁).
        let t = tuple(2, &[&[1, 0], &[0, 1], &[2, 0], &[1, 1]]);
        let s = t.sigma(1).unwrap();
        assert_eq!(s.vectors()[0], t.vectors()[1]);
        let minus_v1: Vec<Rational> = t.vectors()[0].iter().map(Field::neg).collect();
        assert_eq!(s.vectors()[1], minus_v1);
    }

    #[test]
    fn plucker_of_identity_block() {
        let t = tuple(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let p: Vec<Rational> = t.plucker();
        assert_eq!(p, [1, 1, -1].map(Rational::from_i64).to_vec());
    }
}
