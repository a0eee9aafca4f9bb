//! Rank-one Cohen–Macaulay modules and their combinatorics.
//!
//! A rank-one module is labelled by a k-subset `I` of the cyclically ordered
//! set `[1, n]`. Its rim is the lattice path that steps down at the elements
//! of `I` and up elsewhere. Profiles (ordered lists of k-subsets) record the
//! rank-one filtration factors of higher-rank modules.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::gvec::ConePresentation;
use crate::{Error, Result};

/// A k-element subset of `[1, n]`, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KSubset {
    n: u32,
    elems: Vec<u32>,
}

impl KSubset {
    /// Build from arbitrary order; rejects repeats and values outside `[1, n]`.
    pub fn new(n: u32, mut elems: Vec<u32>) -> Result<Self> {
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadParameters(format!("repeated element in {elems:?}")));
        }
        if let Some(&v) = elems.iter().find(|&&v| v < 1 || v > n) {
            return Err(Error::OutOfRange(format!("element {v} outside [1, {n}]")));
        }
        Ok(KSubset { n, elems })
    }

    pub(crate) fn from_sorted_unchecked(n: u32, elems: Vec<u32>) -> Self {
        KSubset { n, elems }
    }

    /// The interval `[start, start + len − 1]` if it fits inside `[1, n]`.
    pub fn interval(n: u32, start: u32, len: u32) -> Option<Self> {
        (start >= 1 && start + len - 1 <= n).then(|| KSubset { n, elems: (start..start + len).collect() })
    }

    /// The cyclic interval of `len` elements starting at `start` (1-based,
    /// taken modulo `n`).
    pub fn cyclic_interval(n: u32, start: i64, len: u32) -> Self {
        let elems = (0..len as i64).map(|t| wrap(start + t, n)).collect();
        KSubset::new(n, elems).expect("a cyclic interval shorter than n has distinct elements")
    }

    /// Parse a label such as `"125"` (one digit per element, `n ≤ 9`) or
    /// `"1,2,10"`.
    pub fn parse(n: u32, label: &str) -> Result<Self> {
        let bad = || Error::BadParameters(format!("cannot parse subset label {label:?}"));
        let elems = if label.contains(',') {
            label.split(',').map(|s| s.trim().parse::<u32>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?
        } else {
            label.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<Vec<_>>>()?
        };
        KSubset::new(n, elems)
    }

    /// Ambient size.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of elements.
    pub fn k(&self) -> usize {
        self.elems.len()
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    /// Whether `v` is an element.
    pub fn contains(&self, v: u32) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    /// Add `a` to every element, modulo `n`.
    pub fn shift(&self, a: i64) -> KSubset {
        let elems = self.elems.iter().map(|&v| wrap(v as i64 + a, self.n)).collect();
        KSubset::new(self.n, elems).expect("shifting preserves distinctness")
    }

    /// Maximal cyclic runs of consecutive elements as `(start, length)` pairs.
    ///
    /// A run through `n` and `1` starts at its first element in cyclic order,
    /// so `{8, 9, 1}` in `[1, 9]` is the run `(8, 3)`. Runs are listed by
    /// increasing start.
    pub fn cyclic_runs(&self) -> Vec<(u32, u32)> {
        if self.elems.len() == self.n as usize {
            return alloc::vec![(1, self.n)];
        }
        let mut runs = Vec::new();
        for &v in &self.elems {
            let prev = wrap(v as i64 - 1, self.n);
            if self.contains(prev) {
                continue;
            }
            let mut len = 1;
            while self.contains(wrap(v as i64 + len as i64, self.n)) {
                len += 1;
            }
            runs.push((v, len));
        }
        runs
    }

    /// Display label: digits run together when `n ≤ 9`, comma separated
    /// otherwise.
    pub fn label(&self) -> String {
        let sep = if self.n <= 9 { "" } else { "," };
        self.elems.iter().map(|v| format!("{v}")).collect::<Vec<_>>().join(sep)
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Reduce an integer to the representative in `[1, n]`.
pub(crate) fn wrap(v: i64, n: u32) -> u32 {
    ((v - 1).rem_euclid(n as i64) + 1) as u32
}

/// The height function of a rim: `h(0) = 0`, then a step down at every element
/// of the subset and a step up elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RimHeight {
    h: Vec<i64>,
}

impl RimHeight {
    /// Heights `h(0), …, h(n)`.
    pub fn values(&self) -> &[i64] {
        &self.h
    }

    /// Positions `i` where `h(i) = h(i − 1) − 1`; these recover the subset.
    pub fn descents(&self) -> Vec<u32> {
        (1..self.h.len()).filter(|&i| self.h[i] < self.h[i - 1]).map(|i| i as u32).collect()
    }
}

/// The rim height function of `I`.
pub fn rim_height(subset: &KSubset) -> RimHeight {
    let mut h = Vec::with_capacity(subset.n as usize + 1);
    h.push(0);
    let mut cur = 0;
    for i in 1..=subset.n {
        cur += if subset.contains(i) { -1 } else { 1 };
        h.push(cur);
    }
    RimHeight { h }
}

fn two_runs_with_gaps(subset: &KSubset) -> Result<[(u32, u32, u32); 2]> {
    let runs = subset.cyclic_runs();
    if runs.len() != 2 {
        return Err(Error::NotTwoIntervals);
    }
    let n = subset.n as i64;
    let gap = |(s, l): (u32, u32), (next, _): (u32, u32)| ((next as i64 - (s as i64 + l as i64)).rem_euclid(n)) as u32;
    Ok([(runs[0].0, runs[0].1, gap(runs[0], runs[1])), (runs[1].0, runs[1].1, gap(runs[1], runs[0]))])
}

/// The Auslander–Reiten translate of a rank-one module whose subset has two
/// cyclic intervals.
///
/// Each run of the rim's down-steps slides forward across the run of
/// up-steps that follows it.
pub fn tau_two_interval(subset: &KSubset) -> Result<KSubset> {
    let runs = two_runs_with_gaps(subset)?;
    let mut elems = Vec::with_capacity(subset.k());
    for (start, len, gap) in runs {
        elems.extend((0..len).map(|t| wrap(start as i64 + gap as i64 + t as i64, subset.n)));
    }
    KSubset::new(subset.n, elems)
}

/// Inverse of [`tau_two_interval`]: each down-run slides backward across the
/// up-run preceding it.
pub fn tau_inverse_two_interval(subset: &KSubset) -> Result<KSubset> {
    let runs = two_runs_with_gaps(subset)?;
    let preceding = [runs[1].2, runs[0].2];
    let mut elems = Vec::with_capacity(subset.k());
    for ((start, len, _), back) in runs.into_iter().zip(preceding) {
        elems.extend((0..len).map(|t| wrap(start as i64 - back as i64 + t as i64, subset.n)));
    }
    KSubset::new(subset.n, elems)
}

/// An ordered list of filtration factors, top first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile {
    k: usize,
    n: u32,
    factors: Vec<KSubset>,
}

impl Profile {
    /// Build a profile; all factors must be k-subsets of `[1, n]`.
    pub fn new(k: usize, n: u32, factors: Vec<KSubset>) -> Result<Self> {
        if let Some(f) = factors.iter().find(|f| f.k() != k || f.n() != n) {
            return Err(Error::DimensionMismatch(format!("factor {f} is not a {k}-subset of [{n}]")));
        }
        Ok(Profile { k, n, factors })
    }

    /// Subset size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Ambient size.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Factors, top to bottom.
    pub fn factors(&self) -> &[KSubset] {
        &self.factors
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(KSubset::label).collect();
        f.write_str(&parts.join("|"))
    }
}

/// Add `a` to every entry of every factor, modulo `n`.
pub fn cyclic_shift_profile(profile: &Profile, a: i64) -> Profile {
    Profile { k: profile.k, n: profile.n, factors: profile.factors.iter().map(|f| f.shift(a)).collect() }
}

/// Lattice-diagram balance test for a profile against a cone presentation.
///
/// Adds the rim heights of the profile factors and of the submodule summands,
/// subtracts those of the quotient summands, and accepts when the result is
/// constant on `0..=n`.
pub fn profile_balance_check(profile: &Profile, cone: &ConePresentation) -> Result<bool> {
    let all = profile.factors.iter().chain(cone.sub()).chain(cone.quot());
    if let Some(f) = all.clone().find(|f| f.k() != profile.k || f.n() != profile.n) {
        return Err(Error::DimensionMismatch(format!("subset {f} does not match ({}, {})", profile.k, profile.n)));
    }
    let mut total = alloc::vec![0i64; profile.n as usize + 1];
    let mut accumulate = |s: &KSubset, sign: i64| {
        for (t, h) in total.iter_mut().zip(rim_height(s).values()) {
            *t += sign * h;
        }
    };
    profile.factors.iter().chain(cone.sub()).for_each(|s| accumulate(s, 1));
    cone.quot().iter().for_each(|s| accumulate(s, -1));
    Ok(total.iter().all(|&v| v == total[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(n: u32, e: &[u32]) -> KSubset {
        KSubset::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn rim_of_1458() {
        let h = rim_height(&s(8, &[1, 4, 5, 8]));
        assert_eq!(h.values(), &[0, -1, 0, 1, 0, -1, 0, 1, 0]);
        assert_eq!(h.descents(), vec![1, 4, 5, 8]);
    }

    #[test]
    fn runs_wrap_around() {
        assert_eq!(s(9, &[1, 8, 9]).cyclic_runs(), vec![(8, 3)]);
        assert_eq!(s(8, &[1, 2, 5, 8]).cyclic_runs(), vec![(5, 1), (8, 3)]);
        assert_eq!(s(8, &[3, 6, 7, 8]).cyclic_runs(), vec![(3, 1), (6, 3)]);
    }

    #[test]
    fn tau_of_3678() {
        assert_eq!(tau_two_interval(&s(8, &[3, 6, 7, 8])).unwrap(), s(8, &[1, 2, 5, 8]));
        assert_eq!(tau_inverse_two_interval(&s(8, &[1, 2, 5, 8])).unwrap(), s(8, &[3, 6, 7, 8]));
        assert_eq!(tau_two_interval(&s(8, &[1, 2, 3, 4])), Err(Error::NotTwoIntervals));
        assert_eq!(tau_two_interval(&s(8, &[1, 3, 5, 7])), Err(Error::NotTwoIntervals));
    }

    #[test]
    fn parse_labels() {
        assert_eq!(KSubset::parse(9, "125").unwrap(), s(9, &[1, 2, 5]));
        assert_eq!(KSubset::parse(12, "1,2,10").unwrap(), s(12, &[1, 2, 10]));
        assert!(KSubset::parse(9, "1a5").is_err());
        assert_eq!(s(12, &[1, 2, 10]).label(), "1,2,10");
    }

    #[test]
    fn shift_profile() {
        let p = Profile::new(3, 9, vec![s(9, &[3, 6, 9]), s(9, &[2, 5, 8]), s(9, &[1, 4, 7])]).unwrap();
        let q = cyclic_shift_profile(&p, 1);
        assert_eq!(q.factors(), &[s(9, &[1, 4, 7]), s(9, &[3, 6, 9]), s(9, &[2, 5, 8])]);
        assert_eq!(cyclic_shift_profile(&p, 9), p);
        assert_eq!(cyclic_shift_profile(&cyclic_shift_profile(&p, 4), 5), p);
        assert_eq!(format!("{p}"), "369|258|147");
    }
}
