//! Multi-threaded drivers whose results do not depend on the thread count.
//!
//! Sampling runs in batches of consecutive sample indices; every sample uses
//! its own random stream, so a batch can be evaluated in any order. A batch
//! that contains a zero ends the scan, and the report always names the first
//! sample attaining the minimum, exactly as the sequential versions in the
//! core crate do.

use grascat_core::braid::{braid_property_check, BraidReport, VectorTuple};
use grascat_core::cluster::{explore_with, Exploration, Seed};
use grascat_core::einv::{
    sample_e, sample_e_pair, summarize, EValueReport, FieldChoice, Sample, SampleStream, Sampling,
};
use grascat_core::gvec::GVector;
use grascat_core::linalg::{Fp, Rational};
use grascat_core::qpa::Algebra;
use grascat_core::Result;
use rayon::prelude::*;

fn scan<F>(s: Sampling, per_sample: F) -> Result<EValueReport>
where
    F: Fn(u64) -> Result<usize> + Sync,
{
    let batch = rayon::current_num_threads().max(1);
    let mut values = Vec::with_capacity(s.samples);
    let mut start = 0;
    while start < s.samples {
        let end = (start + batch).min(s.samples);
        let chunk = (start..end).into_par_iter().map(|i| per_sample(i as u64)).collect::<Result<Vec<_>>>()?;
        match chunk.iter().position(|&v| v == 0) {
            Some(z) => {
                values.extend_from_slice(&chunk[..=z]);
                break;
            }
            None => values.extend(chunk),
        }
        start = end;
    }
    let mut report = summarize(&values, s.field)?;
    report.samples = s.samples;
    Ok(report)
}

/// Parallel `𝔢(g)`; equal to [`grascat_core::einv::generic_e`].
pub fn generic_e(algebra: &Algebra, g: &GVector, s: Sampling) -> Result<EValueReport> {
    match s.field {
        FieldChoice::Rational => scan(s, |i| sample_e::<Rational>(algebra, g, s.seed, i)),
        FieldChoice::Prime => scan(s, |i| sample_e::<Fp>(algebra, g, s.seed, i)),
    }
}

/// Parallel `𝔢(g, h)`; equal to [`grascat_core::einv::generic_e_pair`].
pub fn generic_e_pair(algebra: &Algebra, g: &GVector, h: &GVector, s: Sampling) -> Result<EValueReport> {
    let (a, b) = if g <= h { (g, h) } else { (h, g) };
    match s.field {
        FieldChoice::Rational => scan(s, |i| sample_e_pair::<Rational>(algebra, a, b, s.seed, i)),
        FieldChoice::Prime => scan(s, |i| sample_e_pair::<Fp>(algebra, a, b, s.seed, i)),
    }
}

/// Parallel exploration; equal to [`grascat_core::cluster::explore`].
pub fn explore(start: &Seed, max_depth: usize, max_seeds: usize) -> Result<Exploration> {
    explore_with(start, max_depth, max_seeds, |frontier| {
        frontier.par_iter().map(|s| (0..s.quiver().n_mut()).map(|r| s.mutate(r)).collect::<Result<Vec<_>>>()).collect()
    })
}

/// Braid checks on `trials` random tuples; tuple `t` is drawn from stream `t`
/// of `seed`. Non-generic draws are reported as `None`.
pub fn braid_trials<F>(k: usize, n: usize, trials: usize, seed: u64) -> Result<Vec<Option<BraidReport>>>
where
    F: Sample + Send + Sync,
{
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut stream = SampleStream::new(seed, t as u64);
            let tuple = VectorTuple::<F>::random(k, n, &mut stream)?;
            if !tuple.is_consecutively_generic() {
                return Ok(None);
            }
            braid_property_check(&tuple).map(Some)
        })
        .collect()
}
