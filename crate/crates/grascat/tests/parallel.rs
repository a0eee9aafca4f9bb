use grascat::fixtures::{named_algebra, named_seed};
use grascat::parallel;
use grascat_core::braid::{braid_property_check, VectorTuple};
use grascat_core::cluster::explore;
use grascat_core::einv::{self, FieldChoice, SampleStream, Sampling};
use grascat_core::gvec::GVector;
use grascat_core::linalg::{Fp, Rational};
use proptest::prelude::*;

fn sparse_g(m: usize, n_mut: usize) -> impl Strategy<Value = GVector> {
    proptest::collection::vec((0..n_mut, -2i64..=2), 1..=4).prop_map(move |entries| {
        let mut c = vec![0; m];
        for (j, v) in entries {
            c[j] = v;
        }
        GVector::new(c, n_mut).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sampling_matches_the_sequential_driver(
        g in sparse_g(19, 10),
        h in sparse_g(19, 10),
        seed in 0u64..100,
        prime in any::<bool>(),
    ) {
        let a = named_algebra("gr3_9").unwrap();
        let field = if prime { FieldChoice::Prime } else { FieldChoice::Rational };
        let s = Sampling { samples: 6, field, seed };
        prop_assert_eq!(parallel::generic_e(&a, &g, s).unwrap(), einv::generic_e(&a, &g, s).unwrap());
        prop_assert_eq!(
            parallel::generic_e_pair(&a, &g, &h, s).unwrap(),
            einv::generic_e_pair(&a, &g, &h, s).unwrap()
        );
    }
}

#[test]
fn exploration_matches_the_sequential_driver() {
    for (name, depth) in [("gr3_6", 10), ("gr3_7", 4), ("gr3_9", 2), ("gr5_9", 1)] {
        let seed = named_seed(name).unwrap();
        assert_eq!(
            parallel::explore(&seed, depth, 100_000).unwrap(),
            explore(&seed, depth, 100_000).unwrap(),
            "{name}"
        );
    }
    // Frozen vertices of the Hernandez–Leclerc seed carry no arrows, so its
    // exchanges cannot be resolved by tableaux.
    let hl = named_seed("hl4_3").unwrap();
    assert_eq!(parallel::explore(&hl, 2, 1000), explore(&hl, 2, 1000));
    assert!(explore(&hl, 2, 1000).is_err());
    let seed = named_seed("gr3_9").unwrap();
    let bounded = parallel::explore(&seed, 4, 30).unwrap();
    assert!(bounded.budget_exceeded);
    assert_eq!(bounded, explore(&seed, 4, 30).unwrap());
}

#[test]
fn braid_trials_match_one_tuple_at_a_time() {
    let reports = parallel::braid_trials::<Rational>(3, 9, 12, 5).unwrap();
    for (t, r) in reports.iter().enumerate() {
        let tuple = VectorTuple::<Rational>::random(3, 9, &mut SampleStream::new(5, t as u64)).unwrap();
        let expected = tuple.is_consecutively_generic().then(|| braid_property_check(&tuple).unwrap());
        assert_eq!(r, &expected, "trial {t}");
    }
    assert_eq!(parallel::braid_trials::<Fp>(4, 8, 12, 6).unwrap(), parallel::braid_trials::<Fp>(4, 8, 12, 6).unwrap());
}

#[test]
fn thread_count_does_not_change_results() {
    let a = named_algebra("gr3_9").unwrap();
    let g = GVector::new(vec![0, -1, -1, 0, 1, -1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], 10).unwrap();
    let s = Sampling { samples: 9, field: FieldChoice::Prime, seed: 3 };
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| parallel::generic_e(&a, &g, s).unwrap())
    };
    assert_eq!(run(1), run(4));
    assert_eq!(run(1), einv::generic_e(&a, &g, s).unwrap());
}
