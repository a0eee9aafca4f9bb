use grascat_core::braid::{braid_property_check, VectorTuple, Verdict};
use grascat_core::einv::SampleStream;
use grascat_core::linalg::{determinant, Field, Fp, Rational};

fn random_generic<F: grascat_core::einv::Sample>(k: usize, n: usize, seed: u64, count: usize) -> Vec<VectorTuple<F>> {
    (0..)
        .map(|t| VectorTuple::<F>::random(k, n, &mut SampleStream::new(seed, t)).unwrap())
        .filter(VectorTuple::is_consecutively_generic)
        .take(count)
        .collect()
}

#[test]
fn periodicity_and_genericity_on_random_tuples() {
    for (k, n) in [(3, 9), (4, 8)] {
        for t in random_generic::<Rational>(k, n, 11, 100) {
            let report = braid_property_check(&t).unwrap();
            assert!(report.genericity_preserved);
            for r in &report.periodicity {
                assert_eq!(r.tuple, Verdict::Holds, "({k}, {n}) σ_{:?}", r.generators);
                assert_eq!(r.plucker, Verdict::Holds);
            }
        }
    }
}

#[test]
fn far_generators_commute_at_four_eight() {
    for t in random_generic::<Rational>(4, 8, 12, 100) {
        let report = braid_property_check(&t).unwrap();
        assert_eq!(report.commutation.len(), 1);
        for r in &report.commutation {
            assert_eq!(r.generators, vec![1, 3]);
            assert_eq!(r.tuple, Verdict::Holds);
        }
    }
}

#[test]
fn braid_relations_are_reported_at_both_levels() {
    for (k, n) in [(3, 9), (4, 8)] {
        for t in random_generic::<Fp>(k, n, 13, 20) {
            let report = braid_property_check(&t).unwrap();
            assert_eq!(report.braid.len(), t.d() - 2);
            for r in &report.braid {
                assert_ne!(r.tuple, Verdict::Undefined);
                assert_ne!(r.plucker, Verdict::Undefined);
                if r.tuple == Verdict::Holds {
                    assert_eq!(r.plucker, Verdict::Holds);
                }
            }
        }
    }
}

#[test]
fn full_rotation_is_a_sign() {
    for (k, n) in [(3, 9), (4, 8), (2, 6)] {
        let t = &random_generic::<Rational>(k, n, 14, 1)[0];
        let sign = if (k - 1) % 2 == 0 { Rational::one() } else { Rational::one().neg() };
        let expected: Vec<Vec<Rational>> =
            t.vectors().iter().map(|v| v.iter().map(|x| sign.mul(x)).collect()).collect();
        assert_eq!(t.twisted_shift_pow(n).vectors(), expected.as_slice());
    }
}

#[test]
fn new_vector_lies_in_the_following_span() {
    for (k, n) in [(3, 9), (4, 8)] {
        for t in random_generic::<Rational>(k, n, 15, 10) {
            let d = t.d();
            for i in 1..d {
                let s = t.sigma(i).unwrap();
                for w in 0..n / d {
                    let p = (w * d + i) as i64;
                    assert_eq!(s.vectors()[(p - 1) as usize], t.extended(p + 1));
                    let mut rows = vec![s.vectors()[p as usize].clone()];
                    rows.extend((p + 2..=p + k as i64).map(|j| t.extended(j)));
                    assert!(determinant(&rows).is_zero());
                }
            }
        }
    }
}

#[test]
fn degenerate_tuple_is_rejected() {
    let zero = vec![Rational::zero(); 3];
    let mut vectors: Vec<Vec<Rational>> = random_generic::<Rational>(3, 9, 16, 1)[0].vectors().to_vec();
    vectors[4] = zero;
    let t = VectorTuple::new(3, vectors).unwrap();
    assert!(!t.is_consecutively_generic());
    assert!(braid_property_check(&t).is_err());
}
