use grascat_core::cluster::grassmannian_initial_seed;
use grascat_core::cmcat::{
    cyclic_shift_profile, profile_balance_check, rim_height, tau_inverse_two_interval, tau_two_interval, KSubset,
    Profile,
};
use grascat_core::gvec::{cone_presentation, GVectorSolver};
use grascat_core::tableaux::Tableau;
use grascat_core::Error;

fn subsets(k: usize, n: u32) -> Vec<KSubset> {
    fn go(k: usize, n: u32, from: u32, cur: &mut Vec<u32>, out: &mut Vec<KSubset>) {
        if cur.len() == k {
            out.push(KSubset::new(n, cur.clone()).unwrap());
            return;
        }
        for v in from..=n {
            cur.push(v);
            go(k, n, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, n, 1, &mut Vec::new(), &mut out);
    out
}

/// Counts maximal runs of consecutive elements, treating `n` and `1` as
/// adjacent.
fn run_count(s: &KSubset) -> usize {
    let n = s.n();
    s.elements().iter().filter(|&&v| !s.contains(if v == 1 { n } else { v - 1 })).count()
}

#[test]
fn tau_is_a_bijection_on_two_interval_subsets() {
    for (k, n) in [(3, 6), (3, 9), (4, 8), (4, 9), (5, 9)] {
        let mut count = 0;
        for s in subsets(k, n) {
            if run_count(&s) != 2 {
                assert_eq!(tau_two_interval(&s), Err(Error::NotTwoIntervals));
                continue;
            }
            count += 1;
            let t = tau_two_interval(&s).unwrap();
            assert_eq!(run_count(&t), 2);
            assert_eq!(tau_inverse_two_interval(&t).unwrap(), s, "({k}, {n}) {s}");
            assert_eq!(tau_two_interval(&tau_inverse_two_interval(&s).unwrap()).unwrap(), s);
            // τ commutes with rotation.
            assert_eq!(tau_two_interval(&s.shift(1)).unwrap(), t.shift(1));
        }
        assert!(count > 0);
    }
}

#[test]
fn tau_inverse_extends_the_rim() {
    let s = |e: &[u32]| KSubset::new(8, e.to_vec()).unwrap();
    assert_eq!(tau_inverse_two_interval(&s(&[1, 2, 5, 8])).unwrap(), s(&[3, 6, 7, 8]));
}

#[test]
fn rims_recover_subsets() {
    for (k, n) in [(3, 6), (4, 8), (3, 9)] {
        for s in subsets(k, n) {
            let h = rim_height(&s);
            assert_eq!(h.descents(), s.elements());
            assert_eq!(h.values()[n as usize], n as i64 - 2 * k as i64);
        }
    }
}

#[test]
fn shifting_by_n_is_the_identity() {
    for s in subsets(3, 7) {
        assert_eq!(s.shift(7), s);
        assert_eq!(s.shift(3).shift(-3), s);
    }
}

fn labels(n: u32, ls: &[&str]) -> Vec<KSubset> {
    ls.iter().map(|l| KSubset::parse(n, l).unwrap()).collect()
}

/// The two rank-two modules of Gr(3, 6): tableau, profile top first.
fn rank_two_cases() -> Vec<(Tableau, Profile)> {
    let tab = |rows: [[u32; 2]; 3]| Tableau::new(3, 6, rows.iter().map(|r| r.to_vec()).collect()).unwrap();
    vec![
        (tab([[1, 2], [3, 4], [5, 6]]), Profile::new(3, 6, labels(6, &["246", "135"])).unwrap()),
        (tab([[1, 3], [2, 5], [4, 6]]), Profile::new(3, 6, labels(6, &["135", "246"])).unwrap()),
    ]
}

#[test]
fn rank_two_sequences_balance() {
    let seed = grassmannian_initial_seed(3, 6).unwrap();
    let solver = GVectorSolver::new(&seed).unwrap();
    let cases = rank_two_cases();
    let mut cones = Vec::new();
    for (tab, profile) in &cases {
        let cone = cone_presentation(&solver.g_vector(tab).unwrap(), &seed).unwrap();
        assert!(profile_balance_check(profile, &cone).unwrap(), "{profile}");
        cones.push(cone);
    }
    let sorted = |v: &[KSubset]| {
        let mut v = v.to_vec();
        v.sort();
        v
    };
    assert_eq!(sorted(cones[0].sub()), labels(6, &["124"]));
    assert_eq!(sorted(cones[0].quot()), sorted(&labels(6, &["126", "145", "234"])));
    assert_eq!(sorted(cones[1].sub()), labels(6, &["145"]));
    assert_eq!(sorted(cones[1].quot()), sorted(&labels(6, &["124", "345", "156"])));
    // The second sequence is the first rotated by three.
    let shifted: Vec<KSubset> = cones[0].quot().iter().map(|s| s.shift(3)).collect();
    assert_eq!(sorted(&shifted), sorted(cones[1].quot()));
    assert_eq!(cyclic_shift_profile(&cases[0].1, 3), cases[1].1);
}

#[test]
fn perturbed_rank_two_profiles_fail() {
    let seed = grassmannian_initial_seed(3, 6).unwrap();
    let solver = GVectorSolver::new(&seed).unwrap();
    for (tab, profile) in rank_two_cases() {
        let cone = cone_presentation(&solver.g_vector(&tab).unwrap(), &seed).unwrap();
        for pos in 0..profile.factors().len() {
            for other in subsets(3, 6) {
                if other == profile.factors()[pos] {
                    continue;
                }
                let mut factors = profile.factors().to_vec();
                factors[pos] = other;
                let p = Profile::new(3, 6, factors).unwrap();
                assert!(!profile_balance_check(&p, &cone).unwrap(), "{p}");
            }
        }
    }
}

#[test]
fn mismatched_profile_is_rejected() {
    let seed = grassmannian_initial_seed(3, 6).unwrap();
    let g = GVectorSolver::new(&seed).unwrap().g_vector(&rank_two_cases()[0].0).unwrap();
    let cone = cone_presentation(&g, &seed).unwrap();
    let p = Profile::new(3, 7, labels(7, &["246", "135"])).unwrap();
    assert!(matches!(profile_balance_check(&p, &cone), Err(Error::DimensionMismatch(_))));
}
