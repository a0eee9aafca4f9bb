use grascat_core::cluster::{explore, grassmannian_initial_seed, Seed};
use grascat_core::cmcat::KSubset;
use grascat_core::gvec::{cone_presentation, GVector, GVectorSolver};
use grascat_core::tableaux::Tableau;
use proptest::prelude::*;

fn t(k: usize, n: u32, rows: &[&[u32]]) -> Tableau {
    Tableau::new(k, n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// The g-vector written out from `(label, coefficient)` pairs on the seed.
fn from_labels(seed: &Seed, terms: &[(&str, i64)]) -> Vec<i64> {
    let labels: Vec<String> = seed.subset_labels().unwrap().iter().map(KSubset::label).collect();
    let mut g = vec![0; labels.len()];
    for &(l, c) in terms {
        let j = labels.iter().position(|x| x == l).unwrap_or_else(|| panic!("{l} is not a seed label"));
        g[j] += c;
    }
    g
}

#[test]
fn three_six_decompositions() {
    let seed = grassmannian_initial_seed(3, 6).unwrap();
    let solver = GVectorSolver::new(&seed).unwrap();

    let a = t(3, 6, &[&[1, 2], &[3, 4], &[5, 6]]);
    let expected = from_labels(&seed, &[("126", 1), ("145", 1), ("234", 1), ("124", -1)]);
    assert_eq!(solver.g_vector(&a).unwrap().coords(), expected.as_slice());

    let b = t(3, 6, &[&[1, 3], &[2, 5], &[4, 6]]);
    let expected = from_labels(&seed, &[("124", 1), ("345", 1), ("156", 1), ("145", -1)]);
    assert_eq!(solver.g_vector(&b).unwrap().coords(), expected.as_slice());
}

#[test]
fn seed_labels_are_unit_vectors() {
    for (k, n) in [(2, 5), (3, 6), (3, 9), (4, 8), (5, 9)] {
        let seed = grassmannian_initial_seed(k, n).unwrap();
        let solver = GVectorSolver::new(&seed).unwrap();
        let m = seed.labels().len();
        for (j, label) in seed.labels().iter().enumerate() {
            let g = solver.g_vector(label).unwrap();
            if label.is_trivial() {
                assert!(g.coords().iter().all(|&c| c == 0));
            } else {
                assert_eq!(g, GVector::unit(m, seed.quiver().n_mut(), j), "({k}, {n}) label {label}");
            }
        }
    }
}

#[test]
fn closure_variables_reconstruct() {
    let seed = grassmannian_initial_seed(3, 6).unwrap();
    let solver = GVectorSolver::new(&seed).unwrap();
    let e = explore(&seed, 50, 10_000).unwrap();
    for (tab, g) in &e.variables {
        assert_eq!(&solver.reconstruct(g).unwrap(), tab);
        assert_eq!(&solver.g_vector(tab).unwrap(), g);
    }
}

fn tableau(k: usize, n: u32, max_width: usize) -> impl Strategy<Value = Tableau> {
    let column = proptest::sample::subsequence((1..=n).collect::<Vec<u32>>(), k);
    proptest::collection::vec(column, 0..=max_width).prop_map(move |cols| {
        let cols: Vec<KSubset> = cols.into_iter().map(|c| KSubset::new(n, c).unwrap()).collect();
        Tableau::from_columns(k, n, &cols).unwrap()
    })
}

fn shape() -> impl Strategy<Value = (usize, u32)> {
    prop_oneof![Just((2, 6)), Just((3, 6)), Just((3, 8)), Just((3, 9)), Just((4, 8))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reconstruct_inverts_g_vector(
        (k, n, a) in shape().prop_flat_map(|(k, n)| (Just(k), Just(n), tableau(k, n, 5)))
    ) {
        let seed = grassmannian_initial_seed(k, n as usize).unwrap();
        let solver = GVectorSolver::new(&seed).unwrap();
        let g = solver.g_vector(&a).unwrap();
        prop_assert_eq!(solver.reconstruct(&g).unwrap(), a.reduce());
    }

    #[test]
    fn mutable_part_is_additive(
        (k, n, a, b) in shape().prop_flat_map(|(k, n)| (Just(k), Just(n), tableau(k, n, 4), tableau(k, n, 4)))
    ) {
        let seed = grassmannian_initial_seed(k, n as usize).unwrap();
        let solver = GVectorSolver::new(&seed).unwrap();
        let sum = solver.g_vector(&a).unwrap().add(&solver.g_vector(&b).unwrap()).unwrap();
        let joint = solver.g_vector(&a.union(&b).unwrap()).unwrap();
        prop_assert_eq!(joint.mutable(), sum.mutable());
    }

    #[test]
    fn cone_sides_rebuild_the_tableau(
        (k, n, a) in shape().prop_flat_map(|(k, n)| (Just(k), Just(n), tableau(k, n, 5)))
    ) {
        let seed = grassmannian_initial_seed(k, n as usize).unwrap();
        let g = GVectorSolver::new(&seed).unwrap().g_vector(&a).unwrap();
        let cone = cone_presentation(&g, &seed).unwrap();
        let union = |side: &[KSubset]| Tableau::from_columns(k, n, side).unwrap();
        let rebuilt = union(cone.quot()).quotient(&union(cone.sub())).unwrap();
        prop_assert_eq!(rebuilt.reduce(), a.reduce());
        let total: i64 = g.coords().iter().map(|c| c.abs()).sum();
        prop_assert_eq!((cone.sub().len() + cone.quot().len()) as i64, total);
    }
}
