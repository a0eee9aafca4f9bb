#![allow(clippy::needless_range_loop)]

use grascat_core::cluster::grassmannian_initial_seed;
use grascat_core::hl::{hl_seed, seed_qp};
use grascat_core::qpa::{build_algebra, potential_relations, Arrow, PotentialTerm, QuiverWithPotential};
use grascat_core::Error;
use proptest::prelude::*;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn arrows(list: &[(usize, usize)]) -> Vec<Arrow> {
    list.iter().enumerate().map(|(t, &(from, to))| Arrow { name: format!("a{t}"), from, to }).collect()
}

/// Number of paths from `i` to `j` in an acyclic quiver, by powers of the
/// adjacency matrix.
fn path_counts(m: usize, list: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![vec![0usize; m]; m];
    for &(i, j) in list {
        adj[i][j] += 1;
    }
    let mut total = vec![vec![0usize; m]; m];
    let mut power: Vec<Vec<usize>> = (0..m).map(|i| (0..m).map(|j| usize::from(i == j)).collect()).collect();
    for _ in 0..=m {
        for i in 0..m {
            for j in 0..m {
                total[i][j] += power[i][j];
            }
        }
        power = (0..m).map(|i| (0..m).map(|j| (0..m).map(|l| power[i][l] * adj[l][j]).sum()).collect()).collect();
    }
    total
}

fn acyclic() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=6).prop_flat_map(|m| {
        let pairs = proptest::collection::vec((0..m, 0..m), 0..=2 * m);
        (Just(m), pairs.prop_map(|p| p.into_iter().filter(|(i, j)| i < j).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn path_algebras_count_paths((m, list) in acyclic()) {
        let qp = QuiverWithPotential::new(names(m), arrows(&list), vec![]).unwrap();
        let a = build_algebra(&qp, 16).unwrap();
        let counts = path_counts(m, &list);
        for i in 0..m {
            for j in 0..m {
                prop_assert_eq!(a.paths(i, j).len(), counts[i][j]);
                prop_assert_eq!(a.hom_dim(j, i), counts[i][j]);
            }
        }
        prop_assert_eq!(a.dim(), counts.iter().flatten().sum::<usize>());
        prop_assert!(a.check_laws());
    }
}

#[test]
fn semisimple_algebra() {
    let qp = QuiverWithPotential::new(names(4), vec![], vec![]).unwrap();
    let a = build_algebra(&qp, 4).unwrap();
    assert_eq!(a.dim(), 4);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(a.hom_dim(i, j), usize::from(i == j));
        }
    }
    assert!(a.check_laws());
}

#[test]
fn cyclic_derivatives_of_a_square() {
    // Potential a b c d on the oriented 4-cycle: ∂_a W = b c d, and so on.
    let qp = QuiverWithPotential::new(
        names(4),
        arrows(&[(0, 1), (1, 2), (2, 3), (3, 0)]),
        vec![PotentialTerm { coeff: 1, cycle: vec![0, 1, 2, 3] }],
    )
    .unwrap();
    let rel = potential_relations(&qp);
    assert_eq!(rel.len(), 4);
    assert_eq!(rel[0].terms, vec![(1, vec![1, 2, 3])]);
    assert_eq!(rel[3].terms, vec![(1, vec![0, 1, 2])]);
    let a = build_algebra(&qp, 10).unwrap();
    // Every path of length three is a relation, leaving lengths zero to two.
    assert_eq!(a.dim(), 3 * 4);
    assert!(a.check_laws());
}

#[test]
fn non_cycle_potential_is_rejected() {
    let err = QuiverWithPotential::new(
        names(3),
        arrows(&[(0, 1), (1, 2)]),
        vec![PotentialTerm { coeff: 1, cycle: vec![0, 1] }],
    );
    assert!(matches!(err, Err(Error::BadParameters(_))));
}

#[test]
fn grassmannian_jacobian_algebras_are_associative() {
    for (k, n) in [(2, 5), (3, 6), (3, 7), (3, 9), (4, 8)] {
        let seed = grassmannian_initial_seed(k, n).unwrap();
        let a = build_algebra(&seed_qp(&seed).unwrap(), 64).unwrap();
        assert_eq!(a.n_vertices(), seed.quiver().n_mut());
        assert!(a.check_laws(), "({k}, {n})");
    }
}

#[test]
fn type_a_jacobian_algebra() {
    // Gr(2, 5) has a linear A2 mutable part: two idempotents and one arrow.
    let seed = grassmannian_initial_seed(2, 5).unwrap();
    let a = build_algebra(&seed_qp(&seed).unwrap(), 8).unwrap();
    assert_eq!(a.dim(), 3);
}

#[test]
fn hl_jacobian_algebra_is_associative() {
    let seed = hl_seed(4, 3).unwrap();
    let a = build_algebra(&seed_qp(&seed).unwrap(), 64).unwrap();
    assert!(a.check_laws());
}
