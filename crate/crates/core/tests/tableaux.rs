use grascat_core::cmcat::KSubset;
use grascat_core::tableaux::{
    monomial_generators, monomial_to_tableau, tableau_to_monomial, DominantMonomial, MonomialDictionary, Tableau,
};
use proptest::prelude::*;

fn t(k: usize, n: u32, rows: &[&[u32]]) -> Tableau {
    Tableau::new(k, n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// A semistandard tableau built as the union of random columns.
fn tableau(k: usize, n: u32, max_width: usize) -> impl Strategy<Value = Tableau> {
    let column = proptest::sample::subsequence((1..=n).collect::<Vec<u32>>(), k);
    proptest::collection::vec(column, 0..=max_width).prop_map(move |cols| {
        let cols: Vec<KSubset> = cols.into_iter().map(|c| KSubset::new(n, c).unwrap()).collect();
        Tableau::from_columns(k, n, &cols).unwrap()
    })
}

fn shape() -> impl Strategy<Value = (usize, u32)> {
    (2usize..=4).prop_flat_map(|k| (Just(k), (k as u32 + 1)..=9))
}

fn shaped(max_width: usize) -> impl Strategy<Value = Tableau> {
    shape().prop_flat_map(move |(k, n)| tableau(k, n, max_width))
}

fn pair() -> impl Strategy<Value = (Tableau, Tableau)> {
    shape().prop_flat_map(|(k, n)| (tableau(k, n, 5), tableau(k, n, 5)))
}

fn triple() -> impl Strategy<Value = (Tableau, Tableau, Tableau)> {
    shape().prop_flat_map(|(k, n)| (tableau(k, n, 4), tableau(k, n, 4), tableau(k, n, 4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn bender_knuth_is_an_involution(a in shaped(6), i in 1u32..9) {
        prop_assert_eq!(a.bender_knuth(i).bender_knuth(i), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bender_knuth_swaps_the_two_values(a in shaped(6), i in 1u32..9) {
        prop_assume!(i < a.n());
        let (before, after) = (a.content(), a.bender_knuth(i).content());
        let i = i as usize;
        prop_assert_eq!(after[i], before[i + 1]);
        prop_assert_eq!(after[i + 1], before[i]);
        for v in (1..before.len()).filter(|&v| v != i && v != i + 1) {
            prop_assert_eq!(after[v], before[v]);
        }
    }

    #[test]
    fn promotion_has_order_n_on_rectangles(a in shaped(4)) {
        let mut b = a.clone();
        for _ in 0..a.n() {
            b = b.promote();
        }
        prop_assert_eq!(b, a);
    }

    #[test]
    fn quotient_undoes_union((a, b) in pair()) {
        let u = a.union(&b).unwrap();
        prop_assert_eq!(u.quotient(&b).unwrap(), a.clone());
        prop_assert_eq!(u.quotient(&a).unwrap(), b.clone());
        prop_assert_eq!(u, b.union(&a).unwrap());
    }

    #[test]
    fn union_is_associative((a, b, c) in triple()) {
        prop_assert_eq!(a.union(&b).unwrap().union(&c).unwrap(), a.union(&b.union(&c).unwrap()).unwrap());
    }

    #[test]
    fn union_adds_content_grids((a, b) in pair()) {
        let mut g = a.content_grid();
        g.add_scaled(&b.content_grid(), 1);
        prop_assert_eq!(a.union(&b).unwrap().content_grid(), g);
    }

    #[test]
    fn reduce_is_idempotent_and_ignores_trivial_columns(a in shaped(6), start in 1u32..9) {
        let r = a.reduce();
        prop_assert_eq!(r.reduce(), r.clone());
        if let Some(c) = KSubset::interval(a.n(), start, a.k() as u32) {
            let padded = a.union(&Tableau::column(&c)).unwrap();
            prop_assert_eq!(padded.reduce(), r);
        }
    }

    #[test]
    fn reduced_tableau_has_no_trivial_factor(a in shaped(6)) {
        let r = a.reduce();
        for start in 1..=(a.n() + 1 - a.k() as u32) {
            let c = KSubset::interval(a.n(), start, a.k() as u32).unwrap();
            prop_assert!(r.quotient(&Tableau::column(&c)).is_err());
        }
    }
}

fn multisets(gens: &[(i64, i64)], max_degree: u32) -> Vec<Vec<(i64, i64, u32)>> {
    fn go(
        gens: &[(i64, i64)],
        from: usize,
        left: u32,
        cur: &mut Vec<(i64, i64, u32)>,
        out: &mut Vec<Vec<(i64, i64, u32)>>,
    ) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for g in from..gens.len() {
            for m in 1..=left {
                cur.push((gens[g].0, gens[g].1, m));
                go(gens, g + 1, left - m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(gens, 0, max_degree, &mut Vec::new(), &mut out);
    out
}

#[test]
fn dictionary_round_trip_up_to_four_factors() {
    let (k, ell) = (3, 5);
    let gens = monomial_generators(k, ell);
    assert_eq!(gens.len(), (k - 1) * (ell + 1));
    let dict = MonomialDictionary::new(3, 9).unwrap();
    let all = multisets(&gens, 4);
    // Multisets of size at most 4 drawn from 12 generators.
    assert_eq!(all.len(), 1 + 12 + 78 + 364 + 1365);
    for factors in all {
        let m = DominantMonomial::new(k, ell, &factors).unwrap();
        let tab = monomial_to_tableau(&m).unwrap();
        assert_eq!(tab.reduce(), tab);
        assert_eq!(dict.tableau_to_monomial(&tab).unwrap(), m, "{tab}");
    }
}

#[test]
fn worked_example_at_three_six() {
    let m = DominantMonomial::new(3, 2, &[(1, -5, 1), (1, -3, 1), (2, -2, 1), (2, 0, 1)]).unwrap();
    let tab = monomial_to_tableau(&m).unwrap();
    assert_eq!(tab, t(3, 6, &[&[1, 2], &[3, 4], &[5, 6]]));
    assert_eq!(tableau_to_monomial(&tab).unwrap(), m);
}

#[test]
fn single_columns_round_trip() {
    let dict = MonomialDictionary::new(3, 6).unwrap();
    for c in [[1, 2, 4], [1, 3, 5], [2, 4, 6], [1, 4, 6]] {
        let col = Tableau::column(&KSubset::new(6, c.to_vec()).unwrap());
        let m = dict.tableau_to_monomial(&col).unwrap();
        assert_eq!(monomial_to_tableau(&m).unwrap(), col.reduce());
    }
}
