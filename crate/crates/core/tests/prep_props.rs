mod common;

use proptest::prelude::*;
use symdist::gf2::{hamming_weight, in_rowspace, symplectic_weight, BitMatrix, BitVector};
use symdist::gf4::to_gf4;
use symdist::prep::{
    diagonalize_f2, diagonalize_f4, information_sets, isometry_transform, second_gamma, PackagedGamma,
    WeightMode,
};
use symdist::random_stabilizer;

use common::weight_multiset;

fn same_rowspace(x: &BitMatrix, y: &BitMatrix) -> bool {
    x.rank() == y.rank()
        && x.rows().iter().all(|r| in_rowspace(y, r))
        && y.rows().iter().all(|r| in_rowspace(x, r))
}

fn instance() -> impl Strategy<Value = (usize, usize, u64)> {
    (2usize..12).prop_flat_map(|n| (Just(n), 0..=n, any::<u64>()))
}

fn all_gammas(a: &BitMatrix) -> Vec<PackagedGamma> {
    let mut out = vec![diagonalize_f2(a).unwrap()];
    let (b4, pc) = diagonalize_f4(&to_gf4(a).unwrap()).unwrap();
    out.push(second_gamma(&b4, &pc).unwrap());
    out.push(b4);
    out
}

/// Weight of `v` restricted to the pivot coordinates of `gamma`.
fn pivot_weight(gamma: &PackagedGamma, v: &BitVector) -> usize {
    let n = gamma.half_len();
    gamma
        .packages()
        .iter()
        .filter_map(|p| p.pivot)
        .filter(|&c| match gamma.mode() {
            WeightMode::Symplectic => v.get(c) || v.get(n + c),
            WeightMode::Hamming => v.get(c),
        })
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prepared_matrices_keep_the_code((n, k, seed) in instance()) {
        let a = random_stabilizer(n, k, seed).unwrap().matrix().clone();
        for g in all_gammas(&a) {
            prop_assert!(g.check_structure().is_ok(), "{:?}", g.check_structure());
            prop_assert!(same_rowspace(&g.basis(), &a));
            prop_assert!(same_rowspace(g.matrix(), &a));
            prop_assert_eq!(g.basis().n_rows(), a.n_rows());
        }
    }

    #[test]
    fn one_member_per_package_sums_meet_the_bound((n, k, seed) in (2usize..7).prop_flat_map(|n| (Just(n), 0..=n, any::<u64>()))) {
        // Every sum taking one member from each of the packages in a set S has
        // weight at least |S| on the pivot coordinates.
        let a = random_stabilizer(n, k, seed).unwrap().matrix().clone();
        for g in all_gammas(&a) {
            let np = g.n_p();
            for mask in 1u32..(1 << np) {
                let chosen: Vec<usize> = (0..np).filter(|i| mask >> i & 1 == 1).collect();
                let mut choice = vec![0usize; chosen.len()];
                loop {
                    let mut v = BitVector::zeros(a.n_cols());
                    for (ci, &p) in chosen.iter().enumerate() {
                        let row = g.packages()[p].rows[choice[ci]];
                        symdist::gf2::xor_accumulate(&mut v, g.matrix().row(row)).unwrap();
                    }
                    prop_assert!(pivot_weight(&g, &v) >= chosen.len());
                    prop_assert!(symplectic_weight(&v).unwrap() >= chosen.len());
                    // next choice tuple
                    let mut i = 0;
                    while i < chosen.len() {
                        choice[i] += 1;
                        if choice[i] < g.packages()[chosen[i]].len() {
                            break;
                        }
                        choice[i] = 0;
                        i += 1;
                    }
                    if i == chosen.len() {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn second_gamma_counts((n, k, seed) in instance()) {
        let a = random_stabilizer(n, k, seed).unwrap().matrix().clone();
        let (b4, pc) = diagonalize_f4(&to_gf4(&a).unwrap()).unwrap();
        let d4 = second_gamma(&b4, &pc).unwrap();
        prop_assert!(d4.n_pp() <= d4.n_p());
        prop_assert!(d4.n_pp() <= pc.len());
        for c in pc.iter() {
            // Principal columns carry no pivot of the first matrix.
            prop_assert!(b4.packages().iter().all(|p| p.pivot != Some(c)));
        }
    }

    #[test]
    fn isometry_doubles_weight((n, k, seed) in instance(), mask in any::<u64>()) {
        let a = random_stabilizer(n, k, seed).unwrap().matrix().clone();
        let b = isometry_transform(&a).unwrap();
        let m = mask & ((1u64 << a.n_rows()) - 1);
        prop_assert_eq!(hamming_weight(&b.combination(m)), 2 * symplectic_weight(&a.combination(m)).unwrap());
    }

    #[test]
    fn information_sets_are_disjoint((n, k, seed) in instance()) {
        let a = random_stabilizer(n, k, seed).unwrap().matrix().clone();
        let b = isometry_transform(&a).unwrap();
        let sets = information_sets(&b).unwrap();
        prop_assert!(!sets.is_empty());
        prop_assert_eq!(sets[0].rank_deficit(), 0);
        let mut used = std::collections::BTreeSet::new();
        for g in &sets {
            prop_assert!(g.check_structure().is_ok());
            prop_assert!(same_rowspace(g.matrix(), &b));
            for c in g.packages().iter().filter_map(|p| p.pivot) {
                prop_assert!(used.insert(c), "pivot column {} reused", c);
            }
        }
    }
}

#[test]
fn weight_multiset_is_preserved() {
    for seed in 0..40u64 {
        let n = 3 + (seed % 6) as usize;
        let k = (seed % (n as u64 + 1)) as usize;
        let a = random_stabilizer(n, k, seed).unwrap().matrix().clone();
        let expected = weight_multiset(&a);
        for g in all_gammas(&a) {
            assert_eq!(weight_multiset(&g.basis()), expected, "seed {seed}");
        }
    }
}
