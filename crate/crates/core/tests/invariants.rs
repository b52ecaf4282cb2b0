use lpm_toric::polytope::{build_face_lattice, enumerate_facets, incidence_vertices};
use lpm_toric::toric::{toric_pair, toric_pair_unmemoized};
use lpm_toric::{
    binomial, check_exchange_axiom, count_bases, enumerate_bases, Caps, LatticePath, PathPair,
};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Random noncrossing pair: the envelope of two random paths with the same
/// endpoint.
fn path_pair(max_len: usize) -> impl Strategy<Value = PathPair> {
    (1..=max_len)
        .prop_flat_map(|len| (Just(len), 0..=len))
        .prop_flat_map(|(len, ups)| {
            let path = Just(vec![true; ups])
                .prop_map(move |mut v| {
                    v.resize(len, false);
                    v
                })
                .prop_shuffle();
            (path.clone(), path)
        })
        .prop_map(|(a, b)| {
            let to_path = |v: Vec<bool>| {
                LatticePath::parse(
                    &v.iter()
                        .map(|&n| if n { 'N' } else { 'E' })
                        .collect::<String>(),
                )
                .unwrap()
            };
            PathPair::envelope(&to_path(a), &to_path(b)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn count_matches_enumeration(pair in path_pair(12)) {
        let m = enumerate_bases(&pair, 1 << 14).unwrap();
        prop_assert_eq!(count_bases(&pair), BigUint::from(m.len()));
    }

    #[test]
    fn bases_round_trip_through_paths(pair in path_pair(10)) {
        let m = enumerate_bases(&pair, 1 << 12).unwrap();
        for b in &m.bases {
            let path = b.to_path(pair.ground_size()).unwrap();
            prop_assert!(pair.contains(&path));
            prop_assert_eq!(&path.to_basis(), b);
        }
        let mut sorted = m.bases.clone();
        sorted.sort();
        prop_assert_eq!(sorted, m.bases.clone());
    }

    #[test]
    fn exchange_axiom(pair in path_pair(8)) {
        let m = enumerate_bases(&pair, 1 << 10).unwrap();
        prop_assert!(check_exchange_axiom(&m).is_ok());
    }

    #[test]
    fn vandermonde(a in 0i64..25, b in 0i64..25, c in 0i64..30) {
        let sum: num_bigint::BigInt = (0..=c).map(|k| binomial(a, k) * binomial(b, c - k)).sum();
        prop_assert_eq!(sum, binomial(a + b, c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Face lattices of small matroid polytopes: Euler relation, diamond
    /// property, Eulerian, palindromic toric h, and the memoised recursion
    /// against the one that rebuilds every interval.
    #[test]
    fn small_polytopes(pair in path_pair(6)) {
        let m = enumerate_bases(&pair, 64).unwrap();
        prop_assume!(m.len() <= 12);
        let caps = Caps::default();
        let points = incidence_vertices(&m);
        let facets = enumerate_facets(&points, &caps).unwrap();
        let lattice = build_face_lattice(&points, &facets, &caps).unwrap();
        prop_assert!(lattice.f_vector().satisfies_euler());
        prop_assert_eq!(lattice.level_sizes()[1], m.len());
        let poset = lattice.to_poset();
        prop_assert!(poset.has_diamond_property());
        prop_assert!(poset.is_eulerian());
        let pair_memo = toric_pair(&poset);
        let n = poset.rank() - 1;
        prop_assert!(pair_memo.f.is_palindromic(n));
        if lattice.len() <= 40 {
            prop_assert_eq!(toric_pair_unmemoized(&poset), pair_memo);
        }
    }
}
