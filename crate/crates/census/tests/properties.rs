use gem_census::{build_surface_set, generate_two_colored, CatalogRecord};
use gem_core::{canonical_code, ColoredGraph};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn random_matching(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let mut m = vec![0; n];
    for pair in vs.chunks(2) {
        m[pair[0]] = pair[1];
        m[pair[1]] = pair[0];
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn surface_set_members_have_no_sphere_components(half in 1usize..=5) {
        let set = build_surface_set(2 * half);
        for g in &set.members {
            prop_assert_eq!(g.order(), 2 * half);
            for (v, a) in g.adjacency().iter().enumerate() {
                for c in 0..3 {
                    prop_assert_ne!(a[c], v);
                    prop_assert_eq!(g.adjacency()[a[c]][c], v);
                }
            }
            prop_assert!(g.component_surfaces().iter().all(|s| s.euler_characteristic() < 2));
        }
    }

    #[test]
    fn cycle_partitions_cover_the_order(half in 1usize..=8) {
        let parts = generate_two_colored(2 * half);
        for p in &parts {
            prop_assert_eq!(p.lengths().iter().sum::<usize>(), 2 * half);
            prop_assert!(p.lengths().iter().all(|&l| l >= 2 && l % 2 == 0));
            prop_assert!(p.lengths().windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn records_are_recomputable(seed: u64, half in 1usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let n = 2 * half;
        let g = loop {
            let ms = std::array::from_fn(|_| random_matching(&mut rng, n));
            if let Ok(g) = ColoredGraph::from_matchings(ms) {
                break g;
            }
        };
        let record = CatalogRecord::from_graph(&g);
        prop_assert_eq!(&record.code, &canonical_code(&g).to_string());
        prop_assert!(record.check().is_ok());
        let mut tampered = record.clone();
        tampered.contracted = !tampered.contracted;
        prop_assert!(tampered.check().is_err());
    }
}
