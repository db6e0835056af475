mod common;

use common::{all_labelings, graph_from_mask, interior_nbc_by_search, prufer_tree};
use lda_core::coloring::{census, nbc_search, nbc_tree_interior, verify_interior_nbc, verify_nbc};
use lda_core::graph::{
    direct_product, disjoint_union, generate, lexicographic_product, FamilySpec, Graph,
};
use lda_core::labeling::{
    sym_diff_property_pairs, tree_leaf_lower_bound, verify_lda, weights, Labeling,
};
use lda_core::solver::{chi_exact, chi_ld_exact, SearchBudget};
use lda_core::SignColoring;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << bits)).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

fn arb_no_isolated(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(min_n, max_n).prop_filter("isolated vertex", |g| g.isolated_vertex().is_none())
}

fn arb_labeled(min_n: usize, max_n: usize) -> impl Strategy<Value = (Graph, Labeling)> {
    arb_graph(min_n, max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(g, l)| (g, Labeling::new(l).unwrap()))
    })
}

fn arb_family() -> impl Strategy<Value = FamilySpec> {
    use FamilySpec::*;
    prop_oneof![
        (1usize..12).prop_map(Path),
        (3usize..12).prop_map(Cycle),
        (1usize..8).prop_map(Complete),
        prop::collection::vec(1usize..5, 1..4).prop_map(CompleteMultipartite),
        (1usize..8).prop_map(Star),
        (1usize..5, 1usize..5).prop_map(|(c, d)| Bistar(c, d)),
        (1usize..5).prop_map(Friendship),
        (3usize..9).prop_map(Wheel),
        (1usize..5).prop_map(BookC4),
    ]
}

fn handshake(g: &Graph) -> bool {
    g.degrees().iter().sum::<usize>() == 2 * g.size()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generators_satisfy_handshake(spec in arb_family()) {
        let g = generate(&spec).unwrap();
        prop_assert!(handshake(&g));
    }

    #[test]
    fn direct_product_degree_law(g in arb_graph(1, 5), h in arb_graph(1, 5)) {
        let p = direct_product(&g, &h).unwrap();
        prop_assert!(handshake(&p));
        let nh = h.order();
        for x in g.vertices() {
            for y in h.vertices() {
                prop_assert_eq!(p.degree(x * nh + y), g.degree(x) * h.degree(y));
            }
        }
    }

    #[test]
    fn lexicographic_degree_law(g in arb_graph(1, 5), h in arb_graph(1, 5)) {
        let p = lexicographic_product(&g, &h).unwrap();
        prop_assert!(handshake(&p));
        let nh = h.order();
        for x in g.vertices() {
            for y in h.vertices() {
                prop_assert_eq!(p.degree(x * nh + y), g.degree(x) * nh + h.degree(y));
            }
        }
    }

    #[test]
    fn union_multiplies_components(g in arb_graph(1, 6), m in 1usize..5) {
        let u = disjoint_union(&g, m).unwrap();
        prop_assert!(handshake(&u));
        prop_assert_eq!(u.components().len(), m * g.components().len());
    }

    #[test]
    fn weight_conservation((g, f) in arb_labeled(1, 9)) {
        let w = weights(&g, &f).unwrap().weights;
        let lhs: u64 = w.iter().sum();
        let rhs: u64 = g.vertices().map(|v| (g.degree(v) * f.get(v)) as u64).sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn complement_symmetry((g, f) in arb_labeled(1, 9)) {
        let n = g.order() as u64;
        let w = weights(&g, &f).unwrap().weights;
        let wc = weights(&g, &f.complement()).unwrap().weights;
        for v in g.vertices() {
            prop_assert_eq!(wc[v], g.degree(v) as u64 * (n + 1) - w[v]);
        }
        if g.regular_degree().is_some() && g.isolated_vertex().is_none() {
            let a = verify_lda(&g, &f).unwrap();
            let b = verify_lda(&g, &f.complement()).unwrap();
            prop_assert_eq!(a.is_lda, b.is_lda);
            prop_assert_eq!(a.color_count, b.color_count);
        }
    }

    #[test]
    fn small_difference_pairs_separate(g in arb_no_isolated(2, 7)) {
        let pairs = sym_diff_property_pairs(&g);
        for labels in all_labelings(g.order()) {
            let f = Labeling::new(labels).unwrap();
            let r = verify_lda(&g, &f).unwrap();
            if r.is_lda {
                for &(u, v) in &pairs {
                    prop_assert_ne!(r.weights[u], r.weights[v]);
                }
            }
        }
    }

    #[test]
    fn census_identities(g in arb_graph(1, 10)) {
        if let Some(sigma) = nbc_search(&g).unwrap() {
            prop_assert!(verify_nbc(&g, &sigma).unwrap());
            let c = census(&g, &sigma).unwrap();
            let e = g.size();
            prop_assert_eq!(4 * c.rr, e);
            prop_assert_eq!(4 * c.bb, e);
            prop_assert_eq!(2 * c.rb, e);
            if g.regular_degree().is_some_and(|d| d > 0) {
                prop_assert_eq!(2 * c.r, g.order());
                prop_assert_eq!(2 * c.b, g.order());
                prop_assert_eq!(e % 4, 0);
            }
        }
    }

    #[test]
    fn tree_interior_nbc_matches_search(n in 3usize..=14, seed in any::<u64>()) {
        let t = prufer_tree(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let even = t.vertices().filter(|&v| t.degree(v) > 1).all(|v| t.degree(v) % 2 == 0);
        let built = nbc_tree_interior(&t);
        prop_assert_eq!(built.is_ok(), even);
        prop_assert_eq!(interior_nbc_by_search(&t).is_some(), even);
        if let Ok(sigma) = built {
            prop_assert!(verify_interior_nbc(&t, &sigma).unwrap());
        }
    }

    #[test]
    fn json_round_trips((g, f) in arb_labeled(1, 8), signs in prop::collection::vec(any::<bool>(), 8)) {
        let g2: Graph = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        prop_assert_eq!(&g2, &g);
        let f2: Labeling = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(&f2, &f);
        let s = SignColoring::from_positive(signs);
        let s2: SignColoring = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        prop_assert_eq!(s2, s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solver_witnesses_are_sound(g in arb_no_isolated(2, 7)) {
        let r = match chi_ld_exact(&g, SearchBudget::default()) {
            Ok(r) => r,
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let k = r.chi_ld.exact().unwrap();
        let f = r.witness.unwrap();
        let rep = verify_lda(&g, &f).unwrap();
        prop_assert!(rep.is_lda);
        prop_assert_eq!(rep.color_count, k);
        prop_assert!(k >= chi_exact(&g).unwrap());
        if g.is_tree() && g.order() >= 3 {
            prop_assert!(k >= tree_leaf_lower_bound(&g).unwrap());
        }
        for (u, v) in sym_diff_property_pairs(&g) {
            prop_assert_ne!(rep.weights[u], rep.weights[v]);
        }
    }

    #[test]
    fn solver_is_deterministic(g in arb_no_isolated(2, 7)) {
        let a = chi_ld_exact(&g, SearchBudget::default()).unwrap();
        let b = chi_ld_exact(&g, SearchBudget::default()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn threads_agree_on_value(g in arb_no_isolated(2, 7)) {
        let a = chi_ld_exact(&g, SearchBudget::default()).unwrap();
        let b = chi_ld_exact(&g, SearchBudget::default().with_threads(3)).unwrap();
        prop_assert_eq!(a.chi_ld, b.chi_ld);
    }
}

/// Brute force over all bijections agrees with the solver on small graphs.
#[test]
fn solver_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let n = *[3usize, 4, 5, 6].choose(&mut rng).unwrap();
        let bits = n * (n - 1) / 2;
        let g = graph_from_mask(n, rand::Rng::gen_range(&mut rng, 0..1u64 << bits));
        if g.isolated_vertex().is_some() {
            continue;
        }
        let brute = all_labelings(n)
            .into_iter()
            .filter_map(|l| {
                let r = verify_lda(&g, &Labeling::new(l).unwrap()).unwrap();
                r.is_lda.then_some(r.color_count)
            })
            .min();
        let solved = chi_ld_exact(&g, SearchBudget::default()).map(|r| r.chi_ld.exact().unwrap());
        assert_eq!(brute, solved.ok(), "{:?}", g.edges());
    }
}
