mod common;

use common::definition_edges;
use propeller_core::aut::edge_transitivity_witness;
use propeller_core::export::{from_graph6, to_graph6};
use propeller_core::families::{canonical_tuple, classify, d_inverse_map, negate_b_map, negate_c_map};
use propeller_core::graph::{build_propeller, PropellerParams};
use propeller_core::perm::{is_automorphism, is_isomorphism};
use propeller_core::schema::{mu, rho};
use proptest::prelude::*;

fn params(max_n: usize) -> impl Strategy<Value = PropellerParams> {
    (3..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n, 1..n, 1..n))
        .prop_filter_map("d = n/2", |(n, b, c, d)| PropellerParams::new(n, b, c, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn construction_matches_definition(p in params(40)) {
        let g = build_propeller(p).unwrap();
        let want: Vec<_> = definition_edges(p.n, p.b, p.c, p.d).into_iter().collect();
        prop_assert_eq!(g.edge_set(), want);
    }

    #[test]
    fn rho_mu_are_automorphisms(p in params(40)) {
        let g = build_propeller(p).unwrap();
        prop_assert!(is_automorphism(&g, &rho(&p)));
        prop_assert!(is_automorphism(&g, &mu(&p)));
    }

    #[test]
    fn lemma_maps(p in params(60)) {
        let g = build_propeller(p).unwrap();
        let mut maps = vec![negate_b_map(&p), negate_c_map(&p)];
        maps.extend(d_inverse_map(&p));
        for (q, m) in maps {
            prop_assert!(is_isomorphism(&g, &build_propeller(q).unwrap(), &m));
            prop_assert_eq!(canonical_tuple(&q), canonical_tuple(&p));
        }
    }

    #[test]
    fn graph6_round_trip(p in params(30)) {
        let g = build_propeller(p).unwrap();
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap().edge_set(), g.edge_set());
    }

    #[test]
    fn witnesses_are_automorphisms(p in params(24)) {
        let g = build_propeller(p).unwrap();
        if let Some(w) = edge_transitivity_witness(&g, &p).unwrap() {
            prop_assert!(is_automorphism(&g, &w));
        }
        let c = classify(&p).unwrap();
        prop_assert_eq!(c.edge_transitive, !c.families.is_empty());
    }
}
