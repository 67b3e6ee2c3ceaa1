mod common;

use std::collections::BTreeSet;

use common::pr;
use propeller_core::families::*;
use propeller_core::graph::{build_propeller, PropellerParams};
use propeller_core::perm::is_isomorphism;
use propeller_core::schema::named;
use propeller_core::Error;

#[test]
fn lemma_maps_are_isomorphisms() {
    for n in 3..=14 {
        for p in PropellerParams::all_with_n(n) {
            let g = build_propeller(p).unwrap();
            let mut maps = vec![negate_b_map(&p), negate_c_map(&p)];
            maps.extend(d_inverse_map(&p));
            for (q, m) in maps {
                assert!(is_isomorphism(&g, &build_propeller(q).unwrap(), &m), "{p} -> {q}");
                assert!(param_orbit(&p).contains(&q));
            }
        }
    }
    assert!(d_inverse_map(&pr(12, 5, 2, 4)).is_none());
}

#[test]
fn canonical_tuple_is_orbit_invariant() {
    let p = pr(17, 6, 4, 5);
    let c = canonical_tuple(&p);
    for q in param_orbit(&p) {
        assert_eq!(canonical_tuple(&q), c);
    }
    assert!(c <= p);
}

#[test]
fn raw_memberships() {
    assert_eq!(raw_families(&pr(10, 6, 2, 3)), BTreeSet::from([FamilyTag::F2]));
    assert_eq!(raw_families(&pr(10, 6, 2, 7)), BTreeSet::from([FamilyTag::F4]));
    assert!(in_family_raw(&pr(12, 10, 2, 5), FamilyTag::F1Star));
    assert!(in_family_raw(&pr(12, 10, 2, 11), FamilyTag::F1));
    assert!(!in_family_raw(&pr(12, 10, 2, 11), FamilyTag::F1Star));
    assert!(in_family_raw(&pr(8, 3, 7, 3), FamilyTag::F3));
    for t in FAMILY4 {
        assert!(in_family_raw(&pr(t.0, t.1, t.2, t.3), FamilyTag::F4));
    }
}

#[test]
fn every_family_member_admits_its_automorphism() {
    for tag in FamilyTag::ALL {
        for p in members_up_to(tag, 60) {
            let g = build_propeller(p).unwrap();
            let s = named(tag.defining_schema(), &p).unwrap_or_else(|e| panic!("{tag} {p}: {e}"));
            assert!(is_isomorphism(&g, &g, &s), "{tag} {p}");
        }
    }
}

#[test]
fn classification() {
    let c = classify(&pr(10, 6, 2, 3)).unwrap();
    assert!(c.edge_transitive);
    assert_eq!(c.families, BTreeSet::from([FamilyTag::F2, FamilyTag::F4]));
    assert_eq!(c.method, Method::ParameterOrbit);
    assert!(c.witness.is_some());

    let c = classify(&pr(13, 5, 2, 3)).unwrap();
    assert!(!c.edge_transitive && c.families.is_empty());
    assert_eq!(c.method, Method::BruteForce);

    let json = serde_json::to_value(classify(&pr(5, 1, 2, 2)).unwrap()).unwrap();
    assert_eq!(json["n"], 5);
    assert_eq!(json["edgeTransitive"], true);
    assert!(json["families"].as_array().unwrap().iter().any(|f| f == "F4"));
}

#[test]
fn classification_is_consistent_to_16() {
    for n in 3..=16 {
        for p in PropellerParams::all_with_n(n) {
            let c = classify(&p).unwrap_or_else(|e| panic!("{p}: {e}"));
            assert_eq!(c.edge_transitive, !c.families.is_empty(), "{p}");
            assert_eq!(family_memberships(&p).unwrap(), c.families, "{p}");
        }
    }
}

#[test]
fn tags_round_trip() {
    for t in FamilyTag::ALL {
        assert_eq!(t.as_str().parse::<FamilyTag>().unwrap(), t);
    }
    assert!(matches!("F9".parse::<FamilyTag>(), Err(Error::Parse(_))));
}
