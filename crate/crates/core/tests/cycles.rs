mod common;

use common::{naive_cycles_through_edge, naive_girth, pr};
use propeller_core::cycles::*;
use propeller_core::graph::*;
use propeller_core::Error;

#[test]
fn girth_matches_naive() {
    for n in 3..=8 {
        for p in PropellerParams::all_with_n(n) {
            let g = build_propeller(p).unwrap();
            let want = naive_girth(&g).unwrap();
            assert_eq!(girth(&g).unwrap(), want, "{p}");
            assert_eq!(propeller_girth(&g, &p).unwrap(), want, "{p}");
        }
    }
    assert_eq!(propeller_girth(&build_propeller(pr(4, 2, 2, 1)).unwrap(), &pr(4, 2, 2, 1)).unwrap(), 4);
}

#[test]
fn forests_have_no_girth() {
    let path = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(girth(&path), Err(Error::NoCycle));
}

#[test]
fn short_cycle_counts_match_naive() {
    for p in [pr(7, 2, 3, 1), pr(10, 6, 2, 3), pr(13, 5, 2, 3), pr(16, 3, 7, 5), pr(24, 10, 2, 5)] {
        let g = build_propeller(p).unwrap();
        let counts = per_edge_counts(&p).unwrap();
        for k in EdgeKind::ALL {
            let (u, v) = k.representative(&p);
            let s = ShortCycleCounts::through_edge(&g, u, v);
            let naive: Vec<usize> = (3..=6).map(|len| naive_cycles_through_edge(&g, u, v, len)).collect();
            assert_eq!(vec![s.n3, s.n4, s.n5, s.n6], naive, "{p} {k}");
            assert_eq!(counts.n6(k), naive[3]);
        }
        assert_eq!(wing_n6(&g), counts.n6(EdgeKind::AWing));
    }
}

#[test]
fn arc_enumeration() {
    let p = pr(13, 5, 2, 3);
    let g = build_propeller(p).unwrap();
    for k in 3..=8 {
        let (u, v) = EdgeKind::CWing.representative(&p);
        let cycles = cycles_through_arc(&g, (u, v), k);
        assert_eq!(cycles.len(), naive_cycles_through_edge(&g, u, v, k), "length {k}");
        for c in &cycles {
            assert_eq!((c[0], c[1]), (u, v));
            check_cycle(&g, c).unwrap();
        }
    }
    assert_eq!(count_cycles_with_prefix(&g, &[0, 1], 6), cycles_through_arc(&g, (0, 1), 6).len());
}

#[test]
fn canonical_hexagon_profiles() {
    let p = pr(19, 4, 7, 2);
    let g = build_propeller(p).unwrap();
    let a = |i| p.vertex(VertexClass::A, i);
    let b = |i| p.vertex(VertexClass::B, i);
    let c = |i| p.vertex(VertexClass::C, i);
    let hex_a = [a(0), a(1), b(1), a(5), a(4), b(0)];
    assert_eq!(profile(&g, &hex_a).unwrap(), CycleProfile::from_array([2, 2, 2, 0, 0, 0]));
    let hex_c = [b(0), c(7), c(9), b(2), c(2), c(0)];
    assert_eq!(profile_in(&p, &hex_c).unwrap().as_array(), [0, 0, 0, 2, 2, 2]);
    assert_eq!(CycleProfile::from_array([1, 2, 3, 4, 5, 6]).reflected().as_array(), [1, 3, 2, 5, 4, 6]);
}

#[test]
fn cycle_errors() {
    let p = pr(9, 2, 4, 3);
    let g = build_propeller(p).unwrap();
    assert!(matches!(check_cycle(&g, &[0, 1]), Err(Error::NotACycle(_))));
    assert!(matches!(check_cycle(&g, &[0, 1, 0, 1]), Err(Error::NotACycle(_))));
    assert!(matches!(check_cycle(&g, &[0, 1, 5]), Err(Error::NotACycle(_))));
    let plain = LabeledGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(profile(&plain, &[0, 1, 2]), Err(Error::Unlabeled));
}

#[test]
fn arc_types() {
    let small = pr(7, 2, 3, 1);
    assert!(matches!(
        arc_type(&build_propeller(small).unwrap(), (0, 1)),
        Err(Error::GirthTooSmall(_))
    ));
    let p = pr(13, 5, 2, 3);
    let g = build_propeller(p).unwrap();
    let t = arc_type(&g, (0, 1)).unwrap();
    assert!(t.successor.windows(2).all(|w| w[0] <= w[1]));
    // every 6-cycle through the arc continues along exactly one extension
    let n6 = cycles_through_arc(&g, (0, 1), 6).len();
    assert_eq!(t.successor.iter().sum::<usize>(), n6);
    assert_eq!(t.predecessor.iter().sum::<usize>(), n6);
}
