mod common;

use common::pr;
use propeller_core::graph::{build_propeller, VertexClass};
use propeller_core::perm::*;
use propeller_core::schema::{mu, rho};
use proptest::prelude::*;

fn shuffled(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn group_laws(a in shuffled(9), b in shuffled(9), c in shuffled(9)) {
        let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
        let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.pow(-1), a.inverse());
        prop_assert_eq!(a.pow(3), a.compose(&a).unwrap().compose(&a).unwrap());
    }

    #[test]
    fn composition_is_left_to_right(a in shuffled(7), b in shuffled(7), v in 0usize..7) {
        prop_assert_eq!(a.compose(&b).unwrap().apply(v), b.apply(a.apply(v)));
    }

    #[test]
    fn cycles_cover_support(a in shuffled(12)) {
        let moved: usize = a.cycles().iter().map(Vec::len).sum();
        prop_assert_eq!(moved, (0..12).filter(|&v| a.apply(v) != v).count());
    }
}

#[test]
fn rejects_bad_images() {
    assert!(Permutation::new(vec![0, 0, 1]).is_err());
    assert!(Permutation::new(vec![0, 3, 1]).is_err());
    assert!(Permutation::identity(3).compose(&Permutation::identity(4)).is_err());
    assert_eq!(unhit(&[0, 0, 1]), vec![2]);
}

#[test]
fn rho_and_mu_act_as_described() {
    let p = pr(9, 2, 4, 3);
    let g = build_propeller(p).unwrap();
    let (r, m) = (rho(&p), mu(&p));
    assert!(is_automorphism(&g, &r) && is_automorphism(&g, &m));
    assert_eq!(r.apply(p.vertex(VertexClass::B, 8)), p.vertex(VertexClass::B, 0));
    assert_eq!(r.pow(9), Permutation::identity(27));
    // mu: A_i -> A_-i, B_i -> B_{-i-b}, C_i -> C_{-i-b+c}
    assert_eq!(m.apply(p.vertex(VertexClass::A, 2)), p.vertex(VertexClass::A, -2));
    assert_eq!(m.apply(p.vertex(VertexClass::B, 1)), p.vertex(VertexClass::B, -3));
    assert_eq!(m.apply(p.vertex(VertexClass::C, 1)), p.vertex(VertexClass::C, 1));
    let swap = Permutation::new((0..27).map(|v| if v < 2 { 1 - v } else { v }).collect()).unwrap();
    assert!(!is_automorphism(&g, &swap));
    assert!(first_broken_edge(&g, &swap).is_some());
}
