mod common;

use common::pr;
use propeller_core::cases::*;
use propeller_core::cycles::per_edge_counts;
use propeller_core::relations::predicted_n6;

#[test]
fn thirty_one_rows() {
    let rows = case_rows();
    assert_eq!(rows.len(), 31);
    assert_eq!(rows.iter().map(|r| r.id).collect::<Vec<_>>(), (1..=31).collect::<Vec<_>>());
    assert_eq!(case_row(16).unwrap().template, ["2d", "2", "d"].map(String::from));
    assert_eq!(case_row(31).unwrap().expected_n6, 9);
    assert!(case_row(32).is_none());
    assert_eq!(EDGE_TRANSITIVE_CASES, [1, 5, 16, 26]);
}

#[test]
fn forms_and_congruences() {
    let f = LinearForm::parse("1+b-c").unwrap();
    assert_eq!(f.eval(10, 4, 0), 7);
    assert_eq!(LinearForm::parse("2b-3").unwrap().eval(5, 0, 0), 7);
    assert!(LinearForm::parse("1+x").is_err());
    let k = Congruence::parse("2+2b=2d").unwrap();
    assert!(k.holds(&pr(20, 4, 3, 5)));
    assert!(!k.holds(&pr(20, 4, 3, 6)));
    assert!(Congruence::parse("2b").is_err());
}

#[test]
fn instances_fit_their_row() {
    for row in case_rows() {
        for p in row.instances(30) {
            assert!(row.fits(&p), "case {} {p}", row.id);
        }
    }
    assert!(case_row(16).unwrap().fits(&pr(80, 18, 2, 9)));
}

#[test]
fn edge_transitive_rows_have_instances() {
    for id in EDGE_TRANSITIVE_CASES {
        let row = case_row(id).unwrap();
        let p = find_instance(&row, 78, 120, true).unwrap_or_else(|| panic!("case {id}"));
        assert!(p.n > 78);
        assert_eq!(per_edge_counts(&p).unwrap().uniform_n6(), Some(row.expected_n6));
    }
}

#[test]
fn matching() {
    let p = pr(88, 35, 31, 67);
    assert_eq!(predicted_n6(&p), [3; 6]);
    assert_eq!(match_case(&p), Some(1));
    assert_eq!(match_case(&pr(80, 18, 2, 9)), Some(16));
}
