use propeller_core::census::*;
use propeller_core::families::FamilyTag;

#[test]
fn output_is_independent_of_worker_count() {
    let run = |jobs| {
        let opts = CensusOptions { dedupe: false, girth: None, jobs: Some(jobs) };
        let (recs, summary) = census(3, 10, &opts).unwrap();
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        (buf, summary)
    };
    let (one, s1) = run(1);
    let (four, s4) = run(4);
    assert_eq!(one, four);
    assert_eq!(s1, s4);
}

#[test]
fn summary_adds_up() {
    let (recs, s) = census(3, 12, &CensusOptions::default()).unwrap();
    assert_eq!(s.records, recs.len());
    assert_eq!(s.edge_transitive, recs.iter().filter(|r| r.edge_transitive).count());
    let by_girth: usize = s.by_girth.values().map(|v| v.0).sum();
    assert_eq!(by_girth, s.records);
    assert_eq!(s.by_family[&FamilyTag::F4], recs.iter().filter(|r| r.families.contains(&FamilyTag::F4)).count());
    assert!(s.to_string().starts_with("records: "));
}

#[test]
fn dedupe_keeps_canonical_tuples() {
    let opts = CensusOptions { dedupe: true, ..Default::default() };
    let (recs, _) = census(3, 12, &opts).unwrap();
    assert!(recs.iter().all(|r| r.canonical_tuple == r.params));
    let (all, _) = census(3, 12, &CensusOptions::default()).unwrap();
    let canon: std::collections::BTreeSet<_> = all.iter().map(|r| r.canonical_tuple).collect();
    assert_eq!(canon.len(), recs.len());
}

#[test]
fn streaming_matches_collected() {
    let opts = CensusOptions::default();
    let mut sink = CsvSink::new(Vec::new()).unwrap();
    let mut streamed = Vec::new();
    census_each(5, 7, &opts, |r| {
        streamed.push(r.params);
        Ok(())
    })
    .unwrap();
    let (recs, _) = census(5, 7, &opts).unwrap();
    assert_eq!(streamed, recs.iter().map(|r| r.params).collect::<Vec<_>>());
    for r in &recs {
        sink.write(r).unwrap();
    }
    sink.finish().unwrap();
}
