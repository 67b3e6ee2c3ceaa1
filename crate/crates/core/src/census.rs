//! Exhaustive sweep over parameter tuples with deterministic, ordered output.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{propeller_girth, wing_n6};
use crate::error::{Error, Result};
use crate::families::{canonical_tuple, classify_graph, FamilyTag};
use crate::graph::{build_propeller, PropellerParams};

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    /// Keep only the lexicographically least member of each lemma orbit.
    pub dedupe: bool,
    /// Keep only tuples of this girth.
    pub girth: Option<usize>,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusRecord {
    #[serde(flatten)]
    pub params: PropellerParams,
    pub girth: usize,
    /// 6-cycles through the wing `{A_0, A_1}`.
    pub per_edge_n6: usize,
    pub edge_transitive: bool,
    pub families: Vec<FamilyTag>,
    pub canonical_tuple: PropellerParams,
}

pub const CSV_HEADER: [&str; 9] = [
    "n",
    "b",
    "c",
    "d",
    "girth",
    "perEdgeN6",
    "edgeTransitive",
    "families",
    "canonicalTuple",
];

impl CensusRecord {
    pub fn csv_fields(&self) -> [String; 9] {
        let p = self.params;
        let fam: Vec<&str> = self.families.iter().map(|t| t.as_str()).collect();
        let q = self.canonical_tuple;
        [
            p.n.to_string(),
            p.b.to_string(),
            p.c.to_string(),
            p.d.to_string(),
            self.girth.to_string(),
            self.per_edge_n6.to_string(),
            self.edge_transitive.to_string(),
            fam.join(";"),
            format!("{} {} {} {}", q.n, q.b, q.c, q.d),
        ]
    }
}

/// Counts of records overall, by family and by girth.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusSummary {
    pub records: usize,
    pub edge_transitive: usize,
    pub by_family: BTreeMap<FamilyTag, usize>,
    /// girth -> (records, edge-transitive records)
    pub by_girth: BTreeMap<usize, (usize, usize)>,
}

impl CensusSummary {
    fn add(&mut self, r: &CensusRecord) {
        self.records += 1;
        let g = self.by_girth.entry(r.girth).or_default();
        g.0 += 1;
        if r.edge_transitive {
            self.edge_transitive += 1;
            g.1 += 1;
        }
        for &t in &r.families {
            *self.by_family.entry(t).or_default() += 1;
        }
    }
}

impl fmt::Display for CensusSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "records: {}", self.records)?;
        writeln!(f, "edge-transitive: {}", self.edge_transitive)?;
        for (t, k) in &self.by_family {
            writeln!(f, "  {t}: {k}")?;
        }
        for (g, (all, et)) in &self.by_girth {
            writeln!(f, "girth {g}: {all} records, {et} edge-transitive")?;
        }
        Ok(())
    }
}

/// One census record, or `None` when filtered out.
pub fn census_record(p: &PropellerParams, opts: &CensusOptions) -> Result<Option<CensusRecord>> {
    let canonical = canonical_tuple(p);
    if opts.dedupe && canonical != *p {
        return Ok(None);
    }
    let g = build_propeller(*p)?;
    let girth = propeller_girth(&g, p)?;
    if opts.girth.is_some_and(|want| want != girth) {
        return Ok(None);
    }
    let class = classify_graph(p, &g)?;
    Ok(Some(CensusRecord {
        params: *p,
        girth,
        per_edge_n6: wing_n6(&g),
        edge_transitive: class.edge_transitive,
        families: class.families.into_iter().collect(),
        canonical_tuple: canonical,
    }))
}

/// Runs the census over `min_n..=max_n`, handing records to `sink` in
/// `(n, b, c, d)` order whatever the worker count.
pub fn census_each(
    min_n: usize,
    max_n: usize,
    opts: &CensusOptions,
    mut sink: impl FnMut(&CensusRecord) -> Result<()>,
) -> Result<CensusSummary> {
    if min_n < 3 || min_n > max_n {
        return Err(Error::InvalidParams(format!("census range {min_n}..={max_n}")));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let mut summary = CensusSummary::default();
    for n in min_n..=max_n {
        let tuples: Vec<PropellerParams> = PropellerParams::all_with_n(n).collect();
        let results: Vec<Result<Option<CensusRecord>>> =
            pool.install(|| tuples.par_iter().map(|p| census_record(p, opts)).collect());
        for r in results {
            if let Some(rec) = r? {
                summary.add(&rec);
                sink(&rec)?;
            }
        }
    }
    Ok(summary)
}

pub fn census(min_n: usize, max_n: usize, opts: &CensusOptions) -> Result<(Vec<CensusRecord>, CensusSummary)> {
    let mut out = Vec::new();
    let summary = census_each(min_n, max_n, opts, |r| {
        out.push(r.clone());
        Ok(())
    })?;
    Ok((out, summary))
}

/// Streams records as CSV with the fixed header.
pub struct CsvSink<W: Write> {
    writer: csv::Writer<W>,
}

impl<W: Write> CsvSink<W> {
    pub fn new(inner: W) -> Result<Self> {
        let mut writer = csv::Writer::from_writer(inner);
        writer.write_record(CSV_HEADER)?;
        Ok(CsvSink { writer })
    }

    pub fn write(&mut self, r: &CensusRecord) -> Result<()> {
        self.writer.write_record(r.csv_fields())?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.writer.flush()?;
        Ok(())
    }
}

pub fn write_csv<W: Write>(records: &[CensusRecord], out: W) -> Result<()> {
    let mut sink = CsvSink::new(out)?;
    for r in records {
        sink.write(r)?;
    }
    sink.finish()
}
