//! The 48 classes of 6-cycles. Each row carries its congruence, its per-edge
//! profile contribution and one walk word per `<rho, mu>` class it covers.
//!
//! A walk word starts at a vertex of the given class and takes six steps:
//! `a+`/`a-` along A-wings, `af`/`ab` along A-flats/A-blades, `cb`/`cf` along
//! C-blades/C-flats, `c+`/`c-` along C-wings.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::cycles::CycleProfile;
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, LabeledGraph, PropellerParams, VertexClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    APlus,
    AMinus,
    AFlat,
    ABlade,
    CBlade,
    CFlat,
    CPlus,
    CMinus,
}

impl Step {
    fn token(self) -> &'static str {
        match self {
            Step::APlus => "a+",
            Step::AMinus => "a-",
            Step::AFlat => "af",
            Step::ABlade => "ab",
            Step::CBlade => "cb",
            Step::CFlat => "cf",
            Step::CPlus => "c+",
            Step::CMinus => "c-",
        }
    }

    fn reversed(self) -> Step {
        match self {
            Step::APlus => Step::AMinus,
            Step::AMinus => Step::APlus,
            Step::CPlus => Step::CMinus,
            Step::CMinus => Step::CPlus,
            s => s,
        }
    }

    fn reflected(self) -> Step {
        match self {
            Step::APlus => Step::AMinus,
            Step::AMinus => Step::APlus,
            Step::AFlat => Step::ABlade,
            Step::ABlade => Step::AFlat,
            Step::CBlade => Step::CFlat,
            Step::CFlat => Step::CBlade,
            Step::CPlus => Step::CMinus,
            Step::CMinus => Step::CPlus,
        }
    }

    pub fn kind(self) -> EdgeKind {
        match self {
            Step::APlus | Step::AMinus => EdgeKind::AWing,
            Step::AFlat => EdgeKind::AFlat,
            Step::ABlade => EdgeKind::ABlade,
            Step::CBlade => EdgeKind::CBlade,
            Step::CFlat => EdgeKind::CFlat,
            Step::CPlus | Step::CMinus => EdgeKind::CWing,
        }
    }

    /// Class reached and index offset `(k0, kb, kc, kd)` when leaving `from`.
    fn apply(self, from: VertexClass) -> Option<(VertexClass, [i64; 4])> {
        use VertexClass::*;
        Some(match (from, self) {
            (A, Step::APlus) => (A, [1, 0, 0, 0]),
            (A, Step::AMinus) => (A, [-1, 0, 0, 0]),
            (A, Step::AFlat) => (B, [0; 4]),
            (A, Step::ABlade) => (B, [0, -1, 0, 0]),
            (B, Step::AFlat) => (A, [0; 4]),
            (B, Step::ABlade) => (A, [0, 1, 0, 0]),
            (B, Step::CBlade) => (C, [0, 0, 1, 0]),
            (B, Step::CFlat) => (C, [0; 4]),
            (C, Step::CFlat) => (B, [0; 4]),
            (C, Step::CBlade) => (B, [0, 0, -1, 0]),
            (C, Step::CPlus) => (C, [0, 0, 0, 1]),
            (C, Step::CMinus) => (C, [0, 0, 0, -1]),
            _ => return None,
        })
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "a+" => Step::APlus,
            "a-" => Step::AMinus,
            "af" => Step::AFlat,
            "ab" => Step::ABlade,
            "cb" => Step::CBlade,
            "cf" => Step::CFlat,
            "c+" => Step::CPlus,
            "c-" => Step::CMinus,
            other => return Err(Error::Parse(format!("unknown step {other:?}"))),
        })
    }
}

/// A closed walk shape: start class plus six steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Walk {
    pub start: VertexClass,
    pub steps: Vec<Step>,
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<&str> = self.steps.iter().map(|s| s.token()).collect();
        write!(f, "{}: {}", self.start.letter(), tokens.join(" "))
    }
}

impl Walk {
    pub fn parse(start: &str, word: &str) -> Result<Walk> {
        let start = match start {
            "A" => VertexClass::A,
            "B" => VertexClass::B,
            "C" => VertexClass::C,
            other => return Err(Error::Parse(format!("unknown class {other:?}"))),
        };
        let steps = word
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Step>>>()?;
        let w = Walk { start, steps };
        w.classes()?;
        Ok(w)
    }

    /// Class of each vertex along the walk (length `steps + 1`).
    fn classes(&self) -> Result<Vec<VertexClass>> {
        let mut out = vec![self.start];
        for &s in &self.steps {
            let (next, _) = s
                .apply(*out.last().unwrap())
                .ok_or_else(|| Error::Parse(format!("step {} cannot leave this class", s.token())))?;
            out.push(next);
        }
        Ok(out)
    }

    /// Closing offset `(k0, kb, kc, kd)`; the walk closes iff it vanishes mod n.
    pub fn closing_relation(&self) -> [i64; 4] {
        let mut class = self.start;
        let mut acc = [0i64; 4];
        for &s in &self.steps {
            let (next, off) = s.apply(class).expect("validated walk");
            for (a, o) in acc.iter_mut().zip(off) {
                *a += o;
            }
            class = next;
        }
        acc
    }

    /// Vertices visited from index `i`, excluding the closing return.
    pub fn vertices(&self, p: &PropellerParams, i: i64) -> Vec<usize> {
        let (b, c, d) = (p.b as i64, p.c as i64, p.d as i64);
        let mut class = self.start;
        let mut idx = i;
        let mut out = vec![p.vertex(class, idx)];
        for &s in &self.steps[..self.steps.len() - 1] {
            let (next, off) = s.apply(class).expect("validated walk");
            idx += off[0] + off[1] * b + off[2] * c + off[3] * d;
            class = next;
            out.push(p.vertex(class, idx));
        }
        out
    }

    pub fn profile(&self) -> CycleProfile {
        let mut counts = [0usize; 6];
        for s in &self.steps {
            counts[s.kind().ordinal()] += 1;
        }
        CycleProfile::from_array(counts)
    }

    fn reflected(&self) -> Walk {
        Walk {
            start: self.start,
            steps: self.steps.iter().map(|s| s.reflected()).collect(),
        }
    }

    /// Least rotation or reversal; identifies the `<rho>`-orbit of the cycle.
    pub fn shape_key(&self) -> Walk {
        let classes = self.classes().expect("validated walk");
        let len = self.steps.len();
        let reversed: Vec<Step> = self.steps.iter().rev().map(|s| s.reversed()).collect();
        let mut best: Option<Walk> = None;
        for (j, &start) in classes.iter().enumerate().take(len) {
            let mut rot = self.steps[j..].to_vec();
            rot.extend_from_slice(&self.steps[..j]);
            let fwd = Walk {
                start,
                steps: rot,
            };
            // the reversed walk starting at vertex j of the original
            let k = (len - j) % len;
            let mut rrot = reversed[k..].to_vec();
            rrot.extend_from_slice(&reversed[..k]);
            let back = Walk {
                start: classes[j],
                steps: rrot,
            };
            for cand in [fwd, back] {
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        best.unwrap()
    }

    /// Identifies the `<rho, mu>`-class of the cycle.
    pub fn class_key(&self) -> Walk {
        self.shape_key().min(self.reflected().shape_key())
    }
}

/// Congruence on `(n, b, c, d)` attached to a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Predicate {
    Always { always: bool },
    NEquals { n: usize },
    Linear { k0: i64, kb: i64, kc: i64, kd: i64 },
}

impl Predicate {
    pub fn holds(&self, p: &PropellerParams) -> bool {
        match *self {
            Predicate::Always { always } => always,
            Predicate::NEquals { n } => p.n == n,
            Predicate::Linear { k0, kb, kc, kd } => {
                (k0 + kb * p.b as i64 + kc * p.c as i64 + kd * p.d as i64).rem_euclid(p.n as i64) == 0
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
struct RawRep {
    start: String,
    word: String,
}

#[derive(Debug, Clone, Deserialize)]
struct RawRow {
    id: u32,
    relation: String,
    profile: [usize; 6],
    representatives: Vec<RawRep>,
    predicate: Predicate,
}

#[derive(Debug, Clone)]
pub struct RelationRow {
    pub id: u32,
    pub relation: String,
    pub predicate: Predicate,
    pub profile: CycleProfile,
    pub representatives: Vec<Walk>,
}

struct Table {
    rows: Vec<RelationRow>,
    by_class: HashMap<Walk, u32>,
}

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let raw: Vec<RawRow> = serde_json::from_str(include_str!("../data/relations.json"))
            .expect("relation table parses");
        let mut by_class = HashMap::new();
        let rows = raw
            .into_iter()
            .map(|r| {
                let representatives: Vec<Walk> = r
                    .representatives
                    .iter()
                    .map(|w| Walk::parse(&w.start, &w.word).expect("relation walk parses"))
                    .collect();
                for w in &representatives {
                    let prev = by_class.insert(w.class_key(), r.id);
                    assert!(prev.is_none(), "class listed twice");
                }
                RelationRow {
                    id: r.id,
                    relation: r.relation,
                    predicate: r.predicate,
                    profile: CycleProfile::from_array(r.profile),
                    representatives,
                }
            })
            .collect();
        Table { rows, by_class }
    })
}

pub fn relation_rows() -> &'static [RelationRow] {
    &table().rows
}

pub fn relation_row(id: u32) -> Option<&'static RelationRow> {
    relation_rows().iter().find(|r| r.id == id)
}

/// Ids of rows whose congruence holds, including the two canonical rows.
pub fn active_relations(p: &PropellerParams) -> Vec<u32> {
    relation_rows()
        .iter()
        .filter(|r| r.predicate.holds(p))
        .map(|r| r.id)
        .collect()
}

/// Per-kind 6-cycle counts predicted from the active rows. Exact for girth at
/// least 5, where every closing walk is a genuine 6-cycle.
pub fn predicted_n6(p: &PropellerParams) -> [usize; 6] {
    let mut acc = [0usize; 6];
    for id in active_relations(p) {
        let prof = relation_row(id).unwrap().profile.as_array();
        for (a, x) in acc.iter_mut().zip(prof) {
            *a += x;
        }
    }
    acc
}

/// Reads a cycle of a propeller as a walk word.
pub fn walk_of_cycle(g: &LabeledGraph, p: &PropellerParams, cycle: &[usize]) -> Result<Walk> {
    crate::cycles::check_cycle(g, cycle)?;
    let label = |v: usize| p.label(v);
    let mut steps = Vec::with_capacity(cycle.len());
    for i in 0..cycle.len() {
        let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let kind = g.edge_kind(x, y).ok_or(Error::Unlabeled)?;
        let (lx, ly) = (label(x), label(y));
        let step = match kind {
            EdgeKind::AWing => {
                if (lx.index + 1) % p.n == ly.index {
                    Step::APlus
                } else {
                    Step::AMinus
                }
            }
            EdgeKind::CWing => {
                if (lx.index + p.d) % p.n == ly.index {
                    Step::CPlus
                } else {
                    Step::CMinus
                }
            }
            EdgeKind::AFlat => Step::AFlat,
            EdgeKind::ABlade => Step::ABlade,
            EdgeKind::CBlade => Step::CBlade,
            EdgeKind::CFlat => Step::CFlat,
        };
        steps.push(step);
    }
    Ok(Walk {
        start: label(cycle[0]).class,
        steps,
    })
}

/// The row whose class contains this 6-cycle, if any.
pub fn row_of_cycle(g: &LabeledGraph, p: &PropellerParams, cycle: &[usize]) -> Result<Option<u32>> {
    let w = walk_of_cycle(g, p, cycle)?;
    Ok(table().by_class.get(&w.class_key()).copied())
}
