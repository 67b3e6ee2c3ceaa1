//! Parameter orbits under the isomorphism lemmas, the five families, and the
//! edge-transitivity classification.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::aut::{are_isomorphic, edge_transitivity_witness};
use crate::error::{Error, Result};
use crate::graph::{build_propeller, LabeledGraph, PropellerParams, VertexClass};
use crate::perm::Permutation;
use crate::schema::SchemaName;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    F1,
    F1Star,
    F2,
    F3,
    F4,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 5] = [
        FamilyTag::F1,
        FamilyTag::F1Star,
        FamilyTag::F2,
        FamilyTag::F3,
        FamilyTag::F4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::F1 => "F1",
            FamilyTag::F1Star => "F1Star",
            FamilyTag::F2 => "F2",
            FamilyTag::F3 => "F3",
            FamilyTag::F4 => "F4",
        }
    }

    /// The automorphism schema that characterizes the family.
    pub fn defining_schema(self) -> SchemaName {
        match self {
            FamilyTag::F1 => SchemaName::Sigma1,
            FamilyTag::F1Star => SchemaName::Sigma1Star,
            FamilyTag::F2 => SchemaName::Sigma2,
            FamilyTag::F3 => SchemaName::Sigma3,
            FamilyTag::F4 => SchemaName::Sigma4,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

pub const FAMILY4: [(usize, usize, usize, usize); 5] =
    [(5, 1, 2, 2), (10, 1, 2, 2), (10, 1, 7, 7), (10, 6, 2, 7), (10, 6, 7, 2)];

fn modinv(a: usize, n: usize) -> Option<usize> {
    let (mut r0, mut r1) = (n as i64, a as i64 % n as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(n as i64) as usize)
}

fn lemma_images(p: &PropellerParams) -> Vec<PropellerParams> {
    let PropellerParams { n, b, c, d } = *p;
    let mut out = vec![
        PropellerParams { n, b, c, d: n - d },
        PropellerParams { n, b: n - b, c, d },
        PropellerParams { n, b, c: n - c, d },
    ];
    if let Some(e) = modinv(d, n) {
        out.push(PropellerParams {
            n,
            b: c * e % n,
            c: b * e % n,
            d: e,
        });
    }
    out
}

/// Closure of `{p}` under `d -> -d`, `b -> -b`, `c -> -c` and, when `d` is a
/// unit, `(b, c, d) -> (ce, be, e)` with `de = 1`.
pub fn param_orbit(p: &PropellerParams) -> BTreeSet<PropellerParams> {
    let mut seen = BTreeSet::from([*p]);
    let mut queue = VecDeque::from([*p]);
    while let Some(q) = queue.pop_front() {
        for r in lemma_images(&q) {
            if seen.insert(r) {
                queue.push_back(r);
            }
        }
    }
    seen
}

pub fn canonical_tuple(p: &PropellerParams) -> PropellerParams {
    *param_orbit(p).iter().next().unwrap()
}

/// `A_i -> A_{i-b}`, an isomorphism `Pr_n(b,c,d) -> Pr_n(-b,c,d)`.
pub fn negate_b_map(p: &PropellerParams) -> (PropellerParams, Permutation) {
    let images = (0..p.vertex_count())
        .map(|v| {
            let l = p.label(v);
            match l.class {
                VertexClass::A => p.vertex(VertexClass::A, l.index as i64 - p.b as i64),
                _ => v,
            }
        })
        .collect();
    let q = PropellerParams { b: p.n - p.b, ..*p };
    (q, Permutation::new(images).expect("shift is a bijection"))
}

/// `C_i -> C_{i-c}`, an isomorphism `Pr_n(b,c,d) -> Pr_n(b,-c,d)`.
pub fn negate_c_map(p: &PropellerParams) -> (PropellerParams, Permutation) {
    let images = (0..p.vertex_count())
        .map(|v| {
            let l = p.label(v);
            match l.class {
                VertexClass::C => p.vertex(VertexClass::C, l.index as i64 - p.c as i64),
                _ => v,
            }
        })
        .collect();
    let q = PropellerParams { c: p.n - p.c, ..*p };
    (q, Permutation::new(images).expect("shift is a bijection"))
}

/// `A_i -> C_{ie}, B_i -> B_{ie}, C_i -> A_{ie}`, an isomorphism
/// `Pr_n(b,c,d) -> Pr_n(ce,be,e)`; absent when `d` is not a unit.
pub fn d_inverse_map(p: &PropellerParams) -> Option<(PropellerParams, Permutation)> {
    let e = modinv(p.d, p.n)?;
    let images = (0..p.vertex_count())
        .map(|v| {
            let l = p.label(v);
            let idx = (l.index * e) as i64;
            let class = match l.class {
                VertexClass::A => VertexClass::C,
                VertexClass::B => VertexClass::B,
                VertexClass::C => VertexClass::A,
            };
            p.vertex(class, idx)
        })
        .collect();
    let q = PropellerParams {
        n: p.n,
        b: p.c * e % p.n,
        c: p.b * e % p.n,
        d: e,
    };
    Some((q, Permutation::new(images).expect("unit scaling is a bijection")))
}

/// Membership by the family's defining parameter form, without isomorphisms.
pub fn in_family_raw(p: &PropellerParams, tag: FamilyTag) -> bool {
    let PropellerParams { n, b, c, d } = *p;
    let f1_or_f2 = |dd: usize| n % 2 == 0 && b == 2 * d % n && c == 2 % n && d * d % n == dd;
    match tag {
        FamilyTag::F1 => f1_or_f2(1 % n),
        FamilyTag::F2 => f1_or_f2(n - 1),
        FamilyTag::F1Star => {
            if !(f1_or_f2(1 % n) && n % 6 == 0 && d % 6 == 5 && 6 * d % n == 6 % n) {
                return false;
            }
            let m = n / 6;
            let three_d = 3 * d % n;
            three_d == 3 % n || (m % 2 == 0 && d % 12 == 5 && three_d == (3 * m + 3) % n)
        }
        FamilyTag::F3 => {
            n % 4 == 0
                && c == (b + n - 4 % n) % n
                && d == (2 * b + n - 3 % n) % n
                && b % 4 == 3
                && 8 * b % n == 16 % n
        }
        FamilyTag::F4 => FAMILY4.contains(&p.as_tuple()),
    }
}

pub fn raw_families(p: &PropellerParams) -> BTreeSet<FamilyTag> {
    FamilyTag::ALL.into_iter().filter(|&t| in_family_raw(p, t)).collect()
}

/// All raw members of a family with the given `n`.
pub fn raw_members(n: usize, tag: FamilyTag) -> Vec<PropellerParams> {
    PropellerParams::all_with_n(n).filter(|p| in_family_raw(p, tag)).collect()
}

/// All raw members of a family with `n <= max_n`, enumerated from the
/// family's parameter form rather than by a full sweep.
pub fn members_up_to(tag: FamilyTag, max_n: usize) -> Vec<PropellerParams> {
    if tag == FamilyTag::F4 {
        return FAMILY4
            .iter()
            .filter(|t| t.0 <= max_n)
            .map(|&(n, b, c, d)| PropellerParams { n, b, c, d })
            .collect();
    }
    let mut out = Vec::new();
    for n in 3..=max_n {
        let ni = n as i64;
        for x in 0..ni {
            let cand = match tag {
                FamilyTag::F3 => PropellerParams::reduced(n, x, x - 4, 2 * x - 3),
                _ => PropellerParams::reduced(n, 2 * x, 2, x),
            };
            if let Ok(p) = cand {
                if in_family_raw(&p, tag) {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    /// Some member of the lemma orbit passes a raw family test.
    ParameterOrbit,
    /// Found by graph isomorphism against same-order raw family members.
    IsomorphismFallback,
    /// The seeded automorphism search refuted edge-transitivity and no tier
    /// produced a family.
    BruteForce,
}

fn orbit_families(p: &PropellerParams) -> BTreeSet<FamilyTag> {
    param_orbit(p).iter().flat_map(raw_families).collect()
}

fn isomorphism_families(g: &LabeledGraph, n: usize) -> BTreeSet<FamilyTag> {
    let mut out = BTreeSet::new();
    for tag in FamilyTag::ALL {
        if raw_members(n, tag)
            .iter()
            .any(|q| are_isomorphic(g, &build_propeller(*q).expect("raw members are valid")).is_some())
        {
            out.insert(tag);
        }
    }
    out
}

fn memberships(
    p: &PropellerParams,
    g: &LabeledGraph,
    edge_transitive: bool,
) -> (BTreeSet<FamilyTag>, Method) {
    let tags = orbit_families(p);
    if !tags.is_empty() {
        return (tags, Method::ParameterOrbit);
    }
    if edge_transitive {
        let tags = isomorphism_families(g, p.n);
        if !tags.is_empty() {
            return (tags, Method::IsomorphismFallback);
        }
    }
    (BTreeSet::new(), Method::BruteForce)
}

/// Families the graph belongs to up to isomorphism.
pub fn family_memberships(p: &PropellerParams) -> Result<BTreeSet<FamilyTag>> {
    let g = build_propeller(*p)?;
    let tags = orbit_families(p);
    if !tags.is_empty() {
        return Ok(tags);
    }
    let et = edge_transitivity_witness(&g, p)?.is_some();
    Ok(if et { isomorphism_families(&g, p.n) } else { tags })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationResult {
    #[serde(flatten)]
    pub params: PropellerParams,
    pub edge_transitive: bool,
    pub families: BTreeSet<FamilyTag>,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Permutation>,
}

/// Edge-transitivity verdict plus family memberships; any disagreement
/// between the two is an error.
pub fn classify(p: &PropellerParams) -> Result<ClassificationResult> {
    let g = build_propeller(*p)?;
    classify_graph(p, &g)
}

pub fn classify_graph(p: &PropellerParams, g: &LabeledGraph) -> Result<ClassificationResult> {
    let witness = edge_transitivity_witness(g, p)?;
    let edge_transitive = witness.is_some();
    let (families, method) = memberships(p, g, edge_transitive);
    if edge_transitive == families.is_empty() {
        let names: Vec<&str> = families.iter().map(|t| t.as_str()).collect();
        return Err(Error::ClassificationInconsistency {
            params: *p,
            edge_transitive,
            families: format!("{{{}}}", names.join(",")),
        });
    }
    Ok(ClassificationResult {
        params: *p,
        edge_transitive,
        families,
        method,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::is_isomorphism;

    fn p(n: usize, b: usize, c: usize, d: usize) -> PropellerParams {
        PropellerParams::new(n, b, c, d).unwrap()
    }

    #[test]
    fn member_enumeration_matches_sweep() {
        for tag in FamilyTag::ALL {
            let swept: Vec<_> = (3..=40).flat_map(|n| raw_members(n, tag)).collect();
            assert_eq!(members_up_to(tag, 40), swept, "{tag}");
        }
    }

    #[test]
    fn orbit_examples() {
        let o = param_orbit(&p(10, 1, 3, 3));
        assert!(o.contains(&p(10, 1, 7, 7)));
        assert!(o.contains(&p(10, 1, 3, 7)));
        for q in o {
            q.validate().unwrap();
        }
    }

    #[test]
    fn lemma_maps_are_isomorphisms() {
        for n in 3..=14 {
            for t in PropellerParams::all_with_n(n) {
                let g = build_propeller(t).unwrap();
                let (q, m) = negate_b_map(&t);
                assert!(is_isomorphism(&g, &build_propeller(q).unwrap(), &m), "{t}");
                let (q, m) = negate_c_map(&t);
                assert!(is_isomorphism(&g, &build_propeller(q).unwrap(), &m), "{t}");
                if let Some((q, m)) = d_inverse_map(&t) {
                    assert!(is_isomorphism(&g, &build_propeller(q).unwrap(), &m), "{t}");
                }
            }
        }
    }

    #[test]
    fn raw_examples() {
        assert!(in_family_raw(&p(8, 2, 2, 1), FamilyTag::F1));
        assert!(in_family_raw(&p(10, 6, 2, 3), FamilyTag::F2));
        assert!(in_family_raw(&p(12, 10, 2, 5), FamilyTag::F1Star));
        assert!(!in_family_raw(&p(12, 10, 2, 11), FamilyTag::F1Star));
        assert!(in_family_raw(&p(12, 10, 2, 11), FamilyTag::F1));
        assert!(in_family_raw(&p(4, 2, 2, 1), FamilyTag::F1));
        assert_eq!(raw_families(&p(10, 6, 2, 3)), BTreeSet::from([FamilyTag::F2]));
        assert_eq!(raw_families(&p(10, 6, 2, 7)), BTreeSet::from([FamilyTag::F4]));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&p(10, 6, 2, 3)).unwrap();
        assert!(r.edge_transitive);
        assert_eq!(r.families, BTreeSet::from([FamilyTag::F2, FamilyTag::F4]));
        let r = classify(&p(7, 2, 3, 1)).unwrap();
        assert!(!r.edge_transitive && r.families.is_empty());
        assert_eq!(r.method, Method::BruteForce);
        let json = serde_json::to_value(classify(&p(5, 1, 2, 2)).unwrap()).unwrap();
        assert_eq!(json["n"], 5);
        assert_eq!(json["families"], serde_json::json!(["F4"]));
        assert_eq!(json["method"], "ParameterOrbit");
    }

    #[test]
    fn tags_parse() {
        assert_eq!("f1star".parse::<FamilyTag>().unwrap(), FamilyTag::F1Star);
        assert!("F5".parse::<FamilyTag>().is_err());
    }
}
