//! Girth, short-cycle counts through edges and arcs, successor/predecessor
//! types and edge-kind profiles of cycles.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_propeller, EdgeKind, LabeledGraph, PropellerParams};

/// Shortest cycle length. Every cycle passes through some vertex, so a BFS
/// from each vertex suffices.
pub fn girth(g: &LabeledGraph) -> Result<usize> {
    girth_from(g, 0..g.vertex_count())
}

/// Girth of a propeller: by rotational symmetry every cycle is an image of one
/// through `A_0`, `B_0` or `C_0`.
pub fn propeller_girth(g: &LabeledGraph, p: &PropellerParams) -> Result<usize> {
    girth_from(g, [0, p.n, 2 * p.n])
}

fn girth_from(g: &LabeledGraph, roots: impl IntoIterator<Item = usize>) -> Result<usize> {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    for root in roots {
        for &v in &touched {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        touched.clear();
        dist[root] = 0;
        touched.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Err(Error::NoCycle)
    } else {
        Ok(best)
    }
}

/// Number of `k`-cycles containing the path `prefix` (at least two vertices).
/// Each such cycle is counted once.
pub fn count_cycles_with_prefix(g: &LabeledGraph, prefix: &[usize], k: usize) -> usize {
    let mut count = 0;
    walk_cycles(g, prefix, k, &mut |_| count += 1);
    count
}

/// All `k`-cycles through the arc `(u, v)`, each listed once as a vertex
/// sequence starting `u, v`.
pub fn cycles_through_arc(g: &LabeledGraph, arc: (usize, usize), k: usize) -> Vec<Vec<usize>> {
    assert!((3..=8).contains(&k), "cycle length {k} outside 3..=8");
    let mut out = Vec::new();
    if !g.has_edge(arc.0, arc.1) {
        return out;
    }
    walk_cycles(g, &[arc.0, arc.1], k, &mut |c| out.push(c.to_vec()));
    out
}

fn walk_cycles(g: &LabeledGraph, prefix: &[usize], k: usize, found: &mut dyn FnMut(&[usize])) {
    if prefix.len() > k || prefix.len() < 2 {
        return;
    }
    let mut path = prefix.to_vec();
    let mut on_path = vec![false; g.vertex_count()];
    for &v in prefix {
        if on_path[v] {
            return;
        }
        on_path[v] = true;
    }
    if prefix.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return;
    }
    extend(g, &mut path, &mut on_path, k, found);
}

fn extend(
    g: &LabeledGraph,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    k: usize,
    found: &mut dyn FnMut(&[usize]),
) {
    let last = *path.last().unwrap();
    if path.len() == k {
        if g.has_edge(last, path[0]) {
            found(path);
        }
        return;
    }
    for &w in g.neighbors(last) {
        if !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend(g, path, on_path, k, found);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Counts of 3-, 4-, 5- and 6-cycles through one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortCycleCounts {
    pub n3: usize,
    pub n4: usize,
    pub n5: usize,
    pub n6: usize,
}

impl ShortCycleCounts {
    pub fn through_edge(g: &LabeledGraph, u: usize, v: usize) -> Self {
        let c = |k| count_cycles_with_prefix(g, &[u, v], k);
        ShortCycleCounts {
            n3: c(3),
            n4: c(4),
            n5: c(5),
            n6: c(6),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CycleCounts {
    pub girth: usize,
    pub per_edge: BTreeMap<EdgeKind, ShortCycleCounts>,
}

impl CycleCounts {
    pub fn n6(&self, kind: EdgeKind) -> usize {
        self.per_edge[&kind].n6
    }

    /// The common 6-cycle count when all six kinds agree.
    pub fn uniform_n6(&self) -> Option<usize> {
        let first = self.n6(EdgeKind::AWing);
        EdgeKind::ALL
            .iter()
            .all(|&k| self.n6(k) == first)
            .then_some(first)
    }
}

/// Short-cycle counts through the six representative edges.
pub fn per_edge_counts(params: &PropellerParams) -> Result<CycleCounts> {
    let g = build_propeller(*params)?;
    let per_edge = EdgeKind::ALL
        .iter()
        .map(|&k| {
            let (u, v) = k.representative(params);
            (k, ShortCycleCounts::through_edge(&g, u, v))
        })
        .collect();
    Ok(CycleCounts {
        girth: propeller_girth(&g, params)?,
        per_edge,
    })
}

/// 6-cycles through `{A_0, A_1}`; by edge-transitivity of the relevant
/// graphs this is the census's per-edge count.
pub fn wing_n6(g: &LabeledGraph) -> usize {
    count_cycles_with_prefix(g, &[0, 1], 6)
}

/// Successor and predecessor multisets of an arc, sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcType {
    pub successor: [usize; 3],
    pub predecessor: [usize; 3],
}

pub fn arc_type(g: &LabeledGraph, arc: (usize, usize)) -> Result<ArcType> {
    let gi = girth(g)?;
    if gi < 5 {
        return Err(Error::GirthTooSmall(gi));
    }
    arc_type_unchecked(g, arc)
}

/// `arc_type` without recomputing the girth; the caller guarantees girth >= 5.
pub fn arc_type_unchecked(g: &LabeledGraph, arc: (usize, usize)) -> Result<ArcType> {
    let (u, v) = arc;
    if !g.has_edge(u, v) {
        return Err(Error::NotACycle(format!("({u},{v}) is not an arc")));
    }
    let collect = |vals: Vec<usize>| -> Result<[usize; 3]> {
        let mut arr: [usize; 3] = vals
            .try_into()
            .map_err(|_| Error::InvalidParams("arc types need a 4-regular graph".into()))?;
        arr.sort_unstable();
        Ok(arr)
    };
    let successor = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != u)
        .map(|&w| count_cycles_with_prefix(g, &[u, v, w], 6))
        .collect();
    let predecessor = g
        .neighbors(u)
        .iter()
        .filter(|&&r| r != v)
        .map(|&r| count_cycles_with_prefix(g, &[r, u, v], 6))
        .collect();
    Ok(ArcType {
        successor: collect(successor)?,
        predecessor: collect(predecessor)?,
    })
}

/// Edge-kind counts `(q, r, s, t, u, v)` of a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CycleProfile {
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub u: usize,
    pub v: usize,
}

impl CycleProfile {
    pub fn from_array(a: [usize; 6]) -> Self {
        CycleProfile {
            q: a[0],
            r: a[1],
            s: a[2],
            t: a[3],
            u: a[4],
            v: a[5],
        }
    }

    pub fn as_array(&self) -> [usize; 6] {
        [self.q, self.r, self.s, self.t, self.u, self.v]
    }

    pub fn len(&self) -> usize {
        self.as_array().iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Profile of the image under `mu`: flats and blades swap.
    pub fn reflected(&self) -> Self {
        CycleProfile {
            q: self.q,
            r: self.s,
            s: self.r,
            t: self.u,
            u: self.t,
            v: self.v,
        }
    }
}

/// Checks that `cycle` is a simple cycle of `g`.
pub fn check_cycle(g: &LabeledGraph, cycle: &[usize]) -> Result<()> {
    if cycle.len() < 3 {
        return Err(Error::NotACycle(format!("{cycle:?} is too short")));
    }
    let mut seen = std::collections::HashSet::new();
    for &v in cycle {
        if v >= g.vertex_count() || !seen.insert(v) {
            return Err(Error::NotACycle(format!("{cycle:?} repeats or leaves the graph at {v}")));
        }
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if !g.has_edge(a, b) {
            return Err(Error::NotACycle(format!("{cycle:?}: {a} and {b} are not adjacent")));
        }
    }
    Ok(())
}

pub fn profile(g: &LabeledGraph, cycle: &[usize]) -> Result<CycleProfile> {
    if !g.has_edge_kinds() {
        return Err(Error::Unlabeled);
    }
    check_cycle(g, cycle)?;
    let mut counts = [0usize; 6];
    for i in 0..cycle.len() {
        let kind = g
            .edge_kind(cycle[i], cycle[(i + 1) % cycle.len()])
            .expect("propeller edges carry kinds");
        counts[kind.ordinal()] += 1;
    }
    Ok(CycleProfile::from_array(counts))
}

pub fn profile_in(params: &PropellerParams, cycle: &[usize]) -> Result<CycleProfile> {
    profile(&build_propeller(*params)?, cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_generalized_petersen, VertexClass::*};

    fn p(n: usize, b: usize, c: usize, d: usize) -> PropellerParams {
        PropellerParams::new(n, b, c, d).unwrap()
    }

    #[test]
    fn small_girths() {
        let g = |t: PropellerParams| girth(&build_propeller(t).unwrap()).unwrap();
        assert_eq!(g(p(5, 1, 2, 2)), 3);
        assert_eq!(g(p(4, 2, 2, 1)), 4);
        assert_eq!(girth(&build_generalized_petersen(5, 2).unwrap()).unwrap(), 5);
        let path = LabeledGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(girth(&path), Err(Error::NoCycle));
    }

    #[test]
    fn propeller_girth_matches_full_bfs() {
        for n in 3..=16 {
            for t in PropellerParams::all_with_n(n) {
                let g = build_propeller(t).unwrap();
                let full = girth(&g).unwrap();
                assert!(full <= 6, "{t}");
                assert_eq!(propeller_girth(&g, &t).unwrap(), full, "{t}");
            }
        }
    }

    #[test]
    fn canonical_cycle_is_found() {
        let t = p(23, 5, 7, 3);
        let g = build_propeller(t).unwrap();
        let cycles = cycles_through_arc(&g, (0, 1), 6);
        let canon = vec![
            t.vertex(A, 0),
            t.vertex(A, 1),
            t.vertex(B, 1),
            t.vertex(A, 6),
            t.vertex(A, 5),
            t.vertex(B, 0),
        ];
        assert!(cycles.contains(&canon));
        let prof = profile(&g, &canon).unwrap();
        assert_eq!(prof.as_array(), [2, 2, 2, 0, 0, 0]);
        let c_canon = [
            t.vertex(C, 0),
            t.vertex(C, 3),
            t.vertex(B, 3),
            t.vertex(C, 10),
            t.vertex(C, 7),
            t.vertex(B, 0),
        ];
        assert_eq!(profile(&g, &c_canon).unwrap().as_array(), [0, 0, 0, 2, 2, 2]);
    }

    #[test]
    fn profile_rejects_non_cycles() {
        let g = build_propeller(p(9, 2, 4, 2)).unwrap();
        assert!(matches!(profile(&g, &[0, 1, 2]), Err(Error::NotACycle(_))));
        let pg = build_generalized_petersen(5, 2).unwrap();
        assert_eq!(profile(&pg, &[0, 1, 2, 3, 4]), Err(Error::Unlabeled));
    }

    #[test]
    fn arc_type_needs_girth_five() {
        let g = build_propeller(p(5, 1, 2, 2)).unwrap();
        assert_eq!(arc_type(&g, (0, 1)), Err(Error::GirthTooSmall(3)));
    }

    #[test]
    fn type_sums_equal_arc_count() {
        for t in [p(23, 5, 7, 3), p(40, 10, 2, 5), p(31, 6, 2, 3)] {
            let g = build_propeller(t).unwrap();
            for (u, v) in g.edges() {
                for arc in [(u, v), (v, u)] {
                    let ty = arc_type(&g, arc).unwrap();
                    let total = count_cycles_with_prefix(&g, &[arc.0, arc.1], 6);
                    assert_eq!(ty.successor.iter().sum::<usize>(), total);
                    assert_eq!(ty.predecessor.iter().sum::<usize>(), total);
                }
            }
        }
    }
}
