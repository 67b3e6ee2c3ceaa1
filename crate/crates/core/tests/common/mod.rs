//! Naive reference implementations used as test oracles. Nothing here calls
//! into the search, refinement or cycle code under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use propeller_core::graph::{LabeledGraph, PropellerParams};

pub fn pr(n: usize, b: usize, c: usize, d: usize) -> PropellerParams {
    PropellerParams::new(n, b, c, d).unwrap()
}

/// Edge set of `Pr_n(b,c,d)` written straight from the definition, with
/// `A_i = i`, `B_i = n+i`, `C_i = 2n+i`.
pub fn definition_edges(n: usize, b: usize, c: usize, d: usize) -> BTreeSet<(usize, usize)> {
    let a = |i: usize| i % n;
    let bb = |i: usize| n + i % n;
    let cc = |i: usize| 2 * n + i % n;
    let mut out = BTreeSet::new();
    for i in 0..n {
        for (u, v) in [
            (a(i), a(i + 1)),
            (a(i), bb(i)),
            (bb(i), a(i + b)),
            (bb(i), cc(i + c)),
            (cc(i), bb(i)),
            (cc(i), cc(i + d)),
        ] {
            out.insert((u.min(v), u.max(v)));
        }
    }
    out
}

pub struct Adj {
    pub n: usize,
    pub m: Vec<Vec<bool>>,
    pub nbrs: Vec<Vec<usize>>,
}

impl Adj {
    pub fn of(g: &LabeledGraph) -> Adj {
        let n = g.vertex_count();
        let mut m = vec![vec![false; n]; n];
        let mut nbrs = vec![Vec::new(); n];
        for (u, v) in g.edges() {
            m[u][v] = true;
            m[v][u] = true;
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        Adj { n, m, nbrs }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for u in 0..self.n {
            for &v in &self.nbrs[u] {
                if u < v {
                    e.push((u, v));
                }
            }
        }
        e
    }
}

/// BFS order from `x` that visits `y` second; every later vertex has an
/// earlier neighbour (the graph must be connected).
fn bfs_order(a: &Adj, x: usize, y: usize) -> Vec<(usize, usize)> {
    let mut seen = vec![false; a.n];
    let mut order = vec![(x, x), (y, x)];
    seen[x] = true;
    seen[y] = true;
    let mut q = VecDeque::from([x, y]);
    while let Some(u) = q.pop_front() {
        for &w in &a.nbrs[u] {
            if !seen[w] {
                seen[w] = true;
                order.push((w, u));
                q.push_back(w);
            }
        }
    }
    order
}

/// Plain backtracking: map vertices in BFS order, choosing each image among
/// the unused neighbours of its parent's image and checking adjacency and
/// non-adjacency against everything mapped so far.
fn extend(a: &Adj, order: &[(usize, usize)], k: usize, img: &mut [usize], used: &mut [bool], on_leaf: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == order.len() {
        return on_leaf(img);
    }
    let (w, parent) = order[k];
    let cands = a.nbrs[img[parent]].clone();
    for t in cands {
        if used[t] {
            continue;
        }
        let ok = order[..k].iter().all(|&(x, _)| a.m[w][x] == a.m[t][img[x]]);
        if !ok {
            continue;
        }
        img[w] = t;
        used[t] = true;
        let stop = extend(a, order, k + 1, img, used, on_leaf);
        used[t] = false;
        img[w] = usize::MAX;
        if stop {
            return true;
        }
    }
    false
}

fn search_arc(a: &Adj, from: (usize, usize), to: (usize, usize), on_leaf: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let order = bfs_order(a, from.0, from.1);
    if order.len() != a.n {
        return false;
    }
    let mut img = vec![usize::MAX; a.n];
    let mut used = vec![false; a.n];
    img[from.0] = to.0;
    img[from.1] = to.1;
    used[to.0] = true;
    used[to.1] = true;
    if to.0 == to.1 || a.m[from.0][from.1] != a.m[to.0][to.1] {
        return false;
    }
    extend(a, &order, 2, &mut img, &mut used, on_leaf)
}

/// An automorphism sending arc `from` to arc `to`, if one exists.
pub fn naive_arc_map(a: &Adj, from: (usize, usize), to: (usize, usize)) -> Option<Vec<usize>> {
    let mut found = None;
    search_arc(a, from, to, &mut |img| {
        found = Some(img.to_vec());
        true
    });
    found
}

/// Edge-transitivity by trying to send the first edge onto every edge.
pub fn naive_is_edge_transitive(g: &LabeledGraph) -> bool {
    let a = Adj::of(g);
    let edges = a.edges();
    let e0 = edges[0];
    edges
        .iter()
        .all(|&(u, v)| naive_arc_map(&a, e0, (u, v)).is_some() || naive_arc_map(&a, e0, (v, u)).is_some())
}

/// Every automorphism of a connected graph, by enumerating all images of one arc.
pub fn naive_automorphism_count(g: &LabeledGraph) -> u64 {
    let a = Adj::of(g);
    let x = 0;
    let y = a.nbrs[0][0];
    let mut count = 0u64;
    for s in 0..a.n {
        for &t in &a.nbrs[s].clone() {
            search_arc(&a, (x, y), (s, t), &mut |_| {
                count += 1;
                false
            });
        }
    }
    count
}

/// Number of `k`-cycles through the edge `{u, v}`, by extending simple paths
/// from `v` until they return to `u`.
pub fn naive_cycles_through_edge(g: &LabeledGraph, u: usize, v: usize, k: usize) -> usize {
    let a = Adj::of(g);
    let mut on = vec![false; a.n];
    on[u] = true;
    on[v] = true;
    fn go(a: &Adj, at: usize, target: usize, left: usize, on: &mut [bool]) -> usize {
        if left == 1 {
            return a.m[at][target] as usize;
        }
        let mut total = 0;
        for &w in &a.nbrs[at] {
            if !on[w] {
                on[w] = true;
                total += go(a, w, target, left - 1, on);
                on[w] = false;
            }
        }
        total
    }
    go(&a, v, u, k - 1, &mut on)
}

/// Shortest cycle length, or `None` for a forest.
pub fn naive_girth(g: &LabeledGraph) -> Option<usize> {
    let edges: Vec<_> = g.edges().collect();
    (3..=g.vertex_count()).find(|&k| edges.iter().any(|&(u, v)| naive_cycles_through_edge(g, u, v, k) > 0))
}

/// graph6 encoding of the upper triangle, column by column.
pub fn naive_graph6(g: &LabeledGraph) -> String {
    let n = g.vertex_count();
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8);
        s.push((v + 63) as char);
    }
    s
}
