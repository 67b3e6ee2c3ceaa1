//! Automorphism and isomorphism search by individualization and colour
//! refinement, plus full automorphism groups via a stabilizer chain.

use std::collections::VecDeque;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{build_propeller, LabeledGraph, PropellerParams, VertexClass};
use crate::perm::{is_isomorphism, Permutation};

/// Partial vertex map given as `(source, image)` pairs.
pub type PartialMap = Vec<(usize, usize)>;

/// Joint colouring of two graphs of the same order. Colours are named by
/// their refinement signature so they mean the same thing on both sides.
#[derive(Clone)]
struct Coloring {
    g: Vec<u32>,
    h: Vec<u32>,
    classes: usize,
}

struct Engine<'a> {
    g: &'a LabeledGraph,
    h: &'a LabeledGraph,
}

impl<'a> Engine<'a> {
    fn new(g: &'a LabeledGraph, h: &'a LabeledGraph) -> Self {
        Engine { g, h }
    }

    fn initial(&self) -> Coloring {
        Coloring {
            g: vec![0; self.g.vertex_count()],
            h: vec![0; self.h.vertex_count()],
            classes: 1,
        }
    }

    /// Refines to the coarsest equitable colouring. Returns false when the
    /// two sides disagree on some colour class size.
    fn refine(&self, col: &mut Coloring) -> bool {
        let nv = self.g.vertex_count();
        let mut sig: Vec<Vec<u32>> = Vec::with_capacity(2 * nv);
        loop {
            sig.clear();
            for (graph, colors) in [(self.g, &col.g), (self.h, &col.h)] {
                for v in 0..nv {
                    let mut s = Vec::with_capacity(graph.degree(v) + 1);
                    s.push(colors[v]);
                    let start = s.len();
                    s.extend(graph.neighbors(v).iter().map(|&w| colors[w]));
                    s[start..].sort_unstable();
                    sig.push(s);
                }
            }
            let mut order: Vec<usize> = (0..2 * nv).collect();
            order.sort_by(|&x, &y| sig[x].cmp(&sig[y]));
            let mut ids = vec![0u32; 2 * nv];
            let mut next = 0u32;
            let mut balance = 0i64;
            for (k, &x) in order.iter().enumerate() {
                if k > 0 && sig[x] != sig[order[k - 1]] {
                    if balance != 0 {
                        return false;
                    }
                    next += 1;
                }
                balance += if x < nv { 1 } else { -1 };
                ids[x] = next;
            }
            if balance != 0 {
                return false;
            }
            let classes = next as usize + 1;
            col.g.copy_from_slice(&ids[..nv]);
            col.h.copy_from_slice(&ids[nv..]);
            if classes == col.classes {
                return true;
            }
            col.classes = classes;
        }
    }

    fn individualize(col: &mut Coloring, v: usize, w: usize) {
        let fresh = col.classes as u32;
        col.g[v] = fresh;
        col.h[w] = fresh;
        col.classes += 1;
    }

    /// Depth-first search for an isomorphism compatible with `col`.
    fn search(&self, mut col: Coloring) -> Option<Permutation> {
        if !self.refine(&mut col) {
            return None;
        }
        let nv = self.g.vertex_count();
        if col.classes == nv {
            let mut pos = vec![0; nv];
            for (w, &c) in col.h.iter().enumerate() {
                pos[c as usize] = w;
            }
            let images: Vec<usize> = col.g.iter().map(|&c| pos[c as usize]).collect();
            let perm = Permutation::new(images).ok()?;
            return is_isomorphism(self.g, self.h, &perm).then_some(perm);
        }
        let mut size = vec![0usize; col.classes];
        for &c in &col.g {
            size[c as usize] += 1;
        }
        let v = (0..nv).find(|&v| size[col.g[v] as usize] > 1).unwrap();
        let target = col.g[v];
        for w in (0..nv).filter(|&w| col.h[w] == target) {
            let mut next = col.clone();
            Self::individualize(&mut next, v, w);
            if let Some(p) = self.search(next) {
                return Some(p);
            }
        }
        None
    }

    fn seeded(&self, seed: &[(usize, usize)]) -> Option<Permutation> {
        if self.g.vertex_count() != self.h.vertex_count() || self.g.edge_count() != self.h.edge_count() {
            return None;
        }
        let mut col = self.initial();
        if !self.refine(&mut col) {
            return None;
        }
        for &(v, w) in seed {
            if col.g[v] != col.h[w] {
                return None;
            }
            Self::individualize(&mut col, v, w);
        }
        self.search(col)
    }
}

fn check_seed(n: usize, seed: &[(usize, usize)]) -> Result<()> {
    let mut src = vec![false; n];
    let mut dst = vec![false; n];
    for &(v, w) in seed {
        if v >= n || w >= n {
            return Err(Error::InvalidParams(format!("seed pair ({v},{w}) out of range")));
        }
        if src[v] || dst[w] {
            return Err(Error::InvalidParams(format!("seed is not injective at ({v},{w})")));
        }
        src[v] = true;
        dst[w] = true;
    }
    Ok(())
}

/// An isomorphism `g -> h` agreeing with `seed`, if one exists. The search
/// order depends only on vertex ids, so the witness is reproducible.
pub fn find_isomorphism_extending(
    g: &LabeledGraph,
    h: &LabeledGraph,
    seed: &[(usize, usize)],
) -> Result<Option<Permutation>> {
    check_seed(g.vertex_count().max(h.vertex_count()), seed)?;
    if seed.iter().any(|&(v, w)| v >= g.vertex_count() || w >= h.vertex_count()) {
        return Err(Error::InvalidParams("seed leaves the graph".into()));
    }
    Ok(Engine::new(g, h).seeded(seed))
}

/// An automorphism of `g` agreeing with `seed`, if one exists.
pub fn find_automorphism_extending(g: &LabeledGraph, seed: &[(usize, usize)]) -> Result<Option<Permutation>> {
    find_isomorphism_extending(g, g, seed)
}

pub fn are_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> Option<Permutation> {
    Engine::new(g, h).seeded(&[])
}

/// The wing-to-flat test: an automorphism fixing `A_0` and sending `A_1` to
/// `B_0` exists iff the graph is edge-transitive.
pub fn is_edge_transitive(params: &PropellerParams) -> Result<Option<Permutation>> {
    let g = build_propeller(*params)?;
    edge_transitivity_witness(&g, params)
}

/// As [`is_edge_transitive`] on an already built propeller.
pub fn edge_transitivity_witness(g: &LabeledGraph, params: &PropellerParams) -> Result<Option<Permutation>> {
    let a0 = params.vertex(VertexClass::A, 0);
    let a1 = params.vertex(VertexClass::A, 1);
    let b0 = params.vertex(VertexClass::B, 0);
    find_automorphism_extending(g, &[(a0, a0), (a1, b0)])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
    pub vertex_orbits: Vec<Vec<usize>>,
    /// Base points and the orbit length of each under the stabilizer of its
    /// predecessors; the order is the product of these lengths.
    pub base: Vec<usize>,
    pub basic_orbit_sizes: Vec<usize>,
    degree: usize,
}

fn orbit_of(gens: &[Permutation], start: usize, degree: usize) -> Vec<bool> {
    let mut seen = vec![false; degree];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Full automorphism group via a stabilizer chain along a refinement base.
pub fn aut_group(g: &LabeledGraph) -> AutGroup {
    let nv = g.vertex_count();
    let engine = Engine::new(g, g);

    // choose a base: individualize until refinement is discrete
    let mut base = Vec::new();
    let mut level_colors = Vec::new();
    let mut col = engine.initial();
    loop {
        let ok = engine.refine(&mut col);
        debug_assert!(ok);
        level_colors.push(col.g.clone());
        if col.classes == nv {
            break;
        }
        let mut size = vec![0usize; col.classes];
        for &c in &col.g {
            size[c as usize] += 1;
        }
        let v = (0..nv).find(|&v| size[col.g[v] as usize] > 1).unwrap();
        base.push(v);
        Engine::individualize(&mut col, v, v);
    }

    let mut generators: Vec<Permutation> = Vec::new();
    let mut basic_orbit_sizes = vec![0; base.len()];
    for k in (0..base.len()).rev() {
        let b = base[k];
        let colors = &level_colors[k];
        let fixed: Vec<(usize, usize)> = base[..k].iter().map(|&x| (x, x)).collect();
        let mut orbit = orbit_of(&generators, b, nv);
        for w in 0..nv {
            if orbit[w] || colors[w] != colors[b] {
                continue;
            }
            let mut seed = fixed.clone();
            seed.push((b, w));
            if let Some(p) = engine.seeded(&seed) {
                generators.push(p);
                orbit = orbit_of(&generators, b, nv);
            }
        }
        basic_orbit_sizes[k] = orbit.iter().filter(|&&x| x).count();
    }

    let order = basic_orbit_sizes
        .iter()
        .fold(BigUint::from(1u32), |acc, &s| acc * BigUint::from(s));
    let vertex_orbits = orbits(&generators, nv);
    AutGroup {
        generators,
        order,
        vertex_orbits,
        base,
        basic_orbit_sizes,
        degree: nv,
    }
}

fn orbits(gens: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for x in 0..degree {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; degree];
    for x in 0..degree {
        let r = find(&mut parent, x);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(x);
    }
    out
}

impl AutGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_orbits.len() == 1
    }

    /// Orbits on undirected edges, each edge written `(u, v)` with `u < v`.
    pub fn edge_orbits(&self, g: &LabeledGraph) -> Vec<Vec<(usize, usize)>> {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let index = |u: usize, v: usize| {
            let key = (u.min(v), u.max(v));
            edges.binary_search(&key).expect("automorphisms map edges to edges")
        };
        let perms: Vec<Permutation> = self
            .generators
            .iter()
            .map(|p| {
                let images = edges.iter().map(|&(u, v)| index(p.apply(u), p.apply(v))).collect();
                Permutation::new(images).expect("edge action is a bijection")
            })
            .collect();
        orbits(&perms, edges.len())
            .into_iter()
            .map(|o| o.into_iter().map(|i| edges[i]).collect())
            .collect()
    }

    pub fn is_edge_transitive(&self, g: &LabeledGraph) -> bool {
        self.edge_orbits(g).len() <= 1
    }

    /// Orbit of one arc under the generators.
    pub fn arc_orbit(&self, arc: (usize, usize)) -> Vec<(usize, usize)> {
        arc_orbit(&self.generators, arc)
    }

    pub fn is_arc_transitive(&self, g: &LabeledGraph) -> bool {
        match g.edges().next() {
            None => true,
            Some(e) => self.arc_orbit(e).len() == 2 * g.edge_count(),
        }
    }

    pub fn report(&self) -> GroupReport {
        let mut orbit_sizes: Vec<usize> = self.vertex_orbits.iter().map(Vec::len).collect();
        orbit_sizes.sort_unstable();
        GroupReport {
            order: self.order.clone(),
            generator_count: self.generators.len(),
            orbit_sizes,
        }
    }
}

/// Orbit of `arc` under the group generated by `gens`.
pub fn arc_orbit(gens: &[Permutation], arc: (usize, usize)) -> Vec<(usize, usize)> {
    let mut seen = std::collections::BTreeSet::from([arc]);
    let mut queue = VecDeque::from([arc]);
    while let Some((u, v)) = queue.pop_front() {
        for g in gens {
            let img = (g.apply(u), g.apply(v));
            if seen.insert(img) {
                queue.push_back(img);
            }
        }
    }
    seen.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupReport {
    #[serde(serialize_with = "as_decimal")]
    pub order: BigUint,
    pub generator_count: usize,
    pub orbit_sizes: Vec<usize>,
}

fn as_decimal<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

pub fn is_vertex_transitive(g: &LabeledGraph) -> bool {
    aut_group(g).is_vertex_transitive()
}

pub fn is_arc_transitive(g: &LabeledGraph) -> bool {
    aut_group(g).is_arc_transitive(g)
}
