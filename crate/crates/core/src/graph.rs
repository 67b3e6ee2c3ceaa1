//! Graph construction: propeller graphs and the related families used to
//! cross-check them (generalized Petersen graphs, their line graphs, wreath
//! graphs and generalized propellers).
//!
//! Propeller vertices serialize as `A_0..A_{n-1}, B_0..B_{n-1}, C_0..C_{n-1}`,
//! i.e. vertex `X_i` has id `class * n + i`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters `(n, b, c, d)` of a propeller graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PropellerParams {
    pub n: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl PropellerParams {
    pub fn new(n: usize, b: usize, c: usize, d: usize) -> Result<Self> {
        let p = PropellerParams { n, b, c, d };
        p.validate()?;
        Ok(p)
    }

    /// Builds parameters from arbitrary integers, reducing `b`, `c`, `d` mod `n`.
    pub fn reduced(n: usize, b: i64, c: i64, d: i64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!("n = {n} must be at least 3")));
        }
        let m = n as i64;
        Self::new(
            n,
            b.rem_euclid(m) as usize,
            c.rem_euclid(m) as usize,
            d.rem_euclid(m) as usize,
        )
    }

    pub fn validate(&self) -> Result<()> {
        let PropellerParams { n, b, c, d } = *self;
        if n < 3 {
            return Err(Error::InvalidParams(format!("n = {n} must be at least 3")));
        }
        for (name, v) in [("b", b), ("c", c), ("d", d)] {
            if v == 0 || v >= n {
                return Err(Error::InvalidParams(format!(
                    "{name} = {v} must lie strictly between 0 and n = {n}"
                )));
            }
        }
        if 2 * d == n {
            return Err(Error::InvalidParams(format!("d = {d} equals n/2")));
        }
        Ok(())
    }

    /// Every valid tuple with the given `n`, in lexicographic `(b, c, d)` order.
    pub fn all_with_n(n: usize) -> impl Iterator<Item = PropellerParams> {
        (1..n).flat_map(move |b| {
            (1..n).flat_map(move |c| {
                (1..n)
                    .filter(move |&d| 2 * d != n)
                    .map(move |d| PropellerParams { n, b, c, d })
            })
        })
    }

    pub fn vertex_count(&self) -> usize {
        3 * self.n
    }

    /// Vertex id of `X_index` with the index reduced mod `n`.
    pub fn vertex(&self, class: VertexClass, index: i64) -> usize {
        class.ordinal() * self.n + index.rem_euclid(self.n as i64) as usize
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        VertexLabel {
            class: VertexClass::from_ordinal(v / self.n),
            index: v % self.n,
        }
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.n, self.b, self.c, self.d)
    }
}

impl fmt::Display for PropellerParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pr_{}({},{},{})", self.n, self.b, self.c, self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    A,
    B,
    C,
}

impl VertexClass {
    pub const ALL: [VertexClass; 3] = [VertexClass::A, VertexClass::B, VertexClass::C];

    pub fn ordinal(self) -> usize {
        match self {
            VertexClass::A => 0,
            VertexClass::B => 1,
            VertexClass::C => 2,
        }
    }

    pub fn from_ordinal(i: usize) -> Self {
        match i {
            0 => VertexClass::A,
            1 => VertexClass::B,
            2 => VertexClass::C,
            _ => panic!("vertex class ordinal {i} out of range"),
        }
    }

    pub fn letter(self) -> char {
        match self {
            VertexClass::A => 'A',
            VertexClass::B => 'B',
            VertexClass::C => 'C',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    pub class: VertexClass,
    pub index: usize,
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class.letter(), self.index)
    }
}

/// The six edge kinds of a propeller graph, in definition order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    AWing,
    AFlat,
    ABlade,
    CBlade,
    CFlat,
    CWing,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 6] = [
        EdgeKind::AWing,
        EdgeKind::AFlat,
        EdgeKind::ABlade,
        EdgeKind::CBlade,
        EdgeKind::CFlat,
        EdgeKind::CWing,
    ];

    pub fn ordinal(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            EdgeKind::AWing => "AWing",
            EdgeKind::AFlat => "AFlat",
            EdgeKind::ABlade => "ABlade",
            EdgeKind::CBlade => "CBlade",
            EdgeKind::CFlat => "CFlat",
            EdgeKind::CWing => "CWing",
        }
    }

    /// Image of the kind under the reflection `mu`: flats and blades swap.
    pub fn reflected(self) -> Self {
        match self {
            EdgeKind::AFlat => EdgeKind::ABlade,
            EdgeKind::ABlade => EdgeKind::AFlat,
            EdgeKind::CFlat => EdgeKind::CBlade,
            EdgeKind::CBlade => EdgeKind::CFlat,
            k => k,
        }
    }

    /// Representative edge `{A_0,A_1}, {A_0,B_0}, {B_0,A_b}, {B_0,C_c}, {C_0,B_0}, {C_0,C_d}`.
    pub fn representative(self, p: &PropellerParams) -> (usize, usize) {
        use VertexClass::*;
        let (b, c, d) = (p.b as i64, p.c as i64, p.d as i64);
        match self {
            EdgeKind::AWing => (p.vertex(A, 0), p.vertex(A, 1)),
            EdgeKind::AFlat => (p.vertex(A, 0), p.vertex(B, 0)),
            EdgeKind::ABlade => (p.vertex(B, 0), p.vertex(A, b)),
            EdgeKind::CBlade => (p.vertex(B, 0), p.vertex(C, c)),
            EdgeKind::CFlat => (p.vertex(C, 0), p.vertex(B, 0)),
            EdgeKind::CWing => (p.vertex(C, 0), p.vertex(C, d)),
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which constructor produced a graph; drives vertex naming and relabeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphKind {
    Propeller(PropellerParams),
    GeneralizedPropeller { n: usize, a: usize, b: usize, c: usize, d: usize },
    GeneralizedPetersen { n: usize, k: usize },
    /// Line graph of `GP(n, k)` with vertices relabeled to `A_i, B_i, C_i`.
    PetersenLine { n: usize, k: usize },
    Wreath { n: usize },
    Generic,
}

/// Simple undirected graph with sorted adjacency lists and optional
/// propeller labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    adjacency: Vec<Vec<usize>>,
    /// Sorted `(u, v, kind)` with `u < v`; present only for propeller-built graphs.
    edge_kinds: Option<Vec<(usize, usize, EdgeKind)>>,
    kind: GraphKind,
}

fn normalize(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl LabeledGraph {
    /// Builds a simple graph, rejecting loops and repeated edges.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges_with_kind(vertex_count, edges, GraphKind::Generic)
    }

    fn from_edges_with_kind(
        vertex_count: usize,
        edges: &[(usize, usize)],
        kind: GraphKind,
    ) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidParams(format!(
                    "edge ({u},{v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParams(format!("loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if nbrs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParams(format!("parallel edge at vertex {v}")));
            }
        }
        Ok(LabeledGraph {
            adjacency,
            edge_kinds: None,
            kind,
        })
    }

    fn from_kinded_edges(
        vertex_count: usize,
        edges: &[(usize, usize, EdgeKind)],
        kind: GraphKind,
    ) -> Result<Self> {
        let plain: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let mut g = Self::from_edges_with_kind(vertex_count, &plain, kind)?;
        let mut kinds: Vec<(usize, usize, EdgeKind)> = edges
            .iter()
            .map(|&(u, v, k)| {
                let (x, y) = normalize(u, v);
                (x, y, k)
            })
            .collect();
        kinds.sort_unstable();
        g.edge_kinds = Some(kinds);
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adjacency.iter().all(|n| n.len() == k)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn has_edge_kinds(&self) -> bool {
        self.edge_kinds.is_some()
    }

    pub fn edge_kind(&self, u: usize, v: usize) -> Option<EdgeKind> {
        let (x, y) = normalize(u, v);
        let kinds = self.edge_kinds.as_ref()?;
        kinds
            .binary_search_by(|&(a, b, _)| (a, b).cmp(&(x, y)))
            .ok()
            .map(|i| kinds[i].2)
    }

    pub fn propeller_params(&self) -> Option<PropellerParams> {
        match self.kind {
            GraphKind::Propeller(p) => Some(p),
            _ => None,
        }
    }

    /// `A/B/C` label of a vertex, for graphs laid out in propeller order.
    pub fn label(&self, v: usize) -> Option<VertexLabel> {
        let n = match self.kind {
            GraphKind::Propeller(p) => p.n,
            GraphKind::GeneralizedPropeller { n, .. } | GraphKind::PetersenLine { n, .. } => n,
            _ => return None,
        };
        Some(VertexLabel {
            class: VertexClass::from_ordinal(v / n),
            index: v % n,
        })
    }

    pub fn vertex_name(&self, v: usize) -> String {
        if let Some(l) = self.label(v) {
            return l.to_string();
        }
        match self.kind {
            GraphKind::GeneralizedPetersen { n, .. } => {
                if v < n {
                    format!("u{v}")
                } else {
                    format!("v{}", v - n)
                }
            }
            GraphKind::Wreath { .. } => format!("x{}_{}", v / 2, v % 2),
            _ => v.to_string(),
        }
    }

    pub fn title(&self) -> String {
        match self.kind {
            GraphKind::Propeller(p) => p.to_string(),
            GraphKind::GeneralizedPropeller { n, a, b, c, d } => format!("GPr_{n}({a},{b},{c},{d})"),
            GraphKind::GeneralizedPetersen { n, k } => format!("GP({n},{k})"),
            GraphKind::PetersenLine { n, k } => format!("L(GP({n},{k}))"),
            GraphKind::Wreath { n } => format!("W({n},2)"),
            GraphKind::Generic => "G".to_string(),
        }
    }

    /// Normalized edge list, used for exact (not up-to-isomorphism) comparison.
    pub fn edge_set(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Image of the graph under a vertex relabeling `v -> map[v]`.
    pub fn relabeled(&self, map: &[usize]) -> Result<LabeledGraph> {
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (map[u], map[v])).collect();
        LabeledGraph::from_edges(self.vertex_count(), &edges)
    }
}

/// `Pr_n(b, c, d)`.
pub fn build_propeller(params: PropellerParams) -> Result<LabeledGraph> {
    params.validate()?;
    let edges = propeller_edges(&params, 1);
    let g = LabeledGraph::from_kinded_edges(3 * params.n, &edges, GraphKind::Propeller(params))?;
    debug_assert!(g.is_regular(4) && g.is_connected());
    Ok(g)
}

fn propeller_edges(p: &PropellerParams, wing_step: i64) -> Vec<(usize, usize, EdgeKind)> {
    use VertexClass::*;
    let (b, c, d) = (p.b as i64, p.c as i64, p.d as i64);
    let mut edges = Vec::with_capacity(6 * p.n);
    for i in 0..p.n as i64 {
        edges.push((p.vertex(A, i), p.vertex(A, i + wing_step), EdgeKind::AWing));
        edges.push((p.vertex(A, i), p.vertex(B, i), EdgeKind::AFlat));
        edges.push((p.vertex(B, i), p.vertex(A, i + b), EdgeKind::ABlade));
        edges.push((p.vertex(B, i), p.vertex(C, i + c), EdgeKind::CBlade));
        edges.push((p.vertex(C, i), p.vertex(B, i), EdgeKind::CFlat));
        edges.push((p.vertex(C, i), p.vertex(C, i + d), EdgeKind::CWing));
    }
    edges
}

/// `GPr_n(a, b, c, d)`: a propeller whose A-wings join `A_i` to `A_{i+a}`.
pub fn build_generalized_propeller(
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> Result<LabeledGraph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("n = {n} must be at least 3")));
    }
    for (name, v) in [("a", a), ("b", b), ("c", c), ("d", d)] {
        if v == 0 || v >= n {
            return Err(Error::InvalidParams(format!(
                "{name} = {v} must lie strictly between 0 and n = {n}"
            )));
        }
    }
    let p = PropellerParams { n, b, c, d };
    let edges = propeller_edges(&p, a as i64);
    LabeledGraph::from_kinded_edges(3 * n, &edges, GraphKind::GeneralizedPropeller { n, a, b, c, d })
        .map_err(|e| Error::InvalidParams(format!("GPr_{n}({a},{b},{c},{d}) is not simple: {e}")))
}

/// Generalized Petersen graph `GP(n, k)` on `u_0..u_{n-1}, v_0..v_{n-1}`.
pub fn build_generalized_petersen(n: usize, k: usize) -> Result<LabeledGraph> {
    if n < 3 || k == 0 || k >= n || 2 * k == n {
        return Err(Error::InvalidParams(format!(
            "GP({n},{k}) requires n >= 3, 0 < k < n and k != n/2"
        )));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    LabeledGraph::from_edges_with_kind(2 * n, &edges, GraphKind::GeneralizedPetersen { n, k })
}

/// Wreath graph `W(n, 2)`: vertex `(i, layer)` has id `2i + layer`.
pub fn build_wreath(n: usize) -> Result<LabeledGraph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("W({n},2) requires n >= 3")));
    }
    let mut edges = Vec::with_capacity(4 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        for a in 0..2 {
            for b in 0..2 {
                edges.push((2 * i + a, 2 * j + b));
            }
        }
    }
    LabeledGraph::from_edges_with_kind(2 * n, &edges, GraphKind::Wreath { n })
}

/// Line graph. For `GP(n, k)` the vertices are laid out as `A_i = {u_i,u_{i+1}}`,
/// `B_i = {u_i,v_i}`, `C_i = {v_i,v_{i+k}}`; otherwise they follow the sorted
/// edge order of `g`.
pub fn line_graph(g: &LabeledGraph) -> Result<LabeledGraph> {
    let (order, kind): (Vec<(usize, usize)>, GraphKind) = match g.kind() {
        GraphKind::GeneralizedPetersen { n, k } => {
            let mut order = Vec::with_capacity(3 * n);
            order.extend((0..n).map(|i| normalize(i, (i + 1) % n)));
            order.extend((0..n).map(|i| (i, n + i)));
            order.extend((0..n).map(|i| normalize(n + i, n + (i + k) % n)));
            (order, GraphKind::PetersenLine { n, k })
        }
        _ => (g.edges().collect(), GraphKind::Generic),
    };
    let index: HashMap<(usize, usize), usize> =
        order.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    debug_assert_eq!(index.len(), g.edge_count());
    let mut edges = Vec::new();
    for v in 0..g.vertex_count() {
        let incident: Vec<usize> = g.neighbors(v).iter().map(|&w| index[&normalize(v, w)]).collect();
        for (i, &x) in incident.iter().enumerate() {
            for &y in &incident[i + 1..] {
                edges.push((x, y));
            }
        }
    }
    LabeledGraph::from_edges_with_kind(order.len(), &edges, kind)
}

/// Quotient of a propeller of shape `(2m, m+1, m+d, d)` by the blocks
/// `{X_i, X_{i+m}}`: the parameters `(m, 1, d mod m, d mod m)`.
pub fn quotient_case24(params: PropellerParams) -> Result<PropellerParams> {
    let PropellerParams { n, b, c, d } = params;
    if n % 2 != 0 {
        return Err(Error::Shape(params, "n must be even".into()));
    }
    let m = n / 2;
    if b != (m + 1) % n {
        return Err(Error::Shape(params, format!("b must be m+1 = {}", (m + 1) % n)));
    }
    if c != (m + d) % n {
        return Err(Error::Shape(params, format!("c must be m+d = {}", (m + d) % n)));
    }
    let q = d % m;
    PropellerParams::new(m, 1, q, q)
        .map_err(|e| Error::Shape(params, format!("quotient parameters invalid: {e}")))
}

/// Contracts every block to a single vertex; `block_of[v]` is the block id of
/// `v`. Edges inside a block are rejected.
pub fn quotient_graph(g: &LabeledGraph, block_of: &[usize]) -> Result<LabeledGraph> {
    let blocks = block_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| normalize(block_of[u], block_of[v]))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    LabeledGraph::from_edges(blocks, &edges)
}

/// The block map `X_i -> X_{i mod m}` of a propeller with `n = 2m`, laid out in
/// the serialization order of `Pr_m`.
pub fn antipodal_blocks(params: &PropellerParams) -> Vec<usize> {
    let m = params.n / 2;
    (0..params.vertex_count())
        .map(|v| (v / params.n) * m + (v % params.n) % m)
        .collect()
}
