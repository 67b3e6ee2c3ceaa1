//! graph6, DOT and JSON output.

use petgraph::dot::{Config, Dot};
use petgraph::graph::UnGraph;
use petgraph::graph6::{FromGraph6, ToGraph6};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

fn to_petgraph(g: &LabeledGraph) -> UnGraph<String, &'static str> {
    let mut pg = UnGraph::with_capacity(g.vertex_count(), g.edge_count());
    let nodes: Vec<_> = (0..g.vertex_count()).map(|v| pg.add_node(g.vertex_name(v))).collect();
    for (u, v) in g.edges() {
        let label = g.edge_kind(u, v).map_or("", |k| k.name());
        pg.add_edge(nodes[u], nodes[v], label);
    }
    pg
}

pub fn to_graph6(g: &LabeledGraph) -> String {
    to_petgraph(g).graph6_string()
}

/// Decodes a graph6 line (no `>>graph6<<` header) into an unlabelled graph.
pub fn from_graph6(s: &str) -> Result<LabeledGraph> {
    let s = s.trim();
    let bytes = s.as_bytes();
    if bytes.is_empty() || bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("not a graph6 string: {s:?}")));
    }
    let (n, header) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 4 && bytes[1] < 126 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        return Err(Error::Parse("graph6 orders above 258047 are not supported".into()));
    };
    let body = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() != header + body {
        return Err(Error::Parse(format!(
            "graph6 string has {} bytes, expected {} for {n} vertices",
            bytes.len(),
            header + body
        )));
    }
    let pg: UnGraph<(), ()> = UnGraph::from_graph6_string(s.to_string());
    let edges: Vec<(usize, usize)> = pg
        .edge_indices()
        .map(|e| {
            let (a, b) = pg.edge_endpoints(e).unwrap();
            (a.index(), b.index())
        })
        .collect();
    LabeledGraph::from_edges(n, &edges)
}

pub fn to_dot(g: &LabeledGraph) -> String {
    let pg = to_petgraph(g);
    let config = if g.has_edge_kinds() { &[][..] } else { &[Config::EdgeNoLabel][..] };
    format!("{}", Dot::with_config(&pg, config))
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphJson {
    pub title: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<&'static str>,
}

pub fn to_json(g: &LabeledGraph) -> GraphJson {
    GraphJson {
        title: g.title(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        vertices: (0..g.vertex_count()).map(|v| g.vertex_name(v)).collect(),
        edges: g
            .edges()
            .map(|(u, v)| EdgeJson {
                u,
                v,
                kind: g.edge_kind(u, v).map(|k| k.name()),
            })
            .collect(),
    }
}
