//! Vertex permutations. Composition reads left to right: `x (p q) = (x p) q`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Wraps an image array, checking that it is a bijection.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if let Some(missing) = first_unhit(&images) {
            return Err(Error::NotBijective { missing });
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base).expect("same degree");
        }
        acc
    }

    /// Disjoint cycles of length at least 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = self.images[v];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation with vertex names supplied by `name`.
    pub fn cycle_notation(&self, name: impl Fn(usize) -> String) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|&v| name(v)).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation(|v| v.to_string()))
    }
}

/// Vertices of `0..images.len()` with no preimage.
pub fn unhit(images: &[usize]) -> Vec<usize> {
    let mut hit = vec![false; images.len()];
    for &v in images {
        if v < hit.len() {
            hit[v] = true;
        }
    }
    (0..images.len()).filter(|&v| !hit[v]).collect()
}

fn first_unhit(images: &[usize]) -> Option<usize> {
    let mut hit = vec![false; images.len()];
    for &v in images {
        if v >= hit.len() || hit[v] {
            return unhit(images).first().copied().or(Some(0));
        }
        hit[v] = true;
    }
    None
}

/// True iff `p` maps every edge of `g` to an edge.
pub fn is_automorphism(g: &LabeledGraph, p: &Permutation) -> bool {
    p.degree() == g.vertex_count() && first_broken_edge(g, p).is_none()
}

/// First edge (in edge order) whose image is not an edge.
pub fn first_broken_edge(g: &LabeledGraph, p: &Permutation) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| !g.has_edge(p.apply(u), p.apply(v)))
}

/// True iff `p` maps the edges of `g` exactly onto the edges of `h`.
pub fn is_isomorphism(g: &LabeledGraph, h: &LabeledGraph, p: &Permutation) -> bool {
    p.degree() == g.vertex_count()
        && g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && g.edges().all(|(u, v)| h.has_edge(p.apply(u), p.apply(v)))
}
