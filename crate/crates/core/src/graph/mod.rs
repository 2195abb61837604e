//! Digraph carrier, strongly connected components and periodicity.
//!
//! Vertices are `0..n`. Each vertex owns an ordered list of out-edges; the
//! position of an edge in that list (its *slot*) is part of the edge's
//! identity, so parallel edges and self-loops are distinguishable.

mod period;
mod scc;

pub use period::{minimal_k, periodicity, periodicity_of_graph, MinimalK, Periodicity};
pub use scc::{sccs, SccDecomposition};

use serde::{Deserialize, Serialize};

use crate::{Error, Result, Vertex};

/// Finite directed multigraph with per-vertex ordered out-edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
}

/// Summary returned by [`Digraph::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub uniform_outdegree: Option<usize>,
    pub has_loop: bool,
    pub vertex_count: usize,
    pub edge_count: usize,
}

impl Digraph {
    /// Builds a graph, rejecting any target outside `0..vertex_count`.
    pub fn new(vertex_count: usize, out_edges: Vec<Vec<Vertex>>) -> Result<Self> {
        if out_edges.len() != vertex_count {
            return Err(Error::MalformedGraph(format!(
                "expected {} adjacency rows, got {}",
                vertex_count,
                out_edges.len()
            )));
        }
        for (v, row) in out_edges.iter().enumerate() {
            if let Some((slot, &t)) = row.iter().enumerate().find(|(_, &t)| t >= vertex_count) {
                return Err(Error::InvalidGraph {
                    source_vertex: v,
                    slot,
                    target: t,
                    vertex_count,
                });
            }
        }
        Ok(Self { out: out_edges })
    }

    /// Convenience constructor: the directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Self {
        Self {
            out: (0..n).map(|v| vec![(v + 1) % n]).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn out_edges(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn outdegree(&self, v: Vertex) -> usize {
        self.out[v].len()
    }

    pub fn target(&self, v: Vertex, slot: usize) -> Vertex {
        self.out[v][slot]
    }

    pub fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.out
    }

    /// Iterates `(source, slot, target)` in vertex then slot order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, usize, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(v, row)| row.iter().enumerate().map(move |(s, &t)| (v, s, t)))
    }

    pub fn max_outdegree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has outdegree `d`; `None` for mixed degrees
    /// or the empty graph.
    pub fn uniform_outdegree(&self) -> Option<usize> {
        let d = self.out.first()?.len();
        self.out.iter().all(|row| row.len() == d).then_some(d)
    }

    /// Like [`uniform_outdegree`](Self::uniform_outdegree) but reports the
    /// first offending vertex.
    pub fn require_uniform(&self) -> Result<usize> {
        let d = self
            .out
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::MalformedGraph("graph has no vertices".into()))?;
        match self.out.iter().position(|row| row.len() != d) {
            None => Ok(d),
            Some(v) => Err(Error::NotUniform {
                vertex: v,
                found: self.out[v].len(),
                expected: d,
            }),
        }
    }

    pub fn has_loop(&self) -> bool {
        self.find_loop().is_some()
    }

    /// Lowest vertex carrying a self-loop, with the slot of its first loop edge.
    pub fn find_loop(&self) -> Option<(Vertex, usize)> {
        self.edges().find(|&(v, _, t)| v == t).map(|(v, s, _)| (v, s))
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            uniform_outdegree: self.uniform_outdegree(),
            has_loop: self.has_loop(),
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
        }
    }

    /// Incoming edges of every vertex as `(source, slot)`, sorted by source then slot.
    pub fn in_edges(&self) -> Vec<Vec<(Vertex, usize)>> {
        let mut inc = vec![Vec::new(); self.vertex_count()];
        for (v, s, t) in self.edges() {
            inc[t].push((v, s));
        }
        inc
    }

    /// Subgraph induced by `vertices` (renumbered in the given order), keeping
    /// only edges with both ends inside. Returns the subgraph and, for every
    /// kept edge, its `(source, slot)` in `self`.
    pub fn induced(&self, vertices: &[Vertex]) -> (Digraph, Vec<Vec<(Vertex, usize)>>) {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut out = Vec::with_capacity(vertices.len());
        let mut origin = Vec::with_capacity(vertices.len());
        for &v in vertices {
            let mut row = Vec::new();
            let mut orow = Vec::new();
            for (s, &t) in self.out[v].iter().enumerate() {
                if local[t] != usize::MAX {
                    row.push(local[t]);
                    orow.push((v, s));
                }
            }
            out.push(row);
            origin.push(orow);
        }
        (Digraph { out }, origin)
    }

    /// True when all slots of `v` lead to the same vertex.
    pub fn is_bunch(&self, v: Vertex) -> bool {
        match self.out[v].split_first() {
            Some((first, rest)) => rest.iter().all(|t| t == first),
            None => false,
        }
    }

    /// A cycle of bunches: every vertex is a bunch and the bunch targets form a
    /// single directed cycle through all vertices.
    pub fn is_cycle_of_bunches(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 || !(0..n).all(|v| self.is_bunch(v)) {
            return false;
        }
        let mut v = 0;
        for step in 1..=n {
            v = self.out[v][0];
            if v == 0 {
                return step == n;
            }
        }
        false
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.vertex_count() > 0 && sccs(self).components.len() == 1
    }
}
