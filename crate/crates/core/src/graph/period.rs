use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{sccs, Digraph};
use crate::{Error, Result, Vertex};

/// gcd of the cycle lengths of a strongly connected vertex set, with the
/// level function `N` reduced modulo that gcd.
///
/// `n_labels[i]` belongs to `vertices[i]`; every edge `u -> v` inside the set
/// satisfies `(N(u) + 1) mod k == N(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Periodicity {
    pub k: usize,
    pub vertices: Vec<Vertex>,
    pub n_labels: Vec<usize>,
}

impl Periodicity {
    pub fn label(&self, v: Vertex) -> Option<usize> {
        self.vertices
            .binary_search(&v)
            .ok()
            .map(|i| self.n_labels[i])
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Breadth-first numbering from the lowest vertex, then gcd of
/// `|N(r) + 1 - N(q)|` over every edge `r -> q` inside the component.
pub fn periodicity(graph: &Digraph, component: &[Vertex]) -> Result<Periodicity> {
    let n = graph.vertex_count();
    let mut vertices = component.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let Some(&root) = vertices.first() else {
        return Err(Error::NoValidColoring("empty component".into()));
    };
    let mut inside = vec![false; n];
    for &v in &vertices {
        inside[v] = true;
    }

    let mut level = vec![usize::MAX; n];
    level[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(r) = queue.pop_front() {
        for &q in graph.out_edges(r) {
            if inside[q] && level[q] == usize::MAX {
                level[q] = level[r] + 1;
                queue.push_back(q);
            }
        }
    }
    if let Some(&v) = vertices.iter().find(|&&v| level[v] == usize::MAX) {
        return Err(Error::NotStronglyConnected(v));
    }

    // backward reachability to the root
    let mut reaches = vec![false; n];
    reaches[root] = true;
    let inc = graph.in_edges();
    let mut stack = vec![root];
    while let Some(q) = stack.pop() {
        for &(r, _) in &inc[q] {
            if inside[r] && !reaches[r] {
                reaches[r] = true;
                stack.push(r);
            }
        }
    }
    if let Some(&v) = vertices.iter().find(|&&v| !reaches[v]) {
        return Err(Error::NotStronglyConnected(v));
    }

    let mut k = 0;
    for &r in &vertices {
        for &q in graph.out_edges(r) {
            if inside[q] {
                k = gcd(k, (level[r] + 1).abs_diff(level[q]));
            }
        }
    }
    if k == 0 {
        return Err(Error::NoValidColoring(format!(
            "component of vertex {root} has no internal edge"
        )));
    }
    let n_labels = vertices.iter().map(|&v| level[v] % k).collect();
    Ok(Periodicity {
        k,
        vertices,
        n_labels,
    })
}

/// Periodicity of the whole graph, which must be strongly connected.
pub fn periodicity_of_graph(graph: &Digraph) -> Result<Periodicity> {
    let all: Vec<Vertex> = (0..graph.vertex_count()).collect();
    periodicity(graph, &all)
}

/// Minimal `k` for a whole digraph: the sum of sink periodicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalK {
    pub k: usize,
    /// `(component index, component vertices, k_j)` per sink component.
    pub per_sink: Vec<(usize, Vec<Vertex>, usize)>,
}

/// Sums the periodicities of the sink components.
///
/// Sinks must have uniform outdegree and at least one internal edge; anything
/// else is reported as [`Error::NoValidColoring`].
pub fn minimal_k(graph: &Digraph) -> Result<MinimalK> {
    if graph.vertex_count() == 0 {
        return Err(Error::NoValidColoring("graph has no vertices".into()));
    }
    let dec = sccs(graph);
    let mut per_sink = Vec::new();
    for c in dec.sinks() {
        let comp = &dec.components[c];
        if let Some(&v) = comp.iter().find(|&&v| graph.outdegree(v) == 0) {
            return Err(Error::NoValidColoring(format!(
                "sink vertex {v} has no outgoing edge"
            )));
        }
        let d = graph.outdegree(comp[0]);
        if let Some(&v) = comp.iter().find(|&&v| graph.outdegree(v) != d) {
            return Err(Error::NoValidColoring(format!(
                "sink component of vertex {} has non-uniform outdegree at vertex {v}",
                comp[0]
            )));
        }
        let p = periodicity(graph, comp)?;
        per_sink.push((c, comp.clone(), p.k));
    }
    Ok(MinimalK {
        k: per_sink.iter().map(|s| s.2).sum(),
        per_sink,
    })
}
