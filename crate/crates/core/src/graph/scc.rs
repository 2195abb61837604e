use std::collections::BTreeSet;

use petgraph::graph::{DiGraph, NodeIndex};
use serde::{Deserialize, Serialize};

use super::Digraph;
use crate::Vertex;

/// Strongly connected components and their condensation.
///
/// Components are numbered by their lowest vertex, and each component's
/// vertex list is sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SccDecomposition {
    pub component_id: Vec<usize>,
    pub components: Vec<Vec<Vertex>>,
    pub condensation_edges: BTreeSet<(usize, usize)>,
    pub sink_flags: Vec<bool>,
}

impl SccDecomposition {
    pub fn sinks(&self) -> impl Iterator<Item = usize> + '_ {
        self.sink_flags
            .iter()
            .enumerate()
            .filter_map(|(c, &s)| s.then_some(c))
    }
}

/// Tarjan's algorithm (via petgraph), linear in vertices plus edges.
pub fn sccs(graph: &Digraph) -> SccDecomposition {
    let n = graph.vertex_count();
    let mut pg: DiGraph<(), ()> = DiGraph::with_capacity(n, graph.edge_count());
    for _ in 0..n {
        pg.add_node(());
    }
    for (v, _, t) in graph.edges() {
        pg.add_edge(NodeIndex::new(v), NodeIndex::new(t), ());
    }

    let mut components: Vec<Vec<Vertex>> = petgraph::algo::tarjan_scc(&pg)
        .into_iter()
        .map(|c| {
            let mut c: Vec<Vertex> = c.into_iter().map(NodeIndex::index).collect();
            c.sort_unstable();
            c
        })
        .collect();
    components.sort_unstable_by_key(|c| c[0]);

    let mut component_id = vec![0; n];
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            component_id[v] = i;
        }
    }
    let condensation_edges: BTreeSet<(usize, usize)> = graph
        .edges()
        .map(|(v, _, t)| (component_id[v], component_id[t]))
        .filter(|(a, b)| a != b)
        .collect();
    let mut sink_flags = vec![true; components.len()];
    for &(a, _) in &condensation_edges {
        sink_flags[a] = false;
    }
    SccDecomposition {
        component_id,
        components,
        condensation_edges,
        sink_flags,
    }
}
