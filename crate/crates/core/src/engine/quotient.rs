use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::Coloring;
use crate::graph::Digraph;
use crate::{Error, Result, Vertex};

/// Equivalence classes over the vertices of a colored graph.
///
/// Classes are numbered by their lowest member. After [`quotient`],
/// `edge_preimage[class][slot]` lists the parent edges `(vertex, slot)`
/// represented by that quotient edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<Vertex>>,
    pub edge_preimage: Vec<Vec<Vec<(Vertex, usize)>>>,
}

impl Partition {
    pub fn identity(n: usize) -> Self {
        Self::from_labels((0..n).collect())
    }

    /// Builds classes from arbitrary labels, renumbering by lowest member.
    pub fn from_labels(labels: Vec<usize>) -> Self {
        let n = labels.len();
        let mut renumber = std::collections::HashMap::new();
        let mut class_of = vec![0; n];
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        for v in 0..n {
            let id = *renumber.entry(labels[v]).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            class_of[v] = id;
            classes[id].push(v);
        }
        Self {
            class_of,
            classes,
            edge_preimage: Vec::new(),
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_identity(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }

    /// Checks that every color maps each class into a single class.
    pub fn first_violation(&self, graph: &Digraph, coloring: &Coloring) -> Option<(usize, usize)> {
        let d = graph.uniform_outdegree()?;
        let succ = coloring.successor_table(graph, d);
        for (x, members) in self.classes.iter().enumerate() {
            for c in 0..d {
                let image = self.class_of[succ[members[0] * d + c]];
                if members[1..]
                    .iter()
                    .any(|&v| self.class_of[succ[v * d + c]] != image)
                {
                    return Some((x, c));
                }
            }
        }
        None
    }
}

/// Smallest congruence of the colored automaton relating `seed.0` and `seed.1`.
///
/// Each union of two distinct classes schedules the unions of their
/// successors under every color, which keeps all classes closed.
pub fn congruence_closure(graph: &Digraph, coloring: &Coloring, seed: (Vertex, Vertex)) -> Result<Partition> {
    let n = graph.vertex_count();
    let d = graph.require_uniform()?;
    if !coloring.is_complete(d) {
        return Err(Error::InvalidColoring("congruence closure needs a complete coloring".into()));
    }
    let succ = coloring.successor_table(graph, d);
    let mut uf = UnionFind::<usize>::new(n);
    let mut pending = vec![seed];
    while let Some((a, b)) = pending.pop() {
        if uf.union(a, b) {
            pending.extend((0..d).map(|c| (succ[a * d + c], succ[b * d + c])));
        }
    }
    Ok(Partition::from_labels(uf.into_labeling()))
}

/// Quotient graph of a congruence: vertex `X` per class, slot `c` of `X`
/// leading to the class of `v·c` for any member `v`.
pub fn quotient(graph: &Digraph, coloring: &Coloring, partition: &Partition) -> Result<(Digraph, Partition)> {
    let d = graph.require_uniform()?;
    if !coloring.is_complete(d) {
        return Err(Error::InvalidColoring("quotient needs a complete coloring".into()));
    }
    if partition.class_of.len() != graph.vertex_count() {
        return Err(Error::MalformedGraph("partition does not cover the graph".into()));
    }
    if let Some((class, color)) = partition.first_violation(graph, coloring) {
        return Err(Error::NotCongruent { class, color });
    }
    let succ = coloring.successor_table(graph, d);
    let mut rows = Vec::with_capacity(partition.class_count());
    let mut preimage = Vec::with_capacity(partition.class_count());
    for members in &partition.classes {
        let rep = members[0];
        rows.push((0..d).map(|c| partition.class_of[succ[rep * d + c]]).collect());
        preimage.push(
            (0..d)
                .map(|c| {
                    members
                        .iter()
                        .map(|&v| (v, coloring.slot_of(v, c).unwrap()))
                        .collect()
                })
                .collect(),
        );
    }
    let q = Digraph::new(partition.class_count(), rows)?;
    let mut filled = partition.clone();
    filled.edge_preimage = preimage;
    Ok((q, filled))
}

/// Gives every parent edge the color its image edge carries in `child`.
pub fn lift_coloring(parent: &Digraph, partition: &Partition, child: &Coloring) -> Result<Coloring> {
    if partition.edge_preimage.len() != partition.class_count() {
        return Err(Error::InvalidColoring("partition has no edge preimages; build it with quotient".into()));
    }
    if child.vertex_count() != partition.class_count() {
        return Err(Error::InvalidColoring("child coloring does not match the quotient".into()));
    }
    let mut rows: Vec<Vec<usize>> = (0..parent.vertex_count())
        .map(|v| vec![usize::MAX; parent.outdegree(v)])
        .collect();
    for (x, slots) in partition.edge_preimage.iter().enumerate() {
        for (qs, edges) in slots.iter().enumerate() {
            let c = child.color(x, qs);
            for &(v, s) in edges {
                rows[v][s] = c;
            }
        }
    }
    Coloring::new(parent, rows)
}
