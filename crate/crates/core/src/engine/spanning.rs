use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Coloring;
use crate::graph::Digraph;
use crate::{Color, Vertex};

/// Cycle/tree decomposition of a functional graph (one out-edge per vertex).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningAnalysis {
    pub next: Vec<Vertex>,
    pub cycle_id: Vec<Option<usize>>,
    /// Cycles in successor order, each starting at its lowest vertex.
    pub cycles: Vec<Vec<Vertex>>,
    /// Position of a cycle vertex within `cycles[cycle_id]`.
    pub cycle_pos: Vec<usize>,
    pub level: Vec<usize>,
    pub tree_root: Vec<Vertex>,
    pub cycle_edge_count: usize,
    pub max_level: usize,
    pub max_level_vertices: Vec<Vertex>,
}

impl SpanningAnalysis {
    pub fn from_successors(next: Vec<Vertex>) -> Self {
        let n = next.len();
        // 0 = unseen, 1 = on current walk, 2 = finished
        let mut state = vec![0u8; n];
        let mut cycle_id = vec![None; n];
        let mut cycle_pos = vec![0; n];
        let mut cycles: Vec<Vec<Vertex>> = Vec::new();
        let mut walk = Vec::new();
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut v = start;
            while state[v] == 0 {
                state[v] = 1;
                walk.push(v);
                v = next[v];
            }
            if state[v] == 1 {
                let at = walk.iter().position(|&w| w == v).unwrap();
                let mut cycle = walk[at..].to_vec();
                let lo = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
                cycle.rotate_left(lo);
                for (i, &w) in cycle.iter().enumerate() {
                    cycle_id[w] = Some(cycles.len());
                    cycle_pos[w] = i;
                }
                cycles.push(cycle);
            }
            for &w in &walk {
                state[w] = 2;
            }
            walk.clear();
        }

        let mut children = vec![Vec::new(); n];
        for v in 0..n {
            if cycle_id[v].is_none() {
                children[next[v]].push(v);
            }
        }
        let mut level = vec![0; n];
        let mut tree_root: Vec<Vertex> = (0..n).collect();
        let mut queue: VecDeque<Vertex> = (0..n).filter(|&v| cycle_id[v].is_some()).collect();
        while let Some(v) = queue.pop_front() {
            for &c in &children[v] {
                level[c] = level[v] + 1;
                tree_root[c] = tree_root[v];
                queue.push_back(c);
            }
        }
        let max_level = level.iter().copied().max().unwrap_or(0);
        let max_level_vertices = (0..n).filter(|&v| level[v] == max_level).collect();
        let cycle_edge_count = cycles.iter().map(Vec::len).sum();
        Self {
            next,
            cycle_id,
            cycles,
            cycle_pos,
            level,
            tree_root,
            cycle_edge_count,
            max_level,
            max_level_vertices,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.next.len()
    }

    /// At least one tree vertex, and all vertices of maximal level hang from
    /// the same root.
    pub fn has_unique_max_tree(&self) -> bool {
        self.max_level > 0
            && self
                .max_level_vertices
                .windows(2)
                .all(|w| self.tree_root[w[0]] == self.tree_root[w[1]])
    }

    /// The cycle holding the root of `v`'s tree.
    pub fn root_cycle(&self, v: Vertex) -> &[Vertex] {
        &self.cycles[self.cycle_id[self.tree_root[v]].expect("roots lie on cycles")]
    }

    /// `v` followed by `steps` successors.
    pub fn walk(&self, mut v: Vertex, steps: usize) -> Vertex {
        for _ in 0..steps {
            v = self.next[v];
        }
        v
    }

    /// Number of successor steps from cycle vertex `a` to cycle vertex `b`
    /// on their common cycle.
    pub(crate) fn cycle_distance(&self, a: Vertex, b: Vertex) -> usize {
        let len = self.cycles[self.cycle_id[a].unwrap()].len();
        (self.cycle_pos[b] + len - self.cycle_pos[a]) % len
    }
}

/// Spanning subgraph formed by the edges of one color.
pub fn spanning_analysis(graph: &Digraph, coloring: &Coloring, color: Color) -> SpanningAnalysis {
    let next = (0..graph.vertex_count())
        .map(|v| {
            coloring
                .successor(graph, v, color)
                .expect("coloring must be complete")
        })
        .collect();
    SpanningAnalysis::from_successors(next)
}
