use serde::{Deserialize, Serialize};

use crate::graph::Digraph;
use crate::{Color, Error, Result, Vertex};

/// Per-vertex assignment of colors to out-edge slots.
///
/// Colors at one vertex are pairwise distinct, so the colored graph is a
/// deterministic automaton. Under uniform outdegree `d` each row is a
/// permutation of `0..d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Vec<Color>>,
}

impl Coloring {
    /// Checks row lengths against `graph` and distinctness within each row.
    pub fn new(graph: &Digraph, colors: Vec<Vec<Color>>) -> Result<Self> {
        if colors.len() != graph.vertex_count() {
            return Err(Error::InvalidColoring(format!(
                "{} rows for {} vertices",
                colors.len(),
                graph.vertex_count()
            )));
        }
        for (v, row) in colors.iter().enumerate() {
            if row.len() != graph.outdegree(v) {
                return Err(Error::InvalidColoring(format!(
                    "vertex {v} has {} colors for {} edges",
                    row.len(),
                    graph.outdegree(v)
                )));
            }
            let mut seen = row.clone();
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidColoring(format!(
                    "vertex {v} repeats a color"
                )));
            }
        }
        Ok(Self { colors })
    }

    pub(crate) fn from_rows_unchecked(colors: Vec<Vec<Color>>) -> Self {
        Self { colors }
    }

    /// Slot `choice[v]` of every vertex gets color 0; the remaining slots get
    /// `1, 2, ...` in slot order.
    pub fn with_selected_slots(graph: &Digraph, choice: &[usize]) -> Self {
        let colors = (0..graph.vertex_count())
            .map(|v| {
                let mut next = 1;
                (0..graph.outdegree(v))
                    .map(|s| {
                        if s == choice[v] {
                            0
                        } else {
                            next += 1;
                            next - 1
                        }
                    })
                    .collect()
            })
            .collect();
        Self { colors }
    }

    /// Color 0 realizes the spanning subgraph `next` (first matching slot).
    pub fn with_spanning(graph: &Digraph, next: &[Vertex]) -> Self {
        let choice: Vec<usize> = (0..graph.vertex_count())
            .map(|v| {
                graph
                    .out_edges(v)
                    .iter()
                    .position(|&t| t == next[v])
                    .expect("spanning successor must be an out-edge")
            })
            .collect();
        Self::with_selected_slots(graph, &choice)
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn rows(&self) -> &[Vec<Color>] {
        &self.colors
    }

    pub fn row(&self, v: Vertex) -> &[Color] {
        &self.colors[v]
    }

    pub fn color(&self, v: Vertex, slot: usize) -> Color {
        self.colors[v][slot]
    }

    pub fn slot_of(&self, v: Vertex, color: Color) -> Option<usize> {
        self.colors[v].iter().position(|&c| c == color)
    }

    /// Target of the `color` edge of `v`, if `v` has one.
    pub fn successor(&self, graph: &Digraph, v: Vertex, color: Color) -> Option<Vertex> {
        self.slot_of(v, color).map(|s| graph.target(v, s))
    }

    /// One more than the largest color used (0 for an edgeless graph).
    pub fn alphabet_size(&self) -> usize {
        self.colors
            .iter()
            .flat_map(|r| r.iter())
            .max()
            .map_or(0, |&c| c + 1)
    }

    /// Every row is a permutation of `0..d`.
    pub fn is_complete(&self, d: usize) -> bool {
        self.colors.iter().all(|row| {
            let mut seen = vec![false; d];
            row.len() == d && row.iter().all(|&c| c < d && !std::mem::replace(&mut seen[c], true))
        })
    }

    /// Flattened successor table `succ[v * d + c]` of a complete coloring.
    pub(crate) fn successor_table(&self, graph: &Digraph, d: usize) -> Vec<Vertex> {
        let mut succ = vec![0; graph.vertex_count() * d];
        for (v, row) in self.colors.iter().enumerate() {
            for (s, &c) in row.iter().enumerate() {
                succ[v * d + c] = graph.target(v, s);
            }
        }
        succ
    }
}

/// Slot `j` of every vertex gets color `j`.
pub fn initial_coloring(graph: &Digraph) -> Result<Coloring> {
    let d = graph.require_uniform()?;
    Ok(Coloring {
        colors: vec![(0..d).collect(); graph.vertex_count()],
    })
}
