use std::fmt::Write as _;

use crate::engine::{Coloring, Partition};
use crate::graph::Digraph;

const EDGE_PALETTE: [&str; 8] = [
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];
const FILL_PALETTE: [&str; 8] = [
    "#fde0dd", "#deebf7", "#e5f5e0", "#fee6ce", "#efedf5", "#f6e8c3", "#fcc5c0", "#c7eae5",
];

/// Graphviz description of the graph. Colored edges carry their color index
/// as a label and a palette color; with a partition, every class of two or
/// more vertices becomes a filled cluster.
pub fn render_dot(graph: &Digraph, coloring: Option<&Coloring>, partition: Option<&Partition>) -> String {
    let mut out = String::from("digraph G {\n  node [shape=circle];\n");
    let mut placed = vec![false; graph.vertex_count()];
    if let Some(p) = partition {
        for (x, class) in p.classes.iter().enumerate().filter(|(_, c)| c.len() > 1) {
            let fill = FILL_PALETTE[x % FILL_PALETTE.len()];
            let _ = writeln!(out, "  subgraph cluster_{x} {{");
            let _ = writeln!(out, "    label=\"class {x}\";");
            for &v in class {
                placed[v] = true;
                let _ = writeln!(out, "    {v} [style=filled, fillcolor=\"{fill}\"];");
            }
            out.push_str("  }\n");
        }
    }
    for v in (0..graph.vertex_count()).filter(|&v| !placed[v]) {
        let _ = writeln!(out, "  {v};");
    }
    for (v, s, t) in graph.edges() {
        match coloring {
            Some(c) => {
                let color = c.color(v, s);
                let _ = writeln!(
                    out,
                    "  {v} -> {t} [label=\"{color}\", color=\"{}\"];",
                    EDGE_PALETTE[color % EDGE_PALETTE.len()]
                );
            }
            None => {
                let _ = writeln!(out, "  {v} -> {t};");
            }
        }
    }
    out.push_str("}\n");
    out
}
