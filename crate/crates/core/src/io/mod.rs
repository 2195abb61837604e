//! Text formats, seeded instance generation and DOT export.

mod dot;
mod generate;
mod text;

pub use dot::render_dot;
pub use generate::{generate, generate_multi_sink};
pub use text::{emit_coloring, emit_graph, parse_coloring, parse_graph};
