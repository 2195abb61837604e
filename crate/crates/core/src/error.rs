use thiserror::Error;

use crate::{Color, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: edge ({source_vertex}, slot {slot}) targets {target}, vertex count is {vertex_count}")]
    InvalidGraph {
        source_vertex: Vertex,
        slot: usize,
        target: usize,
        vertex_count: usize,
    },

    #[error("invalid graph: {0}")]
    MalformedGraph(String),

    #[error("vertex set is not strongly connected (vertex {0} is unreachable in one direction)")]
    NotStronglyConnected(Vertex),

    #[error("no valid coloring: {0}")]
    NoValidColoring(String),

    #[error("outdegree is not uniform (vertex {vertex} has {found}, expected {expected})")]
    NotUniform {
        vertex: Vertex,
        found: usize,
        expected: usize,
    },

    #[error("branch inapplicable: {0}")]
    Inapplicable(&'static str),

    #[error("graph is a cycle of {0} bunches; every coloring is already optimal")]
    BaseCase(usize),

    #[error("internal error: {0}")]
    InternalError(String),

    #[error("partition is not a congruence: class {class} splits under color {color}")]
    NotCongruent { class: usize, color: Color },

    #[error("not supported: {0}")]
    NotSupported(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("bad word: color {color} at position {position} is outside the alphabet of size {alphabet}")]
    BadWord {
        position: usize,
        color: Color,
        alphabet: usize,
    },

    #[error("automaton has {n} states, exceeding the exact-oracle guard {guard}")]
    TooLarge { n: usize, guard: usize },

    #[error("image cannot be reduced below {reached} states (target {target})")]
    NotAchievable { reached: usize, target: usize },

    #[error("parse error on line {line}: {message}")]
    ParseError { line: usize, message: String },

    #[error("generation failed after {attempts} attempts: {reason}")]
    GenerationFailed { attempts: usize, reason: String },
}
