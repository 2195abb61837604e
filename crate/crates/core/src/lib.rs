//! Minimal k-synchronizing colorings of finite directed graphs.
//!
//! A coloring of the out-edges of a digraph turns it into a deterministic
//! automaton whose letters are the colors. For a strongly connected graph of
//! uniform outdegree, the smallest image a word can map the whole state set
//! onto is bounded below by the gcd `k` of the cycle lengths, and some
//! coloring attains it. This crate computes `k`, builds such a coloring by
//! repeatedly merging stable pairs into quotient graphs, and certifies the
//! result with independent checks:
//!
//! * [`graph`]: the carrier digraph, SCC condensation and periodicity.
//! * [`engine`]: stable-pair search, congruence closure, quotient and lift.
//! * [`verifier`]: pair-automaton analysis, exact subset search, reports.
//! * [`io`]: text formats, seeded instance generation and DOT export.
//!
//! ```
//! use roadcolor::{engine, graph::Digraph, verifier};
//!
//! // 0 -> {1, 2}, 1 -> {2, 0}, 2 -> {0, 0}
//! let g = Digraph::new(3, vec![vec![1, 2], vec![2, 0], vec![0, 0]]).unwrap();
//! let (coloring, k) = engine::color_k_sync(&g).unwrap();
//! assert_eq!(k, 1);
//! let report = verifier::verify_coloring(&g, &coloring, k, verifier::DEFAULT_GUARD);
//! assert!(report.verdict.is_success());
//! ```

pub mod batch;
pub mod engine;
pub mod error;
pub mod graph;
pub mod io;
pub mod verifier;

pub use engine::{color_arbitrary, color_k_sync, Coloring};
pub use error::{Error, Result};
pub use graph::Digraph;
pub use verifier::{verify_coloring, SyncReport, Verdict};

/// Vertex id, 0-based.
pub type Vertex = usize;
/// Color index, 0-based.
pub type Color = usize;
