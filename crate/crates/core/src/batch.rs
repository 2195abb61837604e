//! Batch evaluation over independent instances.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] fans work
//! out over rayon's pool; without it every mode runs sequentially. Results
//! are always returned in input order.

use serde::{Deserialize, Serialize};

use crate::engine::{color_k_sync, Coloring};
use crate::graph::Digraph;
use crate::verifier::{verify_coloring, SyncReport};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Order-preserving map.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }
}

/// [`color_k_sync`] on every graph.
pub fn color_all(graphs: &[Digraph], exec: Exec) -> Vec<Result<(Coloring, usize)>> {
    exec.map(graphs, color_k_sync)
}

/// Colors and verifies every graph; failed colorings yield `Err`.
pub fn color_and_verify_all(graphs: &[Digraph], guard: usize, exec: Exec) -> Vec<Result<SyncReport>> {
    exec.map(graphs, |g| {
        let (c, k) = color_k_sync(g)?;
        Ok(verify_coloring(g, &c, k, guard))
    })
}
