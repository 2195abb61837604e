//! Seeded random instances. Identical arguments give identical graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{periodicity_of_graph, Digraph};
use crate::{Error, Result, Vertex};

const MAX_ATTEMPTS: usize = 10_000;

/// Random strongly connected graph with uniform outdegree `d`.
///
/// Without `target_k`: a random Hamiltonian cycle plus uniformly random
/// remaining slots. With `target_k = k`: vertices are split into `k` layers
/// and every edge goes from one layer to the next (so `k` divides every
/// cycle length); samples are rejected until the graph is strongly connected
/// with period exactly `k`. Slot order is shuffled per vertex.
pub fn generate(seed: u64, n: usize, d: usize, target_k: Option<usize>) -> Result<Digraph> {
    let fail = |attempts, reason: &str| Error::GenerationFailed {
        attempts,
        reason: reason.to_string(),
    };
    if n == 0 || d == 0 {
        return Err(fail(0, "n and d must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match target_k {
        None => Ok(hamiltonian(&mut rng, n, d)),
        Some(0) => Err(fail(0, "target k must be positive")),
        Some(k) if k > n => Err(fail(0, "target k exceeds n")),
        Some(k) if d == 1 && k != n => Err(fail(0, "with d = 1 the only strongly connected graph is the n-cycle")),
        Some(k) => {
            for attempt in 1..=MAX_ATTEMPTS {
                let g = if k == 1 { hamiltonian(&mut rng, n, d) } else { layered(&mut rng, n, d, k) };
                if g.is_strongly_connected() && periodicity_of_graph(&g).map(|p| p.k) == Ok(k) {
                    return Ok(g);
                }
                if attempt == MAX_ATTEMPTS {
                    break;
                }
            }
            Err(fail(MAX_ATTEMPTS, "no sample had the requested period"))
        }
    }
}

fn hamiltonian(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Digraph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut rows = vec![Vec::with_capacity(d); n];
    for i in 0..n {
        rows[order[i]].push(order[(i + 1) % n]);
    }
    for row in rows.iter_mut() {
        while row.len() < d {
            row.push(rng.gen_range(0..n));
        }
        row.shuffle(rng);
    }
    Digraph::new(n, rows).expect("targets in range")
}

fn layered(rng: &mut ChaCha8Rng, n: usize, d: usize, k: usize) -> Digraph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    // class sizes are non-increasing and differ by at most one
    let layers: Vec<Vec<Vertex>> = (0..k).map(|j| order.iter().skip(j).step_by(k).copied().collect()).collect();
    let mut rows = vec![Vec::with_capacity(d); n];
    for j in 0..k {
        let (from, to) = (&layers[j], &layers[(j + 1) % k]);
        // every vertex of the next layer gets at least one incoming edge
        let mut free: Vec<Vertex> = from.iter().flat_map(|&v| std::iter::repeat_n(v, d)).collect();
        free.shuffle(rng);
        for (&w, &v) in to.iter().zip(free.iter()) {
            rows[v].push(w);
        }
        for &v in from {
            while rows[v].len() < d {
                rows[v].push(to[rng.gen_range(0..to.len())]);
            }
        }
    }
    for row in rows.iter_mut() {
        row.shuffle(rng);
    }
    Digraph::new(n, rows).expect("targets in range")
}

/// Several sink components `(n_j, d_j, k_j)` fed by `transient` extra
/// vertices. Transient vertex `i` only points at later transient vertices or
/// at sink vertices, and has outdegree between 1 and `max d_j + 1`. Transient
/// vertices come first in the numbering, then each sink in turn.
pub fn generate_multi_sink(seed: u64, sinks: &[(usize, usize, usize)], transient: usize) -> Result<Digraph> {
    if sinks.is_empty() {
        return Err(Error::GenerationFailed {
            attempts: 0,
            reason: "at least one sink is required".into(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<Vertex>> = vec![Vec::new(); transient];
    let mut offset = transient;
    for &(n, d, k) in sinks {
        let g = generate(rng.gen(), n, d, Some(k))?;
        rows.extend(g.adjacency().iter().map(|r| r.iter().map(|&t| t + offset).collect::<Vec<_>>()));
        offset += n;
    }
    let total = offset;
    let d_max = sinks.iter().map(|s| s.1).max().unwrap();
    for (v, row) in rows.iter_mut().enumerate().take(transient) {
        let deg = rng.gen_range(1..=d_max + 1);
        for _ in 0..deg {
            row.push(rng.gen_range(v + 1..total));
        }
    }
    Digraph::new(total, rows)
}
