//! Search for a spanning subgraph whose deepest vertices all lie in one tree.
//!
//! Colouring such a subgraph with a single letter `α` makes
//! `(p·α^(L-1), p·α^(L+|H|-1))` a stable pair for any vertex `p` of maximal
//! level `L`, where `H` is the cycle carrying the root of `p`'s tree.

use serde::{Deserialize, Serialize};

use super::{Coloring, SpanningAnalysis};
use crate::graph::Digraph;
use crate::{Error, Result, Vertex};

/// Which shortcut produced a stable pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    Loop,
    DoubleBunch,
    CommonCycleVertex,
    Replacements,
    /// Found by scanning every pair with the stability oracle.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StablePairWitness {
    pub p: Vertex,
    pub q: Vertex,
    pub coloring: Coloring,
    pub provenance: Provenance,
}

/// Stable pair `(p·α^(L-1), p·α^(L+|H|-1))` for maximal-level vertex `p`.
pub fn tree_pair(analysis: &SpanningAnalysis, p: Vertex) -> (Vertex, Vertex) {
    let l = analysis.level[p];
    debug_assert!(l > 0);
    let h = analysis.root_cycle(p).len();
    (analysis.walk(p, l - 1), analysis.walk(p, l + h - 1))
}

/// Preorder intervals of the forest hanging off the cycles.
struct Forest {
    enter: Vec<usize>,
    exit: Vec<usize>,
}

impl Forest {
    fn new(a: &SpanningAnalysis) -> Self {
        let n = a.vertex_count();
        let mut children = vec![Vec::new(); n];
        for v in 0..n {
            if a.level[v] > 0 {
                children[a.next[v]].push(v);
            }
        }
        let mut enter = vec![0; n];
        let mut exit = vec![0; n];
        let mut clock = 0;
        let mut stack = Vec::new();
        for root in (0..n).filter(|&v| a.level[v] == 0) {
            stack.push((root, 0));
            enter[root] = clock;
            clock += 1;
            while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                if let Some(&c) = children[v].get(*i) {
                    *i += 1;
                    enter[c] = clock;
                    clock += 1;
                    stack.push((c, 0));
                } else {
                    exit[v] = clock;
                    stack.pop();
                }
            }
        }
        Self { enter, exit }
    }

    /// `a` lies on the path from `x` to its root (or equals `x`).
    fn is_ancestor(&self, a: Vertex, x: Vertex) -> bool {
        self.enter[a] <= self.enter[x] && self.exit[x] <= self.exit[a]
    }
}

fn cycle_gain(a: &SpanningAnalysis, forest: &Forest, v: Vertex, t: Vertex) -> isize {
    if a.level[v] > 0 {
        if forest.is_ancestor(v, t) {
            (a.level[t] - a.level[v] + 1) as isize
        } else {
            0
        }
    } else {
        let own = a.cycle_id[v].unwrap();
        let len = a.cycles[own].len() as isize;
        let root = a.tree_root[t];
        if a.cycle_id[root] == Some(own) {
            (a.level[t] + a.cycle_distance(root, v) + 1) as isize - len
        } else {
            -len
        }
    }
}

/// Local search from the spanning subgraph `choice` (one slot per vertex).
///
/// Returns `Ok(None)` when no single replacement makes progress.
pub(crate) fn search_unique_max_tree(graph: &Digraph, mut choice: Vec<usize>) -> Result<Option<(Vec<usize>, SpanningAnalysis)>> {
    let n = graph.vertex_count();
    let inc = graph.in_edges();
    let target = |v: Vertex, s: usize| graph.target(v, s);
    let succ_of = |choice: &[usize]| -> Vec<Vertex> { (0..n).map(|v| target(v, choice[v])).collect() };

    // cycle_edge_count grows on every non-terminal step
    for _ in 0..=n + 1 {
        let a = SpanningAnalysis::from_successors(succ_of(&choice));
        if a.has_unique_max_tree() {
            return Ok(Some((choice, a)));
        }

        let adopt = |choice: &mut Vec<usize>, v: Vertex, s: usize| {
            choice[v] = s;
            let a = SpanningAnalysis::from_successors(succ_of(choice));
            a.has_unique_max_tree().then_some(a)
        };

        if a.max_level == 0 {
            let flip = (0..n).find_map(|v| {
                (0..graph.outdegree(v))
                    .find(|&s| target(v, s) != a.next[v])
                    .map(|s| (v, s))
            });
            let Some((v, s)) = flip else {
                return Err(Error::BaseCase(n));
            };
            if let Some(res) = adopt(&mut choice, v, s) {
                return Ok(Some((choice, res)));
            }
            continue;
        }

        let forest = Forest::new(&a);
        let deepest_root_cycle = |p: Vertex| a.cycle_id[a.tree_root[p]];
        let mut into_deepest = None;
        'outer: for &p in &a.max_level_vertices {
            for &(v, s) in &inc[p] {
                if v == p {
                    continue;
                }
                let outside = if a.level[v] > 0 {
                    !forest.is_ancestor(v, p)
                } else {
                    a.cycle_id[v] != deepest_root_cycle(p)
                };
                if outside {
                    into_deepest = Some((v, s));
                    break 'outer;
                }
            }
        }
        if let Some((v, s)) = into_deepest {
            let saved = choice[v];
            if let Some(res) = adopt(&mut choice, v, s) {
                return Ok(Some((choice, res)));
            }
            choice[v] = saved;
        }

        let growing = (0..n).find_map(|v| {
            (0..graph.outdegree(v))
                .filter(|&s| target(v, s) != a.next[v])
                .find(|&s| cycle_gain(&a, &forest, v, target(v, s)) > 0)
                .map(|s| (v, s))
        });
        if let Some((v, s)) = growing {
            if let Some(res) = adopt(&mut choice, v, s) {
                return Ok(Some((choice, res)));
            }
            continue;
        }

        for v in 0..n {
            for s in 0..graph.outdegree(v) {
                if target(v, s) == a.next[v] {
                    continue;
                }
                let saved = choice[v];
                if let Some(res) = adopt(&mut choice, v, s) {
                    return Ok(Some((choice, res)));
                }
                choice[v] = saved;
            }
        }
        return Ok(None);
    }
    Ok(None)
}

/// Spanning subgraph with one maximal tree reachable by replacements from
/// the color-0 subgraph of `coloring`, or from another color's subgraph when
/// the first search stalls.
pub(crate) fn find_tree(graph: &Digraph, coloring: &Coloring) -> Result<Option<SpanningAnalysis>> {
    let d = graph.require_uniform()?;
    for color in 0..d {
        let choice: Vec<usize> = (0..graph.vertex_count())
            .map(|v| coloring.slot_of(v, color).expect("complete coloring"))
            .collect();
        if let Some((_, a)) = search_unique_max_tree(graph, choice)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Witness for a spanning subgraph with one maximal tree: color it 0,
/// pick the lowest vertex of maximal level.
pub(crate) fn witness_from_tree(graph: &Digraph, analysis: &SpanningAnalysis, provenance: Provenance) -> StablePairWitness {
    let p = analysis.max_level_vertices[0];
    let (s, q) = tree_pair(analysis, p);
    StablePairWitness {
        p: s,
        q,
        coloring: Coloring::with_spanning(graph, &analysis.next),
        provenance,
    }
}
