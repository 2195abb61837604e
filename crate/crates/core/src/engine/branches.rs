//! Cheap stable-pair shortcuts tried before the replacement search.

use std::collections::VecDeque;

use super::{Coloring, SpanningAnalysis};
use crate::graph::Digraph;
use crate::{Error, Result, Vertex};

/// Colors a spanning in-tree towards `loop_vertex` (plus the loop) with
/// color 0, so `0^n` sends every vertex to `loop_vertex`.
pub fn loop_branch(graph: &Digraph, loop_vertex: Vertex) -> Result<Coloring> {
    graph.require_uniform()?;
    let loop_slot = graph
        .out_edges(loop_vertex)
        .iter()
        .position(|&t| t == loop_vertex)
        .ok_or(Error::Inapplicable("vertex has no self-loop"))?;
    let n = graph.vertex_count();
    let inc = graph.in_edges();
    let mut choice = vec![usize::MAX; n];
    choice[loop_vertex] = loop_slot;
    let mut queue = VecDeque::from([loop_vertex]);
    while let Some(v) = queue.pop_front() {
        for &(u, s) in &inc[v] {
            if choice[u] == usize::MAX {
                choice[u] = s;
                queue.push_back(u);
            }
        }
    }
    if let Some(v) = choice.iter().position(|&s| s == usize::MAX) {
        return Err(Error::NotStronglyConnected(v));
    }
    Ok(Coloring::with_selected_slots(graph, &choice))
}

/// A vertex `p` entered by two full bunches, from `q < r`; the lowest such `p`.
pub fn find_double_bunch(graph: &Digraph) -> Option<(Vertex, Vertex, Vertex)> {
    let n = graph.vertex_count();
    let mut first_bunch: Vec<Option<Vertex>> = vec![None; n];
    let mut best: Option<(Vertex, Vertex, Vertex)> = None;
    for v in 0..n {
        if !graph.is_bunch(v) {
            continue;
        }
        let p = graph.target(v, 0);
        match first_bunch[p] {
            None => first_bunch[p] = Some(v),
            Some(q) => {
                if best.is_none_or(|(bp, _, _)| p < bp) {
                    best = Some((p, q, v));
                }
            }
        }
    }
    best
}

/// Two cycles through `p1` that share no other vertex yield a spanning
/// subgraph with exactly one maximal tree: take an in-tree to `p1` that
/// contains both cycles minus their edges leaving `p1`, then close one of
/// the two cycles so that the deepest vertices end up in the tree of `p1`.
///
/// `coloring` only fixes the scan order of candidate edge pairs (by color).
pub fn common_cycle_branch(graph: &Digraph, coloring: &Coloring) -> Option<SpanningAnalysis> {
    let n = graph.vertex_count();
    let d = graph.uniform_outdegree()?;
    if d < 2 {
        return None;
    }
    let inc = graph.in_edges();
    for p1 in 0..n {
        let mut targets: Vec<Vertex> = (0..d)
            .filter_map(|c| coloring.successor(graph, p1, c))
            .filter(|&t| t != p1)
            .collect();
        // keep first occurrence order
        let mut seen = vec![];
        targets.retain(|t| {
            let fresh = !seen.contains(t);
            seen.push(*t);
            fresh
        });
        for i in 0..targets.len() {
            for j in i + 1..targets.len() {
                if let Some(a) = try_cycle_pair(graph, &inc, p1, targets[i], targets[j]) {
                    return Some(a);
                }
            }
        }
    }
    None
}

/// Two internally vertex-disjoint paths `a ~> p1` and `b ~> p1` that avoid
/// `p1` except at their ends, via a unit-capacity flow with split vertices.
fn disjoint_paths(graph: &Digraph, a: Vertex, b: Vertex, p1: Vertex) -> Option<[Vec<Vertex>; 2]> {
    let n = graph.vertex_count();
    // node 2v = entry of v, 2v + 1 = exit of v, 2n = source; the sink is p1's entry
    let source = 2 * n;
    let sink = 2 * p1;
    let mut head = Vec::new();
    let mut cap = Vec::new();
    let mut adj = vec![Vec::new(); 2 * n + 1];
    let mut add = |u: usize, v: usize, adj: &mut Vec<Vec<usize>>| {
        adj[u].push(head.len());
        head.push(v);
        cap.push(1u8);
        adj[v].push(head.len());
        head.push(u);
        cap.push(0u8);
    };
    for v in (0..n).filter(|&v| v != p1) {
        add(2 * v, 2 * v + 1, &mut adj);
        for &t in graph.out_edges(v) {
            add(2 * v + 1, 2 * t, &mut adj);
        }
    }
    add(source, 2 * a, &mut adj);
    add(source, 2 * b, &mut adj);
    for _ in 0..2 {
        let mut via = vec![usize::MAX; 2 * n + 1];
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &adj[u] {
                let v = head[e];
                if cap[e] > 0 && via[v] == usize::MAX && v != source {
                    via[v] = e;
                    queue.push_back(v);
                }
            }
        }
        if via[sink] == usize::MAX {
            return None;
        }
        let mut v = sink;
        while v != source {
            let e = via[v];
            cap[e] -= 1;
            cap[e ^ 1] += 1;
            v = head[e ^ 1];
        }
    }
    // Saturated forward arcs: follow them from each start.
    let follow = |start: Vertex| {
        let mut path = vec![start];
        let mut v = start;
        while v != p1 {
            let exit = 2 * v + 1;
            let e = adj[exit]
                .iter()
                .copied()
                .find(|&e| e % 2 == 0 && cap[e] == 0 && head[e] % 2 == 0)
                .expect("flow leaves every used vertex");
            v = head[e] / 2;
            path.push(v);
        }
        path
    };
    Some([follow(a), follow(b)])
}

fn try_cycle_pair(
    graph: &Digraph,
    inc: &[Vec<(Vertex, usize)>],
    p1: Vertex,
    a: Vertex,
    b: Vertex,
) -> Option<SpanningAnalysis> {
    let n = graph.vertex_count();
    let [path_a, path_b] = disjoint_paths(graph, a, b, p1)?;

    let mut next = vec![usize::MAX; n];
    let mut in_tree = vec![false; n];
    in_tree[p1] = true;
    let mut queue = VecDeque::new();
    for path in [&path_a, &path_b] {
        for w in path.windows(2) {
            next[w[0]] = w[1];
            in_tree[w[0]] = true;
            queue.push_back(w[0]);
        }
    }
    queue.push_back(p1);
    while let Some(v) = queue.pop_front() {
        for &(u, _) in &inc[v] {
            if !in_tree[u] {
                in_tree[u] = true;
                next[u] = v;
                queue.push_back(u);
            }
        }
    }
    if in_tree.iter().any(|&t| !t) {
        return None;
    }
    for close in [a, b] {
        next[p1] = close;
        let analysis = SpanningAnalysis::from_successors(next.clone());
        if analysis.has_unique_max_tree() {
            return Some(analysis);
        }
    }
    None
}
