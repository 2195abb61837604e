//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the algorithms under test; only the plain data types are borrowed.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use roadcolor::{Coloring, Digraph};

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Uniform outdegree `d`, arbitrary targets; may be disconnected.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, d: usize) -> Digraph {
    let rows = (0..n).map(|_| (0..d).map(|_| rng.gen_range(0..n)).collect()).collect();
    Digraph::new(n, rows).unwrap()
}

/// Rejection sampling against the closure oracle; outdegree 1 can only be a
/// cycle, so that case is built directly.
pub fn random_strongly_connected<R: Rng>(rng: &mut R, n: usize, d: usize) -> Digraph {
    if d == 1 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut rows = vec![Vec::new(); n];
        for i in 0..n {
            rows[order[i]].push(order[(i + 1) % n]);
        }
        return Digraph::new(n, rows).unwrap();
    }
    loop {
        let g = random_graph(rng, n, d);
        if reach(&g).iter().all(|row| row.iter().all(|&b| b)) {
            return g;
        }
    }
}

/// Random permutation colorings, one per vertex.
pub fn random_coloring<R: Rng>(rng: &mut R, g: &Digraph) -> Coloring {
    let rows = (0..g.vertex_count())
        .map(|v| {
            let mut r: Vec<usize> = (0..g.outdegree(v)).collect();
            r.shuffle(rng);
            r
        })
        .collect();
    Coloring::new(g, rows).unwrap()
}

/// Reflexive-transitive closure by repeated boolean squaring.
pub fn reach(g: &Digraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for v in 0..n {
        m[v][v] = true;
        for &t in g.out_edges(v) {
            m[v][t] = true;
        }
    }
    let mut len = 1;
    while len < n {
        let mut next = m.clone();
        for i in 0..n {
            for j in 0..n {
                if m[i][j] {
                    for l in 0..n {
                        if m[j][l] {
                            next[i][l] = true;
                        }
                    }
                }
            }
        }
        m = next;
        len *= 2;
    }
    m
}

/// Gcd of all simple cycle lengths through `vertices` (assumed one SCC).
pub fn cycle_gcd(g: &Digraph, vertices: &[usize]) -> usize {
    let inside: HashSet<usize> = vertices.iter().copied().collect();
    let mut acc = 0;
    // Enumerate simple cycles whose least vertex is `start`.
    fn dfs(g: &Digraph, inside: &HashSet<usize>, start: usize, v: usize, depth: usize, on: &mut Vec<bool>, acc: &mut usize) {
        for &t in g.out_edges(v) {
            if !inside.contains(&t) || t < start {
                continue;
            }
            if t == start {
                *acc = gcd(*acc, depth + 1);
            } else if !on[t] {
                on[t] = true;
                dfs(g, inside, start, t, depth + 1, on, acc);
                on[t] = false;
            }
        }
    }
    let mut on = vec![false; g.vertex_count()];
    for &s in vertices {
        on[s] = true;
        dfs(g, &inside, s, s, 0, &mut on, &mut acc);
        on[s] = false;
    }
    acc
}

/// Successor of `v` under color `c`, read straight off the rows.
pub fn step(g: &Digraph, col: &Coloring, v: usize, c: usize) -> usize {
    match col.row(v).iter().position(|&x| x == c) {
        Some(s) => g.out_edges(v)[s],
        None => v,
    }
}

pub fn alphabet(g: &Digraph) -> usize {
    (0..g.vertex_count()).map(|v| g.outdegree(v)).max().unwrap_or(0)
}

/// Smallest image `|Q.w|` over all words, by BFS over reachable subsets.
pub fn min_image(g: &Digraph, col: &Coloring) -> usize {
    let n = g.vertex_count();
    let a = alphabet(g);
    let full: BTreeSet<usize> = (0..n).collect();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([full.clone()]);
    seen.insert(full);
    let mut best = n;
    while let Some(s) = queue.pop_front() {
        best = best.min(s.len());
        for c in 0..a {
            let t: BTreeSet<usize> = s.iter().map(|&v| step(g, col, v, c)).collect();
            if seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    best
}

/// Every coloring obtained by permuting each vertex's slots.
pub fn all_colorings(g: &Digraph) -> Vec<Coloring> {
    fn perms(d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(d - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, d - 1);
                out.push(q);
            }
        }
        out
    }
    let mut rows_list: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for v in 0..g.vertex_count() {
        let ps = perms(g.outdegree(v));
        rows_list = rows_list
            .into_iter()
            .flat_map(|rows| {
                ps.iter().map(move |p| {
                    let mut r = rows.clone();
                    r.push(p.clone());
                    r
                })
            })
            .collect();
    }
    rows_list.into_iter().map(|rows| Coloring::new(g, rows).unwrap()).collect()
}

/// Words over `0..a` of length at most `max_len`, shortest first.
pub fn words(a: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for c in 0..a {
                let mut x: Vec<usize> = w.clone();
                x.push(c);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn run(g: &Digraph, col: &Coloring, mut v: usize, w: &[usize]) -> usize {
    for &c in w {
        v = step(g, col, v, c);
    }
    v
}

/// Pairs reachable from `(p, q)`, the pair itself included.
pub fn pair_orbit(g: &Digraph, col: &Coloring, p: usize, q: usize) -> BTreeSet<(usize, usize)> {
    let a = alphabet(g);
    let mut seen = BTreeSet::from([(p, q)]);
    let mut stack = vec![(p, q)];
    while let Some((x, y)) = stack.pop() {
        for c in 0..a {
            let nxt = (step(g, col, x, c), step(g, col, y, c));
            if seen.insert(nxt) {
                stack.push(nxt);
            }
        }
    }
    seen
}

/// A pair synchronizes iff some word of length at most `n(n-1)/2` merges it.
pub fn syncs_by_words(g: &Digraph, col: &Coloring, p: usize, q: usize) -> bool {
    let n = g.vertex_count();
    words(alphabet(g), n * (n - 1) / 2).iter().any(|w| run(g, col, p, w) == run(g, col, q, w))
}
