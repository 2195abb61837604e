use std::collections::HashMap;

use super::ColoredAutomaton;
use crate::batch::Exec;
use crate::engine::Coloring;
use crate::graph::Digraph;
use crate::{Color, Error, Result};

pub const DEFAULT_GUARD: usize = 15;
/// Subsets are encoded as `u64` bitmasks.
pub const MAX_GUARD: usize = 63;
/// Frontiers smaller than this are expanded sequentially.
const PAR_FRONTIER: usize = 512;

fn image_mask(aut: &ColoredAutomaton, mut set: u64, c: Color) -> u64 {
    let mut out = 0u64;
    while set != 0 {
        let v = set.trailing_zeros() as usize;
        set &= set - 1;
        out |= 1u64 << aut.step(v, c);
    }
    out
}

/// Smallest image of the full state set under any word, with a shortest
/// word attaining it. Breadth-first search over reachable subsets.
pub fn min_image_exact(aut: &ColoredAutomaton, guard: usize) -> Result<(usize, Vec<Color>)> {
    min_image_exact_with(aut, guard, Exec::default())
}

pub(crate) fn min_image_exact_with(aut: &ColoredAutomaton, guard: usize, exec: Exec) -> Result<(usize, Vec<Color>)> {
    let n = aut.state_count();
    let guard = guard.min(MAX_GUARD);
    if n > guard {
        return Err(Error::TooLarge { n, guard });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let full = (1u64 << n) - 1;
    // parent subset and letter
    let mut parent: HashMap<u64, (u64, Color)> = HashMap::from([(full, (full, 0))]);
    let mut best = full;
    let mut frontier = vec![full];
    while !frontier.is_empty() && best.count_ones() > 1 {
        let mode = if frontier.len() >= PAR_FRONTIER { exec } else { Exec::Sequential };
        let images: Vec<Vec<u64>> = mode.map(&frontier, |&s| {
            (0..aut.alphabet()).map(|c| image_mask(aut, s, c)).collect()
        });
        let mut next = Vec::new();
        for (&s, row) in frontier.iter().zip(&images) {
            for (c, &t) in row.iter().enumerate() {
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(t) {
                    e.insert((s, c));
                    if t.count_ones() < best.count_ones() {
                        best = t;
                    }
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    let mut word = Vec::new();
    let mut s = best;
    while s != full {
        let (p, c) = parent[&s];
        word.push(c);
        s = p;
    }
    word.reverse();
    Ok((best.count_ones() as usize, word))
}

fn permutations(d: usize) -> Vec<Vec<Color>> {
    fn rec(prefix: &mut Vec<Color>, used: &mut [bool], out: &mut Vec<Vec<Color>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for c in 0..used.len() {
            if !used[c] {
                used[c] = true;
                prefix.push(c);
                rec(prefix, used, out);
                prefix.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

/// Brute force over all `(d!)^n` colorings of a uniform-outdegree graph:
/// the least [`min_image_exact`] value and a coloring attaining it.
pub fn min_rank_over_all_colorings(graph: &Digraph, guard: usize, exec: Exec) -> Result<(usize, Coloring)> {
    let d = graph.require_uniform()?;
    let n = graph.vertex_count();
    let perms = permutations(d);
    let total = (perms.len() as u128).checked_pow(n as u32).filter(|&t| t <= 1 << 24).ok_or(Error::TooLarge { n, guard })?;
    let decode = |mut idx: u64| -> Coloring {
        let rows = (0..n)
            .map(|_| {
                let r = perms[(idx % perms.len() as u64) as usize].clone();
                idx /= perms.len() as u64;
                r
            })
            .collect();
        Coloring::from_rows_unchecked(rows)
    };
    let indices: Vec<u64> = (0..total as u64).collect();
    let ranks: Vec<Result<usize>> = exec.map(&indices, |&i| {
        let aut = ColoredAutomaton::new(graph, &decode(i))?;
        Ok(min_image_exact_with(&aut, guard, Exec::Sequential)?.0)
    });
    let mut best: Option<(usize, u64)> = None;
    for (i, r) in ranks.into_iter().enumerate() {
        let r = r?;
        if best.is_none_or(|(b, _)| r < b) {
            best = Some((r, i as u64));
        }
    }
    let (rank, idx) = best.expect("at least one coloring");
    Ok((rank, decode(idx)))
}
