use std::collections::BTreeSet;

use super::ColoredAutomaton;
use crate::{Color, Vertex};

const NONE: u32 = u32::MAX;

/// Synchronizing pairs of an automaton, with one merging letter per pair.
///
/// Built by a backward breadth-first search on the pair automaton from the
/// diagonal, so following the stored letters from any synchronizing pair
/// reaches the diagonal along a shortest merging word.
#[derive(Debug, Clone)]
pub struct PairAnalysis<'a> {
    aut: &'a ColoredAutomaton,
    /// `via[p * n + q]`: letter taking `(p, q)` one step closer to merging.
    via: Vec<u32>,
}

impl<'a> PairAnalysis<'a> {
    pub fn new(aut: &'a ColoredAutomaton) -> Self {
        let n = aut.state_count();
        let (start, list) = aut.predecessors();
        let preds = |c: Color, v: Vertex| &list[start[c * n + v]..start[c * n + v + 1]];
        let mut via = vec![NONE; n * n];
        let mut queue: Vec<(Vertex, Vertex)> = (0..n).map(|v| (v, v)).collect();
        let mut head = 0;
        while head < queue.len() {
            let (x, y) = queue[head];
            head += 1;
            for c in 0..aut.alphabet() {
                let (px, py) = (preds(c, x), preds(c, y));
                for &a in px {
                    for &b in py {
                        if a != b && via[a * n + b] == NONE {
                            via[a * n + b] = c as u32;
                            via[b * n + a] = c as u32;
                            queue.push((a.min(b), a.max(b)));
                        }
                    }
                }
            }
        }
        Self { aut, via }
    }

    pub fn automaton(&self) -> &ColoredAutomaton {
        self.aut
    }

    /// Distinct pairs some word merges; every pair `(p, p)` counts as well.
    pub fn is_synchronizing(&self, p: Vertex, q: Vertex) -> bool {
        p == q || self.via[p * self.aut.state_count() + q] != NONE
    }

    /// Shortest word merging `p` and `q`, if any.
    pub fn merge_word(&self, mut p: Vertex, mut q: Vertex) -> Option<Vec<Color>> {
        let n = self.aut.state_count();
        let mut word = Vec::new();
        while p != q {
            let c = self.via[p * n + q];
            if c == NONE {
                return None;
            }
            word.push(c as Color);
            (p, q) = (self.aut.step(p, c as Color), self.aut.step(q, c as Color));
        }
        Some(word)
    }

    /// Every pair reachable from `(p, q)` in the pair automaton is synchronizing.
    pub fn is_stable(&self, p: Vertex, q: Vertex) -> bool {
        let n = self.aut.state_count();
        if p == q {
            return true;
        }
        let mut seen = vec![false; n * n];
        let mut stack = vec![(p.min(q), p.max(q))];
        seen[p.min(q) * n + p.max(q)] = true;
        while let Some((x, y)) = stack.pop() {
            if !self.is_synchronizing(x, y) {
                return false;
            }
            for c in 0..self.aut.alphabet() {
                let (a, b) = (self.aut.step(x, c), self.aut.step(y, c));
                if a != b {
                    let (a, b) = (a.min(b), a.max(b));
                    if !std::mem::replace(&mut seen[a * n + b], true) {
                        stack.push((a, b));
                    }
                }
            }
        }
        true
    }

    /// Unordered distinct pairs `(p < q)` that no word merges.
    pub fn deadlocks(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.aut.state_count();
        (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .filter(|&(p, q)| !self.is_synchronizing(p, q))
            .collect()
    }

    pub fn synchronizing(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.aut.state_count();
        (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .filter(|&(p, q)| self.is_synchronizing(p, q))
            .collect()
    }

    /// All stable pairs `(p < q)`, in lexicographic order: synchronizing
    /// pairs from which no deadlock is reachable.
    pub fn stable_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.aut.state_count();
        let (start, list) = self.aut.predecessors();
        let preds = |c: Color, v: Vertex| &list[start[c * n + v]..start[c * n + v + 1]];
        let mut unstable = vec![false; n * n];
        let mut queue = self.deadlocks();
        for &(p, q) in &queue {
            unstable[p * n + q] = true;
        }
        let mut head = 0;
        while head < queue.len() {
            let (x, y) = queue[head];
            head += 1;
            for c in 0..self.aut.alphabet() {
                for &a in preds(c, x) {
                    for &b in preds(c, y) {
                        if a != b {
                            let (a, b) = (a.min(b), a.max(b));
                            if !std::mem::replace(&mut unstable[a * n + b], true) {
                                queue.push((a, b));
                            }
                        }
                    }
                }
            }
        }
        (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .filter(|&(p, q)| !unstable[p * n + q])
            .collect()
    }
}

/// Unordered distinct synchronizing pairs `(p < q)`.
pub fn synchronizing_pairs(aut: &ColoredAutomaton) -> BTreeSet<(Vertex, Vertex)> {
    PairAnalysis::new(aut).synchronizing().into_iter().collect()
}

pub fn is_stable_pair(aut: &ColoredAutomaton, p: Vertex, q: Vertex) -> bool {
    PairAnalysis::new(aut).is_stable(p, q)
}
