use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{min_image_exact, ColoredAutomaton, PairAnalysis};
use crate::engine::Coloring;
use crate::graph::Digraph;
use crate::{Color, Error, Result, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// Witness found and confirmed minimal by the exact oracle.
    Certified,
    /// Witness found; the automaton exceeded the exact-oracle guard.
    WitnessOnly,
    Failed,
}

impl Verdict {
    pub fn is_success(self) -> bool {
        !matches!(self, Verdict::Failed)
    }
}

/// Outcome of [`verify_coloring`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyncReport {
    pub k_claimed: usize,
    /// Word mapping the state set onto `k_claimed` states.
    pub witness_word: Option<Vec<Color>>,
    pub exact_min: Option<usize>,
    /// Pairs examined by the polynomial path: merged pairs plus the pairs of
    /// the final image checked for deadlock.
    pub stable_pairs_checked: usize,
    pub verdict: Verdict,
}

impl SyncReport {
    /// `key: value` lines; words as space-separated colors, `-` when absent.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let word = match &self.witness_word {
            None => "-".to_string(),
            Some(w) => w.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
        };
        let _ = writeln!(out, "k_claimed: {}", self.k_claimed);
        let _ = writeln!(out, "witness_word: {word}");
        let _ = writeln!(
            out,
            "exact_min: {}",
            self.exact_min.map_or("-".to_string(), |m| m.to_string())
        );
        let _ = writeln!(out, "stable_pairs_checked: {}", self.stable_pairs_checked);
        let _ = writeln!(out, "verdict: {:?}", self.verdict);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn greedy(pairs: &PairAnalysis, k: usize, checked: &mut usize) -> (Vec<Color>, Vec<Vertex>) {
    let aut = pairs.automaton();
    let mut set: Vec<Vertex> = (0..aut.state_count()).collect();
    let mut word = Vec::new();
    while set.len() > k {
        let found = set.iter().enumerate().find_map(|(i, &p)| {
            set[i + 1..].iter().find(|&&q| pairs.is_synchronizing(p, q)).map(|&q| (p, q))
        });
        let Some((p, q)) = found else { break };
        *checked += 1;
        let w = pairs.merge_word(p, q).expect("synchronizing pair has a merge word");
        set = aut.image(&set, &w);
        word.extend(w);
    }
    (word, set)
}

/// Greedy merging of the lexicographically smallest synchronizing pair in
/// the current image until at most `k` states remain.
pub fn find_k_sync_word(aut: &ColoredAutomaton, k: usize) -> Result<Vec<Color>> {
    let pairs = PairAnalysis::new(aut);
    let (word, set) = greedy(&pairs, k, &mut 0);
    if set.len() > k {
        return Err(Error::NotAchievable {
            reached: set.len(),
            target: k,
        });
    }
    Ok(word)
}

/// Certifies that `coloring` is `k_claimed`-synchronizing.
///
/// The polynomial path builds a word with image exactly `k_claimed` and
/// checks that the image is pairwise deadlocked, which makes `k_claimed` the
/// minimum. Automata with at most `guard` states are additionally checked
/// by exhaustive subset search.
pub fn verify_coloring(graph: &Digraph, coloring: &Coloring, k_claimed: usize, guard: usize) -> SyncReport {
    let mut report = SyncReport {
        k_claimed,
        witness_word: None,
        exact_min: None,
        stable_pairs_checked: 0,
        verdict: Verdict::Failed,
    };
    let Ok(aut) = ColoredAutomaton::new(graph, coloring) else {
        return report;
    };
    let pairs = PairAnalysis::new(&aut);
    let mut checked = 0;
    let (word, image) = greedy(&pairs, k_claimed, &mut checked);
    let mut witness_ok = image.len() == k_claimed;
    if witness_ok {
        for (i, &p) in image.iter().enumerate() {
            for &q in &image[i + 1..] {
                checked += 1;
                if pairs.is_synchronizing(p, q) {
                    witness_ok = false;
                }
            }
        }
    }
    report.stable_pairs_checked = checked;
    if witness_ok {
        report.witness_word = Some(word);
    }
    report.exact_min = min_image_exact(&aut, guard).ok().map(|(m, _)| m);
    report.verdict = match (witness_ok, report.exact_min) {
        (true, Some(m)) if m == k_claimed => Verdict::Certified,
        (true, None) => Verdict::WitnessOnly,
        _ => Verdict::Failed,
    };
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{initial_coloring, loop_branch};
    use crate::verifier::DEFAULT_GUARD;

    #[test]
    fn cycle_verdicts() {
        let g = Digraph::cycle(3);
        let c = initial_coloring(&g).unwrap();
        assert_eq!(verify_coloring(&g, &c, 3, DEFAULT_GUARD).verdict, Verdict::Certified);
        assert_eq!(verify_coloring(&g, &c, 1, DEFAULT_GUARD).verdict, Verdict::Failed);
        assert_eq!(verify_coloring(&g, &c, 3, 2).verdict, Verdict::WitnessOnly);
    }

    #[test]
    fn already_k() {
        let g = Digraph::cycle(4);
        let a = ColoredAutomaton::new(&g, &initial_coloring(&g).unwrap()).unwrap();
        assert_eq!(find_k_sync_word(&a, 4).unwrap(), Vec::<Color>::new());
        assert_eq!(
            find_k_sync_word(&a, 2),
            Err(Error::NotAchievable { reached: 4, target: 2 })
        );
    }

    #[test]
    fn loop_word_is_short() {
        let g = Digraph::new(4, vec![vec![0, 1], vec![2, 0], vec![3, 1], vec![1, 2]]).unwrap();
        let a = ColoredAutomaton::new(&g, &loop_branch(&g, 0).unwrap()).unwrap();
        let w = find_k_sync_word(&a, 1).unwrap();
        assert!(w.len() <= 4 * 4);
        assert_eq!(a.image(&[0, 1, 2, 3], &w).len(), 1);
    }

    #[test]
    fn text_report() {
        let g = Digraph::cycle(2);
        let r = verify_coloring(&g, &initial_coloring(&g).unwrap(), 2, DEFAULT_GUARD);
        assert_eq!(
            r.to_text(),
            "k_claimed: 2\nwitness_word: \nexact_min: 2\nstable_pairs_checked: 1\nverdict: Certified\n"
        );
    }
}
