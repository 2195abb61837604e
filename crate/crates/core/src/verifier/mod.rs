//! Certification of colorings, independent of how they were built.
//!
//! The polynomial checks work on the pair automaton: a pair of states is
//! synchronizing when some word merges it, and stable when every word keeps
//! it synchronizing. [`min_image_exact`] is the exponential ground truth,
//! a breadth-first search over subsets of the state set.

mod automaton;
mod exact;
mod pairs;
mod report;

pub use automaton::{apply_word, ColoredAutomaton};
pub use exact::{min_image_exact, min_rank_over_all_colorings, DEFAULT_GUARD, MAX_GUARD};
pub use pairs::{is_stable_pair, synchronizing_pairs, PairAnalysis};
pub use report::{find_k_sync_word, verify_coloring, SyncReport, Verdict};
