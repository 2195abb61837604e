//! Construction of k-synchronizing colorings.
//!
//! [`color_k_sync`] handles a strongly connected graph of uniform outdegree:
//! while the graph has more than `k` vertices it finds a stable pair under
//! some coloring, merges the congruence it generates, and recurses on the
//! quotient. Colorings are lifted back level by level.
//! [`color_arbitrary`] applies this to every sink component of an arbitrary
//! digraph.

mod branches;
mod coloring;
mod quotient;
mod search;
mod spanning;

pub use branches::{common_cycle_branch, find_double_bunch, loop_branch};
pub use coloring::{initial_coloring, Coloring};
pub use quotient::{congruence_closure, lift_coloring, quotient, Partition};
pub use search::{tree_pair, Provenance, StablePairWitness};
pub use spanning::{spanning_analysis, SpanningAnalysis};

use serde::{Deserialize, Serialize};

use crate::graph::{periodicity_of_graph, sccs, Digraph};
use crate::verifier::{ColoredAutomaton, PairAnalysis};
use crate::{Color, Error, Result, Vertex};

/// Stable-pair search by replacements starting from the color-0 subgraph of
/// `coloring`. The emitted pair is checked with the stability oracle.
pub fn replacement_search(graph: &Digraph, coloring: &Coloring) -> Result<(SpanningAnalysis, StablePairWitness)> {
    let analysis = search::find_tree(graph, coloring)?
        .ok_or_else(|| Error::InternalError("no spanning subgraph with a unique maximal tree found".into()))?;
    let witness = search::witness_from_tree(graph, &analysis, Provenance::Replacements);
    let mut trace = EngineTrace::default();
    let witness = certify(graph, witness, Some(&analysis), &mut trace)?;
    Ok((analysis, witness))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineOptions {
    /// Check every emitted pair with the polynomial stability oracle.
    pub verify_pairs: bool,
    /// Recheck strong connectivity, outdegree and periodicity of every quotient.
    pub check_quotients: bool,
    /// Keep full witnesses (with their colorings) in the trace.
    pub record_witnesses: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        Self {
            verify_pairs: true,
            check_quotients: true,
            record_witnesses: false,
        }
    }
}

/// How the recursion bottomed out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Terminal {
    /// Quotient has exactly `k` vertices; any coloring is optimal.
    SizeK,
    /// A self-loop; the loop tree coloring synchronizes.
    Loop,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub vertices_before: usize,
    pub vertices_after: usize,
    pub p: Vertex,
    pub q: Vertex,
    pub provenance: Provenance,
    /// `Some(result)` when the oracle ran.
    pub pair_stable: Option<bool>,
    /// `Some(result)` when the quotient was rechecked.
    pub quotient_ok: Option<bool>,
    pub witness: Option<StablePairWitness>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineTrace {
    pub steps: Vec<StepRecord>,
    pub terminal: Option<Terminal>,
    /// Times the primary pair failed the oracle or no tree was found.
    pub fallback_activations: usize,
}

impl EngineTrace {
    pub fn depth(&self) -> usize {
        self.steps.len()
    }
}

fn certify(
    graph: &Digraph,
    witness: StablePairWitness,
    analysis: Option<&SpanningAnalysis>,
    trace: &mut EngineTrace,
) -> Result<StablePairWitness> {
    let aut = ColoredAutomaton::new(graph, &witness.coloring)?;
    let pairs = PairAnalysis::new(&aut);
    if pairs.is_stable(witness.p, witness.q) {
        return Ok(witness);
    }
    trace.fallback_activations += 1;
    if let Some(a) = analysis {
        for &p in &a.max_level_vertices {
            let (s, q) = tree_pair(a, p);
            if pairs.is_stable(s, q) {
                return Ok(StablePairWitness { p: s, q, ..witness });
            }
        }
    }
    Err(Error::InternalError(format!(
        "pair ({}, {}) from {:?} is not stable",
        witness.p, witness.q, witness.provenance
    )))
}

/// Any stable pair under the colorings realizing each color's subgraph.
fn exhaustive_witness(graph: &Digraph, coloring: &Coloring) -> Result<StablePairWitness> {
    let aut = ColoredAutomaton::new(graph, coloring)?;
    let pairs = PairAnalysis::new(&aut);
    if let Some(&(p, q)) = pairs.stable_pairs().first() {
        return Ok(StablePairWitness {
            p,
            q,
            coloring: coloring.clone(),
            provenance: Provenance::Exhaustive,
        });
    }
    Err(Error::InternalError("no stable pair under any tried coloring".into()))
}

fn find_witness(
    graph: &Digraph,
    current: &Coloring,
    opts: &EngineOptions,
    trace: &mut EngineTrace,
) -> Result<StablePairWitness> {
    if let Some((_, q, r)) = find_double_bunch(graph) {
        let w = StablePairWitness {
            p: q,
            q: r,
            coloring: current.clone(),
            provenance: Provenance::DoubleBunch,
        };
        return if opts.verify_pairs { certify(graph, w, None, trace) } else { Ok(w) };
    }
    let (analysis, provenance) = match common_cycle_branch(graph, current) {
        Some(a) => (Some(a), Provenance::CommonCycleVertex),
        None => (search::find_tree(graph, current)?, Provenance::Replacements),
    };
    match analysis {
        Some(a) => {
            let w = search::witness_from_tree(graph, &a, provenance);
            if !opts.verify_pairs {
                return Ok(w);
            }
            match certify(graph, w, Some(&a), trace) {
                Err(Error::InternalError(_)) => exhaustive_witness(graph, current),
                other => other,
            }
        }
        None => {
            trace.fallback_activations += 1;
            exhaustive_witness(graph, current)
        }
    }
}

fn quotient_preserved(parent_k: usize, d: usize, q: &Digraph) -> bool {
    q.uniform_outdegree() == Some(d)
        && q.is_strongly_connected()
        && periodicity_of_graph(q).map(|p| p.k) == Ok(parent_k)
}

/// k-synchronizing coloring of a strongly connected graph of uniform outdegree.
pub fn color_k_sync(graph: &Digraph) -> Result<(Coloring, usize)> {
    color_k_sync_traced(graph, &EngineOptions::default()).map(|(c, k, _)| (c, k))
}

/// [`color_k_sync`] with options, returning a per-level trace.
pub fn color_k_sync_traced(graph: &Digraph, opts: &EngineOptions) -> Result<(Coloring, usize, EngineTrace)> {
    let d = graph.require_uniform()?;
    if d == 0 {
        return Err(Error::NoValidColoring("outdegree 0".into()));
    }
    let k = periodicity_of_graph(graph)?.k;
    let mut trace = EngineTrace::default();
    // (parent graph, partition with preimages) per level
    let mut levels: Vec<(Digraph, Partition)> = Vec::new();
    let mut current = graph.clone();

    let mut coloring = loop {
        let n = current.vertex_count();
        if n == k {
            trace.terminal = Some(Terminal::SizeK);
            break initial_coloring(&current)?;
        }
        if let Some((v, _)) = current.find_loop() {
            trace.terminal = Some(Terminal::Loop);
            break loop_branch(&current, v)?;
        }
        let start = initial_coloring(&current)?;
        let witness = find_witness(&current, &start, opts, &mut trace)?;
        let partition = congruence_closure(&current, &witness.coloring, (witness.p, witness.q))?;
        let (next, partition) = quotient(&current, &witness.coloring, &partition)?;
        if next.vertex_count() >= n {
            return Err(Error::InternalError("quotient did not shrink".into()));
        }
        let quotient_ok = opts.check_quotients.then(|| quotient_preserved(k, d, &next));
        if quotient_ok == Some(false) {
            return Err(Error::InternalError("quotient lost strong connectivity, outdegree or period".into()));
        }
        trace.steps.push(StepRecord {
            vertices_before: n,
            vertices_after: next.vertex_count(),
            p: witness.p,
            q: witness.q,
            provenance: witness.provenance,
            pair_stable: opts.verify_pairs.then_some(true),
            quotient_ok,
            witness: opts.record_witnesses.then(|| witness.clone()),
        });
        levels.push((std::mem::replace(&mut current, next), partition));
    };

    while let Some((parent, partition)) = levels.pop() {
        coloring = lift_coloring(&parent, &partition, &coloring)?;
    }
    Ok((coloring, k, trace))
}

/// One sink component of an arbitrary digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SinkSummary {
    pub vertices: Vec<Vertex>,
    pub outdegree: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArbitraryColoring {
    pub coloring: Coloring,
    pub k: usize,
    pub sinks: Vec<SinkSummary>,
}

/// Colors every sink component with [`color_k_sync`] and every other edge
/// by slot order. `k` is the sum of the sink periodicities.
pub fn color_arbitrary(graph: &Digraph) -> Result<ArbitraryColoring> {
    if graph.vertex_count() == 0 {
        return Err(Error::NoValidColoring("graph has no vertices".into()));
    }
    let dec = sccs(graph);
    let mut rows: Vec<Vec<Color>> = (0..graph.vertex_count())
        .map(|v| (0..graph.outdegree(v)).collect())
        .collect();
    let mut sinks = Vec::new();
    for c in dec.sinks() {
        let comp = &dec.components[c];
        if let Some(&v) = comp.iter().find(|&&v| graph.outdegree(v) == 0) {
            return Err(Error::NoValidColoring(format!("sink vertex {v} has no outgoing edge")));
        }
        let d = graph.outdegree(comp[0]);
        if let Some(&v) = comp.iter().find(|&&v| graph.outdegree(v) != d) {
            return Err(Error::NotSupported(format!(
                "sink component of vertex {} has non-uniform outdegree at vertex {v}",
                comp[0]
            )));
        }
        let (sub, origin) = graph.induced(comp);
        let (sub_coloring, k) = color_k_sync(&sub)?;
        for (local, edges) in origin.iter().enumerate() {
            for (ls, &(v, s)) in edges.iter().enumerate() {
                rows[v][s] = sub_coloring.color(local, ls);
            }
        }
        sinks.push(SinkSummary {
            vertices: comp.clone(),
            outdegree: d,
            k,
        });
    }
    Ok(ArbitraryColoring {
        coloring: Coloring::new(graph, rows)?,
        k: sinks.iter().map(|s| s.k).sum(),
        sinks,
    })
}
