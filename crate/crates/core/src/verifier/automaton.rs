use crate::engine::Coloring;
use crate::graph::Digraph;
use crate::{Color, Error, Result, Vertex};

/// Transition table of a colored graph.
///
/// Letters a vertex has no edge for act as the identity on that vertex, so
/// colorings of graphs with mixed outdegree still give a total table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredAutomaton {
    n: usize,
    alphabet: usize,
    delta: Vec<Vertex>,
    complete: bool,
}

impl ColoredAutomaton {
    pub fn new(graph: &Digraph, coloring: &Coloring) -> Result<Self> {
        let n = graph.vertex_count();
        if coloring.vertex_count() != n {
            return Err(Error::InvalidColoring("coloring does not match graph".into()));
        }
        let alphabet = coloring.alphabet_size();
        let mut delta: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, alphabet)).collect();
        let mut defined = 0;
        for v in 0..n {
            if coloring.row(v).len() != graph.outdegree(v) {
                return Err(Error::InvalidColoring(format!("vertex {v} row length mismatch")));
            }
            for (s, &c) in coloring.row(v).iter().enumerate() {
                delta[v * alphabet + c] = graph.target(v, s);
                defined += 1;
            }
        }
        Ok(Self {
            n,
            alphabet,
            delta,
            complete: defined == n * alphabet,
        })
    }

    /// Builds directly from `delta[v * alphabet + c]`.
    pub fn from_table(n: usize, alphabet: usize, delta: Vec<Vertex>) -> Result<Self> {
        if delta.len() != n * alphabet || delta.iter().any(|&t| t >= n) {
            return Err(Error::MalformedGraph("transition table has wrong shape".into()));
        }
        Ok(Self {
            n,
            alphabet,
            delta,
            complete: true,
        })
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    /// Every state has an edge of every color (no identity padding).
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    #[inline]
    pub fn step(&self, v: Vertex, c: Color) -> Vertex {
        self.delta[v * self.alphabet + c]
    }

    pub fn run(&self, mut v: Vertex, word: &[Color]) -> Vertex {
        for &c in word {
            v = self.step(v, c);
        }
        v
    }

    pub(crate) fn check_word(&self, word: &[Color]) -> Result<()> {
        match word.iter().position(|&c| c >= self.alphabet) {
            None => Ok(()),
            Some(position) => Err(Error::BadWord {
                position,
                color: word[position],
                alphabet: self.alphabet,
            }),
        }
    }

    /// Image of `states` under `word`, sorted and deduplicated.
    pub fn image(&self, states: &[Vertex], word: &[Color]) -> Vec<Vertex> {
        let mut mark = vec![false; self.n];
        let mut cur: Vec<Vertex> = Vec::with_capacity(states.len());
        for &v in states {
            if !std::mem::replace(&mut mark[v], true) {
                cur.push(v);
            }
        }
        for &c in word {
            for &v in &cur {
                mark[v] = false;
            }
            let mut nxt = Vec::with_capacity(cur.len());
            for &v in &cur {
                let t = self.step(v, c);
                if !std::mem::replace(&mut mark[t], true) {
                    nxt.push(t);
                }
            }
            cur = nxt;
        }
        cur.sort_unstable();
        cur
    }

    /// Predecessors per color in CSR form: `pred[c][start[c*n+v]..start[c*n+v+1]]`.
    pub(crate) fn predecessors(&self) -> (Vec<usize>, Vec<Vertex>) {
        let (n, a) = (self.n, self.alphabet);
        let mut start = vec![0usize; n * a + 1];
        for v in 0..n {
            for c in 0..a {
                start[c * n + self.step(v, c) + 1] += 1;
            }
        }
        for i in 0..n * a {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut list = vec![0; n * a];
        for v in 0..n {
            for c in 0..a {
                let slot = &mut fill[c * n + self.step(v, c)];
                list[*slot] = v;
                *slot += 1;
            }
        }
        (start, list)
    }
}

/// Image of `states` under `word`; colors must lie in the alphabet.
pub fn apply_word(aut: &ColoredAutomaton, states: &[Vertex], word: &[Color]) -> Result<Vec<Vertex>> {
    aut.check_word(word)?;
    if let Some(&v) = states.iter().find(|&&v| v >= aut.state_count()) {
        return Err(Error::MalformedGraph(format!("state {v} out of range")));
    }
    Ok(aut.image(states, word))
}
