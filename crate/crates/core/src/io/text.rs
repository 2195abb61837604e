//! Graph format: a header `n d_max`, then one line `deg t_1 ... t_deg` per
//! vertex in order. Coloring format: one line per vertex listing the color
//! of each slot. Lines starting with `#` are comments in both.

use crate::engine::Coloring;
use crate::graph::Digraph;
use crate::{Error, Result};

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::ParseError {
                line: lineno,
                message: format!("expected a nonnegative integer, found `{tok}`"),
            })
        })
        .collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
}

pub fn parse_graph(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text).filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or(Error::ParseError {
        line: 1,
        message: "missing header `n d_max`".into(),
    })?;
    let header = numbers(header, hline)?;
    let [n, d_max] = header[..] else {
        return Err(Error::ParseError {
            line: hline,
            message: "header must be `n d_max`".into(),
        });
    };
    let mut rows = Vec::with_capacity(n);
    for v in 0..n {
        let (lineno, line) = lines.next().ok_or(Error::ParseError {
            line: text.lines().count() + 1,
            message: format!("missing adjacency line for vertex {v}"),
        })?;
        let nums = numbers(line, lineno)?;
        let (&deg, targets) = nums.split_first().ok_or(Error::ParseError {
            line: lineno,
            message: "empty adjacency line".into(),
        })?;
        if targets.len() != deg {
            return Err(Error::ParseError {
                line: lineno,
                message: format!("degree {deg} but {} targets", targets.len()),
            });
        }
        if deg > d_max {
            return Err(Error::ParseError {
                line: lineno,
                message: format!("degree {deg} exceeds d_max {d_max}"),
            });
        }
        if let Some(&t) = targets.iter().find(|&&t| t >= n) {
            return Err(Error::ParseError {
                line: lineno,
                message: format!("target {t} out of range for {n} vertices"),
            });
        }
        rows.push(targets.to_vec());
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::ParseError {
            line: lineno,
            message: "trailing data after the last vertex".into(),
        });
    }
    Digraph::new(n, rows)
}

/// Canonical form: single spaces, `d_max` equal to the largest outdegree.
pub fn emit_graph(graph: &Digraph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.max_outdegree());
    for row in graph.adjacency() {
        out.push_str(&row.len().to_string());
        for t in row {
            out.push(' ');
            out.push_str(&t.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn parse_coloring(text: &str, graph: &Digraph) -> Result<Coloring> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let n = graph.vertex_count();
    let mut rows = Vec::with_capacity(n);
    for v in 0..n {
        let (lineno, line) = lines.get(v).copied().ok_or(Error::ParseError {
            line: text.lines().count() + 1,
            message: format!("missing color line for vertex {v}"),
        })?;
        let nums = numbers(line, lineno)?;
        if nums.len() != graph.outdegree(v) {
            return Err(Error::ParseError {
                line: lineno,
                message: format!("vertex {v} has {} edges but {} colors", graph.outdegree(v), nums.len()),
            });
        }
        rows.push(nums);
    }
    if let Some((lineno, _)) = lines[n.min(lines.len())..].iter().find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::ParseError {
            line: *lineno,
            message: "trailing data after the last vertex".into(),
        });
    }
    Coloring::new(graph, rows)
}

pub fn emit_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    for row in coloring.rows() {
        let line: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
