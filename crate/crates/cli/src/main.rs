//! `roadcolor`: analyze, color, verify, generate and render digraphs.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use roadcolor::engine::{color_arbitrary, congruence_closure, Coloring};
use roadcolor::graph::{minimal_k, sccs, Digraph};
use roadcolor::io::{emit_coloring, emit_graph, generate, parse_coloring, parse_graph, render_dot};
use roadcolor::verifier::{verify_coloring, Verdict, DEFAULT_GUARD};
use roadcolor::Error;

#[derive(Parser, Debug)]
#[command(name = "roadcolor", version, about = "Minimal k-synchronizing road colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print SCCs, sink components, per-sink k and total k.
    Analyze {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a minimal k-synchronizing coloring and certify it.
    Color {
        graph: PathBuf,
        /// Coloring output (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report output (stderr when omitted).
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        oracle_guard: usize,
    },
    /// Check that a coloring is k-synchronizing; exit 0 iff certified.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        oracle_guard: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random strongly connected graph of uniform outdegree.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Required period.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a Graphviz DOT rendering.
    Render {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Overlay the congruence generated by merging `P,Q` under the coloring.
        #[arg(long, value_delimiter = ',', requires = "coloring")]
        merge: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    Lib(Error),
    Rejected(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Rejected(_) => 1,
            CliError::Io(..) | CliError::Usage(_) => 2,
            CliError::Lib(e) => match e {
                Error::ParseError { .. } | Error::InvalidColoring(_) | Error::BadWord { .. } => 3,
                Error::InvalidGraph { .. }
                | Error::MalformedGraph(_)
                | Error::NotStronglyConnected(_)
                | Error::NotUniform { .. } => 4,
                Error::NoValidColoring(_) | Error::NotSupported(_) => 5,
                Error::GenerationFailed { .. } | Error::TooLarge { .. } => 6,
                _ => 7,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Rejected(m) | CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(p.to_path_buf(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Digraph, CliError> {
    Ok(parse_graph(&read(path)?)?)
}

fn analyze(graph: &Digraph, format: Format) -> Result<String, CliError> {
    let dec = sccs(graph);
    let mk = minimal_k(graph);
    let sink_k = |c: usize| {
        mk.as_ref()
            .ok()
            .and_then(|m| m.per_sink.iter().find(|s| s.0 == c).map(|s| s.2))
    };
    let report = graph.validate();
    match format {
        Format::Json => {
            let components: Vec<_> = dec
                .components
                .iter()
                .enumerate()
                .map(|(c, vs)| {
                    serde_json::json!({
                        "vertices": vs,
                        "sink": dec.sink_flags[c],
                        "k": sink_k(c),
                    })
                })
                .collect();
            let value = serde_json::json!({
                "vertex_count": report.vertex_count,
                "edge_count": report.edge_count,
                "uniform_outdegree": report.uniform_outdegree,
                "has_loop": report.has_loop,
                "components": components,
                "k": mk.as_ref().ok().map(|m| m.k),
                "error": mk.as_ref().err().map(|e| e.to_string()),
            });
            Ok(serde_json::to_string_pretty(&value).unwrap() + "\n")
        }
        Format::Text => {
            let mut out = String::new();
            out += &format!("vertices: {}\n", report.vertex_count);
            out += &format!("edges: {}\n", report.edge_count);
            out += &format!(
                "uniform_outdegree: {}\n",
                report.uniform_outdegree.map_or("-".into(), |d| d.to_string())
            );
            out += &format!("has_loop: {}\n", report.has_loop);
            out += &format!("components: {}\n", dec.components.len());
            for (c, vs) in dec.components.iter().enumerate() {
                let members: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                let tag = match (dec.sink_flags[c], sink_k(c)) {
                    (true, Some(k)) => format!(" [sink k={k}]"),
                    (true, None) => " [sink]".into(),
                    _ => String::new(),
                };
                out += &format!("component {c}: {}{tag}\n", members.join(" "));
            }
            match &mk {
                Ok(m) => out += &format!("k: {}\n", m.k),
                Err(e) => out += &format!("k: - ({e})\n"),
            }
            Ok(out)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { graph, format, out } => {
            let g = load_graph(&graph)?;
            let text = analyze(&g, format)?;
            write_out(out.as_deref(), &text)?;
            minimal_k(&g)?;
        }
        Command::Color {
            graph,
            out,
            report,
            format,
            oracle_guard,
        } => {
            let g = load_graph(&graph)?;
            let result = color_arbitrary(&g)?;
            write_out(out.as_deref(), &emit_coloring(&result.coloring))?;
            let r = verify_coloring(&g, &result.coloring, result.k, oracle_guard);
            let text = match format {
                Format::Text => r.to_text(),
                Format::Json => r.to_json() + "\n",
            };
            match report {
                Some(p) => fs::write(&p, text).map_err(|e| CliError::Io(p, e))?,
                None => eprint!("{text}"),
            }
            if r.verdict == Verdict::Failed {
                return Err(CliError::Lib(Error::InternalError(
                    "engine output failed verification".into(),
                )));
            }
        }
        Command::Verify {
            graph,
            coloring,
            k,
            format,
            oracle_guard,
            out,
        } => {
            let g = load_graph(&graph)?;
            let c: Coloring = parse_coloring(&read(&coloring)?, &g)?;
            let r = verify_coloring(&g, &c, k, oracle_guard);
            let text = match format {
                Format::Text => r.to_text(),
                Format::Json => r.to_json() + "\n",
            };
            write_out(out.as_deref(), &text)?;
            if !r.verdict.is_success() {
                return Err(CliError::Rejected(format!("coloring is not {k}-synchronizing")));
            }
        }
        Command::Gen { seed, n, d, k, out } => {
            let g = generate(seed, n, d, k)?;
            write_out(out.as_deref(), &emit_graph(&g))?;
        }
        Command::Render {
            graph,
            coloring,
            merge,
            out,
        } => {
            let g = load_graph(&graph)?;
            let c = match &coloring {
                Some(p) => Some(parse_coloring(&read(p)?, &g)?),
                None => None,
            };
            let partition = match (&merge, &c) {
                (Some(pq), Some(c)) => {
                    if pq.len() != 2 {
                        return Err(CliError::Usage("--merge expects P,Q".into()));
                    }
                    if let Some(&v) = pq.iter().find(|&&v| v >= g.vertex_count()) {
                        return Err(CliError::Lib(Error::MalformedGraph(format!("vertex {v} out of range"))));
                    }
                    Some(congruence_closure(&g, c, (pq[0], pq[1]))?)
                }
                _ => None,
            };
            write_out(out.as_deref(), &render_dot(&g, c.as_ref(), partition.as_ref()))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("roadcolor: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
