//! Command-line front end. The `recolour` binary is a thin wrapper around [`run_from`].
//!
//! Exit codes: `0` the computation finished (whatever its mathematical
//! outcome), `1` an error (I/O, parse, cap or budget exhausted), `2` a usage
//! error, `3` `verify` ran but some check failed.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::colouring::Colouring;
use crate::config::{Limits, ENV_ENUMERATION_CAP, ENV_LAZY_BUDGET, ENV_NODE_CAP, ENV_SEARCH_CAP};
use crate::construction::{build_family, verify, PaperInstance};
use crate::error::{Error, Result};
use crate::graph::{find_induced, max_clique, ChromaticSearch, PatternKind};
use crate::io::{read_graph_file, write_dimacs, write_dot, write_edge_list, GraphFormat, GraphInput};
use crate::reconfig::{find_frozen, is_mixing, neighbours, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "recolour", version, about = "Colouring reconfiguration toolkit")]
pub struct Cli {
    /// Maximum number of colourings in an explicit reconfiguration graph
    #[arg(long, global = true, env = ENV_NODE_CAP, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub node_cap: u64,
    /// Node budget for lazy exploration and frozen-colouring search
    #[arg(long, global = true, env = ENV_LAZY_BUDGET, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub lazy_budget: u64,
    /// Vertex cap for exact clique and chromatic-number search
    #[arg(long, global = true, env = ENV_SEARCH_CAP, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    pub search_cap: u64,
    /// Backtracking-step cap for enumerating colourings
    #[arg(long, global = true, env = ENV_ENUMERATION_CAP, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub enumeration_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Input graph format; by default inferred from the file extension
    #[arg(long, global = true)]
    pub graph_format: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the p-fold construction as a JSON bundle
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        /// Output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every claim about a construction (a bundle, a 16p-vertex graph, or --paper p)
    Verify {
        #[arg(required_unless_present = "paper", conflicts_with = "paper")]
        graph: Option<PathBuf>,
        /// Build the p-copy construction in memory instead of reading a file
        #[arg(long, value_name = "P", value_parser = clap::value_parser!(u64).range(1..))]
        paper: Option<u64>,
    },
    /// Exact chromatic number
    Chromatic { graph: PathBuf },
    /// Exact clique number
    Clique { graph: PathBuf },
    /// Search for an induced pattern (2k2, p5, P<t>)
    Induced {
        graph: PathBuf,
        #[arg(long)]
        pattern: String,
    },
    /// Decide whether R_k(G) is connected
    Mixing {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Search for frozen k-colourings
    FindFrozen {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, default_value_t = 1)]
        limit: usize,
    },
    /// List the single-vertex recolourings of a colouring
    Neighbours {
        graph: PathBuf,
        /// Colours as digits ("12312") or space separated, or a path to a colouring JSON file
        colouring: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Re-emit a graph in another format
    Convert {
        graph: PathBuf,
        #[arg(long)]
        to: String,
    },
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn error(err: &Error) -> Self {
        Outcome {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                Outcome::ok(rendered)
            }
        }
    }
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits {
            node_cap: self.node_cap,
            lazy_budget: self.lazy_budget,
            search_cap: self.search_cap as usize,
            enumeration_cap: self.enumeration_cap,
        }
    }

    fn read(&self, path: &Path) -> Result<GraphInput> {
        let format = self.graph_format.as_deref().map(str::parse::<GraphFormat>).transpose()?;
        read_graph_file(path, format).map_err(|e| match e {
            Error::Parse { line, column, message } => Error::Parse {
                line,
                column,
                message: format!("{message} (in {})", path.display()),
            },
            other => other,
        })
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(&e),
    }
}

fn render<T: Serialize>(cli: &Cli, value: &T, table: impl FnOnce() -> String, dot: impl FnOnce() -> Option<String>) -> Result<String> {
    match cli.format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(value)? + "\n"),
        OutputFormat::Table => Ok(table()),
        OutputFormat::Dot => dot().ok_or_else(|| Error::invalid("dot output is not available for this command")),
    }
}

#[derive(Serialize)]
struct ChromaticOutput<'a> {
    chromatic_number: usize,
    clique: &'a [usize],
    colouring: &'a Colouring,
}

#[derive(Serialize)]
struct CliqueOutput<'a> {
    clique_number: usize,
    clique: &'a [usize],
}

#[derive(Serialize)]
struct InducedOutput<'a> {
    pattern: &'a str,
    witness: Option<&'a [usize]>,
}

#[derive(Serialize)]
struct NeighboursOutput<'a> {
    colouring: &'a Colouring,
    neighbours: &'a [Colouring],
}

fn join_numbers(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let limits = cli.limits();
    limits.validate()?;
    let out = match &cli.command {
        Command::Construct { p, out } => {
            let instance = build_family(*p as usize)?;
            let json = instance.to_json()? + "\n";
            match out {
                Some(path) => {
                    std::fs::write(path, &json)?;
                    format!(
                        "wrote p = {} bundle ({} vertices, {} edges) to {}\n",
                        instance.p,
                        instance.graph.n(),
                        instance.graph.m(),
                        path.display()
                    )
                }
                None => json,
            }
        }
        Command::Verify { graph, paper } => {
            let instance = match (graph, paper) {
                (_, Some(p)) => build_family(*p as usize)?,
                (Some(path), None) => match cli.read(path)? {
                    GraphInput::Instance(inst) => inst,
                    GraphInput::Graph(g) => PaperInstance::with_standard_colourings(g)?,
                },
                (None, None) => unreachable!("clap requires a graph or --paper"),
            };
            let report = verify(&instance, &limits);
            let text = render(cli, &report, || format!("{report}\n"), || Some(write_dot(&instance.graph, Some(&instance.beta))))?;
            let code = if report.passed { EXIT_OK } else { EXIT_CHECK_FAILED };
            return Ok(Outcome { code, stdout: text, stderr: String::new() });
        }
        Command::Chromatic { graph } => {
            let g = cli.read(graph)?.into_graph();
            let s = ChromaticSearch::run(&g, limits.search_cap)?;
            let payload = ChromaticOutput {
                chromatic_number: s.chromatic_number,
                clique: &s.clique,
                colouring: &s.colouring,
            };
            render(cli, &payload, || format!("{}\n", s.chromatic_number), || Some(write_dot(&g, Some(&s.colouring))))?
        }
        Command::Clique { graph } => {
            let g = cli.read(graph)?.into_graph();
            let c = max_clique(&g, limits.search_cap)?;
            let payload = CliqueOutput { clique_number: c.len(), clique: &c };
            render(cli, &payload, || format!("{}\n", c.len()), || None)?
        }
        Command::Induced { graph, pattern } => {
            let g = cli.read(graph)?.into_graph();
            let kind: PatternKind = pattern.parse()?;
            let witness = find_induced(&g, &kind)?;
            let payload = InducedOutput { pattern, witness: witness.as_deref() };
            render(
                cli,
                &payload,
                || match &witness {
                    None => "none\n".to_string(),
                    Some(w) => format!("{}\n", join_numbers(w)),
                },
                || None,
            )?
        }
        Command::Mixing { graph, k } => {
            let g = cli.read(graph)?.into_graph();
            let verdict = is_mixing(&g, *k, &limits)?;
            let frozen = match &verdict.witness {
                Some(Witness::Frozen(c)) => Some(c.clone()),
                _ => None,
            };
            render(
                cli,
                &verdict,
                || {
                    let components = verdict.components.map_or("unknown".to_string(), |c| c.to_string());
                    let witness = match &verdict.witness {
                        None => "none".to_string(),
                        Some(Witness::Frozen(c)) => format!("frozen {c}"),
                        Some(Witness::Separated([a, b])) => format!("separated {a} | {b}"),
                    };
                    format!("connected={} components={components} witness={witness}\n", verdict.connected)
                },
                || frozen.map(|c| write_dot(&g, Some(&c))),
            )?
        }
        Command::FindFrozen { graph, k, limit } => {
            let g = cli.read(graph)?.into_graph();
            let result = find_frozen(&g, *k, *limit, limits.lazy_budget)?;
            render(
                cli,
                &result,
                || {
                    let mut s = format!(
                        "found {} frozen {k}-colouring(s); exhaustive={} nodes={}\n",
                        result.frozen.len(),
                        result.exhaustive,
                        result.nodes
                    );
                    for c in &result.frozen {
                        s.push_str(&format!("{c}\n"));
                    }
                    s
                },
                || result.witness.as_ref().map(|c| write_dot(&g, Some(c))),
            )?
        }
        Command::Neighbours { graph, colouring, k } => {
            let g = cli.read(graph)?.into_graph();
            let c = parse_colouring_arg(colouring, *k)?;
            let list: Vec<Colouring> = neighbours(&g, &c)?.collect();
            let payload = NeighboursOutput { colouring: &c, neighbours: &list };
            render(cli, &payload, || list.iter().map(|c| format!("{c}\n")).collect(), || None)?
        }
        Command::Convert { graph, to } => {
            let input = cli.read(graph)?;
            match to.to_ascii_lowercase().as_str() {
                "edgelist" | "edge-list" | "el" => write_edge_list(input.graph()),
                "dimacs" | "col" => write_dimacs(input.graph()),
                "json" => serde_json::to_string_pretty(input.graph())? + "\n",
                "dot" => write_dot(input.graph(), None),
                other => return Err(Error::invalid(format!("unknown output format {other:?}"))),
            }
        }
    };
    Ok(Outcome::ok(out))
}

fn parse_colouring_arg(arg: &str, k: u32) -> Result<Colouring> {
    let path = Path::new(arg);
    if arg.ends_with(".json") && path.exists() {
        let c: Colouring = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        if c.k() != k {
            return Err(Error::invalid(format!("colouring file has k = {} but --k {k} was given", c.k())));
        }
        return Ok(c);
    }
    Colouring::parse(arg, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_copies_is_a_usage_error() {
        let out = run_from(["recolour", "construct", "--p", "0"]);
        assert_eq!(out.code, EXIT_USAGE);
        assert!(!out.stderr.is_empty());
    }

    #[test]
    fn verify_needs_an_input() {
        assert_eq!(run_from(["recolour", "verify"]).code, EXIT_USAGE);
    }

    #[test]
    fn base_verification_passes() {
        let out = run_from(["recolour", "verify", "--paper", "1"]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
        assert!(out.stdout.contains("overall: PASS"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = run_from(["recolour", "--help"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("find-frozen"));
    }
}
