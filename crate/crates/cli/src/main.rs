//! `treecover`: check, realize and unfold universal-cover neighborhoods.
//!
//! Exit codes: 0 graphical / verified, 1 not graphical / mismatch, 2 input
//! error, 3 internal error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use treecover::oracle::{cross_validate, CrossValidation, OracleReport};
use treecover::{
    build_table, check_neighborhood, first_mismatch, max_depth, neighborhood_collection, parse_collection_lines,
    realize_neighborhood, write_collection, RealizeError, RootedTree, SimpleGraph,
};

#[derive(Parser, Debug)]
#[command(
    name = "treecover",
    version,
    about = "Realize rooted-tree collections as universal-cover neighborhoods"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a tree collection is graphical; prints a JSON verdict.
    Check {
        /// Tree collection file, or `-` for stdin.
        trees: PathBuf,
        /// Depth h; defaults to the largest tree depth.
        #[arg(long)]
        depth: Option<usize>,
        /// Include the typed degree table in the output.
        #[arg(long)]
        explain: bool,
    },
    /// Build a graph realizing a tree collection.
    Realize {
        trees: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        depth: Option<usize>,
        /// Unfold the result and compare it against the input.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the depth-h universal-cover ball of every vertex of a graph.
    Neighborhoods {
        /// Graph edge-list file, or `-` for stdin.
        graph: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a graph realizes a tree collection vertex by vertex.
    Verify {
        graph: PathBuf,
        trees: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Cross-validate the checker against brute-force enumeration.
    Selftest {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 3)]
        mutants_per_case: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Dot,
}

enum Failure {
    Input(anyhow::Error),
    Internal(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

const GRAPHICAL: u8 = 0;
const NOT_GRAPHICAL: u8 = 1;
const INPUT_ERROR: u8 = 2;
const INTERNAL_ERROR: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error (please report): {msg}");
            ExitCode::from(INTERNAL_ERROR)
        }
    }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

/// Trees of a collection file and the depth to use. Trees deeper than an
/// explicit depth are reported with their line numbers.
fn load_trees(path: &Path, depth: Option<usize>) -> anyhow::Result<(Vec<RootedTree>, usize)> {
    let text = read_input(path)?;
    let lines = parse_collection_lines(&text).with_context(|| format!("parsing {}", path.display()))?;
    let trees: Vec<RootedTree> = lines.iter().map(|(_, t)| t.clone()).collect();
    let h = depth.unwrap_or_else(|| max_depth(&trees));
    let too_deep: Vec<String> = lines
        .iter()
        .filter(|(_, t)| t.depth() > h)
        .map(|(line, t)| format!("line {line} (depth {})", t.depth()))
        .collect();
    if !too_deep.is_empty() {
        return Err(anyhow!(
            "{}: trees deeper than --depth {h}: {}",
            path.display(),
            too_deep.join(", ")
        ));
    }
    Ok((trees, h))
}

fn load_graph(path: &Path) -> anyhow::Result<SimpleGraph> {
    let text = read_input(path)?;
    SimpleGraph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Check { trees, depth, explain } => {
            let (trees, h) = load_trees(&trees, depth)?;
            let table = build_table(&trees, h).map_err(anyhow::Error::from)?;
            let verdict = check_neighborhood(&table);
            let mut out = serde_json::to_value(verdict.report(h)).map_err(anyhow::Error::from)?;
            if explain {
                out["table"] = serde_json::to_value(table.to_dump()).map_err(anyhow::Error::from)?;
            }
            print_json(&out)?;
            Ok(if verdict.graphical() { GRAPHICAL } else { NOT_GRAPHICAL })
        }

        Command::Realize {
            trees,
            output,
            depth,
            verify,
            format,
        } => {
            let (trees, h) = load_trees(&trees, depth)?;
            let realization = match realize_neighborhood(&trees, h) {
                Ok(r) => r,
                Err(RealizeError::NotGraphical(verdict)) => {
                    print_json(&verdict.report(h))?;
                    eprintln!("not graphical; no graph written");
                    return Ok(NOT_GRAPHICAL);
                }
                Err(e) if e.is_internal() => return Err(Failure::Internal(e.to_string())),
                Err(e) => return Err(Failure::Input(e.into())),
            };
            if verify {
                if let Some(v) = first_mismatch(&realization.graph, &trees, h) {
                    return Err(Failure::Internal(format!(
                        "realization fails verification at vertex {v}"
                    )));
                }
            }
            let text = match format {
                Format::Text => realization.graph.to_edge_list(),
                Format::Dot => realization.graph.to_dot(),
            };
            write_output(output.as_deref(), &text)?;
            Ok(GRAPHICAL)
        }

        Command::Neighborhoods { graph, depth, output } => {
            let graph = load_graph(&graph)?;
            write_output(
                output.as_deref(),
                &write_collection(&neighborhood_collection(&graph, depth)),
            )?;
            Ok(GRAPHICAL)
        }

        Command::Verify { graph, trees, depth } => {
            let graph = load_graph(&graph)?;
            let (trees, h) = load_trees(&trees, depth)?;
            if trees.len() != graph.n() {
                return Err(Failure::Input(anyhow!(
                    "graph has {} vertices but the collection has {} trees",
                    graph.n(),
                    trees.len()
                )));
            }
            let mismatch = first_mismatch(&graph, &trees, h);
            print_json(&json!({ "verified": mismatch.is_none(), "h": h, "vertex": mismatch }))?;
            match mismatch {
                None => Ok(GRAPHICAL),
                Some(v) => {
                    eprintln!("vertex {v}: cover ball differs from its tree");
                    Ok(NOT_GRAPHICAL)
                }
            }
        }

        Command::Selftest {
            max_n,
            depth,
            mutants_per_case,
            seed,
        } => {
            let mut reports: Vec<OracleReport> = Vec::new();
            for n in 0..=max_n {
                for h in 1..=depth {
                    let report = cross_validate(CrossValidation {
                        n,
                        h,
                        mutants_per_case,
                        seed,
                    })
                    .map_err(anyhow::Error::from)?;
                    eprintln!(
                        "n = {n}, h = {h}: {} graphs, {} mutants, {} disagreements",
                        report.graphs,
                        report.mutants,
                        report.disagreements.len()
                    );
                    reports.push(report);
                }
            }
            let certified = reports.iter().all(OracleReport::certified);
            print_json(&json!({ "certified": certified, "reports": reports }))?;
            Ok(if certified { GRAPHICAL } else { NOT_GRAPHICAL })
        }
    }
}
