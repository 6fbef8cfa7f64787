//! `braceforge` command-line front end.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use braceforge::catalog::{catalog, parse_brace_with_cap};
use braceforge::ideals::{all_sub_braces, is_ideal, is_left_ideal};
use braceforge::properties::{run, select, Outcome};
use braceforge::report::analyze;
use braceforge::ybe::solution_from_brace;
use braceforge::SkewBrace;
use clap::{Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "braceforge", version, about = "Finite skew brace toolkit")]
struct Cli {
    /// Largest brace order accepted from builders and files.
    #[arg(
        long,
        global = true,
        env = "BRACEFORGE_ORDER_CAP",
        default_value_t = 512
    )]
    order_cap: usize,

    /// Machine-readable JSON instead of text tables.
    #[arg(long, global = true)]
    json: bool,

    /// Include product-tree and ideal witnesses in reports.
    #[arg(long, global = true)]
    witnesses: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a brace and write its file (stdout unless --output is given).
    Construct {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Structural report as JSON.
    Analyze { spec: String },
    /// Run a property suite (`all`, an exact name, or a prefix ending in `*`).
    Verify {
        selector: String,
        /// Restrict to these braces; defaults to the whole catalog.
        #[arg(short, long = "brace")]
        braces: Vec<String>,
        /// Skip catalog braces above this order.
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Export the Yang–Baxter solution of a brace.
    Solution { spec: String },
    /// List sub-skew braces (exploratory).
    Subskewbraces {
        spec: String,
        #[arg(long, default_value_t = 20_000)]
        limit: usize,
    },
    /// List catalog names with their orders.
    Catalog,
}

fn load(spec: &str, cap: usize) -> Result<SkewBrace> {
    parse_brace_with_cap(spec, cap).with_context(|| format!("cannot build {spec:?}"))
}

fn print_json<T: Serialize>(value: &T, compact: bool) -> Result<()> {
    let text = if compact {
        serde_json::to_string(value)?
    } else {
        serde_json::to_string_pretty(value)?
    };
    let mut out = std::io::stdout().lock();
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct SubBraceRow {
    size: usize,
    elements: Vec<usize>,
    left_ideal: bool,
    ideal: bool,
}

fn verify(cli: &Cli, selector: &str, names: &[String], max_order: Option<usize>) -> Result<bool> {
    let properties = select(selector)?;
    let braces: Vec<(String, SkewBrace)> = if names.is_empty() {
        let limit = max_order.unwrap_or(cli.order_cap);
        catalog()
            .into_iter()
            .filter(|(_, b)| b.order() <= limit)
            .collect()
    } else {
        names
            .iter()
            .map(|n| load(n, cli.order_cap).map(|b| (n.clone(), b)))
            .collect::<Result<_>>()?
    };
    let results = run(&properties, &braces);
    let failed = results.iter().any(|r| r.outcome.is_fail());
    if cli.json {
        print_json(&results, true)?;
    } else {
        let mut out = std::io::stdout().lock();
        for r in &results {
            let (tag, detail) = match &r.outcome {
                Outcome::Pass => ("PASS", String::new()),
                Outcome::Fail(w) => ("FAIL", format!("  {w}")),
                Outcome::OutOfHypothesis(w) => ("SKIP", format!("  out of hypothesis: {w}")),
            };
            writeln!(out, "{tag}  {:<45} {}{detail}", r.property, r.brace)?;
        }
        let count = |f: fn(&Outcome) -> bool| results.iter().filter(|r| f(&r.outcome)).count();
        writeln!(
            out,
            "{} passed, {} failed, {} out of hypothesis",
            count(|o| *o == Outcome::Pass),
            count(Outcome::is_fail),
            count(|o| matches!(o, Outcome::OutOfHypothesis(_))),
        )?;
    }
    Ok(!failed)
}

fn execute(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Construct { spec, output } => {
            let file = load(spec, cli.order_cap)?.to_file();
            let text = serde_json::to_string(&file)?;
            match output {
                Some(path) => fs::write(path, text + "\n")
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => println!("{text}"),
            }
        }
        Command::Analyze { spec } => {
            let a = load(spec, cli.order_cap)?;
            print_json(&analyze(spec, &a, cli.witnesses), cli.json)?;
        }
        Command::Verify {
            selector,
            braces,
            max_order,
        } => return verify(cli, selector, braces, *max_order),
        Command::Solution { spec } => {
            let a = load(spec, cli.order_cap)?;
            let s = solution_from_brace(&a)?;
            print_json(&s.to_file(), true)?;
        }
        Command::Subskewbraces { spec, limit } => {
            let a = load(spec, cli.order_cap)?;
            let rows: Vec<SubBraceRow> = all_sub_braces(&a, *limit)?
                .into_iter()
                .map(|s| SubBraceRow {
                    size: s.len(),
                    left_ideal: is_left_ideal(&a, &s),
                    ideal: is_ideal(&a, &s).is_ideal(),
                    elements: s.to_vec(),
                })
                .collect();
            if cli.json {
                print_json(&rows, true)?;
            } else {
                for r in &rows {
                    println!(
                        "{:>4}  left_ideal={:<5} ideal={:<5} {:?}",
                        r.size, r.left_ideal, r.ideal, r.elements
                    );
                }
                println!("{} sub-skew braces", rows.len());
            }
        }
        Command::Catalog => {
            for (name, b) in catalog() {
                println!("{:>4}  {name}", b.order());
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
