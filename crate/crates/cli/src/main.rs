use std::io::Read;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use levelable::SOCLE_BOX_CAP;
use levelable_kit::{
    cmd_construct, cmd_family, cmd_graph, cmd_levelable, cmd_oracle, cmd_socle, ComplexDocument,
    GraphDocument, Outcome, Strategy,
};

/// Socle vectors and levelability of artinian quotients of Stanley-Reisner rings.
#[derive(Parser)]
#[command(name = "levelable-kit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the h-vector, socle vector, and inverse-system generators
    Socle {
        /// Drop exponent-1 vertices before computing
        #[arg(long)]
        normalize: bool,
        /// Complex document (JSON file, or - for standard input)
        input: String,
    },
    /// Decide whether some exponent tuple makes the quotient level
    Levelable {
        /// Drop exponent-1 vertices before deciding, if exponents are present
        #[arg(long)]
        normalize: bool,
        /// Complex document (JSON file, or - for standard input)
        input: String,
    },
    /// Build a level exponent tuple by a named construction or the solver
    Construct {
        /// Construction to use
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
        /// Drop exponent-1 vertices before constructing, if exponents are present
        #[arg(long)]
        normalize: bool,
        /// Complex document (JSON file, or - for standard input)
        input: String,
    },
    /// Emit the n-vertex complex that no exponent tuple makes level
    Family {
        /// Accepted for interface symmetry; the family has no exponents
        #[arg(long)]
        normalize: bool,
        /// Number of vertices (at least 5)
        n: usize,
    },
    /// Independence complex and last Betti numbers of a graph's edge ideal
    Graph {
        /// Accepted for interface symmetry; graphs carry no exponents
        #[arg(long)]
        normalize: bool,
        /// Graph document (JSON file, or - for standard input)
        input: String,
    },
    /// Brute-force the socle and compare it with the predicted generators
    Oracle {
        /// Largest number of monomials the enumeration may visit
        #[arg(long, default_value_t = SOCLE_BOX_CAP)]
        max_box: u64,
        /// Drop exponent-1 vertices before enumerating
        #[arg(long)]
        normalize: bool,
        /// Complex document (JSON file, or - for standard input)
        input: String,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Socle { normalize, input } => {
            let doc = ComplexDocument::parse(&read_input(&input)?)?;
            cmd_socle(&doc, normalize)
        }
        Command::Levelable { normalize, input } => {
            let doc = ComplexDocument::parse(&read_input(&input)?)?;
            cmd_levelable(&doc, normalize)
        }
        Command::Construct {
            strategy,
            normalize,
            input,
        } => {
            let doc = ComplexDocument::parse(&read_input(&input)?)?;
            cmd_construct(&doc, strategy, normalize)
        }
        Command::Family { normalize: _, n } => cmd_family(n),
        Command::Graph {
            normalize: _,
            input,
        } => {
            let doc = GraphDocument::parse(&read_input(&input)?)?;
            cmd_graph(&doc)
        }
        Command::Oracle {
            max_box,
            normalize,
            input,
        } => {
            let doc = ComplexDocument::parse(&read_input(&input)?)?;
            cmd_oracle(&doc, max_box, normalize)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.json);
            ExitCode::from(outcome.code as u8)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
