mod commands;
mod error;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::exit;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "knotforge", version, about = "Knot diagrams, exact invariants and finite-type probes")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One input diagram; `--file` auto-detects the notation (`-` reads stdin).
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct DiagramInput {
    #[arg(long)]
    pub pd: Option<String>,
    #[arg(long)]
    pub gauss: Option<String>,
    #[arg(long)]
    pub braid: Option<String>,
    #[arg(long = "diagram-json")]
    pub diagram_json: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Notation {
    Pd,
    Gauss,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a diagram and print it in another notation.
    Parse {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long, value_enum, default_value_t = Notation::Pd)]
        to: Notation,
        /// Relabel canonically before printing.
        #[arg(long)]
        canonical: bool,
    },
    /// Evaluate named invariants.
    Invariant {
        #[command(flatten)]
        input: DiagramInput,
        /// Invariant name (repeatable): jones, conway, c:n, det, colorings:m, arf, a:n, components.
        #[arg(long = "name", required = true)]
        names: Vec<String>,
    },
    /// Run an alternating-sum probe over a corpus.
    Probe {
        #[command(subcommand)]
        kind: ProbeCommand,
    },
    /// Insert full twists into strand bundles.
    Twist {
        #[command(flatten)]
        input: DiagramInput,
        /// Strands as `arc±` left to right, e.g. `3+,5-` (repeatable, one per region).
        #[arg(long = "region", required = true)]
        regions: Vec<String>,
        /// Number of full twists per region.
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        n: i64,
    },
    /// Connected sum of two knots.
    Csum {
        /// First knot in any notation.
        #[arg(long)]
        left: String,
        /// Second knot in any notation.
        #[arg(long)]
        right: String,
        #[arg(long, default_value_t = 1)]
        left_arc: u32,
        #[arg(long, default_value_t = 1)]
        right_arc: u32,
    },
    /// The built-in knot table.
    Census {
        /// Recompute cached values through the reference evaluators.
        #[arg(long)]
        verify: bool,
        /// Invariants to tabulate (default: all registered).
        #[arg(long = "name")]
        names: Vec<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ProbeFlags {
    #[arg(long)]
    pub invariant: String,
    #[arg(long, default_value_t = 0)]
    pub order: usize,
    /// Maximum number of invariant evaluations.
    #[arg(long, env = "KNOTFORGE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// `census` or a file with one diagram per line (`#` starts a comment).
    #[arg(long, default_value = "census")]
    pub corpus: String,
    /// Stop after this many collections per diagram.
    #[arg(long)]
    pub max_per_diagram: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum ProbeCommand {
    /// Sums over crossing changes.
    Ft {
        #[command(flatten)]
        flags: ProbeFlags,
    },
    /// Sums over twist moves in strand bundles.
    Nq {
        #[command(flatten)]
        flags: ProbeFlags,
        #[arg(long, default_value_t = 1)]
        n: i64,
        #[arg(long, default_value_t = 0)]
        q: u64,
        /// Only regions with q_j = q exactly.
        #[arg(long)]
        strict_q: bool,
        /// Largest strand bundle.
        #[arg(long, default_value_t = 2)]
        max_k: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::PARSE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
