//! `transport2d`: command-line front end.
//!
//! Exit status is 0 on success, 1 when the input is well-formed but the
//! computation fails or finds problems, 2 for usage and I/O errors.

mod checks;
mod commands;
mod words;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "transport2d", version, about = "Parallel transport and sweeping on triangulated surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for randomized commands.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Complex and connection files; the bundled tetrahedron when omitted.
#[derive(Args, Debug)]
pub struct Inputs {
    #[arg(long)]
    pub complex: Option<PathBuf>,
    #[arg(long)]
    pub connection: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a complex file for closure and purity.
    Validate {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Holonomy of a connection along a path such as `a,b,d,a`.
    Holonomy {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        path: String,
    },
    /// Run a sweep scheme on an initial word, e.g. `--word x,y`.
    Sweep {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Run two schemes on the same word and compare the results.
    Compare {
        #[command(flatten)]
        inputs: Inputs,
        /// Give exactly two.
        #[arg(long = "scheme", required = true, num_args = 1)]
        schemes: Vec<PathBuf>,
        #[arg(long)]
        word: String,
    },
    /// Defects of the four-move square over `(ab,bd)` through `c`.
    Curvature {
        #[command(flatten)]
        inputs: Inputs,
        a: String,
        b: String,
        c: String,
        d: String,
        /// Word over `(ab,bd)`; identity letters when omitted.
        #[arg(long)]
        word: Option<String>,
    },
    /// Center of a finite group, e.g. `'{"symmetric":3}'`.
    Center { group: String },
    /// Randomized consistency checks on the bundled tetrahedron.
    Check {
        /// Cases per check.
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
    /// Write the bundled tetrahedron example files into a directory.
    Examples {
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let commands::Failure::Domain { output: Some(out), .. } = &e {
                print!("{out}");
            }
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
