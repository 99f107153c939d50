//! `cagespec`: construct minimal cages, analyze their regularity, compute
//! spectra and run the closed-form verification battery.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage or parameter error,
//! 3 I/O error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use cage_spectra::spectra::{DEFAULT_CHARPOLY_CAP, DEFAULT_MATCH_TOL};
use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::{Failure, KRange};

#[derive(Parser)]
#[command(name = "cagespec", version, about = "Distance spectra of minimal cages and their subdivisions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Adjacency,
    Distance,
}

#[derive(Subcommand)]
enum Command {
    /// Build a cage and write it as an edge list.
    Construct {
        /// Family spec `name(:param)*`, e.g. `petersen`, `pg2:3`, `cycle:7`.
        family: String,
        /// Write the subdivision S(G) instead of G.
        #[arg(long)]
        subdivide: bool,
        /// Edge-list destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Regularity report (DR / DBR arrays, transmission, quotient) as JSON.
    Analyze {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Grouped numeric spectrum, with exact values when the graph is a Moore graph.
    Spectrum {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixKind::Distance)]
        matrix: MatrixKind,
        /// Also compute the integer characteristic polynomial.
        #[arg(long)]
        exact_charpoly: bool,
        #[arg(long, default_value_t = DEFAULT_CHARPOLY_CAP)]
        charpoly_cap: usize,
        #[arg(long, default_value_t = DEFAULT_MATCH_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every closed-form and oracle check for one (k,g).
    Verify {
        k: u64,
        g: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MATCH_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_CHARPOLY_CAP)]
        charpoly_cap: usize,
        /// Skip the subdivision-graph checks.
        #[arg(long)]
        no_subdivide: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form values for one girth over a range of degrees.
    Table {
        g: u64,
        /// Degrees: single values or inclusive ranges `a..b`.
        #[arg(required = true)]
        ks: Vec<KRange>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// CSV output (the default).
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn data_dir() -> Option<PathBuf> {
    std::env::var_os("CAGE_DATA_DIR").map(PathBuf::from)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Construct {
            family,
            subdivide,
            out,
            json,
        } => commands::construct(&family, subdivide, out.as_deref(), json),
        Command::Analyze { input, out } => commands::analyze(&input, out.as_deref()),
        Command::Spectrum {
            input,
            matrix,
            exact_charpoly,
            charpoly_cap,
            tol,
            out,
        } => commands::spectrum(&input, matrix, exact_charpoly, charpoly_cap, tol, out.as_deref()),
        Command::Verify {
            k,
            g,
            json,
            tol,
            charpoly_cap,
            no_subdivide,
            out,
        } => {
            let opts = cage_spectra::verify::VerifyOptions {
                tol,
                charpoly_cap,
                data_dir: data_dir(),
                subdivision: !no_subdivide,
            };
            commands::verify(k, g, &opts, json, out.as_deref())
        }
        Command::Table { g, ks, json, out, .. } => commands::table(g, &ks, json, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}
