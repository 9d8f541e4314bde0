use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::Outcome;

/// Exact structure-constant checks and computations for Leibniz and
/// pre-Leibniz algebras.
#[derive(Parser)]
#[command(name = "preleib", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Check the identities of any structure file.
    Check {
        file: PathBuf,
        /// A representation file, or `adjoint`.
        #[arg(long)]
        rep: Option<String>,
    },
    /// Print the total Leibniz algebra `◁ + ▷`.
    Total { algebra: PathBuf },
    /// Print the semidirect product with a representation (file or `adjoint`).
    Semidirect { algebra: PathBuf, rep: String },
    /// Print the graded bracket of two colored cochains.
    Bracket { f: PathBuf, g: PathBuf },
    /// Print `dim Hⁿ` for `n = 1..=max`.
    Cohomology {
        algebra: PathBuf,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        max: usize,
    },
    /// Print the obstruction cocycle of a deformation and whether its class vanishes.
    Obstruction { deformation: PathBuf },
    /// Print a next-order term, or OBSTRUCTED.
    Extend { deformation: PathBuf },
    /// Convert between 2-term algebras, triples and crossed modules.
    Convert {
        mode: Mode,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print the 2-term pre-Leibniz∞ algebra induced by a Rota-Baxter operator.
    RbInduce { two_term: PathBuf, operator: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Mode {
    SkeletalToTriple,
    TripleToSkeletal,
    StrictToCrossed,
    CrossedToStrict,
}

fn paths(v: &[PathBuf]) -> Vec<&Path> {
    v.iter().map(PathBuf::as_path).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.verb {
        Verb::Check { file, rep } => commands::check(file, rep.as_deref()),
        Verb::Total { algebra } => commands::total(algebra),
        Verb::Semidirect { algebra, rep } => commands::semidirect(algebra, rep),
        Verb::Bracket { f, g } => commands::bracket(f, g),
        Verb::Cohomology { algebra, rep, max } => commands::cohomology(algebra, rep, *max),
        Verb::Obstruction { deformation } => commands::obstruction(deformation),
        Verb::Extend { deformation } => commands::extend(deformation),
        Verb::Convert { mode, files } => commands::convert(*mode, &paths(files)),
        Verb::RbInduce { two_term, operator } => commands::rb_induce(two_term, operator),
    };
    match result {
        Ok(Outcome { text, passed }) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
