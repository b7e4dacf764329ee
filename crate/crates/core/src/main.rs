//! `tvlct`: command-line front end over the library's `cli` module.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tvlct::cli::{run, Command, Options};
use tvlct::group::DEFAULT_GROUP_CAP;
use tvlct::polyhedral::DEFAULT_PATTERN_CAP;

#[derive(Parser)]
#[command(name = "tvlct", version, about = "Exact lct, Kähler–Einstein and GIT verdicts for torus actions")]
struct Cli {
    /// Emit a machine-readable JSON report
    #[arg(long, global = true)]
    json: bool,
    /// Largest Möbius group closure to attempt
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_CAP)]
    group_cap: usize,
    /// Largest number of sign patterns in fan refinements
    #[arg(long, global = true, default_value_t = DEFAULT_PATTERN_CAP)]
    pattern_cap: usize,
    #[command(subcommand)]
    command: Top,
}

#[derive(Subcommand)]
enum Top {
    /// Commands on complexity-one varieties
    Tvar {
        #[command(subcommand)]
        cmd: Tvar,
    },
    /// Equivariant lct of a curve pair
    Lct { file: PathBuf },
    /// Whether a group is valuable for a curve pair
    Valuable { file: PathBuf },
    /// Polystability for diagonal torus actions
    Git {
        #[command(subcommand)]
        cmd: Git,
    },
    /// Chow quotient fan of a fan under its projection
    Chow { file: PathBuf },
    /// Lattice group commands
    Lattice {
        #[command(subcommand)]
        cmd: Lattice,
    },
    /// Check an input file against its schema without computing
    Validate { file: PathBuf },
    /// Run randomised internal consistency checks
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Subcommand)]
enum Tvar {
    /// Symmetry, boundary, glct and the Kähler–Einstein verdict
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum Git {
    /// Polystability of one support
    Polystable {
        file: PathBuf,
        /// Comma-separated coordinate labels (empty for the origin)
        #[arg(long, value_delimiter = ',', default_value = "")]
        support: Vec<String>,
    },
    /// Verdicts for every support
    Locus { file: PathBuf },
}

#[derive(Subcommand)]
enum Lattice {
    /// Whether only 0 is fixed
    Symmetric { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Top::Tvar { cmd: Tvar::Check { file } } => Command::TvarCheck { file },
        Top::Lct { file } => Command::Lct { file },
        Top::Valuable { file } => Command::Valuable { file },
        Top::Git { cmd: Git::Polystable { file, support } } => Command::GitPolystable { file, support },
        Top::Git { cmd: Git::Locus { file } } => Command::GitLocus { file },
        Top::Chow { file } => Command::Chow { file },
        Top::Lattice { cmd: Lattice::Symmetric { file } } => Command::LatticeSymmetric { file },
        Top::Validate { file } => Command::Validate { file },
        Top::Selftest { seed, cases } => Command::Selftest { seed, cases },
    };
    let opts = Options { json: cli.json, group_cap: cli.group_cap, pattern_cap: cli.pattern_cap };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let mut out = std::io::stdout().lock();
    match run(&command, &opts) {
        Ok(report) => {
            let _ = if opts.json { writeln!(out, "{}", report.to_json()) } else { write!(out, "{report}") };
            ExitCode::SUCCESS
        }
        Err(e) => {
            if opts.json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&e.to_json()).expect("plain data"));
            } else {
                for m in e.messages() {
                    eprintln!("error: {m}");
                }
                if let tvlct::cli::CliError::SelftestFailed(r) = &e {
                    let _ = write!(out, "{r}");
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
