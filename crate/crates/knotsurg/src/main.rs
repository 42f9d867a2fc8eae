use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use knotsurg::cli::{self, CmdOutput, KnotTable};
use knotsurg::Concordance;

/// Exact Alexander polynomials of braid closures and the knot-surgery
/// action on Seiberg-Witten basic-class data.
#[derive(Parser)]
#[command(name = "knotsurg", version, about)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Alexander polynomial of a braid closure
    Alex {
        /// Braid word, e.g. "B2: s1 s1 s1"
        braid: String,
    },
    /// Apply knot surgery to an SW data file
    Surgery {
        /// Input SW data file (must contain a torus vector)
        sw_file: PathBuf,
        /// Braid word or knot table name
        knot: String,
        /// Output SW data file
        output: PathBuf,
        /// Knot table used to resolve names (default: the bundled table)
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Compare two SW data files
    Compare { a: PathBuf, b: PathBuf },
    /// Group knot table entries with equal Alexander polynomials
    Collisions {
        /// Knot table file, one 'name<TAB>braid' entry per line
        table: PathBuf,
        /// Also include the reversed mirror of every entry
        #[arg(long)]
        with_mirrors: bool,
    },
    /// Apply a concordance action of K # -K to an SW data file
    Concordance {
        /// Input SW data file (must contain a torus vector)
        sw_file: PathBuf,
        /// Braid word of K
        knot: String,
        /// Which concordance acts
        kind: ConcordanceKind,
        /// Output SW data file
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConcordanceKind {
    Product,
    Slicesum,
}

impl From<ConcordanceKind> for Concordance {
    fn from(kind: ConcordanceKind) -> Concordance {
        match kind {
            ConcordanceKind::Product => Concordance::Product,
            ConcordanceKind::Slicesum => Concordance::SliceSum,
        }
    }
}

fn run(args: Args) -> knotsurg::Result<CmdOutput> {
    match args.command {
        Command::Alex { braid } => cli::cmd_alex(&braid),
        Command::Surgery {
            sw_file,
            knot,
            output,
            table,
        } => {
            let table = table.map(|path| KnotTable::load(&path)).transpose()?;
            cli::cmd_surgery(&sw_file, &knot, &output, table.as_ref())
        }
        Command::Compare { a, b } => cli::cmd_compare(&a, &b),
        Command::Collisions {
            table,
            with_mirrors,
        } => cli::cmd_collisions(&table, with_mirrors),
        Command::Concordance {
            sw_file,
            knot,
            kind,
            output,
        } => cli::cmd_concordance(&sw_file, &knot, kind.into(), &output),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(args) {
        Ok(out) => {
            for warning in &out.warnings {
                eprintln!("warning: {warning}");
            }
            print!("{}", out.stdout);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
