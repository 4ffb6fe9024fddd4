use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use unirank::analysis::Target;
use unirank::asymptotics::{EmCase, MomentKind};
use unirank::enumerate::{Family, Identity};

mod commands;
mod output;

/// Exact rank tables, moment asymptotics and log-concavity scans for
/// unimodal sequences and partitions.
#[derive(Debug, Parser)]
#[command(name = "unirank", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Directory holding cached tables.
    #[arg(long, global = true, env = "UNIRANK_CACHE", default_value = "unirank-cache")]
    pub cache_dir: PathBuf,
    /// Worker threads for parallel scans (output does not depend on it).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Tolerance file overriding the bundled calibration.
    #[arg(long, global = true)]
    pub tolerances: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build (or load) a table and print its row sums.
    Table {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        order: usize,
        /// Also write every nonzero entry as `family,n,m,value` CSV.
        #[arg(long, value_name = "PATH")]
        export_csv: Option<PathBuf>,
    },
    /// Check a generating-function identity or compare a table with brute
    /// force.
    Verify {
        #[arg(long, value_parser = parse_identity, conflicts_with = "oracle", required_unless_present = "oracle")]
        identity: Option<Identity>,
        #[arg(long, value_parser = parse_family)]
        oracle: Option<Family>,
        /// Order for identity checks.
        #[arg(long, default_value_t = 50)]
        order: usize,
        /// Largest n for oracle checks.
        #[arg(long, default_value_t = 15)]
        max_n: usize,
        /// Inject a fault at this q-power to confirm the check catches it.
        #[arg(long, value_name = "N", num_args = 0..=1, default_missing_value = "7")]
        self_test_perturb: Option<usize>,
    },
    /// Exact moments Σ m^k f(m,n) (or |m|^k).
    Moments {
        #[command(flatten)]
        sel: MomentSelection,
    },
    /// Exact quantities against their asymptotic main terms.
    Asymptotics {
        #[command(flatten)]
        sel: MomentSelection,
        #[arg(long, value_enum, default_value_t = Quantity::Moment)]
        quantity: Quantity,
        /// Rank m for the discriminant check.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i64,
    },
    /// Kolmogorov–Smirnov distance of the normalized rank to its limit law.
    Distribution {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_parser = parse_target)]
        target: Option<Target>,
        /// Table order (defaults to the largest n).
        #[arg(long)]
        order: Option<usize>,
        /// Emit the empirical and target CDFs at every jump instead.
        #[arg(long)]
        cdf: bool,
    },
    /// Scan a log-concavity conjecture region with exact integers.
    Conjecture {
        #[arg(long, value_enum)]
        rule: RuleArg,
        #[arg(long)]
        max_n: usize,
        /// Family for `--rule custom`.
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        /// First n scanned by `--rule custom`.
        #[arg(long, default_value_t = 0)]
        n_min: usize,
        /// `--rule custom` scans |m| ≤ n − margin.
        #[arg(long, default_value_t = 0)]
        margin: i64,
    },
    /// Run the Euler–Maclaurin engine on one of its test integrands.
    EmDemo {
        #[arg(long, value_parser = parse_em_case)]
        case: EmCase,
        /// Step size; omit to run the calibration grid and fit the
        /// remainder order.
        #[arg(long)]
        w: Option<f64>,
        /// Number of expansion terms N.
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
}

#[derive(Debug, Args)]
pub struct MomentSelection {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    #[arg(long, value_parser = parse_kind, default_value = "signed")]
    pub kind: MomentKind,
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    /// Table order (defaults to the largest n).
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// Moment over its main term.
    Moment,
    /// Normalized moment over its limiting constant.
    Normalized,
    /// Discriminant f(m,n)² − f(m−1,n)f(m+1,n) over its Bessel main term.
    Discriminant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    #[value(name = "conjecture-4.1")]
    Conjecture41,
    #[value(name = "conjecture-N")]
    ConjectureN,
    #[value(name = "conjecture-M")]
    ConjectureM,
    Custom,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}
fn parse_identity(s: &str) -> Result<Identity, String> {
    s.parse()
}
fn parse_target(s: &str) -> Result<Target, String> {
    s.parse()
}
fn parse_kind(s: &str) -> Result<MomentKind, String> {
    s.parse()
}
fn parse_em_case(s: &str) -> Result<EmCase, String> {
    s.parse()
}

/// Exit statuses.
pub mod exit {
    pub const CHECK_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const IO: u8 = 3;
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { 0 });
        }
    };
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t.into()).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(exit::USAGE);
        }
    }
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(exit::CHECK_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
