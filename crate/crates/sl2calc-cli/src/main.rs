use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sl2calc_cli::config::{FileConfig, CONFIG_ENV};
use sl2calc_cli::tables::{self, SchurMethod};
use sl2calc_cli::{run_suite, CliError, Format, Suite, SuiteConfig};

/// Exact verification of sl(2) categorification identities.
#[derive(Debug, Parser)]
#[command(name = "sl2calc", version, about)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads (0 = one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Largest nilHecke rank used by the checks (at most 6).
    #[arg(long, global = true)]
    rank_max: Option<usize>,

    /// Weight cutoff D for symmetric-function series (at most 12).
    #[arg(long, global = true)]
    weight_cutoff: Option<u32>,

    /// TOML configuration file.
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,

    /// Record wall-clock time per check (reports are then not byte-stable).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite and print its report.
    Verify {
        /// nilhecke, symfun, grassmannian, udot, partitions or all.
        #[arg(long)]
        suite: String,
        /// Largest |n| for weight-indexed checks.
        #[arg(long)]
        n_max: Option<i64>,
        /// Largest divided power in the quantum group checks.
        #[arg(long)]
        power_max: Option<u32>,
        /// Samples per randomized check.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Littlewood–Richardson coefficients of a product of two Schur functions.
    Lr {
        alpha: String,
        beta: String,
        /// Number of variables (default: symmetric functions).
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Canonical basis computations.
    Canon {
        #[command(subcommand)]
        command: CanonCommand,
    },
    /// Graded rank of a space of 2-morphisms, by formula and by enumeration.
    HomRank {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, default_value_t = 0)]
        delta: u32,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value_t = 20)]
        cutoff: i64,
    },
    /// A Schur polynomial in finitely many variables.
    Schur {
        alpha: String,
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value_t = SchurMethod::All)]
        method: SchurMethod,
    },
}

#[derive(Debug, Subcommand)]
enum CanonCommand {
    /// Expand x · y 1_n in the canonical basis (tags like E2F1, F1E2, E2, F3, 1).
    Mult {
        x: String,
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
}

/// Defaults, then the config file, then command-line flags.
fn file_config(global: &GlobalArgs) -> Result<FileConfig, CliError> {
    let from_file = match &global.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let flags = FileConfig {
        rank_max: global.rank_max,
        weight_cutoff: global.weight_cutoff,
        seed: global.seed,
        jobs: global.jobs,
        format: global.format,
        timings: global.timings.then_some(true),
        ..FileConfig::default()
    };
    Ok(from_file.merged_with(flags))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let mut file = file_config(&cli.global)?;
    let format = file.format.unwrap_or_default();
    let table = match cli.command {
        Command::Verify { suite, n_max, power_max, samples } => {
            let suite: Suite = suite.parse()?;
            file = file.merged_with(FileConfig { n_max, power_max, samples, ..FileConfig::default() });
            let cfg = SuiteConfig::resolve(suite, &file)?;
            let report = run_suite(&cfg)?;
            let body = match cfg.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json()? + "\n",
            };
            emit(&body);
            return Ok(!report.has_failures());
        }
        Command::Lr { alpha, beta, vars } => {
            tables::lr_table(&tables::parse_partition(&alpha)?, &tables::parse_partition(&beta)?, vars, format)?
        }
        Command::Canon { command: CanonCommand::Mult { x, y, n } } => {
            tables::canon_mult(tables::parse_tag(&x)?, tables::parse_tag(&y)?, n, format)?
        }
        Command::HomRank { a, b, delta, n, cutoff } => tables::hom_rank(a, b, delta, n, cutoff, format)?,
        Command::Schur { alpha, vars, method } => tables::schur(&tables::parse_partition(&alpha)?, vars, method, format)?,
    };
    emit(&table.body);
    Ok(table.consistent)
}

/// Writes to stdout, treating a closed pipe (e.g. `| head`) as a normal end.
fn emit(body: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(body.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("sl2calc: {e}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("sl2calc: {e}");
            ExitCode::from(2)
        }
    }
}
