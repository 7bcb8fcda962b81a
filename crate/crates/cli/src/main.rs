mod commands;
mod contour;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use evenorbit::verify::TableId;
use evenorbit::weyl::EvenGroupKind;
use evenorbit::Execution;

/// E-functions of even Weyl groups: grids, transforms, tables.
#[derive(Parser, Debug)]
#[command(name = "evenorbit", version)]
struct Cli {
    /// Worker threads; 1 runs every batch loop sequentially, 0 uses all cores.
    #[arg(long, global = true, env = "EVENORBIT_THREADS", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

/// Group, kind and moduli shared by most subcommands.
#[derive(Args, Debug, Clone)]
struct GroupArgs {
    /// a1xa1, a1xa2, a1xc2, a1xg2 or a1xa1xa1.
    #[arg(long)]
    group: String,
    /// e (full even group) or ee (product of even groups).
    #[arg(long, value_parser = parse_kind)]
    kind: EvenGroupKind,
}

#[derive(Args, Debug, Clone)]
struct GridArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// One modulus for kind e, one per factor for kind ee.
    #[arg(long = "M", num_args = 1.., required = true)]
    ms: Vec<i64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Supported groups with their ranks and group orders.
    ListGroups,
    /// Grid points of the fundamental domain as CSV.
    Grid {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Weights of the discrete spectrum as CSV.
    Spectrum {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Evaluates one E-function at one point.
    Eval {
        #[command(flatten)]
        group: GroupArgs,
        /// Weight in the ω basis.
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        lambda: Vec<i64>,
        /// Point in ω∨ coordinates as p/q strings, space or comma separated.
        #[arg(
            long,
            value_delimiter = ',',
            conflicts_with = "label",
            required_unless_present = "label"
        )]
        point: Vec<String>,
        /// Kac label of a grid point (needs --M).
        #[arg(long, num_args = 1.., requires = "ms")]
        label: Vec<i64>,
        /// Factors (0-based) whose coordinates are reflected, for labels.
        #[arg(long, num_args = 1.., requires = "label")]
        reflected: Vec<usize>,
        #[arg(long = "M", num_args = 1..)]
        ms: Vec<i64>,
        /// Evaluate the printed closed form instead of the orbit sum.
        #[arg(long)]
        closed: bool,
    },
    /// Samples CSV to coefficient JSON.
    Forward {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Coefficient JSON to samples CSV.
    Inverse {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Evaluates the interpolating sum of coefficient JSON at a point.
    Interp {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        point: Vec<String>,
    },
    /// Checks discrete orthogonality and the transform round trip.
    Verify {
        #[command(flatten)]
        grid: GridArgs,
        /// Seed of the random sample sets.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random sample sets.
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Regenerates the coefficient tables and lists errata.
    Tables {
        /// Only this table.
        #[arg(long, value_parser = parse_table)]
        table: Option<TableId>,
        /// Modulus for the discrete tables.
        #[arg(long = "M", default_value_t = 5)]
        m: i64,
        #[arg(long)]
        json: bool,
    },
    /// Contour data of an E-function over the fundamental domain.
    Contour {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        lambda: Vec<i64>,
        /// Lattice subdivisions per factor.
        #[arg(long, default_value_t = 24)]
        samples: i64,
        /// Fixes one coordinate, e.g. 3=1/4 (1-based index, ω∨ coordinate).
        #[arg(long)]
        pin: Option<String>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Group elements as JSON integer matrices.
    DumpGroup {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> Result<EvenGroupKind, String> {
    s.parse().map_err(|e: evenorbit::Error| e.to_string())
}

fn parse_table(s: &str) -> Result<TableId, String> {
    s.parse().map_err(|e: evenorbit::Error| e.to_string())
}

/// Failure modes with their exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input files: exit 2.
    Usage(String),
    /// A check ran and failed: exit 1.
    Failed(String),
}

impl From<evenorbit::Error> for CliError {
    fn from(e: evenorbit::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn execution(threads: usize) -> Result<Execution, CliError> {
    match threads {
        1 => Ok(Execution::Sequential),
        0 => Ok(Execution::default()),
        #[cfg(feature = "parallel")]
        n => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| CliError::Usage(format!("--threads: {e}")))?;
            Ok(Execution::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        _ => Ok(Execution::Sequential),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let exec = execution(cli.threads)?;
    match cli.command {
        Command::ListGroups => commands::list_groups(),
        Command::Grid { grid, output } => commands::grid(&grid, output),
        Command::Spectrum { grid, output } => commands::spectrum(&grid, output),
        Command::Eval {
            group,
            lambda,
            point,
            label,
            reflected,
            ms,
            closed,
        } => commands::eval(&group, &lambda, &point, &label, &reflected, &ms, closed),
        Command::Forward {
            grid,
            input,
            output,
        } => commands::forward(&grid, &input, output, exec),
        Command::Inverse { input, output } => commands::inverse(&input, output, exec),
        Command::Interp { input, point } => commands::interp(&input, &point),
        Command::Verify { grid, seed, trials } => commands::verify(&grid, seed, trials, exec),
        Command::Tables { table, m, json } => commands::tables(table, m, json),
        Command::Contour {
            group,
            lambda,
            samples,
            pin,
            output,
        } => contour::contour(&group, &lambda, samples, pin.as_deref(), output),
        Command::DumpGroup { group, output } => commands::dump_group(&group, output),
    }
}

fn is_rational(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.is_empty()
        && body.split('/').count() <= 2
        && body
            .split('/')
            .all(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()))
}

/// Joins the values after `--point` into one `--point=a,b,c` token, so that
/// negative fractions such as `-1/5` are not taken for flags.
fn join_point_values(args: Vec<OsString>) -> Vec<OsString> {
    let mut out = Vec::with_capacity(args.len());
    let mut iter = args.into_iter().peekable();
    while let Some(arg) = iter.next() {
        if arg != "--point" {
            out.push(arg);
            continue;
        }
        let mut values = Vec::new();
        while let Some(v) = iter
            .peek()
            .and_then(|v| v.to_str())
            .filter(|v| is_rational(v))
        {
            values.push(v.to_string());
            iter.next();
        }
        if values.is_empty() {
            out.push(arg);
        } else {
            out.push(format!("--point={}", values.join(",")).into());
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(join_point_values(std::env::args_os().collect()));
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_values_are_joined() {
        let args: Vec<OsString> = ["x", "interp", "--point", "1/2", "-1/5", "3", "--input", "f"]
            .map(OsString::from)
            .to_vec();
        let joined = join_point_values(args);
        assert_eq!(
            joined,
            ["x", "interp", "--point=1/2,-1/5,3", "--input", "f"]
                .map(OsString::from)
                .to_vec()
        );
        assert!(
            is_rational("-12/7")
                && is_rational("4")
                && !is_rational("--closed")
                && !is_rational("1/2/3")
        );
    }
}
