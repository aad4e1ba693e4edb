use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use superdiag::coinvariants::{
    character_quotient, component_character, explore_module, ExploreOptions, ModuleEngine,
};
use superdiag::combinatorics::{partitions_of, Partition, Permutation};
use superdiag::frobenius::{FrobeniusSeries, Specialization};
use superdiag::macdonald::{hhl_htilde, rhs_series};
use superdiag::superring::TriDegree;
use superdiag::verifier::{render_report, verify_conjecture, ReportFormat, VerifyOptions};
use superdiag::Rational;

const EXIT_USAGE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "superdiag", version, about = "Exact checks of the super-diagonal coinvariant conjecture")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Module,
    Delta,
}

#[derive(Subcommand)]
enum Command {
    /// Compare both sides for one n.
    Verify {
        #[arg(long)]
        n: usize,
        /// Bands scanned past the first zero band of each row.
        #[arg(long, default_value_t = 1)]
        extra_band: usize,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Wall-clock budget for the module side; exceeding it gives INCONCLUSIVE.
        #[arg(long)]
        budget_seconds: Option<f64>,
        /// Largest band a + b explored in any row.
        #[arg(long)]
        max_band: Option<usize>,
        /// Include wall-clock timings (makes the report run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Print one side as a Schur expansion.
    Frobenius {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        side: Side,
        /// One of z=0, t=0, q=t=1.
        #[arg(long)]
        spec: Option<Specialization>,
        #[arg(long)]
        json: bool,
    },
    /// Dimensions of the nonzero components of the module.
    Hilbert {
        #[arg(long)]
        n: usize,
    },
    /// Schur expansion of the modified Macdonald polynomial.
    Macdonald {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Character of one component of the module, by cycle type.
    Character {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: TriDegree,
        /// Use the slower direct ideal-span computation.
        #[arg(long)]
        reference: bool,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
    Incomplete(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn require_n(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(())
}

fn module_series(n: usize) -> Result<FrobeniusSeries<Rational>, Failure> {
    let engine = ModuleEngine::<Rational>::new(n);
    let explored = explore_module(&engine, &ExploreOptions::for_n(n), None)?;
    if !explored.is_complete() {
        return Err(Failure::Incomplete(format!("module exploration for n = {n} did not close")));
    }
    Ok(explored.frobenius()?)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Verify {
            n,
            extra_band,
            threads,
            cache_dir,
            format,
            budget_seconds,
            max_band,
            timings,
        } => {
            require_n(n)?;
            if threads == Some(0) {
                return Err(Failure::Usage("--threads must be positive".into()));
            }
            let budget = budget_seconds
                .map(|s| Duration::try_from_secs_f64(s).map_err(|e| Failure::Usage(format!("--budget-seconds: {e}"))))
                .transpose()?;
            let opts = VerifyOptions {
                extra_band,
                threads,
                cache_dir,
                budget,
                max_band,
                record_timings: timings,
            };
            let report = verify_conjecture(n, &opts)?;
            let format = match format {
                Format::Json => ReportFormat::Json,
                Format::Csv => ReportFormat::Csv,
                Format::Latex => ReportFormat::Latex,
                Format::Text => ReportFormat::Text,
            };
            print!("{}", render_report(&report, format));
            Ok(report.verdict.exit_code() as u8)
        }
        Command::Frobenius { n, side, spec, json } => {
            require_n(n)?;
            let mut series = match side {
                Side::Module => module_series(n)?,
                Side::Delta => rhs_series::<Rational>(n)?,
            };
            if let Some(s) = spec {
                series = series.specialize(s);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&series)?);
            } else {
                print!("{series}");
            }
            Ok(0)
        }
        Command::Hilbert { n } => {
            require_n(n)?;
            let engine = ModuleEngine::<Rational>::new(n);
            let explored = explore_module(&engine, &ExploreOptions::for_n(n), None)?;
            println!("a,b,c\tdim");
            for ch in explored.nonzero() {
                println!("{}\t{}", ch.degree, ch.dim);
            }
            println!("total\t{}", explored.nonzero().map(|c| c.dim).sum::<usize>());
            if !explored.is_complete() {
                return Err(Failure::Incomplete(format!("module exploration for n = {n} did not close")));
            }
            Ok(0)
        }
        Command::Macdonald { mu, json } => {
            if mu.is_empty() {
                return Err(Failure::Usage("--mu must be a nonempty partition".into()));
            }
            let h = hhl_htilde::<Rational>(&mu).map_err(|e| Failure::Usage(e.to_string()))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&h)?);
            } else {
                print!("{h}");
            }
            Ok(0)
        }
        Command::Character { n, degree, reference } => {
            require_n(n)?;
            let engine = ModuleEngine::<Rational>::new(n);
            let ch = component_character(n, &engine.component(degree))?;
            println!("degree {degree}: dim {} of {}", ch.dim, ch.ring_dim);
            for mu in partitions_of(n) {
                let v = if reference {
                    character_quotient::<Rational>(&Permutation::of_cycle_type(&mu), degree)?
                } else {
                    ch.values[&mu]
                };
                println!("{mu}\t{v}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Incomplete(m)) => {
            eprintln!("inconclusive: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
