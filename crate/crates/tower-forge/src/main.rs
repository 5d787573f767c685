//! Command-line front end. All computation lives in the library; this file
//! only parses arguments, builds the matching report, renders it, and maps
//! errors to exit codes: 0 for success, 1 for usage or validation problems,
//! 2 for a violated mathematical cross-check.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tower_forge::cache::PointCountCache;
use tower_forge::report::{
    render, CensusCliReport, CurveCliReport, Format, HasseCliReport, OrbitsReport, ProjspaceReport,
    Render, ReplayCliReport, TowerCliReport,
};
use tower_forge::{Error, Result};

#[derive(Parser)]
#[command(
    name = "tower-forge",
    version,
    about = "Exact arithmetic for towers of curves over quadratic extension fields",
    long_about = "Enumerates projectivised torsion modules, decomposes tame monodromy \
                  orbits, evaluates the Hurwitz genus along a tower, and certifies \
                  supersingular Legendre curves, all in exact arithmetic.\n\n\
                  Exit codes: 0 success, 1 usage or validation error, 2 violated \
                  mathematical cross-check."
)]
struct Cli {
    /// Output format. Tabular commands also accept csv.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cardinality of the projectivised torsion module P(Lambda_n^b).
    Projspace {
        /// Odd prime l of the coefficient ring Z/l^n.
        #[arg(long)]
        ell: u64,
        /// Exponent n of the coefficient ring Z/l^n.
        #[arg(long)]
        level: u32,
        /// Module rank b.
        #[arg(long, default_value_t = 2)]
        rank: u32,
        /// List every point instead of printing the cardinality.
        #[arg(long)]
        list: bool,
    },
    /// Orbit decomposition of a monodromy matrix on the fibre P(Lambda_n^2).
    Orbits {
        /// Odd prime l of the coefficient ring Z/l^n.
        #[arg(long)]
        ell: u64,
        /// Exponent n of the coefficient ring Z/l^n.
        #[arg(long)]
        level: u32,
        /// `legendre` for [1 2; 0 1], or a row-major comma list like 1,2,0,1.
        #[arg(long, default_value = "legendre")]
        matrix: String,
    },
    /// Genus and rational-point floor along the tower, with the exact limit.
    Tower {
        /// Base prime p; curves live over F_q with q = p^2.
        #[arg(long)]
        p: u64,
        /// Tower prime l, distinct from p.
        #[arg(long)]
        ell: u64,
        /// Largest level to report (even levels only are listed).
        #[arg(long, default_value_t = 8)]
        max_level: u32,
    },
    /// Point count, Weil data, and supersingularity certificate of one
    /// Legendre curve y^2 = x(x-1)(x-a) over F_p^2.
    Curve {
        /// Base prime p.
        #[arg(long)]
        p: u64,
        /// Parameter a, written like `6` or `3+2*w`.
        #[arg(long)]
        a: String,
        /// With --level: also build the split fibre model at l^level.
        #[arg(long, requires = "level")]
        ell: Option<u64>,
        /// With --ell: torsion level of the fibre model.
        #[arg(long, requires = "ell")]
        level: Option<u32>,
        /// Recount even on a cache hit and fail on a mismatch.
        #[arg(long)]
        verify: bool,
    },
    /// Every supersingular Legendre parameter over F_p^2, cross-checked
    /// against the Hasse locus.
    Census {
        /// Base prime p, or the smallest prime when --max-p is given.
        #[arg(long)]
        p: u64,
        /// Run the census for every prime in p..=max-p (p = 3 is skipped).
        #[arg(long)]
        max_p: Option<u64>,
        /// Worker threads for the point counts.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Raise the prime ceiling (default 31) for a longer O(p^4) scan.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// The Hasse polynomial of p and its roots in F_p and F_p^2.
    Hasse {
        /// Base prime p.
        #[arg(long)]
        p: u64,
    },
    /// Re-run the reference computations end to end and report each check.
    ReplayPaper,
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_report<R: Render>(report: &R, cli: &Cli) -> Result<()> {
    emit(&render(report, cli.format)?, cli.output.as_ref())
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Projspace {
            ell,
            level,
            rank,
            list,
        } => emit_report(&ProjspaceReport::build(*ell, *level, *rank, *list)?, cli),
        Command::Orbits { ell, level, matrix } => {
            emit_report(&OrbitsReport::build(*ell, *level, matrix)?, cli)
        }
        Command::Tower { p, ell, max_level } => {
            emit_report(&TowerCliReport::build(*p, *ell, *max_level)?, cli)
        }
        Command::Curve {
            p,
            a,
            ell,
            level,
            verify,
        } => {
            let fiber = ell.zip(*level);
            let cache = PointCountCache::from_env();
            let report = CurveCliReport::build(*p, a, fiber, cache.as_ref(), *verify)?;
            emit_report(&report, cli)
        }
        Command::Census {
            p,
            max_p,
            threads,
            cap,
        } => {
            match max_p {
                None => emit_report(&CensusCliReport::build(*p, *cap, *threads)?, cli),
                Some(max_p) => {
                    // One report per prime, concatenated in order; JSON
                    // becomes a sequence of objects, one per prime.
                    let mut out = String::new();
                    for q in tower_forge::legendre::primes_in(*p..=*max_p) {
                        if q == 3 {
                            continue; // no Legendre parameters outside {0, 1}
                        }
                        let report = CensusCliReport::build(q, *cap, *threads)?;
                        out.push_str(&render(&report, cli.format)?);
                    }
                    emit(&out, cli.output.as_ref())
                }
            }
        }
        Command::Hasse { p } => emit_report(&HasseCliReport::build(*p)?, cli),
        Command::ReplayPaper => {
            let report = ReplayCliReport::build()?;
            emit_report(&report, cli)?;
            if !report.passed {
                return Err(Error::CrossCheck(
                    "one or more replayed reference checks failed".to_string(),
                ));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout (exit 0) and usage errors
            // on stderr (exit 1).
            let to_stderr = e.use_stderr();
            let _ = e.print();
            return if to_stderr {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
