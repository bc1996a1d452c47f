use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use delta_springer::delta_springer::golden::{emit_golden, Golden};
use delta_springer::delta_springer::{frobenius, Route};
use delta_springer::hall_littlewood::q_kostka;
use delta_springer::macdonald::{delta_prime_e, specialize_t0};
use delta_springer::schur::{omega, rev_q_schur, SchurPoly};
use delta_springer::{guard, DeltaParams, Partition};

mod verify;

/// Exact graded Frobenius series of Delta-Springer modules.
#[derive(Parser, Debug)]
#[command(name = "delta-springer", version)]
struct Cli {
    /// Worker threads for the sweeps (default: all cores).
    #[arg(long, global = true, env = "DELTA_SPRINGER_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Skew,
    Battery,
    Hl,
    Charge,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Skew => Route::Skew,
            RouteArg::Battery => Route::Battery,
            RouteArg::Hl => Route::Hl,
            RouteArg::Charge => Route::Charge,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Check {
    Routes,
    T0,
    Conjectures,
    S2,
    Osp,
    Topdeg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Figure {
    Fig1,
    Fig3,
    S2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The graded Frobenius series of R_{n,lambda,s}.
    Frobenius {
        #[arg(long)]
        n: usize,
        /// Comma-separated parts; empty for the empty partition.
        #[arg(long, conflicts_with = "rnk")]
        lambda: Option<String>,
        /// Defaults to the length of lambda.
        #[arg(long, conflicts_with = "rnk")]
        s: Option<usize>,
        /// Shorthand for lambda = (1^K), s = K.
        #[arg(long)]
        rnk: Option<usize>,
        #[arg(long, value_enum, default_value = "skew")]
        route: RouteArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Runs one of the verification sweeps.
    Verify {
        #[arg(value_enum)]
        check: Check,
        /// Largest n in the sweep (each check has its own default).
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// A q-Kostka polynomial K_{nu,mu}(q), or the modified one.
    Kostka {
        #[arg(long)]
        nu: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        modified: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Delta'_{e_k} e_n from the Macdonald expansion.
    Delta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Keep only the t^0 part.
        #[arg(long)]
        t0: bool,
        /// Apply omega.
        #[arg(long)]
        omega: bool,
        /// Reverse in q (applied before omega).
        #[arg(long)]
        revq: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The worked examples with their statistics.
    Golden {
        #[arg(value_enum)]
        figure: Figure,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Exit status for a failed assertion, as opposed to bad input (2).
const ASSERTION_FAILED: u8 = 1;
const USAGE: u8 = 2;

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse().map_err(|e| anyhow!("{e}"))
}

fn params(n: usize, lambda: Option<String>, s: Option<usize>, rnk: Option<usize>) -> Result<DeltaParams> {
    if let Some(k) = rnk {
        return Ok(DeltaParams::rnk(n, k)?);
    }
    let lambda = parse_partition(lambda.as_deref().unwrap_or(""))?;
    let s = s.unwrap_or(lambda.len().max(1));
    Ok(DeltaParams::new(n, lambda, s)?)
}

fn emit_schur(f: &SchurPoly, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => f.to_text(),
        Format::Csv => f.to_csv().trim_end().to_string(),
        Format::Json => serde_json::to_string_pretty(f)?,
    })
}

fn warn_raised_guard(n: usize) {
    let (var, default) = guard::MACDONALD_N;
    if n > default && guard::limit(guard::MACDONALD_N) >= n {
        eprintln!("warning: n = {n} is above the default Macdonald limit {default} ({var}); this may take a while");
    }
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .context("configuring the worker pool")?;
    }
    match cli.command {
        Command::Frobenius {
            n,
            lambda,
            s,
            rnk,
            route,
            format,
        } => {
            let p = params(n, lambda, s, rnk)?;
            println!("{}", emit_schur(&frobenius(&p, route.into())?, format)?);
            Ok(0)
        }
        Command::Verify { check, max_n, format } => verify::run(check, max_n, format),
        Command::Kostka {
            nu,
            mu,
            modified,
            format,
        } => {
            let k = q_kostka(&parse_partition(&nu)?, &parse_partition(&mu)?, modified)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&k)?),
                Format::Text | Format::Csv => println!("{k}"),
            }
            Ok(0)
        }
        Command::Delta {
            n,
            k,
            t0,
            omega: apply_omega,
            revq,
            format,
        } => {
            warn_raised_guard(n);
            let mut f = delta_prime_e(k, n)?;
            if t0 {
                f = specialize_t0(&f);
            }
            if revq {
                f = rev_q_schur(&f);
            }
            if apply_omega {
                f = omega(&f);
            }
            println!("{}", emit_schur(&f, format)?);
            Ok(0)
        }
        Command::Golden { figure, format } => {
            let which = match figure {
                Figure::Fig1 => Golden::Fig1,
                Figure::Fig3 => Golden::Fig3,
                Figure::S2 => Golden::S2,
            };
            let doc = emit_golden(which)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&doc)?),
                Format::Text => println!("{doc}"),
                Format::Csv => bail!("golden examples have no CSV form"),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}
