//! Batch front end: reads algebra and category description files, runs one
//! computation and prints a deterministic report.
//!
//! Exit statuses: 0 success, 1 parse or usage error, 2 invariant violation,
//! 3 cap exceeded, 4 refusal for lack of a certificate.

mod commands;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cyclic::DEFAULT_CAP;
use crate::error::{Error, Result};

pub use input::{parse_input, read_input, Input};
pub use report::Report;

/// Environment variable overriding the default chain cap.
pub const CAP_ENV: &str = "NCMOTIVE_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_UNCERTIFIED: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::Invariant(_) | Error::DimensionMismatch(_) | Error::InvalidArgument(_) => EXIT_INVARIANT,
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Uncertified(_) => EXIT_UNCERTIFIED,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    #[value(alias = "structured")]
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Basic invariants of the input.
    Describe,
    /// Hochschild homology dimensions.
    Hh,
    /// Cyclic homology dimensions.
    Hc,
    /// Periodic cyclic homology as a super dimension.
    Hp,
    /// Exactness of the SBI long exact sequence.
    Sbi,
    /// Intersection numbers of projective correspondences against traces.
    Pair,
    /// Numerical quotient of the projective correspondences.
    Numquot,
    /// Radical of the numerical endomorphism algebra.
    Semisimple,
    /// Isotypic dimensions and the minimal annihilating partition of a super space.
    Schur {
        /// Super dimension as `even,odd`.
        #[arg(long, value_parser = parse_dims)]
        dims: (usize, usize),
        #[arg(long = "max-weight", default_value_t = 6)]
        max_weight: usize,
    },
    /// Looks for the Kunneth projectors in the span of algebra endomorphisms.
    Cnc,
    /// Compares homological and numerical equivalence on K_0.
    Dnc,
    /// Karoubi envelope of a category presentation.
    Karoubi,
    /// Orbit category under a strictly invertible object.
    Orbit {
        #[arg(long)]
        object: String,
        #[arg(long)]
        inverse: String,
        /// Hom spaces to the twists vanish beyond this exponent.
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Describe => "describe",
            Command::Hh => "hh",
            Command::Hc => "hc",
            Command::Hp => "hp",
            Command::Sbi => "sbi",
            Command::Pair => "pair",
            Command::Numquot => "numquot",
            Command::Semisimple => "semisimple",
            Command::Schur { .. } => "schur",
            Command::Cnc => "cnc",
            Command::Dnc => "dnc",
            Command::Karoubi => "karoubi",
            Command::Orbit { .. } => "orbit",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ncmotive", version, about = "Exact homology of algebras and categorical constructions over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input description file (repeat for commands taking two algebras).
    #[arg(long, global = true)]
    input: Vec<PathBuf>,
    /// Truncation degree n_max of the chain complexes.
    #[arg(long = "max-degree", global = true, default_value_t = 6)]
    max_degree: usize,
    /// Cap on the number of chains enumerated (default from NCMOTIVE_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Also run the slow independent cross-check paths.
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub command: Command,
    pub inputs: Vec<PathBuf>,
    pub n_max: usize,
    pub cap: usize,
    pub format: Format,
    pub oracle: bool,
}

impl JobConfig {
    pub fn new(command: Command, inputs: Vec<PathBuf>, n_max: usize, cap: usize, format: Format, oracle: bool) -> Result<Self> {
        if n_max < 1 {
            return Err(Error::Parse("--max-degree must be at least 1".into()));
        }
        if cap < 1 {
            return Err(Error::Parse("the cap must be positive".into()));
        }
        Ok(JobConfig { command, inputs, n_max, cap, format, oracle })
    }
}

fn parse_dims(s: &str) -> std::result::Result<(usize, usize), String> {
    let bad = || format!("expected `even,odd`, got {s:?}");
    let (e, o) = s.split_once(',').ok_or_else(bad)?;
    Ok((e.trim().parse().map_err(|_| bad())?, o.trim().parse().map_err(|_| bad())?))
}

fn resolve_cap(flag: Option<usize>, env: Option<String>) -> Result<usize> {
    match (flag, env) {
        (Some(c), _) => Ok(c),
        (None, Some(s)) => s.trim().parse().map_err(|_| Error::Parse(format!("{CAP_ENV} is not a positive integer: {s:?}"))),
        (None, None) => Ok(DEFAULT_CAP),
    }
}

/// Runs one job and returns its report.
pub fn run(job: &JobConfig) -> Result<Report> {
    let inputs: Vec<Input> = job.inputs.iter().map(|p| read_input(p)).collect::<Result<_>>()?;
    let mut report = Report::new(job.command.name(), job.inputs.iter().map(|p| p.display().to_string()).collect());
    commands::job_parameters(job, &mut report);
    match &job.command {
        Command::Describe => commands::describe(job, &inputs, &mut report)?,
        Command::Hh => commands::hh(job, &inputs, &mut report)?,
        Command::Hc => commands::hc(job, &inputs, &mut report)?,
        Command::Hp => commands::hp(job, &inputs, &mut report)?,
        Command::Sbi => commands::sbi(job, &inputs, &mut report)?,
        Command::Pair => commands::pair(job, &inputs, &mut report)?,
        Command::Numquot => commands::numquot(job, &inputs, &mut report)?,
        Command::Semisimple => commands::semisimple(job, &inputs, &mut report)?,
        Command::Schur { dims, max_weight } => {
            if !inputs.is_empty() {
                return Err(Error::Parse("schur takes no --input".into()));
            }
            commands::schur(job, *dims, *max_weight, &mut report)?
        }
        Command::Cnc => commands::cnc(job, &inputs, &mut report)?,
        Command::Dnc => commands::dnc(job, &inputs, &mut report)?,
        Command::Karoubi => commands::karoubi_cmd(job, &inputs, &mut report)?,
        Command::Orbit { object, inverse, bound } => commands::orbit_cmd(job, &inputs, object, inverse, *bound, &mut report)?,
    }
    Ok(report)
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Table => report.to_table(),
        Format::Json => report.to_json(),
    }
}

/// What a process invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses the command line (`args[0]` is the program name) and runs the job.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let fail = |e: Error| Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") };
    let cap = match resolve_cap(cli.cap, std::env::var(CAP_ENV).ok()) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let job = match JobConfig::new(cli.command, cli.input, cli.max_degree, cap, cli.format, cli.oracle) {
        Ok(j) => j,
        Err(e) => return fail(e),
    };
    match run(&job) {
        Ok(r) => Outcome { code: EXIT_OK, stdout: render(&r, job.format), stderr: String::new() },
        Err(e) => fail(e),
    }
}

#[cfg(test)]
mod tests;
