use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use radgen::cli::{
    parse_field_mode, run_command, run_reproduce, FileCommand, InputFile, JobError, JobOptions,
    Report,
};
use radgen::groebner::{FieldMode, DEFAULT_MAX_STEPS};

/// Constructs small generating sets, up to radical, for intersections of
/// ideals with nested containments between their generators, and verifies
/// every claim with an exact Groebner engine.
#[derive(Parser)]
#[command(name = "radgen", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Coefficient field: `rat` or `mod:<prime>`.
    #[arg(long)]
    field: Option<String>,
    /// Budget on S-pair reductions per basis computation.
    #[arg(long = "max-steps", default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FileJob {
    /// JSON payload file.
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Subcommand)]
enum Command {
    /// Build the generators for one intersection of two ideals.
    Construct(FileJob),
    /// Check radical equality of two generating sets.
    Verify(FileJob),
    /// Intersect monomial ideals.
    Intersect(FileJob),
    /// Minimal primes of a squarefree monomial ideal.
    MinimalPrimes(FileJob),
    /// Height (and purity) of a squarefree monomial ideal.
    Height(FileJob),
    /// Generators for the full-flag intersection of length t.
    Stci(FileJob),
    /// Generators for a chain of nested component ideals.
    Chain(FileJob),
    /// Validate a partition system and emit its combined generators.
    SvCombine(FileJob),
    /// Re-run a built-in worked instance end to end.
    Reproduce {
        /// example1, example2, example3 or corollary2.
        name: String,
        /// Flag length for corollary2.
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Cap on t accepted by corollary2.
        #[arg(long = "max-t", default_value_t = 4)]
        max_t: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn resolve_options(common: &CommonOpts, file: Option<&InputFile>) -> Result<JobOptions, JobError> {
    let mode = match &common.field {
        Some(text) => parse_field_mode(text)?,
        None => match file.and_then(|f| f.p) {
            Some(p) => parse_field_mode(&format!("mod:{}", p))?,
            None => FieldMode::Rational,
        },
    };
    Ok(JobOptions { mode, max_steps: common.max_steps })
}

fn emit(report: &Report, output: Option<&PathBuf>) -> Result<(), JobError> {
    let text = report.render();
    match output {
        None => print!("{}", text),
        Some(path) => fs::write(path, text)
            .map_err(|e| JobError::input(format!("cannot write {}: {}", path.display(), e)))?,
    }
    Ok(())
}

fn run() -> Result<i32, JobError> {
    let cli = Cli::parse();
    let start = Instant::now();
    let (report, common) = match &cli.command {
        Command::Reproduce { name, t, max_t, common } => {
            let opts = resolve_options(common, None)?;
            (run_reproduce(name, *t, *max_t, &opts)?, common)
        }
        other => {
            let (cmd, job) = match other {
                Command::Construct(job) => (FileCommand::Construct, job),
                Command::Verify(job) => (FileCommand::Verify, job),
                Command::Intersect(job) => (FileCommand::Intersect, job),
                Command::MinimalPrimes(job) => (FileCommand::MinimalPrimes, job),
                Command::Height(job) => (FileCommand::Height, job),
                Command::Stci(job) => (FileCommand::Stci, job),
                Command::Chain(job) => (FileCommand::Chain, job),
                Command::SvCombine(job) => (FileCommand::SvCombine, job),
                Command::Reproduce { .. } => unreachable!("handled above"),
            };
            let file = InputFile::load(&job.input)?;
            let opts = resolve_options(&job.common, Some(&file))?;
            (run_command(cmd, &file, &opts)?, &job.common)
        }
    };
    emit(&report, common.output.as_ref())?;
    eprintln!(
        "{}: {} in {:.2}s",
        report.to_json()["command"].as_str().unwrap_or("job"),
        report.overall(),
        start.elapsed().as_secs_f64()
    );
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
