use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use septica::closed_forms::{self, evaluate_with};
use septica::precision::{to_decimal, Context};
use septica::table::{special_values, TableFormat};
use septica::verify::{self, default_cache_path, emit_report, ConstantCache, ReportFormat, ReportOptions};
use septica::Error;

const DEFAULT_DIGITS: u32 = 60;

#[derive(Parser)]
#[command(
    name = "septica",
    version,
    about = "Evaluate and verify theta-function constants of the septic modular equation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a closed-form constant.
    Eval(EvalArgs),
    /// Run verification checks and report digit agreement.
    Verify(VerifyArgs),
    /// Print the table of special values.
    Table(TableArgs),
    /// List registered ids.
    List {
        #[arg(value_enum, default_value_t = ListKind::Checks)]
        kind: ListKind,
    },
}

#[derive(Args)]
struct EvalArgs {
    /// Closed-form id, e.g. `g343-thm2`.
    #[arg(long)]
    id: String,
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    digits: u32,
    /// Parameter override as `name=expression`, e.g. `n=3`.
    #[arg(long = "arg", value_name = "NAME=EXPR")]
    args: Vec<String>,
    /// Skip the decimal cache.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every registered check.
    #[arg(long, conflicts_with = "checks")]
    all: bool,
    /// Run one check; may be repeated.
    #[arg(long = "check", value_name = "ID")]
    checks: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    digits: u32,
    /// Write a JSON report (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write a Markdown report (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    markdown: Option<PathBuf>,
    /// Omit timings so reports are reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
    /// Run checks on all cores.
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    digits: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListKind {
    Checks,
    Constants,
}

/// Exit statuses.
mod status {
    pub const FAIL: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const NUMERICAL: u8 = 3;
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(a) => eval(a),
        Command::Verify(a) => run_verify(a),
        Command::Table(a) => table(a),
        Command::List { kind } => list(kind),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("septica: {e}");
            ExitCode::from(exit_status(&e))
        }
    }
}

fn exit_status(e: &Error) -> u8 {
    match e {
        _ if e.is_numerical() => status::NUMERICAL,
        Error::Registry(_) | Error::InvalidPrecision(_) | Error::UnknownInvariant(_) | Error::Domain(_) => {
            status::USAGE
        }
        _ => status::FAIL,
    }
}

fn eval(a: EvalArgs) -> Result<ExitCode, Error> {
    closed_forms::lookup(&a.id)?;
    if !a.args.is_empty() {
        let pairs = a
            .args
            .iter()
            .map(|s| {
                s.split_once('=')
                    .map(|(n, v)| (n.trim(), v.trim()))
                    .ok_or_else(|| Error::domain(format!("expected NAME=EXPR, got `{s}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ctx = Context::new(a.digits)?;
        println!("{}", to_decimal(&evaluate_with(&a.id, &pairs, &ctx)?, a.digits));
        return Ok(ExitCode::SUCCESS);
    }
    let path = (!a.no_cache).then(default_cache_path).flatten();
    let mut cache = match &path {
        Some(p) => ConstantCache::load(p).unwrap_or_else(|e| {
            eprintln!("septica: ignoring cache {}: {e}", p.display());
            ConstantCache::new()
        }),
        None => ConstantCache::new(),
    };
    let hit = cache.get(&a.id, a.digits).is_some();
    let decimal = cache.get_or_compute(&a.id, a.digits)?;
    println!("{decimal}");
    if let (Some(p), false) = (&path, hit) {
        if let Err(e) = cache.store(p) {
            eprintln!("septica: could not write cache {}: {e}", p.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(a: VerifyArgs) -> Result<ExitCode, Error> {
    if !a.all && a.checks.is_empty() {
        eprintln!("septica: pass --all or at least one --check ID");
        return Ok(ExitCode::from(status::USAGE));
    }
    let results = if a.all {
        verify::run_all(a.digits, a.parallel)?
    } else {
        verify::run_selected(&a.checks, a.digits, a.parallel)?
    };
    let options = ReportOptions {
        digits: a.digits,
        timing: !a.no_timing,
    };
    for (path, format) in [(&a.json, ReportFormat::Json), (&a.markdown, ReportFormat::Markdown)] {
        if let Some(path) = path {
            write_to(path, |out| emit_report(&results, format, options, out))?;
        }
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    if a.json.is_none() && a.markdown.is_none() {
        for r in &results {
            println!(
                "{} {:<36} {:>4}/{}",
                if r.pass { "PASS" } else { "FAIL" },
                r.check_id,
                r.digits_agreed,
                r.required_digits
            );
        }
    }
    eprintln!(
        "{} of {} checks pass at {} digits",
        results.len() - failed,
        results.len(),
        a.digits
    );
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(status::FAIL)
    })
}

fn table(a: TableArgs) -> Result<ExitCode, Error> {
    let ctx = Context::new(a.digits)?;
    let format = match a.format {
        Format::Json => TableFormat::Json,
        Format::Markdown => TableFormat::Markdown,
        Format::Latex => TableFormat::Latex,
    };
    let values = special_values(&ctx)?;
    write_to(Path::new("-"), |out| values.write(format, out))?;
    Ok(ExitCode::SUCCESS)
}

fn list(kind: ListKind) -> Result<ExitCode, Error> {
    match kind {
        ListKind::Checks => verify::check_ids().iter().for_each(|id| println!("{id}")),
        ListKind::Constants => {
            for e in closed_forms::REGISTRY {
                println!("{:<24} {}", e.id, e.description);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_to(path: &Path, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), Error> {
    if path == Path::new("-") {
        let stdout = io::stdout();
        let mut lock = stdout.lock();
        f(&mut lock)?;
        lock.flush()?;
    } else {
        let mut out = BufWriter::new(File::create(path)?);
        f(&mut out)?;
        out.flush()?;
    }
    Ok(())
}
