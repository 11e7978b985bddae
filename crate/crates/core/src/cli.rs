//! The `knotsum` command line.
//!
//! Exit codes: 0 on success, 1 for domain or data errors (invalid diagrams,
//! unknown knots, unreadable files), 2 for usage and parse errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::gamma::GammaElement;
use crate::orbit::{classify, symmetry_group, FlavorVector};
use crate::pdcode::{connected_sum_list, parse_quads, validate, PdCode, PdError};
use crate::prime_table::{FactorList, PrimeTable};
use crate::tabulate::{census, composite_name, tabulate, write_csv, write_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "knotsum", version, about = "Composite knots from prime factors")]
pub struct Cli {
    /// Prime knot table file.
    #[arg(long, global = true, default_value = "./data/primes9.tsv")]
    pub primes: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a PD-code against every diagram invariant.
    Validate { code: String },
    /// Connected sum of two or more PD-codes, left to right.
    Sum {
        #[arg(required = true, num_args = 2..)]
        codes: Vec<String>,
    },
    /// Symmetry type of a composite given as `name[:flavor]` factors (flavor: m, r or mr).
    Symmetry {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// All composites built from the given prime factors.
    Orbits {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Composite knot table up to a crossing bound, plus its symmetry census.
    Tabulate(TabulateArgs),
}

#[derive(Debug, clap::Args)]
pub struct TabulateArgs {
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_crossings: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write rows here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Include a PD-code column.
    #[arg(long)]
    pub pdcodes: bool,
}

/// Resolved settings for a `tabulate` run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub primes_path: PathBuf,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub max_crossings: u32,
    pub include_pdcodes: bool,
}

/// Parses `args` (including the program name) and runs the command, returning
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let primes = cli.primes;
    let result = match cli.command {
        Command::Validate { code } => cmd_validate(&code, out),
        Command::Sum { codes } => cmd_sum(&codes, out),
        Command::Symmetry { factors } => {
            load(&primes).and_then(|t| cmd_symmetry(&factors, &t, out))
        }
        Command::Orbits { factors } => load(&primes).and_then(|t| cmd_orbits(&factors, &t, out)),
        Command::Tabulate(args) => cmd_tabulate(
            &CliConfig {
                primes_path: primes,
                output_path: args.output,
                format: args.format,
                max_crossings: args.max_crossings,
                include_pdcodes: args.pdcodes,
            },
            out,
            err,
        ),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn domain(message: impl ToString) -> Self {
        Self {
            code: EXIT_DOMAIN,
            message: message.to_string(),
        }
    }

    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::domain(e)
    }
}

fn load(path: &PathBuf) -> Result<PrimeTable, Failure> {
    PrimeTable::load(path).map_err(Failure::domain)
}

fn parse_code(text: &str) -> Result<PdCode, Failure> {
    match text.parse::<PdCode>() {
        Ok(code) => Ok(code),
        Err(e @ PdError::Parse(_)) => Err(Failure::usage(e)),
        Err(e) => Err(Failure::domain(e)),
    }
}

/// Prints `ok` for a valid code; otherwise the violation report (exit 1).
pub fn cmd_validate(code: &str, out: &mut dyn Write) -> Result<(), Failure> {
    let quads = parse_quads(code).map_err(Failure::usage)?;
    match validate(&quads) {
        Ok(()) => {
            writeln!(out, "ok")?;
            Ok(())
        }
        Err(v) => Err(Failure::domain(v)),
    }
}

pub fn cmd_sum(codes: &[String], out: &mut dyn Write) -> Result<(), Failure> {
    if codes.len() < 2 {
        return Err(Failure::usage("sum needs at least two codes"));
    }
    let parsed = codes
        .iter()
        .map(|c| parse_code(c))
        .collect::<Result<Vec<_>, _>>()?;
    let sum = connected_sum_list(&parsed).map_err(Failure::domain)?;
    writeln!(out, "{sum}")?;
    Ok(())
}

/// Splits `name[:flavor]` tokens and resolves them against `table`, returning
/// the factor list and the matching flavor vector.
pub fn parse_flavored_factors(
    tokens: &[String],
    table: &PrimeTable,
) -> Result<(FactorList, FlavorVector), Failure> {
    let mut slots = Vec::new();
    for token in tokens {
        let (name, flavor) = token.split_once(':').unwrap_or((token, ""));
        let flavor = GammaElement::from_suffix(flavor).map_err(Failure::usage)?;
        let record = table.lookup(name).map_err(Failure::domain)?.clone();
        slots.push((record, flavor));
    }
    slots.sort_by_key(|(r, g)| (r.base_key(), *g));
    let factors =
        FactorList::from_factors(slots.iter().map(|(r, _)| r.clone())).map_err(Failure::domain)?;
    let mut flavors = slots.into_iter().map(|(_, g)| g);
    let blocks = factors
        .multiplicities()
        .map(|n| flavors.by_ref().take(n).collect())
        .collect();
    Ok((factors, FlavorVector::new(blocks)))
}

pub fn cmd_symmetry(
    tokens: &[String],
    table: &PrimeTable,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let (factors, flavors) = parse_flavored_factors(tokens, table)?;
    let sym = symmetry_group(&factors, &flavors).map_err(Failure::domain)?;
    writeln!(out, "{}", sym.name())?;
    Ok(())
}

/// Lists every composite of the given factors: name, orbit size, symmetry.
pub fn cmd_orbits(
    names: &[String],
    table: &PrimeTable,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let records = names
        .iter()
        .map(|n| table.lookup(n).cloned())
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::domain)?;
    let factors = FactorList::from_factors(records).map_err(Failure::domain)?;
    for class in classify(&factors) {
        writeln!(
            out,
            "{}\t{}\t{}",
            composite_name(&factors, &class.representative),
            class.orbit_size,
            class.symmetry.expect("classified").name()
        )?;
    }
    Ok(())
}

/// Writes the table in the chosen format and prints the census. The census goes
/// to `out` when rows go to a file, and to `err` when rows go to `out`.
pub fn cmd_tabulate(
    config: &CliConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let table = load(&config.primes_path)?;
    let rows = tabulate(&table, config.max_crossings);
    let emit = |sink: &mut dyn Write| match config.format {
        Format::Csv => write_csv(&rows, config.include_pdcodes, sink),
        Format::Json => write_json(&rows, config.include_pdcodes, sink),
    };
    let summary = census(&rows);
    match &config.output_path {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Failure::domain(format!("cannot create {}: {e}", path.display())))?;
            let mut writer = BufWriter::new(file);
            emit(&mut writer).map_err(Failure::domain)?;
            writer.flush()?;
            write!(out, "{summary}")?;
        }
        None => {
            emit(out).map_err(Failure::domain)?;
            write!(err, "{summary}")?;
        }
    }
    Ok(())
}
