//! The `hdepth` command line.

pub mod parse;
pub mod render;
pub mod table;

use std::io::{self, Write};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bigpoly::IntPolynomial;
use crate::depth::{hdepth, HdepthError};
use crate::ideal::{IdealError, MonomialIdeal};
use crate::module::{ModuleError, MonomialModuleExpr};
use crate::series::HilbertSeries;

use self::parse::{parse_intersection, parse_polynomial, parse_range, CliIdealError, ParseError};

#[derive(Debug, Parser)]
#[command(name = "hdepth", version, about = "Hilbert depth of graded modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Depth of the series G(t)/(1-t)^dim.
    Num(NumArgs),
    /// Depth of a module built from a monomial ideal.
    Module(ModuleArgs),
    /// Depth of R^s + m over a range of ring sizes.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OutputArgs {
    /// Print one line per candidate depth.
    #[arg(long, conflicts_with = "json")]
    pub verbose: bool,
    /// Emit a JSON report.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct NumArgs {
    /// Numerator, e.g. "2-3*t-2*t^2+2*t^3+4*t^4".
    #[arg(long, allow_hyphen_values = true)]
    pub g: String,
    /// Exponent of (1-t) in the denominator.
    #[arg(long)]
    pub dim: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuleKind {
    /// R/I
    Quotient,
    /// I itself
    Ideal,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["gens", "intersect", "maximal"])))]
pub struct ModuleArgs {
    /// Number of variables x1..xN.
    #[arg(long)]
    pub nvars: usize,
    /// Generators, e.g. "x1*x2^2,x3".
    #[arg(long)]
    pub gens: Option<String>,
    /// Generator lists separated by ';', intersected, e.g. "x1;x2,x3".
    #[arg(long)]
    pub intersect: Option<String>,
    /// Use the maximal ideal (x1, ..., xN).
    #[arg(long)]
    pub maximal: bool,
    #[arg(long, value_enum)]
    pub kind: ModuleKind,
    /// Add a free summand R^s.
    #[arg(long, default_value_t = 0)]
    pub free_rank: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Ring sizes, inclusive range a..b.
    #[arg(long, default_value = "4..19")]
    pub n: String,
    /// Free ranks, comma separated; 0 stands for m alone.
    #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4,5,6,100")]
    pub s: Vec<u64>,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("precondition violated: {0}")]
    Depth(#[from] HdepthError),
    #[error(transparent)]
    Table(#[from] table::TableError),
    #[error("{0}")]
    Argument(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<CliIdealError> for CliError {
    fn from(e: CliIdealError) -> Self {
        match e {
            CliIdealError::Parse(e) => CliError::Parse(e),
            CliIdealError::Ideal(e) => CliError::Ideal(e),
        }
    }
}

impl CliError {
    /// 2 for malformed input, 3 for series that are not a module's.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Ideal(_) | CliError::Argument(_) => 2,
            CliError::Module(_) | CliError::Depth(_) | CliError::Table(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

fn report<W: Write>(
    out: &mut W,
    series: &HilbertSeries,
    output: OutputArgs,
    dim_line: bool,
) -> Result<(), CliError> {
    let result = hdepth(series)?;
    let numerator = series.numerator();
    if output.json {
        let value = render::json_report(numerator, series.denom_exp(), &result);
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"))?;
    } else {
        let dim = dim_line.then_some(series.denom_exp());
        out.write_all(render::text_report(numerator, &result, output.verbose, dim).as_bytes())?;
    }
    Ok(())
}

/// `hdepth num`
pub fn run_num<W: Write>(args: &NumArgs, out: &mut W) -> Result<(), CliError> {
    let g = parse_polynomial(&args.g)?;
    let series = HilbertSeries::reduced(g, args.dim, 0);
    report(out, &series, args.output, false)
}

fn module_expr(args: &ModuleArgs) -> Result<MonomialModuleExpr, CliError> {
    let ideal = if args.maximal {
        MonomialIdeal::maximal(args.nvars)?
    } else if let Some(lists) = &args.intersect {
        parse_intersection(lists, args.nvars)?
    } else {
        let gens = args.gens.as_deref().unwrap_or_default();
        parse_intersection(gens, args.nvars)?
    };
    let base = match args.kind {
        ModuleKind::Quotient => MonomialModuleExpr::Quotient(ideal),
        ModuleKind::Ideal => MonomialModuleExpr::Ideal(ideal),
    };
    Ok(if args.free_rank == 0 {
        base
    } else {
        MonomialModuleExpr::DirectSum(vec![
            MonomialModuleExpr::FreeTwist {
                n_vars: args.nvars,
                rank: args.free_rank,
                shift: 0,
            },
            base,
        ])
    })
}

/// `hdepth module`
pub fn run_module<W: Write>(args: &ModuleArgs, out: &mut W) -> Result<(), CliError> {
    let series = module_expr(args)?.series()?;
    if series.is_zero() && !args.output.json {
        writeln!(out, "hdepth= infinity")?;
        return Ok(());
    }
    report(out, &series, args.output, true)
}

/// `hdepth table`
pub fn run_table<W: Write>(args: &TableArgs, out: &mut W) -> Result<(), CliError> {
    let ns = parse_range(&args.n)?;
    if *ns.start() == 0 || *ns.end() > table::MAX_VARS {
        return Err(CliError::Argument(format!(
            "ring sizes must lie in 1..{}",
            table::MAX_VARS
        )));
    }
    if args.s.is_empty() {
        return Err(CliError::Argument("at least one free rank is needed".into()));
    }
    let t = table::compute(ns, &args.s)?;
    match args.format {
        TableFormat::Text => out.write_all(t.to_text().as_bytes())?,
        TableFormat::Csv => out.write_all(t.to_csv().as_bytes())?,
        TableFormat::Json => writeln!(out, "{}", t.to_json())?,
    }
    Ok(())
}

pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<(), CliError> {
    match &cli.command {
        Command::Num(a) => run_num(a, out),
        Command::Module(a) => run_module(a, out),
        Command::Table(a) => run_table(a, out),
    }
}

/// Parses `argv`, runs, and returns the captured standard output.
pub fn run_to_string<I, T>(argv: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Argument(e.to_string()))?;
    let mut buf = Vec::new();
    run(&cli, &mut buf)?;
    Ok(String::from_utf8(buf).expect("reports are UTF-8"))
}

/// Numerator and `dim` read back from a JSON report.
pub fn numerator_from_json(report: &serde_json::Value) -> Option<(IntPolynomial, usize)> {
    let g = parse_polynomial(report.get("numerator")?.as_str()?).ok()?;
    let dim = report.get("dim")?.as_u64()? as usize;
    Some((g, dim))
}
