//! Command-line superheated steam cycle analyzer.
//!
//! Exit codes: 0 success, 2 usage/config error, 3 property-domain error.

mod config;
mod sweep;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use steamcycle_core::{
    format_state, render_text_report, solve_cycle, structured_state, to_structured, CycleError,
    PropertyError, ReferenceOffsets, ThermoState, WaterTables,
};

use config::ConfigArgs;
use sweep::SweepArgs;

#[derive(Parser)]
#[command(name = "steamcycle", version, about = "Superheated steam power cycle analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one cycle and print the four states plus the energy summary
    Solve(SolveArgs),
    /// Fix a single water/steam state and print it
    Props(PropsArgs),
    /// Solve the cycle over a range of one config parameter, as CSV
    Sweep(SweepArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    config: ConfigArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Include absolute enthalpy/entropy in structured output
    #[arg(long)]
    include_absolute: bool,
}

#[derive(Args)]
struct PropsArgs {
    /// State-fixing variable pair
    #[arg(value_enum)]
    query: PropsQuery,
    /// First value: T [K] (TP), p [Pa] (PQ), h [J/kg] (HP), s [J/(kg.K)] (SP)
    a: f64,
    /// Second value: p [Pa] (TP, HP, SP) or Q [-] (PQ)
    b: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropsQuery {
    #[value(name = "TP", alias = "tp")]
    Tp,
    #[value(name = "PQ", alias = "pq")]
    Pq,
    #[value(name = "HP", alias = "hp")]
    Hp,
    #[value(name = "SP", alias = "sp")]
    Sp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    #[value(alias = "structured")]
    Json,
}

/// Maps error kinds onto the documented exit codes.
enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Domain(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<CycleError> for CliError {
    fn from(e: CycleError) -> Self {
        match e {
            CycleError::ConfigInvalid(_) | CycleError::InvalidEfficiency(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<PropertyError> for CliError {
    fn from(e: PropertyError) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tables = WaterTables::new();
    let result = match cli.command {
        Command::Solve(args) => run_solve(&tables, args),
        Command::Props(args) => run_props(&tables, args),
        Command::Sweep(args) => sweep::run_sweep(&tables, args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn offsets(tables: &WaterTables) -> Result<ReferenceOffsets, CliError> {
    Ok(ReferenceOffsets::new(tables)?)
}

fn run_solve(tables: &WaterTables, args: SolveArgs) -> Result<(), CliError> {
    let config = args.config.resolve()?;
    let result = solve_cycle(tables, &config)?;
    let off = offsets(tables)?;
    match args.format {
        OutputFormat::Text => println!("{}", render_text_report(&result, &off)),
        OutputFormat::Json => {
            println!("{}", to_structured(&result, &off, args.include_absolute).to_json())
        }
    }
    Ok(())
}

fn run_props(tables: &WaterTables, args: PropsArgs) -> Result<(), CliError> {
    let state: ThermoState = match args.query {
        PropsQuery::Tp => tables.state_from_tp(args.a, args.b),
        PropsQuery::Pq => tables.state_from_pq(args.a, args.b),
        PropsQuery::Hp => tables.state_from_hp(args.a, args.b),
        PropsQuery::Sp => tables.state_from_sp(args.a, args.b),
    }?;
    let off = offsets(tables)?;
    match args.format {
        OutputFormat::Text => println!("{}", format_state(1, &state, &off)),
        OutputFormat::Json => println!("{}", structured_state(1, &state, &off, false).to_json()),
    }
    Ok(())
}
