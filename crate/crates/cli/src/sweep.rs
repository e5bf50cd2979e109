//! One-parameter sweeps over the cycle config, emitted as CSV.

use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use steamcycle_core::{solve_cycle, CycleConfig, WaterTables};

use crate::config::ConfigArgs;
use crate::CliError;

#[derive(Args)]
pub struct SweepArgs {
    /// Config field to sweep
    #[arg(long, value_enum)]
    param: SweepParam,
    /// First value of the swept parameter
    #[arg(long)]
    from: f64,
    /// Last value of the swept parameter; defaults to `from`
    #[arg(long)]
    to: Option<f64>,
    /// Number of evenly spaced points, >= 1
    #[arg(long, default_value_t = 2)]
    points: usize,
    /// Write the CSV here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fixed values for the remaining config fields
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SweepParam {
    #[value(name = "eta_pump", alias = "eta-pump")]
    EtaPump,
    #[value(name = "eta_turbine", alias = "eta-turbine")]
    EtaTurbine,
    #[value(name = "p_max", alias = "p-max")]
    PMax,
    #[value(name = "p_min", alias = "p-min")]
    PMin,
    #[value(name = "t_max", alias = "t-max")]
    TMax,
}

impl SweepParam {
    fn name(self) -> &'static str {
        match self {
            SweepParam::EtaPump => "eta_pump",
            SweepParam::EtaTurbine => "eta_turbine",
            SweepParam::PMax => "p_max",
            SweepParam::PMin => "p_min",
            SweepParam::TMax => "t_max",
        }
    }

    fn apply(self, config: &mut CycleConfig, value: f64) {
        match self {
            SweepParam::EtaPump => config.eta_pump = value,
            SweepParam::EtaTurbine => config.eta_turbine = value,
            SweepParam::PMax => config.p_max = value,
            SweepParam::PMin => config.p_min = value,
            SweepParam::TMax => config.t_max = value,
        }
    }
}

pub const CSV_HEADER: &str = "param,value,eta_cycle_percent,net_work_kj_per_kg,\
                              heat_added_kj_per_kg,heat_rejected_kj_per_kg,quality_state4";

pub fn run_sweep(tables: &WaterTables, args: SweepArgs) -> Result<(), CliError> {
    let base = args.config.resolve()?;
    let values = sweep_values(args.from, args.to, args.points)?;

    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for value in values {
        let mut config = base;
        args.param.apply(&mut config, value);
        csv.push_str(&row(tables, args.param.name(), value, &config));
        csv.push('\n');
    }

    match &args.out {
        Some(path) => fs::write(path, csv)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn sweep_values(from: f64, to: Option<f64>, points: usize) -> Result<Vec<f64>, CliError> {
    let to = to.unwrap_or(from);
    if !from.is_finite() || !to.is_finite() {
        return Err(CliError::Usage("sweep bounds must be finite".into()));
    }
    match points {
        0 => Err(CliError::Usage("sweep needs at least one point".into())),
        1 if from != to => Err(CliError::Usage(
            "a single-point sweep needs matching --from and --to".into(),
        )),
        1 => Ok(vec![from]),
        n => Ok((0..n)
            .map(|i| from + (to - from) * i as f64 / (n - 1) as f64)
            .collect()),
    }
}

fn row(tables: &WaterTables, param: &str, value: f64, config: &CycleConfig) -> String {
    match solve_cycle(tables, config) {
        Ok(result) => {
            let quality = result.states[3]
                .quality
                .filter(|q| *q > 0.0 && *q < 1.0)
                .map(|q| q.to_string())
                .unwrap_or_default();
            format!(
                "{param},{value},{},{},{},{},{quality}",
                100.0 * result.eta_cycle,
                result.net_work / 1e3,
                result.heat_added / 1e3,
                result.heat_rejected / 1e3,
            )
        }
        Err(e) => {
            let reason = e.to_string().replace(',', ";");
            format!("{param},{value},ERROR:{reason},,,,")
        }
    }
}
