//! Cycle-config resolution: command-line flags override config-file
//! values, which override the built-in defaults.
//!
//! The config file is a flat `key = value` document with exactly the
//! keys `eta_pump`, `eta_turbine`, `p_max_pa`, `p_min_pa`, `t_max_k`.
//! Blank lines and `#` comments are allowed; unknown or repeated keys
//! are errors.

use std::fs;
use std::path::PathBuf;

use clap::Args;
use steamcycle_core::CycleConfig;

use crate::CliError;

/// Benchmark defaults: ideal pump/turbine, 50 bar boiler, 0.125 bar
/// condenser, 600 degree Celsius turbine inlet.
pub const DEFAULT_CONFIG: CycleConfig = CycleConfig {
    eta_pump: 1.0,
    eta_turbine: 1.0,
    p_max: 5.0e6,
    p_min: 12_500.0,
    t_max: 873.15,
};

#[derive(Args)]
pub struct ConfigArgs {
    /// Pump isentropic efficiency, fraction in (0, 1]
    #[arg(long)]
    eta_pump: Option<f64>,
    /// Turbine isentropic efficiency, fraction in (0, 1]
    #[arg(long)]
    eta_turbine: Option<f64>,
    /// Boiler absolute pressure [Pa]
    #[arg(long)]
    p_max: Option<f64>,
    /// Condenser absolute pressure [Pa]
    #[arg(long)]
    p_min: Option<f64>,
    /// Turbine-inlet absolute temperature [K]
    #[arg(long)]
    t_max: Option<f64>,
    /// Key-value config file; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
}

impl ConfigArgs {
    /// Merge defaults, config file and flags into one config.
    pub fn resolve(&self) -> Result<CycleConfig, CliError> {
        let mut config = DEFAULT_CONFIG;
        if let Some(path) = &self.config {
            apply_config_file(&mut config, path)?;
        }
        if let Some(v) = self.eta_pump {
            config.eta_pump = v;
        }
        if let Some(v) = self.eta_turbine {
            config.eta_turbine = v;
        }
        if let Some(v) = self.p_max {
            config.p_max = v;
        }
        if let Some(v) = self.p_min {
            config.p_min = v;
        }
        if let Some(v) = self.t_max {
            config.t_max = v;
        }
        Ok(config)
    }
}

fn apply_config_file(config: &mut CycleConfig, path: &PathBuf) -> Result<(), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config file {}: {e}", path.display())))?;
    let bad = |line_no: usize, msg: String| {
        Err(CliError::Usage(format!(
            "config file {}, line {line_no}: {msg}",
            path.display()
        )))
    };
    let mut seen: Vec<&str> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return bad(line_no, format!("expected `key = value`, got `{line}`"));
        };
        let key = key.trim();
        let value: f64 = match value.trim().parse() {
            Ok(v) => v,
            Err(_) => return bad(line_no, format!("`{}` is not a number", value.trim())),
        };
        if seen.contains(&key) {
            return bad(line_no, format!("key `{key}` given twice"));
        }
        seen.push(key);
        match key {
            "eta_pump" => config.eta_pump = value,
            "eta_turbine" => config.eta_turbine = value,
            "p_max_pa" => config.p_max = value,
            "p_min_pa" => config.p_min = value,
            "t_max_k" => config.t_max = value,
            _ => return bad(line_no, format!("unknown key `{key}`")),
        }
    }
    Ok(())
}
