//! Human-readable state/cycle summaries plus a machine-readable
//! structured document.
//!
//! The text format is fixed: display units are degree Celsius, bar and
//! kJ; enthalpy and entropy are shown relative to saturated liquid at
//! the triple point. All displayed numbers are rounded from
//! full-precision values in one step, never from other rounded numbers.

use serde::Serialize;

use crate::cycle::CycleResult;
use crate::water::{ReferenceOffsets, ThermoState};

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Structured,
}

/// How a report should be rendered.
#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    pub format: ReportFormat,
    /// Also emit absolute (engine-scale) enthalpy/entropy in structured
    /// output.
    pub include_absolute: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            format: ReportFormat::Text,
            include_absolute: false,
        }
    }
}

/// Render one state block. The quality line appears only for strictly
/// interior two-phase states.
pub fn format_state(index: usize, state: &ThermoState, offsets: &ReferenceOffsets) -> String {
    let mut block = format!(
        "***** State {} *****\n\
         Temperature (degree Celsius) = {:.2}\n\
         Absolute pressure (bar) = {:.3}\n\
         Specific enthalpy (kJ/kg) = {:.4}\n\
         Specific entropy (kJ/kg.K) = {:.6}",
        index,
        state.temperature - 273.15,
        state.pressure / 1e5,
        offsets.relative_enthalpy(state) / 1e3,
        offsets.relative_entropy(state) / 1e3,
    );
    if let Some(q) = state.quality {
        if q > 0.0 && q < 1.0 {
            block.push_str(&format!("\nLiquid-gas mixture, quality = {q:.6}"));
        }
    }
    block
}

/// Render the whole-cycle energy summary block.
pub fn format_cycle_summary(result: &CycleResult) -> String {
    format!(
        "***** Cycle Analysis *****\n\
         Input pump work per kg (kJ/kg) = {:.2}\n\
         Output turbine work per kg (kJ/kg) = {:.2}\n\
         \n\
         Net output work per kg (kJ/kg) = {:.2}\n\
         Input heat per kg (kJ/kg) = {:.2}\n\
         \n\
         Heat rejected per kg (kJ/kg) = {:.2}\n\
         \n\
         Cycle efficiency = {:.2}%",
        result.pump_work / 1e3,
        result.turbine_work / 1e3,
        result.net_work / 1e3,
        result.heat_added / 1e3,
        result.heat_rejected / 1e3,
        100.0 * result.eta_cycle,
    )
}

/// Full text report: the four state blocks then the cycle summary, each
/// block preceded by one blank line.
pub fn render_text_report(result: &CycleResult, offsets: &ReferenceOffsets) -> String {
    let mut blocks: Vec<String> = result
        .states
        .iter()
        .enumerate()
        .map(|(i, state)| format_state(i + 1, state, offsets))
        .collect();
    blocks.push(format_cycle_summary(result));
    format!("\n{}", blocks.join("\n\n"))
}

/// Machine-readable cycle report; all values full precision, SI units.
#[derive(Debug, Serialize)]
pub struct StructuredReport {
    pub config: StructuredConfig,
    pub states: Vec<StructuredState>,
    pub energy: StructuredEnergy,
    pub eta_cycle: f64,
}

#[derive(Debug, Serialize)]
pub struct StructuredConfig {
    pub eta_pump: f64,
    pub eta_turbine: f64,
    pub p_max_pa: f64,
    pub p_min_pa: f64,
    pub t_max_k: f64,
}

#[derive(Debug, Serialize)]
pub struct StructuredState {
    pub index: usize,
    #[serde(rename = "T_k")]
    pub t_k: f64,
    pub p_pa: f64,
    pub h_rel_j_per_kg: f64,
    pub s_rel_j_per_kg_k: f64,
    /// Strictly interior vapor fraction; null at and outside the dome
    /// boundaries, mirroring the text report.
    pub quality: Option<f64>,
    /// Phase/region tag; an extension over the text report.
    pub region: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_abs_j_per_kg: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_abs_j_per_kg_k: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct StructuredEnergy {
    pub pump_work: f64,
    pub turbine_work: f64,
    pub net_work: f64,
    pub heat_added: f64,
    pub heat_rejected: f64,
}

/// Build the structured document for a solved cycle.
pub fn to_structured(
    result: &CycleResult,
    offsets: &ReferenceOffsets,
    include_absolute: bool,
) -> StructuredReport {
    StructuredReport {
        config: StructuredConfig {
            eta_pump: result.config.eta_pump,
            eta_turbine: result.config.eta_turbine,
            p_max_pa: result.config.p_max,
            p_min_pa: result.config.p_min,
            t_max_k: result.config.t_max,
        },
        states: result
            .states
            .iter()
            .enumerate()
            .map(|(i, state)| structured_state(i + 1, state, offsets, include_absolute))
            .collect(),
        energy: StructuredEnergy {
            pump_work: result.pump_work,
            turbine_work: result.turbine_work,
            net_work: result.net_work,
            heat_added: result.heat_added,
            heat_rejected: result.heat_rejected,
        },
        eta_cycle: result.eta_cycle,
    }
}

/// Structured view of a single state, outside any cycle.
pub fn structured_state(
    index: usize,
    state: &ThermoState,
    offsets: &ReferenceOffsets,
    include_absolute: bool,
) -> StructuredState {
    StructuredState {
        index,
        t_k: state.temperature,
        p_pa: state.pressure,
        h_rel_j_per_kg: offsets.relative_enthalpy(state),
        s_rel_j_per_kg_k: offsets.relative_entropy(state),
        quality: state.quality.filter(|q| *q > 0.0 && *q < 1.0),
        region: state.region.to_string(),
        h_abs_j_per_kg: include_absolute.then_some(state.enthalpy),
        s_abs_j_per_kg_k: include_absolute.then_some(state.entropy),
    }
}

impl StructuredReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are finite")
    }
}

impl StructuredState {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("state values are finite")
    }
}
