//! Error types for the property engine and the cycle solver.

use thiserror::Error;

/// Failures while evaluating or inverting water properties.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PropertyError {
    #[error("{quantity} = {value} outside valid range [{min}, {max}]")]
    OutOfRange {
        quantity: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("quality {0} outside [0, 1]")]
    QualityOutOfBounds(f64),

    #[error(
        "(T, p) = ({temperature} K, {pressure} Pa) lies on the saturation curve; \
         fix two-phase states from (p, Q) instead"
    )]
    SaturationAmbiguous { temperature: f64, pressure: f64 },

    #[error("no convergence in {context}")]
    NoConvergence { context: &'static str },
}

/// The cycle process in which an error occurred.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleProcess {
    CondenserExit,
    Pump,
    Boiler,
    Turbine,
}

impl std::fmt::Display for CycleProcess {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CycleProcess::CondenserExit => "condenser exit (state 1)",
            CycleProcess::Pump => "pump",
            CycleProcess::Boiler => "boiler",
            CycleProcess::Turbine => "turbine",
        })
    }
}

/// Failures while validating a cycle configuration or simulating its
/// processes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CycleError {
    #[error("invalid cycle config: {0}")]
    ConfigInvalid(String),

    #[error("isentropic efficiency must lie in (0, 1], got {0}")]
    InvalidEfficiency(f64),

    #[error("compression target {target_pa} Pa is below the start pressure {start_pa} Pa")]
    CompressionBelowStart { start_pa: f64, target_pa: f64 },

    #[error("expansion target {target_pa} Pa is above the start pressure {start_pa} Pa")]
    ExpansionAboveStart { start_pa: f64, target_pa: f64 },

    #[error("heat addition target {target_k} K is below the start temperature {start_k} K")]
    CoolingRequested { start_k: f64, target_k: f64 },

    #[error("{process}: {source}")]
    Property {
        process: CycleProcess,
        source: PropertyError,
    },
}

impl CycleError {
    pub(crate) fn property(process: CycleProcess, source: PropertyError) -> Self {
        CycleError::Property { process, source }
    }
}
