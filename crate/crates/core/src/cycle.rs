//! Superheated Rankine cycle simulation: the four processes
//! (isobaric condensation implied) and whole-cycle energy accounting,
//! all per kilogram of circulating water.

use crate::error::{CycleError, CycleProcess, PropertyError};
use crate::water::{ThermoState, WaterTables, P_CRITICAL, P_MAX_VALID, T_MAX_VALID, T_TRIPLE};

/// The five user inputs that determine a superheated cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleConfig {
    /// Pump isentropic efficiency, fraction in (0, 1].
    pub eta_pump: f64,
    /// Turbine isentropic efficiency, fraction in (0, 1].
    pub eta_turbine: f64,
    /// Boiler absolute pressure [Pa].
    pub p_max: f64,
    /// Condenser absolute pressure [Pa].
    pub p_min: f64,
    /// Turbine-inlet absolute temperature [K].
    pub t_max: f64,
}

impl CycleConfig {
    /// Check every config invariant, naming the violated one.
    pub fn validate(&self, tables: &WaterTables) -> Result<(), CycleError> {
        let bad = |msg: String| Err(CycleError::ConfigInvalid(msg));
        for (name, eta) in [("eta_pump", self.eta_pump), ("eta_turbine", self.eta_turbine)] {
            if !eta.is_finite() || eta <= 0.0 || eta > 1.0 {
                return bad(format!("{name} = {eta} outside (0, 1]"));
            }
        }
        if !self.p_min.is_finite() || self.p_min < tables.p_triple {
            return bad(format!(
                "p_min = {} Pa below the triple-point pressure {} Pa",
                self.p_min, tables.p_triple
            ));
        }
        if self.p_min > P_CRITICAL {
            return bad(format!(
                "p_min = {} Pa above the critical pressure {} Pa (condensation impossible)",
                self.p_min, P_CRITICAL
            ));
        }
        if !self.p_max.is_finite() || self.p_max > P_MAX_VALID {
            return bad(format!(
                "p_max = {} Pa above the {} Pa validity bound",
                self.p_max, P_MAX_VALID
            ));
        }
        if self.p_min >= self.p_max {
            return bad("p_min >= p_max".to_string());
        }
        if !self.t_max.is_finite() || self.t_max < T_TRIPLE || self.t_max > T_MAX_VALID {
            return bad(format!(
                "t_max = {} K outside [{}, {}] K",
                self.t_max, T_TRIPLE, T_MAX_VALID
            ));
        }
        if self.p_max <= P_CRITICAL {
            let t_sat = tables
                .saturation_temperature(self.p_max)
                .map_err(|e| CycleError::property(CycleProcess::Boiler, e))?;
            if self.t_max <= t_sat {
                return bad(format!(
                    "t_max = {} K does not superheat: saturation at p_max is {t_sat} K",
                    self.t_max
                ));
            }
        }
        Ok(())
    }
}

/// Endpoint state plus the energy exchanged in one process.
#[derive(Debug, Clone, Copy)]
pub struct ProcessResult {
    pub end_state: ThermoState,
    /// Actual specific work or heat [J/kg], positive as named (pump work
    /// in, turbine work out, heat in).
    pub energy: f64,
    /// Ideal constant-entropy work [J/kg]; absent for heat addition.
    pub isentropic_work: Option<f64>,
}

/// The four cycle states plus whole-cycle energy accounting.
#[derive(Debug, Clone)]
pub struct CycleResult {
    pub config: CycleConfig,
    /// States 1..4: condenser exit, pump exit, boiler/superheater exit,
    /// turbine exit.
    pub states: [ThermoState; 4],
    /// Pump work input [J/kg].
    pub pump_work: f64,
    /// Turbine work output [J/kg].
    pub turbine_work: f64,
    /// turbine_work - pump_work [J/kg].
    pub net_work: f64,
    /// Boiler/superheater heat input [J/kg].
    pub heat_added: f64,
    /// Condenser heat rejection [J/kg].
    pub heat_rejected: f64,
    /// Net work over heat added, fraction.
    pub eta_cycle: f64,
}

fn check_efficiency(eta: f64) -> Result<(), CycleError> {
    if !eta.is_finite() || eta <= 0.0 || eta > 1.0 {
        return Err(CycleError::InvalidEfficiency(eta));
    }
    Ok(())
}

/// Adiabatically compress from `start` to `p_final` with isentropic
/// efficiency `eta`; actual work = isentropic work / eta.
pub fn compress(
    tables: &WaterTables,
    start: &ThermoState,
    p_final: f64,
    eta: f64,
) -> Result<ProcessResult, CycleError> {
    check_efficiency(eta)?;
    if p_final < start.pressure {
        return Err(CycleError::CompressionBelowStart {
            start_pa: start.pressure,
            target_pa: p_final,
        });
    }
    let wrap = |e: PropertyError| CycleError::property(CycleProcess::Pump, e);
    let ideal_end = tables.state_from_sp(start.entropy, p_final).map_err(wrap)?;
    let isentropic_work = ideal_end.enthalpy - start.enthalpy;
    let actual_work = isentropic_work / eta;
    let end_state = tables
        .state_from_hp(start.enthalpy + actual_work, p_final)
        .map_err(wrap)?;
    Ok(ProcessResult {
        end_state,
        energy: actual_work,
        isentropic_work: Some(isentropic_work),
    })
}

/// Adiabatically expand from `start` to `p_final` with isentropic
/// efficiency `eta`; actual work = isentropic work * eta.
pub fn expand(
    tables: &WaterTables,
    start: &ThermoState,
    p_final: f64,
    eta: f64,
) -> Result<ProcessResult, CycleError> {
    check_efficiency(eta)?;
    if p_final > start.pressure {
        return Err(CycleError::ExpansionAboveStart {
            start_pa: start.pressure,
            target_pa: p_final,
        });
    }
    let wrap = |e: PropertyError| CycleError::property(CycleProcess::Turbine, e);
    let ideal_end = tables.state_from_sp(start.entropy, p_final).map_err(wrap)?;
    let isentropic_work = start.enthalpy - ideal_end.enthalpy;
    let actual_work = isentropic_work * eta;
    let end_state = tables
        .state_from_hp(start.enthalpy - actual_work, p_final)
        .map_err(wrap)?;
    Ok(ProcessResult {
        end_state,
        energy: actual_work,
        isentropic_work: Some(isentropic_work),
    })
}

/// Add heat at constant pressure until `t_target` is reached.
pub fn heat_add_isobaric(
    tables: &WaterTables,
    start: &ThermoState,
    t_target: f64,
) -> Result<ProcessResult, CycleError> {
    if t_target < start.temperature {
        return Err(CycleError::CoolingRequested {
            start_k: start.temperature,
            target_k: t_target,
        });
    }
    let end_state = tables
        .state_from_tp(t_target, start.pressure)
        .map_err(|e| CycleError::property(CycleProcess::Boiler, e))?;
    Ok(ProcessResult {
        end_state,
        energy: end_state.enthalpy - start.enthalpy,
        isentropic_work: None,
    })
}

/// Run the four processes of the superheated cycle and account for the
/// energy flows per kilogram of water.
pub fn solve_cycle(tables: &WaterTables, config: &CycleConfig) -> Result<CycleResult, CycleError> {
    config.validate(tables)?;

    // State 1: saturated liquid leaving the condenser.
    let state1 = tables
        .state_from_pq(config.p_min, 0.0)
        .map_err(|e| CycleError::property(CycleProcess::CondenserExit, e))?;

    let pump = compress(tables, &state1, config.p_max, config.eta_pump)?;
    let state2 = pump.end_state;

    let boiler = heat_add_isobaric(tables, &state2, config.t_max)?;
    let state3 = boiler.end_state;

    let turbine = expand(tables, &state3, config.p_min, config.eta_turbine)?;
    let state4 = turbine.end_state;

    let net_work = turbine.energy - pump.energy;
    Ok(CycleResult {
        config: *config,
        states: [state1, state2, state3, state4],
        pump_work: pump.energy,
        turbine_work: turbine.energy,
        net_work,
        heat_added: boiler.energy,
        heat_rejected: state4.enthalpy - state1.enthalpy,
        eta_cycle: net_work / boiler.energy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::water::PhaseRegion;

    /// Benchmark inputs used throughout: ideal pump and turbine, 50 bar
    /// boiler, 0.125 bar condenser, 600 C turbine inlet.
    pub(crate) fn benchmark_config() -> CycleConfig {
        CycleConfig {
            eta_pump: 1.0,
            eta_turbine: 1.0,
            p_max: 5.0e6,
            p_min: 12_500.0,
            t_max: 873.15,
        }
    }

    #[test]
    fn compress_matches_benchmark_pump() {
        let w = WaterTables::new();
        let start = w.state_from_pq(12_500.0, 0.0).unwrap();
        let r = compress(&w, &start, 5.0e6, 1.0).unwrap();
        assert!((r.energy / 1e3 - 5.04).abs() < 1.0, "pump work {}", r.energy);
        assert!((r.end_state.temperature - 273.15 - 50.47).abs() < 0.10);
        assert_eq!(r.isentropic_work, Some(r.energy));
    }

    #[test]
    fn compress_halved_efficiency_doubles_work() {
        let w = WaterTables::new();
        let start = w.state_from_pq(12_500.0, 0.0).unwrap();
        let ideal = compress(&w, &start, 5.0e6, 1.0).unwrap();
        let lossy = compress(&w, &start, 5.0e6, 0.5).unwrap();
        assert!((lossy.energy - 2.0 * ideal.energy).abs() <= 1e-12 * lossy.energy);
        // end-state enthalpy reflects the extra work
        let expected_h = start.enthalpy + lossy.energy;
        assert!((lossy.end_state.enthalpy - expected_h).abs() <= 1e-9 * expected_h.abs());
        assert!(lossy.end_state.entropy > start.entropy);
    }

    #[test]
    fn compress_to_same_pressure_is_a_no_op() {
        let w = WaterTables::new();
        let start = w.state_from_pq(12_500.0, 0.0).unwrap();
        let r = compress(&w, &start, 12_500.0, 0.7).unwrap();
        assert_eq!(r.energy, 0.0);
        assert_eq!(r.end_state.enthalpy, start.enthalpy);
        assert_eq!(r.end_state.temperature, start.temperature);
    }

    #[test]
    fn compress_rejects_bad_inputs() {
        let w = WaterTables::new();
        let start = w.state_from_pq(12_500.0, 0.0).unwrap();
        assert!(matches!(
            compress(&w, &start, 5e6, 0.0),
            Err(CycleError::InvalidEfficiency(_))
        ));
        assert!(matches!(
            compress(&w, &start, 5e6, 1.2),
            Err(CycleError::InvalidEfficiency(_))
        ));
        assert!(matches!(
            compress(&w, &start, 1_000.0, 1.0),
            Err(CycleError::CompressionBelowStart { .. })
        ));
    }

    #[test]
    fn expand_matches_benchmark_turbine() {
        let w = WaterTables::new();
        let start = w.state_from_tp(873.15, 5.0e6).unwrap();
        let r = expand(&w, &start, 12_500.0, 1.0).unwrap();
        assert!(
            (r.energy / 1e3 - 1336.99).abs() < 1.0,
            "turbine work {}",
            r.energy
        );
        let q = r.end_state.quality.expect("wet exhaust");
        assert!((q - 0.889556).abs() < 1e-3, "exit quality {q}");
    }

    #[test]
    fn expand_lossy_leaves_drier_exhaust() {
        let w = WaterTables::new();
        let start = w.state_from_tp(873.15, 5.0e6).unwrap();
        let ideal = expand(&w, &start, 12_500.0, 1.0).unwrap();
        let lossy = expand(&w, &start, 12_500.0, 0.95).unwrap();
        assert!((lossy.energy - 0.95 * ideal.energy).abs() <= 1e-12 * ideal.energy);
        assert!(lossy.end_state.quality.unwrap() > ideal.end_state.quality.unwrap());
        assert!(lossy.end_state.entropy > start.entropy);
    }

    #[test]
    fn expand_very_lossy_leaves_superheated_exhaust() {
        // Enough lost work re-heats the exhaust clear out of the dome.
        let w = WaterTables::new();
        let start = w.state_from_tp(873.15, 5.0e6).unwrap();
        let ideal = expand(&w, &start, 12_500.0, 1.0).unwrap();
        let lossy = expand(&w, &start, 12_500.0, 0.8).unwrap();
        assert!((lossy.energy - 0.8 * ideal.energy).abs() <= 1e-12 * ideal.energy);
        assert_eq!(lossy.end_state.quality, None);
        assert_eq!(lossy.end_state.region, PhaseRegion::SuperheatedVapor);
        assert!(lossy.end_state.entropy > start.entropy);
    }

    #[test]
    fn expand_rejects_pressure_rise() {
        let w = WaterTables::new();
        let start = w.state_from_tp(873.15, 5.0e6).unwrap();
        assert!(matches!(
            expand(&w, &start, 6e6, 1.0),
            Err(CycleError::ExpansionAboveStart { .. })
        ));
    }

    #[test]
    fn heat_add_matches_benchmark_boiler() {
        let w = WaterTables::new();
        let state1 = w.state_from_pq(12_500.0, 0.0).unwrap();
        let state2 = compress(&w, &state1, 5.0e6, 1.0).unwrap().end_state;
        let r = heat_add_isobaric(&w, &state2, 873.15).unwrap();
        assert!((r.energy / 1e3 - 3450.93).abs() < 1.0, "heat {}", r.energy);
        assert!(r.isentropic_work.is_none());
    }

    #[test]
    fn heat_add_no_temperature_change_is_zero_heat() {
        let w = WaterTables::new();
        let start = w.state_from_tp(400.0, 1e6).unwrap();
        let r = heat_add_isobaric(&w, &start, 400.0).unwrap();
        assert_eq!(r.energy, 0.0);
        assert_eq!(r.end_state, start);
    }

    #[test]
    fn heat_add_across_the_dome_pays_the_latent_heat() {
        let w = WaterTables::new();
        let start = w.state_from_pq(5.0e6, 0.0).unwrap();
        let t_sat = w.saturation_temperature(5.0e6).unwrap();
        let r = heat_add_isobaric(&w, &start, t_sat + 0.01).unwrap();
        // h_fg at 50 bar is 1639.7 kJ/kg in published saturation tables
        assert!((r.energy / 1e3 - 1639.7).abs() < 2.0, "heat {}", r.energy);
    }

    #[test]
    fn heat_add_refuses_cooling() {
        let w = WaterTables::new();
        let start = w.state_from_tp(500.0, 1e6).unwrap();
        assert!(matches!(
            heat_add_isobaric(&w, &start, 450.0),
            Err(CycleError::CoolingRequested { .. })
        ));
    }

    #[test]
    fn solve_cycle_reproduces_benchmark_efficiency() {
        let w = WaterTables::new();
        let r = solve_cycle(&w, &benchmark_config()).unwrap();
        assert!((100.0 * r.eta_cycle - 38.60).abs() < 0.05, "{}", r.eta_cycle);
        assert_eq!(r.net_work, r.turbine_work - r.pump_work);
        let closure = (r.heat_added - r.net_work - r.heat_rejected).abs();
        assert!(closure <= 1e-6 * r.heat_added);
        assert_eq!(r.states[0].quality, Some(0.0));
        assert_eq!(r.states[2].region, PhaseRegion::SuperheatedVapor);
    }

    #[test]
    fn solve_cycle_with_lossy_turbine() {
        let w = WaterTables::new();
        let config = CycleConfig {
            eta_turbine: 0.85,
            ..benchmark_config()
        };
        let r = solve_cycle(&w, &config).unwrap();
        assert!((100.0 * r.eta_cycle - 32.79).abs() < 0.05, "{}", r.eta_cycle);
    }

    #[test]
    fn solve_cycle_supercritical_boiler() {
        let w = WaterTables::new();
        let config = CycleConfig {
            p_max: 30.0e6,
            ..benchmark_config()
        };
        let r = solve_cycle(&w, &config).unwrap();
        assert_eq!(r.states[2].region, PhaseRegion::SupercriticalFluid);
        let subcritical = solve_cycle(&w, &benchmark_config()).unwrap();
        assert!(r.eta_cycle > subcritical.eta_cycle);
    }

    #[test]
    fn config_validation_names_the_violation() {
        let w = WaterTables::new();
        let base = benchmark_config();

        let swapped = CycleConfig {
            p_max: 12_500.0,
            p_min: 5.0e6,
            ..base
        };
        match swapped.validate(&w) {
            Err(CycleError::ConfigInvalid(msg)) => assert!(msg.contains("p_min"), "{msg}"),
            other => panic!("expected ConfigInvalid, got {other:?}"),
        }

        let zero_eta = CycleConfig {
            eta_turbine: 0.0,
            ..base
        };
        match zero_eta.validate(&w) {
            Err(CycleError::ConfigInvalid(msg)) => assert!(msg.contains("eta_turbine"), "{msg}"),
            other => panic!("expected ConfigInvalid, got {other:?}"),
        }

        let not_superheated = CycleConfig {
            t_max: 500.0,
            ..base
        };
        assert!(matches!(
            not_superheated.validate(&w),
            Err(CycleError::ConfigInvalid(_))
        ));

        let supercritical_condenser = CycleConfig {
            p_min: 23e6,
            p_max: 30e6,
            ..base
        };
        assert!(matches!(
            supercritical_condenser.validate(&w),
            Err(CycleError::ConfigInvalid(_))
        ));

        assert!(base.validate(&w).is_ok());
    }
}
