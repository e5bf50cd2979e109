//! Thermodynamic properties of pure water/steam.
//!
//! The engine is a multi-region industrial formulation: separate forward
//! equations for compressed liquid, vapor and the near-critical region,
//! plus a closed-form saturation curve. All coefficients are embedded as
//! immutable data. States can be fixed from (T, p), (p, Q), (h, p) and
//! (s, p); the last two invert the forward equations with a bracketed
//! Newton/bisection hybrid, except inside the two-phase dome where the
//! quality follows algebraically from the lever rule.
//!
//! Units are strict SI throughout: Pa, K, J/kg, J/(kg.K).

mod region1;
mod region2;
mod region3;
mod region4;

pub use crate::error::PropertyError;

/// Specific gas constant of water [J/(kg.K)].
pub(crate) const GAS_CONSTANT: f64 = 461.526;

/// Critical temperature [K].
pub const T_CRITICAL: f64 = 647.096;
/// Critical pressure [Pa].
pub const P_CRITICAL: f64 = 22.064e6;
/// Critical density [kg/m3].
pub(crate) const RHO_CRITICAL: f64 = 322.0;
/// Triple-point temperature [K]; lower temperature bound of the engine.
pub const T_TRIPLE: f64 = 273.16;
/// Upper temperature bound [K].
pub const T_MAX_VALID: f64 = 1073.15;
/// Upper pressure bound [Pa].
pub const P_MAX_VALID: f64 = 100e6;

/// Highest temperature on the saturation curve handled by the liquid and
/// vapor forward equations; above it the near-critical equation takes over.
const T_SAT_SPLIT: f64 = 623.15;
/// Highest temperature on the region-2/3 boundary line.
const T_B23_MAX: f64 = 863.15;
/// (T, p) pairs closer to the saturation curve than this are rejected as
/// ambiguous; two-phase states must be fixed through a (p, Q) query.
const SATURATION_RESOLUTION_K: f64 = 1e-6;
/// Quality this close to 0 or 1 after an (h, p) or (s, p) inversion is
/// reported as the adjacent single-phase state.
const DOME_EDGE_QUALITY: f64 = 1e-9;

/// Phase/region classification of a fixed state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseRegion {
    CompressedLiquid,
    TwoPhase,
    SuperheatedVapor,
    SupercriticalFluid,
}

impl std::fmt::Display for PhaseRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PhaseRegion::CompressedLiquid => "compressed liquid",
            PhaseRegion::TwoPhase => "two-phase",
            PhaseRegion::SuperheatedVapor => "superheated vapor",
            PhaseRegion::SupercriticalFluid => "supercritical fluid",
        })
    }
}

/// One fixed thermodynamic state of water.
///
/// Enthalpy and entropy are on the engine's internal absolute scale;
/// subtract [`ReferenceOffsets`] to present triple-point-relative values.
/// `quality` carries a value if and only if the state is two-phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoState {
    /// Temperature [K].
    pub temperature: f64,
    /// Absolute pressure [Pa].
    pub pressure: f64,
    /// Specific enthalpy [J/kg].
    pub enthalpy: f64,
    /// Specific entropy [J/(kg.K)].
    pub entropy: f64,
    /// Vapor mass fraction, only for two-phase states.
    pub quality: Option<f64>,
    pub region: PhaseRegion,
}

/// Absolute enthalpy/entropy of saturated liquid at the triple point.
///
/// Subtracting these from a state's absolute values yields the relative
/// scale on which saturated liquid at the triple point is exactly zero.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceOffsets {
    /// Absolute specific enthalpy of the reference state [J/kg].
    pub h_ref: f64,
    /// Absolute specific entropy of the reference state [J/(kg.K)].
    pub s_ref: f64,
}

impl ReferenceOffsets {
    pub fn new(tables: &WaterTables) -> Result<Self, PropertyError> {
        let state = tables.state_from_pq(tables.p_triple, 0.0)?;
        Ok(Self {
            h_ref: state.enthalpy,
            s_ref: state.entropy,
        })
    }

    pub fn relative_enthalpy(&self, state: &ThermoState) -> f64 {
        state.enthalpy - self.h_ref
    }

    pub fn relative_entropy(&self, state: &ThermoState) -> f64 {
        state.entropy - self.s_ref
    }
}

/// Saturated liquid/vapor properties at one pressure.
#[derive(Debug, Clone, Copy)]
pub struct SaturationLine {
    /// Saturation temperature [K].
    pub temperature: f64,
    pub h_liquid: f64,
    pub h_vapor: f64,
    pub s_liquid: f64,
    pub s_vapor: f64,
}

/// The immutable property-evaluation context: validity bounds, critical
/// constants and the curve endpoints derived from the embedded
/// coefficient blocks.
#[derive(Debug, Clone)]
pub struct WaterTables {
    /// Triple-point pressure [Pa], evaluated from the saturation equation
    /// so that the curve endpoints are self-consistent.
    pub p_triple: f64,
    /// Saturation pressure at the liquid/vapor equation split [Pa].
    sat_split_pressure: f64,
}

impl Default for WaterTables {
    fn default() -> Self {
        Self::new()
    }
}

/// Which side of the saturation curve an evaluation belongs to when the
/// caller already knows (inversion brackets touch the curve itself).
#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Auto,
    Liquid,
    Vapor,
}

#[derive(Clone, Copy)]
enum TargetProp {
    Enthalpy,
    Entropy,
}

impl TargetProp {
    fn name(self) -> &'static str {
        match self {
            TargetProp::Enthalpy => "enthalpy",
            TargetProp::Entropy => "entropy",
        }
    }

    /// Scale floor for the relative convergence test.
    fn floor(self) -> f64 {
        1e3
    }
}

impl WaterTables {
    pub fn new() -> Self {
        Self {
            p_triple: region4::saturation_pressure(T_TRIPLE),
            sat_split_pressure: region4::saturation_pressure(T_SAT_SPLIT),
        }
    }

    /// Saturation temperature [K] at pressure p [Pa].
    pub fn saturation_temperature(&self, p: f64) -> Result<f64, PropertyError> {
        if !p.is_finite() || p < self.p_triple || p > P_CRITICAL {
            return Err(PropertyError::OutOfRange {
                quantity: "saturation pressure",
                value: p,
                min: self.p_triple,
                max: P_CRITICAL,
            });
        }
        Ok(region4::saturation_temperature(p))
    }

    /// Saturation pressure [Pa] at temperature t [K].
    pub fn saturation_pressure(&self, t: f64) -> Result<f64, PropertyError> {
        if !t.is_finite() || t < T_TRIPLE || t > T_CRITICAL {
            return Err(PropertyError::OutOfRange {
                quantity: "saturation temperature",
                value: t,
                min: T_TRIPLE,
                max: T_CRITICAL,
            });
        }
        Ok(region4::saturation_pressure(t))
    }

    /// Fix a single-phase state from temperature and pressure.
    pub fn state_from_tp(&self, t: f64, p: f64) -> Result<ThermoState, PropertyError> {
        self.check_bounds(t, p)?;
        if p <= P_CRITICAL {
            let t_sat = region4::saturation_temperature(p);
            if (t - t_sat).abs() < SATURATION_RESOLUTION_K {
                return Err(PropertyError::SaturationAmbiguous {
                    temperature: t,
                    pressure: p,
                });
            }
        }
        let (h, s, _) = self.eval_tp(t, p, Side::Auto)?;
        Ok(ThermoState {
            temperature: t,
            pressure: p,
            enthalpy: h,
            entropy: s,
            quality: None,
            region: self.classify_single_phase(t, p),
        })
    }

    /// Fix a two-phase state from pressure and quality.
    pub fn state_from_pq(&self, p: f64, q: f64) -> Result<ThermoState, PropertyError> {
        if !q.is_finite() || !(0.0..=1.0).contains(&q) {
            return Err(PropertyError::QualityOutOfBounds(q));
        }
        let line = self.saturation_line(p)?;
        Ok(ThermoState {
            temperature: line.temperature,
            pressure: p,
            enthalpy: line.h_liquid + q * (line.h_vapor - line.h_liquid),
            entropy: line.s_liquid + q * (line.s_vapor - line.s_liquid),
            quality: Some(q),
            region: PhaseRegion::TwoPhase,
        })
    }

    /// Fix a state from specific enthalpy and pressure.
    pub fn state_from_hp(&self, h: f64, p: f64) -> Result<ThermoState, PropertyError> {
        self.check_pressure(p)?;
        if !h.is_finite() {
            return Err(PropertyError::OutOfRange {
                quantity: "enthalpy",
                value: h,
                min: f64::NEG_INFINITY,
                max: f64::INFINITY,
            });
        }
        let dome = if p <= P_CRITICAL {
            let line = self.saturation_line(p)?;
            if h >= line.h_liquid && h <= line.h_vapor {
                let q = (h - line.h_liquid) / (line.h_vapor - line.h_liquid);
                let s = line.s_liquid + q * (line.s_vapor - line.s_liquid);
                return Ok(self.dome_state(p, line.temperature, h, s, q));
            }
            Some(line)
        } else {
            None
        };
        let (t_lo, t_hi, side) = match dome {
            Some(line) if h < line.h_liquid => (T_TRIPLE, line.temperature, Side::Liquid),
            Some(line) => (line.temperature, T_MAX_VALID, Side::Vapor),
            None => (T_TRIPLE, T_MAX_VALID, Side::Auto),
        };
        let t = self.invert_temperature(p, h, TargetProp::Enthalpy, t_lo, t_hi, side)?;
        let (h_out, s_out, _) = self.eval_tp(t, p, side)?;
        Ok(ThermoState {
            temperature: t,
            pressure: p,
            enthalpy: h_out,
            entropy: s_out,
            quality: None,
            region: self.classify_inverted(t, p, side),
        })
    }

    /// Fix a state from specific entropy and pressure.
    pub fn state_from_sp(&self, s: f64, p: f64) -> Result<ThermoState, PropertyError> {
        self.check_pressure(p)?;
        if !s.is_finite() {
            return Err(PropertyError::OutOfRange {
                quantity: "entropy",
                value: s,
                min: f64::NEG_INFINITY,
                max: f64::INFINITY,
            });
        }
        let dome = if p <= P_CRITICAL {
            let line = self.saturation_line(p)?;
            if s >= line.s_liquid && s <= line.s_vapor {
                let q = (s - line.s_liquid) / (line.s_vapor - line.s_liquid);
                let h = line.h_liquid + q * (line.h_vapor - line.h_liquid);
                return Ok(self.dome_state(p, line.temperature, h, s, q));
            }
            Some(line)
        } else {
            None
        };
        let (t_lo, t_hi, side) = match dome {
            Some(line) if s < line.s_liquid => (T_TRIPLE, line.temperature, Side::Liquid),
            Some(line) => (line.temperature, T_MAX_VALID, Side::Vapor),
            None => (T_TRIPLE, T_MAX_VALID, Side::Auto),
        };
        let t = self.invert_temperature(p, s, TargetProp::Entropy, t_lo, t_hi, side)?;
        let (h_out, s_out, _) = self.eval_tp(t, p, side)?;
        Ok(ThermoState {
            temperature: t,
            pressure: p,
            enthalpy: h_out,
            entropy: s_out,
            quality: None,
            region: self.classify_inverted(t, p, side),
        })
    }

    /// Saturated liquid and vapor properties at pressure p [Pa].
    pub fn saturation_line(&self, p: f64) -> Result<SaturationLine, PropertyError> {
        let t = self.saturation_temperature(p)?;
        let (h_liquid, s_liquid, h_vapor, s_vapor);
        if p <= self.sat_split_pressure {
            let (hf, sf, _) = region1::h_s_cp(t, p);
            let (hg, sg, _) = region2::h_s_cp(t, p);
            h_liquid = hf;
            s_liquid = sf;
            h_vapor = hg;
            s_vapor = sg;
        } else {
            let rho_f = region3::density(p, t, region3::Branch::Liquid)?;
            let rho_g = region3::density(p, t, region3::Branch::Vapor)?;
            let (hf, sf, _) = region3::h_s_cp(rho_f, t);
            let (hg, sg, _) = region3::h_s_cp(rho_g, t);
            h_liquid = hf;
            s_liquid = sf;
            h_vapor = hg;
            s_vapor = sg;
        }
        Ok(SaturationLine {
            temperature: t,
            h_liquid,
            h_vapor,
            s_liquid,
            s_vapor,
        })
    }

    // ---- internals ----

    fn check_pressure(&self, p: f64) -> Result<(), PropertyError> {
        if !p.is_finite() || p < self.p_triple || p > P_MAX_VALID {
            return Err(PropertyError::OutOfRange {
                quantity: "pressure",
                value: p,
                min: self.p_triple,
                max: P_MAX_VALID,
            });
        }
        Ok(())
    }

    fn check_bounds(&self, t: f64, p: f64) -> Result<(), PropertyError> {
        self.check_pressure(p)?;
        if !t.is_finite() || t < T_TRIPLE || t > T_MAX_VALID {
            return Err(PropertyError::OutOfRange {
                quantity: "temperature",
                value: t,
                min: T_TRIPLE,
                max: T_MAX_VALID,
            });
        }
        Ok(())
    }

    /// Forward (h, s, cp) at a single-phase (t, p).
    fn eval_tp(&self, t: f64, p: f64, side: Side) -> Result<(f64, f64, f64), PropertyError> {
        if t <= T_SAT_SPLIT {
            let liquid = match side {
                Side::Liquid => true,
                Side::Vapor => false,
                Side::Auto => p >= region4::saturation_pressure(t),
            };
            return Ok(if liquid {
                region1::h_s_cp(t, p)
            } else {
                region2::h_s_cp(t, p)
            });
        }
        let boundary = if t <= T_B23_MAX {
            region4::boundary23_pressure(t)
        } else {
            f64::INFINITY
        };
        if p <= boundary {
            return Ok(region2::h_s_cp(t, p));
        }
        let branch = if t >= T_CRITICAL {
            region3::Branch::Single
        } else {
            match side {
                Side::Liquid => region3::Branch::Liquid,
                Side::Vapor => region3::Branch::Vapor,
                Side::Auto => {
                    if p >= region4::saturation_pressure(t) {
                        region3::Branch::Liquid
                    } else {
                        region3::Branch::Vapor
                    }
                }
            }
        };
        let rho = region3::density(p, t, branch)?;
        Ok(region3::h_s_cp(rho, t))
    }

    fn classify_single_phase(&self, t: f64, p: f64) -> PhaseRegion {
        if p > P_CRITICAL {
            if t > T_CRITICAL {
                PhaseRegion::SupercriticalFluid
            } else {
                PhaseRegion::CompressedLiquid
            }
        } else if t < region4::saturation_temperature(p) {
            PhaseRegion::CompressedLiquid
        } else {
            PhaseRegion::SuperheatedVapor
        }
    }

    /// Region tag after an inversion, where the solution may sit exactly
    /// on the saturation temperature.
    fn classify_inverted(&self, t: f64, p: f64, side: Side) -> PhaseRegion {
        match side {
            Side::Liquid => PhaseRegion::CompressedLiquid,
            Side::Vapor => PhaseRegion::SuperheatedVapor,
            Side::Auto => self.classify_single_phase(t, p),
        }
    }

    /// Build the result of an inversion that landed inside the dome,
    /// collapsing near-boundary qualities onto the single-phase tags.
    fn dome_state(&self, p: f64, t: f64, h: f64, s: f64, q: f64) -> ThermoState {
        let (quality, region) = if q <= DOME_EDGE_QUALITY {
            (None, PhaseRegion::CompressedLiquid)
        } else if q >= 1.0 - DOME_EDGE_QUALITY {
            (None, PhaseRegion::SuperheatedVapor)
        } else {
            (Some(q), PhaseRegion::TwoPhase)
        };
        ThermoState {
            temperature: t,
            pressure: p,
            enthalpy: h,
            entropy: s,
            quality,
            region,
        }
    }

    /// Bracketed Newton/bisection solve of prop(T, p) = target on a
    /// monotone single-phase branch [t_lo, t_hi].
    fn invert_temperature(
        &self,
        p: f64,
        target: f64,
        prop: TargetProp,
        mut t_lo: f64,
        mut t_hi: f64,
        side: Side,
    ) -> Result<f64, PropertyError> {
        let eval = |t: f64| -> Result<(f64, f64), PropertyError> {
            let (h, s, cp) = self.eval_tp(t, p, side)?;
            Ok(match prop {
                TargetProp::Enthalpy => (h, cp),
                TargetProp::Entropy => (s, cp / t),
            })
        };
        let tol = 1e-9 * target.abs().max(prop.floor());

        let (v_lo, _) = eval(t_lo)?;
        let (v_hi, _) = eval(t_hi)?;
        if target < v_lo - tol || target > v_hi + tol {
            return Err(PropertyError::OutOfRange {
                quantity: prop.name(),
                value: target,
                min: v_lo,
                max: v_hi,
            });
        }
        if (target - v_lo).abs() <= tol {
            return Ok(t_lo);
        }
        if (target - v_hi).abs() <= tol {
            return Ok(t_hi);
        }

        let mut t = 0.5 * (t_lo + t_hi);
        for _ in 0..100 {
            let (value, slope) = eval(t)?;
            let residual = value - target;
            // The residual test alone can leave a few microkelvin where
            // the slope is shallow; also require the implied temperature
            // step to be resolved.
            if residual.abs() <= tol && (residual / slope).abs() <= 1e-7 {
                return Ok(t);
            }
            if residual > 0.0 {
                t_hi = t;
            } else {
                t_lo = t;
            }
            let newton = t - residual / slope;
            t = if slope > 0.0 && newton > t_lo && newton < t_hi {
                newton
            } else {
                0.5 * (t_lo + t_hi)
            };
        }
        Err(PropertyError::NoConvergence {
            context: "temperature inversion",
        })
    }
}
