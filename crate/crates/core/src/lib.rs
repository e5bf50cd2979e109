//! Analysis of superheated Rankine steam power cycles.
//!
//! Three layers:
//!
//! - [`water`] — a multi-region water/steam property engine covering
//!   subcritical and supercritical states, with state fixing from
//!   (T, p), (p, Q), (h, p) and (s, p);
//! - [`cycle`] — the four cycle processes (pump, boiler/superheater,
//!   turbine, implied condenser) with isentropic efficiencies, and
//!   whole-cycle energy accounting per kilogram of water;
//! - [`report`] — fixed-format text summaries and a structured JSON
//!   document.
//!
//! The library is SI-only (Pa, K, J/kg); display units live in the
//! report layer. Everything is a pure function over immutable data and
//! safe to call concurrently.

pub mod cycle;
pub mod error;
pub mod report;
pub mod water;

pub use cycle::{compress, expand, heat_add_isobaric, solve_cycle, CycleConfig, CycleResult, ProcessResult};
pub use error::{CycleError, CycleProcess, PropertyError};
pub use report::{
    format_cycle_summary, format_state, render_text_report, structured_state, to_structured,
    ReportFormat, ReportOptions, StructuredReport,
};
pub use water::{
    PhaseRegion, ReferenceOffsets, SaturationLine, ThermoState, WaterTables, P_CRITICAL,
    P_MAX_VALID, T_CRITICAL, T_MAX_VALID, T_TRIPLE,
};
