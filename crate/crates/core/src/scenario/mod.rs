//! Built-in scenarios: configuration, construction of the hypersurface and
//! planes, the full pipeline, and report output.

pub mod build;
pub mod config;
pub mod emit;
pub mod run;

pub use build::{build_scenario, dan_default_gh, lowdeg_polynomial, x_kd_polynomial, BuiltScenario};
pub use config::{default_nu_samples, parse_nu_list, CustomInput, Family, OrderChoice, ScenarioConfig};
pub use emit::{emit_report, render_report, ReportFormat};
pub use run::{
    box_monomials, run_scenario, run_scenario_timed, x_kd_box_vars, Check, HilbertRow, IdealSummary, OracleCheck, OracleStatus,
    ReportDocument, StageTimings, SCHEMA_VERSION,
};
