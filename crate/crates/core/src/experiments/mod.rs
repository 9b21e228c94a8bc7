//! Sweep drivers reproducing the field, temperature and size dependence of
//! the n-concurrence, plus a cross-engine validation suite.

pub mod jump;
pub mod record;
pub mod sweeps;
pub mod validate;

pub use jump::{dense_critical_field, dense_field_sweep, detect_jump, detect_jump_in};
pub use record::{Engine, SweepRecord};
pub use sweeps::{
    analytic_ground_point, analytic_thermal_point, dense_ground_concurrence, dense_ground_point, dense_thermal_point,
    fig1_surface, fig2_curves, fig3_curves, table1_ratios, threshold_row, ThresholdRow,
};
pub use validate::{validate, CheckResult, ValidationReport};
