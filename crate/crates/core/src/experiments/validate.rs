//! Cross-checks of the analytic engine against dense diagonalization.

use serde::Serialize;

use super::sweeps::{analytic_thermal_point, dense_thermal_point};
use super::jump::dense_critical_field;
use crate::concurrence::{pure_concurrence, TimeReversalOp};
use crate::error::Result;
use crate::freefermion::{
    ground_energy, hcrit, log_partition, xx_levels_open, xx_levels_periodic, xy_levels_periodic,
};
use crate::spin::{self, measurement_protocol, Boundary, ChainSpec};
use crate::tol::DENSE_CAP;

/// Above this size the dense mixed-state check (a `2·4ⁿ` real lift) is skipped.
const THERMAL_CHECK_CAP: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub n: usize,
    pub passed: bool,
    pub error: f64,
    pub tolerance: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
    pub skipped: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, n: usize, error: f64, tolerance: f64) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            n,
            passed: error <= tolerance,
            error,
            tolerance,
        });
    }
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Runs every check for each size in `sizes` at coupling `j`.
pub fn validate(sizes: &[usize], j: f64) -> Result<ValidationReport> {
    let mut report = ValidationReport::default();
    for &n in sizes {
        if !(2..=DENSE_CAP).contains(&n) || n % 2 == 1 {
            report.skipped.push(format!("n={n}: needs an even size in 2..={DENSE_CAP}"));
            continue;
        }
        let scale = j.abs() * n as f64;
        let hc = hcrit(n, j, Boundary::Periodic);

        for h in [0.0, 0.3 * j.abs(), hc, 2.0 * j.abs()] {
            let dense = spin::diagonalize(&ChainSpec::xx(n, j, h, Boundary::Periodic))?.values;
            let analytic = sorted(xx_levels_periodic(n, j, h)?.energies());
            report.push("spectrum_periodic_xx", n, max_diff(&dense, &analytic), 1e-9 * scale);

            let dense = spin::diagonalize(&ChainSpec::xx(n, j, h, Boundary::Open))?.values;
            let analytic = sorted(xx_levels_open(n, j, h)?.energies());
            report.push("spectrum_open_xx", n, max_diff(&dense, &analytic), 1e-9 * scale);
        }
        let spec = ChainSpec::xy(n, j, 0.5, 0.4 * j.abs(), Boundary::Periodic);
        let dense = spin::diagonalize(&spec)?.values;
        let analytic = sorted(xy_levels_periodic(n, spec.jx, spec.jy, spec.h)?.energies());
        report.push("spectrum_periodic_xy", n, max_diff(&dense, &analytic), 1e-9 * scale);

        for b in [Boundary::Periodic, Boundary::Open] {
            let e0 = spin::ground(&ChainSpec::xx(n, j, 0.0, b))?.energy;
            report.push(&format!("ground_energy_{b}"), n, (e0 - ground_energy(n, j, b)).abs(), 1e-9 * scale);
            let hd = dense_critical_field(n, j, b, 1e-7)?;
            report.push(&format!("critical_field_{b}"), n, (hd - hcrit(n, j, b)).abs(), 1e-6 * j.abs());
        }

        for (h, beta) in [(0.0, 1.0), (0.2 * j.abs(), 2.0 / j.abs())] {
            for b in [Boundary::Periodic, Boundary::Open] {
                let values = spin::diagonalize(&ChainSpec::xx(n, j, h, b))?.values;
                let dense = spin::log_partition(&values, beta);
                let analytic = log_partition(n, j, h, beta, b)?;
                report.push(&format!("log_partition_{b}"), n, (dense - analytic).abs(), 1e-10 * dense.abs().max(1.0));
            }
        }

        {
            let g = spin::ground(&ChainSpec::xx(n, j, 0.1 * hc, Boundary::Periodic))?;
            if g.degenerate {
                report.skipped.push(format!("n={n}: degenerate ground state, protocol check skipped"));
            } else {
                let psi = g.state.canonical_phase();
                let c = pure_concurrence(&psi, &TimeReversalOp::spin_flip(n));
                let m = measurement_protocol(&psi)?.abs();
                report.push("measurement_protocol", n, (c - m).abs(), 1e-12);
            }
        }

        if n <= THERMAL_CHECK_CAP {
            for t in [0.05, 0.5] {
                let h = 0.5 * hc;
                let d = dense_thermal_point(&ChainSpec::xx(n, j, h, Boundary::Periodic), t)?;
                let a = analytic_thermal_point(n, j, h, t, Boundary::Periodic)?;
                report.push("thermal_concurrence", n, (d.concurrence - a.concurrence).abs(), 1e-8);
            }
        } else {
            report.skipped.push(format!("n={n}: thermal concurrence check needs n <= {THERMAL_CHECK_CAP}"));
        }
    }
    Ok(report)
}
