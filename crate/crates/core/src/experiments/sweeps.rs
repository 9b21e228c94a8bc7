//! Parameter sweeps behind the concurrence-vs-field, concurrence-vs-temperature
//! and threshold-ratio results.

use rayon::prelude::*;

use super::record::{Engine, SweepRecord};
use crate::concurrence::{mixed_concurrence, pure_concurrence, TimeReversalOp};
use crate::error::Result;
use crate::freefermion::{
    ground_energy, log_partition, xx_lowest_levels, thermal_concurrence, threshold_temperature,
    threshold_temperature_asymptotic,
};
use crate::linalg::inner;
use crate::spin::{self, Boundary, ChainSpec};
use crate::tol::LEVEL_DEGENERACY;

/// `start, start + step, …` up to and including `stop` (within half a step).
pub fn linspace_step(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let count = ((stop - start) / step + 0.5).floor() as usize;
    (0..=count).map(|i| start + step * i as f64).collect()
}

pub fn default_fig1_gammas() -> Vec<f64> {
    (0..20).map(|i| 0.05 * i as f64).collect()
}

pub fn default_fig1_fields() -> Vec<f64> {
    linspace_step(-2.0, 2.0, 0.02)
}

pub fn default_fig2_temperatures() -> Vec<f64> {
    vec![0.001, 0.01, 0.02, 0.05]
}

pub fn default_fig2_fields() -> Vec<f64> {
    linspace_step(-0.06, 0.06, 5e-4)
}

pub fn default_fig3_sizes() -> Vec<usize> {
    vec![4, 10, 100, 1000]
}

pub fn default_fig3_log_temperatures() -> Vec<f64> {
    linspace_step(-4.0, 0.0, 0.02)
}

pub fn default_table1_sizes() -> Vec<usize> {
    vec![10, 100, 1000, 10_000]
}

/// Dense ground-state concurrence `|⟨ψ_g(h)|ψ_g(−h)⟩|` with the degeneracy flag.
pub fn dense_ground_point(spec: &ChainSpec) -> Result<SweepRecord> {
    let g = spin::ground(spec)?;
    let concurrence = if g.degenerate {
        0.0
    } else {
        let mirrored = spin::ground(&spec.with_field(-spec.h))?;
        inner(g.state.amps(), mirrored.state.amps()).norm().min(1.0)
    };
    Ok(SweepRecord {
        n: spec.n,
        j: spec.j(),
        gamma: spec.gamma(),
        h: spec.h,
        t: 0.0,
        boundary: spec.boundary,
        concurrence,
        energy0: g.energy,
        log_z: None,
        engine: Engine::Dense,
        degenerate: g.degenerate,
    })
}

/// Dense ground-state concurrence from `|⟨ψ|Θψ⟩|` directly.
pub fn dense_ground_concurrence(spec: &ChainSpec) -> Result<(f64, bool)> {
    let g = spin::ground(spec)?;
    if g.degenerate {
        return Ok((0.0, true));
    }
    Ok((pure_concurrence(&g.state, &TimeReversalOp::spin_flip(spec.n)), false))
}

/// Ground record of the XX chain from its free-fermion levels.
///
/// The ground state lies in a single `S_z` sector and `Θ` maps `S_z → −S_z`,
/// so a nondegenerate ground state has concurrence 1 at `S_z = 0` and 0 elsewhere.
pub fn analytic_ground_point(n: usize, j: f64, h: f64, boundary: Boundary) -> Result<SweepRecord> {
    let levels = xx_lowest_levels(n, j, h, boundary)?;
    let mut e = levels.energies();
    e.sort_by(f64::total_cmp);
    let ground = levels.ground().expect("level set is never empty");
    let scale = e[0].abs().max(j.abs());
    let degenerate = e.len() > 1 && e[1] - e[0] < LEVEL_DEGENERACY * scale;
    let concurrence = if !degenerate && ground.sz == Some(0) { 1.0 } else { 0.0 };
    Ok(SweepRecord {
        n,
        j,
        gamma: 0.0,
        h,
        t: 0.0,
        boundary,
        concurrence,
        energy0: e[0],
        log_z: None,
        engine: Engine::Analytic,
        degenerate,
    })
}

/// Closed-form concurrence of the dense thermal state.
pub fn dense_thermal_point(spec: &ChainSpec, t: f64) -> Result<SweepRecord> {
    let eig = spin::diagonalize(spec)?;
    let beta = 1.0 / (t * spec.j().abs());
    let th = spin::engine::thermal_from(&eig, beta);
    let c = mixed_concurrence(&th.rho, &TimeReversalOp::spin_flip(spec.n))?.value;
    let g = spin::engine::ground_from(&eig);
    Ok(SweepRecord {
        n: spec.n,
        j: spec.j(),
        gamma: spec.gamma(),
        h: spec.h,
        t,
        boundary: spec.boundary,
        concurrence: c,
        energy0: g.energy,
        log_z: Some(th.log_z),
        engine: Engine::Dense,
        degenerate: g.degenerate,
    })
}

/// Analytic thermal record of the XX chain at `t = k_B T/J`.
pub fn analytic_thermal_point(n: usize, j: f64, h: f64, t: f64, boundary: Boundary) -> Result<SweepRecord> {
    let beta = 1.0 / (t * j.abs());
    Ok(SweepRecord {
        n,
        j,
        gamma: 0.0,
        h,
        t,
        boundary,
        concurrence: thermal_concurrence(n, j, h, beta, boundary)?,
        energy0: ground_energy(n, j, boundary),
        log_z: Some(log_partition(n, j, h, beta, boundary)?),
        engine: Engine::Analytic,
        degenerate: false,
    })
}

/// Ground-state `C_4`-type surface over anisotropy and field (dense engine, periodic).
pub fn fig1_surface(n: usize, j: f64, gammas: &[f64], fields: &[f64]) -> Result<Vec<SweepRecord>> {
    let points: Vec<(f64, f64)> = gammas
        .iter()
        .flat_map(|&g| fields.iter().map(move |&h| (g, h)))
        .collect();
    points
        .par_iter()
        .map(|&(g, h)| dense_ground_point(&ChainSpec::xy(n, j, g, h, Boundary::Periodic)))
        .collect()
}

/// Thermal concurrence versus field at fixed temperatures (analytic, periodic).
pub fn fig2_curves(n: usize, j: f64, temperatures: &[f64], fields: &[f64]) -> Result<Vec<SweepRecord>> {
    let points: Vec<(f64, f64)> = temperatures
        .iter()
        .flat_map(|&t| fields.iter().map(move |&h| (t, h)))
        .collect();
    points
        .par_iter()
        .map(|&(t, h)| analytic_thermal_point(n, j, h, t, Boundary::Periodic))
        .collect()
}

/// Zero-field thermal concurrence versus `log₁₀ t` for several sizes (analytic, periodic).
pub fn fig3_curves(sizes: &[usize], j: f64, log_temperatures: &[f64]) -> Result<Vec<SweepRecord>> {
    let points: Vec<(usize, f64)> = sizes
        .iter()
        .flat_map(|&n| log_temperatures.iter().map(move |&lt| (n, lt)))
        .collect();
    points
        .par_iter()
        .map(|&(n, lt)| analytic_thermal_point(n, j, 0.0, 10f64.powf(lt), Boundary::Periodic))
        .collect()
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct ThresholdRow {
    pub n: usize,
    pub boundary: Boundary,
    pub exact: f64,
    pub asymptotic: f64,
    pub ratio: f64,
}

pub fn threshold_row(n: usize, j: f64, boundary: Boundary) -> Result<ThresholdRow> {
    let exact = threshold_temperature(n, j, boundary)?;
    let asymptotic = threshold_temperature_asymptotic(n, j);
    Ok(ThresholdRow {
        n,
        boundary,
        exact,
        asymptotic,
        ratio: asymptotic / exact,
    })
}

/// Asymptotic over exact threshold temperature, periodic rows first.
pub fn table1_ratios(sizes: &[usize], j: f64) -> Result<Vec<ThresholdRow>> {
    let points: Vec<(Boundary, usize)> = [Boundary::Periodic, Boundary::Open]
        .iter()
        .flat_map(|&b| sizes.iter().map(move |&n| (b, n)))
        .collect();
    points.par_iter().map(|&(b, n)| threshold_row(n, j, b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freefermion::hcrit;

    #[test]
    fn grid_sizes() {
        assert_eq!(default_fig1_gammas().len(), 20);
        assert_eq!(default_fig1_fields().len(), 201);
        assert_eq!(default_fig2_fields().len(), 241);
        assert_eq!(default_fig3_log_temperatures().len(), 201);
        assert!((default_fig1_fields()[100]).abs() < 1e-15);
    }

    #[test]
    fn fig1_corners() {
        let hc = hcrit(4, 1.0, Boundary::Periodic);
        let recs = fig1_surface(4, 1.0, &[0.0], &[0.0, 0.5 * hc, 2.0]).unwrap();
        assert!((recs[0].concurrence - 1.0).abs() < 1e-10);
        assert!((recs[1].concurrence - 1.0).abs() < 1e-10);
        assert!(recs[2].concurrence < 1e-10);
    }

    #[test]
    fn overlap_and_direct_concurrence_agree() {
        for g in [0.0, 0.25, 0.5] {
            for h in [0.0, 0.3, 1.2] {
                let spec = ChainSpec::xy(4, 1.0, g, h, Boundary::Periodic);
                let rec = dense_ground_point(&spec).unwrap();
                let (c, _) = dense_ground_concurrence(&spec).unwrap();
                assert!((rec.concurrence - c).abs() < 1e-9, "g={g} h={h}");
            }
        }
    }

    #[test]
    fn fig2_low_temperature_step() {
        let hc = hcrit(100, 1.0, Boundary::Periodic);
        let recs = fig2_curves(100, 1.0, &[1e-3], &[0.0, 2.0 * hc, -2.0 * hc]).unwrap();
        assert!(recs[0].concurrence > 0.99);
        assert!(recs[1].concurrence < 1e-12);
        assert!((recs[1].concurrence - recs[2].concurrence).abs() < 1e-20);
    }

    #[test]
    fn fig3_matches_dense_at_four_sites() {
        let lts = [-1.0, -0.5, -0.2, 0.0];
        let recs = fig3_curves(&[4], 1.0, &lts).unwrap();
        for (r, lt) in recs.iter().zip(lts) {
            let d = dense_thermal_point(&ChainSpec::xx(4, 1.0, 0.0, Boundary::Periodic), 10f64.powf(lt)).unwrap();
            assert!((r.concurrence - d.concurrence).abs() < 1e-8);
            assert!((r.log_z.unwrap() - d.log_z.unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn analytic_ground_matches_dense() {
        for b in [Boundary::Periodic, Boundary::Open] {
            let hc = hcrit(6, 1.0, b);
            for h in [0.0, 0.5 * hc, 0.99 * hc, 1.01 * hc, 3.0] {
                let a = analytic_ground_point(6, 1.0, h, b).unwrap();
                let d = dense_ground_point(&ChainSpec::xx(6, 1.0, h, b)).unwrap();
                assert!((a.energy0 - d.energy0).abs() < 1e-9, "{b} h={h}");
                assert_eq!(a.degenerate, d.degenerate, "{b} h={h}");
                assert!((a.concurrence - d.concurrence).abs() < 1e-8, "{b} h={h}");
            }
        }
    }

    #[test]
    fn thresholds_decrease_with_size() {
        let rows = table1_ratios(&[10, 100], 1.0).unwrap();
        assert!(rows[0].exact > rows[1].exact);
        assert!(rows[2].exact > rows[3].exact);
        assert!((rows[0].ratio - 0.8159).abs() < 5e-3);
        assert!((rows[2].ratio - 0.9979).abs() < 5e-3);
    }
}
