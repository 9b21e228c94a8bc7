//! Locating the zero-temperature concurrence jump.

use super::record::SweepRecord;
use super::sweeps::dense_ground_point;
use crate::error::{Error, Result};
use crate::spin::ops::{collective_sz, expectation};
use crate::spin::{self, Boundary, ChainSpec};

/// Midpoint of the first adjacent pair (in field order) where the concurrence
/// drops by more than one half.
pub fn detect_jump(records: &[SweepRecord]) -> Result<f64> {
    let pairs: Vec<(f64, f64)> = records.iter().map(|r| (r.h, r.concurrence)).collect();
    detect_jump_in(&pairs)
}

pub fn detect_jump_in(points: &[(f64, f64)]) -> Result<f64> {
    points
        .windows(2)
        .find(|w| w[0].1 - w[1].1 > 0.5)
        .map(|w| 0.5 * (w[0].0 + w[1].0))
        .ok_or(Error::NoJumpFound)
}

/// Dense ground-state sweep of the XX chain over `h ∈ [h_min, h_max]`.
pub fn dense_field_sweep(n: usize, j: f64, boundary: Boundary, h_min: f64, h_max: f64, step: f64) -> Result<Vec<SweepRecord>> {
    use rayon::prelude::*;
    super::sweeps::linspace_step(h_min, h_max, step)
        .par_iter()
        .map(|&h| dense_ground_point(&ChainSpec::xx(n, j, h, boundary)))
        .collect()
}

fn ground_in_zero_sector(n: usize, j: f64, h: f64, boundary: Boundary, sz: &crate::linalg::ComplexMatrix) -> Result<bool> {
    let g = spin::ground(&ChainSpec::xx(n, j, h, boundary))?;
    Ok(expectation(&g.state, sz) > -1.0)
}

/// First field at which the dense ground state leaves the `s_z = 0` sector:
/// a coarse scan in steps of `0.01|J|`, then bisection down to `resolution`.
pub fn dense_critical_field(n: usize, j: f64, boundary: Boundary, resolution: f64) -> Result<f64> {
    let sz = collective_sz(n);
    let coarse = 0.01 * j.abs();
    let mut lo = 0.0;
    let mut hi = coarse;
    let limit = 4.0 * j.abs() + 1.0;
    while ground_in_zero_sector(n, j, hi, boundary, &sz)? {
        lo = hi;
        hi += coarse;
        if hi > limit {
            return Err(Error::NoJumpFound);
        }
    }
    while hi - lo > resolution {
        let mid = 0.5 * (lo + hi);
        if ground_in_zero_sector(n, j, mid, boundary, &sz)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::record::Engine;
    use crate::freefermion::hcrit;

    fn rec(h: f64, c: f64) -> SweepRecord {
        SweepRecord {
            n: 4,
            j: 1.0,
            gamma: 0.0,
            h,
            t: 0.0,
            boundary: Boundary::Periodic,
            concurrence: c,
            energy0: 0.0,
            log_z: None,
            engine: Engine::Dense,
            degenerate: false,
        }
    }

    #[test]
    fn flat_input_has_no_jump() {
        let recs: Vec<_> = (0..10).map(|i| rec(i as f64, 1.0)).collect();
        assert!(matches!(detect_jump(&recs), Err(Error::NoJumpFound)));
    }

    #[test]
    fn dense_sweep_brackets_critical_field() {
        let hc = hcrit(4, 1.0, Boundary::Periodic);
        let recs = dense_field_sweep(4, 1.0, Boundary::Periodic, 0.0, 1.5, 1e-3).unwrap();
        let hj = detect_jump(&recs).unwrap();
        assert!((hj - hc).abs() <= 1e-3);
    }

    #[test]
    fn dense_critical_field_matches_formula() {
        for b in [Boundary::Periodic, Boundary::Open] {
            let h = dense_critical_field(4, 1.0, b, 1e-7).unwrap();
            assert!((h - hcrit(4, 1.0, b)).abs() < 1e-6, "{b}");
        }
    }
}
