//! Closed-form ground energies and critical fields of the XX chain.

use std::f64::consts::PI;

use super::levels::xx_lowest_levels;
use crate::error::Result;
use crate::spin::Boundary;

/// `−4|J| csc(π/n)` for an even periodic chain at zero field.
pub fn ground_energy_periodic(n: usize, j: f64) -> f64 {
    -4.0 * j.abs() / (PI / n as f64).sin()
}

/// `−4|J| Σ_{k=1}^{n/2} cos(πk/(n+1))`, summed in closed form.
pub fn ground_energy_open(n: usize, j: f64) -> f64 {
    let m = (n + 1) as f64;
    let nf = n as f64;
    -4.0 * j.abs()
        * ((nf * PI / (4.0 * m)).cos() / (PI / (2.0 * m)).sin() * ((nf + 2.0) * PI / (4.0 * m)).sin()
            - 1.0)
}

pub fn ground_energy(n: usize, j: f64, boundary: Boundary) -> f64 {
    match boundary {
        Boundary::Periodic => ground_energy_periodic(n, j),
        Boundary::Open => ground_energy_open(n, j),
    }
}

/// Smallest `|h|` at which the `s_z = 0` ground level meets the `|s_z| = 2` level.
pub fn hcrit(n: usize, j: f64, boundary: Boundary) -> f64 {
    match boundary {
        Boundary::Periodic => 2.0 * j.abs() * (PI / (2.0 * n as f64)).tan(),
        Boundary::Open => 2.0 * j.abs() * (PI / (2.0 * (n + 1) as f64)).sin(),
    }
}

/// The same crossing read off the zero-field sector minima: levels move as
/// `E_s(h) = E_s(0) + h·s`, so the `s = 0` and `s = −2` minima meet at half their gap.
pub fn hcrit_from_levels(n: usize, j: f64, boundary: Boundary) -> Result<f64> {
    let levels = xx_lowest_levels(n, j, 0.0, boundary)?;
    let e0 = levels.lowest_with_sz(0).expect("s_z = 0 sector exists for even n");
    let e2 = levels.lowest_with_sz(-2).expect("s_z = −2 sector exists");
    Ok(0.5 * (e2 - e0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodic_four() {
        assert!((ground_energy_periodic(4, 1.0) + 4.0 * 2f64.sqrt()).abs() < 1e-14);
        assert!((hcrit(4, 1.0, Boundary::Periodic) - 0.828_427_124_746_190_1).abs() < 1e-15);
    }

    #[test]
    fn open_two_site_bond() {
        assert!((ground_energy_open(2, 1.0) + 2.0).abs() < 1e-14);
    }

    #[test]
    fn open_closed_form_matches_sum() {
        for n in (2..40).step_by(2) {
            let sum: f64 = (1..=n / 2).map(|k| (PI * k as f64 / (n + 1) as f64).cos()).sum();
            assert!((ground_energy_open(n, 1.0) + 4.0 * sum).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn energy_density_limit() {
        let n = 100_000;
        assert!((ground_energy_periodic(n, 1.0) / n as f64 + 4.0 / PI).abs() < 1e-8);
    }

    #[test]
    fn critical_field_from_levels() {
        for n in [4, 6, 8, 10, 50] {
            for b in [Boundary::Periodic, Boundary::Open] {
                let lv = hcrit_from_levels(n, 1.0, b).unwrap();
                assert!((lv - hcrit(n, 1.0, b)).abs() < 1e-12, "n={n} {b}");
            }
        }
    }

    #[test]
    fn level_minimum_is_ground_energy() {
        for n in [4, 6, 8, 12] {
            let lv = xx_lowest_levels(n, 1.0, 0.0, Boundary::Periodic).unwrap();
            let min = lv.levels.iter().map(|l| l.energy).fold(f64::INFINITY, f64::min);
            assert!((min - ground_energy_periodic(n, 1.0)).abs() < 1e-12);
            let lv = xx_lowest_levels(n, 1.0, 0.0, Boundary::Open).unwrap();
            let min = lv.levels.iter().map(|l| l.energy).fold(f64::INFINITY, f64::min);
            assert!((min - ground_energy_open(n, 1.0)).abs() < 1e-12);
        }
    }
}
