//! Thermal n-concurrence, threshold temperatures and the thermodynamic limit
//! of the free energy.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use super::energies::ground_energy;
use super::partition::{ln_cosh, log_partition};
use crate::error::{Error, Result};
use crate::spin::Boundary;

/// `C_n(ρ_T) = (Z(0)/Z(h))·max{0, 2e^{−βE₀}/Z(0) − 1}` with `E₀` the zero-field ground energy.
pub fn thermal_concurrence(n: usize, j: f64, h: f64, beta: f64, boundary: Boundary) -> Result<f64> {
    let e0 = ground_energy(n, j, boundary);
    let ln_z0 = log_partition(n, j, 0.0, beta, boundary)?;
    let a = LN_2 - beta * e0 - ln_z0;
    if a <= 0.0 {
        return Ok(0.0);
    }
    let ln_zh = if h == 0.0 {
        ln_z0
    } else {
        log_partition(n, j, h, beta, boundary)?
    };
    Ok(((ln_z0 - ln_zh).exp() * a.exp_m1()).clamp(0.0, 1.0))
}

/// `ln 2 − βE₀ − ln Z(0)` at `β = 1/t`; positive below the threshold temperature.
fn threshold_gap(n: usize, j: f64, t: f64, boundary: Boundary) -> Result<f64> {
    let beta = 1.0 / t;
    Ok(LN_2 - beta * ground_energy(n, j, boundary) - log_partition(n, j, 0.0, beta, boundary)?)
}

const THRESHOLD_ITERS: usize = 200;
const THRESHOLD_REL_TOL: f64 = 1e-12;

/// The temperature solving `2e^{−E₀/T} = Z(0)`, by bisection in `ln T`.
pub fn threshold_temperature(n: usize, j: f64, boundary: Boundary) -> Result<f64> {
    let scale = j.abs();
    if scale == 0.0 {
        return Err(Error::InvalidChain("threshold temperature needs J ≠ 0".into()));
    }
    let mut lo = 1e-6 * scale;
    let mut hi = 10.0 * scale;
    let mut bracketed = false;
    for _ in 0..2 {
        if threshold_gap(n, j, lo, boundary)? > 0.0 && threshold_gap(n, j, hi, boundary)? < 0.0 {
            bracketed = true;
            break;
        }
        lo *= 1e-3;
        hi *= 1e3;
    }
    if !bracketed {
        return Err(Error::BracketingFailure { lo, hi });
    }
    for _ in 0..THRESHOLD_ITERS {
        let mid = (lo * hi).sqrt();
        if threshold_gap(n, j, mid, boundary)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= THRESHOLD_REL_TOL * hi {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Large-`n` estimate `24 J ln 2 / (nπ)`.
pub fn threshold_temperature_asymptotic(n: usize, j: f64) -> f64 {
    24.0 * j.abs() * LN_2 / (n as f64 * PI)
}

/// `lim ln Z(0)/n = (2/π) ∫₀^{π/2} ln[2 cosh(2Jβ cos ω)] dω` for the periodic chain.
pub fn free_energy_density_limit(j_beta: f64) -> f64 {
    let f = |w: f64| LN_2 + ln_cosh(2.0 * j_beta * w.cos());
    2.0 / PI * adaptive_simpson(&f, 0.0, FRAC_PI_2, 1e-12)
}

/// Leading large-`Jβ` behaviour of [`free_energy_density_limit`]: `4Jβ/π + π/(24Jβ)`.
pub fn free_energy_density_asymptotic(j_beta: f64) -> f64 {
    4.0 * j_beta / PI + PI / (24.0 * j_beta)
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = simpson(fa, fm, fb, a, b);
    recurse(f, a, b, fa, fm, fb, whole, tol, 40)
}
