//! Log-domain partition functions of XX chains.

use std::f64::consts::{LN_2, PI};

use super::levels::open_mode_energies;
use crate::error::{Error, Result};

/// `ln cosh x` without overflow.
pub fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p() - LN_2
}

/// `ln |sinh x|`; `−∞` at zero.
pub fn ln_abs_sinh(x: f64) -> f64 {
    let a = x.abs();
    a + (-(-2.0 * a).exp()).ln_1p() - LN_2
}

/// `ln |tanh x|`, accurate when `|x|` is large.
pub fn ln_abs_tanh(x: f64) -> f64 {
    let e = (-2.0 * x.abs()).exp();
    (-e).ln_1p() - e.ln_1p()
}

/// `ln(−ln|tanh x|)`, i.e. the log of a small positive quantity, kept finite
/// where `ln|tanh x|` itself underflows to zero.
fn ln_neg_ln_tanh(x: f64) -> f64 {
    let a = x.abs();
    let e = (-2.0 * a).exp();
    if e < 1e-8 {
        // −ln tanh x = 2e + O(e³)
        LN_2 - 2.0 * a
    } else {
        (e.ln_1p() - (-e).ln_1p()).ln()
    }
}

pub fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let m = a.max(b);
    m + ((a - m).exp() + (b - m).exp()).ln()
}

fn log_sum_exp(xs: &[f64]) -> f64 {
    xs.iter().fold(f64::NEG_INFINITY, |acc, &x| log_add_exp(acc, x))
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::InvalidChain(format!("inverse temperature {beta} must be finite and ≥ 0")));
    }
    Ok(())
}

/// `ln Z` of the periodic XX chain, even `n`:
///
/// `Z = 2^{n−1} [ Π_odd cosh²(βε_k) + Π_odd sinh²(βε_k)
///      + cosh(βε_0) cosh(βε_n) Π_even cosh²(βε_k) − sinh(βε_0) sinh(βε_n) Π_even sinh²(βε_k) ]`
///
/// with `ε_k = 2J cos(πk/n) − h`, "odd" meaning `k = 1, 3, …, n−1` and "even" `k = 2, …, n−2`.
pub fn partition_periodic(n: usize, j: f64, h: f64, beta: f64) -> Result<f64> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidChain(format!(
            "the periodic partition function needs an even number of sites ≥ 2, got {n}"
        )));
    }
    check_beta(beta)?;
    let x = |k: usize| beta * (2.0 * j * (PI * k as f64 / n as f64).cos() - h);

    // even fermion number
    let (mut t1, mut t2) = (0.0, 0.0);
    for k in (1..n).step_by(2) {
        t1 += 2.0 * ln_cosh(x(k));
        t2 += 2.0 * ln_abs_sinh(x(k));
    }
    let even = log_add_exp(t1, t2);

    // odd fermion number: cosh-product minus signed sinh-product
    let (x0, xn) = (x(0), x(n));
    let mut t3 = ln_cosh(x0) + ln_cosh(xn);
    let mut d = ln_abs_tanh(x0) + ln_abs_tanh(xn);
    let mut ln_neg_d_terms = vec![ln_neg_ln_tanh(x0), ln_neg_ln_tanh(xn)];
    for k in (2..n).step_by(2) {
        t3 += 2.0 * ln_cosh(x(k));
        d += 2.0 * ln_abs_tanh(x(k));
        ln_neg_d_terms.push(LN_2 + ln_neg_ln_tanh(x(k)));
    }
    let sign = x0.signum() * xn.signum();
    let odd = if d == f64::NEG_INFINITY {
        t3
    } else if sign > 0.0 {
        // ln(1 − e^d) with d ≤ 0 possibly tiny
        if d > -1e-10 {
            t3 + log_sum_exp(&ln_neg_d_terms) + (0.5 * d).ln_1p()
        } else {
            t3 + (-d.exp_m1()).ln()
        }
    } else {
        t3 + d.exp().ln_1p()
    };

    Ok((n - 1) as f64 * LN_2 + log_add_exp(even, odd))
}

/// `ln Z` of the open XX chain: `Z = Π_{k=1}^n 2 cosh(β(h + 2J cos(πk/(n+1))))`.
pub fn partition_open(n: usize, j: f64, h: f64, beta: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidChain(format!("need at least 2 sites, got {n}")));
    }
    check_beta(beta)?;
    Ok(open_mode_energies(n, j, h)
        .into_iter()
        .map(|lam| LN_2 + ln_cosh(0.5 * beta * lam))
        .sum())
}

pub fn log_partition(n: usize, j: f64, h: f64, beta: f64, boundary: crate::spin::Boundary) -> Result<f64> {
    match boundary {
        crate::spin::Boundary::Periodic => partition_periodic(n, j, h, beta),
        crate::spin::Boundary::Open => partition_open(n, j, h, beta),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freefermion::levels::{xx_levels_open, xx_levels_periodic};
    use crate::spin::{self, Boundary, ChainSpec};

    fn from_levels(energies: &[f64], beta: f64) -> f64 {
        spin::log_partition(energies, beta)
    }

    #[test]
    fn infinite_temperature() {
        for n in [2, 4, 10, 100] {
            assert!((partition_periodic(n, 1.0, 0.3, 0.0).unwrap() - n as f64 * LN_2).abs() < 1e-12);
            assert!((partition_open(n, 1.0, 0.3, 0.0).unwrap() - n as f64 * LN_2).abs() < 1e-12);
        }
    }

    #[test]
    fn open_two_sites_double_angle() {
        for beta in [0.1f64, 1.0, 3.0] {
            let want = (2.0 + 2.0 * (2.0 * beta).cosh()).ln();
            assert!((partition_open(2, 1.0, 0.0, beta).unwrap() - want).abs() < 1e-13);
        }
    }

    #[test]
    fn matches_level_enumeration() {
        for n in [4, 6, 8] {
            for h in [0.0, 0.5, 2.5, -3.0] {
                for beta in [0.1, 1.0, 5.0, 40.0] {
                    let lv = xx_levels_periodic(n, 1.0, h).unwrap().energies();
                    let a = partition_periodic(n, 1.0, h, beta).unwrap();
                    let b = from_levels(&lv, beta);
                    assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0), "n={n} h={h} beta={beta}");
                    let lv = xx_levels_open(n, 1.0, h).unwrap().energies();
                    let a = partition_open(n, 1.0, h, beta).unwrap();
                    let b = from_levels(&lv, beta);
                    assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn very_low_temperature_stays_finite() {
        for h in [0.0, 2.5] {
            let beta = 1e4;
            let a = partition_periodic(6, 1.0, h, beta).unwrap();
            let lv = xx_levels_periodic(6, 1.0, h).unwrap().energies();
            let b = from_levels(&lv, beta);
            assert!(a.is_finite());
            assert!((a - b).abs() <= 1e-10 * b.abs());
        }
    }

    #[test]
    fn matches_dense_trace() {
        let spec = ChainSpec::xx(4, 1.0, 0.5, Boundary::Periodic);
        let values = spin::diagonalize(&spec).unwrap().values;
        for beta in [0.1, 1.0, 5.0] {
            let a = partition_periodic(4, 1.0, 0.5, beta).unwrap();
            let b = from_levels(&values, beta);
            assert!((a - b).abs() <= 1e-10 * b.abs());
        }
    }

    #[test]
    fn log_partition_is_even_in_field() {
        for h in [0.1, 0.7, 3.0] {
            let a = partition_periodic(10, 1.0, h, 2.0).unwrap();
            let b = partition_periodic(10, 1.0, -h, 2.0).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn stable_helpers() {
        assert!((ln_cosh(1000.0) - (1000.0 - LN_2)).abs() < 1e-12);
        assert!((ln_cosh(0.5) - 0.5f64.cosh().ln()).abs() < 1e-15);
        assert!((ln_abs_sinh(-0.5) - 0.5f64.sinh().ln()).abs() < 1e-15);
        assert_eq!(ln_abs_sinh(0.0), f64::NEG_INFINITY);
        assert!((ln_abs_tanh(0.3) - 0.3f64.tanh().ln()).abs() < 1e-15);
    }
}
