//! Closed-form n-concurrence of mixed states and ensembles attaining it.
//!
//! For a bosonic `Θ` the convex roof equals `max{0, λ_0 − Σ_{j≥1} λ_j}` where
//! `λ` is the spectrum of `M(ρ) = (√ρ ω conj(ρ) ω† √ρ)^{1/2}`. The same numbers
//! are the congruence values of `η` for any ensemble of `ρ`, which is how
//! [`mixed_concurrence`] computes them: the Takagi route works directly with
//! `√p_j` and avoids taking the square root of squared small eigenvalues.

use num_complex::Complex64;

use super::ensemble::{eta_matrix, Ensemble};
use super::phases::{phase_zero_sum, PhaseSolution};
use super::theta::TimeReversalOp;
use crate::error::Result;
use crate::linalg::{hermitian_eig, orthogonal_diag_balance, psd_sqrt, symmetric_congruence_diag, ComplexMatrix, RealMatrix};
use crate::spin::DensityMatrix;
use crate::tol::ZERO_BRANCH_REL;

#[derive(Clone, Debug, PartialEq)]
pub struct MixedConcurrence {
    pub value: f64,
    /// Spectrum of `M(ρ)`, nonincreasing, padded with zeros to the dimension of `ρ`.
    pub tau_spectrum: Vec<f64>,
}

/// `max{0, λ_0 − Σ_{j≥1} λ_j}`.
pub fn closed_form_value(lams: &[f64]) -> f64 {
    match lams.split_first() {
        Some((l0, rest)) => (l0 - rest.iter().sum::<f64>()).max(0.0),
        None => 0.0,
    }
}

pub fn mixed_concurrence(rho: &DensityMatrix, theta: &TimeReversalOp) -> Result<MixedConcurrence> {
    theta.require_bosonic()?;
    theta.check_dim(rho.dim())?;
    let e = Ensemble::eigen_ensemble(rho, None)?;
    let mut lams = symmetric_congruence_diag(&eta_matrix(&e, theta)?)?.values;
    lams.resize(rho.dim(), 0.0);
    Ok(MixedConcurrence {
        value: closed_form_value(&lams),
        tau_spectrum: lams,
    })
}

/// Spectrum of `M(ρ)` from its definition, nonincreasing. Used as an
/// independent check of the congruence route.
pub fn m_spectrum_direct(rho: &DensityMatrix, theta: &TimeReversalOp) -> Result<Vec<f64>> {
    theta.check_dim(rho.dim())?;
    let w = theta.matrix();
    let s = psd_sqrt(rho.matrix())?;
    let flipped = &(&w * &rho.matrix().conj()) * &w.adjoint();
    let inner = (&(&s * &flipped) * &s).hermitian_part();
    let mut lams: Vec<f64> = hermitian_eig(&inner)?
        .values
        .into_iter()
        .map(|x| x.max(0.0).sqrt())
        .collect();
    lams.sort_by(|a, b| b.total_cmp(a));
    Ok(lams)
}

/// Sylvester Hadamard matrix of order `n = 2^m`, scaled to be orthogonal.
pub fn hadamard(n: usize) -> ComplexMatrix {
    assert!(n.is_power_of_two(), "Hadamard order must be a power of two");
    let s = 1.0 / (n as f64).sqrt();
    ComplexMatrix::from_fn(n, n, |i, j| {
        Complex64::new(if (i & j).count_ones() % 2 == 0 { s } else { -s }, 0.0)
    })
}

/// An ensemble of `ρ` whose concurrence equals the closed form.
///
/// The eigenensemble is padded to the next power of two `N'` above the rank and
/// rotated so that `η` is diagonal with entries `λ_j`. If `T = λ_0 − Σλ_j > 0`,
/// the phases `diag(1, i, …, i)` make `η` real with trace `T`, and an orthogonal
/// balance spreads that trace evenly, so every preconcurrence is `T/N'`.
/// Otherwise the phases are chosen so that `Σ e^{iθ_j} λ_j = 0`, and a Hadamard
/// mix makes every preconcurrence vanish.
pub fn minimizing_ensemble(rho: &DensityMatrix, theta: &TimeReversalOp) -> Result<Ensemble> {
    theta.require_bosonic()?;
    theta.check_dim(rho.dim())?;
    let rank = Ensemble::eigen_ensemble(rho, None)?.len();
    let len = rank.next_power_of_two();
    let e0 = Ensemble::eigen_ensemble(rho, Some(len))?;
    let diag = symmetric_congruence_diag(&eta_matrix(&e0, theta)?)?;
    let e1 = e0.transform(&diag.unitary.conj())?;
    let lams = diag.values;
    let t = lams[0] - lams[1..].iter().sum::<f64>();
    let trace = rho.matrix().trace().re;

    if t > ZERO_BRANCH_REL * trace {
        let mut phase = vec![Complex64::new(0.0, 1.0); len];
        phase[0] = Complex64::new(1.0, 0.0);
        let e2 = e1.transform(&ComplexMatrix::from_diag(&phase))?;
        let signed: Vec<f64> = lams
            .iter()
            .enumerate()
            .map(|(j, &l)| if j == 0 { l } else { -l })
            .collect();
        let o = orthogonal_diag_balance(&RealMatrix::from_diag(&signed))?;
        return e2.transform(&o.to_complex());
    }

    let angles = match phase_zero_sum(&lams) {
        PhaseSolution::Angles(a) => a,
        // |T| is below the branch tolerance: the alternating choice leaves T itself
        PhaseSolution::Infeasible { .. } => (0..len)
            .map(|j| if j == 0 { 0.0 } else { std::f64::consts::PI })
            .collect(),
    };
    let phase: Vec<Complex64> = angles.iter().map(|&a| Complex64::from_polar(1.0, -0.5 * a)).collect();
    let e2 = e1.transform(&ComplexMatrix::from_diag(&phase))?;
    e2.transform(&hadamard(len))
}
