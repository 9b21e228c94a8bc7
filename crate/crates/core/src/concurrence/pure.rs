use num_complex::Complex64;

use super::theta::TimeReversalOp;
use crate::linalg::inner;
use crate::spin::StateVector;

/// `x†·ω·conj(x)`, the preconcurrence of a (possibly subnormalized) vector.
pub fn preconcurrence(x: &[Complex64], theta: &TimeReversalOp) -> Complex64 {
    inner(x, &theta.apply(x))
}

/// `C_n(ψ) = |⟨ψ|Θψ⟩|`.
pub fn pure_concurrence(psi: &StateVector, theta: &TimeReversalOp) -> f64 {
    preconcurrence(psi.amps(), theta).norm()
}

/// `𝒞(ψ, φ) = conj(⟨φ|Θψ⟩)`.
pub fn concurrence_bilinear(psi: &[Complex64], phi: &[Complex64], theta: &TimeReversalOp) -> Complex64 {
    inner(phi, &theta.apply(psi)).conj()
}
