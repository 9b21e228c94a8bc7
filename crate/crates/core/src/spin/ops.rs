//! Collective operators and the spin-flip time reversal `℧ = [⊗(−iσʸ)]·conj`.

use num_complex::Complex64;

use super::hamiltonian::sz_value;
use super::state::{DensityMatrix, StateVector};
use crate::linalg::ComplexMatrix;

/// Sign of `⊗(−iσʸ)` acting on basis state `b`: `ω|b⟩ = (−1)^{popcount b} |~b⟩`.
#[inline]
pub fn flip_sign(b: usize) -> f64 {
    if b.count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `S_z = Σ σᶻ_j` as a diagonal matrix.
pub fn collective_sz(n: usize) -> ComplexMatrix {
    let d: Vec<f64> = (0..1usize << n).map(|b| sz_value(n, b) as f64).collect();
    ComplexMatrix::from_real_diag(&d)
}

/// `ν = ⊗σᶻ_j`, the parity of the number of down spins.
pub fn parity_op(n: usize) -> ComplexMatrix {
    let d: Vec<f64> = (0..1usize << n).map(flip_sign).collect();
    ComplexMatrix::from_real_diag(&d)
}

/// `ω·conj(ψ)`.
pub fn time_reversal_apply(psi: &StateVector) -> StateVector {
    let dim = psi.dim();
    let mask = dim - 1;
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (b, z) in psi.amps().iter().enumerate() {
        out[!b & mask] = z.conj() * flip_sign(b);
    }
    StateVector::new(out).expect("dimension preserved")
}

/// `ω·conj(ρ)·ω†`.
pub fn time_reversal_conjugate(rho: &DensityMatrix) -> DensityMatrix {
    let m = rho.matrix();
    let dim = m.rows();
    let mask = dim - 1;
    let out = ComplexMatrix::from_fn(dim, dim, |a, b| {
        let (sa, sb) = (!a & mask, !b & mask);
        m[(sa, sb)].conj() * (flip_sign(sa) * flip_sign(sb))
    });
    DensityMatrix::from_trusted(out)
}

/// `ω·conj(m)·ω†` for an arbitrary square operator on qubits.
pub fn time_reversal_operator(m: &ComplexMatrix) -> ComplexMatrix {
    let dim = m.rows();
    let mask = dim - 1;
    ComplexMatrix::from_fn(dim, dim, |a, b| {
        let (sa, sb) = (!a & mask, !b & mask);
        m[(sa, sb)].conj() * (flip_sign(sa) * flip_sign(sb))
    })
}

/// `⟨ψ|O|ψ⟩` for a Hermitian `O`.
pub fn expectation(psi: &StateVector, o: &ComplexMatrix) -> f64 {
    let v = o.mat_vec(psi.amps());
    psi.amps().iter().zip(&v).map(|(a, b)| (a.conj() * b).re).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::chain::{Boundary, ChainSpec};
    use crate::spin::hamiltonian::build_hamiltonian;

    #[test]
    fn small_diagonals() {
        assert_eq!(
            collective_sz(2).diagonal().iter().map(|z| z.re).collect::<Vec<_>>(),
            vec![2.0, 0.0, 0.0, -2.0]
        );
        assert_eq!(
            parity_op(2).diagonal().iter().map(|z| z.re).collect::<Vec<_>>(),
            vec![1.0, -1.0, -1.0, 1.0]
        );
    }

    #[test]
    fn flip_on_basis_and_ghz() {
        let up = StateVector::basis(2, 0);
        assert_eq!(time_reversal_apply(&up), StateVector::basis(2, 3));
        assert_eq!(time_reversal_apply(&StateVector::basis(2, 3)), up);
        let g = StateVector::ghz(4);
        assert_eq!(time_reversal_apply(&g), g);
    }

    #[test]
    fn applying_twice_gives_parity_sign() {
        for n in 1..6 {
            let psi = crate::random::random_state(&mut crate::random::seeded(n as u64), 1 << n);
            let psi = StateVector::new(psi).unwrap();
            let twice = time_reversal_apply(&time_reversal_apply(&psi));
            let s = if n % 2 == 0 { 1.0 } else { -1.0 };
            for (a, b) in twice.amps().iter().zip(psi.amps()) {
                assert!((a - b * s).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn field_term_is_odd_and_couplings_even() {
        for n in [3, 4] {
            let field = build_hamiltonian(&ChainSpec::xyz(n, 0.0, 0.0, 0.0, 1.0, Boundary::Periodic)).unwrap();
            assert!((&time_reversal_operator(&field) + &field).frobenius_norm() < 1e-14);
            let h0 = build_hamiltonian(&ChainSpec::xyz(n, 0.9, 0.4, -0.6, 0.0, Boundary::Open)).unwrap();
            assert!((&time_reversal_operator(&h0) - &h0).frobenius_norm() < 1e-14);
        }
    }

    #[test]
    fn sz_commutes_with_xx() {
        let h = build_hamiltonian(&ChainSpec::xx(4, 1.0, 0.3, Boundary::Periodic)).unwrap();
        let s = collective_sz(4);
        assert!((&(&h * &s) - &(&s * &h)).frobenius_norm() <= 1e-10);
        let p = parity_op(4);
        assert!((&(&h * &p) - &(&p * &h)).frobenius_norm() <= 1e-10);
    }

    #[test]
    fn conjugation_of_simple_states() {
        let mixed = DensityMatrix::maximally_mixed(4);
        assert_eq!(time_reversal_conjugate(&mixed), mixed);
        let up = DensityMatrix::from_pure(&StateVector::basis(2, 0));
        let down = DensityMatrix::from_pure(&StateVector::basis(2, 3));
        assert_eq!(time_reversal_conjugate(&up), down);
    }
}
