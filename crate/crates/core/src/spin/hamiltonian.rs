//! Dense spin-chain Hamiltonians.
//!
//! Basis convention: site 0 (the first qubit) is the most significant bit, and
//! bit value 0 is spin up (`σᶻ = +1`).

use num_complex::Complex64;

use super::chain::ChainSpec;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::tol::DENSE_CAP;

/// Bit mask of site `j` in an `n`-qubit basis index.
#[inline]
pub fn site_mask(n: usize, j: usize) -> usize {
    1 << (n - 1 - j)
}

/// `σᶻ_j` eigenvalue (±1) of site `j` in basis state `b`.
#[inline]
pub fn spin_z(n: usize, b: usize, j: usize) -> f64 {
    if b & site_mask(n, j) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Eigenvalue of `S_z = Σ σᶻ_j` on basis state `b`.
#[inline]
pub fn sz_value(n: usize, b: usize) -> i32 {
    n as i32 - 2 * b.count_ones() as i32
}

pub fn check_dense(n: usize) -> Result<()> {
    if n > DENSE_CAP {
        return Err(Error::TooLarge { n, cap: DENSE_CAP });
    }
    Ok(())
}

/// The real symmetric Hamiltonian of `spec` in the computational basis.
pub fn build_hamiltonian(spec: &ChainSpec) -> Result<ComplexMatrix> {
    spec.validate()?;
    check_dense(spec.n)?;
    let n = spec.n;
    let dim = spec.dim();
    let bonds = spec.bonds();
    let mut m = ComplexMatrix::zeros(dim, dim);
    for b in 0..dim {
        let mut diag = spec.h * sz_value(n, b) as f64;
        for &(j, k) in &bonds {
            let zz = spin_z(n, b, j) * spin_z(n, b, k);
            diag += spec.jz * zz;
            // σˣσˣ flips both spins with amplitude 1, σʸσʸ with amplitude −s_j s_k
            let amp = spec.jx - spec.jy * zz;
            if amp != 0.0 {
                let flipped = b ^ site_mask(n, j) ^ site_mask(n, k);
                m[(flipped, b)] += Complex64::new(amp, 0.0);
            }
        }
        m[(b, b)] += Complex64::new(diag, 0.0);
    }
    Ok(m)
}
