use super::eig::hermitian_eig;
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::tol::TOL_PSD;

/// Principal square root of a Hermitian positive semidefinite matrix.
///
/// Eigenvalues in `[−TOL_PSD·‖m‖_F, 0)` are roundoff and are clamped to zero.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let e = hermitian_eig(m)?;
    let floor = -TOL_PSD * m.frobenius_norm();
    if let Some(&bad) = e.values.iter().find(|&&l| l < floor) {
        return Err(Error::NotPositiveSemidefinite { eigenvalue: bad });
    }
    Ok(e.apply_fn(|l| l.max(0.0).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_complex_matrix, seeded};

    #[test]
    fn identity_and_diagonal() {
        let i = ComplexMatrix::identity(3);
        assert!((&psd_sqrt(&i).unwrap() - &i).frobenius_norm() < 1e-15);
        let d = ComplexMatrix::from_real_diag(&[4.0, 9.0]);
        let r = psd_sqrt(&d).unwrap();
        assert!((&r - &ComplexMatrix::from_real_diag(&[2.0, 3.0])).frobenius_norm() < 1e-14);
    }

    #[test]
    fn random_psd_squares_back_and_commutes() {
        let mut rng = seeded(21);
        for dim in [2, 4, 7] {
            let a = random_complex_matrix(&mut rng, dim, dim);
            let m = &a.adjoint() * &a;
            let r = psd_sqrt(&m).unwrap();
            let scale = m.frobenius_norm();
            assert!((&(&r * &r) - &m).frobenius_norm() <= 1e-9 * scale);
            assert!((&(&r * &m) - &(&m * &r)).frobenius_norm() <= 1e-9 * scale);
            assert!(r.hermitian_defect() < 1e-12 * scale);
        }
    }

    #[test]
    fn negative_eigenvalue_rejected_small_one_clamped() {
        let bad = ComplexMatrix::from_real_diag(&[1.0, -0.1]);
        assert!(matches!(
            psd_sqrt(&bad),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
        let ok = ComplexMatrix::from_real_diag(&[1.0, -1e-14]);
        let r = psd_sqrt(&ok).unwrap();
        assert_eq!(r[(1, 1)].re, 0.0);
    }
}
