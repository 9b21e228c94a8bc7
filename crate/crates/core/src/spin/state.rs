use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, norm, ComplexMatrix};
use crate::tol::{TOL_HERM, TOL_PSD, TOL_TRACE};

/// Dense pure state on `n` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Wraps `2^n` finite amplitudes. Normalization is not enforced.
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        let dim = amps.len();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::Shape(format!(
                "state length {dim} is not a power of two ≥ 2"
            )));
        }
        if let Some(k) = amps.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite { row: k, col: 0 });
        }
        Ok(Self {
            n: dim.trailing_zeros() as usize,
            amps,
        })
    }

    pub fn basis(n: usize, index: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[index] = Complex64::new(1.0, 0.0);
        Self { n, amps }
    }

    /// `(|0…0⟩ + |1…1⟩)/√2`.
    pub fn ghz(n: usize) -> Self {
        let dim = 1usize << n;
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        let a = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        amps[0] = a;
        amps[dim - 1] = a;
        Self { n, amps }
    }

    /// Equal superposition of the `n` single-excitation basis states.
    pub fn w(n: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        let a = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        for j in 0..n {
            amps[1 << j] = a;
        }
        Self { n, amps }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Self {
            n: self.n + other.n,
            amps,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amps(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amps)
    }

    pub fn normalized(mut self) -> Self {
        let s = self.norm();
        if s > 0.0 {
            self.amps.iter_mut().for_each(|z| *z /= s);
        }
        self
    }

    pub fn max_imag(&self) -> f64 {
        self.amps.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    /// Rotates the global phase so the largest-magnitude amplitude is real and positive.
    pub fn canonical_phase(mut self) -> Self {
        let (k, _) = self
            .amps
            .iter()
            .enumerate()
            .fold((0, -1.0), |acc, (i, z)| if z.norm() > acc.1 + 1e-12 { (i, z.norm()) } else { acc });
        let z = self.amps[k];
        if z.norm() > 0.0 {
            let ph = z.conj() / z.norm();
            self.amps.iter_mut().for_each(|a| *a *= ph);
        }
        self
    }
}

/// Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if !m.is_square() || m.rows() == 0 {
            return Err(Error::InvalidDensityMatrix(format!(
                "expected a nonempty square matrix, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let scale = m.frobenius_norm();
        let defect = m.hermitian_defect();
        if defect > TOL_HERM * scale {
            return Err(Error::InvalidDensityMatrix(format!(
                "not Hermitian (relative defect {:.3e})",
                defect / scale
            )));
        }
        let tr = m.trace().re;
        if (tr - 1.0).abs() > TOL_TRACE {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr} differs from 1")));
        }
        let m = m.hermitian_part();
        let lo = hermitian_eig(&m)?.values[0];
        if lo < -TOL_PSD * scale {
            return Err(Error::InvalidDensityMatrix(format!(
                "negative eigenvalue {lo:.3e}"
            )));
        }
        Ok(Self { matrix: m })
    }

    /// Skips validation; callers guarantee the invariants by construction.
    pub(crate) fn from_trusted(m: ComplexMatrix) -> Self {
        Self {
            matrix: m.hermitian_part(),
        }
    }

    pub fn from_pure(psi: &StateVector) -> Self {
        let v = psi.clone().normalized();
        Self::from_trusted(ComplexMatrix::outer(v.amps(), v.amps()))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self::from_trusted(ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Qubit count when the dimension is a power of two.
    pub fn n(&self) -> Option<usize> {
        let d = self.dim();
        d.is_power_of_two().then(|| d.trailing_zeros() as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_states_are_normalized() {
        for n in 2..6 {
            assert!((StateVector::ghz(n).norm() - 1.0).abs() < 1e-15);
            assert!((StateVector::w(n).norm() - 1.0).abs() < 1e-15);
        }
        let g = StateVector::ghz(4).tensor(&StateVector::ghz(4));
        assert_eq!(g.n(), 8);
        assert!((g.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(StateVector::new(vec![Complex64::new(1.0, 0.0); 3]).is_err());
    }

    #[test]
    fn density_matrix_validation() {
        assert!(DensityMatrix::new(ComplexMatrix::identity(2)).is_err());
        assert!(DensityMatrix::new(ComplexMatrix::from_real_diag(&[1.5, -0.5])).is_err());
        let ok = DensityMatrix::new(ComplexMatrix::from_real_diag(&[0.25; 4])).unwrap();
        assert_eq!(ok.n(), Some(2));
    }

    #[test]
    fn canonical_phase_makes_peak_positive() {
        let psi = StateVector::new(vec![Complex64::new(0.0, -0.6), Complex64::new(0.0, 0.8)])
            .unwrap()
            .canonical_phase();
        assert!((psi.amps()[1] - Complex64::new(0.8, 0.0)).norm() < 1e-15);
    }
}
