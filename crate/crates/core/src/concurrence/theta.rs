//! Antiunitary time-reversal operators `Θ = ω·conj`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::spin::ops::flip_sign;
use crate::tol::TOL_UNITARY;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaKind {
    /// `Θ² = +1`, equivalently `ω = ωᵀ`.
    Bosonic,
    /// `Θ² = −1`, equivalently `ω = −ωᵀ`.
    Fermionic,
}

#[derive(Clone, Debug)]
enum Omega {
    /// `ω e_b = phase[b]·e_{target[b]}`.
    Monomial {
        target: Vec<usize>,
        phase: Vec<Complex64>,
    },
    Dense(ComplexMatrix),
}

#[derive(Clone, Debug)]
pub struct TimeReversalOp {
    omega: Omega,
    kind: ThetaKind,
}

impl TimeReversalOp {
    /// The spin flip `⊗ⁿ(−iσʸ)·conj` on `n` qubits; bosonic exactly when `n` is even.
    pub fn spin_flip(n: usize) -> Self {
        let sites: Vec<usize> = (0..n).collect();
        Self::spin_flip_on(n, &sites)
    }

    /// `−iσʸ` on the listed sites and the identity elsewhere, composed with conjugation.
    pub fn spin_flip_on(n: usize, sites: &[usize]) -> Self {
        let dim = 1usize << n;
        let mask = sites.iter().fold(0usize, |m, &s| m | 1 << (n - 1 - s));
        let target = (0..dim).map(|b| b ^ mask).collect();
        let phase = (0..dim)
            .map(|b| Complex64::new(flip_sign(b & mask), 0.0))
            .collect();
        let kind = if mask.count_ones() % 2 == 0 {
            ThetaKind::Bosonic
        } else {
            ThetaKind::Fermionic
        };
        Self {
            omega: Omega::Monomial { target, phase },
            kind,
        }
    }

    /// Validates `ω` (unitary, `ω·conj(ω) = ±I`) and classifies it.
    pub fn from_matrix(omega: ComplexMatrix) -> Result<Self> {
        let defect = omega.unitary_defect();
        if defect > TOL_UNITARY {
            return Err(Error::InvalidTimeReversal(format!(
                "ω is not unitary (defect {defect:.3e})"
            )));
        }
        let sq = &omega * &omega.conj();
        let id = ComplexMatrix::identity(omega.rows());
        let kind = if (&sq - &id).frobenius_norm() <= TOL_UNITARY {
            ThetaKind::Bosonic
        } else if (&sq + &id).frobenius_norm() <= TOL_UNITARY {
            ThetaKind::Fermionic
        } else {
            return Err(Error::InvalidTimeReversal(
                "ω·conj(ω) is neither +I nor −I".into(),
            ));
        };
        Ok(Self {
            omega: Omega::Dense(omega),
            kind,
        })
    }

    pub fn kind(&self) -> ThetaKind {
        self.kind
    }

    pub fn is_bosonic(&self) -> bool {
        self.kind == ThetaKind::Bosonic
    }

    pub fn require_bosonic(&self) -> Result<()> {
        if self.is_bosonic() {
            Ok(())
        } else {
            Err(Error::FermionicUnsupported)
        }
    }

    pub fn dim(&self) -> usize {
        match &self.omega {
            Omega::Monomial { target, .. } => target.len(),
            Omega::Dense(m) => m.rows(),
        }
    }

    /// The linear part `ω` as a dense matrix.
    pub fn matrix(&self) -> ComplexMatrix {
        match &self.omega {
            Omega::Monomial { target, phase } => {
                let d = target.len();
                let mut m = ComplexMatrix::zeros(d, d);
                for b in 0..d {
                    m[(target[b], b)] = phase[b];
                }
                m
            }
            Omega::Dense(m) => m.clone(),
        }
    }

    /// `Θx = ω·conj(x)`.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        match &self.omega {
            Omega::Monomial { target, phase } => {
                let mut out = vec![Complex64::new(0.0, 0.0); x.len()];
                for (b, z) in x.iter().enumerate() {
                    out[target[b]] = phase[b] * z.conj();
                }
                out
            }
            Omega::Dense(m) => {
                let c: Vec<Complex64> = x.iter().map(Complex64::conj).collect();
                m.mat_vec(&c)
            }
        }
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::Shape(format!(
                "time reversal acts on dimension {}, got {dim}",
                self.dim()
            )));
        }
        Ok(())
    }
}
