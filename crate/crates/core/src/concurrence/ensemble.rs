//! Subnormalized ensembles `ρ = Σ x_j x_j†`, their η-matrix and the right
//! action of `U(ℓ)`.

use num_complex::Complex64;

use super::pure::preconcurrence;
use super::theta::TimeReversalOp;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, inner, ComplexMatrix};
use crate::spin::DensityMatrix;
use crate::tol::{RANK_REL, TOL_UNITARY};

/// `η_jk = x_j†·ω·conj(x_k)`; complex symmetric for a bosonic `Θ`.
pub type EtaMatrix = ComplexMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct Ensemble {
    dim: usize,
    vectors: Vec<Vec<Complex64>>,
}

impl Ensemble {
    pub fn new(vectors: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = vectors.first().map(Vec::len).ok_or_else(|| Error::Shape("empty ensemble".into()))?;
        if vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::Shape("ensemble vectors differ in length".into()));
        }
        for (j, v) in vectors.iter().enumerate() {
            if v.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
                return Err(Error::NonFinite { row: j, col: 0 });
            }
        }
        Ok(Self { dim, vectors })
    }

    /// `√p_j v_j` for the eigenpairs of `ρ` above the rank cutoff (largest first),
    /// padded with zero vectors to `len` when given.
    pub fn eigen_ensemble(rho: &DensityMatrix, len: Option<usize>) -> Result<Self> {
        let eig = hermitian_eig(rho.matrix())?;
        let dim = rho.dim();
        let top = eig.values[dim - 1].max(0.0);
        let mut vectors: Vec<Vec<Complex64>> = (0..dim)
            .rev()
            .filter(|&j| eig.values[j] > RANK_REL * top)
            .map(|j| {
                let s = eig.values[j].sqrt();
                eig.vector(j).into_iter().map(|z| z * s).collect()
            })
            .collect();
        if vectors.is_empty() {
            return Err(Error::InvalidDensityMatrix("zero matrix".into()));
        }
        if let Some(l) = len {
            if l < vectors.len() {
                return Err(Error::Shape(format!(
                    "ensemble length {l} is below rank {}",
                    vectors.len()
                )));
            }
            vectors.resize(l, vec![Complex64::new(0.0, 0.0); dim]);
        }
        Ok(Self { dim, vectors })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }

    pub fn padded(mut self, len: usize) -> Self {
        if len > self.vectors.len() {
            self.vectors.resize(len, vec![Complex64::new(0.0, 0.0); self.dim]);
        }
        self
    }

    /// `Σ x_j x_j†`.
    pub fn density_matrix(&self) -> ComplexMatrix {
        let d = self.dim;
        let mut m = ComplexMatrix::zeros(d, d);
        for v in &self.vectors {
            for i in 0..d {
                if v[i] == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..d {
                    m[(i, k)] += v[i] * v[k].conj();
                }
            }
        }
        m
    }

    /// `‖Σ x_j x_j† − ρ‖_F`.
    pub fn reconstruction_error(&self, rho: &DensityMatrix) -> f64 {
        (&self.density_matrix() - rho.matrix()).frobenius_norm()
    }

    /// Right action `w_j = Σ_k x_k u_jk` (see [`ensemble_transform`]).
    pub fn transform(&self, u: &ComplexMatrix) -> Result<Self> {
        ensemble_transform(self, u)
    }
}

/// `w_j = Σ_k x_k u_jk`. Preserves `Σ x x†` and maps `η ↦ conj(u)·η·u†`.
pub fn ensemble_transform(e: &Ensemble, u: &ComplexMatrix) -> Result<Ensemble> {
    let l = e.len();
    if u.rows() != l || u.cols() != l {
        return Err(Error::Shape(format!(
            "transform must be {l}x{l}, got {}x{}",
            u.rows(),
            u.cols()
        )));
    }
    let defect = u.unitary_defect();
    if defect > TOL_UNITARY {
        return Err(Error::NonUnitary { defect });
    }
    let d = e.dim;
    let vectors = (0..l)
        .map(|j| {
            let mut w = vec![Complex64::new(0.0, 0.0); d];
            for k in 0..l {
                let c = u[(j, k)];
                if c == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for (wi, xi) in w.iter_mut().zip(&e.vectors[k]) {
                    *wi += xi * c;
                }
            }
            w
        })
        .collect();
    Ok(Ensemble { dim: d, vectors })
}

pub fn eta_matrix(e: &Ensemble, theta: &TimeReversalOp) -> Result<EtaMatrix> {
    theta.check_dim(e.dim)?;
    let flipped: Vec<Vec<Complex64>> = e.vectors.iter().map(|x| theta.apply(x)).collect();
    let l = e.len();
    Ok(ComplexMatrix::from_fn(l, l, |j, k| inner(&e.vectors[j], &flipped[k])))
}

/// `Σ_j |x_j†·ω·conj(x_j)|`.
pub fn ensemble_concurrence(e: &Ensemble, theta: &TimeReversalOp) -> Result<f64> {
    theta.check_dim(e.dim)?;
    Ok(e.vectors.iter().map(|x| preconcurrence(x, theta).norm()).sum())
}
