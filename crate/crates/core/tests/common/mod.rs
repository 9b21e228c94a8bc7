//! Oracles shared by the integration tests and the acceptance harness.
#![allow(dead_code)]

use nconc::concurrence::{ensemble_concurrence, Ensemble, TimeReversalOp};
use nconc::linalg::ComplexMatrix;
use nconc::num_complex::Complex64;
use nconc::random::{gaussian_complex, haar_unitary, SeededRng};
use nconc::spin::{DensityMatrix, StateVector};

/// Gram–Schmidt on the columns of a square matrix.
pub fn orthonormalize(m: &ComplexMatrix) -> ComplexMatrix {
    let n = m.rows();
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = m.column(j);
        for _ in 0..2 {
            for c in &cols {
                let p: Complex64 = c.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (x, y) in v.iter_mut().zip(c) {
                    *x -= p * y;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        cols.push(v.into_iter().map(|z| z / norm).collect());
    }
    ComplexMatrix::from_columns(n, &cols).unwrap()
}

/// Unitary close to the identity: Gram–Schmidt of `I + εG` with Gaussian `G`.
pub fn near_identity_unitary(rng: &mut SeededRng, n: usize, eps: f64) -> ComplexMatrix {
    let m = ComplexMatrix::from_fn(n, n, |i, j| {
        let d = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
        d + gaussian_complex(rng) * eps
    });
    orthonormalize(&m)
}

/// Upper bound on the convex-roof concurrence: the best average over ensembles
/// `E·U` found by Haar sampling followed by an adaptive-step local descent.
/// Independent of the closed form; it only ever evaluates pure-state averages.
pub fn random_ensemble_search(
    rho: &DensityMatrix,
    theta: &TimeReversalOp,
    len: usize,
    rng: &mut SeededRng,
    haar_samples: usize,
    descent_steps: usize,
) -> f64 {
    let base = Ensemble::eigen_ensemble(rho, Some(len)).unwrap();
    let value = |u: &ComplexMatrix| ensemble_concurrence(&base.transform(u).unwrap(), theta).unwrap();
    let mut best_u = ComplexMatrix::identity(len);
    let mut best = value(&best_u);
    for _ in 0..haar_samples {
        let u = haar_unitary(rng, len);
        let v = value(&u);
        if v < best {
            best = v;
            best_u = u;
        }
    }
    // step grows on success and shrinks on failure, so it tracks the local scale
    let mut eps = 0.3;
    for _ in 0..descent_steps {
        let u = &best_u * &near_identity_unitary(rng, len, eps);
        let v = value(&u);
        if v < best {
            best = v;
            best_u = u;
            eps = (eps * 2.0).min(1.0);
        } else {
            eps *= 0.9;
        }
        if eps < 1e-9 {
            eps = 1e-3;
        }
    }
    best
}

/// Two-qubit Werner state `p|ψ⁻⟩⟨ψ⁻| + (1−p) I/4`.
pub fn werner(p: f64) -> DensityMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let singlet = [0.0, s, -s, 0.0].map(|x| Complex64::new(x, 0.0));
    let proj = ComplexMatrix::outer(&singlet, &singlet);
    let m = &proj.scale_real(p) + &ComplexMatrix::identity(4).scale_real((1.0 - p) / 4.0);
    DensityMatrix::new(m).unwrap()
}

/// Random `SU(2)^{⊗n}`; commutes with the full spin flip.
pub fn random_local_su2(rng: &mut SeededRng, n: usize) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(1);
    for _ in 0..n {
        let mut a = gaussian_complex(rng);
        let mut b = gaussian_complex(rng);
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        a /= norm;
        b /= norm;
        let site = ComplexMatrix::from_vec(2, 2, vec![a, -b.conj(), b, a.conj()]).unwrap();
        u = u.kron(&site);
    }
    u
}

pub fn ghz_pair_product(n: usize) -> StateVector {
    StateVector::ghz(n).tensor(&StateVector::ghz(n))
}
