//! Real forms of complex-linear and antilinear maps on `ℂ^ℓ ≅ ℝ^{2ℓ}`.
//!
//! A vector `a + ib` lifts to `(a; b)`. A linear map `u + iv` lifts to
//! `[[u, −v], [v, u]]`, and the antilinear map `x ↦ w·conj(x)` lifts to
//! `[[u, v], [v, −u]]`. Multiplication by `i` lifts to `J = [[0, −I], [I, 0]]`.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::real::RealMatrix;

/// A complex `ℓ×ℓ` operator together with its `2ℓ×2ℓ` real lift.
#[derive(Clone, Debug)]
pub struct RealificationPair {
    pub complex_dim: usize,
    pub real_matrix: RealMatrix,
}

impl RealificationPair {
    /// Lift of the complex-linear map `w`.
    pub fn linear(w: &ComplexMatrix) -> Self {
        let l = w.rows();
        let mut r = RealMatrix::zeros(2 * l, 2 * l);
        for i in 0..l {
            for j in 0..l {
                let z = w[(i, j)];
                r[(i, j)] = z.re;
                r[(i, j + l)] = -z.im;
                r[(i + l, j)] = z.im;
                r[(i + l, j + l)] = z.re;
            }
        }
        Self {
            complex_dim: l,
            real_matrix: r,
        }
    }

    /// Lift of the antilinear map `x ↦ w·conj(x)`.
    pub fn antilinear(w: &ComplexMatrix) -> Self {
        let l = w.rows();
        let mut r = RealMatrix::zeros(2 * l, 2 * l);
        for i in 0..l {
            for j in 0..l {
                let z = w[(i, j)];
                r[(i, j)] = z.re;
                r[(i, j + l)] = z.im;
                r[(i + l, j)] = z.im;
                r[(i + l, j + l)] = -z.re;
            }
        }
        Self {
            complex_dim: l,
            real_matrix: r,
        }
    }

    /// `‖J R − R J‖_F`; zero exactly for complex-linear lifts.
    pub fn j_commutator_defect(&self) -> f64 {
        let j = j_matrix(self.complex_dim);
        j.matmul(&self.real_matrix)
            .frobenius_distance(&self.real_matrix.matmul(&j))
    }

    /// `‖J R + R J‖_F`; zero exactly for antilinear lifts.
    pub fn j_anticommutator_defect(&self) -> f64 {
        let j = j_matrix(self.complex_dim);
        let jr = j.matmul(&self.real_matrix);
        let mut rj = self.real_matrix.matmul(&j);
        for i in 0..rj.rows() {
            for k in 0..rj.cols() {
                rj[(i, k)] = -rj[(i, k)];
            }
        }
        jr.frobenius_distance(&rj)
    }
}

/// The lift of multiplication by `i`.
pub fn j_matrix(l: usize) -> RealMatrix {
    let mut j = RealMatrix::zeros(2 * l, 2 * l);
    for i in 0..l {
        j[(i, i + l)] = -1.0;
        j[(i + l, i)] = 1.0;
    }
    j
}

pub fn realify_vector(x: &[Complex64]) -> Vec<f64> {
    x.iter().map(|z| z.re).chain(x.iter().map(|z| z.im)).collect()
}

pub fn complexify_vector(v: &[f64]) -> Vec<Complex64> {
    let l = v.len() / 2;
    (0..l).map(|i| Complex64::new(v[i], v[i + l])).collect()
}

/// `J v` for a lifted vector.
pub fn apply_j(v: &[f64]) -> Vec<f64> {
    let l = v.len() / 2;
    let mut out = vec![0.0; v.len()];
    for i in 0..l {
        out[i] = -v[i + l];
        out[i + l] = v[i];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{haar_unitary, random_complex_matrix, seeded};

    #[test]
    fn unitary_lift_is_orthogonal_and_commutes_with_j() {
        let mut rng = seeded(3);
        let u = haar_unitary(&mut rng, 5);
        let lift = RealificationPair::linear(&u);
        assert!(lift.real_matrix.orthogonality_defect() < 1e-12);
        assert!(lift.j_commutator_defect() < 1e-12);
    }

    #[test]
    fn antilinear_lift_anticommutes_with_j() {
        let mut rng = seeded(4);
        let w = random_complex_matrix(&mut rng, 4, 4);
        let lift = RealificationPair::antilinear(&w);
        assert!(lift.j_anticommutator_defect() < 1e-12);
        // the lift acts like x ↦ w·conj(x)
        let x: Vec<Complex64> = (0..4).map(|k| Complex64::new(k as f64, 1.0 - k as f64)).collect();
        let xr = realify_vector(&x);
        let lifted: Vec<f64> = (0..8)
            .map(|i| (0..8).map(|j| lift.real_matrix[(i, j)] * xr[j]).sum())
            .collect();
        let direct = w.mat_vec(&x.iter().map(Complex64::conj).collect::<Vec<_>>());
        for (a, b) in complexify_vector(&lifted).iter().zip(&direct) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn j_is_multiplication_by_i() {
        let x = vec![Complex64::new(1.0, 2.0), Complex64::new(-3.0, 0.5)];
        let jx = complexify_vector(&apply_j(&realify_vector(&x)));
        for (a, b) in jx.iter().zip(&x) {
            assert_eq!(*a, b * Complex64::i());
        }
    }
}
