//! Cyclic Jacobi eigensolver for dense Hermitian matrices.
//!
//! Before rotating, the matrix is split into the connected components of its
//! nonzero pattern. Spin Hamiltonians with a conserved quantity (magnetization,
//! parity) fall apart into independent blocks this way, and each block is
//! diagonalized on its own.

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, ZERO};
use crate::error::{Error, Result};
use crate::tol::TOL_HERM;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order and the matching orthonormal eigenvectors (as columns).
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, j: usize) -> Vec<Complex64> {
        self.vectors.column(j)
    }

    /// `V diag(f(λ)) V†`.
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.vectors.rows();
        let w: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &wk) in w.iter().enumerate() {
            if wk == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = self.vectors[(i, k)] * wk;
                if vik == ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += vik * self.vectors[(j, k)].conj();
                }
            }
        }
        out
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Fails with [`Error::NonHermitianInput`] when `‖m − m†‖_F > TOL_HERM·‖m‖_F`.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let scale = m.frobenius_norm();
    let defect = m.hermitian_defect();
    if defect > TOL_HERM * scale {
        return Err(Error::NonHermitianInput {
            defect: defect / scale,
        });
    }
    let a = m.hermitian_part();

    let mut pairs: Vec<(f64, Vec<usize>, Vec<Complex64>)> = Vec::with_capacity(n);
    for block in components(&a) {
        let k = block.len();
        let mut sub: Vec<Complex64> = Vec::with_capacity(k * k);
        for &i in &block {
            for &j in &block {
                sub.push(a[(i, j)]);
            }
        }
        let (vals, vecs) = jacobi(&mut sub, k);
        for (c, &val) in vals.iter().enumerate() {
            let col: Vec<Complex64> = (0..k).map(|r| vecs[r * k + c]).collect();
            pairs.push((val, block.clone(), col));
        }
    }
    // stable: ties keep block order, then in-block order
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut vectors = ComplexMatrix::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for (c, (val, rows, col)) in pairs.into_iter().enumerate() {
        values.push(val);
        for (r, z) in rows.into_iter().zip(col) {
            vectors[(r, c)] = z;
        }
    }
    Ok(HermitianEigen { values, vectors })
}

/// Connected components of the nonzero pattern, each sorted ascending.
fn components(a: &ComplexMatrix) -> Vec<Vec<usize>> {
    let n = a.rows();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if a[(i, j)] != ZERO {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(i);
    }
    groups
}

/// In-place cyclic Jacobi on a `k×k` Hermitian block (row-major).
/// Returns the diagonal and the accumulated unitary (row-major, eigenvectors as columns).
fn jacobi(a: &mut [Complex64], k: usize) -> (Vec<f64>, Vec<Complex64>) {
    let mut v = vec![ZERO; k * k];
    for i in 0..k {
        v[i * k + i] = Complex64::new(1.0, 0.0);
    }
    let scale: f64 = a.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
    if k > 1 && scale > 0.0 {
        for sweep in 0..MAX_SWEEPS {
            let mut off = 0.0;
            for p in 0..k {
                for q in (p + 1)..k {
                    off += a[p * k + q].norm_sqr();
                }
            }
            if off.sqrt() <= 1e-18 * scale {
                break;
            }
            for p in 0..k {
                for q in (p + 1)..k {
                    rotate(a, &mut v, k, p, q, sweep);
                }
            }
        }
    }
    let diag = (0..k).map(|i| a[i * k + i].re).collect();
    (diag, v)
}

#[inline]
fn rotate(a: &mut [Complex64], v: &mut [Complex64], k: usize, p: usize, q: usize, sweep: usize) {
    let z = a[p * k + q];
    let r = z.norm();
    if r == 0.0 {
        return;
    }
    let app = a[p * k + p].re;
    let aqq = a[q * k + q].re;
    let g = 100.0 * r;
    if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
        a[p * k + q] = ZERO;
        a[q * k + p] = ZERO;
        return;
    }
    let phase = z / r;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // U = diag(1, e^{-iφ}) · [[c, s], [-s, c]]
    let ph = phase.conj();
    let upp = Complex64::new(c, 0.0);
    let upq = Complex64::new(s, 0.0);
    let uqp = ph * (-s);
    let uqq = ph * c;

    for i in 0..k {
        let aip = a[i * k + p];
        let aiq = a[i * k + q];
        a[i * k + p] = aip * upp + aiq * uqp;
        a[i * k + q] = aip * upq + aiq * uqq;
        let vip = v[i * k + p];
        let viq = v[i * k + q];
        v[i * k + p] = vip * upp + viq * uqp;
        v[i * k + q] = vip * upq + viq * uqq;
    }
    for j in 0..k {
        let apj = a[p * k + j];
        let aqj = a[q * k + j];
        a[p * k + j] = upp.conj() * apj + uqp.conj() * aqj;
        a[q * k + j] = upq.conj() * apj + uqq.conj() * aqj;
    }
    a[p * k + q] = ZERO;
    a[q * k + p] = ZERO;
    a[p * k + p] = Complex64::new(app - t * r, 0.0);
    a[q * k + q] = Complex64::new(aqq + t * r, 0.0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_hermitian, seeded};

    fn reconstruction_residual(m: &ComplexMatrix, e: &HermitianEigen) -> f64 {
        (&e.apply_fn(|x| x) - m).frobenius_norm()
    }

    #[test]
    fn diagonal_input_sorted_with_permutation_vectors() {
        let m = ComplexMatrix::from_real_diag(&[3.0, 1.0, 2.0]);
        let e = hermitian_eig(&m).unwrap();
        assert_eq!(e.values, vec![1.0, 2.0, 3.0]);
        assert_eq!(e.vectors[(1, 0)].re, 1.0);
        assert_eq!(e.vectors[(2, 1)].re, 1.0);
        assert_eq!(e.vectors[(0, 2)].re, 1.0);
    }

    #[test]
    fn pauli_x_spectrum() {
        let m = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let e = hermitian_eig(&m).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-15);
        assert!((e.values[1] - 1.0).abs() < 1e-15);
        assert!(reconstruction_residual(&m, &e) < 1e-14);
    }

    #[test]
    fn random_hermitian_reconstructs() {
        let mut rng = seeded(11);
        for dim in [1, 2, 5, 8, 17] {
            let m = random_hermitian(&mut rng, dim);
            let e = hermitian_eig(&m).unwrap();
            let scale = m.frobenius_norm();
            assert!(reconstruction_residual(&m, &e) <= 1e-10 * scale);
            assert!(e.vectors.unitary_defect() < 1e-12);
            assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            hermitian_eig(&m),
            Err(Error::NonHermitianInput { .. })
        ));
    }

    #[test]
    fn block_structure_is_respected() {
        // two decoupled 2x2 blocks interleaved: {0,2} and {1,3}
        let m = ComplexMatrix::from_real(
            4,
            4,
            &[1.0, 0.0, 2.0, 0.0, 0.0, -1.0, 0.0, 0.5, 2.0, 0.0, 1.0, 0.0, 0.0, 0.5, 0.0, 3.0],
        )
        .unwrap();
        let e = hermitian_eig(&m).unwrap();
        assert!(reconstruction_residual(&m, &e) < 1e-13);
        for j in 0..4 {
            let v = e.vector(j);
            let on_even = v[0].norm() + v[2].norm() > 1e-12;
            let on_odd = v[1].norm() + v[3].norm() > 1e-12;
            assert!(on_even ^ on_odd);
        }
    }
}
