//! Unitary congruence `u·η·uᵀ = diag(λ)` of a complex symmetric matrix.
//!
//! The antilinear map `x ↦ η·conj(x)` has a real symmetric lift whose spectrum
//! comes in `±λ` pairs (the lift anticommutes with `J`). Picking one
//! eigenvector `v` per pair so that the set `{v, Jv}` stays orthonormal gives a
//! symplectic-orthogonal matrix, i.e. a unitary, and the chosen eigenvalues are
//! the (nonnegative) congruence values.

use num_complex::Complex64;

use super::eig::hermitian_eig;
use super::matrix::ComplexMatrix;
use super::realify::{apply_j, complexify_vector, RealificationPair};
use crate::error::{Error, Result};
use crate::tol::TOL_SYM;

/// Eigenvalues of the lift closer than this (relative to the largest) form one cluster.
const CLUSTER_REL: f64 = 1e-12;
/// Minimum residual norm for a candidate to join the pairing.
const PAIRING_RESIDUAL: f64 = 1e-4;

#[derive(Clone, Debug)]
pub struct CongruenceDiag {
    /// Unitary `u` with `u·η·uᵀ = diag(values)`.
    pub unitary: ComplexMatrix,
    /// Nonnegative, nonincreasing.
    pub values: Vec<f64>,
}

pub fn symmetric_congruence_diag(eta: &ComplexMatrix) -> Result<CongruenceDiag> {
    if !eta.is_square() {
        return Err(Error::Shape(format!(
            "congruence needs a square matrix, got {}x{}",
            eta.rows(),
            eta.cols()
        )));
    }
    let l = eta.rows();
    let scale = eta.frobenius_norm();
    let defect = eta.symmetric_defect();
    if defect > TOL_SYM * scale {
        return Err(Error::NotSymmetric {
            defect: defect / scale,
        });
    }
    let sym = ComplexMatrix::from_fn(l, l, |i, j| (eta[(i, j)] + eta[(j, i)]) * 0.5);
    let lift = RealificationPair::antilinear(&sym).real_matrix;
    let eig = hermitian_eig(&lift.to_complex())?;

    let top = eig.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let cluster_tol = CLUSTER_REL * top;

    // descending order of lift eigenvalues, grouped into clusters
    let order: Vec<usize> = (0..2 * l).rev().collect();
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &k in &order {
        match clusters.last_mut() {
            Some(c) if eig.values[*c.last().unwrap()] - eig.values[k] <= cluster_tol => c.push(k),
            _ => clusters.push(vec![k]),
        }
    }

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(2 * l);
    let mut chosen: Vec<Vec<f64>> = Vec::with_capacity(l);
    'clusters: for cluster in clusters {
        let mut candidates: Vec<Vec<f64>> = cluster
            .iter()
            .map(|&k| eig.vectors.column(k).iter().map(|z| z.re).collect())
            .collect();
        while !candidates.is_empty() {
            if chosen.len() == l {
                break 'clusters;
            }
            let residuals: Vec<Vec<f64>> = candidates
                .iter()
                .map(|c| orthogonalize(c, &basis))
                .collect();
            let (best, norm) = residuals
                .iter()
                .enumerate()
                .map(|(i, r)| (i, dot(r, r).sqrt()))
                .fold((0, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if norm < PAIRING_RESIDUAL {
                break;
            }
            let v: Vec<f64> = residuals[best].iter().map(|x| x / norm).collect();
            let jv = orthogonalize(&apply_j(&v), &basis);
            let jn = dot(&jv, &jv).sqrt();
            basis.push(v.clone());
            basis.push(jv.iter().map(|x| x / jn).collect());
            chosen.push(v);
            candidates.remove(best);
        }
    }
    if chosen.len() < l {
        return Err(Error::DegeneratePairing {
            found: chosen.len(),
            needed: l,
        });
    }

    let mut pairs: Vec<(f64, Vec<Complex64>)> = chosen
        .iter()
        .map(|v| {
            let lv: Vec<f64> = (0..2 * l)
                .map(|i| (0..2 * l).map(|j| lift[(i, j)] * v[j]).sum())
                .collect();
            (dot(v, &lv).max(0.0), complexify_vector(v))
        })
        .collect();
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));

    // columns z_j satisfy η·conj(z_j) = λ_j z_j; u = Z†
    let unitary = ComplexMatrix::from_fn(l, l, |i, j| pairs[i].1[j].conj());
    let values = pairs.into_iter().map(|p| p.0).collect();
    Ok(CongruenceDiag { unitary, values })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Two passes of modified Gram–Schmidt against an orthonormal set.
fn orthogonalize(v: &[f64], basis: &[Vec<f64>]) -> Vec<f64> {
    let mut r = v.to_vec();
    for _ in 0..2 {
        for b in basis {
            let c = dot(&r, b);
            for (x, y) in r.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
    }
    r
}
