use super::real::RealMatrix;
use crate::error::{Error, Result};

const ANGLE_TOL: f64 = 1e-12;

/// Orthogonal `o` such that every diagonal entry of `o·a·oᵀ` equals `tr(a)/ℓ`.
///
/// Each step picks one diagonal entry below the mean and one above it, then
/// rotates in that coordinate plane by the angle (found by bisection on
/// `[0, π/2]`) that brings the low entry exactly to the mean. That entry is
/// never touched again, so at most `ℓ − 1` rotations are needed.
pub fn orthogonal_diag_balance(a: &RealMatrix) -> Result<RealMatrix> {
    if a.rows() != a.cols() {
        return Err(Error::Shape(format!(
            "balancing needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let l = a.rows();
    let mut o = RealMatrix::identity(l);
    if l < 2 {
        return Ok(o);
    }
    let target = a.trace() / l as f64;
    let scale = (0..l)
        .flat_map(|i| (0..l).map(move |j| (i, j)))
        .map(|(i, j)| a[(i, j)].abs())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let done_tol = 1e-14 * scale;

    let mut cur = a.clone();
    let mut fixed = vec![false; l];
    for _ in 0..l {
        let free: Vec<usize> = (0..l).filter(|&k| !fixed[k]).collect();
        let low = free
            .iter()
            .copied()
            .filter(|&k| cur[(k, k)] < target - done_tol)
            .min_by(|&x, &y| cur[(x, x)].total_cmp(&cur[(y, y)]));
        let high = free
            .iter()
            .copied()
            .filter(|&k| cur[(k, k)] > target + done_tol)
            .max_by(|&x, &y| cur[(x, x)].total_cmp(&cur[(y, y)]));
        let (i, j) = match (low, high) {
            (Some(i), Some(j)) => (i, j),
            _ => break,
        };
        let (aii, ajj) = (cur[(i, i)], cur[(j, j)]);
        let cross = cur[(i, j)] + cur[(j, i)];
        // [R a Rᵀ]_ii along the rotation; f(0) < target < f(π/2)
        let f = |t: f64| {
            let (s, c) = t.sin_cos();
            c * c * aii + s * s * ajj + s * c * cross
        };
        let (mut lo, mut hi) = (0.0_f64, std::f64::consts::FRAC_PI_2);
        while hi - lo > ANGLE_TOL {
            let mid = 0.5 * (lo + hi);
            if f(mid) < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let t = 0.5 * (lo + hi);
        let rot = givens(l, i, j, t);
        cur = rot.matmul(&cur).matmul(&rot.transpose());
        o = rot.matmul(&o);
        fixed[i] = true;
        if (cur[(j, j)] - target).abs() <= done_tol {
            fixed[j] = true;
        }
    }
    Ok(o)
}

/// Rotation acting as `[[c, s], [−s, c]]` on coordinates `(i, j)`.
fn givens(l: usize, i: usize, j: usize, t: f64) -> RealMatrix {
    let (s, c) = t.sin_cos();
    let mut r = RealMatrix::identity(l);
    r[(i, i)] = c;
    r[(i, j)] = s;
    r[(j, i)] = -s;
    r[(j, j)] = c;
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::seeded;
    use rand::Rng;

    fn balanced_diag(a: &RealMatrix, o: &RealMatrix) -> Vec<f64> {
        o.matmul(a).matmul(&o.transpose()).diagonal()
    }

    #[test]
    fn already_balanced_is_identity() {
        let a = RealMatrix::from_diag(&[1.0, 1.0]);
        assert_eq!(orthogonal_diag_balance(&a).unwrap(), RealMatrix::identity(2));
    }

    #[test]
    fn two_by_two_quarter_turn() {
        let a = RealMatrix::from_diag(&[0.0, 2.0]);
        let o = orthogonal_diag_balance(&a).unwrap();
        let d = balanced_diag(&a, &o);
        assert!((d[0] - 1.0).abs() < 1e-11 && (d[1] - 1.0).abs() < 1e-11);
        // [R a Rᵀ]_00 = 2 sin²t at t = π/4
        assert!((o[(0, 0)] - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-11);
    }

    #[test]
    fn random_real_matrices_balance() {
        let mut rng = seeded(5);
        for l in [3, 6, 9] {
            let data: Vec<f64> = (0..l * l).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let a = RealMatrix::from_vec(l, l, data).unwrap();
            let o = orthogonal_diag_balance(&a).unwrap();
            let mean = a.trace() / l as f64;
            assert!(o.orthogonality_defect() < 1e-12);
            for d in balanced_diag(&a, &o) {
                assert!((d - mean).abs() < 1e-9, "{d} vs {mean}");
            }
        }
    }

    #[test]
    fn rejects_rectangular() {
        assert!(orthogonal_diag_balance(&RealMatrix::zeros(2, 3)).is_err());
    }
}
