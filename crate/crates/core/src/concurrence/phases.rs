//! Balanced partitions and phases that cancel a weighted sum of unit phasors.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

/// Splits the indices of `lams` into `(S1, S2)` with
/// `0 ≤ Σ_{S1} − Σ_{S2} ≤ max(lams)`.
///
/// Starts from everything in `S1` and repeatedly moves the single element
/// that most reduces `|Σ_{S1} − Σ_{S2}|`, relabelling the sides when the
/// difference changes sign. At a local optimum every positive element of the
/// heavier side is at least the difference, which gives the bound.
pub fn subset_partition_balance(lams: &[f64]) -> (Vec<usize>, Vec<usize>) {
    let mut in_first = vec![true; lams.len()];
    let diff = |flags: &[bool]| -> f64 {
        lams.iter().zip(flags).map(|(x, &f)| if f { *x } else { -*x }).sum()
    };
    loop {
        let d = diff(&in_first);
        let best = (0..lams.len())
            .filter(|&i| in_first[i])
            .map(|i| (i, (d - 2.0 * lams[i]).abs()))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match best {
            Some((i, nd)) if nd < d => {
                in_first[i] = false;
                if diff(&in_first) < 0.0 {
                    in_first.iter_mut().for_each(|f| *f = !*f);
                }
            }
            _ => break,
        }
    }
    let s1 = (0..lams.len()).filter(|&i| in_first[i]).collect();
    let s2 = (0..lams.len()).filter(|&i| !in_first[i]).collect();
    (s1, s2)
}

#[derive(Clone, Debug, PartialEq)]
pub enum PhaseSolution {
    /// `θ_j` in `[0, 2π)` with `θ_0 = 0` and `Σ e^{iθ_j} λ_j = 0`.
    Angles(Vec<f64>),
    /// `λ_0 > Σ_{j≥1} λ_j`; the smallest reachable `|Σ e^{iθ_j} λ_j|` is `minimum`.
    Infeasible { minimum: f64 },
}

/// Phases cancelling `Σ e^{iθ_j} λ_j` for a nonincreasing nonnegative list.
///
/// The tail `λ_1, λ_2, …` is split into two balanced groups with sums
/// `t_0 ≥ t_1`; then `|t_0 − t_1| ≤ λ_0 ≤ t_0 + t_1`, so a triangle with sides
/// `λ_0, t_0, t_1` exists and its angle is found by bisection.
pub fn phase_zero_sum(lams: &[f64]) -> PhaseSolution {
    let Some(&l0) = lams.first() else {
        return PhaseSolution::Angles(Vec::new());
    };
    let tail = &lams[1..];
    let rest: f64 = tail.iter().sum();
    if rest < l0 {
        return PhaseSolution::Infeasible { minimum: l0 - rest };
    }
    if l0 == 0.0 {
        return PhaseSolution::Angles(vec![0.0; lams.len()]);
    }
    let (s1, s2) = subset_partition_balance(tail);
    let t0: f64 = s1.iter().map(|&i| tail[i]).sum();
    let t1: f64 = s2.iter().map(|&i| tail[i]).sum();

    // |t0 + e^{iθ} t1| decreases from t0 + t1 to t0 − t1 on [0, π]
    let g = |th: f64| (Complex64::new(t0, 0.0) + Complex64::from_polar(t1, th)).norm() - l0;
    let (mut lo, mut hi) = (0.0, PI);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-16 {
            break;
        }
    }
    let theta = 0.5 * (lo + hi);
    let psi = (Complex64::new(t0, 0.0) + Complex64::from_polar(t1, theta)).arg();

    // λ_0 e^{iψ} opposes t0 + e^{iθ} t1 after a rotation by π; then shift so θ_0 = 0
    let wrap = |a: f64| a.rem_euclid(TAU);
    let mut angles = vec![0.0; lams.len()];
    for &i in &s1 {
        angles[i + 1] = wrap(PI - psi);
    }
    for &i in &s2 {
        angles[i + 1] = wrap(theta + PI - psi);
    }
    PhaseSolution::Angles(angles)
}

/// `|Σ e^{iθ_j} λ_j|`.
pub fn phasor_sum(lams: &[f64], angles: &[f64]) -> f64 {
    lams.iter()
        .zip(angles)
        .map(|(&l, &a)| Complex64::from_polar(l, a))
        .sum::<Complex64>()
        .norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn difference(lams: &[f64], (s1, s2): &(Vec<usize>, Vec<usize>)) -> f64 {
        s1.iter().map(|&i| lams[i]).sum::<f64>() - s2.iter().map(|&i| lams[i]).sum::<f64>()
    }

    #[test]
    fn partition_examples() {
        assert_eq!(difference(&[1.0, 1.0], &subset_partition_balance(&[1.0, 1.0])), 0.0);
        assert_eq!(difference(&[3.0, 2.0, 1.0], &subset_partition_balance(&[3.0, 2.0, 1.0])), 0.0);
        assert_eq!(difference(&[5.0, 1.0, 1.0], &subset_partition_balance(&[5.0, 1.0, 1.0])), 3.0);
    }

    #[test]
    fn two_equal_weights() {
        match phase_zero_sum(&[1.0, 1.0]) {
            PhaseSolution::Angles(a) => {
                assert_eq!(a[0], 0.0);
                assert!((a[1] - PI).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equilateral() {
        match phase_zero_sum(&[1.0, 1.0, 1.0]) {
            PhaseSolution::Angles(a) => {
                let mut s = a.clone();
                s.sort_by(f64::total_cmp);
                assert!((s[1] - TAU / 3.0).abs() < 1e-12 && (s[2] - 2.0 * TAU / 3.0).abs() < 1e-12);
                assert!(phasor_sum(&[1.0, 1.0, 1.0], &a) < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dominant_leading_weight() {
        assert_eq!(
            phase_zero_sum(&[2.0, 0.5, 0.5]),
            PhaseSolution::Infeasible { minimum: 1.0 }
        );
    }

    #[test]
    fn triangle_angle_matches_law_of_cosines() {
        let lams = [1.0, 0.7, 0.6];
        let PhaseSolution::Angles(a) = phase_zero_sum(&lams) else {
            panic!()
        };
        assert!(phasor_sum(&lams, &a) < 1e-12);
        // relative angle of the two tail phasors is fixed by the side lengths
        let cos = (1.0f64 - 0.49 - 0.36) / (2.0 * 0.7 * 0.6);
        let rel = (a[2] - a[1]).rem_euclid(TAU);
        assert!((rel.cos() - cos).abs() < 1e-12);
    }

    #[test]
    fn zeros_and_padding() {
        let lams = [0.4, 0.3, 0.1, 0.0, 0.0];
        let PhaseSolution::Angles(a) = phase_zero_sum(&lams) else {
            panic!()
        };
        assert!(phasor_sum(&lams, &a) < 1e-12);
        assert_eq!(phase_zero_sum(&[0.0, 0.0]), PhaseSolution::Angles(vec![0.0, 0.0]));
    }
}
