use std::f64::consts::{FRAC_PI_4, PI};

/// Single-mode data of the periodic XY chain after the Jordan–Wigner and
/// Fourier steps.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModeData {
    pub k: usize,
    /// `(jx + jy) cos(πk/n) − h`.
    pub epsilon: f64,
    /// `(jx − jy) sin(πk/n)`.
    pub delta: f64,
    /// Bogoliubov angle, `tan 2θ = δ/ε`, principal branch in `(−π/4, π/4]`.
    pub theta: f64,
}

impl ModeData {
    pub fn new(n: usize, k: usize, jx: f64, jy: f64, h: f64) -> Self {
        let q = PI * k as f64 / n as f64;
        let epsilon = (jx + jy) * q.cos() - h;
        let delta = if k == 0 || k == n {
            0.0
        } else {
            (jx - jy) * q.sin()
        };
        let theta = if epsilon != 0.0 {
            0.5 * (delta / epsilon).atan()
        } else if delta != 0.0 {
            FRAC_PI_4
        } else {
            0.0
        };
        Self {
            k,
            epsilon,
            delta,
            theta,
        }
    }

    /// `√(ε² + δ²)`; the pair block has levels `±2·quasi_energy` and two zeros.
    pub fn quasi_energy(&self) -> f64 {
        self.epsilon.hypot(self.delta)
    }
}

/// Modes `k = 0..=n`.
pub fn xy_mode_data(n: usize, jx: f64, jy: f64, h: f64) -> Vec<ModeData> {
    (0..=n).map(|k| ModeData::new(n, k, jx, jy, h)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isotropic_has_no_pairing() {
        for m in xy_mode_data(8, 1.0, 1.0, 0.3) {
            assert_eq!(m.delta, 0.0);
            assert_eq!(m.theta, 0.0);
        }
    }

    #[test]
    fn epsilon_changes_sign_at_field_match() {
        let modes = xy_mode_data(8, 1.0, 1.0, 2.0 * (PI * 3.0 / 8.0).cos());
        assert!(modes[3].epsilon.abs() < 1e-15);
        assert!(modes[2].epsilon > 0.0 && modes[4].epsilon < 0.0);
    }

    #[test]
    fn bogoliubov_angle_branch() {
        for m in xy_mode_data(6, 1.5, 0.5, 0.2) {
            assert!(m.theta > -FRAC_PI_4 && m.theta <= FRAC_PI_4);
            if m.epsilon != 0.0 {
                assert!(((2.0 * m.theta).tan() - m.delta / m.epsilon).abs() < 1e-12);
            }
        }
    }
}
