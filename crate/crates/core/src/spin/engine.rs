//! Ground and thermal states from a full dense diagonalization.

use super::chain::ChainSpec;
use super::hamiltonian::build_hamiltonian;
use super::state::{DensityMatrix, StateVector};
use crate::error::Result;
use crate::linalg::{hermitian_eig, HermitianEigen};
use crate::tol::DEGENERACY_REL;

#[derive(Clone, Debug)]
pub struct GroundResult {
    pub energy: f64,
    pub state: StateVector,
    pub gap_to_next: f64,
    /// `gap_to_next < DEGENERACY_REL·‖H‖`; the reported state is then one arbitrary
    /// member of the ground space.
    pub degenerate: bool,
}

#[derive(Clone, Debug)]
pub struct ThermalState {
    pub rho: DensityMatrix,
    pub log_z: f64,
}

impl ThermalState {
    pub fn z(&self) -> f64 {
        self.log_z.exp()
    }
}

pub fn diagonalize(spec: &ChainSpec) -> Result<HermitianEigen> {
    hermitian_eig(&build_hamiltonian(spec)?)
}

pub fn ground(spec: &ChainSpec) -> Result<GroundResult> {
    Ok(ground_from(&diagonalize(spec)?))
}

pub fn ground_from(eig: &HermitianEigen) -> GroundResult {
    let values = &eig.values;
    let radius = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let gap = values.get(1).map_or(f64::INFINITY, |e1| e1 - values[0]);
    let state = StateVector::new(eig.vector(0)).expect("eigenvector length").canonical_phase();
    GroundResult {
        energy: values[0],
        state,
        gap_to_next: gap,
        degenerate: gap < DEGENERACY_REL * radius || (radius == 0.0 && values.len() > 1),
    }
}

/// `ln Σ e^{−β E_j}` with the usual max shift.
pub fn log_partition(values: &[f64], beta: f64) -> f64 {
    let e0 = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let s: f64 = values.iter().map(|e| (-beta * (e - e0)).exp()).sum();
    -beta * e0 + s.ln()
}

pub fn thermal(spec: &ChainSpec, beta: f64) -> Result<ThermalState> {
    Ok(thermal_from(&diagonalize(spec)?, beta))
}

pub fn thermal_from(eig: &HermitianEigen, beta: f64) -> ThermalState {
    let e0 = eig.values[0];
    let log_z = log_partition(&eig.values, beta);
    let shift = -beta * e0 - log_z;
    let rho = eig.apply_fn(|e| (-beta * (e - e0) + shift).exp());
    ThermalState {
        rho: DensityMatrix::from_trusted(rho),
        log_z,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix;
    use crate::spin::chain::Boundary;

    #[test]
    fn infinite_temperature_is_maximally_mixed() {
        let spec = ChainSpec::xx(3, 1.0, 0.4, Boundary::Periodic);
        let t = thermal(&spec, 0.0).unwrap();
        assert!((t.log_z - 8f64.ln()).abs() < 1e-14);
        let diff = t.rho.matrix() - &ComplexMatrix::identity(8).scale_real(0.125);
        assert!(diff.frobenius_norm() < 1e-13);
    }

    #[test]
    fn low_temperature_projects_on_ground() {
        let spec = ChainSpec::xx(4, 1.0, 0.1, Boundary::Periodic);
        let g = ground(&spec).unwrap();
        assert!(!g.degenerate);
        let t = thermal(&spec, 200.0).unwrap();
        let p = DensityMatrix::from_pure(&g.state);
        assert!((t.rho.matrix() - p.matrix()).frobenius_norm() < 1e-10);
        assert!((t.rho.matrix().trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_site_open_ground_is_singlet() {
        let g = ground(&ChainSpec::xx(2, 1.0, 0.0, Boundary::Open)).unwrap();
        assert!((g.energy + 2.0).abs() < 1e-14);
        let a = g.state.amps();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(a[0].norm() < 1e-14 && a[3].norm() < 1e-14);
        assert!((a[1].re.abs() - s).abs() < 1e-14 && (a[1] + a[2]).norm() < 1e-14);
    }

    #[test]
    fn field_only_ground_is_flagged_degenerate_at_zero_field() {
        let g = ground(&ChainSpec::xx(2, 0.0, 0.0, Boundary::Open)).unwrap();
        assert!(g.degenerate);
    }
}
