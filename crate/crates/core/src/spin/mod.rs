//! Dense exact-diagonalization engine for spin chains.

pub mod chain;
pub mod engine;
pub mod hamiltonian;
pub mod measurement;
pub mod ops;
pub mod state;

pub use chain::{Boundary, ChainSpec};
pub use engine::{diagonalize, ground, log_partition, thermal, GroundResult, ThermalState};
pub use hamiltonian::build_hamiltonian;
pub use measurement::measurement_protocol;
pub use ops::{collective_sz, parity_op, time_reversal_apply, time_reversal_conjugate};
pub use state::{DensityMatrix, StateVector};
