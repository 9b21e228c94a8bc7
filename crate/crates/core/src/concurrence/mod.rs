//! The n-concurrence: pure states, the closed form for mixed states, and
//! minimizing ensembles.

pub mod ensemble;
pub mod mixed;
pub mod phases;
pub mod pure;
pub mod theta;

pub use ensemble::{ensemble_concurrence, ensemble_transform, eta_matrix, Ensemble, EtaMatrix};
pub use mixed::{
    closed_form_value, hadamard, m_spectrum_direct, minimizing_ensemble, mixed_concurrence,
    MixedConcurrence,
};
pub use phases::{phase_zero_sum, phasor_sum, subset_partition_balance, PhaseSolution};
pub use pure::{concurrence_bilinear, preconcurrence, pure_concurrence};
pub use theta::{ThetaKind, TimeReversalOp};
