//! Dense complex linear algebra used by the spin and concurrence engines.

pub mod balance;
pub mod eig;
pub mod matrix;
pub mod real;
pub mod realify;
pub mod sqrt;
pub mod takagi;

pub use balance::orthogonal_diag_balance;
pub use eig::{hermitian_eig, HermitianEigen};
pub use matrix::{inner, norm, ComplexMatrix};
pub use real::RealMatrix;
pub use realify::RealificationPair;
pub use sqrt::psd_sqrt;
pub use takagi::{symmetric_congruence_diag, CongruenceDiag};
