//! Numerical tolerances shared across the engines.

/// Relative Hermiticity tolerance accepted by the eigensolver.
pub const TOL_HERM: f64 = 1e-10;
/// Relative magnitude below which negative eigenvalues of a PSD matrix are clamped to zero.
pub const TOL_PSD: f64 = 1e-10;
/// Relative tolerance for complex symmetry of η.
pub const TOL_SYM: f64 = 1e-10;
/// Tolerance on `‖u u† − I‖_F` for ensemble transforms.
pub const TOL_UNITARY: f64 = 1e-9;
/// Ground gap (relative to the spectral radius of H) below which a level is treated as degenerate.
pub const DEGENERACY_REL: f64 = 1e-9;
/// Unit-trace tolerance for density matrices.
pub const TOL_TRACE: f64 = 1e-10;
/// Eigenvalues above `RANK_REL·λ_max` count towards the rank of a density matrix.
pub const RANK_REL: f64 = 1e-12;
/// `|T| ≤ ZERO_BRANCH_REL·tr ρ` routes the minimizing ensemble through the zero-concurrence construction.
pub const ZERO_BRANCH_REL: f64 = 1e-12;
/// Analytic levels closer than this (in units of J) are degenerate.
pub const LEVEL_DEGENERACY: f64 = 1e-12;
/// Largest qubit count accepted by the dense engine.
pub const DENSE_CAP: usize = 12;
/// Largest qubit count for full enumeration of the free-fermion spectrum.
pub const ENUMERATION_CAP: usize = 16;
