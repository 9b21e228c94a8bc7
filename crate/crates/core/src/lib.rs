//! Global n-concurrence of ground and thermal states of XX/XY spin chains.
//!
//! Two engines compute the same physics: a dense exact-diagonalization engine
//! ([`spin`]) and closed-form free-fermion formulas ([`freefermion`]). The
//! [`concurrence`] module holds the pure-state measure, the closed form for
//! mixed states and the constructive minimizing ensembles.

pub mod cli;
pub mod concurrence;
pub mod error;
pub mod experiments;
pub mod freefermion;
pub mod linalg;
pub mod random;
pub mod spin;
pub mod tol;

pub use error::{Error, Result};
pub use num_complex;
