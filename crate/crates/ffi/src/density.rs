use libc::size_t;
use nconc::concurrence::{mixed_concurrence, pure_concurrence, TimeReversalOp};
use nconc::linalg::ComplexMatrix;
use nconc::num_complex::Complex64;
use nconc::spin::{DensityMatrix, StateVector};

use crate::{guard, write_out, FfiError, NconcStatus};

/// Opaque validated density matrix on qubits.
pub struct NconcDensityMatrix {
    rho: DensityMatrix,
}

/// Reads `count` complex entries from split real/imaginary arrays (`im` may be null).
unsafe fn read_complex(count: usize, re: *const f64, im: *const f64) -> Result<Vec<Complex64>, FfiError> {
    if re.is_null() {
        return Err(FfiError::null("re"));
    }
    let re = std::slice::from_raw_parts(re, count);
    let im = if im.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(im, count))
    };
    Ok((0..count)
        .map(|k| Complex64::new(re[k], im.map_or(0.0, |v| v[k])))
        .collect())
}

fn qubit_dim(dim: usize) -> Result<(), FfiError> {
    if dim < 2 || !dim.is_power_of_two() {
        return Err(FfiError::invalid(format!("dimension must be a power of two >= 2, got {dim}")));
    }
    Ok(())
}

/// Builds a density matrix from row-major `dim × dim` entries. The matrix must
/// be Hermitian, positive semidefinite and of unit trace.
///
/// # Safety
/// `re` (and `im` unless null) must point to `dim*dim` doubles; `out` must be
/// valid for a write. Free with [`nconc_density_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn nconc_density_matrix_new(
    dim: size_t,
    re: *const f64,
    im: *const f64,
    out: *mut *mut NconcDensityMatrix,
) -> NconcStatus {
    guard(|| {
        if out.is_null() {
            return Err(FfiError::null("out"));
        }
        qubit_dim(dim)?;
        let count = dim.checked_mul(dim).ok_or_else(|| FfiError::invalid("dimension overflows"))?;
        let entries = read_complex(count, re, im)?;
        let rho = DensityMatrix::new(ComplexMatrix::from_vec(dim, dim, entries)?)?;
        write_out(out, Box::into_raw(Box::new(NconcDensityMatrix { rho })), "out")
    })
}

/// # Safety
/// `rho` must be null or a handle from [`nconc_density_matrix_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nconc_density_matrix_free(rho: *mut NconcDensityMatrix) {
    if !rho.is_null() {
        drop(Box::from_raw(rho));
    }
}

/// # Safety
/// `rho` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nconc_density_matrix_dim(rho: *const NconcDensityMatrix, out: *mut size_t) -> NconcStatus {
    guard(|| {
        let rho = rho.as_ref().ok_or_else(|| FfiError::null("rho"))?;
        write_out(out, rho.rho.dim(), "out")
    })
}

/// Closed-form n-concurrence with the spin flip on every qubit.
/// Fails for an odd number of qubits, where that flip is fermionic.
///
/// # Safety
/// `rho` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nconc_mixed_concurrence(rho: *const NconcDensityMatrix, out: *mut f64) -> NconcStatus {
    guard(|| {
        let rho = rho.as_ref().ok_or_else(|| FfiError::null("rho"))?;
        let n = rho.rho.n().ok_or_else(|| FfiError::invalid("dimension is not a power of two"))?;
        let c = mixed_concurrence(&rho.rho, &TimeReversalOp::spin_flip(n))?.value;
        write_out(out, c, "out")
    })
}

/// `|⟨ψ|ω|ψ*⟩|` for a normalized pure state with the full spin flip.
///
/// # Safety
/// `re` (and `im` unless null) must point to `dim` doubles; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nconc_pure_concurrence(
    dim: size_t,
    re: *const f64,
    im: *const f64,
    out: *mut f64,
) -> NconcStatus {
    guard(|| {
        qubit_dim(dim)?;
        let psi = StateVector::new(read_complex(dim, re, im)?)?;
        if (psi.norm() - 1.0).abs() > 1e-10 {
            return Err(FfiError::invalid(format!("state is not normalized (norm {})", psi.norm())));
        }
        let c = pure_concurrence(&psi, &TimeReversalOp::spin_flip(psi.n()));
        write_out(out, c, "out")
    })
}
