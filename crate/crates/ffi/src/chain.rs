use libc::{c_int, size_t};
use nconc::concurrence::{mixed_concurrence, pure_concurrence, TimeReversalOp};
use nconc::spin::{self, ChainSpec};

use crate::{boundary_from, guard, write_out, FfiError, NconcStatus};

/// Opaque spin-chain handle for the dense engine.
pub struct NconcChain {
    spec: ChainSpec,
}

/// Creates a chain `Σ(jx σˣσˣ + jy σʸσʸ + jz σᶻσᶻ) + h Σσᶻ`.
///
/// # Safety
/// `out` must be valid for a write. Free the handle with [`nconc_chain_free`].
#[no_mangle]
pub unsafe extern "C" fn nconc_chain_new(
    n: size_t,
    jx: f64,
    jy: f64,
    jz: f64,
    h: f64,
    boundary: i32,
    out: *mut *mut NconcChain,
) -> NconcStatus {
    guard(|| {
        if out.is_null() {
            return Err(FfiError::null("out"));
        }
        let spec = ChainSpec::xyz(n, jx, jy, jz, h, boundary_from(boundary)?);
        spec.validate()?;
        write_out(out, Box::into_raw(Box::new(NconcChain { spec })), "out")
    })
}

/// # Safety
/// `chain` must be null or a handle from [`nconc_chain_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nconc_chain_free(chain: *mut NconcChain) {
    if !chain.is_null() {
        drop(Box::from_raw(chain));
    }
}

/// Dense ground energy, ground-state concurrence and degeneracy flag.
/// The concurrence is 0 when the ground level is degenerate.
///
/// # Safety
/// `chain` must be a live handle; the out pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nconc_chain_ground(
    chain: *const NconcChain,
    energy: *mut f64,
    concurrence: *mut f64,
    degenerate: *mut c_int,
) -> NconcStatus {
    guard(|| {
        let chain = chain.as_ref().ok_or_else(|| FfiError::null("chain"))?;
        if energy.is_null() || concurrence.is_null() || degenerate.is_null() {
            return Err(FfiError::null("output pointer"));
        }
        let g = spin::ground(&chain.spec)?;
        let c = if g.degenerate {
            0.0
        } else {
            pure_concurrence(&g.state, &TimeReversalOp::spin_flip(chain.spec.n))
        };
        write_out(energy, g.energy, "energy")?;
        write_out(concurrence, c, "concurrence")?;
        write_out(degenerate, c_int::from(g.degenerate), "degenerate")
    })
}

/// Dense `ln Z` and thermal concurrence at `t = k_B T / |J|`.
///
/// # Safety
/// `chain` must be a live handle; the out pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nconc_chain_thermal(
    chain: *const NconcChain,
    t: f64,
    log_z: *mut f64,
    concurrence: *mut f64,
) -> NconcStatus {
    guard(|| {
        let chain = chain.as_ref().ok_or_else(|| FfiError::null("chain"))?;
        if log_z.is_null() || concurrence.is_null() {
            return Err(FfiError::null("output pointer"));
        }
        if !(t > 0.0 && t.is_finite()) {
            return Err(FfiError::invalid(format!("temperature must be positive, got {t}")));
        }
        let beta = 1.0 / (t * chain.spec.j().abs());
        let th = spin::thermal(&chain.spec, beta)?;
        let c = mixed_concurrence(&th.rho, &TimeReversalOp::spin_flip(chain.spec.n))?.value;
        write_out(log_z, th.log_z, "log_z")?;
        write_out(concurrence, c, "concurrence")
    })
}
