//! C ABI for the `nconc` library.
//!
//! Every function returns an [`NconcStatus`] and writes results through out
//! pointers. On failure the message is kept in a thread-local slot readable
//! with [`nconc_last_error_message`]. Panics never cross the boundary.
//! Boundaries are passed as `int32_t` holding an [`NconcBoundary`] value.

mod chain;
mod density;

use std::cell::RefCell;
use std::ffi::CString;
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::{c_char, size_t};
use nconc::freefermion;
use nconc::spin::Boundary;

pub use chain::*;
pub use density::*;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NconcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    SizeCap = 3,
    Numerical = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NconcBoundary {
    Periodic = 0,
    Open = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

pub(crate) struct FfiError {
    status: NconcStatus,
    message: String,
}

impl FfiError {
    pub(crate) fn null(what: &str) -> Self {
        Self {
            status: NconcStatus::NullPointer,
            message: format!("{what} is null"),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Self {
            status: NconcStatus::InvalidArgument,
            message: message.into(),
        }
    }
}

impl From<nconc::Error> for FfiError {
    fn from(e: nconc::Error) -> Self {
        let status = if e.is_size_cap() {
            NconcStatus::SizeCap
        } else if e.is_numerical() {
            NconcStatus::Numerical
        } else {
            NconcStatus::InvalidArgument
        };
        Self {
            status,
            message: e.to_string(),
        }
    }
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `f`, records any error message, and converts panics into a status.
pub(crate) fn guard(f: impl FnOnce() -> Result<(), FfiError>) -> NconcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            NconcStatus::Ok
        }
        Ok(Err(e)) => {
            set_last_error(e.message);
            e.status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            NconcStatus::Panic
        }
    }
}

pub(crate) fn boundary_from(b: i32) -> Result<Boundary, FfiError> {
    match b {
        0 => Ok(Boundary::Periodic),
        1 => Ok(Boundary::Open),
        other => Err(FfiError::invalid(format!("unknown boundary {other}"))),
    }
}

/// # Safety
/// `out` must be null or valid for a write of `T`.
pub(crate) unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), FfiError> {
    if out.is_null() {
        return Err(FfiError::null(what));
    }
    out.write(value);
    Ok(())
}

fn check_even(n: usize) -> Result<(), FfiError> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(FfiError::invalid(format!("need an even number of sites >= 2, got {n}")));
    }
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn nconc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copies the last error message of this thread into `buf` (truncated, always
/// NUL-terminated when `len > 0`). Returns the buffer size needed for the full
/// message including the terminator, or 0 when there is no error.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes of writes.
#[no_mangle]
pub unsafe extern "C" fn nconc_last_error_message(buf: *mut c_char, len: size_t) -> size_t {
    LAST_ERROR.with(|slot| match slot.borrow().as_ref() {
        None => 0,
        Some(msg) => {
            let bytes = msg.as_bytes_with_nul();
            if !buf.is_null() && len > 0 {
                let k = bytes.len().min(len) - 1;
                std::ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, k);
                *buf.add(k) = 0;
            }
            bytes.len()
        }
    })
}

/// Field at which the XX ground state leaves the `S_z = 0` sector.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nconc_hcrit(n: size_t, j: f64, boundary: i32, out: *mut f64) -> NconcStatus {
    guard(|| {
        let b = boundary_from(boundary)?;
        check_even(n)?;
        write_out(out, freefermion::hcrit(n, j, b), "out")
    })
}

/// Zero-field XX ground energy.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nconc_ground_energy(n: size_t, j: f64, boundary: i32, out: *mut f64) -> NconcStatus {
    guard(|| {
        let b = boundary_from(boundary)?;
        check_even(n)?;
        write_out(out, freefermion::ground_energy(n, j, b), "out")
    })
}

/// `ln Z` of the XX chain.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nconc_log_partition(
    n: size_t,
    j: f64,
    h: f64,
    beta: f64,
    boundary: i32,
    out: *mut f64,
) -> NconcStatus {
    guard(|| {
        let b = boundary_from(boundary)?;
        check_even(n)?;
        let v = freefermion::log_partition(n, j, h, beta, b)?;
        write_out(out, v, "out")
    })
}

/// Thermal n-concurrence of the XX chain.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nconc_thermal_concurrence(
    n: size_t,
    j: f64,
    h: f64,
    beta: f64,
    boundary: i32,
    out: *mut f64,
) -> NconcStatus {
    guard(|| {
        let b = boundary_from(boundary)?;
        check_even(n)?;
        let v = freefermion::thermal_concurrence(n, j, h, beta, b)?;
        write_out(out, v, "out")
    })
}

/// Exact and large-`n` threshold temperatures (`k_B T / J`) at zero field.
///
/// # Safety
/// `exact` and `asymptotic` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nconc_threshold_temperature(
    n: size_t,
    j: f64,
    boundary: i32,
    exact: *mut f64,
    asymptotic: *mut f64,
) -> NconcStatus {
    guard(|| {
        let b = boundary_from(boundary)?;
        check_even(n)?;
        if exact.is_null() || asymptotic.is_null() {
            return Err(FfiError::null("output pointer"));
        }
        let t = freefermion::threshold_temperature(n, j, b)?;
        write_out(exact, t, "exact")?;
        write_out(asymptotic, freefermion::threshold_temperature_asymptotic(n, j), "asymptotic")
    })
}
