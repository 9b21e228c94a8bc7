#ifndef NCONC_H
#define NCONC_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NconcBoundary {
  NCONC_BOUNDARY_PERIODIC = 0,
  NCONC_BOUNDARY_OPEN = 1,
} NconcBoundary;

typedef enum NconcStatus {
  NCONC_STATUS_OK = 0,
  NCONC_STATUS_NULL_POINTER = 1,
  NCONC_STATUS_INVALID_ARGUMENT = 2,
  NCONC_STATUS_SIZE_CAP = 3,
  NCONC_STATUS_NUMERICAL = 4,
  NCONC_STATUS_PANIC = 5,
} NconcStatus;

/**
 * Opaque spin-chain handle for the dense engine.
 */
typedef struct NconcChain NconcChain;

/**
 * Opaque validated density matrix on qubits.
 */
typedef struct NconcDensityMatrix NconcDensityMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *nconc_version(void);

/**
 * Copies the last error message of this thread into `buf` (truncated, always
 * NUL-terminated when `len > 0`). Returns the buffer size needed for the full
 * message including the terminator, or 0 when there is no error.
 *
 * # Safety
 * `buf` must be null or valid for `len` bytes of writes.
 */
size_t nconc_last_error_message(char *buf, size_t len);

/**
 * Field at which the XX ground state leaves the `S_z = 0` sector.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum NconcStatus nconc_hcrit(size_t n, double j, int32_t boundary, double *out);

/**
 * Zero-field XX ground energy.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum NconcStatus nconc_ground_energy(size_t n, double j, int32_t boundary, double *out);

/**
 * `ln Z` of the XX chain.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum NconcStatus nconc_log_partition(size_t n,
                                     double j,
                                     double h,
                                     double beta,
                                     int32_t boundary,
                                     double *out);

/**
 * Thermal n-concurrence of the XX chain.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum NconcStatus nconc_thermal_concurrence(size_t n,
                                           double j,
                                           double h,
                                           double beta,
                                           int32_t boundary,
                                           double *out);

/**
 * Exact and large-`n` threshold temperatures (`k_B T / J`) at zero field.
 *
 * # Safety
 * `exact` and `asymptotic` must be valid for writes.
 */
enum NconcStatus nconc_threshold_temperature(size_t n,
                                             double j,
                                             int32_t boundary,
                                             double *exact,
                                             double *asymptotic);

/**
 * Creates a chain `Σ(jx σˣσˣ + jy σʸσʸ + jz σᶻσᶻ) + h Σσᶻ`.
 *
 * # Safety
 * `out` must be valid for a write. Free the handle with [`nconc_chain_free`].
 */
enum NconcStatus nconc_chain_new(size_t n,
                                 double jx,
                                 double jy,
                                 double jz,
                                 double h,
                                 int32_t boundary,
                                 struct NconcChain **out);

/**
 * # Safety
 * `chain` must be null or a handle from [`nconc_chain_new`] not yet freed.
 */
void nconc_chain_free(struct NconcChain *chain);

/**
 * Dense ground energy, ground-state concurrence and degeneracy flag.
 * The concurrence is 0 when the ground level is degenerate.
 *
 * # Safety
 * `chain` must be a live handle; the out pointers must be valid for writes.
 */
enum NconcStatus nconc_chain_ground(const struct NconcChain *chain,
                                    double *energy,
                                    double *concurrence,
                                    int *degenerate);

/**
 * Dense `ln Z` and thermal concurrence at `t = k_B T / |J|`.
 *
 * # Safety
 * `chain` must be a live handle; the out pointers must be valid for writes.
 */
enum NconcStatus nconc_chain_thermal(const struct NconcChain *chain,
                                     double t,
                                     double *log_z,
                                     double *concurrence);

/**
 * Builds a density matrix from row-major `dim × dim` entries. The matrix must
 * be Hermitian, positive semidefinite and of unit trace.
 *
 * # Safety
 * `re` (and `im` unless null) must point to `dim*dim` doubles; `out` must be
 * valid for a write. Free with [`nconc_density_matrix_free`].
 */
enum NconcStatus nconc_density_matrix_new(size_t dim,
                                          const double *re,
                                          const double *im,
                                          struct NconcDensityMatrix **out);

/**
 * # Safety
 * `rho` must be null or a handle from [`nconc_density_matrix_new`] not yet freed.
 */
void nconc_density_matrix_free(struct NconcDensityMatrix *rho);

/**
 * # Safety
 * `rho` must be a live handle and `out` valid for a write.
 */
enum NconcStatus nconc_density_matrix_dim(const struct NconcDensityMatrix *rho, size_t *out);

/**
 * Closed-form n-concurrence with the spin flip on every qubit.
 * Fails for an odd number of qubits, where that flip is fermionic.
 *
 * # Safety
 * `rho` must be a live handle and `out` valid for a write.
 */
enum NconcStatus nconc_mixed_concurrence(const struct NconcDensityMatrix *rho, double *out);

/**
 * `|⟨ψ|ω|ψ*⟩|` for a normalized pure state with the full spin flip.
 *
 * # Safety
 * `re` (and `im` unless null) must point to `dim` doubles; `out` must be valid for a write.
 */
enum NconcStatus nconc_pure_concurrence(size_t dim,
                                        const double *re,
                                        const double *im,
                                        double *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* NCONC_H */
