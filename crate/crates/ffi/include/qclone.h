#ifndef QCLONE_H
#define QCLONE_H

/* Generated by cbindgen from the qclone-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum QcloneStatus {
  QCLONE_STATUS_OK = 0,
  QCLONE_STATUS_INVALID_ARGUMENT = 1,
  QCLONE_STATUS_NULL_POINTER = 2,
  QCLONE_STATUS_NUMERIC_FAILURE = 3,
} QcloneStatus;

/**
 * Opaque handle to one machine from the catalog.
 */
typedef struct QcloneCloner QcloneCloner;

/**
 * Measures of one machine run on one pure input qubit.
 */
typedef struct QcloneMeasures {
  /**
   * l1 coherence of the two-clone reduction.
   */
  double two_qubit_l1;
  /**
   * Concurrence of the two-clone reduction.
   */
  double two_qubit_concurrence;
  /**
   * l1 coherence of clone a.
   */
  double clone_l1;
  /**
   * Squared Hilbert-Schmidt distance from the input to clone a.
   */
  double copy_quality;
} QcloneMeasures;

/**
 * Result of seeded random sampling of the concurrence <= l1-coherence
 * bound on cross-coupled two-qubit states.
 */
typedef struct QcloneBoundReport {
  uint64_t samples;
  /**
   * Bound violations observed; soundness requires 0.
   */
  uint64_t violations;
  /**
   * Largest concurrence / l1-coherence ratio seen.
   */
  double max_ratio;
  /**
   * Largest closed-form vs spectral concurrence disagreement.
   */
  double max_closed_form_deviation;
} QcloneBoundReport;

/**
 * Optimum of the state-dependent machine's clone-coherence coefficient;
 * the maximum is sqrt(2) on the ridge theta + phi = pi/2.
 */
typedef struct QcloneOptimum {
  double best_value;
  double theta;
  double phi;
  double ridge_residual;
} QcloneOptimum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Crate version as a static NUL-terminated string.
 */
const char *qclone_version(void);

/**
 * Explanation of the most recent failure on this thread, or null if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *qclone_last_error(void);

/**
 * Creates the basis-copying machine.
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum QcloneStatus qclone_cloner_new_wz(struct QcloneCloner **out);

/**
 * Creates the equatorial-input machine.
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum QcloneStatus qclone_cloner_new_phase_covariant(struct QcloneCloner **out);

/**
 * Creates the state-independent optimal machine.
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum QcloneStatus qclone_cloner_new_bh_optimal(struct QcloneCloner **out);

/**
 * Creates the maximal-entanglement machine.
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum QcloneStatus qclone_cloner_new_coherence_machine(struct QcloneCloner **out);

/**
 * Creates the CNOT machine (no ancilla register).
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum QcloneStatus qclone_cloner_new_cnot(struct QcloneCloner **out);

/**
 * Creates the two-parameter machine. Parameters must satisfy
 * 0 <= mu <= 1/2 and 0 <= nu <= 2*sqrt(mu*(1-2*mu)).
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum QcloneStatus qclone_cloner_new_bh_general(double mu, double nu, struct QcloneCloner **out);

/**
 * Creates the six-amplitude state-dependent machine. Each branch's squared
 * amplitudes must sum to 1 within 1e-5.
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum QcloneStatus qclone_cloner_new_state_dependent(double a,
                                                    double b1,
                                                    double b2,
                                                    double a_t,
                                                    double b1_t,
                                                    double b2_t,
                                                    struct QcloneCloner **out);

/**
 * Releases a handle; null is a no-op.
 *
 * # Safety
 * `cloner` must be null or a handle from a `qclone_cloner_new_*` call,
 * not yet freed.
 */
void qclone_cloner_free(struct QcloneCloner *cloner);

/**
 * Runs the machine on the pure input `alpha |0> + beta |1>` (re/im parts;
 * must be normalized) and fills `out` with all four measures.
 *
 * # Safety
 * `cloner` must be a live handle; `out` must point to a `QcloneMeasures`.
 */
enum QcloneStatus qclone_cloner_measures(const struct QcloneCloner *cloner,
                                         double alpha_re,
                                         double alpha_im,
                                         double beta_re,
                                         double beta_im,
                                         struct QcloneMeasures *out);

/**
 * Mean copy quality over `points` midpoint samples uniform in |alpha|^2;
 * `points` must be at least 2.
 *
 * # Safety
 * `cloner` must be a live handle; `out` must point to a double.
 */
enum QcloneStatus qclone_cloner_average_copy_quality(const struct QcloneCloner *cloner,
                                                     size_t points,
                                                     double *out);

/**
 * Largest column-orthonormality violation of the machine's isometry.
 *
 * # Safety
 * `cloner` must be a live handle; `out` must point to a double.
 */
enum QcloneStatus qclone_cloner_isometry_violation(const struct QcloneCloner *cloner, double *out);

/**
 * Row count of the machine's isometry (there are always 2 columns);
 * 0 for a null handle.
 *
 * # Safety
 * `cloner` must be null or a live handle.
 */
size_t qclone_cloner_isometry_rows(const struct QcloneCloner *cloner);

/**
 * Copies the isometry into `out` as row-major (re, im) pairs: entry
 * (r, c) lands at out[4*r + 2*c] and out[4*r + 2*c + 1]. `len` must be
 * exactly 4 * qclone_cloner_isometry_rows(cloner).
 *
 * # Safety
 * `cloner` must be a live handle; `out` must point to `len` doubles.
 */
enum QcloneStatus qclone_cloner_isometry_copy(const struct QcloneCloner *cloner,
                                              double *out,
                                              size_t len);

/**
 * Draws `samples` seeded random cross-coupled states and checks the
 * concurrence <= l1-coherence bound on each; equal seeds reproduce
 * bit-identical reports.
 *
 * # Safety
 * `out` must point to a `QcloneBoundReport`.
 */
enum QcloneStatus qclone_bound_sample(size_t samples, uint64_t seed, struct QcloneBoundReport *out);

/**
 * Maximizes the state-dependent machine's clone-coherence coefficient;
 * `resolution` (>= 10) sizes the seeding grid.
 *
 * # Safety
 * `out` must point to a `QcloneOptimum`.
 */
enum QcloneStatus qclone_optimize_coherence(size_t resolution, struct QcloneOptimum *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCLONE_H */
