#ifndef BVQ_H
#define BVQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BvqStatus {
  BVQ_STATUS_OK = 0,
  BVQ_STATUS_NULL_POINTER = 1,
  BVQ_STATUS_NOT_CANONICAL = 2,
  BVQ_STATUS_DOMAIN = 3,
  BVQ_STATUS_CONSTRAINT = 4,
  BVQ_STATUS_NOT_HERMITIAN = 5,
  BVQ_STATUS_BASIS_MISMATCH = 6,
  BVQ_STATUS_INTERNAL = 7,
  BVQ_STATUS_PANIC = 8,
} BvqStatus;

/**
 * Deterministic Haar-uniform generator of transformations.
 */
typedef struct BvqSampler BvqSampler;

/**
 * A transformation known to satisfy the canonicity constraints.
 */
typedef struct BvqTransform BvqTransform;

typedef struct BvqComplex {
  double re;
  double im;
} BvqComplex;

/**
 * Coefficients of `b = l00 + l01 a + l10 a† + l11 a†a`.
 */
typedef struct BvqCoefficients {
  struct BvqComplex l00;
  struct BvqComplex l01;
  struct BvqComplex l10;
  struct BvqComplex l11;
} BvqCoefficients;

/**
 * Canonicity residuals, one per constraint, as in the JSON validation report.
 */
typedef struct BvqResiduals {
  double eq6a;
  double eq6b;
  double eq6c;
  double eq6d;
} BvqResiduals;

/**
 * Rotation by `phi` about the unit axis `n`.
 */
typedef struct BvqAxisAngle {
  double phi;
  double n[3];
} BvqAxisAngle;

/**
 * Amplitudes on `|0⟩` and `|1⟩`.
 */
typedef struct BvqState {
  struct BvqComplex amp0;
  struct BvqComplex amp1;
} BvqState;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code. Never free it.
 */
const char *bvq_status_message(enum BvqStatus status);

/**
 * Default tolerance used by the library for canonicity checks.
 */
double bvq_default_tolerance(void);

/**
 * Computes the canonicity residuals of `l` and whether they are all within
 * `tolerance`. Either out pointer may be null if that result is not wanted.
 *
 * # Safety
 * `l` must point to a valid `BvqCoefficients`; non-null out pointers must be
 * valid for writes.
 */
enum BvqStatus bvq_validate(const struct BvqCoefficients *l,
                            double tolerance,
                            struct BvqResiduals *out_residuals,
                            bool *out_canonical);

/**
 * Certifies `l` at `tolerance` and returns a new handle in `*out`.
 *
 * # Safety
 * `l` must point to a valid `BvqCoefficients` and `out` must be valid for
 * writes. The handle must be released with `bvq_transform_free`.
 */
enum BvqStatus bvq_transform_new(const struct BvqCoefficients *l,
                                 double tolerance,
                                 struct BvqTransform **out);

/**
 * Returns a new handle to the identity transformation `b = a`.
 */
struct BvqTransform *bvq_transform_identity(void);

/**
 * Builds the transformation implemented by rotating `phi` about `n`.
 *
 * # Safety
 * `p` must point to a valid `BvqAxisAngle` and `out` must be valid for writes.
 */
enum BvqStatus bvq_transform_from_axis_angle(const struct BvqAxisAngle *p,
                                             struct BvqTransform **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `t` must be null or a handle returned by this library that has not been
 * freed yet.
 */
void bvq_transform_free(struct BvqTransform *t);

/**
 * # Safety
 * `t` must be a live handle and `out` must be valid for writes.
 */
enum BvqStatus bvq_transform_coefficients(const struct BvqTransform *t,
                                          struct BvqCoefficients *out);

/**
 * Returns the inverse transformation as a new handle.
 *
 * # Safety
 * `t` must be a live handle and `out` must be valid for writes.
 */
enum BvqStatus bvq_transform_invert(const struct BvqTransform *t, struct BvqTransform **out);

/**
 * Applies `inner` first, then `outer`, and returns the result as a new handle.
 *
 * # Safety
 * `outer` and `inner` must be live handles and `out` must be valid for writes.
 */
enum BvqStatus bvq_transform_compose(const struct BvqTransform *outer,
                                     const struct BvqTransform *inner,
                                     struct BvqTransform **out);

/**
 * Writes the 3×3 rotation matrix in row-major order.
 *
 * # Safety
 * `t` must be a live handle and `out` must point to 9 writable doubles.
 */
enum BvqStatus bvq_transform_rotation_matrix(const struct BvqTransform *t, double *out);

/**
 * Writes the canonical axis-angle form, with `phi` in `[0, π]`.
 *
 * # Safety
 * `t` must be a live handle and `out` must be valid for writes.
 */
enum BvqStatus bvq_transform_axis_angle(const struct BvqTransform *t, struct BvqAxisAngle *out);

/**
 * The vacuum of the transformed mode, `U|0⟩`.
 *
 * # Safety
 * `p` must point to a valid `BvqAxisAngle` and `out` must be valid for writes.
 */
enum BvqStatus bvq_transformed_vacuum(const struct BvqAxisAngle *p, struct BvqState *out);

/**
 * Diagonalizes `α a†a + β a + β̄ a†`. Writes the excitation energy and a
 * transformation mapping it onto `E (b†b - 1/2)` up to a constant.
 * `out_axis_angle` may be null.
 *
 * # Safety
 * `out_energy` and `out_coefficients` must be valid for writes; a non-null
 * `out_axis_angle` must be valid for writes.
 */
enum BvqStatus bvq_diagonalize(double alpha,
                               struct BvqComplex beta,
                               double *out_energy,
                               struct BvqCoefficients *out_coefficients,
                               struct BvqAxisAngle *out_axis_angle);

/**
 * A sampler seeded with `seed`; the same seed gives the same sequence as
 * `bvq sample --seed`.
 */
struct BvqSampler *bvq_sampler_new(uint64_t seed);

/**
 * Releases a sampler. Null is ignored.
 *
 * # Safety
 * `s` must be null or a sampler returned by `bvq_sampler_new` that has not
 * been freed yet.
 */
void bvq_sampler_free(struct BvqSampler *s);

/**
 * Draws the next transformation as a new handle.
 *
 * # Safety
 * `s` must be a live sampler not used concurrently from another thread, and
 * `out` must be valid for writes.
 */
enum BvqStatus bvq_sampler_next(struct BvqSampler *s, struct BvqTransform **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BVQ_H */
