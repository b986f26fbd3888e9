/* SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 The roguewave Authors
 *
 * C interface to libroguewave: closed-form rogue-wave fields, Haar wavelet
 * analysis, compressive point sampling with l1 recovery, and V-shape
 * detection.
 *
 * Objects are opaque handles created by rw_*_create / rw_*_make / rw_*_load
 * style functions and released with the matching rw_*_free. Every fallible
 * call returns an rw_status; on failure rw_last_error() holds a message for
 * the calling thread until its next failing call. Output pointers are only
 * written on success, except where RW_ERR_NOT_CONVERGED is documented to
 * carry a partial result.
 */
#ifndef ROGUEWAVE_H
#define ROGUEWAVE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ROGUEWAVE_BUILDING)
#    define RW_API __declspec(dllexport)
#  else
#    define RW_API __declspec(dllimport)
#  endif
#else
#  define RW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rw_status {
  RW_OK = 0,
  RW_ERR_INVALID_ARGUMENT = 1,
  RW_ERR_LENGTH_NOT_POWER_OF_TWO = 2,
  RW_ERR_SCALE_OUT_OF_RANGE = 3,
  RW_ERR_M_TOO_LARGE = 4,
  RW_ERR_PLAN_MISMATCH = 5,
  RW_ERR_GRID_MISMATCH = 6,
  RW_ERR_ZERO_REFERENCE = 7,
  RW_ERR_DEGENERATE_SPECTRUM = 8,
  RW_ERR_STEP_TOO_LARGE = 9,
  RW_ERR_NON_FINITE_VALUE = 10,
  RW_ERR_NOT_CONVERGED = 11,
  RW_ERR_IO = 12,
  RW_ERR_PARSE = 13,
  RW_ERR_INTERNAL = 99
} rw_status;

typedef enum rw_soliton { RW_PEREGRINE = 0, RW_AKHMEDIEV_PEREGRINE = 1 } rw_soliton;

typedef struct rw_field rw_field;
typedef struct rw_plan rw_plan;
typedef struct rw_measurements rw_measurements;
typedef struct rw_scaleogram rw_scaleogram;
typedef struct rw_recovery rw_recovery;

typedef struct rw_bp_config {
  double feasibility_tol;    /* default 1e-10 */
  int max_iterations;        /* default 50000 */
  double relative_threshold; /* ADMM shrinkage, relative to ||A^T g||_inf */
} rw_bp_config;

typedef struct rw_detection_config {
  double support_fraction;
  int apex_scales;
  double ridge_fraction;
  double threshold;
  int max_scale;
  double flat_tolerance;
} rw_detection_config;

typedef struct rw_detection_report {
  double time;
  double triangularity;
  double apex_x;
  double apex_confidence;
  int alarm;
  double threshold_used;
  int degenerate; /* flat background: score 0, no alarm */
} rw_detection_report;

RW_API const char* rw_version(void);
RW_API const char* rw_status_name(rw_status status);
RW_API const char* rw_last_error(void);

/* ---- signal model ------------------------------------------------------ */

RW_API rw_status rw_soliton_parse(const char* name, rw_soliton* out);
RW_API rw_status rw_soliton_value(rw_soliton kind, double x, double t, double* re, double* im);

/* Closed-form field on the grid x_j = x_min + j (x_max - x_min) / n,
 * evaluated at x_j - center. n must be a power of two. */
RW_API rw_status rw_field_evaluate(rw_soliton kind, size_t n, double x_min, double x_max,
                                   double t, double center, rw_field** out);
RW_API rw_status rw_field_create(size_t n, double x_min, double x_max, double t,
                                 const double* re, const double* im, rw_field** out);
RW_API void rw_field_free(rw_field* field);
RW_API size_t rw_field_size(const rw_field* field);
RW_API double rw_field_time(const rw_field* field);
RW_API void rw_field_grid(const rw_field* field, size_t* n, double* x_min, double* x_max);
/* re and im must each hold rw_field_size() doubles; either may be NULL. */
RW_API void rw_field_values(const rw_field* field, double* re, double* im);
RW_API double rw_field_max_modulus(const rw_field* field);
RW_API double rw_field_norm(const rw_field* field);
RW_API rw_status rw_field_propagate(const rw_field* field, double t_target, size_t n_steps,
                                    rw_field** out);
RW_API rw_status rw_field_save(const rw_field* field, const char* path);
RW_API rw_status rw_field_load(const char* path, rw_field** out);
/* |psi| line plot of `count` fields sharing the first field's grid. */
RW_API rw_status rw_fields_save_svg(const rw_field* const* fields, const char* const* labels,
                                    size_t count, const char* path);

/* ---- wavelet ------------------------------------------------------------ */

RW_API rw_status rw_haar_dwt(const double* signal, size_t n, double* coeffs);
RW_API rw_status rw_haar_idwt(const double* coeffs, size_t n, double* signal);
/* Positions of a raw-signal scaleogram are labelled 0..n-1. */
RW_API rw_status rw_haar_cwt(const double* signal, size_t n, const int* scales, size_t n_scales,
                             rw_scaleogram** out);
/* Scaleogram of |psi| - 1 over scales 1..max_scale (clamped to n/2). */
RW_API rw_status rw_scaleogram_from_field(const rw_field* field, int max_scale,
                                          rw_scaleogram** out);
RW_API void rw_scaleogram_free(rw_scaleogram* sg);
RW_API size_t rw_scaleogram_rows(const rw_scaleogram* sg);
RW_API size_t rw_scaleogram_cols(const rw_scaleogram* sg);
RW_API int rw_scaleogram_scale(const rw_scaleogram* sg, size_t row);
RW_API rw_status rw_scaleogram_row(const rw_scaleogram* sg, size_t row, double* out);
RW_API rw_status rw_scaleogram_save_csv(const rw_scaleogram* sg, const char* path);
RW_API rw_status rw_scaleogram_save_svg(const rw_scaleogram* sg, const char* path);

/* ---- compressive sampling and recovery --------------------------------- */

RW_API rw_status rw_plan_make(size_t n, size_t m, uint64_t seed, rw_plan** out);
RW_API rw_status rw_plan_create(size_t n, uint64_t seed, const size_t* indices, size_t m,
                                rw_plan** out);
RW_API void rw_plan_free(rw_plan* plan);
RW_API size_t rw_plan_n(const rw_plan* plan);
RW_API size_t rw_plan_m(const rw_plan* plan);
RW_API uint64_t rw_plan_seed(const rw_plan* plan);
RW_API void rw_plan_indices(const rw_plan* plan, size_t* out);
RW_API rw_status rw_plan_coherence(const rw_plan* plan, double* out);
RW_API rw_status rw_plan_save(const rw_plan* plan, const char* path);
RW_API rw_status rw_plan_load(const char* path, rw_plan** out);

RW_API rw_status rw_sample(const rw_field* field, const rw_plan* plan, rw_measurements** out);
RW_API void rw_measurements_free(rw_measurements* meas);
RW_API size_t rw_measurements_count(const rw_measurements* meas);
RW_API double rw_measurements_time(const rw_measurements* meas);
RW_API void rw_measurements_values(const rw_measurements* meas, double* re, double* im);
/* Copy of the plan the measurements were taken with. */
RW_API rw_status rw_measurements_plan(const rw_measurements* meas, rw_plan** out);
RW_API rw_status rw_measurements_save(const rw_measurements* meas, const char* path);
RW_API rw_status rw_measurements_load(const char* path, rw_measurements** out);

RW_API void rw_bp_config_default(rw_bp_config* cfg);

/* min ||c||_1 s.t. gather(plan, haar_idwt(c)) = g. `coeffs` receives
 * rw_plan_n() values. Returns RW_ERR_NOT_CONVERGED, with every output filled
 * from the best iterate, when the iteration budget runs out. */
RW_API rw_status rw_basis_pursuit(const double* g, size_t m, const rw_plan* plan,
                                  const rw_bp_config* cfg, double* coeffs, int* iterations,
                                  double* residual);

/* Recovers the full field on [x_min, x_max). On RW_ERR_NOT_CONVERGED *out
 * still holds the partial result and must be freed. */
RW_API rw_status rw_recover(const rw_measurements* meas, double x_min, double x_max,
                            const rw_bp_config* cfg, rw_recovery** out);
RW_API void rw_recovery_free(rw_recovery* rec);
RW_API rw_status rw_recovery_field(const rw_recovery* rec, rw_field** out);
RW_API int rw_recovery_iterations(const rw_recovery* rec);
RW_API double rw_recovery_residual(const rw_recovery* rec);
RW_API int rw_recovery_converged(const rw_recovery* rec);
/* Real- and imaginary-channel Haar coefficients, n values each. */
RW_API void rw_recovery_coefficients(const rw_recovery* rec, double* re, double* im);

/* ---- detection ------------------------------------------------------------ */

RW_API void rw_detection_config_default(rw_detection_config* cfg);
RW_API rw_status rw_triangularity(const rw_scaleogram* sg, double support_fraction, double* out);
RW_API rw_status rw_locate_apex(const rw_scaleogram* sg, const rw_detection_config* cfg,
                                double* apex_x, double* confidence);
RW_API rw_status rw_detect(const rw_field* field, const rw_detection_config* cfg,
                           rw_detection_report* out);
RW_API rw_status rw_normalized_rms(const rw_field* a, const rw_field* reference, double* out);

/* "t,triangularity,apex_x,apex_confidence,alarm" rows. `comment`, when not
 * NULL, is written as a '#' line before the row. The header is written when
 * the file is created. */
RW_API rw_status rw_report_append(const char* path, const rw_detection_report* report,
                                  const char* comment);
/* 17-significant-digit formatting shared by every CSV writer. Returns the
 * length written (excluding the terminator), or 0 if `cap` is too small. */
RW_API size_t rw_format_double(double v, char* buf, size_t cap);

#ifdef __cplusplus
}
#endif

#endif /* ROGUEWAVE_H */
