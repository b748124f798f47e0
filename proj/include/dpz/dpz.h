/* Copyright (C) 2026 The dpz Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the dpz library. Every operation returns a dpz_status; on
 * failure dpz_last_error() describes the problem for the calling thread.
 * Operations that produce structured output hand back a dpz_result holding a
 * JSON document, which the caller releases with dpz_result_free.
 *
 * Divisor classes are passed as comma-separated coordinates in the standard
 * basis of the surface: "5" on P2, "2,3" on P1xP1, "5,-2" for 5h - 2e1 on S1.
 */
#ifndef DPZ_DPZ_H
#define DPZ_DPZ_H

#include <stdint.h>

#if defined(DPZ_BUILDING_LIBRARY)
#define DPZ_API __attribute__((visibility("default")))
#else
#define DPZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dpz_status {
  DPZ_OK = 0,
  DPZ_E_INPUT = 1,         /* malformed or out-of-domain input */
  DPZ_E_INTERNAL = 2,      /* internal invariant violated */
  DPZ_E_TRUNCATION = 3,    /* coefficient requested beyond a truncation bound */
  DPZ_E_NOT_CERTIFIED = 4, /* hypotheses of the underlying formula do not hold */
  DPZ_E_NULL = 5           /* required pointer argument was NULL */
} dpz_status;

typedef struct dpz_surface dpz_surface;
typedef struct dpz_result dpz_result;

DPZ_API const char* dpz_version(void);
/* Message for the most recent failure on this thread; "" if none. */
DPZ_API const char* dpz_last_error(void);

/* Tokens: P2, P1xP1, S1 ... S8. */
DPZ_API dpz_status dpz_surface_open(const char* token, dpz_surface** out);
DPZ_API void dpz_surface_close(dpz_surface* surface);
DPZ_API dpz_status dpz_surface_rank(const dpz_surface* surface, int* out);
DPZ_API dpz_status dpz_intersect(const dpz_surface* surface, const char* a, const char* b, int64_t* out);

/* Directory for cached series expansions; NULL or "" disables it. */
DPZ_API dpz_status dpz_set_cache_dir(const char* path);

DPZ_API dpz_status dpz_surface_info(const dpz_surface* surface, dpz_result** out);
DPZ_API dpz_status dpz_riemann_roch(const dpz_surface* surface, const char* beta, dpz_result** out);
DPZ_API dpz_status dpz_genus(const dpz_surface* surface, const char* beta, dpz_result** out);
DPZ_API dpz_status dpz_lines(const dpz_surface* surface, dpz_result** out);
DPZ_API dpz_status dpz_codim(const dpz_surface* surface, const char* beta, int with_witness, dpz_result** out);
DPZ_API dpz_status dpz_check_a(const dpz_surface* surface, const char* beta, int i, int relaxed, dpz_result** out);
DPZ_API dpz_status dpz_check_p(const dpz_surface* surface, const char* beta, dpz_result** out);
DPZ_API dpz_status dpz_min_n(const dpz_surface* surface, const char* beta0, int i, dpz_result** out);
/* Betti numbers of the Hilbert scheme of m points. */
DPZ_API dpz_status dpz_betti(const dpz_surface* surface, int m, dpz_result** out);
DPZ_API dpz_status dpz_stable_betti(const dpz_surface* surface, int max_k, dpz_result** out);
DPZ_API dpz_status dpz_moduli_betti(const dpz_surface* surface, const char* beta, int64_t chi, int k,
                                    dpz_result** out);
DPZ_API dpz_status dpz_moduli_dim(const dpz_surface* surface, const char* beta, dpz_result** out);
DPZ_API dpz_status dpz_jac_degree(const dpz_surface* surface, const char* beta, int64_t chi, dpz_result** out);
DPZ_API dpz_status dpz_picard_bound(const dpz_surface* surface, const char* beta, dpz_result** out);
/* degree <= 0 means no degree, hence no valid range. */
DPZ_API dpz_status dpz_bps_series(int max_total, int degree, dpz_result** out);
DPZ_API dpz_status dpz_bps_low_degree(const dpz_surface* surface, dpz_result** out);
DPZ_API dpz_status dpz_taut_count(const dpz_surface* surface, int k, dpz_result** out);
DPZ_API dpz_status dpz_gap(int64_t chi_O, int64_t q, int64_t K2, int64_t n, dpz_result** out);

/* Borrowed pointer, valid until dpz_result_free. */
DPZ_API const char* dpz_result_json(const dpz_result* result);
/* 1 certified, 0 not certified, -1 when the result carries no certificate. */
DPZ_API int dpz_result_certified(const dpz_result* result);
DPZ_API void dpz_result_free(dpz_result* result);

#ifdef __cplusplus
}
#endif

#endif /* DPZ_DPZ_H */
