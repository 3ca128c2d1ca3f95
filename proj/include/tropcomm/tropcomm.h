/*
 * tropcomm C API.
 *
 * Max-plus 2x2 commuting-matrix cones behind opaque handles. Every fallible
 * call returns a tcm_status; on failure tcm_last_error() describes the
 * problem. Handles are created by *_parse / *_create / *_compute functions
 * and released with the matching *_free. Strings returned through char**
 * are owned by the caller and released with tcm_string_free.
 *
 * Vectors and matrices cross the boundary as doubles; Bottom (-inf) is
 * -INFINITY.
 */
#ifndef TROPCOMM_TROPCOMM_H
#define TROPCOMM_TROPCOMM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TROPCOMM_BUILDING)
#    define TCM_API __declspec(dllexport)
#  else
#    define TCM_API __declspec(dllimport)
#  endif
#else
#  define TCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tcm_status {
  TCM_OK = 0,
  TCM_ERR_INVALID_ARGUMENT = 1, /* null handle, bad enum, negative tolerance */
  TCM_ERR_PARSE = 2,
  TCM_ERR_DIMENSION = 3,
  TCM_ERR_DOMAIN = 4,           /* e.g. A has a -inf entry */
  TCM_ERR_DEGENERATE = 5,
  TCM_ERR_PRECONDITION = 6,
  TCM_ERR_UNSUPPORTED = 7,      /* e.g. projecting an equal-diagonal cone */
  TCM_ERR_AMBIGUOUS = 8,
  TCM_ERR_IO = 9,
  TCM_ERR_INTERNAL = 10
} tcm_status;

typedef enum tcm_case {
  TCM_CASE_ABOVE = 0, /* a11 > a22 */
  TCM_CASE_BELOW = 1, /* a11 < a22 */
  TCM_CASE_EQUAL = 2  /* |a11 - a22| <= tol */
} tcm_case;

typedef enum tcm_alpha2_form {
  TCM_ALPHA2_SYMMETRIC = 0,      /* min(a21 - a22, a11 - a12) */
  TCM_ALPHA2_REPEATED_INDEX = 1  /* min(a21 - a22, a11 - a21); not a basis */
} tcm_alpha2_form;

typedef enum tcm_format {
  TCM_FORMAT_TEXT = 0,
  TCM_FORMAT_JSON = 1,
  TCM_FORMAT_SVG = 2,
  TCM_FORMAT_TSV = 3
} tcm_format;

typedef struct tcm_matrix tcm_matrix;
typedef struct tcm_basis tcm_basis;
typedef struct tcm_report tcm_report;
typedef struct tcm_projection tcm_projection;

TCM_API const char* tcm_version(void);

/* Message for the most recent failure on the calling thread. */
TCM_API const char* tcm_last_error(void);

/* Byte offset of the most recent TCM_ERR_PARSE on this thread, or -1. */
TCM_API long tcm_last_error_offset(void);

TCM_API void tcm_string_free(char* s);

/* ---- matrices ---------------------------------------------------------- */

/* Text ("0 1; 2 -inf") or JSON ([[0, 1], [2, null]]) form. */
TCM_API tcm_status tcm_matrix_parse(const char* text, tcm_matrix** out);
/* Row-major values; -INFINITY is Bottom, NaN and +inf are rejected. */
TCM_API tcm_status tcm_matrix_create(size_t rows, size_t cols, const double* values,
                                     tcm_matrix** out);
TCM_API void tcm_matrix_free(tcm_matrix* m);

TCM_API size_t tcm_matrix_rows(const tcm_matrix* m);
TCM_API size_t tcm_matrix_cols(const tcm_matrix* m);
TCM_API tcm_status tcm_matrix_get(const tcm_matrix* m, size_t i, size_t j, double* out);
/* 1 if no entry is Bottom, 0 otherwise (and for NULL). */
TCM_API int tcm_matrix_is_finite(const tcm_matrix* m);

TCM_API tcm_status tcm_matrix_oplus(const tcm_matrix* a, const tcm_matrix* b, tcm_matrix** out);
TCM_API tcm_status tcm_matrix_otimes(const tcm_matrix* a, const tcm_matrix* b, tcm_matrix** out);

/* TCM_FORMAT_TEXT or TCM_FORMAT_JSON. */
TCM_API tcm_status tcm_matrix_render(const tcm_matrix* m, tcm_format format, char** out);

/* ---- commuting cone ---------------------------------------------------- */

/* *out = 1 iff A (x) B == B (x) A within tol. */
TCM_API tcm_status tcm_commutes(const tcm_matrix* a, const tcm_matrix* b, double tol, int* out);

/* *out = 1 iff x = (b11, b12, b21, b22) solves C (x) x = D (x) x for A. */
TCM_API tcm_status tcm_is_solution(const tcm_matrix* a, const double x[4], double tol,
                                   int* out);

/* Writes the 4x4 matrices of the two-sided system; either may be NULL. */
TCM_API tcm_status tcm_build_system(const tcm_matrix* a, tcm_matrix** c, tcm_matrix** d);

TCM_API tcm_status tcm_classify(const tcm_matrix* a, double tol, tcm_case* out);

TCM_API tcm_status tcm_basis_compute(const tcm_matrix* a, double tol, tcm_alpha2_form form,
                                     tcm_basis** out);
TCM_API void tcm_basis_free(tcm_basis* b);
TCM_API tcm_case tcm_basis_case(const tcm_basis* b);
TCM_API size_t tcm_basis_size(const tcm_basis* b);
/* Scaled basis vector i (first finite entry 0). */
TCM_API tcm_status tcm_basis_vector(const tcm_basis* b, size_t i, double out[4]);
/* Returns 1 and fills both when a11 != a22, 0 otherwise. */
TCM_API int tcm_basis_alphas(const tcm_basis* b, double* alpha1, double* alpha2);

/* ---- verification ------------------------------------------------------ */

typedef struct tcm_verify_options {
  double tol;            /* default 1e-9 */
  uint64_t seed;         /* default 1 */
  int grid_radius;       /* default 5: grid {-inf, -5..5} */
  int closure_trials;    /* default 200 */
  tcm_alpha2_form below_alpha2;
  int mutate_basis;      /* nonzero drops the last basis vector (negative control) */
} tcm_verify_options;

TCM_API void tcm_verify_options_init(tcm_verify_options* opts);

/* Five checks on the computed basis of A. opts may be NULL for defaults. */
TCM_API tcm_status tcm_verify(const tcm_matrix* a, const tcm_verify_options* opts,
                              tcm_report** out);

/* Re-runs the checks on the matrix and basis stored in a JSON report. */
TCM_API tcm_status tcm_verify_report_json(const char* json, const tcm_verify_options* opts,
                                          tcm_report** out);

/* Full randomized and exhaustive sweep over all three diagonal cases. */
TCM_API tcm_status tcm_verify_sweep(const tcm_verify_options* opts, tcm_report** out);

TCM_API void tcm_report_free(tcm_report* r);
TCM_API int tcm_report_passed(const tcm_report* r);
TCM_API size_t tcm_report_check_count(const tcm_report* r);
/* Name pointer stays valid for the lifetime of the report. */
TCM_API tcm_status tcm_report_check(const tcm_report* r, size_t i, const char** name, int* pass);
/* TCM_FORMAT_TEXT or TCM_FORMAT_JSON. */
TCM_API tcm_status tcm_report_render(const tcm_report* r, tcm_format format, char** out);

/* ---- barycentric projection -------------------------------------------- */

TCM_API tcm_status tcm_projection_compute(const tcm_basis* b, double tol, tcm_projection** out);
TCM_API void tcm_projection_free(tcm_projection* p);
TCM_API size_t tcm_projection_point_count(const tcm_projection* p);
/* phi and xy may be NULL. */
TCM_API tcm_status tcm_projection_point(const tcm_projection* p, size_t i, double phi[3],
                                        double xy[2]);
TCM_API tcm_status tcm_projection_omega(const tcm_projection* p, double phi[3], double xy[2]);
/* Largest distance between the pairwise cevian intersections. */
TCM_API double tcm_projection_residual(const tcm_projection* p);
/* 1 iff the cevians meet within tol and the foot of the ray through omega is beta4. */
TCM_API int tcm_projection_concurrent(const tcm_projection* p);
/* TCM_FORMAT_SVG or TCM_FORMAT_TSV. */
TCM_API tcm_status tcm_projection_render(const tcm_projection* p, tcm_format format, char** out);
TCM_API tcm_status tcm_projection_write(const tcm_projection* p, tcm_format format,
                                        const char* path);

#ifdef __cplusplus
}
#endif

#endif /* TROPCOMM_TROPCOMM_H */
