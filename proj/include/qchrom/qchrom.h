#ifndef QCHROM_H
#define QCHROM_H

/* C API for the qchromatic library.
 *
 * All functions return a qch_status; results come back either through an
 * opaque handle (freed with the matching *_free) or a malloc'd NUL-terminated
 * string (freed with qch_string_free). On any error the thread-local message
 * from qch_last_error() describes the offending input.
 *
 * Path strings are comma-separated Hessenberg vectors ("2,3,3") or N/E step
 * strings ("NNENNEENEE"); board strings are comma-separated column heights
 * ("0,1,3,4,4,4").
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qch_status {
  QCH_OK = 0,
  QCH_ERR_CHECK_FAILED = 1, /* a verification check failed */
  QCH_ERR_USAGE = 2,        /* malformed input */
  QCH_ERR_INTERNAL = 3
} qch_status;

typedef struct qch_symfun qch_symfun;   /* symmetric function handle */
typedef struct qch_report qch_report;   /* verification report handle */

const char* qch_last_error(void);
void qch_string_free(char* s);

/* library version string, static storage */
const char* qch_version(void);

/* ---- paths ---- */

/* JSON array of all n-Dyck paths as Hessenberg vectors */
qch_status qch_paths_json(int n, char** out);

/* ---- chromatic / LLT symmetric functions ---- */

qch_status qch_csf(const char* path, const char* basis, qch_symfun** out);
qch_status qch_llt(const char* path, const char* basis, qch_symfun** out);
qch_status qch_symfun_convert(const qch_symfun* f, const char* basis, qch_symfun** out);
qch_status qch_symfun_degree(const qch_symfun* f, int* out);
qch_status qch_symfun_to_json(const qch_symfun* f, char** out);
qch_status qch_symfun_to_text(const qch_symfun* f, char** out);
void qch_symfun_free(qch_symfun* f);

/* ---- alpha-chromatic symmetric functions ----
 * route: "biword" | "wordproduct" | "decorated" (decorated needs alpha >= 1)
 * alpha_basis: "qbinom" | "falling" (ignored by the decorated route)
 * q1: nonzero evaluates the emitted coefficients at q=1
 */
qch_status qch_alpha_csf_json(const char* path, const char* route, const char* alpha_basis,
                              int q1, int alpha, char** out);

/* Schur coefficients of the alpha-chromatic function in an alpha basis */
qch_status qch_alpha_schur_json(const char* path, const char* alpha_basis, char** out);

/* ---- rook theory ---- */

qch_status qch_rook_poly_json(const char* board, int k, char** out);
/* mode: "algebraic" | "torus-stat" */
qch_status qch_hit_board_json(const char* board, const char* mode, char** out);
/* the new P-descent statistic route on B_pi */
qch_status qch_hit_path_json(const char* path, char** out);

/* ---- verification suites ---- */

/* big_biword nonzero opts in to the full n=6 bi-word sweep */
qch_status qch_verify(const char* suite, int max_n, int workers, unsigned seed, int big_biword,
                      qch_report** out);
qch_status qch_report_passed(const qch_report* r, int* out);
/* nonzero when every failure is a flagged conjecture counterexample */
qch_status qch_report_only_conjecture_failures(const qch_report* r, int* out);
qch_status qch_report_to_json(const qch_report* r, char** out);
qch_status qch_report_to_text(const qch_report* r, char** out);
void qch_report_free(qch_report* r);

#ifdef __cplusplus
}
#endif

#endif /* QCHROM_H */
