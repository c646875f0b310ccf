#ifndef QFQ_H
#define QFQ_H

/* qfq — exact-arithmetic engine for degree-zero DT generating functions of
 * the generic quantum Fermat quintic threefold.
 *
 * All functions return qfq_status; outputs are written through out-parameters.
 * Opaque handles are created by qfq_*_make-style constructors and released by
 * the matching qfq_*_free.  Strings returned through char** are owned by the
 * caller and must be released with qfq_string_free; strings returned as
 * const char* are borrowed and live as long as the handle they came from.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qfq_status {
    QFQ_OK = 0,
    QFQ_ERR_INVALID_ARGUMENT = 1,
    QFQ_ERR_DIMENSION_MISMATCH = 2,
    QFQ_ERR_NOT_INVERTIBLE = 3,
    QFQ_ERR_NOT_CYCLIC_INVARIANT = 4,
    QFQ_ERR_UNSUPPORTED_QUIVER = 5,
    QFQ_ERR_INTERNAL = 6
} qfq_status;

typedef enum qfq_format {
    QFQ_FORMAT_TEXT = 0,
    QFQ_FORMAT_JSON = 1,
    QFQ_FORMAT_CSV = 2
} qfq_format;

typedef struct qfq_series qfq_series;           /* truncated integer power series */
typedef struct qfq_quiver qfq_quiver;           /* labeled quiver */
typedef struct qfq_count_table qfq_count_table; /* dimension vector -> count */
typedef struct qfq_report qfq_report;           /* signed series report */
typedef struct qfq_check_report qfq_check_report;

const char *qfq_version(void);
/* Message for the most recent error on this thread ("" if none). */
const char *qfq_last_error(void);
void qfq_string_free(char *s);

/* ---- truncated series ------------------------------------------------- */

qfq_status qfq_series_one(int num_vars, int trunc, qfq_series **out);
qfq_status qfq_series_clone(const qfq_series *s, qfq_series **out);
void qfq_series_free(qfq_series *s);

int qfq_series_num_vars(const qfq_series *s);
int qfq_series_trunc(const qfq_series *s);
long qfq_series_num_terms(const qfq_series *s);
/* Term at position `index` in lexicographic exponent order.  `exponent` must
 * have room for num_vars ints; `coeff` receives a decimal string. */
qfq_status qfq_series_term(const qfq_series *s, long index, int *exponent,
                           char **coeff);
qfq_status qfq_series_coeff(const qfq_series *s, const int *exponent, int len,
                            char **coeff);
qfq_status qfq_series_equal(const qfq_series *a, const qfq_series *b, int *out);

qfq_status qfq_series_mul(const qfq_series *a, const qfq_series *b,
                          qfq_series **out);
qfq_status qfq_series_int_pow(const qfq_series *a, long e, qfq_series **out);
qfq_status qfq_series_specialize(const qfq_series *a, qfq_series **out);
qfq_status qfq_series_substitute_power(const qfq_series *a, int sign, int m,
                                       int new_trunc, qfq_series **out);
qfq_status qfq_series_cyclic_shift(const qfq_series *a, int s, qfq_series **out);
qfq_status qfq_series_render(const qfq_series *a, qfq_format fmt, char **out);

/* MacMahon function M(t) = prod (1 - t^n)^{-n}, truncated. */
qfq_status qfq_macmahon(int trunc, qfq_series **out);

/* ---- plane partitions ------------------------------------------------- */

/* counts[n] = number of plane partitions with exactly n boxes, n = 0..max_size. */
qfq_status qfq_pp_counts(int max_size, int threads, long long *counts);
qfq_status qfq_pp_counts_render(int max_size, int threads, qfq_format fmt,
                                char **out);
/* Generating function of mu_r(a,b,c)-colored plane partitions in r variables. */
qfq_status qfq_colored_gf(int r, int a, int b, int c, int trunc, int threads,
                          qfq_series **out);

/* ---- quivers ----------------------------------------------------------- */

qfq_status qfq_mckay_quiver(int r, int a, int b, int c, qfq_quiver **out);
void qfq_quiver_free(qfq_quiver *q);
int qfq_quiver_num_vertices(const qfq_quiver *q);
long qfq_quiver_num_arrows(const qfq_quiver *q);
qfq_status qfq_quiver_arrow(const qfq_quiver *q, long index, int *source,
                            int *target, char *label);
qfq_status qfq_quiver_render(const qfq_quiver *q, qfq_format fmt, char **out);

qfq_status qfq_bilinear_form(const qfq_quiver *q, const int *d, const int *d2,
                             int len, long long *out);
qfq_status qfq_euler_pairing(const qfq_quiver *q, const int *d, const int *d2,
                             int len, long long *out);
qfq_status qfq_framed_moduli_dim(const qfq_quiver *q, const int *d, int len,
                                 long long *out);

/* Derivation chain for the quintic model: global quantum exponent matrix ->
 * local matrix at the base chart -> Ext-quiver -> labeled isomorphism with
 * the McKay quiver of mu_5(1,1,3). */
qfq_status qfq_ext_chain_render(qfq_format fmt, char **out);

/* ---- multi-colored counting ------------------------------------------- */

/* n_Q(d) for |d| <= trunc.  use_oracle = 0: shifted-product path;
 * use_oracle != 0: direct subset-coloring enumeration. */
qfq_status qfq_multicolor_table(int trunc, int use_oracle, int threads,
                                qfq_count_table **out);
void qfq_count_table_free(qfq_count_table *t);
long qfq_count_table_size(const qfq_count_table *t);
qfq_status qfq_count_table_entry(const qfq_count_table *t, long index,
                                 int *dimension, long long *count);
/* count = 0 when the dimension vector is absent. */
qfq_status qfq_count_table_lookup(const qfq_count_table *t, const int *dimension,
                                  int len, long long *count);
qfq_status qfq_count_table_render(const qfq_count_table *t, qfq_format fmt,
                                  char **out);

/* ---- DT series assembly ------------------------------------------------ */

qfq_status qfq_dt_quiver_report(int trunc, int threads, qfq_report **out);
void qfq_report_free(qfq_report *r);
#define QFQ_REPORT_MULTIVARIATE 0
#define QFQ_REPORT_UNIVARIATE 1
qfq_status qfq_report_series(const qfq_report *r, int which, qfq_series **out);
long qfq_report_num_anomalies(const qfq_report *r);
const char *qfq_report_anomaly(const qfq_report *r, long index);
qfq_status qfq_report_render(const qfq_report *r, int orbit_view,
                             qfq_format fmt, char **out);

qfq_status qfq_dt_orbifold_series(int r, int a, int b, int c, int trunc,
                                  int threads, qfq_series **out);
qfq_status qfq_quot_factor(int trunc, qfq_series **out);
qfq_status qfq_quintic_series(int trunc, int threads, qfq_series **out);

/* chis must have room for `ambient` entries (strata X_(0)..X_(ambient-1)). */
qfq_status qfq_euler_strata(int ambient, long long *chis, long long *weighted);
qfq_status qfq_euler_render(int ambient, qfq_format fmt, char **out);

/* ---- cross-validation -------------------------------------------------- */

/* Runs every documented cross-check at the given truncation.  Oracle-backed
 * checks run only when trunc <= oracle_ceiling and report "skipped" above it.
 * Entry statuses: pass | fail | skipped | paper_anomaly. */
qfq_status qfq_run_check(int trunc, int oracle_ceiling, int threads,
                         qfq_check_report **out);
void qfq_check_free(qfq_check_report *r);
long qfq_check_num_entries(const qfq_check_report *r);
qfq_status qfq_check_entry(const qfq_check_report *r, long index,
                           const char **name, const char **status,
                           const char **detail);
/* 1 when no entry has status "fail" (anomalies and skips do not fail). */
int qfq_check_ok(const qfq_check_report *r);
qfq_status qfq_check_render(const qfq_check_report *r, qfq_format fmt,
                            char **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QFQ_H */
