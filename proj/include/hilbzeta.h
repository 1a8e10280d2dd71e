/*
 * hilbzeta C API
 *
 * Exact computation of the generating functions attached to Hilbert schemes
 * of points on integral plane curves: motivic zeta numerators and their
 * functional equation, compactified-Jacobian strata, symmetric-product rank
 * tables, perverse-filtration bookkeeping, nodal weight polynomials, and a
 * finite-field point-counting oracle for punctual Hilbert schemes of plane
 * curve germs.
 *
 * All functions return HZ_OK (0) on success or a nonzero error code; the
 * message for the most recent failure on the calling thread is available
 * via hz_last_error().  Out-parameters are only written on success.
 * Objects are opaque handles released with the matching hz_*_free call.
 */

#ifndef HILBZETA_H
#define HILBZETA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define HZ_OK 0
#define HZ_ERR_ARGUMENT 1        /* bad argument or violated precondition */
#define HZ_ERR_RING 2            /* mixed coefficient rings */
#define HZ_ERR_UNKNOWN_GERM 3    /* germ lacks a stored local factor */
#define HZ_ERR_PARSE 4           /* equation or registry syntax error */
#define HZ_ERR_NOT_POLYNOMIAL 5  /* oracle counts fail the polynomial fit */
#define HZ_ERR_DEGREE 6          /* degree bound / functional-equation violation */
#define HZ_ERR_IO 7              /* file I/O failure */
#define HZ_ERR_INTERNAL 8

#define HZ_FORMAT_TABLE 0
#define HZ_FORMAT_JSON 1
#define HZ_FORMAT_CSV 2

#define HZ_RING_LEFSCHETZ 0
#define HZ_RING_WEIGHT 1

typedef int hz_status;
typedef struct hz_registry hz_registry;
typedef struct hz_poly hz_poly;
typedef struct hz_series hz_series;
typedef struct hz_report hz_report;

const char* hz_version(void);
const char* hz_last_error(void);
void hz_string_free(char* text);

/* ---- germ registry ---------------------------------------------------- */

hz_status hz_registry_new(hz_registry** out);
hz_status hz_registry_load(hz_registry* registry, const char* json_path);
hz_status hz_registry_save(const hz_registry* registry, const char* json_path);
/* Runs the oracle on `equation` (colengths 0..2*cogenus over `primes`) and
 * stores the fitted local factor under `label`. */
hz_status hz_registry_fit_germ(hz_registry* registry, const char* label, const char* equation,
                               int branches, int cogenus, const unsigned* primes, size_t n_primes);
void hz_registry_free(hz_registry* registry);

/* ---- zeta numerators --------------------------------------------------- */

hz_status hz_curve_numerator(const hz_registry* registry, const char* const* germ_labels,
                             size_t n_germs, hz_poly** out);
/* verdict: 1 = PASS, 0 = FAIL (report carries the detail) */
hz_status hz_functional_equation(const hz_poly* numerator, int delta, int* verdict_out);
hz_status hz_curve_series(const hz_registry* registry, int genus, const char* const* germ_labels,
                          size_t n_germs, int ring, int truncation, hz_series** out);
hz_status hz_nodal_weight_series(int delta, int r, int truncation, hz_series** out);
hz_status hz_monodromy_weight_polynomial(int delta, int r, int d, char** out_text);

/* ---- command-level reports (what the CLI prints) ----------------------- */

hz_status hz_zeta_report(const hz_registry* registry, int genus, const char* const* germ_labels,
                         size_t n_germs, hz_report** out);
hz_status hz_strata_report(int genus, hz_report** out);
hz_status hz_oracle_report(const char* equation, int branches, int cogenus, int n_max,
                           const unsigned* primes, size_t n_primes, hz_report** out);
hz_status hz_macdonald_report(int g, int d, hz_report** out);
hz_status hz_perverse_report(int g, int d, hz_report** out);
hz_status hz_weights_report(int delta, int r, int upto, int crosscheck, hz_report** out);

/* status: 0 all-pass, 3 identity failure, 4 oracle fit failure */
int hz_report_status(const hz_report* report);
int hz_report_passed(const hz_report* report);
hz_status hz_report_render(const hz_report* report, int format, char** out_text);
void hz_report_free(hz_report* report);

/* ---- polynomial / series accessors ------------------------------------- */

int hz_poly_degree(const hz_poly* poly);
hz_status hz_poly_render(const hz_poly* poly, char** out_text);
hz_status hz_poly_render_json(const hz_poly* poly, char** out_text);
void hz_poly_free(hz_poly* poly);

int hz_series_truncation(const hz_series* series);
hz_status hz_series_render(const hz_series* series, char** out_text);
void hz_series_free(hz_series* series);

#ifdef __cplusplus
}
#endif

#endif /* HILBZETA_H */
