/*
 * bhcount - exact counting of rational points of bounded height, quantitative
 * Hilbert irreducibility experiments, resolvent polynomials, and the
 * determinant method, over exact arbitrary-precision arithmetic.
 *
 * C API: opaque handles with status codes. Every function that can fail
 * returns bhc_status (or NULL for string producers); bhc_last_error() gives
 * the message for the most recent failure on the calling thread. Counts are
 * returned as decimal strings so nothing overflows. Strings returned by the
 * library are owned by the caller and released with bhc_string_free().
 */

#ifndef BHCOUNT_H
#define BHCOUNT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bhc_poly bhc_poly;
typedef struct bhc_report bhc_report;
typedef struct bhc_pomega_list bhc_pomega_list;
typedef struct bhc_aux bhc_aux;

/* 0 = success, 2 = malformed input, 3 = internal invariant violation.
 * The values double as CLI exit codes. */
typedef enum {
    BHC_OK = 0,
    BHC_ERR_INPUT = 2,
    BHC_ERR_INTERNAL = 3
} bhc_status;

const char* bhc_last_error(void);
void bhc_string_free(char* s);

/* ---- polynomials ----------------------------------------------------- */

/* Parse `text` over the comma-separated ordered variable list `vars_csv`.
 * Grammar: integer literals, variable identifiers, + - * ^, parentheses. */
bhc_status bhc_poly_parse(const char* text, const char* vars_csv, bhc_poly** out);
void bhc_poly_free(bhc_poly* p);
char* bhc_poly_to_string(const bhc_poly* p);
int bhc_poly_num_vars(const bhc_poly* p);
/* max(2, largest |coefficient|), as a decimal string */
char* bhc_poly_norm(const bhc_poly* p);
bhc_status bhc_poly_is_irreducible(const bhc_poly* p, int* out);
/* one line per factor: "multiplicity\tfactor"; first line is the content */
char* bhc_poly_factor(const bhc_poly* p);

/* ---- enumeration ------------------------------------------------------ */

char* bhc_count_rationals(int64_t B);
/* newline-separated canonical enumeration */
char* bhc_enumerate_rationals_text(int64_t B);
char* bhc_enumerate_projective_text(int64_t B, int dim);

/* ---- counting --------------------------------------------------------- */

bhc_status bhc_count_affine(const bhc_poly* f, const int64_t* bounds, size_t n,
                            bhc_report** out);
bhc_status bhc_count_projective(const bhc_poly* f, int64_t B, bhc_report** out);
bhc_status bhc_count_biprojective(const bhc_poly* f, int64_t B1, int64_t B2, bhc_report** out);
/* S(f, B_1..B_s): the first s variables are specialised */
bhc_status bhc_count_reducible_special(const bhc_poly* f, const int64_t* bounds, size_t s,
                                       int include_zero, bhc_report** out);
/* R(f, B): the first variable is the root variable */
bhc_status bhc_count_root_special(const bhc_poly* f, int64_t B, int include_zero,
                                  int relax_leading, bhc_report** out);
char* bhc_schwartz_zippel_ceiling(const bhc_poly* f, int64_t B);

void bhc_report_free(bhc_report* r);
char* bhc_report_value(const bhc_report* r);
/* field is one of: irreducible, reducible, zero, degree_drop, work */
char* bhc_report_field(const bhc_report* r, const char* field);
int bhc_report_has_breakdown(const bhc_report* r);

/* ---- resolvents -------------------------------------------------------- */

/* (k, j)-resolvent of g; the last variable of g is the main variable.
 * The result is a polynomial in the coefficient variables and Z. */
bhc_status bhc_resolvent(const bhc_poly* g, int k, int j, bhc_poly** out);

bhc_status bhc_pomega(const bhc_poly* f, bhc_pomega_list** out);
void bhc_pomega_free(bhc_pomega_list* p);
size_t bhc_pomega_size(const bhc_pomega_list* p);
int bhc_pomega_k(const bhc_pomega_list* p, size_t i);
int bhc_pomega_j(const bhc_pomega_list* p, size_t i);
char* bhc_pomega_factor(const bhc_pomega_list* p, size_t i);

/* ---- determinant method ------------------------------------------------ */

bhc_status bhc_find_auxiliary(const bhc_poly* f, int64_t B1, int64_t B2, bhc_aux** out);
void bhc_aux_free(bhc_aux* a);
char* bhc_aux_poly(const bhc_aux* a);
int bhc_aux_m1(const bhc_aux* a);
int bhc_aux_m2(const bhc_aux* a);
int64_t bhc_aux_points(const bhc_aux* a);
int64_t bhc_aux_rank(const bhc_aux* a);
int64_t bhc_aux_cols(const bhc_aux* a);

/* ---- exponent fitting --------------------------------------------------- */

/* least squares of log(count) against log(B) over entries with count > 0 */
bhc_status bhc_fit_exponent(const double* b, const double* count, size_t n, double* slope,
                            double* intercept, double* residual);

#ifdef __cplusplus
}
#endif

#endif /* BHCOUNT_H */
