/* eucmin — Euclidean-minimum bounds for number fields: C API.
 *
 * Opaque handles, integer status codes, string results. Every string
 * returned through a char** is heap-allocated and must be released with
 * eucmin_string_free(). Handles are not thread-safe individually; distinct
 * handles may be used from distinct threads freely.
 *
 * Status codes 2, 3, 4, 5 match the CLI exit-code contract:
 *   2 invalid input, 3 check failure, 4 precision exhausted,
 *   5 search budget exceeded.
 */

#ifndef EUCMIN_H
#define EUCMIN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eucmin_status {
  EUCMIN_OK = 0,
  EUCMIN_ERR_INVALID_INPUT = 2,
  EUCMIN_ERR_CHECK_FAILED = 3,
  EUCMIN_ERR_PRECISION_EXHAUSTED = 4,
  EUCMIN_ERR_BUDGET_EXCEEDED = 5,
  EUCMIN_ERR_NULL_ARGUMENT = 6,
  EUCMIN_ERR_INTERNAL = 7
} eucmin_status;

typedef enum eucmin_format {
  EUCMIN_FORMAT_JSON = 0,
  EUCMIN_FORMAT_CSV = 1,
  EUCMIN_FORMAT_MARKDOWN = 2
} eucmin_format;

typedef struct eucmin_ctx eucmin_ctx;
typedef struct eucmin_field eucmin_field;

const char *eucmin_version(void);

/* --- context: precision, seed, budgets; owns the last error message --- */
eucmin_status eucmin_ctx_new(eucmin_ctx **out);
void eucmin_ctx_free(eucmin_ctx *ctx);
eucmin_status eucmin_ctx_set_precision_bits(eucmin_ctx *ctx, unsigned bits);
eucmin_status eucmin_ctx_set_seed(eucmin_ctx *ctx, uint64_t seed);
eucmin_status eucmin_ctx_set_node_budget(eucmin_ctx *ctx, uint64_t nodes);
/* message for the most recent failing call on this context ("" if none) */
const char *eucmin_ctx_last_error(const eucmin_ctx *ctx);

/* --- fields -------------------------------------------------------------
 * Polynomials accept "x^3 - x - 1" style text or a JSON array "[-1,-1,0,1]"
 * (constant term first). disc strings are decimal integers. */
eucmin_status eucmin_field_from_polynomial(eucmin_ctx *ctx, const char *poly,
                                           eucmin_field **out);
eucmin_status eucmin_field_from_signature(eucmin_ctx *ctx, unsigned n, unsigned r, unsigned s,
                                          const char *disc_abs_decimal, eucmin_field **out);
void eucmin_field_free(eucmin_field *field);
unsigned eucmin_field_degree(const eucmin_field *field);
unsigned eucmin_field_real_embeddings(const eucmin_field *field);
unsigned eucmin_field_complex_pairs(const eucmin_field *field);
eucmin_status eucmin_field_disc_abs(eucmin_ctx *ctx, const eucmin_field *field, char **out);

/* --- reports ----------------------------------------------------------- */
/* the bound table for 1 <= n <= n_max (n_max <= 8) */
eucmin_status eucmin_bound_table(eucmin_ctx *ctx, unsigned n_max, eucmin_format format,
                                 char **out);
/* exact values and certified upper bounds for gamma_n, n in [n_min, n_max] */
eucmin_status eucmin_hermite_report(eucmin_ctx *ctx, unsigned n_min, unsigned n_max,
                                    eucmin_format format, char **out);
/* every n >= 2 with blichfeldt(n) < sqrt(n), up to the first failure */
eucmin_status eucmin_blichfeldt_scan(eucmin_ctx *ctx, eucmin_format format, char **out);
/* the full bound family and the best bound at D (disc_decimal NULL: use the
 * field's own discriminant) */
eucmin_status eucmin_bounds_report(eucmin_ctx *ctx, const eucmin_field *field,
                                   const char *disc_decimal, eucmin_format format, char **out);
/* lattice construction, det check, minima and lemma checks for a polynomial.
 * grid_k / coeff_box / root_bits of 0 select the documented defaults. */
eucmin_status eucmin_lattice_report(eucmin_ctx *ctx, const char *poly, unsigned grid_k,
                                    unsigned coeff_box, unsigned root_bits,
                                    eucmin_format format, char **out);
/* full pipeline; the lattice stage is skipped for signature-only fields */
eucmin_status eucmin_field_report(eucmin_ctx *ctx, const eucmin_field *field,
                                  const char *disc_override_decimal, eucmin_format format,
                                  char **out);
/* run one verification suite (by id) or all of them (suite NULL). Returns
 * EUCMIN_ERR_CHECK_FAILED when any check fails; *out always carries the
 * report. */
eucmin_status eucmin_verify(eucmin_ctx *ctx, const char *suite, eucmin_format format,
                            char **out);

void eucmin_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* EUCMIN_H */
