/* SPDX-License-Identifier: Apache-2.0 */
#ifndef TCALG_H
#define TCALG_H

/*
 * C API of the tcalg engine: exact cohomology computations for the
 * obstacle-avoidance (Fadell-Neuwirth) bundle, certified sequential
 * parametrized topological complexity bounds, and TC-generating functions.
 *
 * Conventions:
 *  - Every object is an opaque handle created and released by the library.
 *  - Functions return tcalg_status; any non-OK status leaves output
 *    parameters untouched and records a message readable through
 *    tcalg_last_error() (thread-local).
 *  - Strings returned through char** are heap-allocated by the library
 *    and must be released with tcalg_string_free().
 *  - Status values coincide with the CLI exit codes.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tcalg_status {
    TCALG_OK = 0,
    TCALG_INVALID_ARGUMENT = 2,
    TCALG_VERIFICATION_FAILED = 3,
    TCALG_RESOURCE_LIMIT = 4
} tcalg_status;

typedef enum tcalg_emit {
    TCALG_EMIT_TEXT = 0,
    TCALG_EMIT_JSON = 1
} tcalg_emit;

typedef struct tcalg_params tcalg_params;
typedef struct tcalg_poly tcalg_poly;
typedef struct tcalg_bounds tcalg_bounds;

const char* tcalg_version(void);

/* Message of the most recent failing call on this thread ("" if none). */
const char* tcalg_last_error(void);

void tcalg_string_free(char* s);

/* ---- ambient algebra parameters (d, m, n, r) ---- */

tcalg_status tcalg_params_create(int d, int m, int n, int r, tcalg_params** out);
/* Straightening guard; the default cap is 64 generators per word. */
tcalg_status tcalg_params_set_max_word_len(tcalg_params* params, size_t max_word_len);
void tcalg_params_free(tcalg_params* params);

/* ---- exact polynomials in the configuration-space cohomology ---- */

/* Parses an expression in the grammar
 *   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
 *   factor := '-' factor | primary ('^' INT)? ;
 *   primary := INT | 'w' ('[' INT ']')? '(' INT ',' INT ')' | '(' expr ')'
 * and evaluates it to canonical form. */
tcalg_status tcalg_poly_parse(const tcalg_params* params, const char* text,
                              tcalg_poly** out);
tcalg_status tcalg_poly_multiply(const tcalg_poly* a, const tcalg_poly* b,
                                 tcalg_poly** out);
tcalg_status tcalg_poly_add(const tcalg_poly* a, const tcalg_poly* b, tcalg_poly** out);
/* Image under the diagonal restriction; the result lives in the r = 1 algebra. */
tcalg_status tcalg_poly_diagonal(const tcalg_poly* p, tcalg_poly** out);
int tcalg_poly_is_zero(const tcalg_poly* p);
int tcalg_poly_equal(const tcalg_poly* a, const tcalg_poly* b);
tcalg_status tcalg_poly_format(const tcalg_poly* p, char** out);
void tcalg_poly_free(tcalg_poly* p);

/* ---- certified complexity bounds ---- */

tcalg_status tcalg_bounds_compute(const tcalg_params* params, tcalg_bounds** out);
int tcalg_bounds_lower(const tcalg_bounds* b);
int tcalg_bounds_upper(const tcalg_bounds* b);
int tcalg_bounds_exact(const tcalg_bounds* b);
/* "odd-d", "planar" or "even-d-bracket"; owned by the handle. */
const char* tcalg_bounds_regime(const tcalg_bounds* b);
size_t tcalg_bounds_certificate_size(const tcalg_bounds* b);
tcalg_status tcalg_bounds_certificate_factor(const tcalg_bounds* b, size_t index,
                                             char** out);
tcalg_status tcalg_bounds_certificate_witness(const tcalg_bounds* b, char** monomial,
                                              char** coefficient);
/* Re-verifies the stored certificate from scratch. */
tcalg_status tcalg_bounds_verify(const tcalg_bounds* b);
void tcalg_bounds_free(tcalg_bounds* b);

/* ---- one-shot commands: the documents the CLI prints ---- */

tcalg_status tcalg_cmd_bounds(int d, int m, int n, int r, tcalg_emit emit, char** out);
/* max_cells = 0 selects the TCALG_MAX_CELLS environment override or the
 * built-in cap of 500 cells. */
tcalg_status tcalg_cmd_verify(const int* d_set, size_t d_count, int m_max, int n_max,
                              int r_max, size_t max_cells, tcalg_emit emit, char** out);
tcalg_status tcalg_cmd_normal_form(const char* expr, int d, int m, int n, int r,
                                   size_t max_word_len, tcalg_emit emit, char** out);
tcalg_status tcalg_cmd_poincare(int d, int m, int n, int r, int check, tcalg_emit emit,
                                char** out);
/* bundle is one of "fn-odd", "fn-planar", "hopf", "fn-fiber". */
tcalg_status tcalg_cmd_genfun(const char* bundle, int m, int n, int terms,
                              tcalg_emit emit, char** out);
tcalg_status tcalg_cmd_oracle(int d, int m, int n, int r, int budget, tcalg_emit emit,
                              char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TCALG_H */
