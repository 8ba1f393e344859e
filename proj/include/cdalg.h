#ifndef CDALG_H
#define CDALG_H

#include <stddef.h>
#include <stdint.h>

#if defined(CDALG_BUILDING_LIBRARY)
#define CDALG_API __attribute__((visibility("default")))
#else
#define CDALG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Exact Cayley-Dickson algebra A_n over the rationals.
 *
 * Every fallible call returns a cd_status; on anything but CD_OK the output
 * arguments are untouched and cd_last_error() describes the failure (per
 * thread, valid until the next failing call). Strings returned through
 * char** belong to the caller and are released with cd_string_free. */

typedef struct cd_element cd_element;

typedef enum cd_status {
    CD_OK = 0,
    CD_INVALID_ARGUMENT = 1,
    CD_LEVEL_MISMATCH = 2,
    CD_OUT_OF_RANGE = 3,
    CD_PARSE = 4,
    CD_HYPOTHESIS = 5,
    CD_UNKNOWN_THEOREM = 6,
    CD_INTERNAL = 99
} cd_status;

typedef enum cd_format { CD_FORMAT_TEXT = 0, CD_FORMAT_JSON = 1, CD_FORMAT_CSV = 2 } cd_format;

typedef enum cd_subalgebra_kind {
    CD_SUBALGEBRA_H_A = 0,        /* span{e0, ~a, a, ~e0}; b ignored */
    CD_SUBALGEBRA_QUATERNION = 1, /* span{e0, a, b, ab} */
    CD_SUBALGEBRA_OCTONION = 2    /* span{e0, a, b, ab, ~a b, -~b, ~a, ~e0} */
} cd_subalgebra_kind;

CDALG_API const char* cd_last_error(void);
CDALG_API const char* cd_status_name(cd_status status);
CDALG_API void cd_string_free(char* s);

/* Elements */
CDALG_API cd_status cd_element_parse(unsigned level, const char* literal, cd_element** out);
CDALG_API cd_status cd_element_basis(unsigned level, size_t index, cd_element** out);
CDALG_API cd_status cd_element_from_json(const char* json, cd_element** out);
CDALG_API void cd_element_free(cd_element* x);
CDALG_API unsigned cd_element_level(const cd_element* x);
CDALG_API int cd_element_is_zero(const cd_element* x);
CDALG_API int cd_element_equal(const cd_element* x, const cd_element* y);
/* Canonical literal, e.g. "e5 - e14". */
CDALG_API cd_status cd_element_format(const cd_element* x, char** out);
/* {"level": n, "coeffs": ["p/q", ...]} */
CDALG_API cd_status cd_element_to_json(const cd_element* x, char** out);

/* Arithmetic */
CDALG_API cd_status cd_add(const cd_element* x, const cd_element* y, cd_element** out);
CDALG_API cd_status cd_multiply(const cd_element* x, const cd_element* y, cd_element** out);
CDALG_API cd_status cd_commutator(const cd_element* x, const cd_element* y, cd_element** out);
CDALG_API cd_status cd_associator(const cd_element* x, const cd_element* y, const cd_element* z, cd_element** out);
CDALG_API cd_status cd_conjugate(const cd_element* x, cd_element** out);
CDALG_API cd_status cd_tilde(const cd_element* x, cd_element** out);
/* Squared norm as "p/q". */
CDALG_API cd_status cd_norm_sq(const cd_element* x, char** out);
/* Evaluates an expression with '*', parentheses, conj(), tilde(), comm(,), assoc(,,). */
CDALG_API cd_status cd_eval(unsigned level, const char* expression, cd_element** out);

/* Classification */
CDALG_API cd_status cd_classify(const cd_element* a, cd_format format, char** out);
CDALG_API cd_status cd_alternates_with(const cd_element* a, const cd_element* b, int* out);
CDALG_API cd_status cd_strongly_alternates_with(const cd_element* a, const cd_element* b, int* out);
CDALG_API cd_status cd_normed_with(const cd_element* a, const cd_element* b, int* out);
/* *out is NULL when (a, x, b) vanishes on every basis x. Level >= 4. */
CDALG_API cd_status cd_yui_witness(const cd_element* a, const cd_element* b, cd_element** out);

/* Structure */
CDALG_API cd_status cd_table(unsigned level, cd_format format, char** out);
/* side 'L' gives x -> a x, side 'R' gives x -> x a; row-major CSV of "p/q". */
CDALG_API cd_status cd_matrix_csv(char side, const cd_element* a, char** out);
CDALG_API cd_status cd_subalgebra(cd_subalgebra_kind kind, const cd_element* a, const cd_element* b, cd_format format,
                                  char** out);

/* Verification */
CDALG_API cd_status cd_theorem_ids(char** out_newline_separated);
/* Runs one theorem (or all when theorem is NULL) at each level. JSON format
 * gives one report per line; text gives a summary table. *all_passed is 1
 * when every report passed. */
CDALG_API cd_status cd_verify(const unsigned* levels, size_t level_count, const char* theorem, uint64_t seed,
                              size_t trials, int with_elapsed, cd_format format, char** out, int* all_passed);
/* Re-evaluates a counterexample payload; *fails is 1 when it fails again. */
CDALG_API cd_status cd_replay(const char* counterexample_json, int* fails);
/* "null" or {"x": literal, "y": literal, "norm_sq_xy": ..., "product_of_norms": ...}. */
CDALG_API cd_status cd_norm_violation(unsigned level, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
