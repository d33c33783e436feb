/* C interface to the tropical differential algebra library.
 *
 * Every function returns a td_status; results travel through out-parameters.
 * Reports own their text and JSON renderings; strings returned by accessors
 * stay valid until the owning handle is freed. td_last_error() describes the
 * most recent failure on the calling thread.
 */
#ifndef TROPDIFF_CAPI_H
#define TROPDIFF_CAPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TD_API __declspec(dllexport)
#else
#define TD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum td_status {
    TD_OK = 0,
    TD_ERR_SYNTAX = 1,
    TD_ERR_VARIABLE_INDEX = 2,
    TD_ERR_VARIABLE_COUNT = 3,
    TD_ERR_NEGATIVE_POWER_OF_T = 4,
    TD_ERR_EMPTY_PRECISION = 5,
    TD_ERR_UNCERTIFIED_VALUATION = 6,
    TD_ERR_MISSING_WEIGHT = 7,
    TD_ERR_INTERNAL_INVARIANT = 8,
    TD_ERR_INFINITE_TROP_VALUE = 9,
    TD_ERR_POSTCONDITION = 10,
    TD_ERR_NOT_A_SOLUTION = 11,
    TD_ERR_UNIVERSE_MISMATCH = 12,
    TD_ERR_NOT_LINEAR_FORM = 13,
    TD_ERR_BAD_DIMENSION = 14,
    TD_ERR_BAD_PAIR = 15,
    TD_ERR_NATURAL_POLE = 16,
    TD_ERR_UNKNOWN_COMMAND = 17,
    TD_ERR_OTHER = 18
} td_status;

typedef struct td_poly td_poly;
typedef struct td_natset td_natset;
typedef struct td_report td_report;

TD_API const char* td_version(void);

/* Message for the last failing call on this thread; empty string otherwise. */
TD_API const char* td_last_error(void);

/* --- basic objects ------------------------------------------------------ */

TD_API td_status td_poly_parse(const char* text, uint32_t trunc, td_poly** out);
TD_API void td_poly_free(td_poly* p);
/* Canonical expression-grammar text; owned by the handle. */
TD_API const char* td_poly_format(const td_poly* p);
TD_API uint32_t td_poly_n_vars(const td_poly* p);
/* "min{...}" rendering of the tropicalisation. The string is allocated into
 * the handle and remains valid until the handle is freed. */
TD_API td_status td_poly_trop_format(td_poly* p, const char** out);

TD_API td_status td_natset_parse(const char* text, td_natset** out);
TD_API void td_natset_free(td_natset* s);
TD_API const char* td_natset_format(const td_natset* s);
TD_API int td_natset_was_canonical(const td_natset* s);
/* Val_S(j); infinity reported as -1. */
TD_API td_status td_natset_val(const td_natset* s, uint32_t j, int64_t* out);
TD_API int td_natset_contains(const td_natset* s, uint32_t n);

/* --- reports ------------------------------------------------------------ */

TD_API void td_report_free(td_report* r);
TD_API const char* td_report_text(const td_report* r);
TD_API const char* td_report_json(const td_report* r);
/* 0 when the command's semantic verdict is positive (all examples passed,
 * containments hold, ...), 1 otherwise. */
TD_API int td_report_status(const td_report* r);
TD_API size_t td_report_warning_count(const td_report* r);
TD_API const char* td_report_warning(const td_report* r, size_t index);

/* --- commands ------------------------------------------------------------ */

TD_API td_status td_run_val(const char* natset, const uint32_t* js, size_t n_js, td_report** out);
TD_API td_status td_run_trop(const char* poly, uint32_t trunc, td_report** out);
TD_API td_status td_run_eval(const char* poly, uint32_t trunc, const char* const* sets, size_t n_sets,
                             td_report** out);
/* depth < 0 solves the plain tropicalised system; otherwise trop(d^k g) for
 * k <= depth. */
TD_API td_status td_run_solve(const char* const* gens, size_t n_gens, uint32_t trunc, int32_t depth, uint32_t t_max,
                              uint32_t p_max, td_report** out);
TD_API td_status td_run_initial(const char* poly, uint32_t trunc, const char* const* sets, size_t n_sets,
                                int hu_gao, td_report** out);
/* parts: "alpha; monomial; polynomial" each. */
TD_API td_status td_run_lift(const char* const* parts, size_t n_parts, uint32_t trunc, const char* const* sets,
                             size_t n_sets, td_report** out);
TD_API td_status td_run_check_basis(const char* const* gens, size_t n_gens, const char* const* ref_gens,
                                    size_t n_ref_gens, uint32_t trunc, uint32_t depth, uint32_t t_max,
                                    uint32_t p_max, td_report** out);
/* solutions: "series_1; ...; series_n" each. */
TD_API td_status td_run_theorem_pp(const char* const* gens, size_t n_gens, const char* const* solutions,
                                   size_t n_solutions, uint32_t trunc, uint32_t depth, uint32_t product_depth,
                                   uint32_t t_max, uint32_t p_max, td_report** out);
TD_API td_status td_run_suppmin(const char* poly, uint32_t trunc, uint32_t k_max, td_report** out);
TD_API td_status td_run_matroid_check(uint32_t r, td_report** out);
/* a, b >= 0 searches one pair; a = b = -1 audits every pair for the given r. */
TD_API td_status td_run_qab_audit(const char* const* gens, size_t n_gens, uint32_t trunc, uint32_t r,
                                  uint32_t depth, int32_t a, int32_t b, td_report** out);
TD_API td_status td_run_denef(const char* phi2, uint32_t trunc, td_report** out);
TD_API td_status td_run_paper_examples(td_report** out);

#ifdef __cplusplus
}
#endif

#endif /* TROPDIFF_CAPI_H */
