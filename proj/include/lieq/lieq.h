#ifndef LIEQ_H
#define LIEQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LIEQ_API __declspec(dllexport)
#else
#define LIEQ_API __attribute__((visibility("default")))
#endif

typedef struct lieq_algebra lieq_algebra;
typedef struct lieq_report lieq_report;

typedef enum lieq_status {
    LIEQ_OK = 0,
    LIEQ_ERR_INVALID_ARGUMENT = 1,
    LIEQ_ERR_PARSE = 2,
    LIEQ_ERR_UNKNOWN_ALGEBRA = 3,
    LIEQ_ERR_SINGULAR = 4,
    LIEQ_ERR_NOT_CONTRACTIBLE = 5,
    LIEQ_ERR_NOT_AN_IDEAL = 6,
    LIEQ_ERR_INTERNAL = 7
} lieq_status;

typedef enum lieq_format { LIEQ_FORMAT_TEXT = 0, LIEQ_FORMAT_MACHINE = 1 } lieq_format;

typedef enum lieq_route { LIEQ_ROUTE_FORMULA = 0, LIEQ_ROUTE_SYMBOLIC = 1, LIEQ_ROUTE_BOTH = 2 } lieq_route;

/* Message of the last failed call on this thread ("" if none). */
LIEQ_API const char* lieq_last_error(void);

/* Algebras. Every successful constructor must be paired with lieq_algebra_free. */
LIEQ_API lieq_status lieq_algebra_from_catalog(const char* name, lieq_algebra** out);
LIEQ_API lieq_status lieq_algebra_parse(const char* text, const char* source_name, lieq_algebra** out);
/* `src` is a file path or "catalog:<name>". */
LIEQ_API lieq_status lieq_algebra_load(const char* src, lieq_algebra** out);
LIEQ_API void lieq_algebra_free(lieq_algebra* algebra);

LIEQ_API size_t lieq_algebra_dim(const lieq_algebra* algebra);
/* Borrowed pointer, valid while the algebra lives; NULL when out of range. */
LIEQ_API const char* lieq_algebra_generator(const lieq_algebra* algebra, size_t k);
LIEQ_API int lieq_algebra_jacobi_verified(const lieq_algebra* algebra);
/* Number of non-fatal parse warnings and the k-th one (borrowed). */
LIEQ_API size_t lieq_algebra_warning_count(const lieq_algebra* algebra);
LIEQ_API const char* lieq_algebra_warning(const lieq_algebra* algebra, size_t k);
/* [X_a, X_b] as a combination string such as "i*T1"; free with lieq_string_free. */
LIEQ_API lieq_status lieq_algebra_bracket(const lieq_algebra* algebra, size_t a, size_t b, char** out);
/* Definition text; free with lieq_string_free. */
LIEQ_API lieq_status lieq_algebra_emit(const lieq_algebra* algebra, char** out);
/* 1 when generators and structure constants are identical. */
LIEQ_API int lieq_algebra_equal(const lieq_algebra* a, const lieq_algebra* b);

/* Analyses. `source` is only used as a label in the report. */
LIEQ_API lieq_status lieq_check(const lieq_algebra* algebra, const char* source, lieq_report** out);
/* `v_path` may be NULL (v = 0). */
LIEQ_API lieq_status lieq_contract(const lieq_algebra* algebra, const char* source, size_t r, const char* v_path,
                                   lieq_route route, lieq_report** out);
/* `ideal` is a comma-separated generator list, possibly empty. */
LIEQ_API lieq_status lieq_quotient(const lieq_algebra* algebra, const char* source, const char* ideal,
                                   lieq_report** out);
LIEQ_API lieq_status lieq_rsets(const lieq_algebra* algebra, const char* source, lieq_report** out);
LIEQ_API lieq_status lieq_h2(const lieq_algebra* algebra, const char* source, lieq_report** out);
/* which: "lorentz" or "sim2". */
LIEQ_API lieq_status lieq_rep_verify(const char* which, lieq_report** out);
LIEQ_API lieq_status lieq_inhom_solve(lieq_report** out);
LIEQ_API lieq_status lieq_catalog(const char* name, lieq_report** out);
/* Usage or parse failure rendered as a report with exit code 2. */
LIEQ_API lieq_status lieq_error_report(const char* verb, const char* source, const char* message,
                                       lieq_report** out);

/* Reports. */
LIEQ_API lieq_status lieq_report_render(const lieq_report* report, lieq_format format, char** out);
LIEQ_API int lieq_report_exit_code(const lieq_report* report);
/* "pass", "fail", "value" or "error"; borrowed. */
LIEQ_API const char* lieq_report_verdict(const lieq_report* report);
LIEQ_API void lieq_report_free(lieq_report* report);

LIEQ_API void lieq_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
