/*
 * planaut: plane polynomial maps over the rationals with scattered degrees.
 *
 * C interface to the library. All objects are opaque handles owned by the
 * caller and released with the matching *_free function. Functions return a
 * pa_status; on failure a description is available from pa_last_error()
 * until the next call on the same thread.
 */
#ifndef PLANAUT_H
#define PLANAUT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  if defined(PLANAUT_BUILDING)
#    define PLANAUT_API __declspec(dllexport)
#  else
#    define PLANAUT_API __declspec(dllimport)
#  endif
#else
#  define PLANAUT_API __attribute__((visibility("default")))
#endif

typedef enum pa_status {
    PA_OK = 0,
    PA_ERR_INVALID_ARGUMENT = 1,
    PA_ERR_PARSE = 2,
    PA_ERR_CONSTANT_TERM = 3,
    PA_ERR_NO_LINEAR_PART = 4,
    PA_ERR_SINGULAR_LINEAR_PART = 5,
    PA_ERR_NOT_SCATTERED = 6,
    PA_ERR_JACOBIAN_NOT_UNIT = 7,
    PA_ERR_INCONSISTENT_COEFFICIENTS = 8,
    PA_ERR_DEGREE_TOO_SMALL = 9,
    PA_ERR_STRUCTURE_INCONSISTENT = 10,
    PA_ERR_VERIFICATION_FAILED = 11,
    PA_ERR_INVALID_SPEC = 12,
    PA_ERR_INTERNAL = 13
} pa_status;

typedef enum pa_format {
    PA_FORMAT_TEXT = 0,
    PA_FORMAT_STRUCTURED = 1
} pa_format;

typedef enum pa_case {
    PA_CASE_LINEAR = 0,
    PA_CASE_1 = 1,
    PA_CASE_2 = 2,
    PA_CASE_3 = 3
} pa_case;

typedef struct pa_poly pa_poly;
typedef struct pa_report pa_report;

PLANAUT_API const char* pa_version(void);
PLANAUT_API const char* pa_status_name(pa_status status);
/* Message of the last failing call on this thread; "" if none. */
PLANAUT_API const char* pa_last_error(void);
/* Frees strings returned through char** out-parameters. */
PLANAUT_API void pa_string_free(char* s);

/* ---- polynomials ---- */

PLANAUT_API pa_status pa_poly_parse(const char* text, pa_poly** out);
PLANAUT_API void pa_poly_free(pa_poly* p);
/* Canonical text form; free with pa_string_free. */
PLANAUT_API pa_status pa_poly_print(const pa_poly* p, char** out);
/* 1 if equal, 0 if not, -1 on a null argument. */
PLANAUT_API int pa_poly_equal(const pa_poly* a, const pa_poly* b);
/* Total degree, or -1 for the zero polynomial. */
PLANAUT_API long pa_poly_degree(const pa_poly* p);
/* Coefficient of x^i y^j as "a" or "a/b"; free with pa_string_free. */
PLANAUT_API pa_status pa_poly_coefficient(const pa_poly* p, uint32_t i, uint32_t j, char** out);
PLANAUT_API pa_status pa_poly_jacobian(const pa_poly* f, const pa_poly* g, pa_poly** out);
/* p(u, v) */
PLANAUT_API pa_status pa_poly_compose(const pa_poly* p, const pa_poly* u, const pa_poly* v, pa_poly** out);

/* ---- maps ---- */

/* Scatter check on a degree list. Returns 1 and leaves witness untouched when
 * scattered, 0 and fills witness[4] = (a, b, p, q) when not, -1 on bad input. */
PLANAUT_API int pa_degrees_scattered(const uint32_t* degrees, size_t count, uint32_t witness[4]);

/* Inverse (X, Y) of the map (f, g), verified by composition on both sides. */
PLANAUT_API pa_status pa_invert(const pa_poly* f, const pa_poly* g, pa_poly** X, pa_poly** Y, pa_case* kind);

/* ---- command reports ---- */

typedef struct pa_generate_options {
    const uint32_t* degrees;
    size_t degree_count;
    int case_number;         /* 1, 2 or 3 */
    uint32_t coeff_bound;    /* > 0 */
    uint64_t seed;
    int twist;               /* nonzero: substitute a random invertible linear change */
} pa_generate_options;

typedef struct pa_selftest_options {
    uint32_t count;
    uint32_t max_degree;
    uint64_t seed;
    uint32_t coeff_bound;    /* 0 selects 100 */
    unsigned workers;        /* 0 selects the hardware concurrency */
    int inject_fault;        /* nonzero corrupts every inverse (exercises exit 5) */
} pa_selftest_options;

/* Each runner produces a report even when the input fails a check; the
 * verdict and exit code live in the report. The status is only non-OK for
 * bad arguments or allocation failure. `bound` <= 0 selects the default. */
PLANAUT_API pa_status pa_run_check(const char* source_text, const char* source_name, pa_report** out);
PLANAUT_API pa_status pa_run_invert(const char* source_text, const char* source_name, long bound,
                                    pa_report** out);
PLANAUT_API pa_status pa_run_generate(const pa_generate_options* options, pa_report** out);
PLANAUT_API pa_status pa_run_selftest(const pa_selftest_options* options, pa_report** out);

PLANAUT_API void pa_report_free(pa_report* r);
PLANAUT_API int pa_report_exit_code(const pa_report* r);
/* "pass", "not_scattered", "jacobian_not_unit", "parse_error", "input_error", "internal_error" */
PLANAUT_API const char* pa_report_verdict(const pa_report* r);
/* Rendered report; owned by the report and valid until it is freed. */
PLANAUT_API const char* pa_report_render(const pa_report* r, pa_format format);

#ifdef __cplusplus
}
#endif

#endif /* PLANAUT_H */
