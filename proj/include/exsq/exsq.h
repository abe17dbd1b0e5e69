#ifndef EXSQ_EXSQ_H
#define EXSQ_EXSQ_H

/* C interface to the exsq library: n distinct squares whose sum, leaving out
 * any one of them, is again a square.
 *
 * Big integers cross this boundary as decimal strings. Strings returned through
 * `char**` out-parameters are owned by the caller and released with
 * exsq_string_free. Functions return an exsq_status; on failure a message is
 * available from exsq_last_error() on the same thread until the next call. */

#include <stddef.h>

#if defined(_WIN32)
#define EXSQ_API __declspec(dllexport)
#else
#define EXSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum exsq_status {
    EXSQ_OK = 0,
    EXSQ_VERIFY_FAILED = 1, /* a system or cross-check did not verify */
    EXSQ_BAD_INPUT = 2,     /* invalid or degenerate parameters, unknown id */
    EXSQ_PARSE_ERROR = 3,   /* unreadable file, malformed JSON or catalog text */
    EXSQ_INTERNAL = 4
} exsq_status;

typedef struct exsq_system exsq_system;
typedef struct exsq_catalog exsq_catalog;

EXSQ_API const char* exsq_last_error(void);
EXSQ_API void exsq_string_free(char* s);

/* Generation. Method 1: seed plus sign flips and transforms, parameter t.
 * Method 2: chain assignment pipelines for n = 5..8 with parameters (a, b),
 * which are (q1, q2) for n = 5 and (p1, p2) otherwise. */
EXSQ_API exsq_status exsq_generate_method1(int n, const char* t, exsq_system** out);
EXSQ_API exsq_status exsq_generate_method2(int n, const char* a, const char* b, exsq_system** out);
/* Repeated-root starting families: "general" takes n >= 3, "special" takes
 * m >= 2 and yields n = m*m + 1 terms. Roots may repeat. */
EXSQ_API exsq_status exsq_generate_seed(const char* family, int size, const char* t, exsq_system** out);

EXSQ_API void exsq_system_free(exsq_system* sys);
EXSQ_API size_t exsq_system_size(const exsq_system* sys);
EXSQ_API exsq_status exsq_system_root(const exsq_system* sys, size_t i, char** out);
EXSQ_API exsq_status exsq_system_certificate(const exsq_system* sys, size_t i, char** out);
EXSQ_API exsq_status exsq_system_s(const exsq_system* sys, char** out);
EXSQ_API exsq_status exsq_system_to_json(const exsq_system* sys, char** out);
EXSQ_API exsq_status exsq_system_from_json(const char* json, exsq_system** out);

/* Independent validation. Returns EXSQ_OK or EXSQ_VERIFY_FAILED; `report`
 * (may be NULL) receives "OK" or one line per problem. */
EXSQ_API exsq_status exsq_verify(const exsq_system* sys, int require_distinct, char** report);

/* Catalog of published parametric families. */
EXSQ_API exsq_status exsq_catalog_open_builtin(exsq_catalog** out);
EXSQ_API exsq_status exsq_catalog_open_file(const char* path, exsq_catalog** out);
EXSQ_API void exsq_catalog_free(exsq_catalog* cat);
/* Newline-separated ids in sorted order. */
EXSQ_API exsq_status exsq_catalog_list(const exsq_catalog* cat, char** out);
/* b may be NULL for single-parameter families. */
EXSQ_API exsq_status exsq_catalog_eval(const exsq_catalog* cat, const char* id, const char* a, const char* b,
                                       exsq_system** out);
EXSQ_API exsq_status exsq_catalog_cross_check(const exsq_catalog* cat, const char* id, int points, char** report);

/* Sweeps. The callback sees each point in order: `json` is the system as one
 * JSON line, or NULL with `reason` set when the point was skipped. `failed`
 * is nonzero for anything other than a degenerate parameter. */
typedef void (*exsq_sweep_callback)(void* user, const char* point, const char* json, const char* reason,
                                    int failed);
EXSQ_API exsq_status exsq_sweep_method1(int n, const char* t_from, const char* t_to, unsigned threads,
                                        exsq_sweep_callback cb, void* user);
EXSQ_API exsq_status exsq_sweep_method2(int n, long max_sum, unsigned threads, exsq_sweep_callback cb, void* user);

/* Symbolic derivation for n = 5..8 as JSON: every branch with the parameter
 * forms as coefficient tuples, plus whether each matches the built-in closed form. */
EXSQ_API exsq_status exsq_derive(int n, char** out);

#ifdef __cplusplus
}
#endif

#endif
