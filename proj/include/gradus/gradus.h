#ifndef GRADUS_GRADUS_H
#define GRADUS_GRADUS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GRADUS_API __declspec(dllexport)
#else
#define GRADUS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the CLI uses them as exit codes. */
typedef enum gradus_status {
    GRADUS_OK = 0,
    GRADUS_USAGE = 1,        /* malformed input */
    GRADUS_PRECONDITION = 2, /* input violates an operation's contract */
    GRADUS_INTERNAL = 3      /* library invariant failed */
} gradus_status;

typedef enum gradus_verdict {
    GRADUS_SMOOTH = 0,
    GRADUS_SINGULAR = 1,
    GRADUS_INCONCLUSIVE = 2
} gradus_verdict;

typedef struct gradus_context gradus_context;
typedef struct gradus_report gradus_report;
typedef struct gradus_poly gradus_poly;

GRADUS_API const char* gradus_version(void);

/* field: "rational" or "fp:<p>"; NULL means "rational". On failure *out is
   NULL and the message is available from gradus_last_error(NULL). */
GRADUS_API gradus_status gradus_context_new(const char* field, uint64_t seed, gradus_context** out);
GRADUS_API void gradus_context_free(gradus_context* ctx);

/* Options: "coeff-bound", "kmax", "trials", "timing" (0 or 1). */
GRADUS_API gradus_status gradus_context_set_option(gradus_context* ctx, const char* name, int64_t value);

/* Message of the last failure on this context (or of the last failed
   gradus_context_new when ctx is NULL). Valid until the next call. */
GRADUS_API const char* gradus_last_error(const gradus_context* ctx);

/* Runs a command with parameters given as a JSON object. */
GRADUS_API gradus_status gradus_run(gradus_context* ctx, const char* command, const char* params_json,
                                    gradus_report** out);
/* Report as JSON with sorted keys; owned by the report. */
GRADUS_API const char* gradus_report_json(const gradus_report* report);
GRADUS_API void gradus_report_free(gradus_report* report);

/* Number of commands and their names (static strings). */
GRADUS_API size_t gradus_command_count(void);
GRADUS_API const char* gradus_command_name(size_t index);

/* Polynomials. dual = 0 parses x-variables, dual = 1 y-variables. num_vars = 0
   infers the count from the largest index. */
GRADUS_API gradus_status gradus_poly_parse(gradus_context* ctx, const char* text, int dual, size_t num_vars,
                                           gradus_poly** out);
GRADUS_API void gradus_poly_free(gradus_poly* poly);
/* Canonical text; release with gradus_string_free. */
GRADUS_API char* gradus_poly_to_string(const gradus_poly* poly);
GRADUS_API void gradus_string_free(char* text);

GRADUS_API gradus_status gradus_milnor_dim(gradus_context* ctx, const gradus_poly* poly, unsigned k, size_t* out);
GRADUS_API gradus_status gradus_is_smooth(gradus_context* ctx, const gradus_poly* poly, gradus_verdict* out);

#ifdef __cplusplus
}
#endif

#endif
