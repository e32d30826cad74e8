#include "gradus/gradus.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                \
    do {                                                           \
        if (!(cond)) {                                             \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                            \
        }                                                          \
    } while (0)

int main(void) {
    gradus_context* ctx = NULL;
    CHECK(gradus_context_new("reals", 0, &ctx) == GRADUS_USAGE);
    CHECK(ctx == NULL);
    CHECK(strlen(gradus_last_error(NULL)) > 0);

    CHECK(gradus_context_new("rational", 3, &ctx) == GRADUS_OK);
    CHECK(gradus_context_set_option(ctx, "trials", 4) == GRADUS_OK);
    CHECK(gradus_context_set_option(ctx, "bogus", 1) == GRADUS_USAGE);
    CHECK(gradus_command_count() == 19);
    CHECK(strcmp(gradus_version(), "") != 0);

    gradus_poly* f = NULL;
    CHECK(gradus_poly_parse(ctx, "x0^3+x1^3+x2^3+x3^3+x4^3", 0, 5, &f) == GRADUS_OK);
    size_t dim = 0;
    CHECK(gradus_milnor_dim(ctx, f, 3, &dim) == GRADUS_OK);
    CHECK(dim == 10);
    gradus_verdict v = GRADUS_INCONCLUSIVE;
    CHECK(gradus_is_smooth(ctx, f, &v) == GRADUS_OK);
    CHECK(v == GRADUS_SMOOTH);
    char* text = gradus_poly_to_string(f);
    CHECK(text != NULL && strstr(text, "x4^3") != NULL);
    gradus_string_free(text);
    gradus_poly_free(f);

    gradus_poly* bad = NULL;
    CHECK(gradus_poly_parse(ctx, "x0 + * x1", 0, 0, &bad) == GRADUS_USAGE);
    CHECK(bad == NULL);
    CHECK(strlen(gradus_last_error(ctx)) > 0);

    gradus_report* report = NULL;
    CHECK(gradus_run(ctx, "special-q", "{\"n\": 4, \"d\": 3}", &report) == GRADUS_OK);
    CHECK(report != NULL && strstr(gradus_report_json(report), "\"schema_version\": 1") != NULL);
    gradus_report_free(report);
    report = NULL;
    CHECK(gradus_run(ctx, "special-q", "{\"n\": 4, \"d\": 4}", &report) == GRADUS_PRECONDITION);
    CHECK(report == NULL);
    CHECK(gradus_run(ctx, "special-q", "{not json", &report) == GRADUS_USAGE);
    CHECK(gradus_run(ctx, "no-such", "{}", &report) == GRADUS_USAGE);

    gradus_context_free(ctx);
    if (failures) fprintf(stderr, "%d failure(s)\n", failures);
    return failures ? 1 : 0;
}
