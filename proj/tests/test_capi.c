/* Copyright 2026 The Coorbit Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "coorbit/coorbit.h"

static int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static int count_sets(const char* literal, void* user) {
    (void)literal;
    ++*(int*)user;
    return 0;
}

static int stop_after_two(const char* literal, void* user) {
    (void)literal;
    return ++*(int*)user >= 2;
}

static void count_lines(const char* line, void* user) {
    EXPECT(line[0] == '{');
    ++*(int*)user;
}

int main(void) {
    coorbit_system* sys = NULL;
    EXPECT(coorbit_system_create('D', 7, &sys) == COORBIT_OK);
    EXPECT(coorbit_system_size(sys) == 42);
    EXPECT(coorbit_system_mu(sys) == 18);

    coorbit_dim_options opts;
    memset(&opts, 0, sizeof opts);
    opts.set_literal = "e1-e5,e1+e5,e2-e6,e2+e6,e3+e4";
    char* json = NULL;
    EXPECT(coorbit_dim(sys, &opts, &json) == COORBIT_OK);
    EXPECT(json != NULL && strstr(json, "\"predicted_dim\":30") != NULL);
    coorbit_string_free(json);

    opts.perturb_defect = 1;
    json = NULL;
    EXPECT(coorbit_dim(sys, &opts, &json) == COORBIT_MISMATCH);
    coorbit_string_free(json);

    opts.perturb_defect = 0;
    opts.set_literal = "e1-e2,e1";
    json = NULL;
    EXPECT(coorbit_dim(sys, &opts, &json) == COORBIT_E_INPUT);
    EXPECT(json == NULL);
    EXPECT(strlen(coorbit_last_error()) > 0);

    uint32_t small = 5;
    opts.set_literal = "";
    opts.primes = &small;
    opts.prime_count = 1;
    EXPECT(coorbit_dim(sys, &opts, &json) == COORBIT_E_INPUT);
    coorbit_system_destroy(sys);

    EXPECT(coorbit_system_create('D', 1, &sys) == COORBIT_E_INPUT);
    EXPECT(coorbit_system_create('A', 3, &sys) == COORBIT_E_INPUT);

    EXPECT(coorbit_system_create('B', 2, &sys) == COORBIT_OK);
    uint64_t count = 0;
    EXPECT(coorbit_count_normalized(sys, &count) == COORBIT_OK);
    EXPECT(count == 6);
    int seen = 0;
    EXPECT(coorbit_enumerate(sys, count_sets, &seen) == COORBIT_OK);
    EXPECT(seen == 6);
    seen = 0;
    EXPECT(coorbit_enumerate(sys, stop_after_two, &seen) == COORBIT_OK);
    EXPECT(seen == 2);

    coorbit_verify_options vopts;
    memset(&vopts, 0, sizeof vopts);
    vopts.xi_samples = 1;
    vopts.jobs = 1;
    int lines = 0;
    json = NULL;
    EXPECT(coorbit_verify(sys, &vopts, count_lines, &lines, &json) == COORBIT_OK);
    EXPECT(lines == 6);
    EXPECT(json != NULL && strstr(json, "\"mismatches\":0") != NULL);
    coorbit_string_free(json);

    vopts.budget = 10.0;
    EXPECT(coorbit_verify(sys, &vopts, NULL, NULL, &json) == COORBIT_E_BUDGET);

    json = NULL;
    EXPECT(coorbit_spectrum(sys, 5, &json) == COORBIT_OK);
    EXPECT(json != NULL && strstr(json, "\"functionals\":625") != NULL);
    coorbit_string_free(json);

    json = NULL;
    EXPECT(coorbit_roots_json(sys, &json) == COORBIT_OK);
    EXPECT(json != NULL && strstr(json, "\"e1-e2\"") != NULL);
    coorbit_string_free(json);
    coorbit_system_destroy(sys);

    EXPECT(strcmp(coorbit_version(), "0.1.0") == 0);
    coorbit_string_free(NULL);

    if (failures) fprintf(stderr, "%d failure(s)\n", failures);
    return failures ? 1 : 0;
}
