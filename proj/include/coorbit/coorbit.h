/* Copyright 2026 The Coorbit Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the coorbit engine. Results come back as JSON strings owned
 * by the caller (release with coorbit_string_free). On any status other than
 * COORBIT_OK or COORBIT_MISMATCH, coorbit_last_error() describes the failure
 * for the calling thread.
 */
#ifndef COORBIT_COORBIT_H
#define COORBIT_COORBIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COORBIT_API __declspec(dllexport)
#elif defined(__GNUC__)
#define COORBIT_API __attribute__((visibility("default")))
#else
#define COORBIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coorbit_status {
    COORBIT_OK = 0,
    COORBIT_MISMATCH = 1, /* computed fine, but a check disagreed */
    COORBIT_E_INPUT = 2,  /* bad family, rank, literal, prime or option */
    COORBIT_E_BUDGET = 3, /* the request would exceed its work budget */
    COORBIT_E_INTERNAL = 4
} coorbit_status;

typedef struct coorbit_system coorbit_system;

/* family is 'B', 'C' or 'D'. */
COORBIT_API coorbit_status coorbit_system_create(char family, int rank, coorbit_system** out);
COORBIT_API void coorbit_system_destroy(coorbit_system* system);
COORBIT_API int coorbit_system_size(const coorbit_system* system);
COORBIT_API int coorbit_system_mu(const coorbit_system* system);

COORBIT_API coorbit_status coorbit_roots_json(const coorbit_system* system, char** out_json);

/* Called once per normalized subset, in canonical order; return nonzero to stop. */
typedef int (*coorbit_set_visitor)(const char* set_literal, void* user);
COORBIT_API coorbit_status coorbit_enumerate(const coorbit_system* system, coorbit_set_visitor visit, void* user);
COORBIT_API coorbit_status coorbit_count_normalized(const coorbit_system* system, uint64_t* out_count);

typedef struct coorbit_dim_options {
    const char* set_literal;   /* "" or NULL for the empty set */
    const char* xi_literal;    /* NULL: all ones unless has_seed */
    int has_seed;
    uint64_t xi_seed;
    const uint32_t* primes;    /* NULL or empty: smallest prime >= m */
    size_t prime_count;
    int perturb_defect;
} coorbit_dim_options;

/* One verification record. COORBIT_MISMATCH when prediction and oracles disagree. */
COORBIT_API coorbit_status coorbit_dim(const coorbit_system* system, const coorbit_dim_options* options,
                                       char** out_json);

typedef struct coorbit_verify_options {
    int xi_samples;
    const uint32_t* primes;
    size_t prime_count;
    int jobs;
    int perturb_defect;
    double budget; /* <= 0 selects the default */
} coorbit_verify_options;

typedef void (*coorbit_record_sink)(const char* ndjson_line, void* user);

/* Exhaustive sweep; records reach `sink` (may be NULL) in canonical order and
 * the summary is returned in out_json. */
COORBIT_API coorbit_status coorbit_verify(const coorbit_system* system, const coorbit_verify_options* options,
                                          coorbit_record_sink sink, void* user, char** out_json);

/* census_q == 0 skips the brute-force census. */
COORBIT_API coorbit_status coorbit_spectrum(const coorbit_system* system, uint32_t census_q, char** out_json);

COORBIT_API const char* coorbit_last_error(void);
COORBIT_API void coorbit_string_free(char* s);
COORBIT_API const char* coorbit_version(void);

#ifdef __cplusplus
}
#endif

#endif /* COORBIT_COORBIT_H */
