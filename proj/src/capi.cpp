// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "coorbit/coorbit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "coorbit/errors.hpp"
#include "coorbit/orthoset.hpp"
#include "coorbit/report.hpp"
#include "coorbit/weyl.hpp"

struct coorbit_system {
    coorbit::SystemPtr system;
};

namespace {

thread_local std::string last_error;

coorbit_status fail(coorbit_status status, const char* what) {
    last_error = what;
    return status;
}

// Runs `body` and maps the engine's exceptions to status codes.
template <class F>
coorbit_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const coorbit::InputError& e) {
        return fail(COORBIT_E_INPUT, e.what());
    } catch (const coorbit::ConfigError& e) {
        return fail(COORBIT_E_INPUT, e.what());
    } catch (const coorbit::BudgetError& e) {
        return fail(COORBIT_E_BUDGET, e.what());
    } catch (const coorbit::InternalError& e) {
        return fail(COORBIT_E_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(COORBIT_E_BUDGET, "out of memory");
    } catch (const std::exception& e) {
        return fail(COORBIT_E_INTERNAL, e.what());
    } catch (...) {
        return fail(COORBIT_E_INTERNAL, "unknown failure");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::uint32_t> prime_list(const uint32_t* primes, size_t count) {
    if (primes == nullptr) return {};
    return {primes, primes + count};
}

}  // namespace

extern "C" {

coorbit_status coorbit_system_create(char family, int rank, coorbit_system** out) {
    if (out == nullptr) return fail(COORBIT_E_INPUT, "null output handle");
    *out = nullptr;
    return guarded([&] {
        auto sys = coorbit::build_system(coorbit::parse_family(std::string(1, family)), rank);
        *out = new coorbit_system{std::move(sys)};
        return COORBIT_OK;
    });
}

void coorbit_system_destroy(coorbit_system* system) { delete system; }

int coorbit_system_size(const coorbit_system* system) { return system ? system->system->size() : -1; }

int coorbit_system_mu(const coorbit_system* system) {
    return system ? coorbit::mu_max(system->system->family(), system->system->rank()) : -1;
}

coorbit_status coorbit_roots_json(const coorbit_system* system, char** out_json) {
    if (system == nullptr || out_json == nullptr) return fail(COORBIT_E_INPUT, "null argument");
    return guarded([&] {
        *out_json = dup_string(coorbit::roots_table(*system->system).dump());
        return COORBIT_OK;
    });
}

coorbit_status coorbit_enumerate(const coorbit_system* system, coorbit_set_visitor visit, void* user) {
    if (system == nullptr || visit == nullptr) return fail(COORBIT_E_INPUT, "null argument");
    return guarded([&] {
        coorbit::enumerate_normalized(system->system, [&](const coorbit::OrthoSet& s) {
            return visit(s.literal().c_str(), user) == 0;
        });
        return COORBIT_OK;
    });
}

coorbit_status coorbit_count_normalized(const coorbit_system* system, uint64_t* out_count) {
    if (system == nullptr || out_count == nullptr) return fail(COORBIT_E_INPUT, "null argument");
    return guarded([&] {
        *out_count = coorbit::count_normalized(system->system);
        return COORBIT_OK;
    });
}

coorbit_status coorbit_dim(const coorbit_system* system, const coorbit_dim_options* options, char** out_json) {
    if (system == nullptr || options == nullptr || out_json == nullptr) return fail(COORBIT_E_INPUT, "null argument");
    *out_json = nullptr;
    return guarded([&] {
        coorbit::DimRequest req;
        req.system = system->system;
        req.set_literal = options->set_literal ? options->set_literal : "";
        if (options->xi_literal) req.xi.literal = options->xi_literal;
        if (options->has_seed) req.xi.seed = options->xi_seed;
        req.primes = prime_list(options->primes, options->prime_count);
        req.perturb_defect = options->perturb_defect;
        const coorbit::VerificationRecord record = coorbit::compute_dim_record(req);
        *out_json = dup_string(record.ndjson());
        return record.match ? COORBIT_OK : COORBIT_MISMATCH;
    });
}

coorbit_status coorbit_verify(const coorbit_system* system, const coorbit_verify_options* options,
                              coorbit_record_sink sink, void* user, char** out_json) {
    if (system == nullptr || options == nullptr || out_json == nullptr) return fail(COORBIT_E_INPUT, "null argument");
    *out_json = nullptr;
    return guarded([&] {
        coorbit::VerifyRequest req;
        req.system = system->system;
        req.xi_samples = options->xi_samples;
        req.primes = prime_list(options->primes, options->prime_count);
        req.jobs = options->jobs;
        req.perturb_defect = options->perturb_defect;
        if (options->budget > 0) req.budget = options->budget;
        const coorbit::VerifySummary summary = coorbit::run_verify(req, [&](const coorbit::Json& rec) {
            if (sink) sink(rec.dump().c_str(), user);
        });
        *out_json = dup_string(summary.body.dump());
        return summary.ok() ? COORBIT_OK : COORBIT_MISMATCH;
    });
}

coorbit_status coorbit_spectrum(const coorbit_system* system, uint32_t census_q, char** out_json) {
    if (system == nullptr || out_json == nullptr) return fail(COORBIT_E_INPUT, "null argument");
    *out_json = nullptr;
    return guarded([&] {
        bool ok = false;
        std::optional<std::uint32_t> q;
        if (census_q != 0) {
            if (!coorbit::is_prime(census_q)) throw coorbit::InputError("census modulus must be prime");
            q = census_q;
        }
        const coorbit::Json table = coorbit::spectrum_table(system->system, q, &ok);
        *out_json = dup_string(table.dump());
        return ok ? COORBIT_OK : COORBIT_MISMATCH;
    });
}

const char* coorbit_last_error(void) { return last_error.c_str(); }

void coorbit_string_free(char* s) { std::free(s); }

const char* coorbit_version(void) { return "0.1.0"; }

}  // extern "C"
