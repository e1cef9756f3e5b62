// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coorbit/rootsys.hpp"

namespace coorbit {

using Json = nlohmann::ordered_json;

/// How the scalars of a record are chosen.
struct XiSpec {
    std::optional<std::string> literal;  // "root=value,..."
    std::optional<std::uint64_t> seed;   // seeded draw; ones when neither is set
};

struct DimRequest {
    SystemPtr system;
    std::string set_literal;
    XiSpec xi;
    std::vector<std::uint32_t> primes;  // empty: smallest prime >= m
    int perturb_defect = 0;             // added to theta; harness self-test only
};

/// Everything `dim` reports about one (D, xi). match holds iff the prediction
/// equals every oracle rank and all polarization flags are set.
struct VerificationRecord {
    Json body;
    bool match = false;

    std::string ndjson() const { return body.dump(); }
};

std::vector<std::uint32_t> resolve_primes(const RootSystem& system, const std::vector<std::uint32_t>& primes);

VerificationRecord compute_dim_record(const DimRequest& request);

struct VerifyRequest {
    SystemPtr system;
    int xi_samples = 3;
    std::vector<std::uint32_t> primes;
    int jobs = 1;
    int perturb_defect = 0;
    double budget = 5e10;  // rough count of field operations the sweep may spend
};

struct VerifySummary {
    Json body;
    std::uint64_t mismatches = 0;
    bool ok() const { return mismatches == 0; }
};

/// Exhaustive sweep over the normalized subsets; every record is handed to
/// `sink` in canonical order. Throws BudgetError before any work if the
/// estimate exceeds the budget.
VerifySummary run_verify(const VerifyRequest& request, const std::function<void(const Json&)>& sink);

/// Witness table for every exponent, plus an optional brute-force census.
Json spectrum_table(const SystemPtr& system, std::optional<std::uint32_t> census_q, bool* all_ok);

Json roots_table(const RootSystem& system);

}  // namespace coorbit
