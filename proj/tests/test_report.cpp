// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "coorbit/errors.hpp"
#include "coorbit/report.hpp"

using namespace coorbit;

namespace {

SystemPtr sys(char f, int n) { return build_system(parse_family(std::string(1, f)), n); }

VerificationRecord dim(char f, int n, const std::string& set, XiSpec xi = {}, std::vector<std::uint32_t> primes = {}) {
    return compute_dim_record(DimRequest{sys(f, n), set, std::move(xi), std::move(primes), 0});
}

}  // namespace

TEST_CASE("dim record for the D7 example") {
    const VerificationRecord r = dim('D', 7, "e1-e5,e1+e5,e2-e6,e2+e6,e3+e4");
    CHECK(r.match);
    const Json& b = r.body;
    CHECK(b["family"] == "D");
    CHECK(b["n"] == 7);
    CHECK(b["primes"] == Json::array({17}));
    CHECK(b["l_sigma"] == 41);
    CHECK(b["s_sigma"] == 5);
    CHECK(b["defect"]["theta"] == 3);
    CHECK(b["predicted_dim"] == 30);
    CHECK(b["oracle_rank"]["17"] == 30);
    CHECK(b["polarization"]["dim"] == 27);
    CHECK(b["polarization"]["p0_size"] == 3);
    CHECK(b["blocks"].size() == 3);
    CHECK(b["p0"][0]["i"] == 1);
    CHECK(b["p0"][0]["l"] == 2);
    CHECK(b["p0"][0]["j"] == 5);
    CHECK_FALSE(b.contains("normalized_set"));
}

TEST_CASE("dim record for the B7 example at two primes") {
    const VerificationRecord r = dim('B', 7, "e1-e6,e1+e6,e2,e3-e7,e3+e7,e4+e5", {}, {17, 101});
    CHECK(r.match);
    CHECK(r.body["l_sigma"] == 48);
    CHECK(r.body["defect"]["theta"] == 6);
    CHECK(r.body["predicted_dim"] == 30);
    CHECK(r.body["oracle_rank"]["17"] == 30);
    CHECK(r.body["oracle_rank"]["101"] == 30);
}

TEST_CASE("empty set and non-normalized input") {
    const VerificationRecord e = dim('C', 3, "");
    CHECK(e.match);
    CHECK(e.body["predicted_dim"] == 0);
    CHECK(e.body["set"] == "");

    const VerificationRecord n = dim('B', 3, "e1,e3");
    CHECK(n.match);
    CHECK(n.body["normalized_set"] == "e1");
    CHECK(n.body["predicted_dim"] == n.body["oracle_rank"]["7"]);
}

TEST_CASE("records are deterministic and round-trip through JSON") {
    XiSpec seeded;
    seeded.seed = 42;
    const VerificationRecord a = dim('B', 5, "e1+e2,e3", seeded);
    const VerificationRecord b = dim('B', 5, "e1+e2,e3", seeded);
    CHECK(a.ndjson() == b.ndjson());
    CHECK(a.body["xi_seed"] == 42);
    CHECK(Json::parse(a.ndjson()) == a.body);

    XiSpec literal;
    literal.literal = a.body["xi"].get<std::string>();
    const VerificationRecord c = dim('B', 5, "e1+e2,e3", literal);
    CHECK(c.body["xi"] == a.body["xi"]);
    CHECK(c.body["oracle_rank"] == a.body["oracle_rank"]);
}

TEST_CASE("input errors") {
    CHECK_THROWS_AS(dim('B', 3, "e1-e2,e1"), InputError);
    CHECK_THROWS_AS(dim('B', 3, "e1", {}, {3}), ConfigError);
    CHECK_THROWS_AS(dim('B', 3, "e1", {}, {9}), InputError);
    XiSpec both;
    both.seed = 1;
    both.literal = "e1=2";
    CHECK_THROWS_AS(dim('B', 3, "e1", both), InputError);
    XiSpec zero;
    zero.literal = "e1=7";
    CHECK_THROWS_AS(dim('B', 3, "e1", zero), InputError);
    CHECK(resolve_primes(*sys('C', 4), {}) == std::vector<std::uint32_t>{11});
}

TEST_CASE("verify sweep") {
    std::vector<Json> records;
    const VerifySummary s = run_verify(VerifyRequest{sys('B', 3), 2, {}, 2, 0, 5e10},
                                       [&](const Json& r) { records.push_back(r); });
    CHECK(s.ok());
    CHECK(s.body["subsets"] == records.size());
    CHECK(s.body["dims_cover_spectrum"] == true);
    CHECK(records.front()["set"] == "");
    for (const Json& r : records) {
        CHECK(r["match"] == true);
        CHECK(r["samples"].size() == 3);
    }
}

TEST_CASE("verify is independent of the thread count") {
    const auto run = [](int jobs) {
        std::string out;
        run_verify(VerifyRequest{sys('C', 3), 1, {7, 11}, jobs, 0, 5e10},
                   [&](const Json& r) { out += r.dump() + "\n"; });
        return out;
    };
    CHECK(run(1) == run(4));
}

TEST_CASE("a perturbed defect is caught") {
    const VerifySummary s = run_verify(VerifyRequest{sys('B', 4), 0, {}, 2, 1, 5e10}, [](const Json&) {});
    CHECK_FALSE(s.ok());
    CHECK(s.body["rank_mismatches"].get<int>() > 0);
}

TEST_CASE("verify budgets") {
    CHECK_THROWS_AS(run_verify(VerifyRequest{sys('B', 5), 3, {}, 1, 0, 1e3}, [](const Json&) {}), BudgetError);
    CHECK_THROWS_AS(run_verify(VerifyRequest{sys('D', 10), 3, {}, 1, 0, 1e30}, [](const Json&) {}), BudgetError);
}

TEST_CASE("spectrum table") {
    bool ok = false;
    const Json t = spectrum_table(sys('B', 2), 5u, &ok);
    CHECK(ok);
    CHECK(t["mu"] == 1);
    CHECK(t["rows"].size() == 2);
    CHECK(t["census"]["functionals"] == 625);
    CHECK(t["census"]["ok"] == true);

    const Json b7 = spectrum_table(sys('B', 7), std::nullopt, &ok);
    CHECK(ok);
    CHECK(b7["rows"].size() == 22);
    CHECK(b7["rows"][21]["oracle_rank"] == 42);
}

TEST_CASE("roots table") {
    const Json t = roots_table(*sys('C', 2));
    CHECK(t["count"] == 4);
    CHECK(t["m"] == 4);
    CHECK(t["roots"][2]["root"] == "2e1");
    CHECK(t["roots"][2]["row"] == -1);
}
