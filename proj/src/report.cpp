// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "coorbit/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

#include "coorbit/errors.hpp"
#include "coorbit/oracle.hpp"
#include "coorbit/reduction.hpp"
#include "coorbit/weyl.hpp"

namespace coorbit {

std::vector<std::uint32_t> resolve_primes(const RootSystem& system, const std::vector<std::uint32_t>& primes) {
    const auto m = static_cast<std::uint32_t>(system.matrix_size());
    if (primes.empty()) return {next_prime_at_least(m)};
    std::vector<std::uint32_t> out;
    for (std::uint32_t p : primes) {
        if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
        if (p < m) throw ConfigError("prime " + std::to_string(p) + " is below the matrix size " + std::to_string(m));
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

namespace {

std::string family_name(const RootSystem& system) { return std::string(1, family_char(system.family())); }

ScalarAssignment make_xi(const OrthoSet& set, const XiSpec& spec, const std::vector<std::uint32_t>& primes) {
    if (spec.literal && spec.seed) throw InputError("give either explicit scalars or a seed, not both");
    const std::uint32_t bound = *std::min_element(primes.begin(), primes.end());
    ScalarAssignment xi = spec.literal ? ScalarAssignment::parse(set, *spec.literal)
                          : spec.seed  ? ScalarAssignment::seeded(set, *spec.seed, bound)
                                       : ScalarAssignment::ones(set);
    for (std::uint32_t p : primes) xi.check_nonzero(p);
    return xi;
}

Json defect_json(const Defect& d) {
    return Json{{"d1", d.d1}, {"d2", d.d2}, {"d3", d.d3}, {"d4", d.d4}, {"theta", d.theta}};
}

Json blocks_json(const RootSystem& sys, const std::vector<Block>& blocks) {
    Json out = Json::array();
    for (const Block& b : blocks) {
        std::vector<Root> roots;
        for (int k : b.roots) roots.push_back(sys.root(k));
        out.push_back(Json{{"column", b.column}, {"roots", format_root_list(roots)}});
    }
    return out;
}

Json p0_json(const std::vector<P0Vector>& p0) {
    Json out = Json::array();
    for (const P0Vector& v : p0) {
        out.push_back(Json{{"i", v.i},
                           {"l", v.l},
                           {"j", v.j},
                           {"coeffs", Json{{to_string(Root::diff(v.l, v.j)), v.minus_coeff},
                                           {to_string(Root::sum(v.l, v.j)), v.plus_coeff}}}});
    }
    return out;
}

struct Prediction {
    std::optional<int> value;
    std::string error;
    InversionData inversions;
    Defect defect;
};

Prediction predict(const OrthoSet& set, int perturb) {
    Prediction out;
    out.defect = defect(set);
    out.inversions = inversion_length(set.system(), involution_of(set));
    if (perturb == 0) {
        try {
            out.value = predicted_dim(set);
        } catch (const InternalError& e) {
            out.error = e.what();
        }
        return out;
    }
    const int value = out.inversions.length - static_cast<int>(set.size()) - 2 * (out.defect.theta + perturb);
    if (value < 0 || value % 2 != 0) {
        out.error = "perturbed prediction " + std::to_string(value) + " is not a valid dimension";
    } else {
        out.value = value;
    }
    return out;
}

// One (D, xi) evaluated at every prime: oracle ranks on the input set,
// prediction and polarization on its normalization.
struct Evaluation {
    Json body;
    bool ranks_match = true;
    bool polarization_ok = true;
    bool bound_ok = true;
    std::set<int> ranks;
};

Evaluation evaluate(const LieAlgebra& algebra, const OrthoSet& set, const ScalarAssignment& xi,
                    const std::vector<std::uint32_t>& primes, int perturb, bool with_structure) {
    const RootSystem& sys = algebra.system();
    const Normalized norm = normalize(set, xi);
    const Prediction pred = predict(norm.set, perturb);
    const PolarizationBasis pb = polarization(norm.set, norm.xi);

    Evaluation ev;
    Json& body = ev.body;
    body["set"] = set.literal();
    if (!(norm.set == set)) body["normalized_set"] = norm.set.literal();
    body["xi"] = xi.literal(set);
    body["l_sigma"] = pred.inversions.length;
    body["s_sigma"] = norm.set.size();
    body["defect"] = defect_json(pred.defect);
    if (pred.value) {
        body["predicted_dim"] = *pred.value;
    } else {
        body["predicted_dim"] = nullptr;
        body["prediction_error"] = pred.error;
        ev.ranks_match = false;
    }

    Json ranks = Json::object();
    Json flags{{"independent_ok", true}, {"subalgebra_ok", true}, {"isotropic_ok", true}, {"maximal_ok", true}};
    for (std::uint32_t p : primes) {
        const PrimeField field(p);
        const int rank = skew_rank_dim(algebra, set, xi, field);
        ranks[std::to_string(p)] = rank;
        ev.ranks.insert(rank);
        if (!pred.value || *pred.value != rank) ev.ranks_match = false;
        if (rank > pred.inversions.length - static_cast<int>(norm.set.size())) ev.bound_ok = false;
        const PolarizationCheck check = certify_polarization(algebra, norm.set, norm.xi, field, rank);
        flags["independent_ok"] = flags["independent_ok"].get<bool>() && check.independent;
        flags["subalgebra_ok"] = flags["subalgebra_ok"].get<bool>() && check.subalgebra;
        flags["isotropic_ok"] = flags["isotropic_ok"].get<bool>() && check.isotropic;
        flags["maximal_ok"] = flags["maximal_ok"].get<bool>() && check.maximal;
        if (!check.ok()) ev.polarization_ok = false;
    }
    body["oracle_rank"] = ranks;

    Json pol{{"P_size", pb.coordinate_roots.size()}, {"p0_size", pb.p0.size()}, {"dim", pb.dim()}};
    pol.update(flags);
    body["polarization"] = pol;
    if (with_structure) {
        body["blocks"] = blocks_json(sys, pb.blocks);
        body["p0"] = p0_json(pb.p0);
    }
    return ev;
}

Json header(const RootSystem& sys, const std::vector<std::uint32_t>& primes) {
    return Json{{"family", family_name(sys)}, {"n", sys.rank()}, {"primes", primes}};
}

}  // namespace

VerificationRecord compute_dim_record(const DimRequest& request) {
    const RootSystem& sys = *request.system;
    const std::vector<std::uint32_t> primes = resolve_primes(sys, request.primes);
    const OrthoSet set = parse_set(request.system, request.set_literal);
    const ScalarAssignment xi = make_xi(set, request.xi, primes);
    const LieAlgebra algebra(request.system);

    Evaluation ev = evaluate(algebra, set, xi, primes, request.perturb_defect, true);
    VerificationRecord record;
    record.body = header(sys, primes);
    if (request.xi.seed) record.body["xi_seed"] = *request.xi.seed;
    record.body.update(ev.body);
    record.match = ev.ranks_match && ev.polarization_ok;
    record.body["match"] = record.match;
    return record;
}

VerifySummary run_verify(const VerifyRequest& request, const std::function<void(const Json&)>& sink) {
    const RootSystem& sys = *request.system;
    const std::vector<std::uint32_t> primes = resolve_primes(sys, request.primes);
    if (request.xi_samples < 0) throw InputError("xi-samples must be nonnegative");
    if (request.jobs < 1) throw InputError("jobs must be positive");

    const double cube = std::pow(static_cast<double>(std::max(sys.size(), 1)), 3.0);
    const double per_subset = static_cast<double>(request.xi_samples + 1) * static_cast<double>(primes.size()) * 3.0 * cube;
    if (sys.rank() > 9) {
        throw BudgetError("refusing rank " + std::to_string(sys.rank()) + ": each subset costs about " +
                          Json(per_subset).dump() + " field operations and the subsets number in the millions");
    }
    std::vector<OrthoSet> subsets;
    enumerate_normalized(request.system, [&](const OrthoSet& s) {
        subsets.push_back(s);
        return true;
    });
    const double estimate = per_subset * static_cast<double>(subsets.size());
    if (estimate > request.budget) {
        throw BudgetError("sweep needs about " + Json(estimate).dump() + " field operations over " +
                          std::to_string(subsets.size()) + " subsets; budget is " + Json(request.budget).dump());
    }

    const LieAlgebra algebra(request.system);
    std::vector<Json> records(subsets.size());
    struct Tally {
        bool match = false;
        bool rank_ok = false;
        bool polarization_ok = false;
        bool recursion_ok = false;
        bool xi_independent = false;
        bool bound_ok = false;
        int dim = -1;
        int theta = 0;
    };
    std::vector<Tally> tallies(subsets.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto work = [&] {
        for (std::size_t k = next++; k < subsets.size(); k = next++) {
            try {
                const OrthoSet& set = subsets[k];
                Json rec = header(sys, primes);
                rec["set"] = set.literal();
                Json samples = Json::array();
                Tally t{.match = true, .rank_ok = true, .polarization_ok = true, .recursion_ok = true,
                        .xi_independent = true, .bound_ok = true};
                std::set<int> ranks;
                for (int s = 0; s <= request.xi_samples; ++s) {
                    XiSpec spec;
                    if (s > 0) spec.seed = static_cast<std::uint64_t>(s);
                    const ScalarAssignment xi = make_xi(set, spec, primes);
                    Evaluation ev = evaluate(algebra, set, xi, primes, request.perturb_defect, s == 0);
                    if (s == 0) {
                        for (const char* key : {"l_sigma", "s_sigma", "defect", "predicted_dim", "blocks", "p0"})
                            if (ev.body.contains(key)) rec[key] = ev.body[key];
                        if (ev.body.contains("prediction_error")) rec["prediction_error"] = ev.body["prediction_error"];
                        t.theta = ev.body["defect"]["theta"].get<int>();
                    }
                    Json sample{{"xi", ev.body["xi"]}};
                    if (spec.seed) sample["xi_seed"] = *spec.seed;
                    sample["oracle_rank"] = ev.body["oracle_rank"];
                    sample["polarization"] = ev.body["polarization"];
                    samples.push_back(sample);
                    t.rank_ok = t.rank_ok && ev.ranks_match;
                    t.polarization_ok = t.polarization_ok && ev.polarization_ok;
                    t.bound_ok = t.bound_ok && ev.bound_ok;
                    ranks.insert(ev.ranks.begin(), ev.ranks.end());
                }
                t.xi_independent = ranks.size() == 1;
                t.dim = *ranks.begin();
                rec["samples"] = samples;

                const RecursionReport rep = recursion_report(set, ScalarAssignment::ones(set));
                Json failing = Json::array();
                for (const IdentityCheck& c : rep.checks)
                    if (!c.holds()) failing.push_back(Json{{"identity", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}});
                t.recursion_ok = rep.all_hold();
                rec["recursion"] = Json{{"case", to_string(rep.kind)}, {"checks", rep.checks.size()}, {"ok", t.recursion_ok}};
                if (!failing.empty()) rec["recursion"]["failing"] = failing;
                rec["xi_independent"] = t.xi_independent;
                rec["bound_ok"] = t.bound_ok;
                t.match = t.rank_ok && t.polarization_ok && t.recursion_ok && t.xi_independent && t.bound_ok;
                rec["match"] = t.match;
                records[k] = std::move(rec);
                tallies[k] = t;
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = subsets.size();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < request.jobs; ++j) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    VerifySummary summary;
    std::uint64_t rank_fail = 0, pol_fail = 0, rec_fail = 0, xi_dep = 0, bound_fail = 0, theta_nonzero = 0;
    std::set<int> dims;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        const Tally& t = tallies[k];
        sink(records[k]);
        if (!t.match) ++summary.mismatches;
        rank_fail += t.rank_ok ? 0 : 1;
        pol_fail += t.polarization_ok ? 0 : 1;
        rec_fail += t.recursion_ok ? 0 : 1;
        xi_dep += t.xi_independent ? 0 : 1;
        bound_fail += t.bound_ok ? 0 : 1;
        theta_nonzero += t.theta != 0 ? 1 : 0;
        dims.insert(t.dim);
    }
    const int mu = mu_max(sys.family(), sys.rank());
    std::vector<int> expected;
    for (int l = 0; l <= mu; ++l) expected.push_back(2 * l);
    const std::vector<int> observed(dims.begin(), dims.end());

    summary.body = header(sys, primes);
    summary.body["xi_samples"] = request.xi_samples;
    summary.body["subsets"] = subsets.size();
    summary.body["instances"] = subsets.size() * static_cast<std::size_t>(request.xi_samples + 1) * primes.size();
    summary.body["mismatches"] = summary.mismatches;
    summary.body["rank_mismatches"] = rank_fail;
    summary.body["polarization_failures"] = pol_fail;
    summary.body["recursion_failures"] = rec_fail;
    summary.body["xi_dependent"] = xi_dep;
    summary.body["bound_violations"] = bound_fail;
    summary.body["nonzero_theta"] = theta_nonzero;
    summary.body["dims"] = observed;
    summary.body["mu"] = mu;
    summary.body["dims_cover_spectrum"] = observed == expected;
    if (request.perturb_defect != 0) summary.body["perturb_defect"] = request.perturb_defect;
    summary.body["ok"] = summary.ok();
    return summary;
}

Json spectrum_table(const SystemPtr& system, std::optional<std::uint32_t> census_q, bool* all_ok) {
    const RootSystem& sys = *system;
    const int mu = mu_max(sys.family(), sys.rank());
    const std::uint32_t p = next_prime_at_least(static_cast<std::uint32_t>(sys.matrix_size()));
    const LieAlgebra algebra(system);
    bool ok = true;

    Json out{{"family", family_name(sys)}, {"n", sys.rank()}, {"mu", mu}, {"prime", p}};
    const std::vector<int> sizes = witness_column_sizes(sys);
    int sum = 0;
    for (int s : sizes) sum += s;
    out["column_sizes"] = sizes;
    out["column_sum"] = sum;
    out["column_sum_ok"] = sum == mu;
    ok = ok && sum == mu;

    Json rows = Json::array();
    for (int l = 0; l <= mu; ++l) {
        Json row{{"exponent", l}};
        try {
            const OrthoSet witness = spectrum_witness(system, l);
            const int rank = skew_rank_dim(algebra, witness, ScalarAssignment::ones(witness), PrimeField(p));
            row["witness"] = witness.literal();
            row["predicted_dim"] = predicted_dim(witness);
            row["oracle_rank"] = rank;
            row["ok"] = rank == 2 * l;
        } catch (const InternalError& e) {
            row["witness"] = nullptr;
            row["error"] = e.what();
            row["ok"] = false;
        }
        ok = ok && row["ok"].get<bool>();
        rows.push_back(row);
    }
    out["rows"] = rows;

    if (census_q) {
        const Census census = full_orbit_census(algebra, *census_q);
        std::uint64_t expected_total = 1;
        for (int k = 0; k < sys.size(); ++k) expected_total *= *census_q;
        Json by_dim = Json::object();
        std::vector<int> dims;
        for (const auto& [d, count] : census.by_dim) {
            by_dim[std::to_string(d)] = count;
            dims.push_back(d);
        }
        std::vector<int> expected;
        for (int l = 0; l <= mu; ++l) expected.push_back(2 * l);
        const bool census_ok = census.total == expected_total && dims == expected;
        out["census"] = Json{{"q", census.q},          {"functionals", census.total},
                             {"expected", expected_total}, {"orbits", census.orbits},
                             {"by_dim", by_dim},        {"ok", census_ok}};
        ok = ok && census_ok;
    }
    out["ok"] = ok;
    if (all_ok) *all_ok = ok;
    return out;
}

Json roots_table(const RootSystem& system) {
    Json roots = Json::array();
    for (int k = 0; k < system.size(); ++k) {
        const Root& r = system.root(k);
        roots.push_back(Json{{"ordinal", k}, {"root", to_string(r)}, {"row", row_of(r)}, {"col", col_of(r)}});
    }
    return Json{{"family", family_name(system)},
                {"n", system.rank()},
                {"m", system.matrix_size()},
                {"count", system.size()},
                {"roots", roots}};
}

}  // namespace coorbit
