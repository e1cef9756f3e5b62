// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "coorbit/errors.hpp"
#include "coorbit/oracle.hpp"
#include "coorbit/weyl.hpp"
#include "oracles.hpp"

using namespace coorbit;

namespace {

SystemPtr sys(char f, int n) { return build_system(parse_family(std::string(1, f)), n); }

const char* kD7Set = "e1-e5,e1+e5,e2-e6,e2+e6,e3+e4";

int skew(const SystemPtr& s, const char* literal, std::uint32_t p) {
    const LieAlgebra alg(s);
    const OrthoSet d = parse_set(s, literal);
    return skew_rank_dim(alg, d, ScalarAssignment::ones(d), PrimeField(p));
}

// Skew matrix rebuilt from integer commutators of the root matrices.
int skew_reference(const LieAlgebra& alg, const OrthoSet& d, std::int64_t p) {
    const RootSystem& s = alg.system();
    std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(s.size()),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(s.size()), 0));
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b) {
            const IntMatrix c = commutator(alg.root_matrix(a), alg.root_matrix(b));
            for (int k : d.ordinals()) {
                const auto [row, col] = primary_entry(s.root(k));
                m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += c.at_label(row, col);
            }
        }
    return oracle::rank_mod(m, p);
}

}  // namespace

TEST_CASE("skew ranks") {
    CHECK(skew(sys('B', 2), "e1+e2", 5) == 2);
    CHECK(skew(sys('B', 2), "e2", 5) == 0);
    CHECK(skew(sys('D', 7), kD7Set, 17) == 30);
    CHECK(skew(sys('D', 7), kD7Set, 101) == 30);
    CHECK(skew(sys('B', 4), "", 11) == 0);
    CHECK_THROWS_AS(skew(sys('B', 2), "e1", 3), ConfigError);
}

TEST_CASE("skew rank agrees with the commutator rebuild, n <= 4") {
    for (char f : {'B', 'C', 'D'}) {
        for (int n = f == 'D' ? 2 : 1; n <= 4; ++n) {
            const auto s = sys(f, n);
            const LieAlgebra alg(s);
            const std::uint32_t p = next_prime_at_least(static_cast<std::uint32_t>(s->matrix_size()));
            long bad = 0;
            enumerate_normalized(s, [&](const OrthoSet& d) {
                if (skew_rank_dim(alg, d, ScalarAssignment::ones(d), PrimeField(p)) != skew_reference(alg, d, p)) ++bad;
                return true;
            });
            CHECK(bad == 0);
        }
    }
}

TEST_CASE("coadjoint action") {
    const auto b2 = sys('B', 2);
    const LieAlgebra alg(b2);
    const PrimeField f5(5);
    const OrthoSet d = parse_set(b2, "e1");
    const LinearForm lambda = canonical_form(d, ScalarAssignment::ones(d), f5);

    CHECK(coadjoint_act(alg, FpMatrix::identity(5), lambda) == lambda);

    // x = exp(3 e_{e1-e2}) moves e*_{e1} to e*_{e1} + 3 e*_{e2}
    LieElement x(5);
    x.set(b2->ordinal(Root::diff(1, 2)), 3);
    const LinearForm moved = coadjoint_act(alg, alg.exp_unipotent(x), lambda);
    CHECK(moved.coeffs[static_cast<std::size_t>(b2->ordinal(Root::short_root(1)))] == 1);
    CHECK(moved.coeffs[static_cast<std::size_t>(b2->ordinal(Root::short_root(2)))] == 3);
    CHECK(moved.coeffs[static_cast<std::size_t>(b2->ordinal(Root::diff(1, 2)))] == 0);
    CHECK(moved.coeffs[static_cast<std::size_t>(b2->ordinal(Root::sum(1, 2)))] == 0);
}

TEST_CASE("coadjoint action is a left action") {
    const auto c3 = sys('C', 3);
    const LieAlgebra alg(c3);
    const PrimeField f(7);
    const OrthoSet d = parse_set(c3, "e1+e2,2e3");
    const LinearForm lambda = canonical_form(d, ScalarAssignment::seeded(d, 3, 7), f);
    LieElement a(7);
    a.set(0, 2);
    a.set(3, 5);
    LieElement b(7);
    b.set(1, 4);
    b.set(6, 1);
    const FpMatrix xa = alg.exp_unipotent(a);
    const FpMatrix xb = alg.exp_unipotent(b);
    CHECK(coadjoint_act(alg, multiply(xa, xb, f), lambda) == coadjoint_act(alg, xa, coadjoint_act(alg, xb, lambda)));
}

TEST_CASE("orbit sizes") {
    const auto b2 = sys('B', 2);
    const LieAlgebra alg(b2);
    const OrthoSet top = parse_set(b2, "e1+e2");
    const OrbitSample o = orbit_bfs(alg, top, ScalarAssignment::ones(top), 5);
    CHECK(o.size() == 25);
    CHECK(log_q(o.size(), 5) == 2);
    CHECK(o.generator_count == 16);

    const OrthoSet none(b2);
    CHECK(orbit_bfs(alg, none, ScalarAssignment::ones(none), 5).size() == 1);
}

TEST_CASE("normalization leaves the orbit unchanged") {
    const auto b2 = sys('B', 2);
    const LieAlgebra a2(b2);
    const OrthoSet full = parse_set(b2, "e1,e2");
    const OrthoSet reduced = parse_set(b2, "e1");
    CHECK(orbit_bfs(a2, full, ScalarAssignment::ones(full), 5).codes ==
          orbit_bfs(a2, reduced, ScalarAssignment::ones(reduced), 5).codes);

    const auto b3 = sys('B', 3);
    const LieAlgebra a3(b3);
    const OrthoSet f3 = parse_set(b3, "e1,e3");
    const OrthoSet r3 = parse_set(b3, "e1");
    CHECK(orbit_bfs(a3, f3, ScalarAssignment::ones(f3), 7).codes ==
          orbit_bfs(a3, r3, ScalarAssignment::ones(r3), 7).codes);

    const auto c2 = sys('C', 2);
    const LieAlgebra ac(c2);
    const OrthoSet fc = parse_set(c2, "e1-e2,e1+e2");
    const Normalized nc = normalize(fc, ScalarAssignment::ones(fc));
    CHECK(nc.set.literal() == "e1+e2");
    CHECK(orbit_bfs(ac, fc, ScalarAssignment::ones(fc), 5).codes == orbit_bfs(ac, nc.set, nc.xi, 5).codes);
}

TEST_CASE("orbit sizes are q to the skew rank, small systems") {
    struct Case {
        char f;
        int n;
        std::uint32_t q;
    };
    for (const Case c : {Case{'B', 2, 5}, Case{'C', 2, 5}, Case{'D', 2, 5}, Case{'D', 3, 7}, Case{'C', 3, 7}}) {
        const auto s = sys(c.f, c.n);
        const LieAlgebra alg(s);
        long bad = 0;
        enumerate_normalized(s, [&](const OrthoSet& d) {
            const ScalarAssignment xi = ScalarAssignment::seeded(d, 11, c.q);
            const int rank = skew_rank_dim(alg, d, xi, PrimeField(c.q));
            if (log_q(orbit_bfs(alg, d, xi, c.q).size(), c.q) != rank) ++bad;
            if (predicted_dim(d) != rank) ++bad;
            return true;
        });
        CHECK(bad == 0);
    }
}

TEST_CASE("censuses") {
    for (char f : {'B', 'C'}) {
        const LieAlgebra alg(sys(f, 2));
        const Census c = full_orbit_census(alg, 5);
        CHECK(c.total == 625);
        std::set<int> dims;
        for (const auto& [d, k] : c.by_dim) dims.insert(d);
        CHECK(dims == std::set<int>{0, 2});
    }
    const LieAlgebra d3(sys('D', 3));
    const Census c = full_orbit_census(d3, 7);
    CHECK(c.total == 117649);
    std::set<int> dims;
    for (const auto& [d, k] : c.by_dim) dims.insert(d);
    CHECK(dims == std::set<int>{0, 2, 4});
    // functionals vanishing on [u, u] are fixed points
    CHECK(c.by_dim.at(0) >= 7);
}

TEST_CASE("log_q") {
    CHECK(log_q(1, 5) == 0);
    CHECK(log_q(125, 5) == 3);
    CHECK_THROWS_AS(log_q(24, 5), InternalError);
    CHECK_THROWS_AS(log_q(50, 5), InternalError);
}

TEST_CASE("budgets") {
    const auto b2 = sys('B', 2);
    const LieAlgebra alg(b2);
    const OrthoSet top = parse_set(b2, "e1+e2");
    CHECK_THROWS_AS(orbit_bfs(alg, top, ScalarAssignment::ones(top), 5, 10), BudgetError);
    CHECK_THROWS_AS(full_orbit_census(alg, 5, 600), BudgetError);
    const auto b4 = sys('B', 4);
    const LieAlgebra a4(b4);
    const OrthoSet d4 = parse_set(b4, "e1+e2");
    CHECK_THROWS_AS(orbit_bfs(a4, d4, ScalarAssignment::ones(d4), 11), BudgetError);
}

TEST_CASE("polarization certificate") {
    const auto d7 = sys('D', 7);
    const LieAlgebra alg(d7);
    const OrthoSet d = parse_set(d7, kD7Set);
    for (std::uint32_t p : {17u, 101u}) {
        const PrimeField f(p);
        const ScalarAssignment xi = ScalarAssignment::seeded(d, 5, 17);
        const int rank = skew_rank_dim(alg, d, xi, f);
        const PolarizationCheck pc = certify_polarization(alg, d, xi, f, rank);
        CHECK(rank == 30);
        CHECK(pc.dim == 27);
        CHECK(pc.ok());
    }

    // a wrong rank is caught by the maximality flag
    const PrimeField f(17);
    const ScalarAssignment ones = ScalarAssignment::ones(d);
    CHECK_FALSE(certify_polarization(alg, d, ones, f, 28).maximal);
}

TEST_CASE("polarizations certify for every normalized set, n <= 4") {
    for (char f : {'B', 'C', 'D'}) {
        for (int n = f == 'D' ? 2 : 1; n <= 4; ++n) {
            const auto s = sys(f, n);
            const LieAlgebra alg(s);
            const std::uint32_t p = next_prime_at_least(static_cast<std::uint32_t>(s->matrix_size()));
            long bad = 0;
            enumerate_normalized(s, [&](const OrthoSet& d) {
                const ScalarAssignment xi = ScalarAssignment::seeded(d, 1, p);
                const int rank = skew_rank_dim(alg, d, xi, PrimeField(p));
                if (!certify_polarization(alg, d, xi, PrimeField(p), rank).ok()) ++bad;
                return true;
            });
            CHECK(bad == 0);
        }
    }
}
