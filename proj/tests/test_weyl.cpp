// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "coorbit/errors.hpp"
#include "coorbit/weyl.hpp"
#include "oracles.hpp"

using namespace coorbit;

namespace {

SystemPtr sys(char f, int n) { return build_system(parse_family(std::string(1, f)), n); }

const char* kD7Set = "e1-e5,e1+e5,e2-e6,e2+e6,e3+e4";
const char* kB7Set = "e1-e6,e1+e6,e2,e3-e7,e3+e7,e4+e5";

std::set<oracle::Vec> reference_inversions(const OrthoSet& d) {
    const int n = d.system().rank();
    std::vector<oracle::Vec> roots;
    for (const Root& r : d.roots()) roots.push_back(eps_vector(r, n));
    return oracle::inversion_set(oracle::positive_roots(family_char(d.system().family()), n), roots, n);
}

std::set<oracle::Vec> as_vectors(const RootSystem& s, const std::vector<int>& ordinals) {
    std::set<oracle::Vec> out;
    for (int k : ordinals) out.insert(eps_vector(s.root(k), s.rank()));
    return out;
}

}  // namespace

TEST_CASE("involutions") {
    const auto d7 = sys('D', 7);
    CHECK(involution_of(OrthoSet(d7)).is_identity());
    CHECK(involution_of(parse_set(d7, "e3+e4")).images() == std::vector<int>{1, 2, -4, -3, 5, 6, 7});
    CHECK(involution_of(parse_set(d7, kD7Set)).images() == std::vector<int>{-1, -2, -4, -3, -5, -6, 7});
    CHECK(SignedPermutation::reflection(Root::diff(2, 4), 4).images() == std::vector<int>{1, 4, 3, 2});
    CHECK(SignedPermutation::reflection(Root::long_root(3), 4).images() == std::vector<int>{1, 2, -3, 4});
    CHECK_THROWS_AS(SignedPermutation({1, 1}), InputError);
    CHECK_THROWS_AS(SignedPermutation({1, 3}), InputError);
}

TEST_CASE("involutions square to one and the factors commute, n <= 5") {
    for (char f : {'B', 'C', 'D'}) {
        for (int n = f == 'D' ? 2 : 1; n <= 5; ++n) {
            long bad = 0;
            enumerate_orthogonal(sys(f, n), [&](const OrthoSet& d) {
                const SignedPermutation s = involution_of(d);
                if (!s.compose(s).is_identity()) ++bad;
                const auto roots = d.roots();
                for (std::size_t a = 0; a < roots.size(); ++a)
                    for (std::size_t b = a + 1; b < roots.size(); ++b) {
                        const auto ra = SignedPermutation::reflection(roots[a], n);
                        const auto rb = SignedPermutation::reflection(roots[b], n);
                        if (!(ra.compose(rb) == rb.compose(ra))) ++bad;
                    }
                return true;
            });
            CHECK(bad == 0);
        }
    }
}

TEST_CASE("inversion lengths of the worked sets") {
    const auto b7 = sys('B', 7);
    const OrthoSet b7set = parse_set(b7, kB7Set);
    const InversionData a = inversion_length(*b7, involution_of(b7set));
    CHECK(a.length == 48);
    CHECK(as_vectors(*b7, a.roots) == reference_inversions(b7set));

    const auto d7 = sys('D', 7);
    const OrthoSet d7set = parse_set(d7, kD7Set);
    const InversionData b = inversion_length(*d7, involution_of(d7set));
    CHECK(b.length == 41);
    CHECK(reference_inversions(d7set).size() == 41);

    CHECK(inversion_length(*d7, SignedPermutation::identity(7)).length == 0);
}

TEST_CASE("inversion sets equal the reflection-matrix computation, n <= 5") {
    for (char f : {'B', 'C', 'D'}) {
        for (int n = f == 'D' ? 2 : 1; n <= 5; ++n) {
            const auto s = sys(f, n);
            long bad = 0;
            enumerate_normalized(s, [&](const OrthoSet& d) {
                if (as_vectors(*s, inversion_length(*s, involution_of(d)).roots) != reference_inversions(d)) ++bad;
                return true;
            });
            CHECK(bad == 0);
        }
    }
}

TEST_CASE("defect") {
    const Defect a = defect(parse_set(sys('B', 7), kB7Set));
    CHECK(a.d1 == 2);
    CHECK(a.d2 == 1);
    CHECK(a.d3 == 2);
    CHECK(a.d4 == 1);
    CHECK(a.theta == 6);
    CHECK(a.anchor == 2);

    const Defect b = defect(parse_set(sys('D', 7), kD7Set));
    CHECK(b.d1 == 2);
    CHECK(b.d2 == 1);
    CHECK(b.d3 == 0);
    CHECK(b.d4 == 0);
    CHECK(b.theta == 3);

    for (int n = 1; n <= 5; ++n)
        enumerate_normalized(sys('C', n), [](const OrthoSet& d) {
            CHECK(defect(d).theta == 0);
            return true;
        });
    CHECK_THROWS_AS(defect(parse_set(sys('B', 3), "e1,e2")), InputError);
}

TEST_CASE("predicted dimensions") {
    CHECK(predicted_dim(parse_set(sys('B', 7), kB7Set)) == 30);
    CHECK(predicted_dim(parse_set(sys('D', 7), kD7Set)) == 30);
    CHECK(predicted_dim(OrthoSet(sys('B', 4))) == 0);
}

TEST_CASE("mu") {
    CHECK(mu_max(Family::B, 7) == 21);
    CHECK(mu_max(Family::C, 7) == 21);
    CHECK(mu_max(Family::D, 5) == 8);
    CHECK(mu_max(Family::D, 4) == 6);
    CHECK(mu_max(Family::B, 0) == 0);
}

TEST_CASE("single reflections: closed-form inversion sets, n <= 6") {
    for (char f : {'B', 'C', 'D'}) {
        for (int n = f == 'D' ? 2 : 1; n <= 6; ++n) {
            const auto s = sys(f, n);
            for (const Root& alpha : s->positives()) {
                CAPTURE(to_string(alpha));
                const InversionData inv = inversion_length(*s, SignedPermutation::reflection(alpha, n));
                std::set<Root> got;
                for (int k : inv.roots) got.insert(s->root(k));

                std::set<Root> expect;
                if (alpha.kind == RootKind::Short) {
                    for (const Root& r : s->col_set(alpha.i)) expect.insert(r);
                } else {
                    for (const auto& p : s->singular_set(alpha)) expect.insert(p.plus), expect.insert(p.minus);
                    expect.insert(alpha);
                    if (f == 'C' && alpha.kind == RootKind::Sum) {
                        expect.insert(Root::long_root(alpha.i));
                        expect.erase(Root::diff(alpha.i, alpha.j));
                    }
                }
                CHECK(got == expect);
                CHECK(inv.length == 2 * static_cast<int>(s->singular_split(alpha).plus.size()) + 1);
            }
        }
    }
}

TEST_CASE("witness column sizes") {
    // B, C and odd-rank D reach the printed mu exactly
    for (int n = 2; n <= 8; ++n) {
        for (char f : {'B', 'C', 'D'}) {
            if (f == 'D' && n % 2 == 0) continue;
            const auto s = sys(f, n);
            int sum = 0;
            for (int v : witness_column_sizes(*s)) sum += v;
            CHECK(sum == mu_max(s->family(), n));
        }
    }
    // even-rank D stops at n(n-2)/2
    for (int n : {2, 4, 6, 8}) {
        int sum = 0;
        for (int v : witness_column_sizes(*sys('D', n))) sum += v;
        CHECK(sum == n * (n - 2) / 2);
    }
}

TEST_CASE("spectrum witnesses") {
    const auto b3 = sys('B', 3);
    const OrthoSet w = spectrum_witness(b3, 3);
    CHECK(w.literal() == "e1+e2");
    CHECK(predicted_dim(w) == 6);
    CHECK(inversion_length(*b3, involution_of(w)).length == 7);

    for (char f : {'B', 'C', 'D'}) CHECK(spectrum_witness(sys(f, 4), 0).literal() == "e1-e2");
    CHECK(spectrum_witness(sys('C', 1), 0).empty());

    const auto b7 = sys('B', 7);
    const OrthoSet top = spectrum_witness(b7, 21);
    const auto roots = top.roots();
    REQUIRE(roots.size() == 3);
    CHECK(top.contains(Root::sum(1, 2)));
    CHECK(top.contains(Root::sum(3, 4)));
    CHECK(top.contains(Root::sum(5, 6)));
    CHECK(witness_column_sizes(*b7) == std::vector<int>{11, 7, 3});
    CHECK(predicted_dim(top) == 42);
    CHECK(defect(top).theta == 0);

    CHECK_THROWS_AS(spectrum_witness(b7, 22), InputError);
    CHECK_THROWS_AS(spectrum_witness(b7, -1), InputError);
}

TEST_CASE("witnesses for every exponent, B/C all ranks and D odd ranks up to 7") {
    for (char f : {'B', 'C', 'D'}) {
        for (int n = 1; n <= 7; ++n) {
            if (f == 'D' && n % 2 == 0) continue;
            if (f == 'D' && n < 3) continue;
            const auto s = sys(f, n);
            for (int l = 0; l <= mu_max(s->family(), n); ++l) {
                CAPTURE(l);
                const OrthoSet w = spectrum_witness(s, l);
                CHECK(predicted_dim(w) == 2 * l);
                CHECK(defect(w).theta == 0);
            }
        }
    }
}

TEST_CASE("dimension bound and spectrum coverage by exhaustion, n <= 5") {
    for (char f : {'B', 'C', 'D'}) {
        for (int n = f == 'D' ? 2 : 1; n <= 5; ++n) {
            const auto s = sys(f, n);
            std::set<int> dims;
            long over = 0;
            enumerate_normalized(s, [&](const OrthoSet& d) {
                const int dim = predicted_dim(d);
                dims.insert(dim);
                if (dim > inversion_length(*s, involution_of(d)).length - static_cast<int>(d.size())) ++over;
                return true;
            });
            CHECK(over == 0);
            const int top = *dims.rbegin();
            CHECK(static_cast<int>(dims.size()) == top / 2 + 1);
            if (!(f == 'D' && n % 2 == 0)) CHECK(top == 2 * mu_max(s->family(), n));
        }
    }
}
