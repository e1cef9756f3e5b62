// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "coorbit/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "coorbit/errors.hpp"

namespace coorbit {

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
    for (int v : images_) {
        const int a = std::abs(v);
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) throw InputError("not a signed permutation");
        seen[static_cast<std::size_t>(a)] = 1;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) images[static_cast<std::size_t>(k - 1)] = k;
    return SignedPermutation(std::move(images));
}

SignedPermutation SignedPermutation::reflection(const Root& r, int n) {
    std::vector<int> images = identity(n).images();
    auto img = [&](int k) -> int& { return images[static_cast<std::size_t>(k - 1)]; };
    switch (r.kind) {
        case RootKind::Diff:
            img(r.i) = r.j;
            img(r.j) = r.i;
            break;
        case RootKind::Sum:
            img(r.i) = -r.j;
            img(r.j) = -r.i;
            break;
        case RootKind::Short:
        case RootKind::Long:
            img(r.i) = -r.i;
            break;
    }
    return SignedPermutation(std::move(images));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
    if (other.rank() != rank()) throw InputError("rank mismatch in composition");
    std::vector<int> images(images_.size());
    for (int k = 1; k <= rank(); ++k) {
        const int mid = other.image(k);
        const int out = image(std::abs(mid));
        images[static_cast<std::size_t>(k - 1)] = mid < 0 ? -out : out;
    }
    return SignedPermutation(std::move(images));
}

bool SignedPermutation::is_identity() const { return *this == identity(rank()); }

std::vector<int> SignedPermutation::apply(const Root& r) const {
    std::vector<int> v(images_.size(), 0);
    const EpsCoords c = eps_coords(r);
    for (int t = 0; t < c.count; ++t) {
        const int img = image(c.terms[t].index);
        v[static_cast<std::size_t>(std::abs(img) - 1)] += img < 0 ? -c.terms[t].coeff : c.terms[t].coeff;
    }
    return v;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < images_.size(); ++k) os << (k ? " " : "") << images_[k];
    os << ']';
    return os.str();
}

SignedPermutation involution_of(const OrthoSet& set) {
    const int n = set.system().rank();
    SignedPermutation sigma = SignedPermutation::identity(n);
    for (const Root& r : set.roots()) sigma = sigma.compose(SignedPermutation::reflection(r, n));
    return sigma;
}

InversionData inversion_length(const RootSystem& system, const SignedPermutation& sigma) {
    if (sigma.rank() != system.rank()) throw InputError("rank mismatch between permutation and system");
    InversionData out;
    for (int k = 0; k < system.size(); ++k) {
        const std::vector<int> v = sigma.apply(system.root(k));
        const auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (first != v.end() && *first < 0) out.roots.push_back(k);
    }
    out.length = static_cast<int>(out.roots.size());
    return out;
}

Defect defect(const OrthoSet& set) {
    if (!set.is_normalized()) throw InputError("defect needs a normalized set");
    Defect d;
    const auto roots = set.roots();
    std::vector<std::pair<int, int>> pairs;  // (i, j) with both e_i -+ e_j in the set
    std::vector<std::pair<int, int>> sums;
    for (const Root& r : roots) {
        if (r.kind == RootKind::Diff && set.contains(Root::sum(r.i, r.j))) pairs.emplace_back(r.i, r.j);
        if (r.kind == RootKind::Sum) sums.emplace_back(r.i, r.j);
        if (r.kind == RootKind::Short) d.anchor = r.i;
    }
    for (const auto& [i, j] : pairs) {
        for (const auto& [l, s] : sums)
            if (i < l && l < s && s < j) ++d.d1;
        for (const auto& [l, s] : pairs)
            if (i < l && l < j && j < s) ++d.d2;
    }
    if (d.anchor > 0) {
        for (const auto& [i, j] : sums)
            if (i > d.anchor) ++d.d3;
        for (const auto& [i, j] : pairs)
            if (i < d.anchor && d.anchor < j) ++d.d4;
    }
    d.theta = d.d1 + d.d2 + d.d3 + d.d4;
    return d;
}

int predicted_dim(const OrthoSet& set) {
    const Defect d = defect(set);
    const int length = inversion_length(set.system(), involution_of(set)).length;
    const int value = length - static_cast<int>(set.size()) - 2 * d.theta;
    const int bound = 2 * mu_max(set.system().family(), set.system().rank());
    if (value % 2 != 0 || value < 0 || value > bound) {
        throw InternalError("predicted dimension " + std::to_string(value) + " for {" + set.literal() +
                            "} is not an even number in [0, " + std::to_string(bound) + "]");
    }
    return value;
}

int mu_max(Family family, int rank) {
    const int n = rank;
    if (n <= 0) return 0;
    if (family == Family::D && n % 2 == 1) return (n - 1) * (n - 1) / 2;
    return n * (n - 1) / 2;
}

std::vector<int> witness_column_sizes(const RootSystem& system) {
    const int n = system.rank();
    const int t = system.family() == Family::D ? (n - 1) / 2 : n / 2;
    std::vector<int> sizes;
    for (int j = 1; j <= t; ++j)
        sizes.push_back(static_cast<int>(system.singular_split(Root::sum(2 * j - 1, 2 * j)).plus.size()));
    return sizes;
}

OrthoSet spectrum_witness(const SystemPtr& system, int exponent) {
    const RootSystem& sys = *system;
    const int n = sys.rank();
    const int mu = mu_max(sys.family(), n);
    if (exponent < 0 || exponent > mu)
        throw InputError("exponent " + std::to_string(exponent) + " outside [0, " + std::to_string(mu) + "]");

    const std::vector<int> sizes = witness_column_sizes(sys);
    int used = 0;
    int partial = 0;
    while (used < static_cast<int>(sizes.size()) && partial + sizes[static_cast<std::size_t>(used)] < exponent)
        partial += sizes[static_cast<std::size_t>(used++)];

    std::vector<Root> roots;
    for (int j = 1; j <= used; ++j) roots.push_back(Root::sum(2 * j - 1, 2 * j));

    const int column = 2 * used + 1;
    const int need = exponent - partial;
    std::vector<int> walk;
    for (int r = column + 1; r <= n; ++r) walk.push_back(r);
    walk.push_back(0);
    for (int r = n; r >= column + 1; --r) walk.push_back(-r);

    std::optional<Root> beta;
    for (int row : walk) {
        Root candidate = row > 0 ? Root::diff(column, row) : (row == 0 ? Root::short_root(column) : Root::sum(column, -row));
        if (column > n || !sys.contains(candidate)) continue;
        if (static_cast<int>(sys.singular_split(candidate).plus.size()) == need) {
            beta = candidate;
            break;
        }
    }
    // C_1 has no root in the walk; the empty set realizes exponent 0 there.
    if (!beta && need != 0) {
        throw InternalError("no witness root in column " + std::to_string(column) + " with |S+| = " +
                            std::to_string(need));
    }
    if (beta) roots.push_back(*beta);
    OrthoSet set = validate(system, roots);
    if (predicted_dim(set) != 2 * exponent || defect(set).theta != 0)
        throw InternalError("witness {" + set.literal() + "} does not realize exponent " + std::to_string(exponent));
    return set;
}

}  // namespace coorbit
