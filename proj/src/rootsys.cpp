// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "coorbit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "coorbit/errors.hpp"

namespace coorbit {

Family parse_family(std::string_view text) {
    if (text.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(text[0]))) {
            case 'B': return Family::B;
            case 'C': return Family::C;
            case 'D': return Family::D;
            default: break;
        }
    }
    throw InputError("unknown family '" + std::string(text) + "' (expected B, C or D)");
}

char family_char(Family f) { return static_cast<char>(f); }

EpsCoords eps_coords(const Root& r) {
    switch (r.kind) {
        case RootKind::Diff: return {{{r.i, 1}, {r.j, -1}}, 2};
        case RootKind::Sum: return {{{r.i, 1}, {r.j, 1}}, 2};
        case RootKind::Short: return {{{r.i, 1}, {0, 0}}, 1};
        case RootKind::Long: return {{{r.i, 2}, {0, 0}}, 1};
    }
    return {};
}

std::vector<int> eps_vector(const Root& r, int n) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    const EpsCoords c = eps_coords(r);
    for (int t = 0; t < c.count; ++t)
        v[static_cast<std::size_t>(c.terms[t].index - 1)] += c.terms[t].coeff;
    return v;
}

int inner_product(const Root& a, const Root& b) {
    const EpsCoords ca = eps_coords(a);
    const EpsCoords cb = eps_coords(b);
    int result = 0;
    for (int s = 0; s < ca.count; ++s)
        for (int t = 0; t < cb.count; ++t)
            if (ca.terms[s].index == cb.terms[t].index)
                result += ca.terms[s].coeff * cb.terms[t].coeff;
    return result;
}

int row_of(const Root& r) {
    switch (r.kind) {
        case RootKind::Diff: return r.j;
        case RootKind::Sum: return -r.j;
        case RootKind::Short: return 0;
        case RootKind::Long: return -r.i;
    }
    return 0;
}

int col_of(const Root& r) { return r.i; }

std::string to_string(const Root& r) {
    switch (r.kind) {
        case RootKind::Diff: return "e" + std::to_string(r.i) + "-e" + std::to_string(r.j);
        case RootKind::Sum: return "e" + std::to_string(r.i) + "+e" + std::to_string(r.j);
        case RootKind::Short: return "e" + std::to_string(r.i);
        case RootKind::Long: return "2e" + std::to_string(r.i);
    }
    return {};
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Consumes "e<digits>" from the front of `s`.
int take_eps(std::string_view& s, std::string_view whole) {
    if (s.empty() || s.front() != 'e')
        throw InputError("malformed root '" + std::string(whole) + "'");
    s.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data() || value < 1)
        throw InputError("malformed root index in '" + std::string(whole) + "'");
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return value;
}

}  // namespace

Root parse_root(std::string_view text) {
    const std::string_view whole = trim(text);
    std::string_view s = whole;
    if (s.size() > 1 && s.front() == '2') {
        s.remove_prefix(1);
        const int i = take_eps(s, whole);
        if (!s.empty()) throw InputError("trailing characters in root '" + std::string(whole) + "'");
        return Root::long_root(i);
    }
    const int i = take_eps(s, whole);
    if (s.empty()) return Root::short_root(i);
    const char op = s.front();
    if (op != '+' && op != '-') throw InputError("malformed root '" + std::string(whole) + "'");
    s.remove_prefix(1);
    const int j = take_eps(s, whole);
    if (!s.empty()) throw InputError("trailing characters in root '" + std::string(whole) + "'");
    if (i >= j) throw InputError("root '" + std::string(whole) + "' needs i < j");
    return op == '+' ? Root::sum(i, j) : Root::diff(i, j);
}

std::vector<Root> parse_root_list(std::string_view text) {
    std::vector<Root> roots;
    if (trim(text).empty()) return roots;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        roots.push_back(parse_root(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return roots;
}

std::string format_root_list(std::span<const Root> roots) {
    std::string out;
    for (const Root& r : roots) {
        if (!out.empty()) out += ',';
        out += to_string(r);
    }
    return out;
}

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
    if (rank < 0) throw InputError("negative rank");
    const int n = rank;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) positives_.push_back(Root::diff(i, j));
        if (family == Family::B) positives_.push_back(Root::short_root(i));
        for (int j = n; j > i; --j) positives_.push_back(Root::sum(i, j));
        if (family == Family::C) positives_.push_back(Root::long_root(i));
    }

    const std::size_t stride = static_cast<std::size_t>(n + 1);
    index_.assign(4 * stride * stride, -1);
    for (std::size_t k = 0; k < positives_.size(); ++k) index_[key(positives_[k])] = static_cast<int>(k);

    const std::size_t count = positives_.size();
    sums_.assign(count * count, -1);
    std::vector<int> v(static_cast<std::size_t>(n + 1), 0);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            std::fill(v.begin(), v.end(), 0);
            for (const Root* r : {&positives_[a], &positives_[b]}) {
                const EpsCoords c = eps_coords(*r);
                for (int t = 0; t < c.count; ++t) v[static_cast<std::size_t>(c.terms[t].index)] += c.terms[t].coeff;
            }
            std::vector<std::pair<int, int>> nonzero;
            for (int t = 1; t <= n; ++t)
                if (v[static_cast<std::size_t>(t)] != 0) nonzero.emplace_back(t, v[static_cast<std::size_t>(t)]);
            std::optional<Root> s;
            if (nonzero.size() == 1 && nonzero[0].second == 1) s = Root::short_root(nonzero[0].first);
            if (nonzero.size() == 1 && nonzero[0].second == 2) s = Root::long_root(nonzero[0].first);
            if (nonzero.size() == 2 && nonzero[0].second == 1 && nonzero[1].second == -1)
                s = Root::diff(nonzero[0].first, nonzero[1].first);
            if (nonzero.size() == 2 && nonzero[0].second == 1 && nonzero[1].second == 1)
                s = Root::sum(nonzero[0].first, nonzero[1].first);
            if (s) {
                if (const auto k = ordinal_of(*s)) sums_[a * count + b] = *k;
            }
        }
    }
}

std::size_t RootSystem::key(const Root& r) const {
    const std::size_t stride = static_cast<std::size_t>(rank_ + 1);
    return static_cast<std::size_t>(r.kind) * stride * stride + static_cast<std::size_t>(r.i) * stride +
           static_cast<std::size_t>(r.j);
}

std::optional<int> RootSystem::ordinal_of(const Root& r) const {
    if (r.i < 1 || r.i > rank_) return std::nullopt;
    switch (r.kind) {
        case RootKind::Diff:
        case RootKind::Sum:
            if (r.j <= r.i || r.j > rank_) return std::nullopt;
            break;
        case RootKind::Short:
        case RootKind::Long:
            if (r.j != 0) return std::nullopt;
            break;
    }
    const int k = index_[key(r)];
    if (k < 0) return std::nullopt;
    return k;
}

int RootSystem::ordinal(const Root& r) const {
    const auto k = ordinal_of(r);
    if (!k) {
        throw InputError("root " + to_string(r) + " is not a positive root of " +
                         std::string(1, family_char(family_)) + std::to_string(rank_));
    }
    return *k;
}

std::vector<Root> RootSystem::row_set(int i) const {
    std::vector<Root> out;
    for (const Root& r : positives_)
        if (row_of(r) == i) out.push_back(r);
    return out;
}

std::vector<Root> RootSystem::col_set(int j) const {
    std::vector<Root> out;
    for (const Root& r : positives_)
        if (col_of(r) == j) out.push_back(r);
    return out;
}

std::vector<SingularPair> RootSystem::singular_set(const Root& beta) const {
    ordinal(beta);
    const int n = rank_;
    const int i = beta.i;
    const int j = beta.j;
    std::vector<SingularPair> pairs;
    switch (beta.kind) {
        case RootKind::Diff:
            for (int l = i + 1; l < j; ++l) pairs.push_back({Root::diff(i, l), Root::diff(l, j)});
            break;
        case RootKind::Short:
            for (int l = i + 1; l <= n; ++l) pairs.push_back({Root::diff(i, l), Root::short_root(l)});
            break;
        case RootKind::Long:
            for (int l = i + 1; l <= n; ++l) pairs.push_back({Root::sum(i, l), Root::diff(i, l)});
            break;
        case RootKind::Sum:
            for (int l = i + 1; l < j; ++l) pairs.push_back({Root::diff(i, l), Root::sum(l, j)});
            for (int l = j + 1; l <= n; ++l) pairs.push_back({Root::diff(i, l), Root::sum(j, l)});
            for (int l = j + 1; l <= n; ++l) pairs.push_back({Root::sum(i, l), Root::diff(j, l)});
            if (family_ == Family::B) pairs.push_back({Root::short_root(i), Root::short_root(j)});
            if (family_ == Family::C) pairs.push_back({Root::diff(i, j), Root::long_root(j)});
            break;
    }
    return pairs;
}

SingularSplit RootSystem::singular_split(const Root& beta) const {
    SingularSplit split;
    const bool symplectic_long = family_ == Family::C && beta.kind == RootKind::Long;
    for (const SingularPair& p : singular_set(beta)) {
        // Outside the 2e_i case of C_n exactly one member lies in col(beta).
        const bool first_is_plus = symplectic_long ? p.plus.kind == RootKind::Sum : col_of(p.plus) == col_of(beta);
        split.plus.push_back(first_is_plus ? p.plus : p.minus);
        split.minus.push_back(first_is_plus ? p.minus : p.plus);
    }
    return split;
}

bool RootSystem::rank_admissible(Family family, int rank) {
    return family == Family::D ? rank >= 2 : rank >= 1;
}

SystemPtr build_system(Family family, int rank) {
    if (!RootSystem::rank_admissible(family, rank)) {
        throw InputError("rank " + std::to_string(rank) + " out of bounds for family " +
                         std::string(1, family_char(family)));
    }
    return std::make_shared<const RootSystem>(family, rank);
}

SystemPtr build_system_unchecked(Family family, int rank) {
    return std::make_shared<const RootSystem>(family, rank);
}

}  // namespace coorbit
