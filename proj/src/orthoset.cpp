// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "coorbit/orthoset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <set>

#include "coorbit/errors.hpp"

namespace coorbit {

std::vector<Root> OrthoSet::roots() const {
    std::vector<Root> out;
    out.reserve(ordinals_.size());
    for (int k : ordinals_) out.push_back(system_->root(k));
    return out;
}

bool OrthoSet::contains_ordinal(int k) const { return std::binary_search(ordinals_.begin(), ordinals_.end(), k); }

bool OrthoSet::contains(const Root& r) const {
    const auto k = system_->ordinal_of(r);
    return k && contains_ordinal(*k);
}

std::vector<Root> OrthoSet::in_column(int j) const {
    std::vector<Root> out;
    for (int k : ordinals_)
        if (col_of(system_->root(k)) == j) out.push_back(system_->root(k));
    return out;
}

std::vector<Root> OrthoSet::in_row(int i) const {
    std::vector<Root> out;
    for (int k : ordinals_)
        if (row_of(system_->root(k)) == i) out.push_back(system_->root(k));
    return out;
}

bool OrthoSet::is_normalized() const {
    int shorts = 0;
    for (int k : ordinals_) {
        const Root& r = system_->root(k);
        if (r.kind == RootKind::Short) ++shorts;
        if (system_->family() == Family::C && r.kind == RootKind::Diff && contains(Root::sum(r.i, r.j))) return false;
    }
    return shorts <= 1;
}

std::string OrthoSet::literal() const {
    const auto rs = roots();
    return format_root_list(rs);
}

OrthoSet validate(const SystemPtr& system, const std::vector<Root>& roots) {
    OrthoSet set(system);
    for (const Root& r : roots) set.ordinals_.push_back(system->ordinal(r));
    std::sort(set.ordinals_.begin(), set.ordinals_.end());
    if (std::adjacent_find(set.ordinals_.begin(), set.ordinals_.end()) != set.ordinals_.end())
        throw InputError("duplicate root in set");
    for (std::size_t a = 0; a < set.ordinals_.size(); ++a) {
        for (std::size_t b = a + 1; b < set.ordinals_.size(); ++b) {
            const Root& x = system->root(set.ordinals_[a]);
            const Root& y = system->root(set.ordinals_[b]);
            if (const int p = inner_product(x, y); p != 0) {
                throw InputError("roots " + to_string(x) + " and " + to_string(y) + " are not orthogonal (product " +
                                 std::to_string(p) + ")");
            }
        }
    }
    return set;
}

OrthoSet parse_set(const SystemPtr& system, std::string_view literal) {
    return validate(system, parse_root_list(literal));
}

OrthoSet from_ordinals_unchecked(const SystemPtr& system, std::vector<int> ordinals) {
    OrthoSet set(system);
    set.ordinals_ = std::move(ordinals);
    return set;
}

ScalarAssignment ScalarAssignment::ones(const OrthoSet& set) {
    ScalarAssignment xi;
    for (const Root& r : set.roots()) xi.values_[r] = 1;
    return xi;
}

ScalarAssignment ScalarAssignment::seeded(const OrthoSet& set, std::uint64_t seed, std::uint32_t bound) {
    if (bound < 2) throw InputError("scalar bound must be at least 2");
    std::mt19937_64 rng(seed);
    ScalarAssignment xi;
    // Plain modulo keeps the draw sequence identical across standard libraries.
    for (const Root& r : set.roots()) xi.values_[r] = static_cast<std::int64_t>(rng() % (bound - 1)) + 1;
    return xi;
}

ScalarAssignment ScalarAssignment::parse(const OrthoSet& set, std::string_view literal) {
    ScalarAssignment xi;
    std::size_t start = 0;
    const auto blank = [](std::string_view s) {
        return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    };
    while (!blank(literal) && start <= literal.size()) {
        const std::size_t comma = literal.find(',', start);
        std::string_view item = literal.substr(start, comma == literal.npos ? literal.npos : comma - start);
        const std::size_t eq = item.find('=');
        if (eq == item.npos) throw InputError("scalar item '" + std::string(item) + "' lacks '='");
        const Root r = parse_root(item.substr(0, eq));
        std::string_view num = item.substr(eq + 1);
        while (!num.empty() && std::isspace(static_cast<unsigned char>(num.front()))) num.remove_prefix(1);
        while (!num.empty() && std::isspace(static_cast<unsigned char>(num.back()))) num.remove_suffix(1);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
        if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
            throw InputError("malformed scalar in '" + std::string(item) + "'");
        if (xi.values_.contains(r)) throw InputError("scalar for " + to_string(r) + " given twice");
        xi.values_[r] = value;
        if (comma == literal.npos) break;
        start = comma + 1;
    }
    xi.check_domain(set);
    return xi;
}

std::int64_t ScalarAssignment::at(const Root& r) const {
    const auto it = values_.find(r);
    if (it == values_.end()) throw InputError("no scalar for root " + to_string(r));
    return it->second;
}

void ScalarAssignment::check_domain(const OrthoSet& set) const {
    for (const Root& r : set.roots())
        if (!values_.contains(r)) throw InputError("no scalar for root " + to_string(r));
    for (const auto& [r, v] : values_)
        if (!set.contains(r)) throw InputError("scalar given for " + to_string(r) + ", which is not in the set");
}

void ScalarAssignment::check_nonzero(std::uint32_t p) const {
    for (const auto& [r, v] : values_)
        if (v % static_cast<std::int64_t>(p) == 0)
            throw InputError("scalar for " + to_string(r) + " vanishes modulo " + std::to_string(p));
}

std::string ScalarAssignment::literal(const OrthoSet& set) const {
    std::string out;
    for (const Root& r : set.roots()) {
        if (!out.empty()) out += ',';
        out += to_string(r) + "=" + std::to_string(at(r));
    }
    return out;
}

LinearForm canonical_form(const OrthoSet& set, const ScalarAssignment& xi, const PrimeField& field) {
    xi.check_domain(set);
    xi.check_nonzero(field.modulus());
    LinearForm f{field.modulus(), std::vector<Residue>(static_cast<std::size_t>(set.system().size()), 0)};
    for (int k : set.ordinals()) f.coeffs[static_cast<std::size_t>(k)] = field.reduce(xi.at(set.system().root(k)));
    return f;
}

Normalized normalize(const OrthoSet& set, const ScalarAssignment& xi) {
    xi.check_domain(set);
    const RootSystem& sys = set.system();
    std::vector<Root> kept;
    ScalarAssignment out = xi;
    bool have_short = false;
    for (const Root& r : set.roots()) {
        if (sys.family() == Family::B && r.kind == RootKind::Short) {
            // Roots are in canonical order, so the first short root has the smallest index.
            if (have_short) {
                out.erase(r);
                continue;
            }
            have_short = true;
        }
        if (sys.family() == Family::C && r.kind == RootKind::Diff && set.contains(Root::sum(r.i, r.j))) {
            out.erase(r);
            continue;
        }
        kept.push_back(r);
    }
    return {validate(set.system_ptr(), kept), std::move(out)};
}

namespace {

struct Enumerator {
    const SystemPtr& system;
    bool normalized_only;
    const std::function<bool(const OrthoSet&)>& visit;
    std::vector<std::vector<char>> orthogonal;
    std::vector<int> chosen;
    int shorts = 0;
    bool stopped = false;

    Enumerator(const SystemPtr& sys, bool normalized, const std::function<bool(const OrthoSet&)>& v)
        : system(sys), normalized_only(normalized), visit(v) {
        const int n = sys->size();
        orthogonal.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                orthogonal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    inner_product(sys->root(a), sys->root(b)) == 0;
    }

    bool admissible(int k) const {
        for (int c : chosen)
            if (!orthogonal[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)]) return false;
        if (!normalized_only) return true;
        const Root& r = system->root(k);
        if (r.kind == RootKind::Short && shorts > 0) return false;
        if (system->family() == Family::C && (r.kind == RootKind::Diff || r.kind == RootKind::Sum)) {
            const Root partner = r.kind == RootKind::Diff ? Root::sum(r.i, r.j) : Root::diff(r.i, r.j);
            const int pk = system->ordinal(partner);
            if (std::find(chosen.begin(), chosen.end(), pk) != chosen.end()) return false;
        }
        return true;
    }

    // Visits the admissible sets of exactly `target` roots; returns whether any exist.
    bool run(int next, std::size_t target) {
        if (stopped) return false;
        if (chosen.size() == target) {
            if (!visit(from_ordinals_unchecked(system, chosen))) stopped = true;
            return true;
        }
        bool found = false;
        for (int k = next; k < system->size() && !stopped; ++k) {
            if (!admissible(k)) continue;
            const bool is_short = system->root(k).kind == RootKind::Short;
            chosen.push_back(k);
            shorts += is_short;
            found = run(k + 1, target) || found;
            shorts -= is_short;
            chosen.pop_back();
        }
        return found;
    }

    // Size first, then lexicographic in ordinals.
    void run_all() {
        for (std::size_t target = 0; !stopped && run(0, target); ++target) {
        }
    }
};

}  // namespace

void enumerate_normalized(const SystemPtr& system, const std::function<bool(const OrthoSet&)>& visit) {
    Enumerator e(system, true, visit);
    e.run_all();
}

std::size_t count_normalized(const SystemPtr& system) {
    std::size_t count = 0;
    enumerate_normalized(system, [&](const OrthoSet&) {
        ++count;
        return true;
    });
    return count;
}

void enumerate_orthogonal(const SystemPtr& system, const std::function<bool(const OrthoSet&)>& visit) {
    Enumerator e(system, false, visit);
    e.run_all();
}

std::vector<Block> build_blocks(const OrthoSet& set) {
    if (!set.is_normalized()) throw InputError("blocks need a normalized set");
    const RootSystem& sys = set.system();
    std::set<int> columns;
    for (const Root& r : set.roots()) columns.insert(col_of(r));

    std::vector<Block> blocks;
    std::vector<char> earlier(static_cast<std::size_t>(sys.size()), 0);
    for (int column : columns) {
        Block block{column, {}};
        for (const Root& beta : set.in_column(column)) {
            const SingularSplit split = sys.singular_split(beta);
            for (std::size_t t = 0; t < split.minus.size(); ++t) {
                const int gamma = sys.ordinal(split.minus[t]);
                const int alpha = sys.ordinal(split.plus[t]);  // beta - gamma
                if (earlier[static_cast<std::size_t>(gamma)] || earlier[static_cast<std::size_t>(alpha)]) continue;
                block.roots.push_back(gamma);
            }
        }
        std::sort(block.roots.begin(), block.roots.end());
        block.roots.erase(std::unique(block.roots.begin(), block.roots.end()), block.roots.end());
        for (int k : block.roots) earlier[static_cast<std::size_t>(k)] = 1;
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::vector<int> block_union(const std::vector<Block>& blocks) {
    std::vector<int> out;
    for (const Block& b : blocks) out.insert(out.end(), b.roots.begin(), b.roots.end());
    std::sort(out.begin(), out.end());
    return out;
}

LieElement P0Vector::to_lie(const RootSystem& system, const PrimeField& field) const {
    LieElement x(field.modulus());
    x.set(system.ordinal(Root::diff(l, j)), field.reduce(minus_coeff));
    x.set(system.ordinal(Root::sum(l, j)), field.reduce(plus_coeff));
    return x;
}

namespace {

std::vector<P0Vector> p0_from_blocks(const OrthoSet& set, const ScalarAssignment& xi, const std::vector<Block>& blocks) {
    const RootSystem& sys = set.system();
    std::vector<P0Vector> out;
    for (const Block& block : blocks) {
        const int i = block.column;
        const auto col = set.in_column(i);
        if (col.size() != 2) continue;
        const int j = col[0].j;
        const Root minus_root = Root::diff(i, j);
        const Root plus_root = Root::sum(i, j);
        if (!set.contains(minus_root) || !set.contains(plus_root)) continue;
        const auto in_block = [&](const Root& r) {
            return std::binary_search(block.roots.begin(), block.roots.end(), sys.ordinal(r));
        };
        for (int l = i + 1; l < j; ++l) {
            if (!in_block(Root::diff(l, j)) || !in_block(Root::sum(l, j))) continue;
            if (!set.in_row(-l).empty()) continue;
            out.push_back({i, l, j, xi.at(plus_root), -xi.at(minus_root)});
        }
    }
    return out;
}

}  // namespace

std::vector<P0Vector> build_p0(const OrthoSet& set, const ScalarAssignment& xi) {
    return p0_from_blocks(set, xi, build_blocks(set));
}

std::vector<std::vector<Residue>> PolarizationBasis::basis(const RootSystem& system, const PrimeField& field) const {
    std::vector<std::vector<Residue>> out;
    const auto size = static_cast<std::size_t>(system.size());
    for (int k : coordinate_roots) {
        std::vector<Residue> v(size, 0);
        v[static_cast<std::size_t>(k)] = 1;
        out.push_back(std::move(v));
    }
    for (const P0Vector& x : p0) out.push_back(x.to_lie(system, field).dense(system.size()));
    return out;
}

PolarizationBasis polarization(const OrthoSet& set, const ScalarAssignment& xi) {
    xi.check_domain(set);
    PolarizationBasis pb;
    pb.blocks = build_blocks(set);
    pb.m_roots = block_union(pb.blocks);
    for (int k = 0; k < set.system().size(); ++k)
        if (!std::binary_search(pb.m_roots.begin(), pb.m_roots.end(), k)) pb.coordinate_roots.push_back(k);
    pb.p0 = p0_from_blocks(set, xi, pb.blocks);
    return pb;
}

}  // namespace coorbit
