// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "coorbit/reduction.hpp"

#include <algorithm>

#include "coorbit/errors.hpp"
#include "coorbit/weyl.hpp"

namespace coorbit {

std::string to_string(ReductionCase c) {
    switch (c) {
        case ReductionCase::Empty: return "empty";
        case ReductionCase::ShortRoot: return "short";
        case ReductionCase::LongRoot: return "long";
        case ReductionCase::SingleDiff: return "single-diff";
        case ReductionCase::SingleSum: return "single-sum";
        case ReductionCase::Pair: return "pair";
    }
    return {};
}

Root ReductionData::relabel(const Root& r) const {
    const auto to_new = [&](int idx) {
        const auto it = std::lower_bound(surviving_eps.begin(), surviving_eps.end(), idx);
        if (it == surviving_eps.end() || *it != idx) throw InternalError("relabeling a removed index");
        return static_cast<int>(it - surviving_eps.begin()) + 1;
    };
    Root out = r;
    out.i = to_new(r.i);
    if (r.kind == RootKind::Diff || r.kind == RootKind::Sum) out.j = to_new(r.j);
    return out;
}

namespace {

int count_rows_free(const OrthoSet& set, int lo, int hi) {
    // #{l : lo < l < hi, D has no root in row -l}
    int count = 0;
    for (int l = lo + 1; l < hi; ++l)
        if (set.in_row(-l).empty()) ++count;
    return count;
}

}  // namespace

ReductionData reduce(const OrthoSet& set, const ScalarAssignment& xi) {
    if (!set.is_normalized()) throw InputError("reduction needs a normalized set");
    xi.check_domain(set);
    const RootSystem& sys = set.system();
    const int n = sys.rank();
    if (n < 1) throw InputError("cannot reduce a rank-0 system");

    ReductionData data;
    const std::vector<Root> first = set.in_column(1);
    Family derived_family = sys.family();
    std::vector<int> dropped_eps{1};
    std::vector<char> removed(static_cast<std::size_t>(sys.size()), 0);
    const auto remove_if = [&](auto pred) {
        for (int k = 0; k < sys.size(); ++k)
            if (pred(sys.root(k))) removed[static_cast<std::size_t>(k)] = 1;
    };
    remove_if([](const Root& r) { return col_of(r) == 1; });

    if (first.empty()) {
        data.kind = ReductionCase::Empty;
    } else if (first.size() == 1 && first[0].kind == RootKind::Short) {
        data.kind = ReductionCase::ShortRoot;
        derived_family = Family::D;
        remove_if([](const Root& r) { return row_of(r) == 0; });
    } else if (first.size() == 1 && first[0].kind == RootKind::Long) {
        data.kind = ReductionCase::LongRoot;
    } else {
        const int j = first[0].j;
        for (const Root& r : first)
            if (r.j != j || (r.kind != RootKind::Diff && r.kind != RootKind::Sum))
                throw InternalError("unexpected first column {" + set.literal() + "}");
        data.partner = j;
        data.kind = first.size() == 2 ? ReductionCase::Pair
                                      : (first[0].kind == RootKind::Diff ? ReductionCase::SingleDiff
                                                                         : ReductionCase::SingleSum);
        dropped_eps.push_back(j);
        remove_if([j](const Root& r) { return col_of(r) == j || row_of(r) == j || row_of(r) == -j; });
    }

    for (int idx = 1; idx <= n; ++idx)
        if (std::find(dropped_eps.begin(), dropped_eps.end(), idx) == dropped_eps.end()) data.surviving_eps.push_back(idx);
    data.derived = build_system_unchecked(derived_family, static_cast<int>(data.surviving_eps.size()));

    data.pi.assign(static_cast<std::size_t>(sys.size()), -1);
    std::vector<char> hit(static_cast<std::size_t>(data.derived->size()), 0);
    for (int k = 0; k < sys.size(); ++k) {
        if (removed[static_cast<std::size_t>(k)]) {
            data.removed.push_back(k);
            continue;
        }
        data.tilde.push_back(k);
        const auto image = data.derived->ordinal_of(data.relabel(sys.root(k)));
        if (!image || hit[static_cast<std::size_t>(*image)])
            throw InternalError("relabeling is not a bijection onto the derived system");
        hit[static_cast<std::size_t>(*image)] = 1;
        data.pi[static_cast<std::size_t>(k)] = *image;
    }
    if (static_cast<int>(data.tilde.size()) != data.derived->size())
        throw InternalError("relabeling misses roots of the derived system");

    std::vector<Root> derived_roots;
    for (int k : set.ordinals()) {
        const Root& r = sys.root(k);
        if (col_of(r) == 1) continue;
        if (removed[static_cast<std::size_t>(k)])
            throw InternalError("root " + to_string(r) + " is neither in the first column nor among surviving roots");
        const Root image = data.relabel(r);
        derived_roots.push_back(image);
        data.derived_xi.set(image, xi.at(r));
    }
    data.derived_set = validate(data.derived, derived_roots);

    const int c1 = static_cast<int>(sys.col_set(1).size());
    switch (data.kind) {
        case ReductionCase::SingleDiff:
            data.r = c1 + static_cast<int>(sys.singular_split(Root::sum(1, data.partner)).minus.size());
            break;
        case ReductionCase::SingleSum:
            data.r = c1 + static_cast<int>(sys.singular_split(Root::diff(1, data.partner)).minus.size());
            break;
        case ReductionCase::Pair:
            data.r = c1 + count_rows_free(set, 1, data.partner);
            break;
        default: {
            const PolarizationBasis pb = polarization(set, xi);
            for (int k : pb.coordinate_roots)
                if (col_of(sys.root(k)) == 1) ++data.r;
            break;
        }
    }
    return data;
}

bool RecursionReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds(); });
}

RecursionReport recursion_report(const OrthoSet& set, const ScalarAssignment& xi) {
    const RootSystem& sys = set.system();
    const ReductionData data = reduce(set, xi);
    const OrthoSet& dset = data.derived_set;

    const InversionData inv = inversion_length(sys, involution_of(set));
    const InversionData dinv = inversion_length(*data.derived, involution_of(dset));
    const int length = inv.length;
    const int dlength = dinv.length;
    const int s = static_cast<int>(set.size());
    const int ds = static_cast<int>(dset.size());
    const int theta = defect(set).theta;
    const int dtheta = defect(dset).theta;
    const long big_f = length - s - 2 * theta;
    const long big_df = dlength - ds - 2 * dtheta;

    const int first_count = static_cast<int>(set.in_column(1).size());
    const int c1 = static_cast<int>(sys.col_set(1).size());

    RecursionReport report;
    report.kind = data.kind;
    auto& checks = report.checks;

    checks.push_back({"dim p = dim p' + r", polarization(set, xi).dim(),
                      polarization(dset, data.derived_xi).dim() + data.r});
    checks.push_back({"s = s' + |D cap C_1|", s, ds + first_count});

    long mismatched = 0;
    for (int k : data.tilde) {
        const bool here = std::binary_search(inv.roots.begin(), inv.roots.end(), k);
        const bool there = std::binary_search(dinv.roots.begin(), dinv.roots.end(), data.pi[static_cast<std::size_t>(k)]);
        if (here != there) ++mismatched;
    }
    checks.push_back({"inversions on surviving roots match pi", mismatched, 0});

    const int j = data.partner;
    switch (data.kind) {
        case ReductionCase::Empty:
            checks.push_back({"l = l'", length, dlength});
            break;
        case ReductionCase::SingleDiff:
            checks.push_back({"l = l' + |S(e1-ej)| + 1", length,
                              dlength + static_cast<long>(sys.singular_set(Root::diff(1, j)).size()) * 2 + 1});
            break;
        case ReductionCase::SingleSum:
            checks.push_back({"l = l' + |S(e1+ej)| + 1", length,
                              dlength + static_cast<long>(sys.singular_set(Root::sum(1, j)).size()) * 2 + 1});
            break;
        case ReductionCase::ShortRoot: {
            long negative_rows = 0;
            for (const Root& r : set.roots())
                if (col_of(r) != 1 && row_of(r) < 0) ++negative_rows;
            checks.push_back({"l = l' + |C_1| + 2 #{row < 0}", length, dlength + c1 + 2 * negative_rows});
            break;
        }
        case ReductionCase::LongRoot:
            checks.push_back({"l = l' + |C_1|", length, dlength + c1});
            break;
        case ReductionCase::Pair: {
            long inner_sums = 0;
            long straddling_pairs = 0;
            long shorts_before = 0;
            for (const Root& r : set.roots()) {
                if (col_of(r) == 1) continue;
                if (r.kind == RootKind::Sum && 1 < r.i && r.j < j) ++inner_sums;
                if (r.kind == RootKind::Diff && 1 < r.i && r.i < j && j < r.j && set.contains(Root::sum(r.i, r.j)))
                    ++straddling_pairs;
                if (r.kind == RootKind::Short && 1 < r.i && r.i < j) ++shorts_before;
            }
            const long cj = static_cast<long>(sys.col_set(j).size());
            checks.push_back({"l = l' + |C_1| + |C_j| + 4a + 2b + 2c", length,
                              dlength + c1 + cj + 4 * inner_sums + 2 * straddling_pairs + 2 * shorts_before});
            break;
        }
    }

    checks.push_back({"F = F' + 2(|removed| - r)", big_f,
                      big_df + 2 * (static_cast<long>(data.removed.size()) - data.r)});
    return report;
}

}  // namespace coorbit
