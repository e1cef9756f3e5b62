// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "coorbit/orthoset.hpp"
#include "coorbit/rootsys.hpp"

namespace coorbit {

/// How the first column of D shapes the reduction.
enum class ReductionCase {
    Empty,      // D meets C_1 in nothing
    ShortRoot,  // B_n, D meets C_1 in {e_1}
    LongRoot,   // C_n, D meets C_1 in {2e_1}
    SingleDiff, // {e_1 - e_j}
    SingleSum,  // {e_1 + e_j}
    Pair,       // {e_1 - e_j, e_1 + e_j}
};

std::string to_string(ReductionCase c);

/// First-column surgery: the surviving roots, the lower-rank system they form,
/// the relabeling onto it and the transported (D', xi').
struct ReductionData {
    ReductionCase kind = ReductionCase::Empty;
    int partner = 0;                 // j for the single/pair cases
    std::vector<int> tilde;          // ordinals of the surviving roots
    std::vector<int> removed;        // ordinals of everything else
    std::vector<int> surviving_eps;  // original epsilon indices, ascending; position k -> index k+1
    SystemPtr derived;
    std::vector<int> pi;             // original ordinal -> derived ordinal, -1 if removed
    int r = 0;
    OrthoSet derived_set{nullptr};
    ScalarAssignment derived_xi;

    /// Image of an original root under the order-preserving relabeling.
    Root relabel(const Root& r) const;
};

ReductionData reduce(const OrthoSet& set, const ScalarAssignment& xi);

struct IdentityCheck {
    std::string name;
    long lhs = 0;
    long rhs = 0;
    bool holds() const { return lhs == rhs; }
};

struct RecursionReport {
    ReductionCase kind = ReductionCase::Empty;
    std::vector<IdentityCheck> checks;

    bool all_hold() const;
};

/// Evaluates both sides of every recursion identity that applies to the set.
RecursionReport recursion_report(const OrthoSet& set, const ScalarAssignment& xi);

}  // namespace coorbit
