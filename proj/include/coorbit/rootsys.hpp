// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coorbit {

enum class Family : char { B = 'B', C = 'C', D = 'D' };

Family parse_family(std::string_view text);
char family_char(Family f);

enum class RootKind : std::uint8_t {
    Diff,   // e_i - e_j
    Sum,    // e_i + e_j
    Short,  // e_i     (B only)
    Long,   // 2 e_i   (C only)
};

/// A positive root of a classical system, stored by kind and indices.
///
/// Indices are 1-based. For Short and Long roots `j` is zero.
struct Root {
    RootKind kind = RootKind::Diff;
    int i = 0;
    int j = 0;

    static constexpr Root diff(int i, int j) { return {RootKind::Diff, i, j}; }
    static constexpr Root sum(int i, int j) { return {RootKind::Sum, i, j}; }
    static constexpr Root short_root(int i) { return {RootKind::Short, i, 0}; }
    static constexpr Root long_root(int i) { return {RootKind::Long, i, 0}; }

    friend constexpr auto operator<=>(const Root&, const Root&) = default;
};

/// Sparse epsilon-coordinates of a root: at most two nonzero entries.
struct EpsTerm {
    int index;
    int coeff;
};

struct EpsCoords {
    EpsTerm terms[2];
    int count = 0;
};

EpsCoords eps_coords(const Root& r);

/// Dense epsilon-coordinates of length n.
std::vector<int> eps_vector(const Root& r, int n);

int inner_product(const Root& a, const Root& b);

/// Matrix row label of the root's root vector (in [-n, n]).
int row_of(const Root& r);
/// Matrix column label of the root's root vector (in [1, n]).
int col_of(const Root& r);

std::string to_string(const Root& r);

/// Parses `e<i>`, `2e<i>`, `e<i>+e<j>` or `e<i>-e<j>` (i < j).
Root parse_root(std::string_view text);

/// Parses a comma-separated list of roots. Empty or blank input yields {}.
std::vector<Root> parse_root_list(std::string_view text);

std::string format_root_list(std::span<const Root> roots);

/// Pair of roots summing to a given root; `plus` is the S+ member.
struct SingularPair {
    Root plus;
    Root minus;
};

struct SingularSplit {
    std::vector<Root> plus;
    std::vector<Root> minus;
};

class RootSystem;
using SystemPtr = std::shared_ptr<const RootSystem>;

/// Positive roots of B_n, C_n or D_n in a fixed canonical order.
///
/// Roots are ordered by ascending column; inside column i by row in the
/// sequence i+1, ..., n, 0, -n, ..., -(i+1), -i. Degenerate ranks (B_0, C_0,
/// D_0, D_1) are representable and have no positive roots.
class RootSystem {
  public:
    RootSystem(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    /// Size of the matrix realization: 2n+1 for B, 2n otherwise.
    int matrix_size() const { return family_ == Family::B ? 2 * rank_ + 1 : 2 * rank_; }
    int size() const { return static_cast<int>(positives_.size()); }

    const std::vector<Root>& positives() const { return positives_; }
    const Root& root(int ordinal) const { return positives_[static_cast<std::size_t>(ordinal)]; }

    bool contains(const Root& r) const { return ordinal_of(r).has_value(); }
    std::optional<int> ordinal_of(const Root& r) const;
    /// Ordinal of a root that must be present; throws InputError otherwise.
    int ordinal(const Root& r) const;

    /// Ordinal of a+b when the sum is a positive root, -1 otherwise.
    int sum_ordinal(int a, int b) const {
        return sums_[static_cast<std::size_t>(a) * positives_.size() + static_cast<std::size_t>(b)];
    }

    /// R_i: positive roots with row label i.
    std::vector<Root> row_set(int i) const;
    /// C_j: positive roots with column label j.
    std::vector<Root> col_set(int j) const;

    /// All unordered pairs of positive roots summing to `beta`.
    std::vector<SingularPair> singular_set(const Root& beta) const;
    SingularSplit singular_split(const Root& beta) const;

    /// Rank bounds for user-facing systems (n >= 1 for B/C, n >= 2 for D).
    static bool rank_admissible(Family family, int rank);

  private:
    Family family_;
    int rank_;
    std::vector<Root> positives_;
    std::vector<int> index_;
    std::vector<int> sums_;

    std::size_t key(const Root& r) const;
};

/// Builds a user-facing system; rejects ranks outside the family bounds.
SystemPtr build_system(Family family, int rank);

/// Builds a system allowing the degenerate ranks reached by reduction.
SystemPtr build_system_unchecked(Family family, int rank);

}  // namespace coorbit
