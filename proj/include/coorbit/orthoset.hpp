// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coorbit/field.hpp"
#include "coorbit/lie.hpp"
#include "coorbit/rootsys.hpp"

namespace coorbit {

/// A set of pairwise orthogonal positive roots, kept in canonical order.
class OrthoSet {
  public:
    /// Empty set in `system`.
    explicit OrthoSet(SystemPtr system) : system_(std::move(system)) {}

    const RootSystem& system() const { return *system_; }
    const SystemPtr& system_ptr() const { return system_; }

    const std::vector<int>& ordinals() const { return ordinals_; }
    std::vector<Root> roots() const;
    std::size_t size() const { return ordinals_.size(); }
    bool empty() const { return ordinals_.empty(); }
    bool contains(const Root& r) const;
    bool contains_ordinal(int k) const;

    std::vector<Root> in_column(int j) const;
    std::vector<Root> in_row(int i) const;

    /// At most one short root (B), never both e_i - e_j and e_i + e_j (C).
    bool is_normalized() const;

    std::string literal() const;

    friend bool operator==(const OrthoSet& a, const OrthoSet& b) {
        return a.system_ == b.system_ && a.ordinals_ == b.ordinals_;
    }

  private:
    friend OrthoSet validate(const SystemPtr&, const std::vector<Root>&);
    friend OrthoSet from_ordinals_unchecked(const SystemPtr&, std::vector<int>);

    SystemPtr system_;
    std::vector<int> ordinals_;
};

/// Rejects duplicates, foreign roots and non-orthogonal pairs.
OrthoSet validate(const SystemPtr& system, const std::vector<Root>& roots);
OrthoSet parse_set(const SystemPtr& system, std::string_view literal);

/// Builds a set from sorted, already orthogonal ordinals.
OrthoSet from_ordinals_unchecked(const SystemPtr& system, std::vector<int> ordinals);

/// Integer scalars attached to the roots of a set, read modulo each prime in use.
class ScalarAssignment {
  public:
    ScalarAssignment() = default;

    static ScalarAssignment ones(const OrthoSet& set);
    /// Uniform draws from [1, bound - 1]; nonzero modulo every prime >= bound.
    static ScalarAssignment seeded(const OrthoSet& set, std::uint64_t seed, std::uint32_t bound);
    static ScalarAssignment parse(const OrthoSet& set, std::string_view literal);

    const std::map<Root, std::int64_t>& values() const { return values_; }
    std::int64_t at(const Root& r) const;
    bool has(const Root& r) const { return values_.contains(r); }
    void set(const Root& r, std::int64_t value) { values_[r] = value; }
    void erase(const Root& r) { values_.erase(r); }

    /// Throws InputError unless the domain is exactly the set.
    void check_domain(const OrthoSet& set) const;
    /// Throws InputError if any value vanishes modulo p.
    void check_nonzero(std::uint32_t p) const;

    std::string literal(const OrthoSet& set) const;

    friend bool operator==(const ScalarAssignment&, const ScalarAssignment&) = default;

  private:
    std::map<Root, std::int64_t> values_;
};

/// A functional on u, as dense coefficients on the dual root basis.
struct LinearForm {
    std::uint32_t modulus = 0;
    std::vector<Residue> coeffs;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// f = sum over the set of xi_beta e*_beta.
LinearForm canonical_form(const OrthoSet& set, const ScalarAssignment& xi, const PrimeField& field);

struct Normalized {
    OrthoSet set;
    ScalarAssignment xi;
};

/// Removes the redundant roots that leave the associated orbit unchanged:
/// e_j beside e_i (i < j) in B_n, e_i - e_j beside e_i + e_j in C_n.
Normalized normalize(const OrthoSet& set, const ScalarAssignment& xi);

/// Every normalized orthogonal subset once, ordered by size and then
/// lexicographically in ordinals (so the empty set comes first). The visitor
/// returns false to stop early.
void enumerate_normalized(const SystemPtr& system, const std::function<bool(const OrthoSet&)>& visit);
std::size_t count_normalized(const SystemPtr& system);

/// Every orthogonal subset, normalized or not.
void enumerate_orthogonal(const SystemPtr& system, const std::function<bool(const OrthoSet&)>& visit);

struct Block {
    int column;
    std::vector<int> roots;  // ordinals, canonical order
};

/// The blocks M_{j_1}, ..., M_{j_t} over the columns meeting the set.
std::vector<Block> build_blocks(const OrthoSet& set);
std::vector<int> block_union(const std::vector<Block>& blocks);

/// xi_{e_i+e_j} e_{e_l-e_j} - xi_{e_i-e_j} e_{e_l+e_j}
struct P0Vector {
    int i;
    int l;
    int j;
    std::int64_t minus_coeff;  // on e_{e_l - e_j}
    std::int64_t plus_coeff;   // on e_{e_l + e_j}

    LieElement to_lie(const RootSystem& system, const PrimeField& field) const;
};

std::vector<P0Vector> build_p0(const OrthoSet& set, const ScalarAssignment& xi);

struct PolarizationBasis {
    std::vector<int> coordinate_roots;  // P = positives minus M
    std::vector<P0Vector> p0;
    std::vector<Block> blocks;
    std::vector<int> m_roots;           // union of blocks

    int dim() const { return static_cast<int>(coordinate_roots.size() + p0.size()); }

    /// Dense basis vectors of the subalgebra over F_p.
    std::vector<std::vector<Residue>> basis(const RootSystem& system, const PrimeField& field) const;
};

PolarizationBasis polarization(const OrthoSet& set, const ScalarAssignment& xi);

}  // namespace coorbit
