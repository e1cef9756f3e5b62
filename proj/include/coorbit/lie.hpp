// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coorbit/field.hpp"
#include "coorbit/rootsys.hpp"

namespace coorbit {

/// Square integer matrix indexed by the labels 1..n, 0, -n..-1 (0 only when
/// the size is odd).
class IntMatrix {
  public:
    IntMatrix(int size, int rank) : size_(size), rank_(rank), data_(static_cast<std::size_t>(size * size), 0) {}

    int size() const { return size_; }
    /// Storage position of a row/column label.
    int position(int label) const { return label > 0 ? label - 1 : (label == 0 ? rank_ : size_ + label); }

    std::int64_t& at_label(int row, int col) {
        return data_[static_cast<std::size_t>(position(row) * size_ + position(col))];
    }
    std::int64_t at_label(int row, int col) const {
        return data_[static_cast<std::size_t>(position(row) * size_ + position(col))];
    }
    std::int64_t at(int r, int c) const { return data_[static_cast<std::size_t>(r * size_ + c)]; }
    std::int64_t& at(int r, int c) { return data_[static_cast<std::size_t>(r * size_ + c)]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    int size_;
    int rank_;
    std::vector<std::int64_t> data_;
};

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b);

/// Element of u over F_p, stored as nonzero coefficients on the root basis.
class LieElement {
  public:
    explicit LieElement(std::uint32_t modulus) : modulus_(modulus) {}

    std::uint32_t modulus() const { return modulus_; }
    const std::map<int, Residue>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Residue coeff(int ordinal) const;
    void set(int ordinal, Residue value);
    void add(int ordinal, Residue value);

    std::vector<Residue> dense(int size) const;

    friend bool operator==(const LieElement&, const LieElement&) = default;

  private:
    std::uint32_t modulus_;
    std::map<int, Residue> terms_;
};

/// The nilpotent algebra u spanned by the root matrices of a system.
///
/// Structure constants are read off integer matrix commutators so the
/// realization is the single source of truth for every bracket.
class LieAlgebra {
  public:
    explicit LieAlgebra(SystemPtr system);

    const RootSystem& system() const { return *system_; }
    const SystemPtr& system_ptr() const { return system_; }

    /// Integer root matrix e_alpha for the root with this ordinal.
    const IntMatrix& root_matrix(int ordinal) const { return matrices_[static_cast<std::size_t>(ordinal)]; }
    FpMatrix root_matrix(const Root& alpha, const PrimeField& field) const;

    /// c with [e_a, e_b] = c e_{a+b}; zero when a+b is not a positive root.
    int bracket_constant(int a, int b) const {
        return constants_[static_cast<std::size_t>(a) * static_cast<std::size_t>(system_->size()) +
                          static_cast<std::size_t>(b)];
    }
    int bracket_constant(const Root& a, const Root& b) const;

    LieElement bracket(const LieElement& x, const LieElement& y) const;

    /// The m x m matrix of x.
    FpMatrix assemble(const LieElement& x) const;
    /// Coordinates of a matrix in the root basis; throws InternalError when the
    /// matrix is not in u.
    LieElement expand(const FpMatrix& m, const PrimeField& field) const;

    /// sum_k X^k / k!, which terminates since X is nilpotent of index <= m.
    FpMatrix exp_unipotent(const LieElement& x) const;

    /// Throws ConfigError unless p >= m.
    void require_modulus(std::uint32_t p) const;

  private:
    SystemPtr system_;
    std::vector<IntMatrix> matrices_;
    std::vector<int> constants_;
};

/// The (row, col) label holding the +1 that identifies e_alpha.
std::pair<int, int> primary_entry(const Root& alpha);

}  // namespace coorbit
