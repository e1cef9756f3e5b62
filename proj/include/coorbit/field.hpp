// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace coorbit {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t value);
/// Smallest prime p with p >= lower_bound.
std::uint32_t next_prime_at_least(std::uint32_t lower_bound);

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Residue reduce(std::int64_t value) const {
        const std::int64_t r = value % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const {
        const Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Residue pow(Residue a, std::uint64_t e) const;
    /// Multiplicative inverse; `a` must be nonzero.
    Residue inv(Residue a) const;
    /// Lift to the symmetric range (-p/2, p/2].
    std::int64_t lift(Residue a) const {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

  private:
    std::uint32_t p_;
};

/// Dense rectangular matrix over F_p, row-major.
class FpMatrix {
  public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static FpMatrix identity(std::size_t size);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> data_;
};

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, const PrimeField& field);

/// Exact rank by Gaussian elimination over F_p.
std::size_t field_rank(FpMatrix m, const PrimeField& field);

/// Incrementally built row space in reduced echelon form.
class Subspace {
  public:
    Subspace(std::size_t ambient_dim, const PrimeField& field) : dim_(ambient_dim), field_(field) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return dim_; }

    /// Adds `v` to the span; returns false when it was already contained.
    bool insert(std::span<const Residue> v);
    bool contains(std::span<const Residue> v) const;

  private:
    std::size_t dim_;
    PrimeField field_;
    std::vector<std::vector<Residue>> rows_;
    std::vector<std::size_t> pivots_;

    std::vector<Residue> residual(std::span<const Residue> v) const;
};

}  // namespace coorbit
