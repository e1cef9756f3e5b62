// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "coorbit/field.hpp"

#include <algorithm>
#include <string>

#include "coorbit/errors.hpp"

namespace coorbit {

bool is_prime(std::uint64_t value) {
    if (value < 2) return false;
    for (std::uint64_t d = 2; d * d <= value; ++d)
        if (value % d == 0) return false;
    return true;
}

std::uint32_t next_prime_at_least(std::uint32_t lower_bound) {
    std::uint32_t p = std::max<std::uint32_t>(lower_bound, 2);
    while (!is_prime(p)) ++p;
    return p;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) throw ConfigError("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
    Residue result = 1 % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Residue PrimeField::inv(Residue a) const {
    if (a % p_ == 0) throw InternalError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

FpMatrix FpMatrix::identity(std::size_t size) {
    FpMatrix m(size, size);
    for (std::size_t k = 0; k < size; ++k) m.at(k, k) = 1;
    return m;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, const PrimeField& field) {
    if (a.cols() != b.rows()) throw InternalError("matrix shape mismatch in multiply");
    FpMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Residue aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) != 0) c.at(i, j) = field.add(c.at(i, j), field.mul(aik, b.at(k, j)));
            }
        }
    }
    return c;
}

std::size_t field_rank(FpMatrix m, const PrimeField& field) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank) {
            auto a = m.row(pivot);
            auto b = m.row(rank);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const Residue inv = field.inv(m.at(rank, col));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const Residue x = m.at(r, col);
            if (x == 0) continue;
            const Residue factor = field.mul(x, inv);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

std::vector<Residue> Subspace::residual(std::span<const Residue> v) const {
    if (v.size() != dim_) throw InternalError("subspace dimension mismatch");
    std::vector<Residue> w(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Residue x = w[pivots_[k]];
        if (x == 0) continue;
        for (std::size_t c = 0; c < dim_; ++c) w[c] = field_.sub(w[c], field_.mul(x, rows_[k][c]));
    }
    return w;
}

bool Subspace::contains(std::span<const Residue> v) const {
    const auto w = residual(v);
    return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

bool Subspace::insert(std::span<const Residue> v) {
    auto w = residual(v);
    const auto it = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
    if (it == w.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - w.begin());
    const Residue inv = field_.inv(w[pivot]);
    for (auto& x : w) x = field_.mul(x, inv);
    // Keep existing rows reduced against the new pivot.
    for (auto& row : rows_) {
        const Residue x = row[pivot];
        if (x == 0) continue;
        for (std::size_t c = 0; c < dim_; ++c) row[c] = field_.sub(row[c], field_.mul(x, w[c]));
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace coorbit
