// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "coorbit/lie.hpp"

#include <string>

#include "coorbit/errors.hpp"

namespace coorbit {

namespace {

IntMatrix build_root_matrix(const RootSystem& sys, const Root& r) {
    IntMatrix m(sys.matrix_size(), sys.rank());
    const int i = r.i;
    const int j = r.j;
    switch (r.kind) {
        case RootKind::Diff:
            m.at_label(j, i) = 1;
            m.at_label(-i, -j) = -1;
            break;
        case RootKind::Sum:
            // The symplectic realization needs a plus sign to close under the bracket.
            m.at_label(-j, i) = 1;
            m.at_label(-i, j) = sys.family() == Family::C ? 1 : -1;
            break;
        case RootKind::Short:
            m.at_label(0, i) = 1;
            m.at_label(-i, 0) = -1;
            break;
        case RootKind::Long:
            m.at_label(-i, i) = 1;
            break;
    }
    return m;
}

}  // namespace

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) {
    const int n = a.size();
    IntMatrix c = a;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) c.at(r, s) = 0;
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const std::int64_t ark = a.at(r, k);
            const std::int64_t brk = b.at(r, k);
            for (int s = 0; s < n; ++s) c.at(r, s) += ark * b.at(k, s) - brk * a.at(k, s);
        }
    }
    return c;
}

std::pair<int, int> primary_entry(const Root& alpha) {
    switch (alpha.kind) {
        case RootKind::Diff: return {alpha.j, alpha.i};
        case RootKind::Sum: return {-alpha.j, alpha.i};
        case RootKind::Short: return {0, alpha.i};
        case RootKind::Long: return {-alpha.i, alpha.i};
    }
    return {0, 0};
}

Residue LieElement::coeff(int ordinal) const {
    const auto it = terms_.find(ordinal);
    return it == terms_.end() ? 0 : it->second;
}

void LieElement::set(int ordinal, Residue value) {
    value %= modulus_;
    if (value == 0)
        terms_.erase(ordinal);
    else
        terms_[ordinal] = value;
}

void LieElement::add(int ordinal, Residue value) {
    set(ordinal, static_cast<Residue>((static_cast<std::uint64_t>(coeff(ordinal)) + value) % modulus_));
}

std::vector<Residue> LieElement::dense(int size) const {
    std::vector<Residue> v(static_cast<std::size_t>(size), 0);
    for (const auto& [k, x] : terms_) v[static_cast<std::size_t>(k)] = x;
    return v;
}

LieAlgebra::LieAlgebra(SystemPtr system) : system_(std::move(system)) {
    const RootSystem& sys = *system_;
    const int count = sys.size();
    matrices_.reserve(static_cast<std::size_t>(count));
    for (const Root& r : sys.positives()) matrices_.push_back(build_root_matrix(sys, r));

    constants_.assign(static_cast<std::size_t>(count * count), 0);
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            const IntMatrix c = commutator(matrices_[static_cast<std::size_t>(a)], matrices_[static_cast<std::size_t>(b)]);
            const int s = sys.sum_ordinal(a, b);
            IntMatrix expected(sys.matrix_size(), sys.rank());
            int constant = 0;
            if (s >= 0) {
                const auto [row, col] = primary_entry(sys.root(s));
                constant = static_cast<int>(c.at_label(row, col));
                const IntMatrix& es = matrices_[static_cast<std::size_t>(s)];
                for (int r = 0; r < es.size(); ++r)
                    for (int t = 0; t < es.size(); ++t) expected.at(r, t) = constant * es.at(r, t);
            }
            if (!(c == expected)) {
                throw InternalError("commutator [" + to_string(sys.root(a)) + ", " + to_string(sys.root(b)) +
                                    "] is not proportional to a single root matrix");
            }
            constants_[static_cast<std::size_t>(a * count + b)] = constant;
        }
    }
}

void LieAlgebra::require_modulus(std::uint32_t p) const {
    if (p < static_cast<std::uint32_t>(system_->matrix_size())) {
        throw ConfigError("characteristic " + std::to_string(p) + " is smaller than the matrix size " +
                          std::to_string(system_->matrix_size()));
    }
}

FpMatrix LieAlgebra::root_matrix(const Root& alpha, const PrimeField& field) const {
    require_modulus(field.modulus());
    const IntMatrix& e = root_matrix(system_->ordinal(alpha));
    const auto size = static_cast<std::size_t>(e.size());
    FpMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) m.at(r, c) = field.reduce(e.at(static_cast<int>(r), static_cast<int>(c)));
    return m;
}

int LieAlgebra::bracket_constant(const Root& a, const Root& b) const {
    return bracket_constant(system_->ordinal(a), system_->ordinal(b));
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
    if (x.modulus() != y.modulus()) throw InputError("bracket of elements over different fields");
    const PrimeField field(x.modulus());
    LieElement z(x.modulus());
    for (const auto& [a, xa] : x.terms()) {
        for (const auto& [b, yb] : y.terms()) {
            const int c = bracket_constant(a, b);
            if (c == 0) continue;
            z.add(system_->sum_ordinal(a, b), field.mul(field.reduce(c), field.mul(xa, yb)));
        }
    }
    return z;
}

FpMatrix LieAlgebra::assemble(const LieElement& x) const {
    const PrimeField field(x.modulus());
    const auto size = static_cast<std::size_t>(system_->matrix_size());
    FpMatrix m(size, size);
    for (const auto& [k, xk] : x.terms()) {
        const IntMatrix& e = root_matrix(k);
        for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t c = 0; c < size; ++c) {
                const std::int64_t v = e.at(static_cast<int>(r), static_cast<int>(c));
                if (v != 0) m.at(r, c) = field.add(m.at(r, c), field.mul(field.reduce(v), xk));
            }
        }
    }
    return m;
}

LieElement LieAlgebra::expand(const FpMatrix& m, const PrimeField& field) const {
    LieElement x(field.modulus());
    const IntMatrix probe(system_->matrix_size(), system_->rank());
    for (int k = 0; k < system_->size(); ++k) {
        const auto [row, col] = primary_entry(system_->root(k));
        x.set(k, m.at(static_cast<std::size_t>(probe.position(row)), static_cast<std::size_t>(probe.position(col))));
    }
    if (!(assemble(x) == m)) throw InternalError("matrix lies outside the span of the root matrices");
    return x;
}

FpMatrix LieAlgebra::exp_unipotent(const LieElement& x) const {
    require_modulus(x.modulus());
    const PrimeField field(x.modulus());
    const auto size = static_cast<std::size_t>(system_->matrix_size());
    const FpMatrix xm = assemble(x);
    FpMatrix result = FpMatrix::identity(size);
    FpMatrix power = FpMatrix::identity(size);
    Residue factorial = 1;
    for (std::size_t k = 1; k < size; ++k) {
        power = multiply(power, xm, field);
        if (power.is_zero()) break;
        factorial = field.mul(factorial, field.reduce(static_cast<std::int64_t>(k)));
        const Residue scale = field.inv(factorial);
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c)
                result.at(r, c) = field.add(result.at(r, c), field.mul(scale, power.at(r, c)));
    }
    return result;
}

}  // namespace coorbit
