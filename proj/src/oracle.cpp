// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "coorbit/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "coorbit/errors.hpp"

namespace coorbit {

FpMatrix skew_form(const LieAlgebra& algebra, const LinearForm& f) {
    const RootSystem& sys = algebra.system();
    const PrimeField field(f.modulus);
    const auto size = static_cast<std::size_t>(sys.size());
    FpMatrix b(size, size);
    for (int a = 0; a < sys.size(); ++a) {
        for (int c = 0; c < sys.size(); ++c) {
            const int s = sys.sum_ordinal(a, c);
            if (s < 0) continue;
            const Residue value = f.coeffs[static_cast<std::size_t>(s)];
            if (value == 0) continue;
            b.at(static_cast<std::size_t>(a), static_cast<std::size_t>(c)) =
                field.mul(field.reduce(algebra.bracket_constant(a, c)), value);
        }
    }
    return b;
}

int skew_rank_dim(const LieAlgebra& algebra, const OrthoSet& set, const ScalarAssignment& xi, const PrimeField& field) {
    algebra.require_modulus(field.modulus());
    const LinearForm f = canonical_form(set, xi, field);
    const auto rank = static_cast<int>(field_rank(skew_form(algebra, f), field));
    if (rank % 2 != 0) throw InternalError("odd rank of a skew form for {" + set.literal() + "}");
    return rank;
}

namespace {

std::vector<Residue> bracket_dense(const LieAlgebra& algebra, const PrimeField& field, const std::vector<Residue>& x,
                                   const std::vector<Residue>& y) {
    const RootSystem& sys = algebra.system();
    std::vector<Residue> z(x.size(), 0);
    for (int a = 0; a < sys.size(); ++a) {
        if (x[static_cast<std::size_t>(a)] == 0) continue;
        for (int b = 0; b < sys.size(); ++b) {
            if (y[static_cast<std::size_t>(b)] == 0) continue;
            const int c = algebra.bracket_constant(a, b);
            if (c == 0) continue;
            auto& slot = z[static_cast<std::size_t>(sys.sum_ordinal(a, b))];
            slot = field.add(slot, field.mul(field.reduce(c),
                                             field.mul(x[static_cast<std::size_t>(a)], y[static_cast<std::size_t>(b)])));
        }
    }
    return z;
}

Residue evaluate(const LinearForm& f, const std::vector<Residue>& v, const PrimeField& field) {
    Residue acc = 0;
    for (std::size_t k = 0; k < v.size(); ++k) acc = field.add(acc, field.mul(f.coeffs[k], v[k]));
    return acc;
}

// Inverse of a unipotent matrix: sum_k (I - x)^k.
FpMatrix unipotent_inverse(const FpMatrix& x, const PrimeField& field) {
    const std::size_t size = x.rows();
    FpMatrix nil(size, size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) nil.at(r, c) = field.sub(r == c ? 1 : 0, x.at(r, c));
    FpMatrix result = FpMatrix::identity(size);
    FpMatrix power = FpMatrix::identity(size);
    for (std::size_t k = 1; k <= size; ++k) {
        power = multiply(power, nil, field);
        if (power.is_zero()) break;
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c) result.at(r, c) = field.add(result.at(r, c), power.at(r, c));
    }
    if (!(multiply(result, x, field) == FpMatrix::identity(size))) throw InternalError("matrix is not unipotent");
    return result;
}

// Row b holds the coordinates of x^{-1} e_b x in the root basis.
FpMatrix conjugation_matrix(const LieAlgebra& algebra, const FpMatrix& x, const PrimeField& field) {
    const RootSystem& sys = algebra.system();
    const FpMatrix x_inv = unipotent_inverse(x, field);
    const auto size = static_cast<std::size_t>(sys.size());
    FpMatrix out(size, size);
    for (int b = 0; b < sys.size(); ++b) {
        LieElement eb(field.modulus());
        eb.set(b, 1);
        const FpMatrix conj = multiply(multiply(x_inv, algebra.assemble(eb), field), x, field);
        const LieElement y = algebra.expand(conj, field);
        for (const auto& [g, v] : y.terms()) out.at(static_cast<std::size_t>(b), static_cast<std::size_t>(g)) = v;
    }
    return out;
}

}  // namespace

PolarizationCheck certify_polarization(const LieAlgebra& algebra, const OrthoSet& set, const ScalarAssignment& xi,
                                       const PrimeField& field, int skew_rank) {
    const RootSystem& sys = algebra.system();
    const PolarizationBasis pb = polarization(set, xi);
    const auto basis = pb.basis(sys, field);
    const LinearForm f = canonical_form(set, xi, field);

    PolarizationCheck check;
    check.dim = pb.dim();
    Subspace span(static_cast<std::size_t>(sys.size()), field);
    check.independent = true;
    for (const auto& v : basis) check.independent = span.insert(v) && check.independent;

    check.subalgebra = true;
    check.isotropic = true;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            const auto z = bracket_dense(algebra, field, basis[a], basis[b]);
            if (check.subalgebra && !span.contains(z)) check.subalgebra = false;
            if (check.isotropic && evaluate(f, z, field) != 0) check.isotropic = false;
        }
    }
    check.maximal = 2 * (sys.size() - pb.dim()) == skew_rank;
    return check;
}

LinearForm coadjoint_act(const LieAlgebra& algebra, const FpMatrix& x, const LinearForm& lambda) {
    const PrimeField field(lambda.modulus);
    const FpMatrix conj = conjugation_matrix(algebra, x, field);
    LinearForm out{lambda.modulus, std::vector<Residue>(lambda.coeffs.size(), 0)};
    for (std::size_t b = 0; b < conj.rows(); ++b) {
        Residue acc = 0;
        for (std::size_t g = 0; g < conj.cols(); ++g) acc = field.add(acc, field.mul(conj.at(b, g), lambda.coeffs[g]));
        out.coeffs[b] = acc;
    }
    return out;
}

CoadjointGenerators::CoadjointGenerators(const LieAlgebra& algebra, std::uint32_t q)
    : field_(q), dim_(algebra.system().size()) {
    algebra.require_modulus(q);
    for (int a = 0; a < dim_; ++a) {
        for (std::uint32_t t = 1; t < q; ++t) {
            LieElement x(q);
            x.set(a, t);
            actions_.push_back(conjugation_matrix(algebra, algebra.exp_unipotent(x), field_));
        }
    }
}

void CoadjointGenerators::apply(std::size_t g, const std::vector<Residue>& in, std::vector<Residue>& out) const {
    const FpMatrix& m = actions_[g];
    out.assign(in.size(), 0);
    for (std::size_t b = 0; b < in.size(); ++b) {
        Residue acc = 0;
        const auto row = m.row(b);
        for (std::size_t a = 0; a < in.size(); ++a)
            if (row[a] != 0 && in[a] != 0) acc = field_.add(acc, field_.mul(row[a], in[a]));
        out[b] = acc;
    }
}

std::uint64_t CoadjointGenerators::encode(const std::vector<Residue>& v) const {
    std::uint64_t code = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * q() + *it;
    return code;
}

std::vector<Residue> CoadjointGenerators::decode(std::uint64_t code) const {
    std::vector<Residue> v(static_cast<std::size_t>(dim_), 0);
    for (auto& x : v) {
        x = static_cast<Residue>(code % q());
        code /= q();
    }
    return v;
}

namespace {

std::uint64_t checked_space_size(std::uint32_t q, int dim) {
    std::uint64_t total = 1;
    for (int k = 0; k < dim; ++k) {
        if (total > (~std::uint64_t{0}) / q) throw BudgetError("functional space too large to encode");
        total *= q;
    }
    return total;
}

template <class Visited>
std::vector<std::uint64_t> closure(const CoadjointGenerators& gens, std::uint64_t start, Visited& visited,
                                   std::uint64_t budget) {
    std::vector<std::uint64_t> orbit{start};
    visited.mark(start);
    std::vector<Residue> out;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        const std::vector<Residue> current = gens.decode(orbit[head]);
        for (std::size_t g = 0; g < gens.count(); ++g) {
            gens.apply(g, current, out);
            const std::uint64_t code = gens.encode(out);
            if (visited.seen(code)) continue;
            visited.mark(code);
            orbit.push_back(code);
            if (orbit.size() > budget)
                throw BudgetError("orbit exceeds the budget of " + std::to_string(budget) + " functionals");
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

struct HashVisited {
    std::unordered_set<std::uint64_t> set;
    bool seen(std::uint64_t c) const { return set.contains(c); }
    void mark(std::uint64_t c) { set.insert(c); }
};

struct BitmapVisited {
    std::vector<char> bits;
    bool seen(std::uint64_t c) const { return bits[c] != 0; }
    void mark(std::uint64_t c) { bits[c] = 1; }
};

}  // namespace

int log_q(std::uint64_t size, std::uint32_t q) {
    int e = 0;
    while (size > 1 && size % q == 0) {
        size /= q;
        ++e;
    }
    if (size != 1) throw InternalError("orbit size is not a power of q");
    return e;
}

OrbitSample orbit_of(const CoadjointGenerators& gens, const LinearForm& start, std::uint64_t budget) {
    if (start.modulus != gens.q()) throw InputError("form and generators use different fields");
    checked_space_size(gens.q(), gens.dim());
    HashVisited visited;
    OrbitSample sample;
    sample.q = gens.q();
    sample.generator_count = static_cast<int>(gens.count());
    sample.codes = closure(gens, gens.encode(start.coeffs), visited, budget);
    return sample;
}

OrbitSample orbit_bfs(const LieAlgebra& algebra, const OrthoSet& set, const ScalarAssignment& xi, std::uint32_t q,
                      std::uint64_t budget) {
    if (algebra.system().rank() > 3) throw BudgetError("orbit search is limited to rank <= 3");
    const CoadjointGenerators gens(algebra, q);
    return orbit_of(gens, canonical_form(set, xi, PrimeField(q)), budget);
}

Census full_orbit_census(const LieAlgebra& algebra, std::uint32_t q, std::uint64_t budget) {
    const int dim = algebra.system().size();
    const std::uint64_t total = checked_space_size(q, dim);
    if (total > budget) {
        throw BudgetError("census needs " + std::to_string(total) + " functionals, budget is " + std::to_string(budget));
    }
    const CoadjointGenerators gens(algebra, q);
    BitmapVisited visited{std::vector<char>(total, 0)};
    Census census;
    census.q = q;
    for (std::uint64_t code = 0; code < total; ++code) {
        if (visited.seen(code)) continue;
        const auto orbit = closure(gens, code, visited, budget);
        census.total += orbit.size();
        ++census.orbits;
        ++census.by_dim[log_q(orbit.size(), q)];
    }
    return census;
}

}  // namespace coorbit
