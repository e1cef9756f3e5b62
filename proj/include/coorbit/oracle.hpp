// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coorbit/field.hpp"
#include "coorbit/lie.hpp"
#include "coorbit/orthoset.hpp"

namespace coorbit {

/// B[a][b] = f([e_a, e_b]) in canonical root order.
FpMatrix skew_form(const LieAlgebra& algebra, const LinearForm& f);

/// Orbit dimension as the rank of the skew form of the canonical form.
int skew_rank_dim(const LieAlgebra& algebra, const OrthoSet& set, const ScalarAssignment& xi, const PrimeField& field);

struct PolarizationCheck {
    int dim = 0;
    bool independent = false;   // the listed basis vectors are linearly independent
    bool subalgebra = false;    // closed under the bracket
    bool isotropic = false;     // f([p, p]) = 0
    bool maximal = false;       // dim p = |positives| - rank / 2

    bool ok() const { return independent && subalgebra && isotropic && maximal; }
};

PolarizationCheck certify_polarization(const LieAlgebra& algebra, const OrthoSet& set, const ScalarAssignment& xi,
                                       const PrimeField& field, int skew_rank);

/// (x.lambda)(y) = lambda(x^{-1} y x) for a unipotent x in U.
LinearForm coadjoint_act(const LieAlgebra& algebra, const FpMatrix& x, const LinearForm& lambda);

/// Coadjoint action of the root subgroups exp(t e_alpha), t in F_q^*, as
/// matrices on the dual coordinates; shared by the orbit searches below.
class CoadjointGenerators {
  public:
    CoadjointGenerators(const LieAlgebra& algebra, std::uint32_t q);

    std::uint32_t q() const { return field_.modulus(); }
    int dim() const { return dim_; }
    std::size_t count() const { return actions_.size(); }

    /// Applies generator g to the form with dense coordinates `in`.
    void apply(std::size_t g, const std::vector<Residue>& in, std::vector<Residue>& out) const;

    std::uint64_t encode(const std::vector<Residue>& v) const;
    std::vector<Residue> decode(std::uint64_t code) const;

  private:
    PrimeField field_;
    int dim_;
    std::vector<FpMatrix> actions_;  // out[b] = sum_a action(b, a) in[a]
};

struct OrbitSample {
    std::uint32_t q = 0;
    std::vector<std::uint64_t> codes;  // sorted encodings of the forms in the orbit
    int generator_count = 0;

    std::size_t size() const { return codes.size(); }
};

/// Default cap on the number of functionals a search may visit.
inline constexpr std::uint64_t kOrbitBudget = 50'000'000;

/// Breadth-first closure of a form under the root-subgroup generators.
OrbitSample orbit_of(const CoadjointGenerators& gens, const LinearForm& start, std::uint64_t budget = kOrbitBudget);

OrbitSample orbit_bfs(const LieAlgebra& algebra, const OrthoSet& set, const ScalarAssignment& xi, std::uint32_t q,
                      std::uint64_t budget = kOrbitBudget);

struct Census {
    std::uint32_t q = 0;
    std::uint64_t total = 0;               // sum of orbit sizes
    std::uint64_t orbits = 0;
    std::map<int, std::uint64_t> by_dim;   // orbit dimension -> number of orbits
};

/// Partitions all of u* over F_q into coadjoint orbits.
Census full_orbit_census(const LieAlgebra& algebra, std::uint32_t q, std::uint64_t budget = kOrbitBudget);

/// Exact log_q of an orbit size; throws InternalError if it is not a power of q.
int log_q(std::uint64_t size, std::uint32_t q);

}  // namespace coorbit
