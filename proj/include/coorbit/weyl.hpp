// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "coorbit/orthoset.hpp"
#include "coorbit/rootsys.hpp"

namespace coorbit {

/// Element of the hyperoctahedral group: e_k maps to sign(images[k-1]) e_|images[k-1]|.
class SignedPermutation {
  public:
    static SignedPermutation identity(int n);
    static SignedPermutation reflection(const Root& r, int n);

    explicit SignedPermutation(std::vector<int> images);

    int rank() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }
    /// Signed image of e_k (1-based).
    int image(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }

    /// (this * other)(e_k) = this(other(e_k)).
    SignedPermutation compose(const SignedPermutation& other) const;
    bool is_identity() const;

    /// Image of a root as dense epsilon-coordinates.
    std::vector<int> apply(const Root& r) const;

    std::string to_string() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  private:
    std::vector<int> images_;
};

/// Product of the (commuting) reflections in the roots of the set.
SignedPermutation involution_of(const OrthoSet& set);

struct InversionData {
    std::vector<int> roots;  // ordinals alpha > 0 with sigma(alpha) < 0
    int length = 0;
};

InversionData inversion_length(const RootSystem& system, const SignedPermutation& sigma);

struct Defect {
    int d1 = 0;
    int d2 = 0;
    int d3 = 0;
    int d4 = 0;
    int theta = 0;
    int anchor = 0;  // l with D meeting row 0 in {e_l}; 0 when that row is empty
};

Defect defect(const OrthoSet& set);

/// l(sigma) - |D| - 2 theta.
int predicted_dim(const OrthoSet& set);

/// Half the maximal coadjoint orbit dimension.
int mu_max(Family family, int rank);

/// An orthogonal set whose orbit has dimension 2 * exponent, with zero defect.
OrthoSet spectrum_witness(const SystemPtr& system, int exponent);

/// s_j = |S+(e_{2j-1} + e_{2j})| for the columns used by the witnesses.
std::vector<int> witness_column_sizes(const RootSystem& system);

}  // namespace coorbit
