// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace coorbit {

/// Malformed or out-of-range user input (grammar, rank, non-orthogonal set).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent configuration, e.g. a modulus smaller than the matrix size.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A requested computation would exceed its work budget.
class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed. Never expected; indicates a bug or a
/// falsified identity.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace coorbit
