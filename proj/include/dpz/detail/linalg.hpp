// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "dpz/rational.hpp"

namespace dpz::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const std::vector<std::vector<std::int64_t>>& m);

Rational determinant(RationalMatrix m);

int rank(RationalMatrix m);

/// Solves A x = b for square nonsingular A; nullopt if A is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

/// True iff `target` is a nonnegative combination of `generators` (each a
/// vector of the same length). Exact phase-one simplex with Bland's rule.
bool cone_contains(const RationalMatrix& generators, const std::vector<Rational>& target);

}  // namespace dpz::detail
