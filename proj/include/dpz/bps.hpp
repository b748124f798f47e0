// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpz/lattice.hpp"
#include "dpz/series.hpp"

namespace dpz {

/// Refined BPS numbers n^{i,j}, keyed by (i, j).
struct BpsTable {
  std::map<std::pair<int, int>, std::int64_t> entries;
  /// i + j <= 2d - 4 when a degree d was supplied.
  std::optional<int> valid_total;
  /// Entries beyond valid_total, listed as (i, j).
  std::vector<std::pair<int, int>> outside_range() const;
  /// One line per total degree i + j with i descending: n^{w,0} ... n^{0,w}.
  std::string to_text() const;
};

struct TautGenerator {
  std::string name;  // e.g. "c_2(1,j=3)"
  int degree = 0;
};

namespace bps {

/// prod_{i >= 0} 1 / ((1 - (qt)^i q^2)(1 - (qt)^i q^2 t^2)(1 - (qt)^i t^2)) in
/// variables (q, t), truncated at total degree max_total (exclusive of
/// anything above it).
TruncatedSeries refined_bps_series(int max_total);

/// Every n^{i,j} with i + j <= max_total; `degree` sets valid_total = 2d - 4.
BpsTable refined_bps_table(int max_total, std::optional<int> degree = std::nullopt);

/// n^{0,2} = 1, n^{1,1} = rho - 1, n^{2,0} = 1.
BpsTable bps_low_degree(const DelPezzoSurface& s);

/// Tautological generators of degree <= max_degree, ordered by degree.
std::vector<TautGenerator> taut_generator_degrees(const DelPezzoSurface& s, int max_degree);

/// Number of degree-k monomials in the generators: the x^k coefficient of
/// prod_g 1/(1 - x^deg g).
std::int64_t taut_monomial_count(const DelPezzoSurface& s, int k);

}  // namespace bps
}  // namespace dpz
