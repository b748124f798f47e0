// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/bps.hpp"

#include <algorithm>
#include <sstream>

#include "dpz/errors.hpp"

namespace dpz {

std::vector<std::pair<int, int>> BpsTable::outside_range() const {
  std::vector<std::pair<int, int>> out;
  if (!valid_total) return out;
  for (const auto& [ij, n] : entries) {
    if (ij.first + ij.second > *valid_total) out.push_back(ij);
  }
  return out;
}

std::string BpsTable::to_text() const {
  std::map<int, std::vector<std::pair<int, std::int64_t>>> rows;
  for (const auto& [ij, n] : entries) rows[ij.first + ij.second].push_back({ij.first, n});
  std::ostringstream out;
  for (auto& [total, row] : rows) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    out << "i+j=" << total << ':';
    for (const auto& [i, n] : row) out << ' ' << n;
    if (valid_total && total > *valid_total) out << "  (outside conjectured range)";
    out << '\n';
  }
  return out.str();
}

namespace bps {

TruncatedSeries refined_bps_series(int max_total) {
  if (max_total < 0) throw InputError("max total degree must be nonnegative");
  const std::vector<std::string> vars{"q", "t"};
  const std::vector<int> orders{max_total + 1, max_total + 1};
  const int total = max_total + 1;
  TruncatedSeries out = TruncatedSeries::constant(vars, orders, 1, total);
  // The i-th block has lowest total degree 2i + 2.
  for (int i = 0; 2 * i + 2 <= max_total; ++i) {
    out = out * TruncatedSeries::geometric(vars, orders, {i + 2, i}, total);
    out = out * TruncatedSeries::geometric(vars, orders, {i + 2, i + 2}, total);
    out = out * TruncatedSeries::geometric(vars, orders, {i, i + 2}, total);
  }
  return out;
}

BpsTable refined_bps_table(int max_total, std::optional<int> degree) {
  const TruncatedSeries series = refined_bps_series(max_total);
  BpsTable table;
  for (int i = 0; i <= max_total; ++i) {
    for (int j = 0; i + j <= max_total; ++j) table.entries[{i, j}] = to_int64(series.coefficient({i, j}));
  }
  if (degree) table.valid_total = 2 * *degree - 4;
  return table;
}

BpsTable bps_low_degree(const DelPezzoSurface& s) {
  BpsTable table;
  table.entries[{0, 2}] = 1;
  table.entries[{1, 1}] = s.picard_rank() - 1;
  table.entries[{2, 0}] = 1;
  return table;
}

std::vector<TautGenerator> taut_generator_degrees(const DelPezzoSurface& s, int max_degree) {
  if (max_degree < 0) throw InputError("max degree must be nonnegative");
  const int b2 = s.betti()[2];
  std::vector<TautGenerator> out;
  auto add = [&](std::string name, int degree) {
    if (degree <= max_degree) out.push_back({std::move(name), degree});
  };
  add("c_0(2)", 1);
  for (int j = 2; j <= b2; ++j) add("c_1(1,j=" + std::to_string(j) + ")", 1);
  add("c_1(2)", 2);
  for (int m = 2; m - 1 <= max_degree; ++m) {
    add("c_" + std::to_string(m) + "(0)", m - 1);
    for (int j = 1; j <= b2; ++j) add("c_" + std::to_string(m) + "(1,j=" + std::to_string(j) + ")", m);
    add("c_" + std::to_string(m) + "(2)", m + 1);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });
  return out;
}

std::int64_t taut_monomial_count(const DelPezzoSurface& s, int k) {
  if (k < 0) throw InputError("k must be nonnegative");
  if (k == 0) return 1;
  const std::vector<std::string> vars{"x"};
  const std::vector<int> orders{k + 1};
  TruncatedSeries out = TruncatedSeries::constant(vars, orders, 1);
  for (const auto& g : taut_generator_degrees(s, k)) {
    out = out * TruncatedSeries::geometric(vars, orders, {g.degree});
  }
  return to_int64(out.coefficient({k}));
}

}  // namespace bps
}  // namespace dpz
