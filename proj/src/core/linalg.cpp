// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/detail/linalg.hpp"

#include <cstddef>
#include <limits>
#include <utility>

#include "dpz/errors.hpp"

namespace dpz {

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw InvariantError("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw InvariantError("expected an integer, got " + r.get_str());
  return to_int64(BigInt(r.get_num()));
}

}  // namespace dpz

namespace dpz::detail {

RationalMatrix to_rational(const std::vector<std::vector<std::int64_t>>& m) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (auto v : row) r.push_back(make_rational(v));
    out.push_back(std::move(r));
  }
  return out;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

int rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

bool cone_contains(const RationalMatrix& generators, const std::vector<Rational>& target) {
  const std::size_t m = target.size();
  const std::size_t n = generators.size();
  // Tableau for: sum_j lambda_j g_j + art = target (rows sign-normalised so the
  // right-hand side is nonnegative). Columns 0..n-1 are lambdas, n..n+m-1 artificials.
  const std::size_t width = n + m;
  RationalMatrix tab(m, std::vector<Rational>(width + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = target[i] < 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (generators[j].size() != m) throw InputError("cone generator has wrong dimension");
      tab[i][j] = flip ? Rational(-generators[j][i]) : generators[j][i];
    }
    tab[i][n + i] = 1;
    tab[i][width] = flip ? Rational(-target[i]) : target[i];
    basis[i] = n + i;
  }
  // Reduced costs for minimising the sum of artificials.
  std::vector<Rational> cost(width + 1);
  for (std::size_t j = 0; j <= width; ++j) {
    if (j >= n && j < width) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= tab[i][j];
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][width] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw InvariantError("phase-one simplex is unbounded");
    Rational p = tab[leave][enter];
    for (auto& v : tab[leave]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= width; ++j) tab[i][j] -= f * tab[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j <= width; ++j) cost[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }
  // Optimum of the phase-one objective is -cost[width].
  return cost[width] == 0;
}

}  // namespace dpz::detail
