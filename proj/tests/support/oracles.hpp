// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations. Nothing here calls into the library's
// series, lattice or positivity code; everything is plain integer arithmetic.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace dpz::oracle {

using Poly = std::vector<std::int64_t>;  // coefficient of z^i at index i

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t cap) {
  Poly out(std::min(cap, a.size() + b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Poincare polynomial of the a-th symmetric product of a surface with Betti
// numbers (1, 0, b2, 0, 1): complete homogeneous polynomial of degree a in the
// b2 + 2 "cells" 1, z^2 (b2 times), z^4.
inline Poly symmetric_product(int b2, int a) {
  std::vector<int> cells{0};
  for (int i = 0; i < b2; ++i) cells.push_back(2);
  cells.push_back(4);
  // dp[j][e]: ways to pick j cells (with repetition, nondecreasing index) of total degree e
  const std::size_t cap = 4 * a + 1;
  std::vector<Poly> dp(a + 1, Poly(cap, 0));
  dp[0][0] = 1;
  for (int c : cells) {
    for (int j = 1; j <= a; ++j) {
      for (std::size_t e = c; e < cap; ++e) dp[j][e] += dp[j - 1][e - c];
    }
  }
  return dp[a];
}

// b_k(S^[n]) from the stratification by partition type: for
// alpha = (1^{a_1} 2^{a_2} ...), the stratum contributes
// prod_i z^{2 a_i (i-1)} p(S^(a_i)).
inline Poly hilbert_scheme_betti(int b2, int n) {
  Poly total(4 * n + 1, 0);
  std::vector<int> mult(n + 1, 0);
  std::function<void(int, int)> rec = [&](int part, int remaining) {
    if (remaining == 0) {
      Poly p{1};
      for (int i = 1; i <= n; ++i) {
        if (mult[i] == 0) continue;
        Poly f(2 * mult[i] * (i - 1), 0);
        const Poly s = symmetric_product(b2, mult[i]);
        f.insert(f.end(), s.begin(), s.end());
        p = poly_mul(p, f, total.size());
      }
      for (std::size_t k = 0; k < p.size(); ++k) total[k] += p[k];
      return;
    }
    if (part == 0) return;
    for (int c = remaining / part; c >= 0; --c) {
      mult[part] = c;
      rec(part - 1, remaining - c * part);
    }
    mult[part] = 0;
  };
  rec(n, n);
  return total;
}

// Coefficients of prod_m 1/((1-z^{2m-2})(1-z^{2m})^{b2}(1-z^{2m+2})) with the
// m = 1 factor 1/(1-z^0) dropped, up to z^max_k.
inline Poly stable_betti(int b2, int max_k) {
  Poly s(max_k + 1, 0);
  s[0] = 1;
  auto divide_by = [&](int e) {  // multiply by 1/(1 - z^e)
    for (int k = e; k <= max_k; ++k) s[k] += s[k - e];
  };
  for (int m = 1; 2 * m - 2 <= max_k; ++m) {
    if (m >= 2) divide_by(2 * m - 2);
    for (int j = 0; j < b2 && 2 * m <= max_k; ++j) divide_by(2 * m);
    if (2 * m + 2 <= max_k) divide_by(2 * m + 2);
  }
  return s;
}

// n^{i,j} from prod_{i>=0} 1/((1-(qt)^i q^2)(1-(qt)^i q^2 t^2)(1-(qt)^i t^2)),
// all (i, j) with i + j <= max_total.
inline std::map<std::pair<int, int>, std::int64_t> bps(int max_total) {
  const int n = max_total + 1;
  std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
  c[0][0] = 1;
  auto divide_by = [&](int a, int b) {
    for (int i = a; i < n; ++i)
      for (int j = b; i + j <= max_total; ++j) c[i][j] += c[i - a][j - b];
  };
  for (int i = 0; 2 * i + 2 <= max_total; ++i) {
    divide_by(i + 2, i);
    if (2 * i + 4 <= max_total) divide_by(i + 2, i + 2);
    divide_by(i, i + 2);
  }
  std::map<std::pair<int, int>, std::int64_t> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j <= max_total; ++j) out[{i, j}] = c[i][j];
  return out;
}

// Codimension of the non-integral locus of |dh| on P2 by listing every way to
// write a degree-d curve as sum k_i C_i with C_i of degree d_i, at least two
// components counted with multiplicity. A stratum with distinct component
// degrees d_i has dimension sum over components of d_i(d_i+3)/2 (each
// component moves in its own linear system, multiplicities do not add
// moduli). Returns dim|dh| - max stratum dimension.
inline std::int64_t p2_nonintegral_codim(int d) {
  const std::int64_t full = static_cast<std::int64_t>(d) * (d + 3) / 2;
  std::int64_t best = -1;
  // components as (degree, multiplicity) with nonincreasing (degree, mult)
  std::function<void(int, int, int, int, std::int64_t)> rec = [&](int remaining, int max_deg, int max_mult,
                                                                  int parts, std::int64_t dim) {
    if (remaining == 0) {
      if (parts >= 2) best = std::max(best, dim);
      return;
    }
    for (int deg = std::min(max_deg, remaining); deg >= 1; --deg) {
      const int mult_cap = deg == max_deg ? max_mult : remaining / deg;
      for (int k = std::min(mult_cap, remaining / deg); k >= 1; --k) {
        rec(remaining - k * deg, deg, k, parts + k, dim + static_cast<std::int64_t>(deg) * (deg + 3) / 2);
      }
    }
  };
  rec(d, d, d, 0, 0);
  return best < 0 ? full + 1 : full - best;
}

}  // namespace dpz::oracle
