// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

// Evaluation-map sampling for k-very ampleness. Sections of O(beta) are
// written as polynomials in affine coordinates (x, y):
//   P2      total degree <= d
//   P1xP1   bidegree <= (a, b) where beta = (a, b) pairs a with the y-fibres
//   S_delta total degree <= a with multiplicity >= m_i at fixed points p_i
// A length-(k+1) subscheme Z is a list of k+1 linear functionals on the
// coefficient vector; r_Z is surjective iff rank [C; Z] - rank C = k+1, C
// being the base-point conditions.

#include <sstream>

#include "dpz/detail/linalg.hpp"
#include "dpz/errors.hpp"
#include "dpz/positivity.hpp"

namespace dpz::positivity {
namespace {

struct Monomial {
  int x, y;
};

struct Point {
  Rational x, y;
};

using Functional = std::vector<Rational>;

// Fixed base points for S_delta; no three collinear, no six on a conic.
const Point kBasePoints[8] = {
    {0, 0}, {1, 0}, {0, 1}, {2, 3}, {3, -1}, {-1, 2}, {5, 7}, {-3, -4},
};

Rational power(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Rational falling(int n, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return falling(n, k) / falling(k, k);
}

Functional evaluate_at(const std::vector<Monomial>& basis, const Point& p) {
  Functional f;
  for (const auto& m : basis) f.push_back(power(p.x, m.x) * power(p.y, m.y));
  return f;
}

// d^u/dx^u d^v/dy^v at p
Functional derivative_at(const std::vector<Monomial>& basis, const Point& p, int u, int v) {
  Functional f;
  for (const auto& m : basis) {
    if (m.x < u || m.y < v) {
      f.push_back(0);
      continue;
    }
    f.push_back(falling(m.x, u) * falling(m.y, v) * power(p.x, m.x - u) * power(p.y, m.y - v));
  }
  return f;
}

// Coefficient of t^j in f(p + t (dx, dy)).
Functional jet_along(const std::vector<Monomial>& basis, const Point& p, const Point& dir, int j) {
  Functional f;
  for (const auto& m : basis) {
    // (px + t dx)^a (py + t dy)^b, coefficient of t^j
    Rational c = 0;
    for (int i = 0; i <= j; ++i) {
      const int rest = j - i;
      if (i > m.x || rest > m.y) continue;
      c += binomial(m.x, i) * power(dir.x, i) * power(p.x, m.x - i) * binomial(m.y, rest) * power(dir.y, rest) *
           power(p.y, m.y - rest);
    }
    f.push_back(c);
  }
  return f;
}

struct Sample {
  std::string description;
  std::vector<Functional> rows;
};

// Points of the exceptional curve over p are tangent directions (1, t) at p.
// A section with multiplicity m at p restricts to its degree-m leading form.
Sample on_exceptional_curve(const std::vector<Monomial>& basis, const Point& p, int mult, int count,
                            const std::string& what) {
  Sample s{std::to_string(count) + " points on " + what, {}};
  for (int j = 0; j < count; ++j) {
    const Rational t = j;
    Functional row(basis.size(), 0);
    for (int v = 0; v <= mult; ++v) {
      const int u = mult - v;
      const Functional d = derivative_at(basis, p, u, v);
      const Rational scale = power(t, v) / (falling(u, u) * falling(v, v));
      for (std::size_t c = 0; c < row.size(); ++c) row[c] += scale * d[c];
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

bool surjective(const std::vector<Functional>& conditions, int conditions_rank, const Sample& z) {
  detail::RationalMatrix m = conditions;
  m.insert(m.end(), z.rows.begin(), z.rows.end());
  return detail::rank(std::move(m)) - conditions_rank == static_cast<int>(z.rows.size());
}

Sample points_on_line(const std::vector<Monomial>& basis, const Point& origin, const Point& dir, int count,
                      const std::string& what) {
  Sample s{std::to_string(count) + " points on " + what, {}};
  for (int i = 1; i <= count; ++i) {
    s.rows.push_back(evaluate_at(basis, {origin.x + i * dir.x, origin.y + i * dir.y}));
  }
  return s;
}

Sample curvilinear(const std::vector<Monomial>& basis, const Point& at, const Point& dir, int length,
                   const std::string& what) {
  Sample s{"curvilinear length " + std::to_string(length) + " along " + what, {}};
  for (int j = 0; j < length; ++j) s.rows.push_back(jet_along(basis, at, dir, j));
  return s;
}

Sample general_points(const std::vector<Monomial>& basis, int count) {
  Sample s{std::to_string(count) + " general points", {}};
  for (int i = 1; i <= count; ++i) {
    Rational x(make_rational(7 * i + 2, 13)), y(make_rational(i * i * 5 - 3, 11));
    s.rows.push_back(evaluate_at(basis, {x, y}));
  }
  return s;
}

}  // namespace

SampledVeryAmpleness sample_very_ampleness(const DelPezzoSurface& s, const DivisorClass& beta, int k) {
  if (k < 0) throw InputError("k must be nonnegative");
  std::vector<Monomial> basis;
  std::vector<Functional> conditions;
  std::vector<Sample> samples;
  const int length = k + 1;
  const Point general_origin{make_rational(1, 3), make_rational(2, 7)};
  const Point general_dir{1, make_rational(5, 3)};

  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: {
      const auto d = beta[0];
      for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) basis.push_back({a, b});
      samples.push_back(points_on_line(basis, general_origin, general_dir, length, "a line"));
      samples.push_back(curvilinear(basis, general_origin, general_dir, length, "a line"));
      samples.push_back(general_points(basis, length));
      break;
    }
    case SurfaceKind::QuadricProduct: {
      // x has degree beta.h2 = beta[0], y has degree beta.h1 = beta[1]
      for (int a = 0; a <= beta[0]; ++a)
        for (int b = 0; b <= beta[1]; ++b) basis.push_back({a, b});
      samples.push_back(points_on_line(basis, general_origin, {0, 1}, length, "a ruling x = const"));
      samples.push_back(points_on_line(basis, general_origin, {1, 0}, length, "a ruling y = const"));
      samples.push_back(curvilinear(basis, general_origin, {0, 1}, length, "a ruling x = const"));
      samples.push_back(curvilinear(basis, general_origin, {1, 0}, length, "a ruling y = const"));
      samples.push_back(general_points(basis, length));
      break;
    }
    case SurfaceKind::BlowupPlane: {
      const int delta = s.blown_up_points();
      const auto a = beta[0];
      for (int i = 1; i <= delta; ++i) {
        if (beta[i] > 0) throw InputError("sampling needs nonnegative multiplicities at the blown-up points");
      }
      for (int x = 0; x <= a; ++x)
        for (int y = 0; x + y <= a; ++y) basis.push_back({x, y});
      for (int i = 0; i < delta; ++i) {
        const auto mult = -beta[i + 1];
        for (int u = 0; u < mult; ++u)
          for (int v = 0; u + v < mult; ++v) conditions.push_back(derivative_at(basis, kBasePoints[i], u, v));
      }
      samples.push_back(points_on_line(basis, general_origin, general_dir, length, "a general line (class h)"));
      samples.push_back(curvilinear(basis, general_origin, general_dir, length, "a general line (class h)"));
      samples.push_back(general_points(basis, length));
      for (int i = 0; i < delta; ++i) {
        const std::string e = "the exceptional curve e" + std::to_string(i + 1);
        samples.push_back(on_exceptional_curve(basis, kBasePoints[i], static_cast<int>(-beta[i + 1]), length, e));
      }
      // Line through p1 with slope 2/5 (class h - e1), sampled away from p1.
      const Point p1 = kBasePoints[0];
      samples.push_back(points_on_line(basis, p1, {make_rational(1, 2), make_rational(1, 5)}, length,
                                       "a line through p1 (class h-e1)"));
      if (delta >= 2) {
        const Point p2 = kBasePoints[1];
        const Point dir{(p2.x - p1.x) / 3, (p2.y - p1.y) / 3};
        Sample line = points_on_line(basis, {p1.x + dir.x / 7, p1.y + dir.y / 7}, dir, length,
                                     "the line through p1, p2 (class h-e1-e2)");
        samples.push_back(std::move(line));
      }
      break;
    }
  }

  SampledVeryAmpleness out;
  const int base_rank = conditions.empty() ? 0 : detail::rank(conditions);
  for (const auto& z : samples) {
    ++out.samples;
    if (!surjective(conditions, base_rank, z)) {
      out.all_surjective = false;
      if (out.first_failure.empty()) out.first_failure = z.description;
    }
  }
  return out;
}

}  // namespace dpz::positivity
