// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/picard.hpp"

#include <algorithm>

#include "dpz/detail/linalg.hpp"
#include "dpz/errors.hpp"

namespace dpz::picard {
namespace {

using lattice::anticanonical_degree;
using lattice::intersect;

// Classes whose general member is smooth and connected.
bool smooth_connected_capable(const DelPezzoSurface& s, const DivisorClass& c) {
  if (lattice::is_nef(s, c) && lattice::self_intersection(s, c) > 0) return true;
  const auto& lines = lattice::minus_one_curves(s);
  if (std::find(lines.begin(), lines.end(), c) != lines.end()) return true;
  const auto& rulings = lattice::ruling_classes(s);
  return std::find(rulings.begin(), rulings.end(), c) != rulings.end();
}

std::string var(const std::string& base, int index) { return base + std::to_string(index); }

}  // namespace

std::vector<Polynomial> lambda_moving(const DelPezzoSurface& s, const DivisorClass& beta) {
  if (beta.surface_id() != s.id()) throw InputError("class lives on a different surface");
  std::vector<Polynomial> row{Polynomial::variable("degtau")};
  for (int k = 1; k <= s.picard_rank(); ++k) row.push_back(Polynomial::variable(var("u", k)));
  return row;
}

std::pair<std::int64_t, std::int64_t> lambda_fixed_smooth(const DelPezzoSurface& s, const DivisorClass& beta,
                                                         const DivisorClass& l) {
  if (!lattice::is_nef(s, beta) || lattice::self_intersection(s, beta) <= 0) {
    throw InputError("fixed smooth curve needs beta nef and big, got " + pretty(s, beta));
  }
  return {0, lattice::arithmetic_genus(s, beta) * intersect(s, beta, l)};
}

std::pair<std::int64_t, std::int64_t> lambda_fixed_singular(const DelPezzoSurface& s, const DivisorClass& beta,
                                                           const DivisorClass& c1, const DivisorClass& l) {
  const DivisorClass c2 = beta - c1;
  if (!smooth_connected_capable(s, c1)) {
    throw InputError("C1 = " + pretty(s, c1) + " has no smooth connected member");
  }
  if (!smooth_connected_capable(s, c2)) {
    throw InputError("C2 = beta - C1 = " + pretty(s, c2) + " has no smooth connected member");
  }
  if (intersect(s, c1, c2) < 2) {
    throw InputError("C1.C2 = " + std::to_string(intersect(s, c1, c2)) + " < 2");
  }
  if (anticanonical_degree(s, c2) < anticanonical_degree(s, c1)) {
    throw InputError("C2.(-K) < C1.(-K)");
  }
  const std::int64_t g1 = lattice::arithmetic_genus(s, c1);
  return {0, -intersect(s, c1, l) + (g1 + 1) * intersect(s, beta, l)};
}

TestMatrixReport build_test_matrix(const DelPezzoSurface& s, const DivisorClass& beta,
                                   std::vector<DivisorClass> basis) {
  if (basis.empty()) basis = positivity::standard_effective_basis(s);
  const int rho = s.picard_rank();
  if (static_cast<int>(basis.size()) != rho) {
    throw InputError("basis must have " + std::to_string(rho) + " classes");
  }
  const auto gram = lattice::gram_matrix(s, basis);
  const std::int64_t gram_det = to_int64(detail::determinant(detail::to_rational(gram)));
  if (gram_det == 0) throw InputError("basis has a singular Gram matrix");

  TestMatrixReport r;
  r.basis = basis;
  r.d_coeffs = lattice::expand_in_basis(s, beta, basis);
  if (r.d_coeffs[0] == 0) {
    auto it = std::find_if(r.d_coeffs.begin(), r.d_coeffs.end(), [](const Rational& d) { return d != 0; });
    if (it == r.d_coeffs.end()) throw InputError("beta is zero");
    const auto idx = static_cast<std::size_t>(it - r.d_coeffs.begin());
    std::swap(r.basis[0], r.basis[idx]);
    std::swap(r.d_coeffs[0], r.d_coeffs[idx]);
    r.reordered = true;
  }
  const auto& b = r.basis;
  r.arithmetic_genus = lattice::arithmetic_genus(s, beta);
  r.gram_determinant = gram_det;
  r.condition_p = positivity::check_P(s, beta);

  r.matrix.push_back(lambda_moving(s, beta));
  r.table_matrix.push_back(r.matrix.front());
  {
    std::vector<Polynomial> row{Polynomial(0)};
    for (int k = 0; k < rho; ++k) row.emplace_back(r.arithmetic_genus * intersect(s, beta, b[k]));
    r.matrix.push_back(row);
    r.table_matrix.push_back(row);
  }
  for (int j = 1; j < rho; ++j) {
    const std::int64_t g = lattice::arithmetic_genus(s, b[j]);
    const Polynomial n = Polynomial::variable(var("n", j + 1));
    std::vector<Polynomial> row{Polynomial(0)}, table_row{Polynomial(0)};
    for (int k = 0; k < rho; ++k) {
      const std::int64_t ljk = intersect(s, b[j], b[k]);
      const std::int64_t bk = intersect(s, beta, b[k]);
      row.emplace_back(-ljk + (g + 1) * bk);
      table_row.push_back(Polynomial(ljk) + n * Polynomial(bk));
    }
    r.matrix.push_back(std::move(row));
    r.table_matrix.push_back(std::move(table_row));
  }

  r.det_lhs = determinant(r.matrix);
  r.det_rhs = Polynomial(r.d_coeffs[0]) * Polynomial::variable("degtau") * Polynomial(r.arithmetic_genus) *
              Polynomial(gram_det);
  r.sign = (rho - 1) % 2 == 0 ? 1 : -1;
  r.identity_holds = r.det_lhs == Polynomial(r.sign) * r.det_rhs;
  r.table_det = determinant(r.table_matrix);
  r.table_identity_holds = r.table_det == r.det_rhs;
  r.certified = r.condition_p.passed() && r.identity_holds && r.table_identity_holds && !r.det_rhs.is_zero();
  return r;
}

PicardBound picard_lower_bound(const DelPezzoSurface& s, const DivisorClass& beta) {
  PicardBound out;
  out.bound = s.picard_rank() + 1;
  out.condition_p = positivity::check_P(s, beta);
  if (!out.condition_p.passed()) return out;
  out.certified = build_test_matrix(s, beta).certified;
  return out;
}

}  // namespace dpz::picard
