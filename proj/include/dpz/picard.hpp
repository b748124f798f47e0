// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dpz/lattice.hpp"
#include "dpz/polynomial.hpp"
#include "dpz/positivity.hpp"

namespace dpz {

/// Intersection matrix of the testing curves against the determinant line
/// bundles lambda(O_x), lambda(L_1), ..., lambda(L_rho).
///
/// Rows: the moving family (deg tau, u_1, ..., u_rho); the family of
/// sheaves on a fixed smooth C_0 in |beta|; for j >= 2 the family on a fixed
/// nodal L_j + (beta - L_j). Entries of the moving row other than deg tau are
/// unknown and kept as indeterminates u_k.
struct TestMatrixReport {
  std::vector<DivisorClass> basis;
  /// True when the basis was reordered so that d_1 != 0.
  bool reordered = false;
  std::vector<Rational> d_coeffs;
  std::int64_t arithmetic_genus = 0;
  std::int64_t gram_determinant = 0;
  /// Fixed singular rows use -L_j.L_k + (g_j + 1) beta.L_k.
  PolynomialMatrix matrix;
  Polynomial det_lhs;
  /// d_1 * degtau * p_a(beta) * det(L_k . L_l)
  Polynomial det_rhs;
  /// det_lhs == sign * det_rhs; (-1)^(rho - 1) for this row convention.
  int sign = 1;
  bool identity_holds = false;
  /// Same rows written as L_j.L_k + n_j beta.L_k with n_j indeterminate; the
  /// identity then holds with sign +1 identically in the n_j.
  PolynomialMatrix table_matrix;
  Polynomial table_det;
  bool table_identity_holds = false;
  ConditionReport condition_p;
  bool certified = false;
};

struct PicardBound {
  std::int64_t bound = 0;
  bool certified = false;
  ConditionReport condition_p;
};

namespace picard {

/// Row of the moving family: deg tau, then the unknown entries u_1..u_rho.
std::vector<Polynomial> lambda_moving(const DelPezzoSurface& s, const DivisorClass& beta);

/// (lambda(O_x), lambda(L)) on the family over a fixed smooth member of |beta|:
/// (0, p_a(beta) beta.L). Requires beta nef with beta^2 > 0.
std::pair<std::int64_t, std::int64_t> lambda_fixed_smooth(const DelPezzoSurface& s, const DivisorClass& beta,
                                                         const DivisorClass& l);

/// Same for the fixed curve C_1 + C_2, C_2 = beta - C_1, meeting in
/// C_1.C_2 >= 2 nodes: (0, -C_1.L + (g_1 + 1) beta.L). Throws InputError
/// naming the first violated precondition.
std::pair<std::int64_t, std::int64_t> lambda_fixed_singular(const DelPezzoSurface& s, const DivisorClass& beta,
                                                           const DivisorClass& c1, const DivisorClass& l);

/// Builds the matrix for `basis` (the standard basis when empty) and checks
/// the determinant identity symbolically.
TestMatrixReport build_test_matrix(const DelPezzoSurface& s, const DivisorClass& beta,
                                   std::vector<DivisorClass> basis = {});

/// rho(M_beta) >= rho(S) + 1, certified when (P) holds and the test matrix
/// identity certifies.
PicardBound picard_lower_bound(const DelPezzoSurface& s, const DivisorClass& beta);

}  // namespace picard
}  // namespace dpz
