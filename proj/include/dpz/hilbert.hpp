// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "dpz/lattice.hpp"
#include "dpz/positivity.hpp"
#include "dpz/series.hpp"

namespace dpz {

/// Betti numbers b_k indexed by k, together with what they are Betti numbers of.
struct BettiTable {
  enum class Kind {
    Hilbert,  // S^[m]
    Stable,   // lim_m b_k(S^[m])
    Moduli,   // IH^*(M_{beta, chi})
  };
  Kind kind = Kind::Stable;
  std::string surface{};
  int m = 0;              // Hilbert only
  std::string beta{};     // Moduli only, coordinates as in DivisorClass::to_string
  std::int64_t chi = 0;   // Moduli only
  std::map<int, std::int64_t> entries{};

  /// Rows "k,value" with a header line.
  std::string to_csv() const;
};

struct ModuliBetti {
  std::int64_t value = 0;
  bool certified = false;
  /// "A(k)" or "A_relaxed(k)" when certified, empty otherwise.
  std::string certified_by{};
  ConditionReport strict{};
  ConditionReport relaxed{};
};

struct GapReport {
  std::int64_t chi_O = 0;
  std::int64_t q = 0;
  std::int64_t K2 = 0;
  std::int64_t n = 0;
  std::int64_t dim_canonical_system = 0;  // dim|K_S| = chi_O + q - 2
  std::int64_t beta_squared = 0;          // (nK)^2
  std::int64_t fiber_lower_bound = 0;     // n^2 K^2 + 1
  std::int64_t smooth_locus_dim = 0;      // n^2 K^2 + chi_O
  std::int64_t singular_locus_lower_bound = 0;
  std::int64_t gap = 0;                   // q - 1
  bool reducibility_certified = false;
};

namespace hilbert {

/// sum_n p(S^[n], z) t^n with z^(z_order), t^(t_order) truncation. Results are
/// memoised process-wide; a cached expansion with a larger window is reused.
TruncatedSeries goettsche_series(int b0, int b1, int b2, int z_order, int t_order);

/// b_k(S^[m]). Requires 0 <= k <= 4m.
std::int64_t hilb_betti(const DelPezzoSurface& s, int m, int k);
BettiTable hilb_betti_table(const DelPezzoSurface& s, int m);

/// Single-variable stable series in z, exact below z^(z_order).
TruncatedSeries stable_series(const DelPezzoSurface& s, int z_order);
std::int64_t stable_betti(const DelPezzoSurface& s, int k);
BettiTable stable_betti_table(const DelPezzoSurface& s, int max_k);

/// Stable value of dim IH^k(M_{beta, chi}), certified when (A_k) or its
/// relaxed form holds. Throws InputError if beta is not in the effective cone.
ModuliBetti moduli_ih_betti(const DelPezzoSurface& s, const DivisorClass& beta, std::int64_t chi, int k);
BettiTable moduli_betti_table(const DelPezzoSurface& s, const DivisorClass& beta, std::int64_t chi, int max_k);

/// beta^2 + 1. Throws NotCertifiedError unless beta is nef with beta^2 > 0.
std::int64_t moduli_dimension(const DelPezzoSurface& s, const DivisorClass& beta);

/// Degree of the compactified Jacobian fibre, chi + beta(beta + K)/2.
std::int64_t jacobian_degree(const DelPezzoSurface& s, const DivisorClass& beta, std::int64_t chi);

/// Dimension count showing that M_{nK_S, chi} is reducible on a surface of
/// general type with a smooth connected canonical curve and q >= 1.
GapReport general_type_gap(std::int64_t chi_O, std::int64_t q, std::int64_t K2, std::int64_t n);

/// Drops every memoised Göttsche expansion.
void clear_memo();

}  // namespace hilbert
}  // namespace dpz
