// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/hilbert.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>

#include "dpz/errors.hpp"
#include "dpz/series_cache.hpp"

namespace dpz {

std::string BettiTable::to_csv() const {
  std::ostringstream out;
  out << "k,value\n";
  for (const auto& [k, v] : entries) out << k << ',' << v << '\n';
  return out.str();
}

namespace hilbert {
namespace {

using BVector = std::array<int, 3>;

std::mutex g_memo_mutex;
std::map<BVector, TruncatedSeries> g_memo;  // largest window seen per b-vector

TruncatedSeries expand_goettsche(const BVector& b, const std::vector<int>& orders) {
  const std::vector<std::string> vars{"z", "t"};
  const int z_order = orders[0], t_order = orders[1];
  TruncatedSeries out = TruncatedSeries::constant(vars, orders, 1);
  auto geometric = [&](int zexp, int texp) { return TruncatedSeries::geometric(vars, orders, {zexp, texp}); };
  // Factors with m >= t_order are 1 modulo t^t_order.
  for (int m = 1; m < t_order; ++m) {
    if (b[1] > 0) {
      for (int zexp : {2 * m - 1, 2 * m + 1}) {
        if (zexp >= z_order) continue;
        TruncatedSeries f = TruncatedSeries::constant(vars, orders, 1);
        f.add_term({zexp, m, 0}, 1);
        out = out * f.power(b[1]);
      }
    }
    if (b[0] > 0) {
      out = out * geometric(2 * m - 2, m).power(b[0]);
      if (2 * m + 2 < z_order) out = out * geometric(2 * m + 2, m).power(b[0]);
    }
    if (b[2] > 0 && 2 * m < z_order) out = out * geometric(2 * m, m).power(b[2]);
  }
  return out;
}

void check_orders(int z_order, int t_order) {
  if (z_order <= 0 || t_order <= 0) throw InputError("truncation orders must be positive");
}

}  // namespace

TruncatedSeries goettsche_series(int b0, int b1, int b2, int z_order, int t_order) {
  check_orders(z_order, t_order);
  if (b0 < 0 || b1 < 0 || b2 < 0) throw InputError("Betti numbers must be nonnegative");
  const BVector b{b0, b1, b2};
  const std::vector<int> orders{z_order, t_order};
  {
    std::lock_guard lock(g_memo_mutex);
    auto it = g_memo.find(b);
    if (it != g_memo.end() && it->second.orders()[0] >= z_order && it->second.orders()[1] >= t_order) {
      return it->second.truncated(orders);
    }
  }
  series_cache::Key key{"goettsche", {b0, b1, b2}, orders, std::nullopt};
  TruncatedSeries result =
      series_cache::fetch(key, [&](const std::vector<int>& o, std::optional<int>) { return expand_goettsche(b, o); });
  std::lock_guard lock(g_memo_mutex);
  auto it = g_memo.find(b);
  if (it == g_memo.end()) {
    g_memo.emplace(b, result);
  } else if (it->second.orders()[0] <= z_order && it->second.orders()[1] <= t_order) {
    it->second = result;
  }
  return result;
}

void clear_memo() {
  std::lock_guard lock(g_memo_mutex);
  g_memo.clear();
}

std::int64_t hilb_betti(const DelPezzoSurface& s, int m, int k) {
  if (m < 0) throw InputError("m must be nonnegative");
  if (k < 0 || k > 4 * m) throw InputError("need 0 <= k <= 4m for b_k(S^[m])");
  const auto b = s.betti();
  return to_int64(goettsche_series(b[0], b[1], b[2], k + 1, m + 1).coefficient({k, m}));
}

BettiTable hilb_betti_table(const DelPezzoSurface& s, int m) {
  if (m < 0) throw InputError("m must be nonnegative");
  const auto b = s.betti();
  const TruncatedSeries g = goettsche_series(b[0], b[1], b[2], 4 * m + 1, m + 1);
  BettiTable table{.kind = BettiTable::Kind::Hilbert, .surface = s.token(), .m = m};
  for (int k = 0; k <= 4 * m; ++k) table.entries[k] = to_int64(g.coefficient({k, m}));
  return table;
}

TruncatedSeries stable_series(const DelPezzoSurface& s, int z_order) {
  if (z_order <= 0) throw InputError("truncation order must be positive");
  const int b2 = s.betti()[2];
  const std::vector<std::string> vars{"z"};
  const std::vector<int> orders{z_order};
  auto geometric = [&](int e) { return TruncatedSeries::geometric(vars, orders, {e}); };
  // m = 1 contributes (1-z^2)^{-b2} (1-z^4)^{-1}; its z^0 factor cancels
  // against the normalisation by t^n.
  TruncatedSeries out = geometric(2).power(b2) * geometric(4);
  // For m >= 2 the lowest exponent is 2m - 2, so m <= z_order/2 + 1 suffices.
  for (int m = 2; 2 * m - 2 < z_order; ++m) {
    out = out * geometric(2 * m - 2);
    if (2 * m < z_order) out = out * geometric(2 * m).power(b2);
    if (2 * m + 2 < z_order) out = out * geometric(2 * m + 2);
  }
  return out;
}

std::int64_t stable_betti(const DelPezzoSurface& s, int k) {
  if (k < 0) throw InputError("k must be nonnegative");
  return to_int64(stable_series(s, k + 1).coefficient({k}));
}

BettiTable stable_betti_table(const DelPezzoSurface& s, int max_k) {
  if (max_k < 0) throw InputError("max k must be nonnegative");
  const TruncatedSeries z = stable_series(s, max_k + 1);
  BettiTable table{.kind = BettiTable::Kind::Stable, .surface = s.token()};
  for (int k = 0; k <= max_k; ++k) table.entries[k] = to_int64(z.coefficient({k}));
  return table;
}

ModuliBetti moduli_ih_betti(const DelPezzoSurface& s, const DivisorClass& beta, std::int64_t chi, int k) {
  (void)chi;  // the stable value does not depend on chi
  if (k < 0) throw InputError("k must be nonnegative");
  if (!lattice::is_effective_cone(s, beta)) {
    throw InputError(pretty(s, beta) + " is not in the effective cone of " + s.token());
  }
  ModuliBetti out{.value = stable_betti(s, k),
                  .strict = positivity::check_Ai(s, beta, k),
                  .relaxed = positivity::check_Ai_relaxed(s, beta, k)};
  if (out.strict.passed()) {
    out.certified = true;
    out.certified_by = out.strict.name();
  } else if (out.relaxed.passed()) {
    out.certified = true;
    out.certified_by = out.relaxed.name();
  }
  return out;
}

BettiTable moduli_betti_table(const DelPezzoSurface& s, const DivisorClass& beta, std::int64_t chi, int max_k) {
  if (max_k < 0) throw InputError("max k must be nonnegative");
  if (!lattice::is_effective_cone(s, beta)) {
    throw InputError(pretty(s, beta) + " is not in the effective cone of " + s.token());
  }
  BettiTable table = stable_betti_table(s, max_k);
  table.kind = BettiTable::Kind::Moduli;
  table.beta = beta.to_string();
  table.chi = chi;
  return table;
}

std::int64_t moduli_dimension(const DelPezzoSurface& s, const DivisorClass& beta) {
  const std::int64_t sq = lattice::self_intersection(s, beta);
  if (!lattice::is_nef(s, beta) || sq <= 0) {
    throw NotCertifiedError("moduli dimension needs a nef class with positive square, got " + pretty(s, beta));
  }
  return sq + 1;
}

std::int64_t jacobian_degree(const DelPezzoSurface& s, const DivisorClass& beta, std::int64_t chi) {
  return chi + lattice::arithmetic_genus(s, beta) - 1;
}

GapReport general_type_gap(std::int64_t chi_O, std::int64_t q, std::int64_t K2, std::int64_t n) {
  if (q < 0) throw InputError("q must be nonnegative");
  if (K2 <= 0) throw InputError("K^2 must be positive");
  if (n < 2) throw InputError("n must be at least 2");
  GapReport r{.chi_O = chi_O, .q = q, .K2 = K2, .n = n};
  r.dim_canonical_system = chi_O + q - 2;
  r.beta_squared = n * n * K2;
  r.fiber_lower_bound = r.beta_squared + 1;
  r.smooth_locus_dim = r.beta_squared + chi_O;
  r.singular_locus_lower_bound = r.dim_canonical_system + r.fiber_lower_bound;
  r.gap = r.singular_locus_lower_bound - r.smooth_locus_dim;
  r.reducibility_certified = r.gap >= 0;
  if (r.gap != q - 1) throw InvariantError("dimension gap disagrees with q - 1");
  return r;
}

}  // namespace hilbert
}  // namespace dpz
