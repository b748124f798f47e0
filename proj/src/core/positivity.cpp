// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/positivity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dpz/errors.hpp"

namespace dpz {

bool ConditionReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.passed; });
}

std::string ConditionReport::name() const {
  switch (kind) {
    case Kind::A: return "A(" + std::to_string(index) + ")";
    case Kind::ARelaxed: return "A_relaxed(" + std::to_string(index) + ")";
    case Kind::P: return "P";
  }
  return {};
}

const Clause* ConditionReport::first_failure() const {
  for (const auto& c : clauses)
    if (!c.passed) return &c;
  return nullptr;
}

namespace positivity {
namespace {

using lattice::anticanonical_degree;
using lattice::intersect;

// Largest nef gamma with r - gamma a nonnegative combination of (-1)-curves.
// If r.E < 0 for a (-1)-curve E, every such gamma has E in r - gamma (distinct
// irreducible curves meet nonnegatively and gamma is nef), so E is removed and
// the argument repeats. Any admissible gamma is therefore dominated by the
// result, which has the largest linear system.
struct ForcedResidual {
  DivisorClass gamma;
  std::map<int, std::int64_t> removed;  // index into minus_one_curves -> multiplicity
};

std::optional<ForcedResidual> forced_residual(const DelPezzoSurface& s, DivisorClass r) {
  const auto& curves = lattice::minus_one_curves(s);
  ForcedResidual out{DivisorClass(s), {}};
  for (;;) {
    if (anticanonical_degree(s, r) < 0) return std::nullopt;
    bool moved = false;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const std::int64_t meet = intersect(s, r, curves[i]);
      if (meet < 0) {
        // E occurs with multiplicity at least -r.E
        const std::int64_t t = -meet;
        r = r - t * curves[i];
        out.removed[static_cast<int>(i)] += t;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  if (!lattice::is_nef(s, r)) return std::nullopt;
  out.gamma = r;
  return out;
}

std::string describe(const DelPezzoSurface& s, const DivisorClass& d) { return pretty(s, d); }

Clause very_ample_clause(const DelPezzoSurface& s, const DivisorClass& beta, int k, int i) {
  const VeryAmpleResult va = is_k_very_ample(s, beta, k);
  const std::int64_t dim2 = va.nef ? 2 * lattice::dim_linear_system(s, beta) : 0;
  const bool dim_ok = va.nef && dim2 >= 3 * i + 2;
  std::ostringstream ev;
  ev << k << "-very ample criterion " << (va.very_ample ? "holds" : "fails");
  if (!va.nef) ev << " (not nef)";
  else if (va.binding_class) ev << " (min degree " << va.binding_degree << " on " << describe(s, *va.binding_class) << ")";
  ev << "; 2dim|beta| = ";
  if (va.nef) ev << dim2;
  else ev << "n/a";
  ev << " vs 3i+2 = " << 3 * i + 2;
  return Clause{"very_ample_and_dimension", va.very_ample && dim_ok, ev.str(), true};
}

Clause smooth_connected_clause(const DelPezzoSurface& s, const DivisorClass& beta) {
  const bool nef = lattice::is_nef(s, beta);
  const std::int64_t sq = lattice::self_intersection(s, beta);
  std::ostringstream ev;
  ev << "nef=" << (nef ? "yes" : "no") << ", beta^2=" << sq;
  return Clause{"general_member_smooth_connected", nef && sq > 0, ev.str(), true};
}

Clause codim_clause(const DelPezzoSurface& s, const DivisorClass& beta, int i) {
  if (!lattice::is_nef(s, beta) || lattice::self_intersection(s, beta) <= 0) {
    return Clause{"nonintegral_codimension", false, "codimension needs a nef class with positive square", false};
  }
  const CodimReport r = codim_nonintegral(s, beta);
  std::ostringstream ev;
  ev << "2*codim = " << 2 * r.exact_codim << (r.locus_empty ? " (empty locus)" : "") << " vs i+1 = " << i + 1;
  return Clause{"nonintegral_codimension", 2 * r.exact_codim > i + 1, ev.str(), false};
}

ConditionReport check_A_impl(const DelPezzoSurface& s, const DivisorClass& beta, int i, bool relaxed) {
  if (i < 0) throw InputError("condition index must be nonnegative");
  ConditionReport report;
  report.kind = relaxed ? ConditionReport::Kind::ARelaxed : ConditionReport::Kind::A;
  report.index = i;
  const int k = relaxed ? std::min(i, 2) : i;
  report.clauses.push_back(very_ample_clause(s, beta, k, i));
  report.clauses.push_back(smooth_connected_clause(s, beta));
  report.clauses.push_back(codim_clause(s, beta, i));
  return report;
}

}  // namespace

CodimReport codim_nonintegral(const DelPezzoSurface& s, const DivisorClass& beta) {
  if (!lattice::is_nef(s, beta) || lattice::self_intersection(s, beta) <= 0) {
    throw NotCertifiedError("codimension engine needs a nef class with positive square, got " + pretty(s, beta));
  }
  const std::int64_t degree = anticanonical_degree(s, beta);
  const std::int64_t dim_beta = lattice::dim_linear_system(s, beta);

  std::vector<DivisorClass> nefs;
  lattice::for_each_nef_class_below(s, beta, degree / 2, [&](const DivisorClass& d) { nefs.push_back(d); });

  CodimReport report{.beta = beta};
  report.linear_system_dim = dim_beta;
  std::optional<Stratum> best;

  // (a) two nonzero nef parts; codim = beta_1 . beta_2
  std::optional<std::int64_t> min_product;
  for (const auto& b1 : nefs) {
    const std::int64_t d1 = anticanonical_degree(s, b1);
    if (d1 == 0 || 2 * d1 > degree) continue;
    DivisorClass b2 = beta - b1;
    if (b2.is_zero() || !lattice::is_nef(s, b2)) continue;
    const std::int64_t product = intersect(s, b1, b2);
    const std::int64_t dim = lattice::dim_linear_system(s, b1) + lattice::dim_linear_system(s, b2);
    if (dim_beta - dim != product) {
      throw InvariantError("linear system additivity fails for " + pretty(s, b1) + " + " + pretty(s, b2));
    }
    if (!min_product || product < *min_product) {
      min_product = product;
      best = Stratum{.kind = Stratum::Kind::Split, .first = b1, .second = b2, .exceptional = {}, .dimension = dim};
    }
  }
  if (min_product) {
    report.split_codim = *min_product;
    report.bound_z2 = make_rational(*min_product);
  }

  // (b) nef residual plus (-1)-curves; the first curve is free, the rest forced
  const auto& curves = lattice::minus_one_curves(s);
  if (!curves.empty()) {
    std::optional<std::int64_t> best_dim;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      auto res = forced_residual(s, beta - curves[i]);
      if (!res) continue;
      res->removed[static_cast<int>(i)] += 1;
      const std::int64_t dim = lattice::dim_linear_system(s, res->gamma);
      if (best_dim && dim <= *best_dim) continue;
      best_dim = dim;
      if (!best || dim > best->dimension) {
        std::vector<std::pair<DivisorClass, std::int64_t>> parts;
        for (auto [idx, n] : res->removed) parts.emplace_back(curves[idx], n);
        best = Stratum{.kind = Stratum::Kind::Exceptional,
                       .first = res->gamma,
                       .second = DivisorClass(s),
                       .exceptional = std::move(parts),
                       .dimension = dim};
      }
    }
    if (best_dim) report.exceptional_codim = dim_beta - *best_dim;
    std::optional<std::int64_t> min_pair;
    for (const auto& l : curves) {
      std::int64_t v = intersect(s, beta - s.canonical(), l);
      if (!min_pair || v < *min_pair) min_pair = v;
    }
    report.bound_z3 = make_rational(*min_pair, 2);
  }

  for (std::int64_t n = 2;; ++n) {
    bool divisible = true, any_nonzero = false;
    for (auto c : beta.coords()) {
      if (c % n != 0) divisible = false;
      if (c != 0 && std::abs(c) >= n) any_nonzero = true;
    }
    if (!any_nonzero) break;
    if (!divisible) continue;
    std::vector<std::int64_t> q;
    for (auto c : beta.coords()) q.push_back(c / n);
    if (lattice::is_nef(s, DivisorClass(s, q))) {
      report.bound_z1 = make_rational(intersect(s, beta, beta - s.canonical()), 4);
      break;
    }
  }

  if (best) {
    report.exact_codim = dim_beta - best->dimension;
    report.witness = std::move(best);
  } else {
    report.locus_empty = true;
    report.exact_codim = dim_beta + 1;
  }
  return report;
}

VeryAmpleResult is_k_very_ample(const DelPezzoSurface& s, const DivisorClass& beta, int k) {
  if (k < 0) throw InputError("k must be nonnegative");
  VeryAmpleResult out;
  out.k = k;
  out.nef = lattice::is_nef(s, beta);
  auto consider = [&](const DivisorClass& c) {
    const std::int64_t d = intersect(s, beta, c);
    if (!out.binding_class || d < out.binding_degree) {
      out.binding_class = c;
      out.binding_degree = d;
    }
  };
  for (const auto& g : lattice::effective_cone_generators(s)) consider(g);
  for (const auto& f : lattice::ruling_classes(s)) consider(f);
  out.very_ample = out.nef && out.binding_degree >= k;
  return out;
}

ConditionReport check_Ai(const DelPezzoSurface& s, const DivisorClass& beta, int i) {
  return check_A_impl(s, beta, i, false);
}

ConditionReport check_Ai_relaxed(const DelPezzoSurface& s, const DivisorClass& beta, int i) {
  return check_A_impl(s, beta, i, true);
}

std::vector<DivisorClass> standard_effective_basis(const DelPezzoSurface& s) {
  std::vector<DivisorClass> out;
  for (int i = 0; i < s.picard_rank(); ++i) out.push_back(basis_class(s, i));
  return out;
}

ConditionReport check_P(const DelPezzoSurface& s, const DivisorClass& beta) {
  ConditionReport report;
  report.kind = ConditionReport::Kind::P;

  const ConditionReport a0 = check_Ai(s, beta, 0);
  const Clause* failure = a0.first_failure();
  report.clauses.push_back(
      Clause{"A(0)", a0.passed(), failure ? "fails " + failure->name + ": " + failure->evidence : "all clauses hold", false});

  const std::int64_t genus = lattice::arithmetic_genus(s, beta);
  report.clauses.push_back(Clause{"arithmetic_genus_positive", genus > 0, "p_a(beta) = " + std::to_string(genus), false});

  for (const auto& l : standard_effective_basis(s)) {
    const DivisorClass residual = beta - l;
    const bool nef = lattice::is_nef(s, residual);
    const std::int64_t sq = lattice::self_intersection(s, residual);
    const std::int64_t meet = intersect(s, l, residual);
    std::ostringstream ev;
    ev << "beta-L = " << pretty(s, residual) << ": nef=" << (nef ? "yes" : "no") << ", square=" << sq
       << ", N = L.(beta-L) = " << meet;
    report.clauses.push_back(Clause{"residual_" + pretty(s, l), nef && sq > 0 && meet >= 2, ev.str(), true});
  }
  return report;
}

std::int64_t min_n_for_Ai(const DelPezzoSurface& s, const DivisorClass& beta0, int i) {
  if (i < 0) throw InputError("condition index must be nonnegative");
  if (!lattice::is_ample(s, beta0)) throw InputError(pretty(s, beta0) + " is not ample");
  constexpr std::int64_t kLimit = 100000;
  for (std::int64_t n = 1; n <= kLimit; ++n) {
    if (check_Ai(s, n * beta0, i).passed()) return n;
  }
  throw InvariantError("no multiple up to " + std::to_string(kLimit) + " satisfies A(" + std::to_string(i) + ")");
}

}  // namespace positivity
}  // namespace dpz
