// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpz/lattice.hpp"
#include "dpz/rational.hpp"

namespace dpz {

/// A stratum of non-integral curves in |beta| realising the codimension.
struct Stratum {
  enum class Kind {
    Split,        // beta = first + second, both nonzero nef
    Exceptional,  // beta = residual + sum n_i L_i, residual nef, L_i (-1)-curves
  };
  Kind kind = Kind::Split;
  DivisorClass first;     // beta_1, or the nef residual gamma
  DivisorClass second;    // beta_2; zero for Exceptional
  std::vector<std::pair<DivisorClass, std::int64_t>> exceptional;  // (L_i, n_i)
  std::int64_t dimension = 0;
};

struct CodimReport {
  DivisorClass beta;
  std::int64_t linear_system_dim = 0;
  /// Codimension of the non-integral locus. When the locus is empty this is
  /// dim|beta| + 1 and `locus_empty` is set.
  std::int64_t exact_codim = 0;
  bool locus_empty = false;
  std::optional<Stratum> witness{};
  /// Codimension contributed by each family; nullopt when the family is empty.
  std::optional<std::int64_t> split_codim{};
  std::optional<std::int64_t> exceptional_codim{};
  /// Lower bounds for the non-reduced, split and exceptional loci.
  std::optional<Rational> bound_z1{};
  std::optional<Rational> bound_z2{};
  std::optional<Rational> bound_z3{};
};

struct Clause {
  std::string name;
  bool passed = false;
  std::string evidence;
  bool proxy = false;  // numerical stand-in for a geometric condition
};

struct ConditionReport {
  enum class Kind { A, ARelaxed, P };
  Kind kind = Kind::A;
  int index = 0;  // i for A / A_relaxed
  std::vector<Clause> clauses;

  bool passed() const;
  /// "A(4)", "A_relaxed(4)" or "P".
  std::string name() const;
  /// First failing clause, if any.
  const Clause* first_failure() const;
};

struct VeryAmpleResult {
  bool very_ample = false;
  int k = 0;
  /// Class with the smallest pairing against beta among the tested curves.
  std::optional<DivisorClass> binding_class;
  std::int64_t binding_degree = 0;
  bool nef = false;
};

namespace positivity {

/// Exact codimension of the non-integral locus of |beta| under the stratum
/// model: type (a) strata beta_1 + beta_2 with both parts nonzero nef have
/// dimension dim|beta_1| + dim|beta_2|; type (b) strata gamma + sum n_i L_i
/// with gamma nef have dimension dim|gamma|. Non-reduced irreducible strata are
/// dominated by the split gamma + (n-1) gamma and are not enumerated.
/// Throws NotCertifiedError unless beta is nef with beta^2 > 0.
CodimReport codim_nonintegral(const DelPezzoSurface& s, const DivisorClass& beta);

/// Numerical k-very-ampleness criterion: beta nef and beta.C >= k for every
/// effective cone generator and every conic class.
VeryAmpleResult is_k_very_ample(const DelPezzoSurface& s, const DivisorClass& beta, int k);

ConditionReport check_Ai(const DelPezzoSurface& s, const DivisorClass& beta, int i);
ConditionReport check_Ai_relaxed(const DelPezzoSurface& s, const DivisorClass& beta, int i);

/// Standard basis of smooth connected effective curves used by check_P and the
/// testing-curve matrix: {h}, {h1, h2} or {h, e1, ..., e_delta}.
std::vector<DivisorClass> standard_effective_basis(const DelPezzoSurface& s);

ConditionReport check_P(const DelPezzoSurface& s, const DivisorClass& beta);

/// Least n >= 1 with check_Ai(n beta0, i) passing. beta0 must be ample.
std::int64_t min_n_for_Ai(const DelPezzoSurface& s, const DivisorClass& beta0, int i);

/// Result of evaluating sections on sampled zero-dimensional subschemes.
struct SampledVeryAmpleness {
  bool all_surjective = true;
  int samples = 0;
  std::string first_failure;  // description of the first non-surjective sample
};

/// Slow verification mode for is_k_very_ample: builds H^0(O(beta)) as plane
/// polynomials (with base-point multiplicities on S_delta) and checks that
/// the restriction to each sampled length-(k+1) subscheme is surjective.
/// Samples are collinear points, curvilinear schemes along a line and general
/// points; on P1xP1 points on a ruling. A failure disproves k-very ampleness;
/// passing all samples is evidence only.
SampledVeryAmpleness sample_very_ampleness(const DelPezzoSurface& s, const DivisorClass& beta, int k);

}  // namespace positivity
}  // namespace dpz
