// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dpz/rational.hpp"

namespace dpz {

enum class SurfaceKind { ProjectivePlane, QuadricProduct, BlowupPlane };

class DivisorClass;

/// One of the ten deformation classes of del Pezzo surfaces together with its
/// Picard lattice in the standard basis:
///   P2       h
///   P1xP1    h1, h2
///   S_delta  h, e1, ..., e_delta
class DelPezzoSurface {
 public:
  static DelPezzoSurface projective_plane();
  static DelPezzoSurface quadric();
  static DelPezzoSurface blowup(int points);

  /// Tokens: P2, P1xP1, S1 ... S8. Throws InputError otherwise.
  static DelPezzoSurface parse(std::string_view token);

  /// All ten surfaces in the order P2, P1xP1, S1, ..., S8.
  static std::vector<DelPezzoSurface> all();

  SurfaceKind kind() const { return kind_; }
  int blown_up_points() const { return delta_; }
  int picard_rank() const { return rank_; }
  std::string token() const;

  std::int64_t gram(int i, int j) const { return gram_[i * rank_ + j]; }
  const std::vector<std::int64_t>& gram_entries() const { return gram_; }

  DivisorClass canonical() const;

  /// (b0, b1, b2) = (1, 0, rho).
  std::array<int, 3> betti() const { return {1, 0, rank_}; }

  /// Small integer distinguishing the ten surfaces; 0 = P2, 1 = P1xP1, 1 + delta = S_delta.
  int id() const { return kind_ == SurfaceKind::ProjectivePlane ? 0 : kind_ == SurfaceKind::QuadricProduct ? 1 : 1 + delta_; }

  friend bool operator==(const DelPezzoSurface& a, const DelPezzoSurface& b) { return a.id() == b.id(); }

 private:
  DelPezzoSurface(SurfaceKind kind, int delta);

  SurfaceKind kind_;
  int delta_ = 0;
  int rank_ = 1;
  std::vector<std::int64_t> gram_;
};

/// Integer coordinate vector in the standard basis of a surface's Picard lattice.
/// Classes remember which surface they live on; mixing surfaces throws InputError.
class DivisorClass {
 public:
  DivisorClass(const DelPezzoSurface& surface, std::vector<std::int64_t> coords);

  /// The zero class.
  explicit DivisorClass(const DelPezzoSurface& surface);

  int surface_id() const { return surface_id_; }
  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t operator[](int i) const { return coords_[i]; }
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(std::int64_t n, DivisorClass a);
  DivisorClass operator-() const { return -1 * *this; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.surface_id_ == b.surface_id_ && a.coords_ == b.coords_;
  }
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
    return a.surface_id_ != b.surface_id_ ? a.surface_id_ < b.surface_id_ : a.coords_ < b.coords_;
  }

  /// Comma-separated coordinates, e.g. "5,-2".
  std::string to_string() const;

 private:
  void check_compatible(const DivisorClass& other) const;

  int surface_id_;
  std::vector<std::int64_t> coords_;
};

/// Parses "5,-2" into a class on `surface`. Throws InputError on bad syntax or arity.
DivisorClass parse_divisor(const DelPezzoSurface& surface, std::string_view text);

/// Basis element `index` of the standard basis (0 = h or h1).
DivisorClass basis_class(const DelPezzoSurface& surface, int index);

/// Human-readable form such as "5h-2e1" or "2h1+3h2".
std::string pretty(const DelPezzoSurface& surface, const DivisorClass& d);

namespace lattice {

std::int64_t intersect(const DelPezzoSurface& s, const DivisorClass& a, const DivisorClass& b);
inline std::int64_t self_intersection(const DelPezzoSurface& s, const DivisorClass& a) { return intersect(s, a, a); }

DivisorClass canonical_class(const DelPezzoSurface& s);

/// D . (-K).
std::int64_t anticanonical_degree(const DelPezzoSurface& s, const DivisorClass& d);

/// beta(beta + K)/2 + 1.
std::int64_t arithmetic_genus(const DelPezzoSurface& s, const DivisorClass& beta);

/// beta(beta - K)/2 + 1 = chi(O_S(beta)).
std::int64_t chi_line_bundle(const DelPezzoSurface& s, const DivisorClass& beta);

/// chi - 1 for nef beta; throws NotCertifiedError for non-nef input since the
/// vanishing of higher cohomology is only known for nef classes.
std::int64_t dim_linear_system(const DelPezzoSurface& s, const DivisorClass& beta);

/// Every class C with C^2 = -1 and C.K = -1, sorted.
const std::vector<DivisorClass>& minus_one_curves(const DelPezzoSurface& s);

/// Nef classes F with F^2 = 0 and F.(-K) = 2 (conic bundle fibres), sorted.
const std::vector<DivisorClass>& ruling_classes(const DelPezzoSurface& s);

/// Extremal rays of the effective cone.
const std::vector<DivisorClass>& effective_cone_generators(const DelPezzoSurface& s);

bool is_nef(const DelPezzoSurface& s, const DivisorClass& d);

/// Membership in the closed rational cone spanned by effective_cone_generators.
bool is_effective_cone(const DelPezzoSurface& s, const DivisorClass& d);

/// nef, D^2 > 0 and D.G > 0 for every effective cone generator.
bool is_ample(const DelPezzoSurface& s, const DivisorClass& d);

/// Exact rational coefficients of beta in `basis`. Throws InputError when the
/// basis has the wrong size or a singular Gram matrix.
std::vector<Rational> expand_in_basis(const DelPezzoSurface& s, const DivisorClass& beta,
                                      const std::vector<DivisorClass>& basis);

/// Gram matrix (L_k . L_l) of a list of classes.
std::vector<std::vector<std::int64_t>> gram_matrix(const DelPezzoSurface& s, const std::vector<DivisorClass>& classes);

/// Calls `visit` once for every nef class D (including 0) with D.(-K) <= max_degree.
/// Exhaustive: classes with D^2 >= 0 and fixed anticanonical degree N lie in a
/// bounded region, |a - 3N/K^2| <= sqrt(delta) N/K^2 on S_delta.
void for_each_nef_class(const DelPezzoSurface& s, std::int64_t max_degree,
                        const std::function<void(const DivisorClass&)>& visit);

/// Nef classes D with D.(-K) <= max_degree for which ceiling - D is also nef.
void for_each_nef_class_below(const DelPezzoSurface& s, const DivisorClass& ceiling, std::int64_t max_degree,
                              const std::function<void(const DivisorClass&)>& visit);

}  // namespace lattice
}  // namespace dpz
