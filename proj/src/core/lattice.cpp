// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <mutex>
#include <sstream>

#include "dpz/detail/linalg.hpp"
#include "dpz/errors.hpp"

namespace dpz {

// ---------------------------------------------------------------------------
// DelPezzoSurface

DelPezzoSurface::DelPezzoSurface(SurfaceKind kind, int delta) : kind_(kind), delta_(delta) {
  switch (kind) {
    case SurfaceKind::ProjectivePlane:
      rank_ = 1;
      gram_ = {1};
      break;
    case SurfaceKind::QuadricProduct:
      rank_ = 2;
      gram_ = {0, 1, 1, 0};
      break;
    case SurfaceKind::BlowupPlane:
      if (delta < 1 || delta > 8) throw InputError("blowup of the plane needs 1..8 points, got " + std::to_string(delta));
      rank_ = delta + 1;
      gram_.assign(rank_ * rank_, 0);
      gram_[0] = 1;
      for (int i = 1; i < rank_; ++i) gram_[i * rank_ + i] = -1;
      break;
  }
}

DelPezzoSurface DelPezzoSurface::projective_plane() { return {SurfaceKind::ProjectivePlane, 0}; }
DelPezzoSurface DelPezzoSurface::quadric() { return {SurfaceKind::QuadricProduct, 0}; }
DelPezzoSurface DelPezzoSurface::blowup(int points) { return {SurfaceKind::BlowupPlane, points}; }

DelPezzoSurface DelPezzoSurface::parse(std::string_view token) {
  if (token == "P2") return projective_plane();
  if (token == "P1xP1") return quadric();
  if (token.size() == 2 && token[0] == 'S' && token[1] >= '1' && token[1] <= '8') return blowup(token[1] - '0');
  throw InputError("unknown surface token '" + std::string(token) + "' (expected P2, P1xP1, S1..S8)");
}

std::vector<DelPezzoSurface> DelPezzoSurface::all() {
  std::vector<DelPezzoSurface> out{projective_plane(), quadric()};
  for (int d = 1; d <= 8; ++d) out.push_back(blowup(d));
  return out;
}

std::string DelPezzoSurface::token() const {
  switch (kind_) {
    case SurfaceKind::ProjectivePlane: return "P2";
    case SurfaceKind::QuadricProduct: return "P1xP1";
    case SurfaceKind::BlowupPlane: return "S" + std::to_string(delta_);
  }
  return {};
}

DivisorClass DelPezzoSurface::canonical() const {
  switch (kind_) {
    case SurfaceKind::ProjectivePlane: return DivisorClass(*this, {-3});
    case SurfaceKind::QuadricProduct: return DivisorClass(*this, {-2, -2});
    case SurfaceKind::BlowupPlane: {
      std::vector<std::int64_t> c(rank_, 1);
      c[0] = -3;
      return DivisorClass(*this, std::move(c));
    }
  }
  throw InvariantError("unreachable surface kind");
}

// ---------------------------------------------------------------------------
// DivisorClass

DivisorClass::DivisorClass(const DelPezzoSurface& surface, std::vector<std::int64_t> coords)
    : surface_id_(surface.id()), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != surface.picard_rank()) {
    throw InputError("divisor on " + surface.token() + " needs " + std::to_string(surface.picard_rank()) +
                     " coordinates, got " + std::to_string(coords_.size()));
  }
}

DivisorClass::DivisorClass(const DelPezzoSurface& surface)
    : surface_id_(surface.id()), coords_(surface.picard_rank(), 0) {}

bool DivisorClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto v) { return v == 0; });
}

void DivisorClass::check_compatible(const DivisorClass& other) const {
  if (surface_id_ != other.surface_id_ || coords_.size() != other.coords_.size()) {
    throw InputError("divisor classes live on different surfaces");
  }
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

DivisorClass operator*(std::int64_t n, DivisorClass a) {
  for (auto& v : a.coords_) v *= n;
  return a;
}

std::string DivisorClass::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out;
}

DivisorClass parse_divisor(const DelPezzoSurface& surface, std::string_view text) {
  std::vector<std::int64_t> coords;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw InputError("malformed divisor coordinates '" + std::string(text) + "'");
    }
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return DivisorClass(surface, std::move(coords));
}

DivisorClass basis_class(const DelPezzoSurface& surface, int index) {
  if (index < 0 || index >= surface.picard_rank()) throw InputError("basis index out of range");
  std::vector<std::int64_t> c(surface.picard_rank(), 0);
  c[index] = 1;
  return DivisorClass(surface, std::move(c));
}

std::string pretty(const DelPezzoSurface& surface, const DivisorClass& d) {
  std::vector<std::string> names;
  switch (surface.kind()) {
    case SurfaceKind::ProjectivePlane: names = {"h"}; break;
    case SurfaceKind::QuadricProduct: names = {"h1", "h2"}; break;
    case SurfaceKind::BlowupPlane:
      names = {"h"};
      for (int i = 1; i <= surface.blown_up_points(); ++i) names.push_back("e" + std::to_string(i));
      break;
  }
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < d.rank(); ++i) {
    std::int64_t c = d[i];
    if (c == 0) continue;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (std::abs(c) != 1) out << std::abs(c);
    out << names[i];
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

namespace lattice {
namespace {

void check_on(const DelPezzoSurface& s, const DivisorClass& d) {
  if (d.surface_id() != s.id() || d.rank() != s.picard_rank()) {
    throw InputError("divisor class does not belong to " + s.token());
  }
}

// Enumerates m = (m_1..m_k) with m_i in [lo, hi], sum m_i = sum, and
// sum m_i^2 <= sq (== sq when exact). Prunes with the real lower bound
// sum x^2 >= s^2 / k on the remaining coordinates.
class MultiplicityEnumerator {
 public:
  MultiplicityEnumerator(int k, std::int64_t lo, std::int64_t hi, bool exact)
      : MultiplicityEnumerator(lo, std::vector<std::int64_t>(k, hi), exact) {}

  // Per-position upper bounds.
  MultiplicityEnumerator(std::int64_t lo, std::vector<std::int64_t> hi, bool exact)
      : k_(static_cast<int>(hi.size())), lo_(lo), hi_(std::move(hi)), exact_(exact), m_(k_), suffix_hi_(k_ + 1, 0) {
    for (int i = k_ - 1; i >= 0; --i) suffix_hi_[i] = suffix_hi_[i + 1] + hi_[i];
  }

  template <class F>
  void run(std::int64_t sum, std::int64_t sq, F&& visit) {
    recurse(0, sum, sq, visit);
  }

 private:
  template <class F>
  void recurse(int pos, std::int64_t sum, std::int64_t sq, F& visit) {
    const int rest = k_ - pos;
    if (rest == 0) {
      if (sum == 0 && (!exact_ || sq == 0) && sq >= 0) visit(m_);
      return;
    }
    for (std::int64_t v = lo_; v <= hi_[pos]; ++v) {
      const std::int64_t s2 = sum - v;
      const std::int64_t q2 = sq - v * v;
      if (q2 < 0) {
        if (v >= 0) break;
        continue;
      }
      const int r2 = rest - 1;
      if (r2 == 0) {
        if (s2 != 0) continue;
      } else {
        if (s2 < r2 * lo_ || s2 > suffix_hi_[pos + 1]) continue;
        // s2^2 / r2 > q2  means infeasible
        if (s2 * s2 > q2 * r2) continue;
      }
      m_[pos] = v;
      recurse(pos + 1, s2, q2, visit);
    }
  }

  int k_;
  std::int64_t lo_;
  std::vector<std::int64_t> hi_;
  bool exact_;
  std::vector<std::int64_t> m_;
  std::vector<std::int64_t> suffix_hi_;
};

DivisorClass blowup_class(const DelPezzoSurface& s, std::int64_t a, const std::vector<std::int64_t>& m) {
  std::vector<std::int64_t> c(s.picard_rank());
  c[0] = a;
  for (std::size_t i = 0; i < m.size(); ++i) c[i + 1] = -m[i];
  return DivisorClass(s, std::move(c));
}

std::vector<DivisorClass> compute_minus_one_curves(const DelPezzoSurface& s) {
  std::vector<DivisorClass> out;
  if (s.kind() != SurfaceKind::BlowupPlane) return out;
  const std::int64_t delta = s.blown_up_points();
  // C = a h - sum m_i e_i with 3a - sum m = 1 and a^2 - sum m^2 = -1.
  // Cauchy-Schwarz: (3a - 1)^2 <= delta (a^2 + 1).
  for (std::int64_t a = 0; (3 * a - 1) * (3 * a - 1) <= delta * (a * a + 1) || 3 * a - 1 < 0; ++a) {
    MultiplicityEnumerator e(static_cast<int>(delta), -1, a, true);
    e.run(3 * a - 1, a * a + 1, [&](const std::vector<std::int64_t>& m) { out.push_back(blowup_class(s, a, m)); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> compute_generators(const DelPezzoSurface& s) {
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: return {DivisorClass(s, {1})};
    case SurfaceKind::QuadricProduct: return {DivisorClass(s, {1, 0}), DivisorClass(s, {0, 1})};
    case SurfaceKind::BlowupPlane:
      if (s.blown_up_points() == 1) return {DivisorClass(s, {0, 1}), DivisorClass(s, {1, -1})};
      return minus_one_curves(s);
  }
  return {};
}

std::vector<DivisorClass> compute_rulings(const DelPezzoSurface& s) {
  std::vector<DivisorClass> out;
  for_each_nef_class(s, 2, [&](const DivisorClass& d) {
    if (anticanonical_degree(s, d) == 2 && self_intersection(s, d) == 0) out.push_back(d);
  });
  std::sort(out.begin(), out.end());
  return out;
}

template <int Tag, class Compute>
const std::vector<DivisorClass>& per_surface_cache(const DelPezzoSurface& s, Compute compute) {
  // One slot per (Tag, surface id); filled once.
  struct Slot {
    std::once_flag once;
    std::vector<DivisorClass> value;
  };
  static Slot slots[10];
  Slot& slot = slots[s.id()];
  std::call_once(slot.once, [&] { slot.value = compute(s); });
  return slot.value;
}

}  // namespace

namespace {

// The form is diag(1) on P2, [[0,1],[1,0]] on P1xP1 and diag(1,-1,...,-1) on S_delta.
std::int64_t pairing(const DelPezzoSurface& s, const std::int64_t* a, const std::int64_t* b) {
  if (s.kind() == SurfaceKind::QuadricProduct) return a[0] * b[1] + a[1] * b[0];
  std::int64_t total = a[0] * b[0];
  for (int i = 1; i < s.picard_rank(); ++i) total -= a[i] * b[i];
  return total;
}

}  // namespace

std::int64_t intersect(const DelPezzoSurface& s, const DivisorClass& a, const DivisorClass& b) {
  check_on(s, a);
  check_on(s, b);
  return pairing(s, a.coords().data(), b.coords().data());
}

DivisorClass canonical_class(const DelPezzoSurface& s) { return s.canonical(); }

std::int64_t anticanonical_degree(const DelPezzoSurface& s, const DivisorClass& d) {
  return -intersect(s, d, s.canonical());
}

std::int64_t arithmetic_genus(const DelPezzoSurface& s, const DivisorClass& beta) {
  return (intersect(s, beta, beta) + intersect(s, beta, s.canonical())) / 2 + 1;
}

std::int64_t chi_line_bundle(const DelPezzoSurface& s, const DivisorClass& beta) {
  return (intersect(s, beta, beta) - intersect(s, beta, s.canonical())) / 2 + 1;
}

std::int64_t dim_linear_system(const DelPezzoSurface& s, const DivisorClass& beta) {
  if (!is_nef(s, beta)) {
    throw NotCertifiedError("formula not certified for this class: " + pretty(s, beta) + " is not nef");
  }
  return chi_line_bundle(s, beta) - 1;
}

const std::vector<DivisorClass>& minus_one_curves(const DelPezzoSurface& s) {
  return per_surface_cache<0>(s, compute_minus_one_curves);
}

const std::vector<DivisorClass>& ruling_classes(const DelPezzoSurface& s) {
  return per_surface_cache<1>(s, compute_rulings);
}

const std::vector<DivisorClass>& effective_cone_generators(const DelPezzoSurface& s) {
  return per_surface_cache<2>(s, compute_generators);
}

bool is_nef(const DelPezzoSurface& s, const DivisorClass& d) {
  check_on(s, d);
  const std::int64_t* c = d.coords().data();
  for (const auto& g : effective_cone_generators(s)) {
    if (pairing(s, c, g.coords().data()) < 0) return false;
  }
  return true;
}

bool is_ample(const DelPezzoSurface& s, const DivisorClass& d) {
  if (!is_nef(s, d) || self_intersection(s, d) <= 0) return false;
  for (const auto& g : effective_cone_generators(s)) {
    if (intersect(s, d, g) <= 0) return false;
  }
  return true;
}

bool is_effective_cone(const DelPezzoSurface& s, const DivisorClass& d) {
  check_on(s, d);
  const auto& gens = effective_cone_generators(s);
  detail::RationalMatrix g;
  for (const auto& c : gens) {
    std::vector<Rational> v;
    for (auto x : c.coords()) v.push_back(make_rational(x));
    g.push_back(std::move(v));
  }
  std::vector<Rational> target;
  for (auto x : d.coords()) target.push_back(make_rational(x));
  return detail::cone_contains(g, target);
}

std::vector<std::vector<std::int64_t>> gram_matrix(const DelPezzoSurface& s, const std::vector<DivisorClass>& classes) {
  std::vector<std::vector<std::int64_t>> g(classes.size(), std::vector<std::int64_t>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) g[i][j] = intersect(s, classes[i], classes[j]);
  return g;
}

std::vector<Rational> expand_in_basis(const DelPezzoSurface& s, const DivisorClass& beta,
                                      const std::vector<DivisorClass>& basis) {
  check_on(s, beta);
  const int n = s.picard_rank();
  if (static_cast<int>(basis.size()) != n) {
    throw InputError("basis must have " + std::to_string(n) + " elements");
  }
  // Columns are the basis coordinates.
  detail::RationalMatrix a(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j) {
    check_on(s, basis[j]);
    for (int i = 0; i < n; ++i) a[i][j] = make_rational(basis[j][i]);
  }
  std::vector<Rational> b;
  for (auto x : beta.coords()) b.push_back(make_rational(x));
  auto x = detail::solve(std::move(a), std::move(b));
  if (!x) throw InputError("basis has a singular Gram matrix");
  return *x;
}

namespace {

// Nef classes of degree <= max_degree; with a ceiling C only those D whose
// coordinates fit the box implied by C - D being nef.
void enumerate_nef(const DelPezzoSurface& s, std::int64_t max_degree, const DivisorClass* ceiling,
                   const std::function<void(const DivisorClass&)>& visit) {
  if (max_degree < 0) return;
  auto cap = [&](int i, std::int64_t fallback) { return ceiling ? std::min(fallback, (*ceiling)[i]) : fallback; };
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane:
      for (std::int64_t a = 0; 3 * a <= max_degree && a <= cap(0, a); ++a) visit(DivisorClass(s, {a}));
      return;
    case SurfaceKind::QuadricProduct:
      for (std::int64_t a = 0; 2 * a <= max_degree && a <= cap(0, a); ++a)
        for (std::int64_t b = 0; 2 * (a + b) <= max_degree && b <= cap(1, b); ++b) visit(DivisorClass(s, {a, b}));
      return;
    case SurfaceKind::BlowupPlane:
      break;
  }
  const int delta = s.blown_up_points();
  const std::int64_t k2 = 9 - delta;
  const double root = std::sqrt(static_cast<double>(delta));
  for (std::int64_t n = 0; n <= max_degree; ++n) {
    const double centre = 3.0 * n / k2, radius = root * n / k2;
    const auto a_lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(centre - radius)) - 1);
    auto a_hi = static_cast<std::int64_t>(std::ceil(centre + radius)) + 1;
    // (C - D).h >= 0 since h is nef
    if (ceiling) a_hi = std::min(a_hi, (*ceiling)[0]);
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
      if (3 * a - n < 0) continue;
      // nef: m_i = D.e_i >= 0 and m_i <= D.h = a; D^2 >= 0 gives sum m^2 <= a^2.
      // Under a ceiling, (C - D).e_i >= 0 bounds m_i by the multiplicity of C.
      std::vector<std::int64_t> hi(delta, a);
      if (ceiling) {
        for (int i = 0; i < delta; ++i) hi[i] = std::min(a, -(*ceiling)[i + 1]);
        if (std::any_of(hi.begin(), hi.end(), [](std::int64_t v) { return v < 0; })) continue;
      }
      MultiplicityEnumerator e(0, std::move(hi), false);
      e.run(3 * a - n, a * a, [&](const std::vector<std::int64_t>& m) {
        DivisorClass d = blowup_class(s, a, m);
        if (is_nef(s, d)) visit(d);
      });
    }
  }
}

}  // namespace

void for_each_nef_class(const DelPezzoSurface& s, std::int64_t max_degree,
                        const std::function<void(const DivisorClass&)>& visit) {
  enumerate_nef(s, max_degree, nullptr, visit);
}

void for_each_nef_class_below(const DelPezzoSurface& s, const DivisorClass& ceiling, std::int64_t max_degree,
                              const std::function<void(const DivisorClass&)>& visit) {
  check_on(s, ceiling);
  enumerate_nef(s, max_degree, &ceiling, [&](const DivisorClass& d) {
    if (is_nef(s, ceiling - d)) visit(d);
  });
}

}  // namespace lattice
}  // namespace dpz
