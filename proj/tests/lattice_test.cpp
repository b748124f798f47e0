// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "dpz/errors.hpp"
#include "dpz/lattice.hpp"

using namespace dpz;

namespace {

DivisorClass cls(const DelPezzoSurface& s, std::vector<std::int64_t> c) { return DivisorClass(s, std::move(c)); }

DelPezzoSurface S(int delta) { return DelPezzoSurface::blowup(delta); }

}  // namespace

TEST(Lattice, IntersectExamples) {
  const auto p2 = DelPezzoSurface::projective_plane();
  const auto q = DelPezzoSurface::quadric();
  EXPECT_EQ(lattice::intersect(p2, cls(p2, {2}), cls(p2, {3})), 6);
  EXPECT_EQ(lattice::intersect(S(1), cls(S(1), {0, 1}), cls(S(1), {0, 1})), -1);
  EXPECT_EQ(lattice::intersect(q, cls(q, {2, 3}), cls(q, {1, 1})), 5);
}

TEST(Lattice, MixingSurfacesOrArityIsAnInputError) {
  EXPECT_THROW(cls(S(1), {1, 2, 3}), InputError);
  EXPECT_THROW(lattice::intersect(S(1), cls(S(1), {1, 0}), cls(S(2), {1, 0, 0})), InputError);
  EXPECT_THROW(DelPezzoSurface::parse("S9"), InputError);
  EXPECT_THROW(parse_divisor(S(2), "1,x,0"), InputError);
}

TEST(Lattice, CanonicalClass) {
  for (const auto& s : DelPezzoSurface::all()) {
    const auto k = lattice::canonical_class(s);
    const std::int64_t expected = s.kind() == SurfaceKind::ProjectivePlane ? 9
                                  : s.kind() == SurfaceKind::QuadricProduct ? 8
                                                                            : 9 - s.blown_up_points();
    EXPECT_EQ(lattice::self_intersection(s, k), expected) << s.token();
    EXPECT_TRUE(lattice::is_ample(s, -k)) << s.token();
    EXPECT_EQ(s.betti()[1], 0);
    EXPECT_EQ(s.betti()[2], s.picard_rank());
  }
  const auto p2 = DelPezzoSurface::projective_plane();
  EXPECT_EQ(lattice::canonical_class(p2).coords(), (std::vector<std::int64_t>{-3}));
  EXPECT_EQ(lattice::arithmetic_genus(p2, cls(p2, {1})), 0);
  const auto s3 = S(3);
  EXPECT_EQ(lattice::canonical_class(s3).coords(), (std::vector<std::int64_t>{-3, 1, 1, 1}));
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(lattice::intersect(s3, lattice::canonical_class(s3), basis_class(s3, i)), -1);
  const auto q = DelPezzoSurface::quadric();
  EXPECT_EQ(lattice::canonical_class(q).coords(), (std::vector<std::int64_t>{-2, -2}));
  EXPECT_EQ(lattice::arithmetic_genus(q, cls(q, {1, 1})), 0);
}

TEST(Lattice, GenusAndRiemannRoch) {
  const auto p2 = DelPezzoSurface::projective_plane();
  const auto q = DelPezzoSurface::quadric();
  EXPECT_EQ(lattice::arithmetic_genus(p2, cls(p2, {4})), 3);
  EXPECT_EQ(lattice::arithmetic_genus(q, cls(q, {1, 1})), 0);
  // (3h - e1)^2 = 8, (3h - e1).K = -8
  EXPECT_EQ(lattice::arithmetic_genus(S(1), cls(S(1), {3, -1})), 1);
  EXPECT_EQ(lattice::dim_linear_system(p2, cls(p2, {3})), 9);
  EXPECT_EQ(lattice::dim_linear_system(q, cls(q, {2, 2})), 8);
  EXPECT_EQ(lattice::dim_linear_system(S(1), cls(S(1), {5, -2})), 17);
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(lattice::dim_linear_system(p2, cls(p2, {d})), d * (d + 3) / 2);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) EXPECT_EQ(lattice::dim_linear_system(q, cls(q, {a, b})), a * b + a + b);
}

TEST(Lattice, DimensionRefusesNonNef) {
  EXPECT_THROW(lattice::dim_linear_system(S(2), cls(S(2), {0, 1, 0})), NotCertifiedError);
  EXPECT_THROW(lattice::dim_linear_system(S(1), cls(S(1), {1, -2})), NotCertifiedError);
}

TEST(Lattice, MinusOneCurveCounts) {
  const std::vector<std::size_t> expected{0, 0, 1, 3, 6, 10, 16, 27, 56, 240};
  const auto all = DelPezzoSurface::all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& s = all[i];
    const auto& curves = lattice::minus_one_curves(s);
    EXPECT_EQ(curves.size(), expected[i]) << s.token();
    const auto k = lattice::canonical_class(s);
    for (const auto& c : curves) {
      EXPECT_EQ(lattice::self_intersection(s, c), -1);
      EXPECT_EQ(lattice::intersect(s, c, k), -1);
      EXPECT_EQ(lattice::arithmetic_genus(s, c), 0);
    }
  }
  const auto s2 = S(2);
  const auto& c2 = lattice::minus_one_curves(s2);
  for (const auto& want : {cls(s2, {0, 1, 0}), cls(s2, {0, 0, 1}), cls(s2, {1, -1, -1})})
    EXPECT_NE(std::find(c2.begin(), c2.end(), want), c2.end()) << want.to_string();
}

// Independent exhaustive search in a box much larger than the enumerator's bound.
TEST(Lattice, MinusOneCurvesMatchWideBoxSearch) {
  for (int delta = 1; delta <= 5; ++delta) {
    const auto s = S(delta);
    std::size_t found = 0;
    std::vector<std::int64_t> c(delta + 1);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == delta + 1) {
        std::int64_t sq = c[0] * c[0], deg = 3 * c[0];
        for (int i = 1; i <= delta; ++i) sq -= c[i] * c[i], deg += c[i];
        if (sq == -1 && deg == 1) ++found;
        return;
      }
      for (std::int64_t v = -6; v <= 6; ++v) c[pos] = v, rec(pos + 1);
    };
    rec(0);
    EXPECT_EQ(found, lattice::minus_one_curves(s).size()) << delta;
  }
}

TEST(Lattice, EffectiveConeGenerators) {
  const auto q = DelPezzoSurface::quadric();
  const auto& gq = lattice::effective_cone_generators(q);
  ASSERT_EQ(gq.size(), 2u);
  EXPECT_NE(std::find(gq.begin(), gq.end(), cls(q, {1, 0})), gq.end());
  EXPECT_NE(std::find(gq.begin(), gq.end(), cls(q, {0, 1})), gq.end());
  const auto s1 = S(1);
  const auto& g1 = lattice::effective_cone_generators(s1);
  ASSERT_EQ(g1.size(), 2u);
  EXPECT_NE(std::find(g1.begin(), g1.end(), cls(s1, {0, 1})), g1.end());
  EXPECT_NE(std::find(g1.begin(), g1.end(), cls(s1, {1, -1})), g1.end());
  EXPECT_EQ(lattice::effective_cone_generators(S(3)).size(), 6u);
}

// On S1 ah - m e1 = (a - m) e1 + a (h - e1); cone membership is a >= 0, a >= m.
TEST(Lattice, S1ConeMembershipClosedForm) {
  const auto s1 = S(1);
  for (int a = -6; a <= 6; ++a)
    for (int m = -6; m <= 6; ++m) {
      const auto d = cls(s1, {a, -m});
      EXPECT_EQ(lattice::is_effective_cone(s1, d), a >= 0 && a >= m) << a << "," << m;
      // nef: D.e1 = m >= 0, D.(h - e1) = a - m >= 0
      EXPECT_EQ(lattice::is_nef(s1, d), m >= 0 && a >= m) << a << "," << m;
    }
}

TEST(Lattice, NefExamples) {
  const auto q = DelPezzoSurface::quadric();
  EXPECT_TRUE(lattice::is_nef(q, cls(q, {2, 3})));
  EXPECT_FALSE(lattice::is_nef(S(1), cls(S(1), {1, 2})));
  EXPECT_FALSE(lattice::is_nef(S(2), cls(S(2), {0, 1, 0})));
  EXPECT_TRUE(lattice::is_effective_cone(S(2), cls(S(2), {0, 1, 0})));
}

// Farkas duality: D is in the effective cone iff D.N >= 0 for every nef N.
// The nef classes of small degree include generators of the nef cone on S2, S3.
TEST(Lattice, EffectiveConeIsDualOfNefCone) {
  std::mt19937 rng(7);
  for (int delta : {2, 3}) {
    const auto s = S(delta);
    std::vector<DivisorClass> nef;
    lattice::for_each_nef_class(s, 6, [&](const DivisorClass& n) { nef.push_back(n); });
    ASSERT_FALSE(nef.empty());
    std::uniform_int_distribution<int> coord(-5, 5);
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<std::int64_t> c(delta + 1);
      for (auto& v : c) v = coord(rng);
      const auto d = cls(s, c);
      bool dual = true;
      for (const auto& n : nef) dual = dual && lattice::intersect(s, d, n) >= 0;
      EXPECT_EQ(lattice::is_effective_cone(s, d), dual) << d.to_string();
    }
  }
}

TEST(Lattice, EveryEnumeratedNefClassIsNef) {
  for (const auto& s : DelPezzoSurface::all()) {
    int count = 0;
    lattice::for_each_nef_class(s, 4, [&](const DivisorClass& n) {
      // every class is checked for nefness, a spread-out sample for the rest
      EXPECT_TRUE(lattice::is_nef(s, n)) << n.to_string();
      const bool sampled = count < 200 || count % 1000 == 0;
      ++count;
      if (!sampled) return;
      EXPECT_TRUE(lattice::is_effective_cone(s, n)) << n.to_string();
      EXPECT_GE(lattice::chi_line_bundle(s, n), 1);
      EXPECT_GE(lattice::dim_linear_system(s, n), 0);
    });
    EXPECT_GT(count, 0) << s.token();
  }
}

TEST(Lattice, PairingIsSymmetricAndBilinear) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-7, 7);
  for (const auto& s : DelPezzoSurface::all()) {
    auto random_class = [&] {
      std::vector<std::int64_t> c(s.picard_rank());
      for (auto& v : c) v = coord(rng);
      return cls(s, c);
    };
    for (int t = 0; t < 50; ++t) {
      const auto a = random_class(), b = random_class(), c = random_class();
      EXPECT_EQ(lattice::intersect(s, a, b), lattice::intersect(s, b, a));
      EXPECT_EQ(lattice::intersect(s, a + 3 * b, c), lattice::intersect(s, a, c) + 3 * lattice::intersect(s, b, c));
    }
  }
}

TEST(Lattice, DimensionAdditivity) {
  for (const auto& s : DelPezzoSurface::all()) {
    std::vector<DivisorClass> nef;
    lattice::for_each_nef_class(s, 3, [&](const DivisorClass& n) { nef.push_back(n); });
    for (std::size_t i = 0; i < nef.size() && i < 40; ++i)
      for (std::size_t j = 0; j < nef.size() && j < 40; ++j) {
        const auto b = nef[i] + nef[j];
        EXPECT_EQ(lattice::dim_linear_system(s, b) - lattice::dim_linear_system(s, nef[i]) -
                      lattice::dim_linear_system(s, nef[j]),
                  lattice::intersect(s, nef[i], nef[j]));
      }
  }
}

TEST(Lattice, ExpandInBasis) {
  const auto p2 = DelPezzoSurface::projective_plane();
  EXPECT_EQ(lattice::expand_in_basis(p2, cls(p2, {5}), {cls(p2, {1})}), (std::vector<Rational>{5}));
  const auto s1 = S(1);
  const auto d = lattice::expand_in_basis(s1, cls(s1, {5, -2}), {cls(s1, {1, 0}), cls(s1, {1, -1})});
  EXPECT_EQ(d, (std::vector<Rational>{3, 2}));
  const auto q = DelPezzoSurface::quadric();
  EXPECT_EQ(lattice::expand_in_basis(q, cls(q, {2, 3}), {cls(q, {1, 0}), cls(q, {0, 1})}),
            (std::vector<Rational>{2, 3}));
  EXPECT_THROW(lattice::expand_in_basis(s1, cls(s1, {5, -2}), {cls(s1, {1, 0}), cls(s1, {2, 0})}), InputError);
}

TEST(Lattice, DivisorRoundTrip) {
  const auto s = S(4);
  const auto d = parse_divisor(s, "6,-2,-2,-1,0");
  EXPECT_EQ(d.to_string(), "6,-2,-2,-1,0");
  EXPECT_EQ(parse_divisor(s, d.to_string()), d);
}
