// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "dpz/bps.hpp"
#include "dpz/hilbert.hpp"
#include "support/oracles.hpp"

using namespace dpz;

TEST(Bps, LowDegreeEntries) {
  const auto t = bps::refined_bps_table(4);
  EXPECT_EQ(t.entries.at({0, 0}), 1);
  EXPECT_EQ(t.entries.at({0, 2}), 1);
  EXPECT_EQ(t.entries.at({2, 0}), 1);
  EXPECT_EQ(t.entries.at({1, 1}), 0);
  const std::vector<std::int64_t> expected_rho{1, 2, 2, 3, 4, 5, 6, 7, 8, 9};
  const auto all = DelPezzoSurface::all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto low = bps::bps_low_degree(all[i]);
    EXPECT_EQ(low.entries.at({0, 2}), 1);
    EXPECT_EQ(low.entries.at({1, 1}), expected_rho[i] - 1);
    EXPECT_EQ(low.entries.at({2, 0}), 1);
  }
}

TEST(Bps, MatchesDirectExpansion) {
  const auto expected = oracle::bps(12);
  const auto t = bps::refined_bps_table(12);
  for (const auto& [ij, n] : expected) EXPECT_EQ(t.entries.at(ij), n) << ij.first << "," << ij.second;
}

TEST(Bps, SymmetricAndNonnegative) {
  const auto t = bps::refined_bps_table(14);
  for (const auto& [ij, n] : t.entries) {
    EXPECT_GE(n, 0);
    EXPECT_EQ(n, t.entries.at({ij.second, ij.first}));
  }
}

TEST(Bps, SpecializesToStableBettiOfP2) {
  const auto p2 = DelPezzoSurface::projective_plane();
  const auto t = bps::refined_bps_table(12);
  for (int k = 0; k <= 12; k += 2) {
    std::int64_t sum = 0;
    for (int i = 0; i <= k; ++i) sum += t.entries.at({i, k - i});
    EXPECT_EQ(sum, hilbert::stable_betti(p2, k)) << k;
  }
}

TEST(Bps, ValidRangeMetadata) {
  const auto t = bps::refined_bps_table(6, 4);
  ASSERT_TRUE(t.valid_total.has_value());
  EXPECT_EQ(*t.valid_total, 4);
  for (const auto& [i, j] : t.outside_range()) EXPECT_GT(i + j, 4);
  EXPECT_EQ(t.outside_range().size(), 13u);  // totals 5 and 6
  EXPECT_NE(t.to_text().find("outside"), std::string::npos);
  EXPECT_FALSE(bps::refined_bps_table(6).valid_total.has_value());
}

TEST(Bps, TautologicalGenerators) {
  const auto p2 = DelPezzoSurface::projective_plane();
  const auto deg1 = bps::taut_generator_degrees(p2, 1);
  ASSERT_EQ(deg1.size(), 2u);
  EXPECT_EQ(deg1[0].name, "c_0(2)");
  EXPECT_EQ(deg1[1].name, "c_2(0)");
  int deg2 = 0;
  for (const auto& g : bps::taut_generator_degrees(p2, 2)) deg2 += g.degree == 2;
  EXPECT_EQ(deg2, 3);
  int s2_deg1 = 0;
  for (const auto& g : bps::taut_generator_degrees(DelPezzoSurface::blowup(2), 1)) s2_deg1 += g.degree == 1;
  EXPECT_EQ(s2_deg1, 4);
}

TEST(Bps, TautologicalCounts) {
  const auto p2 = DelPezzoSurface::projective_plane();
  EXPECT_EQ(bps::taut_monomial_count(p2, 0), 1);
  EXPECT_EQ(bps::taut_monomial_count(p2, 1), 2);
  EXPECT_EQ(bps::taut_monomial_count(p2, 2), 6);
  for (const auto& s : DelPezzoSurface::all())
    for (int k = 0; k <= 8; ++k)
      EXPECT_EQ(bps::taut_monomial_count(s, k), hilbert::stable_betti(s, 2 * k)) << s.token() << " k=" << k;
}
