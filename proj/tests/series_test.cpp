// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "dpz/errors.hpp"
#include "dpz/series.hpp"

using namespace dpz;

namespace {

const std::vector<std::string> kZ{"z"};
const std::vector<std::string> kZT{"z", "t"};

TruncatedSeries z_poly(std::vector<std::int64_t> coeffs, int order) {
  TruncatedSeries s(kZ, {order});
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.add_term({static_cast<int>(i), 0, 0}, make_rational(coeffs[i]));
  return s;
}

TruncatedSeries random_series(std::mt19937& rng, const std::vector<int>& orders, std::optional<int> total) {
  TruncatedSeries s(kZT, orders, total);
  std::uniform_int_distribution<int> nterms(0, 5), ez(0, orders[0] - 1), et(0, orders[1] - 1), num(-9, 9),
      den(1, 4);
  for (int n = nterms(rng); n > 0; --n) s.add_term({ez(rng), et(rng), 0}, make_rational(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST(Series, ProductExamples) {
  EXPECT_EQ(z_poly({1, 1}, 5) * z_poly({1, -1}, 5), z_poly({1, 0, -1}, 5));
  const auto geo = TruncatedSeries::geometric(kZ, {8}, {1});
  EXPECT_EQ(geo * z_poly({1, -1}, 8), z_poly({1}, 8));
  auto a = TruncatedSeries::constant(kZT, {6, 3}, 1) + TruncatedSeries::monomial(kZT, {6, 3}, {2, 1});
  auto sq = a * a;
  EXPECT_EQ(sq.coefficient({0, 0}), 1);
  EXPECT_EQ(sq.coefficient({2, 1}), 2);
  EXPECT_EQ(sq.coefficient({4, 2}), 1);
  EXPECT_EQ(sq.size(), 3u);
}

TEST(Series, GeometricExamples) {
  EXPECT_EQ(TruncatedSeries::geometric(kZ, {7}, {2}), z_poly({1, 0, 1, 0, 1, 0, 1}, 7));
  const auto g = TruncatedSeries::geometric(kZT, {5, 2}, {2, 1});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.coefficient({2, 1}), 1);
  const std::vector<std::string> qt{"q", "t"};
  const auto h = TruncatedSeries::geometric(qt, {7, 3}, {3, 1});
  EXPECT_EQ(h.size(), 3u);
  EXPECT_EQ(h.coefficient({6, 2}), 1);
  EXPECT_THROW(TruncatedSeries::geometric(kZT, {5, 2}, {0, 0}), DivergenceError);
}

TEST(Series, PowerAndInvert) {
  EXPECT_EQ(z_poly({1, 1}, 5).power(3), z_poly({1, 3, 3, 1}, 5));
  EXPECT_EQ(z_poly({1, 0, -1}, 7).invert(), z_poly({1, 0, 1, 0, 1, 0, 1}, 7));
  const auto f = z_poly({1, 0, -1, -1}, 6);
  const auto inv = f.invert();
  EXPECT_EQ(inv.coefficient({5}), 2);
  EXPECT_EQ(inv * f, z_poly({1}, 6));
  EXPECT_THROW(z_poly({0, 1}, 4).invert(), InputError);
}

TEST(Series, CoefficientOutsideWindowIsAnError) {
  const auto s = z_poly({1, 2, 3}, 3);
  EXPECT_EQ(s.coefficient({2}), 3);
  EXPECT_THROW(s.coefficient({3}), TruncationError);
  EXPECT_THROW(s.coefficient({-1}), InputError);
  EXPECT_THROW(s.coefficient({1, 1}), InputError);
  TruncatedSeries t(kZT, {5, 5}, 4);
  EXPECT_EQ(t.coefficient({3, 0}), 0);
  EXPECT_THROW(t.coefficient({2, 2}), TruncationError);
}

TEST(Series, CombinedWindowIsPointwiseMinimum) {
  const auto a = TruncatedSeries::constant(kZT, {4, 6}, 1);
  const auto b = TruncatedSeries::constant(kZT, {7, 2}, 1, 5);
  const auto c = a * b;
  EXPECT_EQ(c.orders(), (std::vector<int>{4, 2}));
  EXPECT_EQ(c.total_order(), 5);
  EXPECT_EQ((a + b).orders(), (std::vector<int>{4, 2}));
}

TEST(Series, VariableMismatchIsRejected) {
  const auto a = TruncatedSeries::constant(kZ, {3}, 1);
  const auto b = TruncatedSeries::constant({"q"}, {3}, 1);
  EXPECT_THROW(a * b, InputError);
  EXPECT_THROW(a + b, InputError);
}

TEST(Series, NoStoredZeros) {
  auto s = z_poly({1, 2}, 4);
  s -= z_poly({0, 2}, 4);
  EXPECT_EQ(s.size(), 1u);
  for (const auto& [e, c] : (s - s).terms()) ADD_FAILURE() << "stored zero " << c;
}

TEST(Series, RingAxiomsOnRandomSparseInputs) {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> ord(1, 6), use_total(0, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::vector<int> orders{ord(rng), ord(rng)};
    const std::optional<int> total = use_total(rng) == 0 ? std::optional<int>(ord(rng) + 1) : std::nullopt;
    const auto a = random_series(rng, orders, total);
    const auto b = random_series(rng, orders, total);
    const auto c = random_series(rng, orders, total);
    ASSERT_EQ((a * b) * c, a * (b * c)) << trial;
    ASSERT_EQ(a * (b + c), a * b + a * c) << trial;
    ASSERT_EQ(a * b, b * a) << trial;
    ASSERT_EQ((a + b) + c, a + (b + c)) << trial;
    if (a.constant_term() != 0) {
      const auto inv = a.invert();
      const auto one = TruncatedSeries::constant(kZT, orders, 1, total);
      ASSERT_EQ(inv * a, one) << trial;
      ASSERT_EQ(a * inv, one) << trial;
    }
  }
}

TEST(Series, RenderingIsOrderedByTotalDegree) {
  const auto s = TruncatedSeries::geometric(kZT, {6, 3}, {2, 1});
  EXPECT_EQ(s.to_string().rfind("1 + z^2*t + z^4*t^2", 0), 0u) << s.to_string();
}
