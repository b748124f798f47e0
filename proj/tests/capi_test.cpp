// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <json.hpp>
#include <string>
#include <thread>
#include <vector>

#include "dpz/dpz.h"

using nlohmann::json;

namespace {

struct Surface {
  explicit Surface(const char* token) { status = dpz_surface_open(token, &handle); }
  ~Surface() { dpz_surface_close(handle); }
  dpz_surface* handle = nullptr;
  dpz_status status;
};

json take(dpz_result* r) {
  json j = json::parse(dpz_result_json(r));
  dpz_result_free(r);
  return j;
}

}  // namespace

TEST(CApi, OpenAndRank) {
  Surface s("S3");
  ASSERT_EQ(s.status, DPZ_OK);
  int rank = 0;
  EXPECT_EQ(dpz_surface_rank(s.handle, &rank), DPZ_OK);
  EXPECT_EQ(rank, 4);
  EXPECT_STRNE(dpz_version(), "");
}

TEST(CApi, UnknownSurfaceIsInputError) {
  dpz_surface* h = nullptr;
  EXPECT_EQ(dpz_surface_open("S9", &h), DPZ_E_INPUT);
  EXPECT_EQ(h, nullptr);
  EXPECT_NE(std::string(dpz_last_error()).find("S9"), std::string::npos);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(dpz_surface_open(nullptr, nullptr), DPZ_E_NULL);
  Surface s("P2");
  EXPECT_EQ(dpz_surface_rank(s.handle, nullptr), DPZ_E_NULL);
  dpz_result* r = nullptr;
  EXPECT_EQ(dpz_codim(nullptr, "5", 0, &r), DPZ_E_NULL);
  EXPECT_EQ(dpz_result_certified(nullptr), -1);
  dpz_result_free(nullptr);
  dpz_surface_close(nullptr);
}

TEST(CApi, Intersect) {
  Surface s("P1xP1");
  std::int64_t v = 0;
  EXPECT_EQ(dpz_intersect(s.handle, "2,3", "1,1", &v), DPZ_OK);
  EXPECT_EQ(v, 5);
  EXPECT_EQ(dpz_intersect(s.handle, "2,3,1", "1,1", &v), DPZ_E_INPUT);
}

TEST(CApi, Codim) {
  Surface s("P2");
  dpz_result* r = nullptr;
  ASSERT_EQ(dpz_codim(s.handle, "5", 1, &r), DPZ_OK);
  const json j = take(r);
  EXPECT_EQ(j["exact_codim"], 4);
  EXPECT_EQ(j["witness"]["kind"], "split");
  Surface s1("S1");
  EXPECT_EQ(dpz_codim(s1.handle, "1,-2", 0, &r), DPZ_E_NOT_CERTIFIED);
}

TEST(CApi, NotCertifiedStatusForNonNefDimension) {
  Surface s("S2");
  dpz_result* r = nullptr;
  EXPECT_EQ(dpz_moduli_dim(s.handle, "0,1,0", &r), DPZ_E_NOT_CERTIFIED);
  ASSERT_EQ(dpz_riemann_roch(s.handle, "0,1,0", &r), DPZ_OK);
  const json j = take(r);
  EXPECT_EQ(j["nef"], false);
  EXPECT_TRUE(j["dim_linear_system"].is_null());
}

TEST(CApi, CertificationFlag) {
  Surface s("P2");
  dpz_result* r = nullptr;
  ASSERT_EQ(dpz_check_a(s.handle, "5", 6, 1, &r), DPZ_OK);
  EXPECT_EQ(dpz_result_certified(r), 1);
  dpz_result_free(r);
  ASSERT_EQ(dpz_check_a(s.handle, "2", 2, 0, &r), DPZ_OK);
  EXPECT_EQ(dpz_result_certified(r), 0);
  dpz_result_free(r);
  ASSERT_EQ(dpz_lines(s.handle, &r), DPZ_OK);
  EXPECT_EQ(dpz_result_certified(r), -1);
  dpz_result_free(r);
}

TEST(CApi, BettiAndBps) {
  Surface s("S1");
  dpz_result* r = nullptr;
  ASSERT_EQ(dpz_stable_betti(s.handle, 6, &r), DPZ_OK);
  json j = take(r);
  EXPECT_EQ(j["betti"]["2"], 3);
  EXPECT_EQ(j["context"]["kind"], "stable");
  ASSERT_EQ(dpz_bps_series(4, 0, &r), DPZ_OK);
  j = take(r);
  EXPECT_TRUE(j["valid_total"].is_null());
  ASSERT_EQ(dpz_bps_low_degree(s.handle, &r), DPZ_OK);
  j = take(r);
  EXPECT_EQ(j["entries"].size(), 3u);
  ASSERT_EQ(dpz_taut_count(s.handle, 3, &r), DPZ_OK);
  j = take(r);
  EXPECT_EQ(j["count"], 26);
}

TEST(CApi, PicardBound) {
  Surface s("P2");
  dpz_result* r = nullptr;
  ASSERT_EQ(dpz_picard_bound(s.handle, "4", &r), DPZ_OK);
  EXPECT_EQ(dpz_result_certified(r), 1);
  const json j = take(r);
  EXPECT_EQ(j["bound"], 2);
  EXPECT_EQ(j["test_matrix"]["det_lhs"], "12*degtau");
}

TEST(CApi, GapValidation) {
  dpz_result* r = nullptr;
  ASSERT_EQ(dpz_gap(2, 2, 2, 2, &r), DPZ_OK);
  EXPECT_EQ(dpz_result_certified(r), 1);
  EXPECT_EQ(take(r)["gap"], 1);
  EXPECT_EQ(dpz_gap(1, 1, 1, 1, &r), DPZ_E_INPUT);
}

TEST(CApi, ErrorsAreThreadLocal) {
  std::string other;
  dpz_surface* h = nullptr;
  ASSERT_EQ(dpz_surface_open("bogus", &h), DPZ_E_INPUT);
  std::thread t([&] {
    Surface s("P2");
    other = dpz_last_error();
  });
  t.join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(dpz_last_error()), "");
}

TEST(CApi, ConcurrentQueriesAgree) {
  std::vector<std::thread> threads;
  std::vector<int> codims(8, -1);
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&, i] {
      Surface s("P1xP1");
      dpz_result* r = nullptr;
      const std::string beta = std::to_string(2 + i % 3) + ",5";
      if (dpz_codim(s.handle, beta.c_str(), 0, &r) == DPZ_OK) codims[i] = take(r)["exact_codim"];
    });
  for (auto& t : threads) t.join();
  for (int i = 0; i < 8; ++i) EXPECT_EQ(codims[i], 2 + i % 3);
}
