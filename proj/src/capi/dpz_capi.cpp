// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/dpz.h"

#include <string>

#include "dpz/bps.hpp"
#include "dpz/errors.hpp"
#include "dpz/hilbert.hpp"
#include "dpz/json_io.hpp"
#include "dpz/lattice.hpp"
#include "dpz/picard.hpp"
#include "dpz/positivity.hpp"
#include "dpz/series_cache.hpp"

struct dpz_surface {
  dpz::DelPezzoSurface surface;
};

struct dpz_result {
  nlohmann::json payload;
  std::string text;
};

namespace {

using dpz::DivisorClass;
using nlohmann::json;
namespace json_io = dpz::json_io;

thread_local std::string g_last_error;

dpz_status fail(dpz_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename F>
dpz_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const dpz::TruncationError& e) {
    return fail(DPZ_E_TRUNCATION, e.what());
  } catch (const dpz::InputError& e) {
    return fail(DPZ_E_INPUT, e.what());
  } catch (const dpz::NotCertifiedError& e) {
    return fail(DPZ_E_NOT_CERTIFIED, e.what());
  } catch (const dpz::InvariantError& e) {
    return fail(DPZ_E_INTERNAL, std::string("internal invariant violated: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(DPZ_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DPZ_E_INTERNAL, e.what());
  }
}

// Runs `make` (returning json) and wraps its value in a new result.
template <typename F>
dpz_status produce(dpz_result** out, F&& make) {
  if (!out) return fail(DPZ_E_NULL, "result pointer is NULL");
  *out = nullptr;
  return guarded([&] {
    auto* r = new dpz_result{make(), {}};
    r->text = r->payload.dump();
    *out = r;
    return DPZ_OK;
  });
}

#define DPZ_REQUIRE(ptr, what) \
  if (!(ptr)) return fail(DPZ_E_NULL, what " is NULL")

DivisorClass parse(const dpz_surface* s, const char* text) { return dpz::parse_divisor(s->surface, text); }

json proxy_warnings(const dpz::ConditionReport& r) {
  json w = json::array();
  for (const auto& c : r.clauses) {
    if (c.proxy) w.push_back(r.name() + " clause " + c.name + " is checked through a numerical proxy");
  }
  return w;
}

}  // namespace

extern "C" {

const char* dpz_version(void) { return "1.0.0"; }

const char* dpz_last_error(void) { return g_last_error.c_str(); }

dpz_status dpz_surface_open(const char* token, dpz_surface** out) {
  DPZ_REQUIRE(token, "surface token");
  DPZ_REQUIRE(out, "surface pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new dpz_surface{dpz::DelPezzoSurface::parse(token)};
    return DPZ_OK;
  });
}

void dpz_surface_close(dpz_surface* surface) { delete surface; }

dpz_status dpz_surface_rank(const dpz_surface* surface, int* out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(out, "output pointer");
  *out = surface->surface.picard_rank();
  return DPZ_OK;
}

dpz_status dpz_intersect(const dpz_surface* surface, const char* a, const char* b, int64_t* out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(a, "first class");
  DPZ_REQUIRE(b, "second class");
  DPZ_REQUIRE(out, "output pointer");
  return guarded([&] {
    *out = dpz::lattice::intersect(surface->surface, parse(surface, a), parse(surface, b));
    return DPZ_OK;
  });
}

dpz_status dpz_set_cache_dir(const char* path) {
  return guarded([&] {
    if (!path || !*path) dpz::series_cache::set_directory(std::nullopt);
    else dpz::series_cache::set_directory(std::filesystem::path(path));
    return DPZ_OK;
  });
}

dpz_status dpz_surface_info(const dpz_surface* surface, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  return produce(out, [&] { return json_io::surface_info(surface->surface); });
}

dpz_status dpz_riemann_roch(const dpz_surface* surface, const char* beta, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(beta, "beta");
  return produce(out, [&] {
    const auto& s = surface->surface;
    const DivisorClass b = parse(surface, beta);
    const bool nef = dpz::lattice::is_nef(s, b);
    json r{{"beta", json_io::divisor(s, b)},
           {"chi", dpz::lattice::chi_line_bundle(s, b)},
           {"beta_squared", dpz::lattice::self_intersection(s, b)},
           {"anticanonical_degree", dpz::lattice::anticanonical_degree(s, b)},
           {"nef", nef},
           {"dim_linear_system", nef ? json(dpz::lattice::dim_linear_system(s, b)) : json(nullptr)}};
    if (!nef) r["warnings"] = {"beta is not nef; higher cohomology may not vanish, so dim|beta| is not reported"};
    return r;
  });
}

dpz_status dpz_genus(const dpz_surface* surface, const char* beta, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(beta, "beta");
  return produce(out, [&] {
    const DivisorClass b = parse(surface, beta);
    return json{{"beta", json_io::divisor(surface->surface, b)},
                {"arithmetic_genus", dpz::lattice::arithmetic_genus(surface->surface, b)}};
  });
}

dpz_status dpz_lines(const dpz_surface* surface, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  return produce(out, [&] {
    const auto& s = surface->surface;
    json curves = json::array();
    for (const auto& c : dpz::lattice::minus_one_curves(s)) curves.push_back(json_io::divisor(s, c));
    return json{{"count", curves.size()}, {"curves", curves}};
  });
}

dpz_status dpz_codim(const dpz_surface* surface, const char* beta, int with_witness, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(beta, "beta");
  return produce(out, [&] {
    const auto report = dpz::positivity::codim_nonintegral(surface->surface, parse(surface, beta));
    return json_io::codim(surface->surface, report, with_witness != 0);
  });
}

dpz_status dpz_check_a(const dpz_surface* surface, const char* beta, int i, int relaxed, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(beta, "beta");
  return produce(out, [&] {
    const auto& s = surface->surface;
    const DivisorClass b = parse(surface, beta);
    const auto report = relaxed ? dpz::positivity::check_Ai_relaxed(s, b, i) : dpz::positivity::check_Ai(s, b, i);
    json r = json_io::condition(report);
    r["beta"] = json_io::divisor(s, b);
    r["certified"] = report.passed();
    r["warnings"] = proxy_warnings(report);
    return r;
  });
}

dpz_status dpz_check_p(const dpz_surface* surface, const char* beta, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(beta, "beta");
  return produce(out, [&] {
    const auto& s = surface->surface;
    const DivisorClass b = parse(surface, beta);
    const auto report = dpz::positivity::check_P(s, b);
    json r = json_io::condition(report);
    r["beta"] = json_io::divisor(s, b);
    r["certified"] = report.passed();
    r["warnings"] = proxy_warnings(report);
    return r;
  });
}

dpz_status dpz_min_n(const dpz_surface* surface, const char* beta0, int i, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(beta0, "beta0");
  return produce(out, [&] {
    const auto& s = surface->surface;
    const DivisorClass b = parse(surface, beta0);
    const std::int64_t n = dpz::positivity::min_n_for_Ai(s, b, i);
    return json{{"beta0", json_io::divisor(s, b)}, {"i", i}, {"n", n}, {"beta", json_io::divisor(s, n * b)}};
  });
}

dpz_status dpz_betti(const dpz_surface* surface, int m, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  return produce(out, [&] { return json_io::betti_table(dpz::hilbert::hilb_betti_table(surface->surface, m)); });
}

dpz_status dpz_stable_betti(const dpz_surface* surface, int max_k, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  return produce(out,
                 [&] { return json_io::betti_table(dpz::hilbert::stable_betti_table(surface->surface, max_k)); });
}

dpz_status dpz_moduli_betti(const dpz_surface* surface, const char* beta, int64_t chi, int k, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(beta, "beta");
  return produce(out, [&] {
    const auto& s = surface->surface;
    const DivisorClass b = parse(surface, beta);
    const auto m = dpz::hilbert::moduli_ih_betti(s, b, chi, k);
    json r = json_io::moduli_betti(m);
    r["beta"] = json_io::divisor(s, b);
    r["chi"] = chi;
    r["k"] = k;
    json warnings = json::array();
    if (!m.certified) warnings.push_back("value is the stable Betti number; the positivity hypotheses do not hold");
    r["warnings"] = warnings;
    return r;
  });
}

dpz_status dpz_moduli_dim(const dpz_surface* surface, const char* beta, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(beta, "beta");
  return produce(out, [&] {
    const DivisorClass b = parse(surface, beta);
    return json{{"beta", json_io::divisor(surface->surface, b)},
                {"dimension", dpz::hilbert::moduli_dimension(surface->surface, b)}};
  });
}

dpz_status dpz_jac_degree(const dpz_surface* surface, const char* beta, int64_t chi, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(beta, "beta");
  return produce(out, [&] {
    const DivisorClass b = parse(surface, beta);
    return json{{"beta", json_io::divisor(surface->surface, b)},
                {"chi", chi},
                {"degree", dpz::hilbert::jacobian_degree(surface->surface, b, chi)}};
  });
}

dpz_status dpz_picard_bound(const dpz_surface* surface, const char* beta, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  DPZ_REQUIRE(beta, "beta");
  return produce(out, [&] {
    const auto& s = surface->surface;
    const DivisorClass b = parse(surface, beta);
    json r = json_io::picard_bound(dpz::picard::picard_lower_bound(s, b));
    r["beta"] = json_io::divisor(s, b);
    r["test_matrix"] = b.is_zero() ? json(nullptr) : json_io::test_matrix(s, dpz::picard::build_test_matrix(s, b));
    return r;
  });
}

dpz_status dpz_bps_series(int max_total, int degree, dpz_result** out) {
  return produce(out, [&] {
    const auto table =
        dpz::bps::refined_bps_table(max_total, degree > 0 ? std::optional<int>(degree) : std::nullopt);
    json r = json_io::bps_table(table);
    r["max_total"] = max_total;
    r["degree"] = degree > 0 ? json(degree) : json(nullptr);
    json warnings = json::array({"refined BPS numbers come from a conjectural product formula for local P2"});
    if (!table.outside_range().empty()) warnings.push_back("some entries lie outside the conjectured range i+j <= 2d-4");
    r["warnings"] = warnings;
    return r;
  });
}

dpz_status dpz_bps_low_degree(const dpz_surface* surface, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  return produce(out, [&] { return json_io::bps_table(dpz::bps::bps_low_degree(surface->surface)); });
}

dpz_status dpz_taut_count(const dpz_surface* surface, int k, dpz_result** out) {
  DPZ_REQUIRE(surface, "surface");
  return produce(out, [&] {
    const auto& s = surface->surface;
    return json{{"k", k},
                {"count", dpz::bps::taut_monomial_count(s, k)},
                {"generators", json_io::taut_generators(dpz::bps::taut_generator_degrees(s, std::max(k, 0)))}};
  });
}

dpz_status dpz_gap(int64_t chi_O, int64_t q, int64_t K2, int64_t n, dpz_result** out) {
  return produce(out, [&] {
    const auto g = dpz::hilbert::general_type_gap(chi_O, q, K2, n);
    json r = json_io::gap(g);
    r["certified"] = g.reducibility_certified;
    return r;
  });
}

const char* dpz_result_json(const dpz_result* result) { return result ? result->text.c_str() : nullptr; }

int dpz_result_certified(const dpz_result* result) {
  if (!result) return -1;
  auto it = result->payload.find("certified");
  if (it == result->payload.end() || !it->is_boolean()) return -1;
  return it->get<bool>() ? 1 : 0;
}

void dpz_result_free(dpz_result* result) { delete result; }

}  // extern "C"
