// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#include "dpz/json_io.hpp"

namespace dpz::json_io {
namespace {

template <typename T>
json optional_value(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json optional_rational(const std::optional<Rational>& v) { return v ? rational(*v) : json(nullptr); }

json polynomial_matrix(const PolynomialMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json out = json::array();
    for (const auto& p : row) out.push_back(p.to_string());
    rows.push_back(out);
  }
  return rows;
}

const char* kind_name(BettiTable::Kind k) {
  switch (k) {
    case BettiTable::Kind::Hilbert: return "hilbert";
    case BettiTable::Kind::Stable: return "stable";
    case BettiTable::Kind::Moduli: return "moduli";
  }
  return "";
}

}  // namespace

json rational(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(r.get_str());
}

json divisor(const DelPezzoSurface& s, const DivisorClass& d) {
  return json{{"coords", d.coords()}, {"class", pretty(s, d)}};
}

json surface_info(const DelPezzoSurface& s) {
  const DivisorClass k = s.canonical();
  json gram = json::array();
  for (int i = 0; i < s.picard_rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < s.picard_rank(); ++j) row.push_back(s.gram(i, j));
    gram.push_back(row);
  }
  const auto b = s.betti();
  return json{{"surface", s.token()},
              {"picard_rank", s.picard_rank()},
              {"gram", gram},
              {"canonical", divisor(s, k)},
              {"K2", lattice::self_intersection(s, k)},
              {"betti", {b[0], b[1], b[2]}},
              {"minus_one_curves", lattice::minus_one_curves(s).size()},
              {"rulings", lattice::ruling_classes(s).size()},
              {"effective_cone_generators", lattice::effective_cone_generators(s).size()}};
}

json codim(const DelPezzoSurface& s, const CodimReport& r, bool with_witness) {
  json out{{"beta", divisor(s, r.beta)},
           {"linear_system_dim", r.linear_system_dim},
           {"exact_codim", r.exact_codim},
           {"locus_empty", r.locus_empty},
           {"split_codim", optional_value(r.split_codim)},
           {"exceptional_codim", optional_value(r.exceptional_codim)},
           {"bounds",
            {{"z1", optional_rational(r.bound_z1)},
             {"z2", optional_rational(r.bound_z2)},
             {"z3", optional_rational(r.bound_z3)}}}};
  if (with_witness) {
    if (!r.witness) {
      out["witness"] = nullptr;
    } else {
      const Stratum& w = *r.witness;
      json j{{"dimension", w.dimension}};
      if (w.kind == Stratum::Kind::Split) {
        j["kind"] = "split";
        j["parts"] = {divisor(s, w.first), divisor(s, w.second)};
      } else {
        j["kind"] = "exceptional";
        j["residual"] = divisor(s, w.first);
        json curves = json::array();
        for (const auto& [c, n] : w.exceptional) curves.push_back({{"curve", divisor(s, c)}, {"multiplicity", n}});
        j["curves"] = curves;
      }
      out["witness"] = j;
    }
  }
  return out;
}

json condition(const ConditionReport& r) {
  json clauses = json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back({{"name", c.name}, {"passed", c.passed}, {"evidence", c.evidence}, {"proxy", c.proxy}});
  }
  const Clause* f = r.first_failure();
  return json{{"condition", r.name()},
              {"passed", r.passed()},
              {"clauses", clauses},
              {"first_failure", f ? json(f->name) : json(nullptr)}};
}

json very_ample(const DelPezzoSurface& s, const VeryAmpleResult& r) {
  return json{{"k", r.k},
              {"very_ample", r.very_ample},
              {"nef", r.nef},
              {"binding_degree", r.binding_degree},
              {"binding_class", r.binding_class ? divisor(s, *r.binding_class) : json(nullptr)}};
}

json betti_table(const BettiTable& t) {
  json context{{"surface", t.surface}, {"kind", kind_name(t.kind)}};
  if (t.kind == BettiTable::Kind::Hilbert) context["m"] = t.m;
  if (t.kind == BettiTable::Kind::Moduli) {
    context["beta"] = t.beta;
    context["chi"] = t.chi;
  }
  json betti = json::object();
  for (const auto& [k, v] : t.entries) betti[std::to_string(k)] = v;
  return json{{"context", context}, {"betti", betti}};
}

json moduli_betti(const ModuliBetti& m) {
  return json{{"value", m.value},
              {"certified", m.certified},
              {"certified_by", m.certified ? json(m.certified_by) : json(nullptr)},
              {"strict", condition(m.strict)},
              {"relaxed", condition(m.relaxed)}};
}

json gap(const GapReport& g) {
  return json{{"chi_O", g.chi_O},
              {"q", g.q},
              {"K2", g.K2},
              {"n", g.n},
              {"dim_canonical_system", g.dim_canonical_system},
              {"beta_squared", g.beta_squared},
              {"fiber_lower_bound", g.fiber_lower_bound},
              {"smooth_locus_dim", g.smooth_locus_dim},
              {"singular_locus_lower_bound", g.singular_locus_lower_bound},
              {"gap", g.gap},
              {"reducibility_certified", g.reducibility_certified}};
}

json test_matrix(const DelPezzoSurface& s, const TestMatrixReport& r) {
  json basis = json::array();
  for (const auto& l : r.basis) basis.push_back(divisor(s, l));
  json d = json::array();
  for (const auto& c : r.d_coeffs) d.push_back(rational(c));
  return json{{"basis", basis},
              {"reordered", r.reordered},
              {"d_coeffs", d},
              {"arithmetic_genus", r.arithmetic_genus},
              {"gram_determinant", r.gram_determinant},
              {"matrix", polynomial_matrix(r.matrix)},
              {"det_lhs", r.det_lhs.to_string()},
              {"det_rhs", r.det_rhs.to_string()},
              {"sign", r.sign},
              {"identity_holds", r.identity_holds},
              {"table_matrix", polynomial_matrix(r.table_matrix)},
              {"table_det", r.table_det.to_string()},
              {"table_identity_holds", r.table_identity_holds},
              {"condition_p", condition(r.condition_p)},
              {"certified", r.certified}};
}

json picard_bound(const PicardBound& b) {
  return json{{"bound", b.bound}, {"certified", b.certified}, {"condition_p", condition(b.condition_p)}};
}

json bps_table(const BpsTable& t) {
  json entries = json::array();
  for (const auto& [ij, n] : t.entries) entries.push_back({ij.first, ij.second, n});
  json outside = json::array();
  for (const auto& [i, j] : t.outside_range()) outside.push_back({i, j});
  return json{{"entries", entries}, {"valid_total", optional_value(t.valid_total)}, {"outside_range", outside}};
}

json taut_generators(const std::vector<TautGenerator>& gens) {
  json out = json::array();
  for (const auto& g : gens) out.push_back({{"name", g.name}, {"degree", g.degree}});
  return out;
}

}  // namespace dpz::json_io
